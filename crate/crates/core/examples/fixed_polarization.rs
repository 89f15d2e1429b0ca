//! Slope comparisons at one chosen polarization.

use combstab::catalog::build_catalog;
use combstab::numerics::syzygy_multisheaf;
use combstab::polarization::{compare_slopes, slope, StabilityContext};
use combstab::rational::{format, frac};
use combstab::{CombCurve, GeneratedPairData, Polarization};

fn main() -> combstab::Result<()> {
    let curve = CombCurve::new(vec![1, 1, 1])?;
    let pair = GeneratedPairData::from_kernel_ranks(1, vec![1, 1, 1], 3, &[1, 1, 1])?;
    let catalog = build_catalog(&curve, &pair)?;
    let m = syzygy_multisheaf(&curve, &pair)?.sheaf;

    for w in [
        Polarization::uniform(3)?,
        Polarization::new(vec![frac(1, 2), frac(1, 4), frac(1, 4)])?,
        Polarization::new(vec![frac(1, 10), frac(1, 10), frac(4, 5)])?,
    ] {
        println!("w = {w}");
        for f in &catalog {
            let cmp = compare_slopes(&f.sheaf, &m, &w)?;
            println!(
                "  mu({f}) = {}  vs  mu(M) = {}  -> {:?}",
                format(&slope(&f.sheaf, &w)?),
                format(&slope(&m, &w)?),
                cmp.relation
            );
        }
        let verdict = StabilityContext::new(&curve, &pair, &catalog)?.verdict_at(&w)?;
        println!("  verdict: {}", verdict.name());
    }
    Ok(())
}
