//! A polarization where every catalog slope ties with mu(M).

use combstab::catalog::build_catalog;
use combstab::feasibility::{build_constraint_system, decide, FeasibilityResult};
use combstab::polarization::StabilityContext;
use combstab::rational::format;
use combstab::{CombCurve, GeneratedPairData};

fn main() -> combstab::Result<()> {
    let curve = CombCurve::new(vec![1, 1])?;
    let pair = GeneratedPairData::from_kernel_ranks(1, vec![1, 1], 3, &[1, 1])?;
    let catalog = build_catalog(&curve, &pair)?;
    let system = build_constraint_system(&curve, &pair, &catalog)?;

    let FeasibilityResult::Feasible(w) = decide(&system)? else {
        unreachable!("this instance sits exactly on the boundary");
    };
    let context = StabilityContext::new(&curve, &pair, &catalog)?;
    println!("witness {w}, mu(M) = {}", format(context.syzygy_slope()));
    for f in &catalog {
        println!("  mu_w({f}) = {}", format(&combstab::slope(&f.sheaf, &w)?));
    }
    println!("verdict: {}", context.verdict_at(&w)?.name());
    Ok(())
}
