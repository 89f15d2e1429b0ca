//! The destabilizer catalog and per-component restriction checks.

use combstab::catalog::{build_catalog, restriction_slope_check};
use combstab::rational::format;
use combstab::{CombCurve, GeneratedPairData};

fn main() -> combstab::Result<()> {
    let curve = CombCurve::new(vec![1, 0, 2])?;
    let pair = GeneratedPairData::from_kernel_ranks(1, vec![3, 0, 2], 4, &[2, 0, 1])?;

    for f in build_catalog(&curve, &pair)? {
        println!(
            "{:<32} multirank {:?}  chi {}",
            f.to_string(),
            f.sheaf.multirank(),
            f.sheaf.chi()
        );
    }

    println!();
    for i in 1..=curve.n() {
        let check = restriction_slope_check(&curve, &pair, i)?;
        println!(
            "C_{i}: t = {}, d = {}, mu(M|C_{i}) = {}, {:?}",
            check.kernel_rank,
            check.degree,
            format(&check.restriction_slope),
            check.verdict
        );
    }
    Ok(())
}
