//! Genus, Euler characteristics and the syzygy bundle's numerical data.
//!
//! `cargo run --example invariants`

use combstab::numerics::{chi_bundle, syzygy_multisheaf};
use combstab::{CombCurve, GeneratedPairData};

fn main() -> combstab::Result<()> {
    let curve = CombCurve::new(vec![2, 1, 3])?;
    let pair = GeneratedPairData::from_kernel_ranks(2, vec![4, 3, 5], 5, &[1, 2, 3])?;

    println!(
        "comb with {} components, genera {:?}",
        curve.n(),
        curve.genera()
    );
    for i in 1..curve.n() {
        println!("  node p_{i} joins C_{i} to the base");
    }
    println!(
        "p_a = {}, chi(O_C) = {}",
        curve.arithmetic_genus(),
        curve.chi_structure_sheaf()
    );
    println!(
        "rank r = {}, degree d = {}, l = {}",
        pair.rank(),
        pair.total_degree(),
        pair.l()
    );
    println!("chi(E) = {}", chi_bundle(&curve, &pair)?);

    let m = syzygy_multisheaf(&curve, &pair)?;
    println!(
        "M has rank {} and chi(M) = {} ({:?})",
        pair.syzygy_rank(),
        m.sheaf.chi(),
        m.sign
    );
    Ok(())
}
