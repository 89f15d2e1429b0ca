//! Brute-force search over polarizations with a fixed denominator,
//! compared with the exact decision.
//!
//! `cargo run --release --example grid_oracle -- 64`

use combstab::catalog::build_catalog;
use combstab::feasibility::{build_constraint_system, decide, grid_oracle, GridResult};
use combstab::{CombCurve, GeneratedPairData};

fn main() -> combstab::Result<()> {
    let denominator: usize = std::env::args()
        .nth(1)
        .map(|a| a.parse().expect("denominator must be a positive integer"))
        .unwrap_or(32);

    let cases = [
        (vec![2, 2, 2], vec![1, 1, 0], 3, vec![1, 1, 1]),
        (vec![1, 0, 3], vec![2, 2, 1], 3, vec![1, 2, 1]),
        (vec![0, 0, 0], vec![3, 3, 3], 2, vec![1, 1, 1]),
    ];
    for (genera, degrees, l, t) in cases {
        let curve = CombCurve::new(genera)?;
        let pair = GeneratedPairData::from_kernel_ranks(1, degrees, l, &t)?;
        let catalog = build_catalog(&curve, &pair)?;
        let exact = decide(&build_constraint_system(&curve, &pair, &catalog)?)?;
        let grid = match grid_oracle(&curve, &pair, &catalog, denominator)? {
            GridResult::FoundWitness(w) => format!("first grid point {w}"),
            GridResult::NoneFound => "no grid point".to_string(),
        };
        println!(
            "genera {:?}, d = {}: exact {}, D = {denominator}: {grid}",
            curve.genera(),
            pair.total_degree(),
            if exact.is_feasible() {
                "feasible"
            } else {
                "infeasible"
            },
        );
    }
    Ok(())
}
