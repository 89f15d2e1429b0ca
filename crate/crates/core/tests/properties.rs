//! Property tests tying the decision procedure to independent checks.

mod common;

use combstab::catalog::build_catalog;
use combstab::feasibility::{
    build_constraint_system, decide, grid_oracle, strong_instability_report, FeasibilityResult,
    GridResult, StrongVerdict,
};
use combstab::numerics::syzygy_multisheaf;
use combstab::polarization::{slope, verdict_at};
use combstab::rational::frac;
use combstab::{CombCurve, Destabilizer, GeneratedPairData, Polarization, Rational};
use proptest::prelude::*;

fn instance(max_n: usize, theorem: bool) -> impl Strategy<Value = (CombCurve, GeneratedPairData)> {
    (2..=max_n, 1i64..=3, 1i64..=5).prop_flat_map(move |(n, r, excess)| {
        let t_low = if theorem { 1 } else { 0 };
        let threshold = (n as i64 - 1) * excess;
        let d_range = if theorem {
            (threshold + 1)..=(threshold + 3 * excess + 5)
        } else {
            0..=((n as i64 + 1) * excess)
        };
        (
            prop::collection::vec(0u32..=5, n),
            prop::collection::vec(t_low..=excess, n),
            d_range,
            prop::collection::vec(0usize..n, 0..64),
        )
            .prop_map(move |(genera, t, d, spread)| {
                // `spread` nudges the split; the remainder lands on the base
                let mut degrees = vec![0i64; n];
                let mut left = d;
                for slot in spread {
                    if left == 0 {
                        break;
                    }
                    degrees[slot] += 1;
                    left -= 1;
                }
                degrees[n - 1] += left;
                (
                    CombCurve::new(genera).unwrap(),
                    GeneratedPairData::from_kernel_ranks(r, degrees, r + excess, &t).unwrap(),
                )
            })
    })
}

fn weights(n: usize) -> impl Strategy<Value = Polarization> {
    prop::collection::vec(1i64..=500, n).prop_map(|parts| {
        let total: i64 = parts.iter().sum();
        Polarization::new(parts.iter().map(|&a| frac(a, total)).collect()).unwrap()
    })
}

/// Direct slope comparison against every catalog entry, independent of the
/// linear-constraint encoding.
fn destabilized(
    curve: &CombCurve,
    pair: &GeneratedPairData,
    catalog: &[Destabilizer],
    w: &Polarization,
) -> bool {
    let m = syzygy_multisheaf(curve, pair).unwrap().sheaf;
    let mu: Rational = slope(&m, w).unwrap();
    catalog.iter().any(|f| slope(&f.sheaf, w).unwrap() > mu)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn constraints_encode_slope_tests(
        (curve, pair, w) in instance(6, false).prop_flat_map(|(c, p)| {
            let n = c.n();
            (Just(c), Just(p), weights(n))
        })
    ) {
        let catalog = build_catalog(&curve, &pair).unwrap();
        let system = build_constraint_system(&curve, &pair, &catalog).unwrap();
        prop_assert_eq!(system.is_satisfied_by(&w), !destabilized(&curve, &pair, &catalog, &w));
    }

    #[test]
    fn witnesses_are_sound((curve, pair) in instance(6, false)) {
        let catalog = build_catalog(&curve, &pair).unwrap();
        let system = build_constraint_system(&curve, &pair, &catalog).unwrap();
        if let FeasibilityResult::Feasible(w) = decide(&system).unwrap() {
            prop_assert!(!destabilized(&curve, &pair, &catalog, &w));
            prop_assert!(!verdict_at(&w, &curve, &pair, &catalog).unwrap().is_unstable());
        }
    }

    #[test]
    fn certificates_are_sound((curve, pair) in instance(6, false)) {
        let catalog = build_catalog(&curve, &pair).unwrap();
        let system = build_constraint_system(&curve, &pair, &catalog).unwrap();
        if let FeasibilityResult::Infeasible(cert) = decide(&system).unwrap() {
            let contradiction = cert.verify(&system).unwrap();
            prop_assert!(
                contradiction.lhs > contradiction.rhs
                    || (contradiction.lhs == contradiction.rhs && contradiction.strict)
            );
            prop_assert!(cert.terms.iter().all(|t| t.multiplier > frac(0, 1)));
        }
    }

    #[test]
    fn grid_agrees_with_decision((curve, pair) in instance(4, false), denominator in 4usize..=24) {
        let catalog = build_catalog(&curve, &pair).unwrap();
        let system = build_constraint_system(&curve, &pair, &catalog).unwrap();
        let decided = decide(&system).unwrap();
        match grid_oracle(&curve, &pair, &catalog, denominator).unwrap() {
            GridResult::FoundWitness(w) => {
                prop_assert!(decided.is_feasible());
                prop_assert!(!destabilized(&curve, &pair, &catalog, &w));
            }
            GridResult::NoneFound => {}
        }
    }

    #[test]
    fn theorem_instances_are_strongly_unstable((curve, pair) in instance(6, true)) {
        let report = strong_instability_report(&curve, &pair).unwrap();
        prop_assert!(report.hypotheses.hold());
        prop_assert!(matches!(report.verdict, StrongVerdict::StronglyUnstable(_)));
    }

    #[test]
    fn instability_is_monotone_in_degree((curve, pair) in instance(5, false), slot in 0usize..5, extra in 1i64..=6) {
        let catalog = build_catalog(&curve, &pair).unwrap();
        let system = build_constraint_system(&curve, &pair, &catalog).unwrap();
        if !decide(&system).unwrap().is_feasible() {
            let mut degrees = pair.degrees().to_vec();
            degrees[slot % curve.n()] += extra;
            let bigger = GeneratedPairData::new(pair.rank(), degrees, pair.l(), pair.section_dims().to_vec()).unwrap();
            let catalog = build_catalog(&curve, &bigger).unwrap();
            let system = build_constraint_system(&curve, &bigger, &catalog).unwrap();
            prop_assert!(!decide(&system).unwrap().is_feasible());
        }
    }
}
