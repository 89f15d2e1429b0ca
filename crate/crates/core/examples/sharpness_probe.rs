//! How the verdict behaves at and below the degree threshold, and when a
//! kernel vanishes. Nothing here is asserted; the table is the output.

use combstab::feasibility::{strong_instability_report, StrongVerdict};
use combstab::{CombCurve, GeneratedPairData};

fn main() -> combstab::Result<()> {
    println!(
        "{:<14} {:<6} {:<4} {:<12} verdict",
        "genera", "l-r", "d", "t"
    );
    for genera in [vec![0, 0, 0], vec![1, 1, 1], vec![3, 0, 2]] {
        let curve = CombCurve::new(genera.clone())?;
        let n = curve.n() as i64;
        for excess in [1, 2] {
            let threshold = (n - 1) * excess;
            for d in [threshold - 1, threshold, threshold + 1] {
                for t in [vec![excess; 3], vec![excess, 0, excess]] {
                    let degrees = vec![d / 3, d / 3, d - 2 * (d / 3)];
                    let pair = GeneratedPairData::from_kernel_ranks(1, degrees, 1 + excess, &t)?;
                    let verdict = match strong_instability_report(&curve, &pair)?.verdict {
                        StrongVerdict::StronglyUnstable(_) => "strongly unstable".to_string(),
                        StrongVerdict::NotDisprovedByCatalog(w) => format!("passes at {w}"),
                    };
                    println!(
                        "{:<14} {:<6} {:<4} {:<12} {verdict}",
                        format!("{genera:?}"),
                        excess,
                        d,
                        format!("{t:?}")
                    );
                }
            }
        }
    }
    Ok(())
}
