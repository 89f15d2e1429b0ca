//! Deciding strong instability and reading the certificate.

use combstab::feasibility::{strong_instability_report, StrongVerdict};
use combstab::rational::format;
use combstab::{CombCurve, GeneratedPairData};

fn main() -> combstab::Result<()> {
    let curve = CombCurve::new(vec![1, 2, 0])?;
    let pair = GeneratedPairData::from_kernel_ranks(2, vec![3, 2, 4], 4, &[1, 2, 2])?;
    let report = strong_instability_report(&curve, &pair)?;

    println!(
        "d/(l-r) = {} against n-1 = {}; all kernels non-zero: {}",
        format(&report.hypotheses.ratio),
        report.hypotheses.threshold,
        report.hypotheses.kernels_nonzero
    );
    println!("constraints:");
    for (k, c) in report.system.constraints.iter().enumerate() {
        println!("  [{k}] {:<4} {c}", c.label());
    }

    match report.verdict {
        StrongVerdict::StronglyUnstable(cert) => {
            let contradiction = cert.verify(&report.system).expect("certificate checks out");
            println!(
                "strongly unstable: {} => {contradiction}",
                cert.combination()
            );
        }
        StrongVerdict::NotDisprovedByCatalog(w) => println!("catalog passes at {w}"),
    }
    Ok(())
}
