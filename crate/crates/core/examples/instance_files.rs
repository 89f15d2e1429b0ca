//! Reading, validating and writing instance files, then a full report.
//!
//! `cargo run --example instance_files -- path/to/instance.json`

use combstab::instance::{emit_instance, parse_instance, parse_instance_str};
use combstab::report::{run_analyze, AnalyzeOptions};

const INLINE: &str = r#"{
  "n": 3,
  "genera": [1, 0, 2],
  "rank": 2,
  "degrees": [2, 3, 4],
  "l": 4,
  "section_dims": [3, 3, 2],
  "intersection_dims": [1, 1]
}"#;

fn main() -> combstab::Result<()> {
    let instance = match std::env::args().nth(1) {
        Some(path) => parse_instance(path)?,
        None => parse_instance_str(INLINE)?,
    };
    println!("{}", emit_instance(&instance));

    let options = AnalyzeOptions {
        oracle_denominator: Some(12),
        certificate: true,
    };
    let report = run_analyze(&instance, &options)?;
    print!("{}", report.render_table());

    match parse_instance_str(
        r#"{"n": 2, "genera": [1, 1], "rank": 2, "degrees": [1, 1], "l": 2, "kernel_ranks": [0, 0]}"#,
    ) {
        Err(e) => println!("\nrejected as expected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
