//! Run the whole pipeline and write every output file.
//!
//! ```text
//! cargo run --example full_run -- out/
//! ```

use std::path::PathBuf;

use arclens::report::{export_run, run, ExportedFiles, RunConfig};
use arclens::Result;

const SAMPLE: &str = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/data/sample.txt"));

pub fn run_example(out_dir: &std::path::Path) -> Result<ExportedFiles> {
    let config = RunConfig {
        source_id: "sample.txt".into(),
        ..RunConfig::default()
    };
    let report = run(SAMPLE.as_bytes(), &config)?;
    for a in &report.arcs {
        let labels: Vec<String> = a.points.iter().map(|p| format!("{}@{:.0}%", p.label, p.percent)).collect();
        println!("{:<16} {}", a.label, labels.join(" "));
    }
    for r in &report.agreement {
        let r_str = r.pearson_r.map_or("undefined".to_owned(), |v| format!("{v:.3}"));
        println!("{} vs {}: r = {r_str}, {} matched extrema", r.arc_ids.0, r.arc_ids.1, r.extrema_matches);
    }
    let files = export_run(&report, out_dir)?;
    println!("wrote {} and {} arc files", files.report.display(), files.arcs.len());
    Ok(files)
}

fn main() -> Result<()> {
    let dir = std::env::args().nth(1).map_or_else(|| PathBuf::from("arclens-out"), PathBuf::from);
    run_example(&dir)?;
    Ok(())
}
