//! Find the peaks and valleys of an arc and print the sentences around each.

use arclens::arcs::{default_min_prominence, extract_context, find_extrema, Extrema};
use arclens::engines::score_document;
use arclens::{Document, EngineId, Lexicon, Result, RuleConfig, SmootherParams};

const SAMPLE: &str = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/data/sample.txt"));

pub fn run_example() -> Result<Extrema> {
    let doc = Document::ingest("sample", SAMPLE.as_bytes(), 0)?;
    let series = score_document(&doc, &Lexicon::general(), EngineId::Lexical, &RuleConfig::default())?;
    let arc = SmootherParams::Dct { low_pass: 5, scale_range: true }.apply(&series.values)?;
    let extrema = find_extrema(&arc, default_min_prominence(&arc));
    println!(
        "global max {:+.3} at {:.0}%, global min {:+.3} at {:.0}%",
        extrema.global_max.value,
        100.0 * extrema.global_max.position,
        extrema.global_min.value,
        100.0 * extrema.global_min.position
    );
    for p in &extrema.points {
        let ctx = extract_context(&doc, p, 1);
        println!("\n{} {:?} {:+.3} at {:.0}% (sentence {})", p.label, p.kind, p.value, 100.0 * p.position, p.sentence_index);
        for s in &ctx.before {
            println!("    {s}");
        }
        println!("  > {}", ctx.center_text);
        for s in &ctx.after {
            println!("    {s}");
        }
    }
    Ok(extrema)
}

fn main() -> Result<()> {
    run_example()?;
    Ok(())
}
