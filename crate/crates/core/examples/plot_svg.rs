//! Render a rolling-mean arc over its null band as SVG.
//!
//! ```text
//! cargo run --example plot_svg > arc.svg
//! ```

use arclens::arcs::{default_min_prominence, find_extrema, null_band, Pipeline};
use arclens::report::{render_arc_svg, SvgOptions};
use arclens::{Document, EngineId, Lexicon, Result, RuleConfig, SmootherParams};

const SAMPLE: &str = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/data/sample.txt"));

pub fn run_example() -> Result<String> {
    let doc = Document::ingest("sample", SAMPLE.as_bytes(), 0)?;
    let lexicon = Lexicon::general();
    let rules = RuleConfig::default();
    let pipeline = Pipeline {
        lexicon: &lexicon,
        engine: EngineId::Lexical,
        rules: &rules,
        smoother: SmootherParams::Rolling { window_pct: 0.10 },
    };
    let arc = pipeline.arc(&doc)?;
    let extrema = find_extrema(&arc, default_min_prominence(&arc));
    let band = null_band(&doc, &pipeline, 10, 42, 100)?;
    let options = SvgOptions {
        title: Some("The Lamplighter of Harrow Quay".into()),
        ..SvgOptions::default()
    };
    render_arc_svg(&[arc], &[extrema], Some(&band), &options)
}

fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
