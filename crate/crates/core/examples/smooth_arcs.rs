//! Smooth one sentiment series three ways: rolling mean, DCT low-pass and
//! LOESS.

use arclens::engines::score_document;
use arclens::{Arc, Document, EngineId, Lexicon, Result, RuleConfig, SmootherParams};

const SAMPLE: &str = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/data/sample.txt"));

pub fn run_example() -> Result<Vec<Arc>> {
    let doc = Document::ingest("sample", SAMPLE.as_bytes(), 0)?;
    let series = score_document(&doc, &Lexicon::general(), EngineId::Lexical, &RuleConfig::default())?;
    let smoothers = [
        SmootherParams::Rolling { window_pct: 0.10 },
        SmootherParams::Dct { low_pass: 5, scale_range: true },
        SmootherParams::Loess { span: 0.5, degree: 1 },
    ];
    let mut arcs = Vec::new();
    for params in smoothers {
        let arc = params.apply(&series.values)?;
        let samples: Vec<String> = [0.1f64, 0.3, 0.5, 0.7, 0.9]
            .iter()
            .map(|&p| {
                let p = p.clamp(arc.valid_start, arc.valid_end);
                format!("{:+.2}", arc.value_at(p))
            })
            .collect();
        println!(
            "{:<16} {} points, valid {:.3}..{:.3}, at 10/30/50/70/90%: {}",
            arc.label(),
            arc.len(),
            arc.valid_start,
            arc.valid_end,
            samples.join(" ")
        );
        arcs.push(arc);
    }
    Ok(arcs)
}

fn main() -> Result<()> {
    run_example()?;
    Ok(())
}
