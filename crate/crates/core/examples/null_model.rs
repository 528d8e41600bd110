//! Compare an arc against arcs of word salads: the same words shuffled
//! across the whole text.

use arclens::arcs::{document_lexical_total, null_band, word_salad, NullBand, Pipeline};
use arclens::{Document, EngineId, Lexicon, Result, RuleConfig, SmootherParams};

const SAMPLE: &str = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/data/sample.txt"));

pub fn run_example() -> Result<NullBand> {
    let doc = Document::ingest("sample", SAMPLE.as_bytes(), 0)?;
    let lexicon = Lexicon::general();
    let rules = RuleConfig::default();

    let salad = word_salad(&doc, 42)?;
    println!("salad sentence: {}", salad.sentences[3].text);
    println!(
        "document total: original {:+.3}, salad {:+.3}",
        document_lexical_total(&doc, &lexicon),
        document_lexical_total(&salad, &lexicon)
    );

    let pipeline = Pipeline {
        lexicon: &lexicon,
        engine: EngineId::Lexical,
        rules: &rules,
        smoother: SmootherParams::Rolling { window_pct: 0.10 },
    };
    let band = null_band(&doc, &pipeline, 10, 42, 100)?;
    println!(
        "{} salads: original arc lies outside the band at {:.0}% of grid points",
        band.n_trials,
        100.0 * band.separation
    );
    Ok(band)
}

fn main() -> Result<()> {
    run_example()?;
    Ok(())
}
