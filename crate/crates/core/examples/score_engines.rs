//! Score sentences with the plain lexical engine and the rule-augmented one,
//! and compare their distributions.

use arclens::arcs::distribution_stats;
use arclens::engines::{score_rule_augmented, sentence_scores};
use arclens::corpus::tokenize;
use arclens::{Document, Lexicon, Result, RuleConfig};

const SAMPLE: &str = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/data/sample.txt"));

pub fn run_example() -> Result<Vec<(String, f64)>> {
    let lexicon = Lexicon::general();
    let rules = RuleConfig::default();
    println!("lexicon {} with {} entries", lexicon.name, lexicon.size());

    let mut shown = Vec::new();
    for text in ["The night was good.", "The night was not good.", "The night was very good.", "The night was GOOD!!!"] {
        let score = score_rule_augmented(&tokenize(text), &lexicon, &rules);
        println!("{text:<28} rules = {score:+.4}");
        shown.push((text.to_owned(), score));
    }

    let doc = Document::ingest("sample", SAMPLE.as_bytes(), 0)?;
    let rows = sentence_scores(&doc, &lexicon, &rules);
    let lexical: Vec<f64> = rows.iter().map(|r| r.lexical).collect();
    let raw: Vec<f64> = rows.iter().map(|r| r.rules_raw).collect();
    for (name, values) in [("lexical", &lexical), ("rules", &raw)] {
        let s = distribution_stats(values)?;
        let skew = s.skewness.map_or("undefined".to_owned(), |v| format!("{v:.3}"));
        println!("{name:<8} mean {:+.3}  variance {:.3}  skewness {skew}", s.mean, s.variance);
    }
    let changed = lexical.iter().zip(&raw).filter(|(a, b)| a != b).count();
    println!("{changed} of {} sentences scored differently by the rules", rows.len());
    Ok(shown)
}

fn main() -> Result<()> {
    run_example()?;
    Ok(())
}
