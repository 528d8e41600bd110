//! List sentences long enough to hide a missed boundary, then record a
//! reviewer's verdict.

use arclens::report::{audit_long_sentences, AuditReport};
use arclens::{Document, Result};

const SAMPLE: &str = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/data/sample.txt"));

pub fn run_example() -> Result<AuditReport> {
    let doc = Document::ingest("sample", SAMPLE.as_bytes(), 0)?;
    let mut audit = audit_long_sentences(&doc, 500)?;
    println!("{} of {} sentences exceed {} chars", audit.long_count, audit.total_sentences, audit.threshold_chars);
    for s in &audit.long_sentences {
        let preview: String = s.text.chars().take(70).collect();
        println!("  #{} ({} chars): {preview}...", s.index, s.char_length);
    }
    // the long sentence in the sample is a single run-on sentence
    audit.record_review(0)?;
    println!("upper bound percent error: {:?}", audit.upper_bound_percent_error);
    Ok(audit)
}

fn main() -> Result<()> {
    run_example()?;
    Ok(())
}
