//! Normalize a text and split it into sentences.
//!
//! ```text
//! cargo run --example ingest_and_split [path/to/book.txt]
//! ```

use arclens::{Document, Result};

const SAMPLE: &str = include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/data/sample.txt"));

pub fn run_example(raw: &[u8]) -> Result<Document> {
    let doc = Document::ingest("sample", raw, 0)?;
    println!("{} sentences, {} tokens", doc.len(), doc.token_count());
    for s in doc.sentences.iter().take(5) {
        println!("[{:>3}] chars {}..{} ({} tokens): {}", s.index, s.start_char, s.end_char, s.tokens.len(), s.text);
    }
    let longest = doc.sentences.iter().max_by_key(|s| s.char_length).expect("non-empty");
    println!("longest sentence: #{} with {} chars", longest.index, longest.char_length);
    Ok(doc)
}

fn main() -> Result<()> {
    let raw = match std::env::args().nth(1) {
        Some(path) => std::fs::read(&path).map_err(|e| arclens::Error::io(path, e))?,
        None => SAMPLE.as_bytes().to_vec(),
    };
    run_example(&raw)?;
    Ok(())
}
