//! Text ingestion: normalization, sentence segmentation and tokenization.
//!
//! All offsets are counted in Unicode scalar values (chars) of the
//! normalized text, so `char_length` matches what a reader would call the
//! length of a sentence.

mod split;
pub(crate) mod tokenize;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use split::{abbreviations, split_sentences};
pub use tokenize::{is_emoticon, tokenize, Token};

/// One sentence of a [`Document`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SentenceRecord {
    pub index: usize,
    pub start_char: usize,
    pub end_char: usize,
    pub char_length: usize,
    pub text: String,
    pub tokens: Vec<Token>,
}

/// Normalized text segmented into sentences. Immutable once built.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Document {
    pub source_id: String,
    pub raw_length: usize,
    pub sentences: Vec<SentenceRecord>,
}

impl Document {
    /// Segments already-normalized text.
    pub fn from_normalized(source_id: impl Into<String>, raw_length: usize, text: &str) -> Self {
        Document {
            source_id: source_id.into(),
            raw_length,
            sentences: split_sentences(text),
        }
    }

    /// Decodes, strips the first `strip_lines` lines, normalizes and segments.
    pub fn ingest(source_id: impl Into<String>, raw: &[u8], strip_lines: usize) -> Result<Self> {
        let text = decode(raw)?;
        let raw_length = text.chars().count();
        let normalized = normalize_text(&text);
        let body = skip_lines(&normalized, strip_lines);
        Ok(Self::from_normalized(source_id, raw_length, body))
    }

    pub fn len(&self) -> usize {
        self.sentences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sentences.is_empty()
    }

    pub fn token_count(&self) -> usize {
        self.sentences.iter().map(|s| s.tokens.len()).sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }
}

/// Strict UTF-8 decode; the error names the first invalid byte.
pub fn decode(raw: &[u8]) -> Result<String> {
    match std::str::from_utf8(raw) {
        Ok(s) => Ok(s.to_owned()),
        Err(e) => Err(Error::Ingest {
            offset: e.valid_up_to(),
        }),
    }
}

/// Decodes raw bytes and normalizes them in one step.
pub fn normalize_bytes(raw: &[u8]) -> Result<String> {
    decode(raw).map(|s| normalize_text(&s))
}

/// Straightens curly quotes, canonicalizes line endings to LF and drops a
/// leading byte-order mark. Everything else passes through untouched.
pub fn normalize_text(raw: &str) -> String {
    let raw = raw.strip_prefix('\u{feff}').unwrap_or(raw);
    let mut out = String::with_capacity(raw.len());
    let mut chars = raw.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '\u{201c}' | '\u{201d}' => out.push('"'),
            '\u{2018}' | '\u{2019}' => out.push('\''),
            '\r' => {
                if chars.peek() == Some(&'\n') {
                    chars.next();
                }
                out.push('\n');
            }
            c => out.push(c),
        }
    }
    out
}

fn skip_lines(text: &str, n: usize) -> &str {
    let mut rest = text;
    for _ in 0..n {
        match rest.find('\n') {
            Some(i) => rest = &rest[i + 1..],
            None => return "",
        }
    }
    rest
}
