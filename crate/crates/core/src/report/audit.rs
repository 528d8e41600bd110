use serde::{Deserialize, Serialize};

use crate::corpus::Document;
use crate::error::{Error, Result};

pub const DEFAULT_THRESHOLD: usize = 500;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LongSentence {
    pub index: usize,
    pub char_length: usize,
    pub text: String,
}

/// Candidate list of sentences long enough that a missed boundary could
/// distort an arc. Splitting errors are judged by a human reviewer.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditReport {
    pub total_sentences: usize,
    pub threshold_chars: usize,
    pub long_count: usize,
    pub long_sentences: Vec<LongSentence>,
    /// Filled in after manual review.
    pub splitting_errors: Option<usize>,
    /// `100 * splitting_errors / long_count`, once reviewed.
    pub upper_bound_percent_error: Option<f64>,
    pub upper_bound_error_note: String,
}

const NOTE: &str = "Review each listed sentence for segmentation errors and record the count with \
                    splitting_errors; upper_bound_percent_error is errors / long_count. Errors in \
                    shorter sentences are not counted.";

pub fn audit_long_sentences(doc: &Document, threshold: usize) -> Result<AuditReport> {
    if threshold == 0 {
        return Err(Error::param("audit threshold must be > 0"));
    }
    let long_sentences: Vec<LongSentence> = doc
        .sentences
        .iter()
        .filter(|s| s.char_length > threshold)
        .map(|s| LongSentence {
            index: s.index,
            char_length: s.char_length,
            text: s.text.clone(),
        })
        .collect();
    Ok(AuditReport {
        total_sentences: doc.len(),
        threshold_chars: threshold,
        long_count: long_sentences.len(),
        long_sentences,
        splitting_errors: None,
        upper_bound_percent_error: None,
        upper_bound_error_note: NOTE.to_owned(),
    })
}

impl AuditReport {
    /// Records the reviewer's error count.
    pub fn record_review(&mut self, splitting_errors: usize) -> Result<()> {
        if splitting_errors > self.long_count {
            return Err(Error::param(format!(
                "{splitting_errors} errors reported among {} long sentences",
                self.long_count
            )));
        }
        self.splitting_errors = Some(splitting_errors);
        self.upper_bound_percent_error =
            (self.long_count > 0).then(|| 100.0 * splitting_errors as f64 / self.long_count as f64);
        Ok(())
    }

    /// The audit without sentence texts, for embedding in run reports.
    pub fn summary(&self) -> AuditReport {
        AuditReport {
            long_sentences: self
                .long_sentences
                .iter()
                .map(|s| LongSentence {
                    text: String::new(),
                    ..s.clone()
                })
                .collect(),
            ..self.clone()
        }
    }
}
