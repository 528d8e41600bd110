use serde::{Deserialize, Serialize};

use super::InflectionPoint;
use crate::corpus::Document;

pub const DEFAULT_CONTEXT: usize = 10;

/// Sentences around an inflection point, for close reading.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ContextWindow {
    pub center_sentence: usize,
    pub center_text: String,
    pub before: Vec<String>,
    pub after: Vec<String>,
}

/// Up to `k` sentences on each side of the point's sentence, truncated at
/// the document edges.
pub fn extract_context(doc: &Document, point: &InflectionPoint, k: usize) -> ContextWindow {
    context_for_sentence(doc, point.sentence_index, k)
}

pub fn context_for_sentence(doc: &Document, center: usize, k: usize) -> ContextWindow {
    let n = doc.len();
    let center = center.min(n.saturating_sub(1));
    let text = |i: usize| doc.sentences[i].text.clone();
    ContextWindow {
        center_sentence: center,
        center_text: if n == 0 { String::new() } else { text(center) },
        before: (center.saturating_sub(k)..center).map(text).collect(),
        after: (center + 1..n.min(center + 1 + k)).map(text).collect(),
    }
}
