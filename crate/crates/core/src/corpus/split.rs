use std::collections::BTreeSet;
use std::sync::OnceLock;

use super::{tokenize, SentenceRecord};

const ABBREVIATIONS: &str = include_str!("../../data/abbreviations.txt");

/// The fixed abbreviation list, lowercase with the trailing dot.
pub fn abbreviations() -> &'static BTreeSet<String> {
    static LIST: OnceLock<BTreeSet<String>> = OnceLock::new();
    LIST.get_or_init(|| {
        ABBREVIATIONS
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(str::to_lowercase)
            .collect()
    })
}

fn is_terminal(c: char) -> bool {
    matches!(c, '.' | '!' | '?' | '\u{2026}')
}

fn is_closer(c: char) -> bool {
    matches!(c, '"' | '\'' | ')' | ']' | '\u{bb}')
}

fn is_opening_quote(c: char) -> bool {
    matches!(c, '"' | '\'')
}

/// Rule-based segmentation of normalized text.
///
/// A run of terminal punctuation (`. ! ?`), plus any closing quotes or
/// brackets, ends a sentence when it is followed by whitespace and then an
/// uppercase letter or an opening quote. Ellipses need an uppercase letter.
/// A single `.` after a listed abbreviation never ends a sentence. Dashes are
/// never boundaries.
pub fn split_sentences(text: &str) -> Vec<SentenceRecord> {
    let cs: Vec<char> = text.chars().collect();
    let n = cs.len();
    let mut spans = Vec::new();
    let mut start = 0;
    let mut i = 0;
    while i < n {
        if !is_terminal(cs[i]) {
            i += 1;
            continue;
        }
        let mut run_end = i;
        while run_end < n && is_terminal(cs[run_end]) {
            run_end += 1;
        }
        let mut end = run_end;
        while end < n && is_closer(cs[end]) {
            end += 1;
        }
        let boundary = if end == n {
            true
        } else if cs[end].is_whitespace() {
            let mut k = end;
            while k < n && cs[k].is_whitespace() {
                k += 1;
            }
            if k == n {
                true
            } else {
                let run = &cs[i..run_end];
                let next = cs[k];
                let ellipsis = run.contains(&'\u{2026}') || (run.len() >= 2 && run.iter().all(|&c| c == '.'));
                if ellipsis {
                    next.is_uppercase()
                } else if run == ['.'] && ends_abbreviation(&cs, i) {
                    false
                } else {
                    next.is_uppercase() || is_opening_quote(next)
                }
            }
        } else {
            false
        };
        if boundary {
            spans.push((start, end));
            start = end;
        }
        i = run_end;
    }
    if start < n {
        spans.push((start, n));
    }

    let mut out = Vec::with_capacity(spans.len());
    for (s, e) in spans {
        let (mut s, mut e) = (s, e);
        while s < e && cs[s].is_whitespace() {
            s += 1;
        }
        while e > s && cs[e - 1].is_whitespace() {
            e -= 1;
        }
        if s == e {
            continue;
        }
        let text: String = cs[s..e].iter().collect();
        let tokens = tokenize(&text);
        out.push(SentenceRecord {
            index: out.len(),
            start_char: s,
            end_char: e,
            char_length: e - s,
            text,
            tokens,
        });
    }
    out
}

/// Whether the word ending at the `.` at `dot` is on the abbreviation list.
fn ends_abbreviation(cs: &[char], dot: usize) -> bool {
    let mut b = dot;
    while b > 0 && !cs[b - 1].is_whitespace() {
        b -= 1;
    }
    let word: String = cs[b..=dot]
        .iter()
        .skip_while(|c| !c.is_alphanumeric())
        .flat_map(|c| c.to_lowercase())
        .collect();
    abbreviations().contains(&word)
}
