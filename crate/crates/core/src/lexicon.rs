//! Word-to-valence lexicons in the `word<TAB>score` format.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::corpus::tokenize::fold;
use crate::error::{Error, Result};

const GENERAL: &str = include_str!("../data/lexicons/general.tsv");
const TINY: &str = include_str!("../data/lexicons/tiny.tsv");

/// Immutable word → valence map. Keys are case-folded and unique.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Lexicon {
    pub name: String,
    entries: BTreeMap<String, f64>,
}

impl Lexicon {
    /// Parses lexicon text. Blank lines and lines starting with `#` are skipped.
    pub fn parse(name: impl Into<String>, text: &str) -> Result<Self> {
        let name = name.into();
        let mut entries = BTreeMap::new();
        for (i, line) in text.split('\n').enumerate() {
            let line_no = i + 1;
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |reason: String| Error::LexiconLine {
                name: name.clone(),
                line: line_no,
                reason,
            };
            let (word, score) = line
                .split_once('\t')
                .ok_or_else(|| bad("expected word<TAB>score".into()))?;
            if word.is_empty() {
                return Err(bad("empty word".into()));
            }
            let value: f64 = score
                .parse()
                .map_err(|_| bad(format!("unparseable score {score:?}")))?;
            if !value.is_finite() {
                return Err(bad(format!("non-finite score {score:?}")));
            }
            let key = fold(word);
            if entries.insert(key.clone(), value).is_some() {
                return Err(Error::DuplicateWord {
                    name,
                    word: key,
                    line: line_no,
                });
            }
        }
        Ok(Lexicon { name, entries })
    }

    pub fn load(path: impl AsRef<Path>, name: impl Into<String>) -> Result<Self> {
        let path = path.as_ref();
        let bytes = std::fs::read(path).map_err(|e| Error::io(path, e))?;
        let text = std::str::from_utf8(&bytes).map_err(|e| Error::LexiconLine {
            name: path.display().to_string(),
            line: bytes[..e.valid_up_to()].iter().filter(|&&b| b == b'\n').count() + 1,
            reason: "invalid UTF-8".into(),
        })?;
        Self::parse(name, text)
    }

    /// The bundled general-purpose lexicon (~7.5k single-word entries).
    pub fn general() -> Self {
        Self::parse("general", GENERAL).expect("bundled lexicon is valid")
    }

    /// A hand-made lexicon for tests and examples.
    pub fn tiny() -> Self {
        Self::parse("tiny", TINY).expect("bundled lexicon is valid")
    }

    /// `builtin:general`, `builtin:tiny`, or a file path.
    pub fn resolve(spec: &str) -> Result<Self> {
        match spec {
            "builtin:general" => Ok(Self::general()),
            "builtin:tiny" => Ok(Self::tiny()),
            _ if spec.starts_with("builtin:") => Err(Error::param(format!("unknown builtin lexicon {spec}"))),
            path => {
                let name = Path::new(path)
                    .file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_else(|| path.to_owned());
                Self::load(path, name)
            }
        }
    }

    /// Valence of a folded word; absent words are neutral.
    pub fn lookup(&self, folded: &str) -> f64 {
        self.entries.get(folded).copied().unwrap_or(0.0)
    }

    pub fn contains(&self, folded: &str) -> bool {
        self.entries.contains_key(folded)
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&str, f64)> {
        self.entries.iter().map(|(k, &v)| (k.as_str(), v))
    }

    /// Lexicon with every valence negated.
    pub fn negated(&self) -> Self {
        Lexicon {
            name: format!("{}-negated", self.name),
            entries: self.entries.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }

    pub fn from_entries<I, S>(name: impl Into<String>, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, f64)>,
        S: AsRef<str>,
    {
        let mut text = String::new();
        for (w, v) in entries {
            text.push_str(w.as_ref());
            text.push('\t');
            text.push_str(&v.to_string());
            text.push('\n');
        }
        Self::parse(name, &text)
    }

    /// Serializes in the file format, sorted by word. Scores use the shortest
    /// representation that parses back to the same value.
    pub fn to_tsv(&self) -> String {
        let mut out = format!("# lexicon {}\n", self.name);
        for (w, v) in &self.entries {
            out.push_str(w);
            out.push('\t');
            out.push_str(&v.to_string());
            out.push('\n');
        }
        out
    }
}
