//! Per-sentence sentiment: plain lexical summation and a rule-augmented
//! variant with negation, degree-modifier, capitalization and exclamation
//! heuristics.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::corpus::{Document, SentenceRecord, Token};
use crate::error::{Error, Result};
use crate::lexicon::Lexicon;
use crate::numeric::sign;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EngineId {
    Lexical,
    Rules,
}

impl fmt::Display for EngineId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EngineId::Lexical => "lexical",
            EngineId::Rules => "rules",
        })
    }
}

impl FromStr for EngineId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lexical" => Ok(EngineId::Lexical),
            "rules" => Ok(EngineId::Rules),
            other => Err(Error::param(format!("unknown engine {other:?} (expected lexical|rules)"))),
        }
    }
}

const NEGATIONS: &[&str] = &[
    "aint", "arent", "cannot", "cant", "couldnt", "darent", "didnt", "doesnt", "dont", "hadnt", "hasnt", "havent",
    "isnt", "mightnt", "mustnt", "neither", "neednt", "never", "no", "none", "nope", "nor", "not", "nothing",
    "nowhere", "oughtnt", "shant", "shouldnt", "uhuh", "uh-uh", "wasnt", "werent", "without", "wont", "wouldnt",
    "rarely", "seldom", "despite",
];

const BOOST_UP: &[&str] = &[
    "absolutely", "amazingly", "awfully", "completely", "considerable", "considerably", "decidedly", "deeply",
    "effing", "enormous", "enormously", "entirely", "especially", "exceptional", "exceptionally", "extreme",
    "extremely", "fabulously", "flipping", "flippin", "frackin", "fracking", "fricking", "frickin", "frigging",
    "friggin", "fully", "fuckin", "fucking", "fuggin", "fugging", "greatly", "hella", "highly", "hugely",
    "incredible", "incredibly", "intensely", "major", "majorly", "more", "most", "particularly", "purely", "quite",
    "really", "remarkably", "so", "substantially", "thoroughly", "total", "totally", "tremendous", "tremendously",
    "uber", "unbelievably", "unusually", "utter", "utterly", "very",
];

const BOOST_DOWN: &[&str] = &[
    "almost", "barely", "hardly", "kinda", "kindof", "kind-of", "less", "little", "marginal", "marginally",
    "occasional", "occasionally", "partly", "scarce", "scarcely", "slight", "slightly", "somewhat", "sorta",
    "sortof", "sort-of",
];

/// Heuristic constants of the rule-augmented engine.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RuleConfig {
    pub negation_words: BTreeSet<String>,
    pub negation_window: usize,
    pub negation_multiplier: f64,
    pub boosters: BTreeMap<String, f64>,
    pub exclaim_increment: f64,
    pub exclaim_cap: u32,
    pub allcaps_boost: f64,
    pub compound_alpha: f64,
}

impl Default for RuleConfig {
    fn default() -> Self {
        let boosters = BOOST_UP
            .iter()
            .map(|w| (w.to_string(), 0.293))
            .chain(BOOST_DOWN.iter().map(|w| (w.to_string(), -0.293)))
            .collect();
        RuleConfig {
            negation_words: NEGATIONS.iter().map(|w| w.to_string()).collect(),
            negation_window: 3,
            negation_multiplier: -0.74,
            boosters,
            exclaim_increment: 0.292,
            exclaim_cap: 3,
            allcaps_boost: 0.733,
            compound_alpha: 15.0,
        }
    }
}

impl RuleConfig {
    pub fn validate(&self) -> Result<()> {
        if self.negation_window < 1 {
            return Err(Error::param("negation_window must be >= 1"));
        }
        if self.compound_alpha.is_nan() || self.compound_alpha <= 0.0 {
            return Err(Error::param("compound_alpha must be > 0"));
        }
        let finite = [self.negation_multiplier, self.exclaim_increment, self.allcaps_boost]
            .into_iter()
            .chain(self.boosters.values().copied())
            .all(f64::is_finite);
        if !finite {
            return Err(Error::param("rule constants must be finite"));
        }
        Ok(())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: RuleConfig =
            serde_json::from_str(text).map_err(|e| Error::param(format!("rule config: {e}")))?;
        cfg.validate()?;
        Ok(cfg)
    }

    /// Listed negation words plus any `n't` contraction.
    pub fn is_negation(&self, folded: &str) -> bool {
        self.negation_words.contains(folded) || folded.ends_with("n't")
    }
}

/// Per-sentence scores of one document under one engine.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SentimentSeries {
    pub engine_id: EngineId,
    pub lexicon_name: String,
    pub values: Vec<f64>,
    pub n: usize,
}

/// Sum of token valences, context free.
pub fn score_lexical(tokens: &[Token], lexicon: &Lexicon) -> f64 {
    tokens.iter().map(|t| lexicon.lookup(&t.folded)).sum()
}

/// Lexical score adjusted by the configured heuristics; returns the raw
/// (unbounded) sum.
///
/// Each lexicon hit starts from its valence. An all-caps hit in a sentence
/// that also has lowercase text gains `allcaps_boost` in the direction of its
/// valence; each booster among the preceding `negation_window` tokens adds its
/// increment the same way; a negation in that window then multiplies the
/// result by `negation_multiplier`. Finally the sentence sum is pushed away
/// from zero by `exclaim_increment` per `!`, up to `exclaim_cap`.
pub fn score_rule_augmented(tokens: &[Token], lexicon: &Lexicon, config: &RuleConfig) -> f64 {
    let mixed_case = tokens.iter().any(|t| t.surface.chars().any(char::is_lowercase));
    let mut sum = 0.0;
    for (i, tok) in tokens.iter().enumerate() {
        let valence = lexicon.lookup(&tok.folded);
        if valence == 0.0 {
            continue;
        }
        let direction = sign(valence);
        let mut adjusted = valence;
        if tok.is_all_caps && mixed_case {
            adjusted += direction * config.allcaps_boost;
        }
        let window = &tokens[i.saturating_sub(config.negation_window)..i];
        for prior in window {
            if let Some(inc) = config.boosters.get(&prior.folded) {
                adjusted += direction * inc;
            }
        }
        if window.iter().any(|t| config.is_negation(&t.folded)) {
            adjusted *= config.negation_multiplier;
        }
        sum += adjusted;
    }
    let exclaims: u32 = tokens.iter().map(|t| t.trailing_exclaims).sum();
    sum + sign(sum) * config.exclaim_increment * f64::from(exclaims.min(config.exclaim_cap))
}

/// Maps a raw score into (-1, 1) as `raw / sqrt(raw^2 + alpha)`.
pub fn normalize_compound(raw: f64, alpha: f64) -> f64 {
    raw / (raw * raw + alpha).sqrt()
}

fn score_sentence(s: &SentenceRecord, lexicon: &Lexicon, engine: EngineId, config: &RuleConfig) -> f64 {
    match engine {
        EngineId::Lexical => score_lexical(&s.tokens, lexicon),
        EngineId::Rules => score_rule_augmented(&s.tokens, lexicon, config),
    }
}

/// Scores every sentence in order. Sentences are scored in parallel; the
/// result is identical to sequential scoring.
pub fn score_document(doc: &Document, lexicon: &Lexicon, engine: EngineId, config: &RuleConfig) -> Result<SentimentSeries> {
    if doc.is_empty() {
        return Err(Error::NoSentences);
    }
    let values: Vec<f64> = doc
        .sentences
        .par_iter()
        .map(|s| score_sentence(s, lexicon, engine, config))
        .collect();
    Ok(SentimentSeries {
        engine_id: engine,
        lexicon_name: lexicon.name.clone(),
        n: values.len(),
        values,
    })
}

/// One row of the per-sentence score export.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SentenceScores {
    pub index: usize,
    pub start_char: usize,
    pub end_char: usize,
    pub n_tokens: usize,
    pub lexical: f64,
    pub rules_raw: f64,
    pub rules_compound: f64,
}

pub fn sentence_scores(doc: &Document, lexicon: &Lexicon, config: &RuleConfig) -> Vec<SentenceScores> {
    doc.sentences
        .iter()
        .map(|s| {
            let rules_raw = score_rule_augmented(&s.tokens, lexicon, config);
            SentenceScores {
                index: s.index,
                start_char: s.start_char,
                end_char: s.end_char,
                n_tokens: s.tokens.len(),
                lexical: score_lexical(&s.tokens, lexicon),
                rules_raw,
                rules_compound: normalize_compound(rules_raw, config.compound_alpha),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::tokenize;
    use proptest::prelude::*;

    fn lex(entries: &[(&str, f64)]) -> Lexicon {
        Lexicon::from_entries("t", entries.iter().map(|&(w, v)| (w, v))).unwrap()
    }

    #[test]
    fn lexical_sums() {
        let l = lex(&[("happy", 1.0)]);
        assert_eq!(score_lexical(&tokenize("happy happy"), &l), 2.0);
        assert_eq!(score_lexical(&[], &l), 0.0);
        assert_eq!(score_lexical(&tokenize("not happy"), &l), 1.0);
    }

    // Hand application of the rule pipeline with default constants.
    #[test]
    fn rule_fixtures() {
        let l = lex(&[("good", 1.0)]);
        let cfg = RuleConfig::default();
        assert_eq!(score_rule_augmented(&tokenize("not good"), &l, &cfg), -0.74);
        assert_eq!(score_rule_augmented(&tokenize("very good"), &l, &cfg), 1.0 + 0.293);
        assert_eq!(score_rule_augmented(&tokenize("good!!!"), &l, &cfg), 1.0 + 3.0 * 0.292);
        assert_eq!(score_rule_augmented(&tokenize("good!!!!!"), &l, &cfg), 1.0 + 3.0 * 0.292);
        assert_eq!(score_rule_augmented(&[], &l, &cfg), 0.0);
    }

    #[test]
    fn contraction_negates_boosted_word() {
        let l = lex(&[("good", 1.0)]);
        let cfg = RuleConfig::default();
        assert_eq!(score_rule_augmented(&tokenize("wasn't very good"), &l, &cfg), (1.0 + 0.293) * -0.74);
        assert_eq!(score_rule_augmented(&tokenize("kinda good"), &l, &cfg), 1.0 - 0.293);
        // negation more than three tokens back is out of window
        assert_eq!(score_rule_augmented(&tokenize("not that it was good"), &l, &cfg), 1.0);
    }

    #[test]
    fn caps_need_mixed_case() {
        let l = lex(&[("sad", -1.0)]);
        let cfg = RuleConfig::default();
        assert_eq!(score_rule_augmented(&tokenize("so SAD"), &l, &cfg), -1.0 - 0.733 - 0.293);
        // whole sentence shouting: no caps boost, "SO" still boosts
        assert_eq!(score_rule_augmented(&tokenize("SO SAD!!!"), &l, &cfg), -1.0 - 0.293 - 3.0 * 0.292);
    }

    #[test]
    fn exclaims_ignored_on_neutral_sentence() {
        let l = lex(&[("good", 1.0)]);
        assert_eq!(score_rule_augmented(&tokenize("Stop!!!"), &l, &RuleConfig::default()), 0.0);
    }

    #[test]
    fn compound_closed_forms() {
        assert_eq!(normalize_compound(0.0, 15.0), 0.0);
        let r = 15f64.sqrt();
        assert!((normalize_compound(r, 15.0) - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
        assert_eq!(normalize_compound(-r, 15.0), -normalize_compound(r, 15.0));
    }

    #[test]
    fn config_validation_and_json() {
        let cfg = RuleConfig::default();
        let json = serde_json::to_string(&cfg).unwrap();
        assert_eq!(RuleConfig::from_json(&json).unwrap(), cfg);
        let bad = RuleConfig { negation_window: 0, ..cfg.clone() };
        assert!(bad.validate().is_err());
        let bad = RuleConfig { compound_alpha: 0.0, ..cfg };
        assert!(bad.validate().is_err());
        assert!(RuleConfig::from_json("{").is_err());
    }

    #[test]
    fn document_series() {
        let doc = Document::from_normalized("t", 0, "It was good. It was. It was bad.");
        let l = lex(&[("good", 1.0), ("bad", -1.0)]);
        let s = score_document(&doc, &l, EngineId::Lexical, &RuleConfig::default()).unwrap();
        assert_eq!(s.values, [1.0, 0.0, -1.0]);
        assert_eq!(s.n, 3);
        let empty = Document::from_normalized("e", 0, "");
        assert!(matches!(
            score_document(&empty, &l, EngineId::Lexical, &RuleConfig::default()),
            Err(Error::NoSentences)
        ));
        assert_eq!("rules".parse::<EngineId>().unwrap(), EngineId::Rules);
        assert!("vader".parse::<EngineId>().is_err());
    }

    #[test]
    fn engines_disagree_only_on_triggers() {
        // sentences 1 and 3 carry a negation and a booster
        let text = "The day was good. She was not happy. The sea was cold. It was very sad. Love came.";
        let doc = Document::from_normalized("t", 0, text);
        let l = Lexicon::tiny();
        let cfg = RuleConfig::default();
        let lexical = score_document(&doc, &l, EngineId::Lexical, &cfg).unwrap().values;
        let rules = score_document(&doc, &l, EngineId::Rules, &cfg).unwrap().values;
        assert_eq!(lexical, [1.0, 1.0, -1.0, -1.0, 1.0]);
        assert_eq!(rules, [1.0, -0.74, -1.0, -1.293, 1.0]);
    }

    fn word() -> impl Strategy<Value = String> {
        prop::sample::select(vec!["good", "bad", "sad", "joy", "the", "sea", "very", "not", "kinda", "light"])
            .prop_map(str::to_owned)
    }

    proptest! {
        #[test]
        fn lexical_is_linear(a in prop::collection::vec(word(), 0..20), b in prop::collection::vec(word(), 0..20)) {
            let l = Lexicon::general();
            let ta = tokenize(&a.join(" "));
            let tb = tokenize(&b.join(" "));
            let both: Vec<Token> = ta.iter().chain(&tb).cloned().collect();
            let lhs = score_lexical(&both, &l);
            let rhs = score_lexical(&ta, &l) + score_lexical(&tb, &l);
            prop_assert!((lhs - rhs).abs() < 1e-9);
        }

        #[test]
        fn lexical_sign_antisymmetry(a in prop::collection::vec(word(), 0..30)) {
            let l = Lexicon::general();
            let t = tokenize(&a.join(" "));
            prop_assert_eq!(score_lexical(&t, &l.negated()), -score_lexical(&t, &l));
        }

        #[test]
        fn engines_agree_without_triggers(
            a in prop::collection::vec(prop::sample::select(vec!["good", "bad", "sad", "joy", "the", "sea", "light", "cold"]), 0..30)
        ) {
            let l = Lexicon::general();
            let t = tokenize(&a.join(" "));
            prop_assert_eq!(score_rule_augmented(&t, &l, &RuleConfig::default()), score_lexical(&t, &l));
        }

        #[test]
        fn compound_bounded_monotone_odd(x in -1e3f64..1e3, dx in 1e-6f64..10.0, alpha in 0.1f64..100.0) {
            let y = normalize_compound(x, alpha);
            prop_assert!(y > -1.0 && y < 1.0);
            prop_assert!(normalize_compound(x + dx, alpha) >= y - 1e-15);
            prop_assert_eq!(normalize_compound(-x, alpha), -y);
        }
    }
}
