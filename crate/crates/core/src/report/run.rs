use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::audit::{audit_long_sentences, AuditReport, DEFAULT_THRESHOLD};
use crate::arcs::{
    band_from_arcs, compare_arcs, default_min_prominence, distribution_stats, extract_context, find_extrema, word_salad,
    AgreementReport, ContextWindow, DistributionStats, Extrema, ExtremumKind, NullBand, Pipeline, DEFAULT_CONTEXT,
    DEFAULT_GRID, DEFAULT_POS_TOLERANCE, DEFAULT_SEED, DEFAULT_TRIALS,
};
use crate::corpus::Document;
use crate::engines::{sentence_scores, EngineId, RuleConfig, SentenceScores};
use crate::error::{Error, Result};
use crate::lexicon::Lexicon;
use crate::numeric::round_sig9;
use crate::smoothing::{Arc, SmootherParams, DEFAULT_LOESS_DEGREE, DEFAULT_LOW_PASS, DEFAULT_SPAN, DEFAULT_WINDOW_PCT};

pub const TOOL_NAME: &str = env!("CARGO_PKG_NAME");
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Everything a run needs besides the input bytes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub source_id: String,
    pub strip_lines: usize,
    /// `builtin:general`, `builtin:tiny` or a TSV path.
    pub lexicon: String,
    pub engine: EngineId,
    pub rules: RuleConfig,
    /// Arcs to compute. The first one is also used for the null band.
    pub smoothers: Vec<SmootherParams>,
    /// `None` uses 5% of each arc's range.
    pub min_prominence: Option<f64>,
    pub context: usize,
    pub trials: usize,
    pub seed: u64,
    pub grid: usize,
    pub audit_threshold: usize,
    pub timestamp: Option<String>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            source_id: "input".to_owned(),
            strip_lines: 0,
            lexicon: "builtin:general".to_owned(),
            engine: EngineId::Lexical,
            rules: RuleConfig::default(),
            smoothers: default_smoothers(DEFAULT_WINDOW_PCT, DEFAULT_LOW_PASS, DEFAULT_SPAN, true),
            min_prominence: None,
            context: DEFAULT_CONTEXT,
            trials: DEFAULT_TRIALS,
            seed: DEFAULT_SEED,
            grid: DEFAULT_GRID,
            audit_threshold: DEFAULT_THRESHOLD,
            timestamp: None,
        }
    }
}

/// Rolling mean, DCT at `low_pass` and at 10 (once if equal), and LOESS.
pub fn default_smoothers(window_pct: f64, low_pass: usize, span: f64, scale_range: bool) -> Vec<SmootherParams> {
    let mut out = vec![
        SmootherParams::Rolling { window_pct },
        SmootherParams::Dct { low_pass, scale_range },
    ];
    if low_pass != 10 {
        out.push(SmootherParams::Dct {
            low_pass: 10,
            scale_range,
        });
    }
    out.push(SmootherParams::Loess {
        span,
        degree: DEFAULT_LOESS_DEGREE,
    });
    out
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LexiconInfo {
    pub name: String,
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DocumentInfo {
    pub source_id: String,
    pub raw_length: usize,
    pub sentence_count: usize,
    pub token_count: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Distributions {
    pub lexical: DistributionStats,
    pub rules_raw: DistributionStats,
    pub rules_compound: DistributionStats,
}

/// An inflection point with its surrounding text.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointReport {
    pub label: String,
    pub kind: ExtremumKind,
    pub position: f64,
    pub percent: f64,
    pub value: f64,
    pub sentence_index: usize,
    pub is_global: bool,
    pub context: ContextWindow,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ArcReport {
    pub label: String,
    pub arc: Arc,
    pub extrema: Extrema,
    pub points: Vec<PointReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub tool: String,
    pub tool_version: String,
    /// `sha256:` followed by the hex digest of the raw input bytes.
    pub input_digest: String,
    pub config: RunConfig,
    pub lexicon: LexiconInfo,
    pub document: DocumentInfo,
    pub distributions: Distributions,
    pub sentences: Vec<SentenceScores>,
    pub arcs: Vec<ArcReport>,
    pub agreement: Vec<AgreementReport>,
    pub null_band: NullBand,
    pub audit: AuditReport,
    pub timestamp: Option<String>,
}

impl RunReport {
    /// The report with every float rounded to 9 significant digits, as it
    /// is written to disk.
    pub fn rounded(&self) -> RunReport {
        let mut v = serde_json::to_value(self).expect("report serializes");
        round_value(&mut v);
        serde_json::from_value(v).expect("rounded report deserializes")
    }

    pub fn arc(&self, label: &str) -> Option<&ArcReport> {
        self.arcs.iter().find(|a| a.label == label)
    }

    pub fn agreement_between(&self, a: &str, b: &str) -> Option<&AgreementReport> {
        self.agreement
            .iter()
            .find(|r| (r.arc_ids.0 == a && r.arc_ids.1 == b) || (r.arc_ids.0 == b && r.arc_ids.1 == a))
    }
}

fn round_value(v: &mut serde_json::Value) {
    use serde_json::Value;
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = round_sig9(n.as_f64().expect("f64"));
            *v = Value::from(x);
        }
        Value::Array(items) => items.iter_mut().for_each(round_value),
        Value::Object(map) => map.values_mut().for_each(round_value),
        _ => {}
    }
}

pub fn sha256_digest(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}

/// Builds the inflection-point report of one arc.
pub fn point_reports(doc: &Document, extrema: &Extrema, context: usize) -> Vec<PointReport> {
    extrema
        .points
        .iter()
        .map(|p| PointReport {
            label: p.label.clone(),
            kind: p.kind,
            position: p.position,
            percent: 100.0 * p.position,
            value: p.value,
            sentence_index: p.sentence_index,
            is_global: p.is_global,
            context: extract_context(doc, p, context),
        })
        .collect()
}

/// The full pipeline on raw input bytes.
pub fn run(raw: &[u8], config: &RunConfig) -> Result<RunReport> {
    config.rules.validate()?;
    if config.smoothers.is_empty() {
        return Err(Error::param("at least one smoother is required"));
    }
    let labels: BTreeSet<String> = config.smoothers.iter().map(|s| s.label()).collect();
    if labels.len() != config.smoothers.len() {
        return Err(Error::param("smoothers must have distinct labels"));
    }
    if let Some(p) = config.min_prominence {
        if p.is_nan() || p < 0.0 {
            return Err(Error::param("min_prominence must be >= 0"));
        }
    }
    let lexicon = Lexicon::resolve(&config.lexicon)?;
    let doc = Document::ingest(config.source_id.clone(), raw, config.strip_lines)?;
    if doc.is_empty() {
        return Err(Error::NoSentences);
    }
    let audit = audit_long_sentences(&doc, config.audit_threshold)?;

    let sentences = sentence_scores(&doc, &lexicon, &config.rules);
    let column = |f: fn(&SentenceScores) -> f64| sentences.iter().map(f).collect::<Vec<f64>>();
    let distributions = Distributions {
        lexical: distribution_stats(&column(|s| s.lexical))?,
        rules_raw: distribution_stats(&column(|s| s.rules_raw))?,
        rules_compound: distribution_stats(&column(|s| s.rules_compound))?,
    };
    let series = match config.engine {
        EngineId::Lexical => column(|s| s.lexical),
        EngineId::Rules => column(|s| s.rules_raw),
    };

    let mut arcs = Vec::with_capacity(config.smoothers.len());
    for params in &config.smoothers {
        let arc = params.apply(&series)?;
        let extrema = find_extrema(&arc, config.min_prominence.unwrap_or_else(|| default_min_prominence(&arc)));
        arcs.push(ArcReport {
            label: arc.label(),
            points: point_reports(&doc, &extrema, config.context),
            extrema,
            arc,
        });
    }

    let mut agreement = Vec::new();
    for i in 0..arcs.len() {
        for j in i + 1..arcs.len() {
            agreement.push(compare_arcs(&arcs[i].arc, &arcs[j].arc, config.grid, DEFAULT_POS_TOLERANCE)?);
        }
    }

    let pipeline = Pipeline {
        lexicon: &lexicon,
        engine: config.engine,
        rules: &config.rules,
        smoother: config.smoothers[0],
    };
    if config.trials < 2 {
        return Err(Error::param("null band needs at least 2 trials"));
    }
    let trials = (0..config.trials as u64)
        .into_par_iter()
        .map(|i| word_salad(&doc, config.seed.wrapping_add(i)).and_then(|s| pipeline.arc(&s)))
        .collect::<Result<Vec<_>>>()?;
    let null_band = band_from_arcs(&arcs[0].arc, &trials, config.grid, config.seed)?;

    Ok(RunReport {
        tool: TOOL_NAME.to_owned(),
        tool_version: TOOL_VERSION.to_owned(),
        input_digest: sha256_digest(raw),
        config: config.clone(),
        lexicon: LexiconInfo {
            name: lexicon.name.clone(),
            size: lexicon.size(),
        },
        document: DocumentInfo {
            source_id: doc.source_id.clone(),
            raw_length: doc.raw_length,
            sentence_count: doc.len(),
            token_count: doc.token_count(),
        },
        distributions,
        sentences,
        arcs,
        agreement,
        null_band,
        audit,
        timestamp: config.timestamp.clone(),
    })
}
