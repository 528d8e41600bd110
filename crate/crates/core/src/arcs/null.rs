use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::salad::word_salad;
use crate::corpus::Document;
use crate::engines::{score_document, EngineId, RuleConfig};
use crate::error::{Error, Result};
use crate::lexicon::Lexicon;
use crate::numeric::linspace;
use crate::smoothing::{Arc, SmootherParams};

pub const DEFAULT_TRIALS: usize = 10;
pub const DEFAULT_SEED: u64 = 42;

/// Pointwise envelope of word-salad arcs around the original arc.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NullBand {
    pub n_trials: usize,
    pub base_seed: u64,
    pub params: SmootherParams,
    pub grid: Vec<f64>,
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
    pub original: Vec<f64>,
    /// Fraction of grid points where the original lies outside the band.
    pub separation: f64,
}

/// Everything needed to score and smooth a document the same way twice.
#[derive(Debug, Clone, Copy)]
pub struct Pipeline<'a> {
    pub lexicon: &'a Lexicon,
    pub engine: EngineId,
    pub rules: &'a RuleConfig,
    pub smoother: SmootherParams,
}

impl Pipeline<'_> {
    pub fn arc(&self, doc: &Document) -> Result<Arc> {
        let series = score_document(doc, self.lexicon, self.engine, self.rules)?;
        self.smoother.apply(&series.values)
    }
}

pub fn separation(original: &[f64], lower: &[f64], upper: &[f64]) -> f64 {
    let outside = original
        .iter()
        .zip(lower.iter().zip(upper))
        .filter(|&(&o, (&lo, &hi))| o < lo || o > hi)
        .count();
    outside as f64 / original.len() as f64
}

/// Builds the band from already-computed arcs, resampled onto `grid_size`
/// points across the original arc's valid region.
pub fn band_from_arcs(original: &Arc, trials: &[Arc], grid_size: usize, base_seed: u64) -> Result<NullBand> {
    if trials.len() < 2 {
        return Err(Error::param("null band needs at least 2 trials"));
    }
    if grid_size < 2 {
        return Err(Error::param("grid size must be at least 2"));
    }
    let grid = linspace(original.valid_start, original.valid_end, grid_size);
    let orig: Vec<f64> = grid.iter().map(|&x| original.value_at(x)).collect();
    let mut lower = vec![f64::INFINITY; grid_size];
    let mut upper = vec![f64::NEG_INFINITY; grid_size];
    for arc in trials {
        for (j, &x) in grid.iter().enumerate() {
            let v = arc.value_at(x);
            lower[j] = lower[j].min(v);
            upper[j] = upper[j].max(v);
        }
    }
    Ok(NullBand {
        n_trials: trials.len(),
        base_seed,
        params: original.params,
        separation: separation(&orig, &lower, &upper),
        grid,
        lower,
        upper,
        original: orig,
    })
}

/// Scores and smooths `n_trials` word salads (seeds `base_seed + i`) exactly
/// like the original and reports the envelope. Trials run in parallel; the
/// result does not depend on scheduling.
pub fn null_band(doc: &Document, pipeline: &Pipeline<'_>, n_trials: usize, base_seed: u64, grid_size: usize) -> Result<NullBand> {
    if n_trials < 2 {
        return Err(Error::param("null band needs at least 2 trials"));
    }
    let original = pipeline.arc(doc)?;
    let trials = (0..n_trials as u64)
        .into_par_iter()
        .map(|i| word_salad(doc, base_seed.wrapping_add(i)).and_then(|salad| pipeline.arc(&salad)))
        .collect::<Result<Vec<_>>>()?;
    band_from_arcs(&original, &trials, grid_size, base_seed)
}
