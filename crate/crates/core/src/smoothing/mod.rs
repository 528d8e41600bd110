//! Smoothers that turn a per-sentence series into an [`Arc`].

mod dct;
mod loess;
mod rolling;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use dct::{dct_lowpass, dct_ortho, idct_ortho};
pub use loess::{loess_smooth, loess_smooth_degree};
pub use rolling::{rolling_mean, rolling_window_size};

pub const DEFAULT_WINDOW_PCT: f64 = 0.10;
pub const DEFAULT_LOW_PASS: usize = 5;
pub const DEFAULT_SPAN: f64 = 0.5;
pub const DEFAULT_LOESS_DEGREE: usize = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SmootherId {
    Rolling,
    Dct,
    Loess,
}

/// Full parameter record of a smoother run.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "method", rename_all = "lowercase")]
pub enum SmootherParams {
    Rolling { window_pct: f64 },
    Dct { low_pass: usize, scale_range: bool },
    Loess { span: f64, degree: usize },
}

impl SmootherParams {
    pub fn id(&self) -> SmootherId {
        match self {
            SmootherParams::Rolling { .. } => SmootherId::Rolling,
            SmootherParams::Dct { .. } => SmootherId::Dct,
            SmootherParams::Loess { .. } => SmootherId::Loess,
        }
    }

    /// Short identifier, also used for export file names.
    pub fn label(&self) -> String {
        match *self {
            SmootherParams::Rolling { window_pct } => format!("rolling_{}pct", crate::numeric::fmt_sig9(window_pct * 100.0)),
            SmootherParams::Dct { low_pass, .. } => format!("dct_lp{low_pass}"),
            SmootherParams::Loess { span, .. } => format!("loess_span{}", crate::numeric::fmt_sig9(span)),
        }
    }

    pub fn apply(&self, series: &[f64]) -> Result<Arc> {
        match *self {
            SmootherParams::Rolling { window_pct } => rolling_mean(series, window_pct),
            SmootherParams::Dct { low_pass, scale_range } => dct_lowpass(series, low_pass, scale_range),
            SmootherParams::Loess { span, degree } => loess_smooth_degree(series, span, degree),
        }
    }
}

impl fmt::Display for SmootherParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// A smoothed series over narrative position.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Arc {
    pub smoother_id: SmootherId,
    pub params: SmootherParams,
    /// Length of the series the arc was computed from.
    pub source_len: usize,
    pub positions: Vec<f64>,
    pub values: Vec<f64>,
    pub valid_start: f64,
    pub valid_end: f64,
}

impl Arc {
    pub(crate) fn new(params: SmootherParams, source_len: usize, positions: Vec<f64>, values: Vec<f64>) -> Self {
        debug_assert_eq!(positions.len(), values.len());
        debug_assert!(positions.len() >= 2);
        Arc {
            smoother_id: params.id(),
            params,
            source_len,
            valid_start: positions[0],
            valid_end: positions[positions.len() - 1],
            positions,
            values,
        }
    }

    pub fn label(&self) -> String {
        self.params.label()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Sentence ordinal nearest to a narrative position.
    pub fn sentence_at(&self, position: f64) -> usize {
        let last = self.source_len.saturating_sub(1);
        ((position * last as f64).round().max(0.0) as usize).min(last)
    }

    pub fn range(&self) -> f64 {
        let (lo, hi) = min_max(&self.values);
        hi - lo
    }

    /// Linear resampling at an arbitrary position inside the valid region.
    pub fn value_at(&self, position: f64) -> f64 {
        crate::numeric::interp(&self.positions, &self.values, position)
    }
}

pub(crate) fn min_max(v: &[f64]) -> (f64, f64) {
    v.iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| (lo.min(x), hi.max(x)))
}

pub(crate) fn check_series(series: &[f64]) -> Result<()> {
    if series.len() < 2 {
        return Err(Error::param("series needs at least 2 values"));
    }
    if series.iter().any(|v| !v.is_finite()) {
        return Err(Error::param("series values must be finite"));
    }
    Ok(())
}

/// Narrative fraction of index `i` in a series of length `n`.
pub(crate) fn position(i: usize, n: usize) -> f64 {
    i as f64 / (n - 1) as f64
}
