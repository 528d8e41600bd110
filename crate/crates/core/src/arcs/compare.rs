use serde::{Deserialize, Serialize};

use super::extrema::{default_min_prominence, find_extrema};
use crate::error::{Error, Result};
use crate::numeric::linspace;
use crate::smoothing::Arc;

pub const DEFAULT_GRID: usize = 100;
pub const DEFAULT_POS_TOLERANCE: f64 = 0.05;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AgreementReport {
    pub arc_ids: (String, String),
    pub grid_size: usize,
    pub overlap_start: f64,
    pub overlap_end: f64,
    /// `None` when either resampled arc is constant.
    pub pearson_r: Option<f64>,
    pub pos_tolerance: f64,
    pub extrema_a: usize,
    pub extrema_b: usize,
    pub extrema_matches: usize,
}

/// Pearson correlation; `None` if either input has zero variance.
pub fn pearson(a: &[f64], b: &[f64]) -> Option<f64> {
    let n = a.len() as f64;
    let ma = a.iter().sum::<f64>() / n;
    let mb = b.iter().sum::<f64>() / n;
    let (mut sab, mut saa, mut sbb) = (0.0, 0.0, 0.0);
    for (&x, &y) in a.iter().zip(b) {
        let (dx, dy) = (x - ma, y - mb);
        sab += dx * dy;
        saa += dx * dx;
        sbb += dy * dy;
    }
    if saa == 0.0 || sbb == 0.0 {
        return None;
    }
    Some((sab / (saa * sbb).sqrt()).clamp(-1.0, 1.0))
}

/// Resamples both arcs onto `grid_size` points spanning the overlap of their
/// valid regions and correlates them; counts extrema of `a` that have a
/// same-kind extremum of `b` within `pos_tolerance`, each `b` extremum used
/// at most once.
pub fn compare_arcs(a: &Arc, b: &Arc, grid_size: usize, pos_tolerance: f64) -> Result<AgreementReport> {
    if a.len() < 3 || b.len() < 3 {
        return Err(Error::param("arcs need at least 3 points to compare"));
    }
    if grid_size < 2 {
        return Err(Error::param("grid size must be at least 2"));
    }
    let lo = a.valid_start.max(b.valid_start);
    let hi = a.valid_end.min(b.valid_end);
    if lo >= hi {
        return Err(Error::NonOverlapping {
            left: a.label(),
            right: b.label(),
        });
    }
    let grid = linspace(lo, hi, grid_size);
    let ya: Vec<f64> = grid.iter().map(|&x| a.value_at(x)).collect();
    let yb: Vec<f64> = grid.iter().map(|&x| b.value_at(x)).collect();

    let ea = find_extrema(a, default_min_prominence(a)).points;
    let eb = find_extrema(b, default_min_prominence(b)).points;
    let mut used = vec![false; eb.len()];
    let mut matches = 0;
    for p in &ea {
        let best = eb
            .iter()
            .enumerate()
            .filter(|(j, q)| !used[*j] && q.kind == p.kind && (q.position - p.position).abs() <= pos_tolerance)
            .min_by(|(_, q1), (_, q2)| {
                (q1.position - p.position)
                    .abs()
                    .total_cmp(&(q2.position - p.position).abs())
            });
        if let Some((j, _)) = best {
            used[j] = true;
            matches += 1;
        }
    }

    Ok(AgreementReport {
        arc_ids: (a.label(), b.label()),
        grid_size,
        overlap_start: lo,
        overlap_end: hi,
        pearson_r: pearson(&ya, &yb),
        pos_tolerance,
        extrema_a: ea.len(),
        extrema_b: eb.len(),
        extrema_matches: matches,
    })
}
