use serde::{Deserialize, Serialize};

use crate::smoothing::Arc;

/// Fraction of an arc's value range used as the default prominence cutoff.
pub const DEFAULT_PROMINENCE_FRACTION: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExtremumKind {
    Max,
    Min,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InflectionPoint {
    pub label: String,
    pub kind: ExtremumKind,
    pub position: f64,
    pub value: f64,
    pub sentence_index: usize,
    /// Index into the arc's `positions`/`values`.
    pub arc_index: usize,
    pub prominence: f64,
    pub is_global: bool,
}

/// The arc's overall maximum or minimum, which may sit on the arc's edge.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GlobalExtremum {
    pub position: f64,
    pub value: f64,
    pub sentence_index: usize,
    pub arc_index: usize,
    /// Label of the matching interior extremum, if one was retained.
    pub label: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Extrema {
    pub min_prominence: f64,
    pub points: Vec<InflectionPoint>,
    pub global_max: GlobalExtremum,
    pub global_min: GlobalExtremum,
}

/// 5% of the arc's value range.
pub fn default_min_prominence(arc: &Arc) -> f64 {
    DEFAULT_PROMINENCE_FRACTION * arc.range()
}

struct Plateau {
    start: usize,
    end: usize,
    value: f64,
}

fn plateaus(values: &[f64]) -> Vec<Plateau> {
    let mut out: Vec<Plateau> = Vec::new();
    for (i, &v) in values.iter().enumerate() {
        match out.last_mut() {
            Some(p) if p.value == v => p.end = i,
            _ => out.push(Plateau {
                start: i,
                end: i,
                value: v,
            }),
        }
    }
    out
}

/// Height of a peak over the higher of the two lowest points reached before
/// meeting strictly higher ground (or the arc's edge) on either side.
fn peak_prominence(values: &[f64], start: usize, end: usize, sign: f64) -> f64 {
    let peak = sign * values[start];
    let mut left_base = peak;
    for &v in values[..start].iter().rev() {
        let v = sign * v;
        if v > peak {
            break;
        }
        left_base = left_base.min(v);
    }
    let mut right_base = peak;
    for &v in &values[end + 1..] {
        let v = sign * v;
        if v > peak {
            break;
        }
        right_base = right_base.min(v);
    }
    peak - left_base.max(right_base)
}

fn global(arc: &Arc, index: usize, points: &[InflectionPoint], kind: ExtremumKind) -> GlobalExtremum {
    let label = points
        .iter()
        .find(|p| p.is_global && p.kind == kind)
        .map(|p| p.label.clone());
    GlobalExtremum {
        position: arc.positions[index],
        value: arc.values[index],
        sentence_index: arc.sentence_at(arc.positions[index]),
        arc_index: index,
        label,
    }
}

/// Interior local extrema of an arc, filtered by prominence and forced to
/// alternate, labeled `P1`, `P2`, ... in position order.
///
/// Runs of equal values count as one extremum located at their midpoint.
/// When filtering leaves two extrema of the same kind adjacent, the more
/// extreme one is kept (the earlier on ties). Global maximum and minimum are
/// taken over the whole arc, first occurrence on ties.
pub fn find_extrema(arc: &Arc, min_prominence: f64) -> Extrema {
    let values = &arc.values;
    let runs = plateaus(values);
    let mut candidates: Vec<InflectionPoint> = Vec::new();
    for w in runs.windows(3) {
        let (prev, cur, next) = (&w[0], &w[1], &w[2]);
        let kind = if cur.value > prev.value && cur.value > next.value {
            ExtremumKind::Max
        } else if cur.value < prev.value && cur.value < next.value {
            ExtremumKind::Min
        } else {
            continue;
        };
        let sign = if kind == ExtremumKind::Max { 1.0 } else { -1.0 };
        let prominence = peak_prominence(values, cur.start, cur.end, sign);
        if prominence < min_prominence {
            continue;
        }
        let idx = (cur.start + cur.end) / 2;
        let point = InflectionPoint {
            label: String::new(),
            kind,
            position: arc.positions[idx],
            value: cur.value,
            sentence_index: arc.sentence_at(arc.positions[idx]),
            arc_index: idx,
            prominence,
            is_global: false,
        };
        match candidates.last_mut() {
            Some(last) if last.kind == kind => {
                let more_extreme = match kind {
                    ExtremumKind::Max => point.value > last.value,
                    ExtremumKind::Min => point.value < last.value,
                };
                if more_extreme {
                    *last = point;
                }
            }
            _ => candidates.push(point),
        }
    }

    let (mut imax, mut imin) = (0, 0);
    for (i, &v) in values.iter().enumerate() {
        if v > values[imax] {
            imax = i;
        }
        if v < values[imin] {
            imin = i;
        }
    }
    let mut max_flagged = false;
    let mut min_flagged = false;
    for (k, p) in candidates.iter_mut().enumerate() {
        p.label = format!("P{}", k + 1);
        if p.kind == ExtremumKind::Max && !max_flagged && p.value == values[imax] {
            p.is_global = true;
            max_flagged = true;
        }
        if p.kind == ExtremumKind::Min && !min_flagged && p.value == values[imin] {
            p.is_global = true;
            min_flagged = true;
        }
    }
    Extrema {
        min_prominence,
        global_max: global(arc, imax, &candidates, ExtremumKind::Max),
        global_min: global(arc, imin, &candidates, ExtremumKind::Min),
        points: candidates,
    }
}
