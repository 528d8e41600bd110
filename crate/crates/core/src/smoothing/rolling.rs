use super::{check_series, position, Arc, SmootherParams};
use crate::error::{Error, Result};

/// Window length for a fraction of the series: `max(2, round(pct * n))`.
pub fn rolling_window_size(n: usize, window_pct: f64) -> usize {
    ((window_pct * n as f64).round() as usize).max(2)
}

/// Centered rolling mean. Each output is the mean of
/// `values[i - floor(w/2) ..= i + ceil(w/2) - 1]`: the center itself counts
/// toward the right half. Centers whose window would leave the series are
/// clipped.
pub fn rolling_mean(series: &[f64], window_pct: f64) -> Result<Arc> {
    if !(window_pct > 0.0 && window_pct < 1.0) {
        return Err(Error::param(format!("window_pct must be in (0, 1), got {window_pct}")));
    }
    check_series(series)?;
    let n = series.len();
    let w = rolling_window_size(n, window_pct);
    // At least two centers are needed to form an arc.
    if n <= w {
        return Err(Error::SeriesTooShort { len: n, window: w });
    }
    let left = w / 2;
    let right = w - left;
    let mut positions = Vec::with_capacity(n - w + 1);
    let mut values = Vec::with_capacity(n - w + 1);
    for center in left..=(n - right) {
        let window = &series[center - left..center + right];
        values.push(window.iter().sum::<f64>() / w as f64);
        positions.push(position(center, n));
    }
    Ok(Arc::new(SmootherParams::Rolling { window_pct }, n, positions, values))
}
