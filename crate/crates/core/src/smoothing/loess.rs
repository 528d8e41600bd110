use super::{check_series, position, Arc, SmootherParams, DEFAULT_LOESS_DEGREE};
use crate::error::{Error, Result};

/// Degree-1 LOESS, see [`loess_smooth_degree`].
pub fn loess_smooth(series: &[f64], span: f64) -> Result<Arc> {
    loess_smooth_degree(series, span, DEFAULT_LOESS_DEGREE)
}

/// Number of neighbors used per local fit: `ceil(span * n)`.
pub(crate) fn neighborhood_size(n: usize, span: f64) -> usize {
    // absorb representation error such as 0.3 * 200 = 60.000000000000007
    ((span * n as f64) - 1e-9).ceil().max(0.0) as usize
}

/// Local polynomial regression over sentence index.
///
/// At every index the `ceil(span * n)` nearest indices are fitted by weighted
/// least squares with tricube weights `(1 - (d / d_max)^3)^3`, `d_max` being
/// the farthest neighbor's distance, and the fit is evaluated at the index.
/// Equidistant ties go to the left neighbor. If a fit is rank deficient the
/// degree is lowered until it is not.
pub fn loess_smooth_degree(series: &[f64], span: f64, degree: usize) -> Result<Arc> {
    if !(span > 0.0 && span <= 1.0) {
        return Err(Error::param(format!("span must be in (0, 1], got {span}")));
    }
    if degree > 2 {
        return Err(Error::param(format!("loess degree must be 0, 1 or 2, got {degree}")));
    }
    check_series(series)?;
    let n = series.len();
    let q = neighborhood_size(n, span);
    if q < 3 {
        return Err(Error::param(format!("span {span} leaves {q} neighbors, need at least 3")));
    }
    let mut values = Vec::with_capacity(n);
    let mut weights = vec![0.0; q];
    for i in 0..n {
        let lo = i.saturating_sub(q / 2).min(n - q);
        let d_max = (i - lo).max(lo + q - 1 - i) as f64;
        for (k, w) in weights.iter_mut().enumerate() {
            let d = (lo + k).abs_diff(i) as f64 / d_max;
            let t = 1.0 - d * d * d;
            *w = t * t * t;
        }
        let ys = &series[lo..lo + q];
        let offset = lo as f64 - i as f64;
        values.push(local_fit(ys, &weights, offset, d_max, degree));
    }
    let positions = (0..n).map(|i| position(i, n)).collect();
    Ok(Arc::new(SmootherParams::Loess { span, degree }, n, positions, values))
}

/// Weighted polynomial fit in the scaled coordinate `u = (x - x0) / d_max`,
/// returning the fitted value at `u = 0`.
fn local_fit(ys: &[f64], weights: &[f64], offset: f64, d_max: f64, degree: usize) -> f64 {
    for deg in (0..=degree).rev() {
        let p = deg + 1;
        let mut a = [[0.0; 3]; 3];
        let mut b = [0.0; 3];
        for (k, (&y, &w)) in ys.iter().zip(weights).enumerate() {
            if w == 0.0 {
                continue;
            }
            let u = (offset + k as f64) / d_max;
            let mut pow = [1.0; 5];
            for e in 1..5 {
                pow[e] = pow[e - 1] * u;
            }
            for r in 0..p {
                b[r] += w * pow[r] * y;
                for c in 0..p {
                    a[r][c] += w * pow[r + c];
                }
            }
        }
        if let Some(coef) = solve(&mut a, &mut b, p) {
            return coef;
        }
    }
    unreachable!("degree-0 fit always has a positive weight at the center")
}

/// Gaussian elimination with partial pivoting on the leading `p x p` block.
/// Returns the constant coefficient, or `None` when the system is singular.
fn solve(a: &mut [[f64; 3]; 3], b: &mut [f64; 3], p: usize) -> Option<f64> {
    let scale = (0..p).map(|r| a[r][r].abs()).fold(0.0, f64::max);
    if scale == 0.0 {
        return None;
    }
    for col in 0..p {
        let piv = (col..p).max_by(|&x, &y| a[x][col].abs().total_cmp(&a[y][col].abs()))?;
        if a[piv][col].abs() <= 1e-12 * scale {
            return None;
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for r in col + 1..p {
            let f = a[r][col] / a[col][col];
            let pivot_row = a[col];
            for (x, &y) in a[r][col..p].iter_mut().zip(&pivot_row[col..p]) {
                *x -= f * y;
            }
            b[r] -= f * b[col];
        }
    }
    let mut x = [0.0; 3];
    for r in (0..p).rev() {
        let mut acc = b[r];
        for c in r + 1..p {
            acc -= a[r][c] * x[c];
        }
        x[r] = acc / a[r][r];
    }
    Some(x[0])
}
