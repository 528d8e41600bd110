use std::f64::consts::PI;

use super::{check_series, min_max, position, Arc, SmootherParams};
use crate::error::{Error, Result};

/// `cos(pi * m / (2n))` for `m` in `0..4n`. Every DCT angle
/// `pi * (2j + 1) * k / (2n)` reduces exactly to one of these.
struct CosTable {
    n: usize,
    table: Vec<f64>,
}

impl CosTable {
    fn new(n: usize) -> Self {
        let period = 4 * n;
        let table = (0..period)
            .map(|m| (PI * m as f64 / (2 * n) as f64).cos())
            .collect();
        CosTable { n, table }
    }

    fn scale(&self, k: usize) -> f64 {
        if k == 0 {
            (1.0 / self.n as f64).sqrt()
        } else {
            (2.0 / self.n as f64).sqrt()
        }
    }

    /// First `k_max` orthonormal DCT-II coefficients of `x`.
    fn forward(&self, x: &[f64], k_max: usize) -> Vec<f64> {
        let period = self.table.len();
        (0..k_max)
            .map(|k| {
                let step = (2 * k) % period;
                let mut m = k % period;
                let mut acc = 0.0;
                for &xj in x {
                    acc += xj * self.table[m];
                    m += step;
                    if m >= period {
                        m -= period;
                    }
                }
                self.scale(k) * acc
            })
            .collect()
    }

    /// Orthonormal DCT-III of `coeffs` (missing coefficients are zero).
    fn inverse(&self, coeffs: &[f64]) -> Vec<f64> {
        let period = self.table.len();
        let mut out = vec![0.0; self.n];
        for (k, &c) in coeffs.iter().enumerate() {
            let a = self.scale(k) * c;
            if a == 0.0 {
                continue;
            }
            let step = (2 * k) % period;
            let mut m = k % period;
            for y in out.iter_mut() {
                *y += a * self.table[m];
                m += step;
                if m >= period {
                    m -= period;
                }
            }
        }
        out
    }
}

/// Orthonormal type-II DCT.
pub fn dct_ortho(x: &[f64]) -> Vec<f64> {
    if x.is_empty() {
        return Vec::new();
    }
    CosTable::new(x.len()).forward(x, x.len())
}

/// Orthonormal type-III DCT, the inverse of [`dct_ortho`].
pub fn idct_ortho(coeffs: &[f64]) -> Vec<f64> {
    if coeffs.is_empty() {
        return Vec::new();
    }
    CosTable::new(coeffs.len()).inverse(coeffs)
}

/// Keeps the first `low_pass` cosine components of the series.
///
/// With `scale_range` the result is mapped affinely onto [-1, 1]; a flat
/// result maps to 0.
pub fn dct_lowpass(series: &[f64], low_pass: usize, scale_range: bool) -> Result<Arc> {
    check_series(series)?;
    let n = series.len();
    if low_pass < 1 || low_pass > n {
        return Err(Error::param(format!("low_pass must be in 1..={n}, got {low_pass}")));
    }
    let table = CosTable::new(n);
    let coeffs = table.forward(series, low_pass);
    let mut values = table.inverse(&coeffs);
    if scale_range {
        let (lo, hi) = min_max(&values);
        let span = hi - lo;
        for v in values.iter_mut() {
            *v = if span > 0.0 { 2.0 * (*v - lo) / span - 1.0 } else { 0.0 };
        }
    }
    let positions = (0..n).map(|i| position(i, n)).collect();
    Ok(Arc::new(
        SmootherParams::Dct { low_pass, scale_range },
        n,
        positions,
        values,
    ))
}
