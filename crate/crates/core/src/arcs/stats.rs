use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DistributionStats {
    pub n: usize,
    pub mean: f64,
    /// Sample variance (n - 1 denominator).
    pub variance: f64,
    /// Sample skewness g1 = m3 / m2^(3/2) with central moments over n;
    /// `None` when the variance is zero or n < 3.
    pub skewness: Option<f64>,
}

pub fn distribution_stats(values: &[f64]) -> Result<DistributionStats> {
    let n = values.len();
    if n < 2 {
        return Err(Error::param(format!("distribution stats need at least 2 values, got {n}")));
    }
    let nf = n as f64;
    let mean = values.iter().sum::<f64>() / nf;
    let (mut m2, mut m3) = (0.0, 0.0);
    for &v in values {
        let d = v - mean;
        m2 += d * d;
        m3 += d * d * d;
    }
    let variance = m2 / (nf - 1.0);
    let (m2, m3) = (m2 / nf, m3 / nf);
    let skewness = (n >= 3 && m2 > 0.0).then(|| m3 / m2.powf(1.5));
    Ok(DistributionStats {
        n,
        mean,
        variance,
        skewness,
    })
}
