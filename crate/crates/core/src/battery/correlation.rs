use serde::Serialize;

use crate::engine::pearson;
use crate::error::{Error, Result};
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CorrelationReport<T> {
    pub lag: usize,
    pub r: T,
    /// Number of `(x[i], x[i + lag])` pairs.
    pub n: usize,
}

impl<T: Real> CorrelationReport<T> {
    /// `3 / sqrt(n)`, the magnitude beyond which `r` signals dependence.
    pub fn three_sigma_bound(&self) -> T {
        T::lit(3.0) / T::from_count(self.n as u64).sqrt()
    }
}

/// Pearson correlation between the series and itself shifted by `lag`.
pub fn lag_correlation<T: Real>(samples: &[T], lag: usize) -> Result<CorrelationReport<T>> {
    if lag == 0 {
        return Err(Error::InvalidParameter("lag must be positive".into()));
    }
    if samples.len() <= lag + 2 {
        return Err(Error::InsufficientSample(format!(
            "lag-{lag} correlation needs more than {} samples, got {}",
            lag + 2,
            samples.len()
        )));
    }
    let n = samples.len() - lag;
    let r = pearson(&samples[..n], &samples[lag..])?;
    Ok(CorrelationReport { lag, r, n })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_series() {
        let x: Vec<f64> = (1..=50).map(f64::from).collect();
        let r = lag_correlation(&x, 1).unwrap();
        assert!((r.r - 1.0).abs() < 1e-12);
        assert_eq!(r.n, 49);
    }

    #[test]
    fn alternating_series() {
        let x: Vec<f64> = (0..100).map(|i| (i % 2) as f64).collect();
        let r = lag_correlation(&x, 1).unwrap();
        assert!((r.r + 1.0).abs() < 1e-12);
    }

    #[test]
    fn too_short() {
        assert!(matches!(
            lag_correlation(&[0.1, 0.2, 0.3], 1),
            Err(Error::InsufficientSample(_))
        ));
        assert!(lag_correlation(&[0.1, 0.2, 0.3, 0.4], 1).is_ok());
        assert!(lag_correlation(&[0.1, 0.2, 0.3, 0.4], 0).is_err());
    }
}
