use serde::Serialize;

use super::{check_unit_samples, unit_bin};
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Equal-width bin counts over `[lower, upper]`.
///
/// Bins are half-open `[l, u)` except the last, which also holds `upper`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Histogram<T> {
    pub bin_count: usize,
    pub lower: T,
    pub upper: T,
    pub counts: Vec<u64>,
    pub total: u64,
}

impl<T: Real> Histogram<T> {
    /// Upper edge of each bin, `lower + (i + 1) / bins * (upper - lower)`.
    pub fn upper_edges(&self) -> Vec<T> {
        let bins = T::from_count(self.bin_count as u64);
        (1..=self.bin_count)
            .map(|i| {
                if i == self.bin_count {
                    self.upper
                } else {
                    self.lower + T::from_count(i as u64) / bins * (self.upper - self.lower)
                }
            })
            .collect()
    }
}

/// Bins unit-interval samples into `bins` equal cells.
pub fn histogram<T: Real>(samples: &[T], bins: usize) -> Result<Histogram<T>> {
    if bins < 2 {
        return Err(Error::InvalidParameter(format!("histogram needs at least 2 bins, got {bins}")));
    }
    check_unit_samples(samples)?;
    let mut counts = vec![0u64; bins];
    for &v in samples {
        counts[unit_bin(v, bins)] += 1;
    }
    Ok(Histogram {
        bin_count: bins,
        lower: T::zero(),
        upper: T::one(),
        counts,
        total: samples.len() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn direct_binning() {
        let h = histogram(&[0.05, 0.15, 0.95], 10).unwrap();
        assert_eq!(h.counts, vec![1, 1, 0, 0, 0, 0, 0, 0, 0, 1]);
        assert_eq!(h.total, 3);
    }

    #[test]
    fn upper_bound_goes_to_last_bin() {
        let h = histogram(&[1.0f32], 10).unwrap();
        assert_eq!(h.counts[9], 1);
    }

    #[test]
    fn lower_edges_are_inclusive() {
        let h = histogram(&[0.0, 0.5, 0.25], 4).unwrap();
        assert_eq!(h.counts, vec![1, 1, 1, 0]);
    }

    #[test]
    fn errors() {
        assert_eq!(histogram::<f64>(&[], 10), Err(Error::EmptySample));
        assert!(matches!(
            histogram(&[0.5, 1.5], 10),
            Err(Error::OutOfRangeSample { index: 1, .. })
        ));
        assert!(matches!(histogram(&[f64::NAN], 10), Err(Error::OutOfRangeSample { .. })));
        assert!(histogram(&[0.5], 1).is_err());
    }

    #[test]
    fn edges() {
        let h = histogram(&[0.5f64], 10).unwrap();
        let edges = h.upper_edges();
        assert_eq!(edges.len(), 10);
        assert!((edges[0] - 0.1).abs() < 1e-15);
        assert_eq!(edges[9], 1.0);
    }
}
