use serde::Serialize;

use super::{check_unit_samples, unit_bin};
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::special::{chi_square_inv_sf, chi_square_sf, Probability};

/// Smallest admissible expected count per cell.
pub const MIN_EXPECTED_COUNT: f64 = 5.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Accept,
    Reject,
}

/// Chi-square goodness-of-fit result against equal expected cell counts.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChiSquareReport<T> {
    pub observed: Vec<u64>,
    pub expected: Vec<T>,
    pub statistic: T,
    pub df: u32,
    pub alpha: Probability<T>,
    pub critical_value: T,
    pub p_value: Probability<T>,
    pub verdict: Verdict,
}

/// Tests observed cell counts against a uniform expectation of `total / cells`.
pub fn chi_square_from_counts<T: Real>(
    observed: &[u64],
    alpha: Probability<T>,
) -> Result<ChiSquareReport<T>> {
    if observed.len() < 2 {
        return Err(Error::InvalidParameter("chi-square test needs at least 2 cells".into()));
    }
    let total: u64 = observed.iter().sum();
    let expected_count = T::from_count(total) / T::from_count(observed.len() as u64);
    if expected_count < T::lit(MIN_EXPECTED_COUNT) {
        return Err(Error::InsufficientSample(format!(
            "expected count {expected_count} per cell is below {MIN_EXPECTED_COUNT} \
             ({total} observations over {} cells)",
            observed.len()
        )));
    }
    let statistic = observed.iter().fold(T::zero(), |acc, &o| {
        let d = T::from_count(o) - expected_count;
        acc + d * d / expected_count
    });
    let df = (observed.len() - 1) as u32;
    let critical_value = chi_square_inv_sf(alpha, df)?;
    let p_value = chi_square_sf(statistic, df)?;
    let verdict = if statistic <= critical_value {
        Verdict::Accept
    } else {
        Verdict::Reject
    };
    Ok(ChiSquareReport {
        observed: observed.to_vec(),
        expected: vec![expected_count; observed.len()],
        statistic,
        df,
        alpha,
        critical_value,
        p_value,
        verdict,
    })
}

/// Chi-square uniformity test of unit-interval samples over `bins` equal cells.
pub fn chi_square_uniformity<T: Real>(
    samples: &[T],
    bins: usize,
    alpha: Probability<T>,
) -> Result<ChiSquareReport<T>> {
    let h = super::histogram(samples, bins)?;
    chi_square_from_counts(&h.counts, alpha)
}

/// Serial test: consecutive non-overlapping `dim`-tuples are binned into
/// `bins_per_dim^dim` cells and tested for uniformity.
pub fn serial_test<T: Real>(
    samples: &[T],
    dim: usize,
    bins_per_dim: usize,
    alpha: Probability<T>,
) -> Result<ChiSquareReport<T>> {
    if !(1..=3).contains(&dim) {
        return Err(Error::InvalidParameter(format!("serial test dimension must be 1..=3, got {dim}")));
    }
    if bins_per_dim < 2 {
        return Err(Error::InvalidParameter(format!(
            "serial test needs at least 2 bins per dimension, got {bins_per_dim}"
        )));
    }
    check_unit_samples(samples)?;
    let cells = bins_per_dim.pow(dim as u32);
    let tuples = samples.len() / dim;
    if (tuples as f64) < MIN_EXPECTED_COUNT * cells as f64 {
        return Err(Error::InsufficientSample(format!(
            "{tuples} tuples over {cells} cells leaves fewer than {MIN_EXPECTED_COUNT} expected per cell"
        )));
    }
    let mut counts = vec![0u64; cells];
    for tuple in samples.chunks_exact(dim) {
        let cell = tuple
            .iter()
            .fold(0usize, |acc, &v| acc * bins_per_dim + unit_bin(v, bins_per_dim));
        counts[cell] += 1;
    }
    chi_square_from_counts(&counts, alpha)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alpha(v: f64) -> Probability<f64> {
        Probability::new(v).unwrap()
    }

    #[test]
    fn uniform_counts_give_zero_statistic() {
        let r = chi_square_from_counts(&[1000u64; 10], alpha(0.05)).unwrap();
        assert_eq!(r.statistic, 0.0);
        assert_eq!(r.verdict, Verdict::Accept);
        assert_eq!(r.p_value.value(), 1.0);
    }

    #[test]
    fn everything_in_one_cell() {
        let mut observed = vec![0u64; 10];
        observed[3] = 10_000;
        let r = chi_square_from_counts(&observed, alpha(0.05)).unwrap();
        assert_eq!(r.statistic, 90_000.0);
        assert_eq!(r.verdict, Verdict::Reject);
    }

    #[test]
    fn expected_count_floor() {
        let err = chi_square_from_counts::<f64>(&[4, 4, 4, 4], alpha(0.05)).unwrap_err();
        assert!(matches!(err, Error::InsufficientSample(_)));
        assert!(chi_square_from_counts::<f64>(&[5, 5], alpha(0.05)).is_ok());
    }

    #[test]
    fn serial_rejects_bad_dimension() {
        let s = vec![0.5; 1000];
        assert!(serial_test(&s, 0, 2, alpha(0.05)).is_err());
        assert!(serial_test(&s, 4, 2, alpha(0.05)).is_err());
        assert!(serial_test(&s, 2, 1, alpha(0.05)).is_err());
        assert!(matches!(
            serial_test(&s, 3, 10, alpha(0.05)),
            Err(Error::InsufficientSample(_))
        ));
    }

    #[test]
    fn serial_depends_on_tuple_order() {
        // Pairs (low, high) only, versus the same values with pairs scrambled.
        let mut ordered = Vec::new();
        for i in 0..200 {
            let lo = (i % 10) as f64 / 20.0 + 0.01;
            ordered.push(lo);
            ordered.push(lo + 0.5);
        }
        let mut shuffled = ordered.clone();
        shuffled.sort_by(f64::total_cmp);
        let uni_a = chi_square_uniformity(&ordered, 2, alpha(0.05)).unwrap();
        let uni_b = chi_square_uniformity(&shuffled, 2, alpha(0.05)).unwrap();
        assert_eq!(uni_a, uni_b);
        let ser_a = serial_test(&ordered, 2, 2, alpha(0.05)).unwrap();
        let ser_b = serial_test(&shuffled, 2, 2, alpha(0.05)).unwrap();
        assert_eq!(ser_a.observed, vec![0, 200, 0, 0]);
        assert_eq!(ser_b.observed, vec![100, 0, 0, 100]);
    }
}
