//! Uniformity and independence checks for generator output, plus the data
//! exports used for visual inspection.

mod chi_square;
mod correlation;
mod export;
mod histogram;

pub use chi_square::{
    chi_square_from_counts, chi_square_uniformity, serial_test, ChiSquareReport, Verdict,
    MIN_EXPECTED_COUNT,
};
pub use correlation::{lag_correlation, CorrelationReport};
pub use export::{export_scatter, write_histogram_csv, write_scatter_csv};
pub use histogram::{histogram, Histogram};

use crate::error::{Error, Result};
use crate::scalar::Real;

pub(crate) fn check_unit_samples<T: Real>(samples: &[T]) -> Result<()> {
    if samples.is_empty() {
        return Err(Error::EmptySample);
    }
    for (index, &v) in samples.iter().enumerate() {
        if !(v >= T::zero() && v <= T::one()) {
            return Err(Error::OutOfRangeSample {
                index,
                value: v.to_f64().unwrap_or(f64::NAN),
            });
        }
    }
    Ok(())
}

/// Equal-width cell of `v` in `[0, 1]` with `bins` cells; `1.0` lands in the last.
#[inline]
pub(crate) fn unit_bin<T: Real>(v: T, bins: usize) -> usize {
    let idx = (v * T::from_count(bins as u64)).floor().to_usize().unwrap_or(0);
    idx.min(bins - 1)
}
