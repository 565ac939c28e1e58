//! Special functions behind the test statistics and the samplers.

mod chi_square;
mod gamma;
mod normal;

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::Real;

pub use chi_square::{chi_square_cdf, chi_square_inv_sf, chi_square_pdf, chi_square_sf};
pub use gamma::{gamma_p, gamma_q, ln_gamma};
pub use normal::{normal_cdf, normal_inv};

/// A validated probability in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Probability<T>(T);

impl<T: Real> Probability<T> {
    pub fn new(value: T) -> Result<Self> {
        if value.is_nan() || value < T::zero() || value > T::one() {
            return Err(Error::Domain(format!("probability {value} outside [0, 1]")));
        }
        Ok(Self(value))
    }

    // Callers guarantee the range; used for values clamped by construction.
    pub(crate) fn clamped(value: T) -> Self {
        debug_assert!(!value.is_nan());
        Self(value.max(T::zero()).min(T::one()))
    }

    pub fn value(self) -> T {
        self.0
    }

    /// `1 - p`.
    pub fn complement(self) -> Self {
        Self(T::one() - self.0)
    }

    /// Whether `0 < p < 1`.
    pub fn is_interior(self) -> bool {
        self.0 > T::zero() && self.0 < T::one()
    }
}

impl<T: Real> fmt::Display for Probability<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl<T: Serialize> Serialize for Probability<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl TryFrom<f64> for Probability<f64> {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Self::new(value)
    }
}
