use serde::Serialize;

use crate::error::{Error, Result};
use crate::rng::GeneratorState;
use crate::scalar::Real;
use crate::special::{normal_inv, Probability};

/// Parameters of a supported distribution.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "law", rename_all = "lowercase")]
pub enum Law<T> {
    Uniform { a: T, b: T },
    Normal { mu: T, sigma: T },
    Exponential { lambda: T },
    Triangular { a: T, m: T, b: T },
}

/// A distribution whose parameters have been validated.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Distribution<T>(Law<T>);

impl<T: Real> Distribution<T> {
    pub fn uniform(a: T, b: T) -> Result<Self> {
        Law::Uniform { a, b }.try_into()
    }

    pub fn normal(mu: T, sigma: T) -> Result<Self> {
        Law::Normal { mu, sigma }.try_into()
    }

    pub fn exponential(lambda: T) -> Result<Self> {
        Law::Exponential { lambda }.try_into()
    }

    pub fn triangular(a: T, m: T, b: T) -> Result<Self> {
        Law::Triangular { a, m, b }.try_into()
    }

    pub fn law(&self) -> Law<T> {
        self.0
    }

    /// Inverse CDF at `u`. Normal requires `0 < u < 1`; the others accept `[0, 1)`.
    pub fn quantile(&self, u: T) -> Result<T> {
        if !(u >= T::zero() && u <= T::one()) {
            return Err(Error::Domain(format!("quantile requires u in [0, 1], got {u}")));
        }
        Ok(match self.0 {
            Law::Uniform { a, b } => a + (b - a) * u,
            Law::Normal { mu, sigma } => mu + sigma * normal_inv(Probability::new(u)?)?,
            Law::Exponential { lambda } => -(T::one() - u).ln() / lambda,
            Law::Triangular { a, m, b } => {
                let width = b - a;
                let fc = (m - a) / width;
                if u < fc {
                    a + (u * width * (m - a)).sqrt()
                } else {
                    b - ((T::one() - u) * width * (b - m)).sqrt()
                }
            }
        })
    }
}

impl<T: Real> TryFrom<Law<T>> for Distribution<T> {
    type Error = Error;

    fn try_from(law: Law<T>) -> Result<Self> {
        let finite = |vals: &[T]| vals.iter().all(|v| v.is_finite());
        let ok = match law {
            Law::Uniform { a, b } => finite(&[a, b]) && b > a,
            Law::Normal { mu, sigma } => finite(&[mu, sigma]) && sigma > T::zero(),
            Law::Exponential { lambda } => finite(&[lambda]) && lambda > T::zero(),
            Law::Triangular { a, m, b } => finite(&[a, m, b]) && a <= m && m <= b && a < b,
        };
        if ok {
            Ok(Self(law))
        } else {
            Err(Error::InvalidParameter(format!("invalid distribution parameters {law:?}")))
        }
    }
}

/// Draws one variate by inverse transform; consumes exactly one word.
///
/// Normal sampling uses an open-interval variate so the quantile is finite;
/// the other laws use a half-open one, which keeps `1 - u > 0`.
pub fn sample<T: Real>(state: &mut GeneratorState, dist: &Distribution<T>) -> T {
    let u = match dist.0 {
        Law::Normal { .. } => state.next_open_unit::<T>(),
        _ => state.next_unit::<T>(),
    };
    dist.quantile(u).expect("unit variate lies inside the quantile domain")
}
