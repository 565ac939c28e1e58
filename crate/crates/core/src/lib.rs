//! Building blocks for reproducible Monte Carlo simulation and for auditing
//! the pseudo-random generators that drive it.
//!
//! - [`rng`]: seedable MT19937, RANDU and MINSTD generators with exact
//!   integer state, word-to-real conversions, skip-ahead and periods.
//! - [`special`]: log-gamma, incomplete gamma, chi-square and normal
//!   distribution functions.
//! - [`battery`]: histograms, chi-square uniformity and serial tests, lag
//!   correlation and scatter export.
//! - [`engine`]: inverse-transform samplers, summary statistics, period
//!   budgets, replication runs and manifests.
//!
//! Numerical code is generic over [`Real`] (`f32` or `f64`); the `*64`
//! aliases below name the double-precision instantiations.

pub mod battery;
pub mod engine;
pub mod error;
pub mod rng;
mod scalar;
pub mod special;

pub use error::{Error, Result};
pub use scalar::Real;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub type Probability64 = special::Probability<f64>;
pub type Probability32 = special::Probability<f32>;
pub type Histogram64 = battery::Histogram<f64>;
pub type ChiSquareReport64 = battery::ChiSquareReport<f64>;
pub type CorrelationReport64 = battery::CorrelationReport<f64>;
pub type SummaryStats64 = engine::SummaryStats<f64>;
pub type SummaryStats32 = engine::SummaryStats<f32>;
pub type Distribution64 = engine::Distribution<f64>;
pub type SimulationOutcome64 = engine::SimulationOutcome<f64>;

/// Renders `x` with 17 significant digits in scientific notation, enough to
/// round-trip any `f64`.
pub fn format_real(x: f64) -> String {
    format!("{x:.16e}")
}

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

/// 64-bit FNV-1a hash.
pub fn fnv1a64(bytes: &[u8]) -> u64 {
    bytes
        .iter()
        .fold(FNV_OFFSET, |h, &b| (h ^ b as u64).wrapping_mul(FNV_PRIME))
}
