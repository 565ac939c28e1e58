use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::special::{normal_inv, Probability};

/// Smallest sample for which the normal-approximation interval is offered.
pub const MIN_CI_SAMPLE: u64 = 30;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SummaryStats<T> {
    pub n: u64,
    pub mean: T,
    /// Sample standard deviation (`n - 1` denominator); zero when `n == 1`.
    pub stdev: T,
    pub min: T,
    pub max: T,
    pub median: T,
    /// Most frequent repeated value, smallest on ties.
    pub mode: Option<T>,
}

/// Neumaier-compensated running sum.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct CompensatedSum<T> {
    sum: T,
    carry: T,
}

impl<T: Real> CompensatedSum<T> {
    pub(crate) fn add(&mut self, x: T) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry = self.carry + ((self.sum - t) + x);
        } else {
            self.carry = self.carry + ((x - t) + self.sum);
        }
        self.sum = t;
    }

    pub(crate) fn value(&self) -> T {
        self.sum + self.carry
    }
}

pub fn summarize<T: Real>(samples: &[T]) -> Result<SummaryStats<T>> {
    if samples.is_empty() {
        return Err(Error::EmptySample);
    }
    // One pass: compensated sum for the mean, Welford updates for the
    // centred sum of squares.
    let mut sum = CompensatedSum::default();
    let mut running_mean = T::zero();
    let mut m2 = T::zero();
    let mut min = T::infinity();
    let mut max = T::neg_infinity();
    for (i, &x) in samples.iter().enumerate() {
        if !x.is_finite() {
            return Err(Error::NonFiniteSample(i));
        }
        sum.add(x);
        let k = T::from_count(i as u64 + 1);
        let delta = x - running_mean;
        running_mean = running_mean + delta / k;
        m2 = m2 + delta * (x - running_mean);
        min = min.min(x);
        max = max.max(x);
    }
    let n = samples.len() as u64;
    let mean = sum.value() / T::from_count(n);
    let stdev = if n > 1 {
        (m2.max(T::zero()) / T::from_count(n - 1)).sqrt()
    } else {
        T::zero()
    };

    let mut sorted = samples.to_vec();
    sorted.sort_unstable_by(|a, b| a.partial_cmp(b).expect("finite"));
    let mid = sorted.len() / 2;
    let median = if sorted.len() % 2 == 1 {
        sorted[mid]
    } else {
        (sorted[mid - 1] + sorted[mid]) / T::lit(2.0)
    };

    Ok(SummaryStats {
        n,
        mean,
        stdev,
        min,
        max,
        median,
        mode: mode_of_sorted(&sorted),
    })
}

fn mode_of_sorted<T: Real>(sorted: &[T]) -> Option<T> {
    let mut best: Option<(T, usize)> = None;
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i + 1;
        while j < sorted.len() && sorted[j] == sorted[i] {
            j += 1;
        }
        let run = j - i;
        // Strictly greater keeps the smallest value on ties.
        if run > 1 && best.is_none_or(|(_, c)| run > c) {
            best = Some((sorted[i], run));
        }
        i = j;
    }
    best.map(|(v, _)| v)
}

/// Pearson product-moment correlation.
pub fn pearson<T: Real>(x: &[T], y: &[T]) -> Result<T> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    if x.len() < 3 {
        return Err(Error::InsufficientSample(format!(
            "correlation needs at least 3 pairs, got {}",
            x.len()
        )));
    }
    let n = T::from_count(x.len() as u64);
    let mean = |v: &[T]| {
        let mut s = CompensatedSum::default();
        v.iter().for_each(|&e| s.add(e));
        s.value() / n
    };
    let (mx, my) = (mean(x), mean(y));
    let (mut sxy, mut sxx, mut syy) = (
        CompensatedSum::default(),
        CompensatedSum::default(),
        CompensatedSum::default(),
    );
    for (&a, &b) in x.iter().zip(y) {
        let (dx, dy) = (a - mx, b - my);
        sxy.add(dx * dy);
        sxx.add(dx * dx);
        syy.add(dy * dy);
    }
    let (sxx, syy) = (sxx.value(), syy.value());
    if sxx <= T::zero() {
        return Err(Error::ZeroVariance("x"));
    }
    if syy <= T::zero() {
        return Err(Error::ZeroVariance("y"));
    }
    let r = sxy.value() / (sxx.sqrt() * syy.sqrt());
    Ok(r.max(-T::one()).min(T::one()))
}

/// Normal-approximation interval `mean ± z * stdev / sqrt(n)`.
pub fn confidence_interval<T: Real>(stats: &SummaryStats<T>, level: Probability<T>) -> Result<(T, T)> {
    if stats.n < MIN_CI_SAMPLE {
        return Err(Error::SampleTooSmall {
            n: stats.n,
            min: MIN_CI_SAMPLE,
        });
    }
    let half_width = ci_half_width(stats, level)?;
    Ok((stats.mean - half_width, stats.mean + half_width))
}

pub(crate) fn ci_half_width<T: Real>(stats: &SummaryStats<T>, level: Probability<T>) -> Result<T> {
    if !level.is_interior() {
        return Err(Error::Domain(format!("confidence level must lie in (0, 1), got {level}")));
    }
    let upper = T::one() - (T::one() - level.value()) / T::lit(2.0);
    let z = normal_inv(Probability::new(upper)?)?;
    Ok(z * stats.stdev / T::from_count(stats.n).sqrt())
}
