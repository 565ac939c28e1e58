//! Built-in simulation models and the registry used to rebuild models
//! from manifests.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::rng::{GeneratorState, RealConversion};
use crate::scalar::Real;

/// One replication of a stochastic model.
pub trait Model<T>: Sync {
    fn id(&self) -> &str;

    /// Parameters recorded in manifests; enough to rebuild the model.
    fn params(&self) -> BTreeMap<String, f64> {
        BTreeMap::new()
    }

    /// Smallest usable `draws` budget.
    fn min_draws(&self) -> u64 {
        0
    }

    /// Runs one replication using at most `draws` words from `rng`.
    fn replicate(&self, rng: &mut GeneratorState, draws: u64, conv: RealConversion) -> T;
}

/// Quarter-circle hit fraction times four; each point takes two words.
#[derive(Debug, Clone, Copy, Default)]
pub struct PiEstimator;

impl<T: Real> Model<T> for PiEstimator {
    fn id(&self) -> &str {
        "pi"
    }

    fn min_draws(&self) -> u64 {
        2
    }

    fn replicate(&self, rng: &mut GeneratorState, draws: u64, conv: RealConversion) -> T {
        let points = draws / 2;
        let mut hits = 0u64;
        for _ in 0..points {
            let x: T = rng.next_real(conv);
            let y: T = rng.next_real(conv);
            if x * x + y * y <= T::one() {
                hits += 1;
            }
        }
        T::lit(4.0) * T::from_count(hits) / T::from_count(points)
    }
}

/// Mean of `draws` unit variates; true value one half.
#[derive(Debug, Clone, Copy, Default)]
pub struct UniformMean;

impl<T: Real> Model<T> for UniformMean {
    fn id(&self) -> &str {
        "uniform-mean"
    }

    fn min_draws(&self) -> u64 {
        1
    }

    fn replicate(&self, rng: &mut GeneratorState, draws: u64, conv: RealConversion) -> T {
        let mut sum = super::summary::CompensatedSum::default();
        for _ in 0..draws {
            sum.add(rng.next_real::<T>(conv));
        }
        sum.value() / T::from_count(draws)
    }
}

/// Ignores the generator and returns a fixed value.
#[derive(Debug, Clone, Copy)]
pub struct Constant<T>(pub T);

impl<T: Real> Model<T> for Constant<T> {
    fn id(&self) -> &str {
        "constant"
    }

    fn params(&self) -> BTreeMap<String, f64> {
        BTreeMap::from([("value".to_string(), self.0.to_f64().unwrap_or(f64::NAN))])
    }

    fn replicate(&self, _rng: &mut GeneratorState, _draws: u64, _conv: RealConversion) -> T {
        self.0
    }
}

/// Adapts a closure into a [`Model`].
pub struct FnModel<F> {
    id: String,
    f: F,
}

impl<F> FnModel<F> {
    pub fn new(id: impl Into<String>, f: F) -> Self {
        Self { id: id.into(), f }
    }
}

impl<T, F> Model<T> for FnModel<F>
where
    F: Fn(&mut GeneratorState, u64, RealConversion) -> T + Sync,
{
    fn id(&self) -> &str {
        &self.id
    }

    fn replicate(&self, rng: &mut GeneratorState, draws: u64, conv: RealConversion) -> T {
        (self.f)(rng, draws, conv)
    }
}

type Builder = fn(&BTreeMap<String, f64>) -> Result<Box<dyn Model<f64>>>;

/// Maps model identifiers to constructors.
pub struct ModelRegistry {
    builders: BTreeMap<String, Builder>,
}

impl ModelRegistry {
    pub fn empty() -> Self {
        Self {
            builders: BTreeMap::new(),
        }
    }

    /// `pi`, `uniform-mean` and `constant`.
    pub fn builtin() -> Self {
        let mut r = Self::empty();
        r.register("pi", |_| Ok(Box::new(PiEstimator)));
        r.register("uniform-mean", |_| Ok(Box::new(UniformMean)));
        r.register("constant", |params| {
            let value = params
                .get("value")
                .copied()
                .ok_or_else(|| Error::InvalidParameter("constant model needs `value`".into()))?;
            Ok(Box::new(Constant(value)))
        });
        r
    }

    pub fn register(&mut self, id: impl Into<String>, builder: Builder) {
        self.builders.insert(id.into(), builder);
    }

    pub fn contains(&self, id: &str) -> bool {
        self.builders.contains_key(id)
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.builders.keys().map(String::as_str)
    }

    pub fn build(&self, id: &str, params: &BTreeMap<String, f64>) -> Result<Box<dyn Model<f64>>> {
        let builder = self
            .builders
            .get(id)
            .ok_or_else(|| Error::UnknownModel(id.to_string()))?;
        builder(params)
    }
}

impl Default for ModelRegistry {
    fn default() -> Self {
        Self::builtin()
    }
}
