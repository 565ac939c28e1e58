use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

/// Cycle length of a generator, exact when it is small enough to matter.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PeriodDescriptor {
    #[serde(serialize_with = "decimal_opt")]
    exact: Option<BigUint>,
    log2_period: f64,
}

impl PeriodDescriptor {
    pub fn from_exact(period: BigUint) -> Self {
        assert!(period > BigUint::from(1u8), "period must exceed one");
        let log2_period = log2_big(&period);
        Self {
            exact: Some(period),
            log2_period,
        }
    }

    /// A period known only on the log2 scale, e.g. `2^19937 - 1`.
    pub fn from_log2(log2_period: f64) -> Self {
        assert!(log2_period > 0.0 && log2_period.is_finite());
        Self {
            exact: None,
            log2_period,
        }
    }

    pub fn exact(&self) -> Option<&BigUint> {
        self.exact.as_ref()
    }

    pub fn log2_period(&self) -> f64 {
        self.log2_period
    }
}

fn decimal_opt<S: Serializer>(v: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.serialize_some(&v.to_string()),
        None => s.serialize_none(),
    }
}

/// log2 of an arbitrary-precision integer, accurate to f64 precision.
pub(crate) fn log2_big(n: &BigUint) -> f64 {
    let bits = n.bits();
    if bits <= 64 {
        return n.to_u64().map(|v| (v as f64).log2()).unwrap_or(f64::NAN);
    }
    // Keep the top 64 bits and add the dropped exponent back.
    let shift = bits - 64;
    let top = (n >> shift).to_u64().unwrap_or(u64::MAX);
    (top as f64).log2() + shift as f64
}
