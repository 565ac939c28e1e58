//! Seedable deterministic generators with exact integer state.
//!
//! Three algorithms are available: the 32-bit Mersenne Twister and two
//! historical multiplicative congruential generators (RANDU and MINSTD).
//! A [`GeneratorState`] is fully determined by its kind, its seed and the
//! number of words drawn so far.

mod congruential;
mod mt19937;
mod period;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Real;

pub use congruential::Congruential;
pub use mt19937::Mt19937;
pub use period::PeriodDescriptor;

pub(crate) use period::log2_big;

/// Seed of the reference Mersenne Twister initialization.
pub const DEFAULT_SEED: u32 = 5489;

const TWO_POW_32: f64 = 4_294_967_296.0;
const TWO_POW_31: f64 = 2_147_483_648.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GeneratorKind {
    Mt19937,
    Randu,
    Minstd,
}

impl GeneratorKind {
    pub const ALL: [GeneratorKind; 3] = [Self::Mt19937, Self::Randu, Self::Minstd];

    pub fn name(self) -> &'static str {
        match self {
            Self::Mt19937 => "mt19937",
            Self::Randu => "randu",
            Self::Minstd => "minstd",
        }
    }

    /// Width of the raw output word.
    pub fn output_bits(self) -> u32 {
        match self {
            Self::Mt19937 => 32,
            Self::Randu | Self::Minstd => 31,
        }
    }

    pub fn is_congruential(self) -> bool {
        !matches!(self, Self::Mt19937)
    }

    /// Conversion used when none is requested: `u / 2^32` for the twister,
    /// `u / 2^31` for the 31-bit congruential generators.
    pub fn default_conversion(self) -> RealConversion {
        if self.is_congruential() {
            RealConversion::Residue31
        } else {
            RealConversion::HalfOpen
        }
    }

    pub fn validate_seed(self, seed: u32) -> Result<()> {
        let reason = match self {
            Self::Mt19937 => None,
            Self::Randu if seed == 0 => Some("seed must be nonzero"),
            Self::Randu if seed.is_multiple_of(2) => Some("seed must be odd"),
            Self::Randu if seed as u64 >= congruential::RANDU_MODULUS => {
                Some("seed must be below 2^31")
            }
            Self::Randu => None,
            Self::Minstd if seed == 0 || seed as u64 >= congruential::MINSTD_MODULUS => {
                Some("seed must lie in 1..=2^31-2")
            }
            Self::Minstd => None,
        };
        match reason {
            Some(reason) => Err(Error::InvalidSeed {
                kind: self.name(),
                seed,
                reason,
            }),
            None => Ok(()),
        }
    }

    pub fn period(self) -> PeriodDescriptor {
        period_of(self)
    }
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GeneratorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "mt19937" | "mt" | "mtwister" => Ok(Self::Mt19937),
            "randu" => Ok(Self::Randu),
            "minstd" | "lcg_minstd" | "lcg-minstd" => Ok(Self::Minstd),
            other => Err(Error::InvalidParameter(format!("unknown generator `{other}`"))),
        }
    }
}

/// Mapping from a raw output word to a real number in the unit interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RealConversion {
    /// `u / (2^32 - 1)`, range `[0, 1]`.
    ClosedClosed,
    /// `u / 2^32`, range `[0, 1)`.
    HalfOpen,
    /// `(u + 0.5) / 2^32`, range `(0, 1)`.
    OpenOpen,
    /// `v / 2^31` on a 31-bit word `v`, range `[0, 1)`. The 31-bit residue of
    /// a congruential generator is used as is; a 32-bit word is shifted right
    /// by one first.
    Residue31,
}

impl RealConversion {
    pub const ALL: [RealConversion; 4] = [
        Self::ClosedClosed,
        Self::HalfOpen,
        Self::OpenOpen,
        Self::Residue31,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::ClosedClosed => "closed-closed",
            Self::HalfOpen => "half-open",
            Self::OpenOpen => "open-open",
            Self::Residue31 => "residue31",
        }
    }

    /// Converts a word produced by a generator with `bits`-wide output.
    pub fn apply<T: Real>(self, word: u32, bits: u32) -> T {
        let w = word as f64;
        match self {
            Self::ClosedClosed => T::lit(w / (TWO_POW_32 - 1.0)),
            Self::HalfOpen => below_one(w / TWO_POW_32),
            Self::OpenOpen => below_one((w + 0.5) / TWO_POW_32),
            Self::Residue31 => {
                let v = if bits == 32 { word >> 1 } else { word & 0x7fff_ffff };
                below_one(v as f64 / TWO_POW_31)
            }
        }
    }

    /// Whether `x` lies in this conversion's declared range.
    pub fn contains<T: Real>(self, x: T) -> bool {
        let (zero, one) = (T::zero(), T::one());
        match self {
            Self::ClosedClosed => x >= zero && x <= one,
            Self::HalfOpen | Self::Residue31 => x >= zero && x < one,
            Self::OpenOpen => x > zero && x < one,
        }
    }
}

impl fmt::Display for RealConversion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RealConversion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "closed-closed" | "closedclosed" | "closed" | "real1" => Ok(Self::ClosedClosed),
            "half-open" | "halfopen" | "real2" => Ok(Self::HalfOpen),
            "open-open" | "openopen" | "open" | "real3" => Ok(Self::OpenOpen),
            "residue31" | "31bit" | "31-bit" => Ok(Self::Residue31),
            other => Err(Error::InvalidParameter(format!("unknown conversion `{other}`"))),
        }
    }
}

// Narrow scalar types can round values just below one up to one.
#[inline]
fn below_one<T: Real>(x: f64) -> T {
    let v = T::lit(x);
    if v >= T::one() {
        T::one_below()
    } else {
        v
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Engine {
    Twister(Box<Mt19937>),
    Congruential(Congruential),
}

/// A seeded generator and its position in the output stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorState {
    kind: GeneratorKind,
    seed: u32,
    draws: u64,
    engine: Engine,
}

impl GeneratorState {
    pub fn new(kind: GeneratorKind, seed: u32) -> Result<Self> {
        kind.validate_seed(seed)?;
        let engine = match kind {
            GeneratorKind::Mt19937 => Engine::Twister(Box::new(Mt19937::new(seed))),
            GeneratorKind::Randu => Engine::Congruential(Congruential::randu(seed)),
            GeneratorKind::Minstd => Engine::Congruential(Congruential::minstd(seed)),
        };
        Ok(Self {
            kind,
            seed,
            draws: 0,
            engine,
        })
    }

    pub fn kind(&self) -> GeneratorKind {
        self.kind
    }

    pub fn seed(&self) -> u32 {
        self.seed
    }

    /// Number of 32-bit words produced (or skipped) so far.
    pub fn draws(&self) -> u64 {
        self.draws
    }

    /// The internal state words: 624 twister words followed by the output
    /// index, or the single congruential residue.
    pub fn state_words(&self) -> Vec<u32> {
        match &self.engine {
            Engine::Twister(mt) => {
                let mut v = Vec::with_capacity(mt19937::STATE_WORDS + 1);
                v.extend_from_slice(mt.words());
                v.push(mt.index() as u32);
                v
            }
            Engine::Congruential(c) => vec![c.word()],
        }
    }

    #[inline]
    pub fn next_u32(&mut self) -> u32 {
        self.draws += 1;
        match &mut self.engine {
            Engine::Twister(mt) => mt.next_u32(),
            Engine::Congruential(c) => c.next_u32(),
        }
    }

    #[inline]
    pub fn next_real<T: Real>(&mut self, conv: RealConversion) -> T {
        let bits = self.kind.output_bits();
        conv.apply(self.next_u32(), bits)
    }

    /// `[0, 1)` variate scaled by the generator's native word width.
    #[inline]
    pub fn next_unit<T: Real>(&mut self) -> T {
        let bits = self.kind.output_bits();
        let w = self.next_u32() as f64;
        below_one(w / 2f64.powi(bits as i32))
    }

    /// `(0, 1)` variate scaled by the generator's native word width.
    #[inline]
    pub fn next_open_unit<T: Real>(&mut self) -> T {
        let bits = self.kind.output_bits();
        let w = self.next_u32() as f64;
        below_one((w + 0.5) / 2f64.powi(bits as i32))
    }

    /// Advances the stream by `n` words; equivalent to `n` discarded
    /// `next_u32` calls.
    pub fn skip(&mut self, n: u64) {
        match &mut self.engine {
            Engine::Twister(mt) => mt.discard(n),
            Engine::Congruential(c) => c.discard(n),
        }
        self.draws += n;
    }

    pub fn fill_u32(&mut self, out: &mut [u32]) {
        for slot in out {
            *slot = self.next_u32();
        }
    }
}

pub fn new_generator(kind: GeneratorKind, seed: u32) -> Result<GeneratorState> {
    GeneratorState::new(kind, seed)
}

pub fn period_of(kind: GeneratorKind) -> PeriodDescriptor {
    match kind {
        GeneratorKind::Mt19937 => PeriodDescriptor::from_log2(19937.0),
        GeneratorKind::Randu => PeriodDescriptor::from_exact(BigUint::from(1u64 << 29)),
        GeneratorKind::Minstd => {
            PeriodDescriptor::from_exact(BigUint::from(congruential::MINSTD_MODULUS - 1))
        }
    }
}
