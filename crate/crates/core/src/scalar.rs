use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating-point scalar the numerical routines are generic over: `f32` or `f64`.
///
/// Accuracy targets quoted in the docs refer to `f64`; `f32` instantiations
/// are accurate to roughly single precision.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Lossy conversion from an `f64` literal.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    /// Lossy conversion from a count.
    #[inline]
    fn from_count(n: u64) -> Self {
        Self::from_u64(n).expect("count representable")
    }

    /// The largest value strictly below one.
    #[inline]
    fn one_below() -> Self {
        Self::one() - Self::epsilon() / (Self::one() + Self::one())
    }
}

impl Real for f32 {}
impl Real for f64 {}
