use super::gamma::gamma_q;
use super::Probability;
use crate::error::{Error, Result};
use crate::scalar::Real;

// Rational approximation of the lower-tail quantile (relative error ~1e-9),
// used as the starting point for Halley refinement.
const A: [f64; 6] = [
    -3.969_683_028_665_376e1,
    2.209_460_984_245_205e2,
    -2.759_285_104_469_687e2,
    1.383_577_518_672_69e2,
    -3.066_479_806_614_716e1,
    2.506_628_277_459_239,
];
const B: [f64; 5] = [
    -5.447_609_879_822_406e1,
    1.615_858_368_580_409e2,
    -1.556_989_798_598_866e2,
    6.680_131_188_771_972e1,
    -1.328_068_155_288_572e1,
];
const C: [f64; 6] = [
    -7.784_894_002_430_293e-3,
    -3.223_964_580_411_365e-1,
    -2.400_758_277_161_838,
    -2.549_732_539_343_734,
    4.374_664_141_464_968,
    2.938_163_982_698_783,
];
const D: [f64; 4] = [
    7.784_695_709_041_462e-3,
    3.224_671_290_700_398e-1,
    2.445_134_137_142_996,
    3.754_408_661_907_416,
];
const P_LOW: f64 = 0.02425;
const HALLEY_STEPS: usize = 2;

/// Standard normal CDF, `Φ(z) = Q(1/2, z²/2) / 2` for `z < 0`.
pub fn normal_cdf<T: Real>(z: T) -> Result<Probability<T>> {
    if z.is_nan() {
        return Err(Error::Domain("normal_cdf of NaN".into()));
    }
    Ok(Probability::clamped(phi(z)?))
}

fn phi<T: Real>(z: T) -> Result<T> {
    if z.is_infinite() {
        return Ok(if z > T::zero() { T::one() } else { T::zero() });
    }
    let half = T::lit(0.5);
    let tail = half * gamma_q(half, z * z * half)?;
    Ok(if z < T::zero() { tail } else { T::one() - tail })
}

/// Standard normal quantile for `0 < p < 1`.
pub fn normal_inv<T: Real>(p: Probability<T>) -> Result<T> {
    if !p.is_interior() {
        return Err(Error::Domain(format!("normal_inv requires 0 < p < 1, got {p}")));
    }
    let p = p.value();
    let half = T::lit(0.5);
    // Work in the lower half; 1 - p is exact for p in [0.5, 1).
    let (q, upper) = if p > half { (T::one() - p, true) } else { (p, false) };
    let mut x = lower_guess(q);
    let sqrt_two_pi = (T::lit(2.0) * T::PI()).sqrt();
    for _ in 0..HALLEY_STEPS {
        let e = phi(x)? - q;
        let u = e * sqrt_two_pi * (x * x * half).exp();
        if !u.is_finite() {
            break;
        }
        x = x - u / (T::one() + x * u * half);
    }
    Ok(if upper { -x } else { x })
}

fn poly<T: Real>(coef: &[f64], x: T) -> T {
    coef.iter().fold(T::zero(), |acc, &c| acc * x + T::lit(c))
}

fn lower_guess<T: Real>(q: T) -> T {
    let half = T::lit(0.5);
    if q == half {
        return T::zero();
    }
    if q < T::lit(P_LOW) {
        let r = (T::lit(-2.0) * q.ln()).sqrt();
        poly(&C, r) / (poly(&D, r) * r + T::one())
    } else {
        let s = q - half;
        let r = s * s;
        poly(&A, r) * s / (poly(&B, r) * r + T::one())
    }
}
