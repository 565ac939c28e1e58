use super::gamma::{gamma_p, gamma_q, ln_gamma};
use super::normal::normal_inv;
use super::Probability;
use crate::error::{Error, Result};
use crate::scalar::Real;

const MAX_ROOT_ITERATIONS: usize = 400;

fn check_args<T: Real>(x: T, df: u32) -> Result<()> {
    if df == 0 {
        return Err(Error::Domain("chi-square requires df >= 1".into()));
    }
    if x.is_nan() || x < T::zero() {
        return Err(Error::Domain(format!("chi-square requires x >= 0, got {x}")));
    }
    Ok(())
}

/// Upper-tail probability `P(X > x)` for `X ~ χ²(df)`.
pub fn chi_square_sf<T: Real>(x: T, df: u32) -> Result<Probability<T>> {
    check_args(x, df)?;
    let half = T::lit(0.5);
    Ok(Probability::clamped(gamma_q(T::from_count(df as u64) * half, x * half)?))
}

/// Lower-tail probability `P(X <= x)`.
pub fn chi_square_cdf<T: Real>(x: T, df: u32) -> Result<Probability<T>> {
    check_args(x, df)?;
    let half = T::lit(0.5);
    Ok(Probability::clamped(gamma_p(T::from_count(df as u64) * half, x * half)?))
}

pub fn chi_square_pdf<T: Real>(x: T, df: u32) -> Result<T> {
    check_args(x, df)?;
    let k = T::from_count(df as u64) * T::lit(0.5);
    if x == T::zero() {
        return Ok(match df {
            1 => T::infinity(),
            2 => T::lit(0.5),
            _ => T::zero(),
        });
    }
    let ln_pdf = (k - T::one()) * x.ln() - x * T::lit(0.5) - k * T::LN_2() - ln_gamma(k)?;
    Ok(ln_pdf.exp())
}

/// The `x` with `chi_square_sf(x, df) = alpha`, i.e. the critical value at
/// significance `alpha`.
///
/// Newton iteration from the Wilson–Hilferty approximation, falling back to
/// bisection whenever a step leaves the current bracket.
pub fn chi_square_inv_sf<T: Real>(alpha: Probability<T>, df: u32) -> Result<T> {
    if df == 0 {
        return Err(Error::Domain("chi-square requires df >= 1".into()));
    }
    if !alpha.is_interior() {
        return Err(Error::Domain(format!(
            "chi-square quantile requires 0 < alpha < 1, got {alpha}"
        )));
    }
    let a = alpha.value();
    let k = T::from_count(df as u64);
    let sf = |x: T| chi_square_sf(x, df).map(Probability::value);

    let z = normal_inv(alpha.complement())?;
    let h = T::lit(2.0) / (T::lit(9.0) * k);
    let v = T::one() - h + z * h.sqrt();
    let guess = k * v * v * v;

    // Bracket: sf(lo) > alpha >= sf(hi).
    let mut lo = T::zero();
    let mut hi = guess.max(k).max(T::one());
    while sf(hi)? > a {
        lo = hi;
        hi = hi * T::lit(2.0);
        if hi.is_infinite() {
            return Err(Error::Domain(format!("no chi-square quantile for alpha {a}")));
        }
    }
    let mut x = if guess > lo && guess < hi {
        guess
    } else {
        (lo + hi) * T::lit(0.5)
    };

    for _ in 0..MAX_ROOT_ITERATIONS {
        let f = sf(x)? - a;
        if f == T::zero() {
            return Ok(x);
        }
        if f > T::zero() {
            lo = x;
        } else {
            hi = x;
        }
        let pdf = chi_square_pdf(x, df)?;
        let newton = x + f / pdf;
        let next = if pdf > T::zero() && newton.is_finite() && newton > lo && newton < hi {
            newton
        } else {
            (lo + hi) * T::lit(0.5)
        };
        let tol = T::lit(4.0) * T::epsilon() * next.abs().max(T::min_positive_value());
        if (next - x).abs() <= tol || hi - lo <= tol {
            return Ok(next);
        }
        x = next;
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: f64) -> Probability<f64> {
        Probability::new(v).unwrap()
    }

    #[test]
    fn sf_at_zero_is_one() {
        assert_eq!(chi_square_sf(0.0, 9).unwrap().value(), 1.0);
    }

    #[test]
    fn df_two_is_exponential() {
        for x in [0.1, 1.0, 3.0, 20.0] {
            let sf = chi_square_sf(x, 2).unwrap().value();
            assert!((sf - (-x / 2.0f64).exp()).abs() < 1e-15);
        }
        let median = chi_square_inv_sf(p(0.5), 2).unwrap();
        assert!((median - 2.0 * std::f64::consts::LN_2).abs() < 1e-12);
    }

    #[test]
    fn critical_value_nine_df() {
        let crit = chi_square_inv_sf(p(0.05), 9).unwrap();
        assert!((crit - 16.919).abs() < 1e-3, "{crit}");
    }

    #[test]
    fn inverse_domain() {
        assert!(chi_square_inv_sf(p(0.0), 3).is_err());
        assert!(chi_square_inv_sf(p(1.0), 3).is_err());
        assert!(chi_square_inv_sf(p(0.5), 0).is_err());
        assert!(chi_square_sf(-1.0, 3).is_err());
    }

    #[test]
    fn pdf_at_origin() {
        assert!(chi_square_pdf(0.0f64, 1).unwrap().is_infinite());
        assert_eq!(chi_square_pdf(0.0, 2).unwrap(), 0.5);
        assert_eq!(chi_square_pdf(0.0, 5).unwrap(), 0.0);
    }

    #[test]
    fn single_precision_is_usable() {
        let crit: f32 = chi_square_inv_sf(Probability::new(0.05f32).unwrap(), 9).unwrap();
        assert!((crit - 16.919).abs() < 1e-2);
    }
}
