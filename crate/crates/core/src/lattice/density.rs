//! Normalized center density and packing density, kept exact as square
//! roots of rationals until the final decimal rendering.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::Rational;

/// The nonnegative real `sqrt(square)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SqrtRational {
    square: Rational,
}

fn ln_biguint(n: &BigUint) -> f64 {
    let bits = n.bits();
    if bits <= 1000 {
        return n.to_f64().unwrap_or(f64::INFINITY).ln();
    }
    let shift = bits - 64;
    (n >> shift).to_f64().unwrap().ln() + shift as f64 * std::f64::consts::LN_2
}

fn ln_rational(x: &Rational) -> f64 {
    ln_biguint(x.numer().magnitude()) - ln_biguint(x.denom().magnitude())
}

/// Exact square root of a nonnegative rational, if it is rational.
pub fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    (&n * &n == *x.numer() && &d * &d == *x.denom()).then(|| Rational::new(n, d))
}

pub fn rational_pow(x: &Rational, e: i64) -> Rational {
    let base = if e < 0 { x.recip() } else { x.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

impl SqrtRational {
    pub fn new(square: Rational) -> Result<Self> {
        if square.is_negative() {
            return Err(Error::InvalidParams("negative square".into()));
        }
        Ok(SqrtRational { square })
    }

    pub fn from_rational(x: &Rational) -> Result<Self> {
        if x.is_negative() {
            return Err(Error::InvalidParams("negative value".into()));
        }
        Ok(SqrtRational { square: x * x })
    }

    pub fn square(&self) -> &Rational {
        &self.square
    }

    /// The value itself when it is rational.
    pub fn exact(&self) -> Option<Rational> {
        rational_sqrt(&self.square)
    }

    pub fn ln(&self) -> f64 {
        0.5 * ln_rational(&self.square)
    }

    pub fn to_f64(&self) -> f64 {
        let direct = ToPrimitive::to_f64(&self.square).map(f64::sqrt);
        match direct {
            Some(v) if v.is_finite() && v > 0.0 => v,
            _ if self.square.is_zero() => 0.0,
            _ => self.ln().exp(),
        }
    }

    /// `a/b` when rational, otherwise `sqrt(a/b)`.
    pub fn expression(&self) -> String {
        match self.exact() {
            Some(v) => v.to_string(),
            None => format!("sqrt({})", self.square),
        }
    }

    /// Correctly rounded (half-even) decimal with `sig` significant digits.
    pub fn render(&self, sig: usize) -> String {
        render_sqrt(&self.square, sig.max(1))
    }
}

impl fmt::Display for SqrtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(6))
    }
}

fn pow10(e: i64) -> Rational {
    rational_pow(&Rational::from_integer(BigInt::from(10)), e)
}

fn render_sqrt(square: &Rational, sig: usize) -> String {
    if square.is_zero() {
        return "0".into();
    }
    // decimal exponent e with 10^(2e) <= square < 10^(2e+2)
    let mut e = (0.5 * ln_rational(square) / std::f64::consts::LN_10).floor() as i64;
    while pow10(2 * e) > *square {
        e -= 1;
    }
    while pow10(2 * e + 2) <= *square {
        e += 1;
    }
    let scaled = square * pow10(2 * (sig as i64 - 1 - e));
    let (a, b) = (scaled.numer().clone(), scaled.denom().clone());
    let mut m = (&a / &b).sqrt();
    // compare sqrt(a/b) with m + 1/2
    let twice = &m * 2u32 + 1u32;
    let lhs = &a * 4u32;
    let rhs = &b * &twice * &twice;
    if lhs > rhs || (lhs == rhs && (&m % 2u32) == BigInt::one()) {
        m += 1u32;
    }
    let limit = num_traits::pow(BigInt::from(10), sig);
    if m == limit {
        m /= 10u32;
        e += 1;
    }
    let digits = m.to_string();
    debug_assert_eq!(digits.len(), sig);
    if (0..sig as i64).contains(&e) {
        let (int, frac) = digits.split_at(e as usize + 1);
        if frac.is_empty() {
            int.to_string()
        } else {
            format!("{int}.{frac}")
        }
    } else if (-5..0).contains(&e) {
        format!("0.{}{}", "0".repeat((-e - 1) as usize), digits)
    } else {
        let (lead, rest) = digits.split_at(1);
        if rest.is_empty() {
            format!("{lead}e{e}")
        } else {
            format!("{lead}.{rest}e{e}")
        }
    }
}

/// `Gamma(k / 2)` for a positive integer `k`, via `Gamma(1) = 1`,
/// `Gamma(1/2) = sqrt(pi)` and `Gamma(x + 1) = x Gamma(x)`.
pub fn gamma_half<F: Real>(k: u32) -> F {
    assert!(k > 0);
    let half = F::from_f64(0.5).unwrap();
    let (mut x, mut g) = if k.is_multiple_of(2) {
        (F::one(), F::one())
    } else {
        (half, F::from_f64(std::f64::consts::PI).unwrap().sqrt())
    };
    let target = F::from_u32(k).unwrap() * half;
    while x < target {
        g = g * x;
        x = x + F::one();
    }
    g
}

/// Packing density `delta * pi^(n/2) / Gamma(n/2 + 1)`.
pub fn density_from_normalized<F: Real>(n: usize, delta: F) -> F {
    let pi = F::from_f64(std::f64::consts::PI).unwrap();
    let half_n = F::from_usize(n).unwrap() * F::from_f64(0.5).unwrap();
    delta * pi.powf(half_n) / gamma_half::<F>(n as u32 + 2)
}

#[derive(Clone, Debug)]
pub struct DensityReport {
    pub n: usize,
    pub n_min: Rational,
    pub det: Rational,
    /// Squared packing radius `N_min / 4`.
    pub rho_squared: Rational,
    pub delta: SqrtRational,
    pub density: f64,
}

#[derive(Serialize)]
struct DensityJson {
    n: usize,
    n_min: String,
    det: String,
    rho_squared: String,
    delta_exact: String,
    delta: String,
    density: String,
}

impl DensityReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(DensityJson {
            n: self.n,
            n_min: self.n_min.to_string(),
            det: self.det.to_string(),
            rho_squared: self.rho_squared.to_string(),
            delta_exact: self.delta.expression(),
            delta: self.delta.render(7),
            density: format!("{:.6e}", self.density),
        })
        .expect("serializable")
    }
}

/// `det^(-1/2) (N_min / 4)^(n/2)`.
pub fn normalized_center_density(n: usize, n_min: &Rational, det: &Rational) -> Result<DensityReport> {
    if n == 0 || !n_min.is_positive() || !det.is_positive() {
        return Err(Error::InvalidParams(
            "density needs n >= 1, N_min > 0 and det > 0".into(),
        ));
    }
    let rho_squared = n_min / Rational::from_integer(BigInt::from(4));
    let delta = SqrtRational::new(rational_pow(&rho_squared, n as i64) / det)?;
    let density = density_from_normalized(n, delta.to_f64());
    Ok(DensityReport {
        n,
        n_min: n_min.clone(),
        det: det.clone(),
        rho_squared,
        delta,
        density,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn e8_density() {
        let r = normalized_center_density(8, &q(2, 1), &q(1, 1)).unwrap();
        assert_eq!(r.delta.exact(), Some(q(1, 16)));
        assert_eq!(r.delta.render(6), "0.0625000");
        let want = std::f64::consts::PI.powi(4) / 384.0;
        assert!((r.density - want).abs() < 1e-15);
        assert!((r.density - 0.253670).abs() < 1e-6);
    }

    #[test]
    fn legendre_small_rows() {
        let r = normalized_center_density(2, &q(3, 8), &q(9, 16)).unwrap();
        assert_eq!(r.delta.exact(), Some(q(1, 8)));
        let r = normalized_center_density(4, &q(5, 12), &(q(25, 12) * q(25, 12))).unwrap();
        assert_eq!(r.delta.exact(), Some(q(1, 192)));
        assert_eq!(r.delta.render(4), "0.005208");
    }

    #[test]
    fn rejects_nonpositive() {
        assert!(normalized_center_density(2, &q(0, 1), &q(1, 1)).is_err());
        assert!(normalized_center_density(2, &q(1, 1), &q(-1, 1)).is_err());
        assert!(normalized_center_density(0, &q(1, 1), &q(1, 1)).is_err());
    }

    #[test]
    fn density_anchors() {
        assert!((density_from_normalized(1, 0.5f64) - 1.0).abs() < 1e-15);
        let hex = density_from_normalized(2, 1.0 / (2.0 * 3f64.sqrt()));
        assert!((hex - std::f64::consts::PI / 12f64.sqrt()).abs() < 1e-15);
        let e8 = density_from_normalized(8, 1.0f32 / 16.0);
        assert!((e8 - 0.253670).abs() < 1e-5);
    }

    #[test]
    fn gamma_values() {
        assert!((gamma_half::<f64>(2) - 1.0).abs() < 1e-15);
        assert!((gamma_half::<f64>(1) - std::f64::consts::PI.sqrt()).abs() < 1e-15);
        assert!((gamma_half::<f64>(10) - 24.0).abs() < 1e-12);
        // Gamma(5/2) = 3/4 sqrt(pi)
        assert!((gamma_half::<f64>(5) - 0.75 * std::f64::consts::PI.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn rendering() {
        let s = |n, d| SqrtRational::from_rational(&q(n, d)).unwrap();
        assert_eq!(s(1, 11).render(6), "0.0909091");
        assert_eq!(s(1, 3).render(3), "0.333");
        assert_eq!(s(2, 3).render(3), "0.667");
        assert_eq!(s(123456789, 1).render(6), "1.23457e8");
        assert_eq!(s(1, 512000).render(4), "1.953e-6");
        // exact tie 0.125 -> 0.12 (half-even), 0.375 -> 0.38
        assert_eq!(s(1, 8).render(2), "0.12");
        assert_eq!(s(3, 8).render(2), "0.38");
        assert_eq!(s(99999, 100000).render(3), "1.00");
        assert_eq!(SqrtRational::new(q(2, 1)).unwrap().render(7), "1.414214");
        assert_eq!(SqrtRational::new(q(2, 1)).unwrap().expression(), "sqrt(2)");
    }

    #[test]
    fn huge_and_tiny() {
        let tiny = SqrtRational::from_rational(&(q(14, 1) / rational_pow(&q(112, 1), 13))).unwrap();
        let v = tiny.to_f64();
        assert!((v / 3.208e-26 - 1.0).abs() < 1e-3);
        let huge = SqrtRational::new(rational_pow(&q(10, 1), 700)).unwrap();
        assert_eq!(huge.render(3), "1.00e350");
        assert!((huge.ln() - 350.0 * std::f64::consts::LN_10).abs() < 1e-9);
    }
}
