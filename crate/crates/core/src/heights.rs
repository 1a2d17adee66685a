//! Naive and canonical heights, the height pairing, the closed-form pairing
//! on the Legendre family, and the height formula for nice curves.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::curve::{e1_exponent, CurvePoint, WeierstrassCurve};
use crate::error::{Error, Result};
use crate::lattice::Matrix;
use crate::poly::Poly;
use crate::{HeightValue, Rational};

fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `max(deg f, deg g)` for `x = f/g`; 0 at the identity.
pub fn naive_height(p: &CurvePoint) -> HeightValue {
    match p.x() {
        None => Rational::zero(),
        Some(x) => int(x.naive_height() as i64),
    }
}

/// Canonical height on `y^2 = x^3 + t^q - t`, where it equals the naive height.
pub fn canonical_height_e1(curve: &WeierstrassCurve, p: &CurvePoint) -> Result<HeightValue> {
    if e1_exponent(curve).is_none() {
        return Err(Error::InvalidFamily("canonical height needs an E1 curve".into()));
    }
    if !curve.on_curve(p)? {
        return Err(Error::NotOnCurve("point is not on the E1 curve".into()));
    }
    Ok(naive_height(p))
}

/// A quadratic height on a fixed curve.
pub trait HeightFunction: Sync {
    fn height(&self, curve: &WeierstrassCurve, p: &CurvePoint) -> Result<HeightValue>;

    /// `h(p + q)`; implementations may skip forming the sum.
    fn height_of_sum(
        &self,
        curve: &WeierstrassCurve,
        p: &CurvePoint,
        q: &CurvePoint,
    ) -> Result<HeightValue> {
        self.height(curve, &curve.add(p, q)?)
    }
}

/// Canonical height on an E1 curve, for points already known to lie on it.
#[derive(Clone, Copy, Debug)]
pub struct E1CanonicalHeight {
    pub q: u64,
}

impl E1CanonicalHeight {
    pub fn new(curve: &WeierstrassCurve) -> Result<Self> {
        let q = e1_exponent(curve)
            .ok_or_else(|| Error::InvalidFamily("canonical height needs an E1 curve".into()))?;
        Ok(E1CanonicalHeight { q })
    }
}

impl HeightFunction for E1CanonicalHeight {
    fn height(&self, _curve: &WeierstrassCurve, p: &CurvePoint) -> Result<HeightValue> {
        Ok(naive_height(p))
    }

    fn height_of_sum(
        &self,
        curve: &WeierstrassCurve,
        p: &CurvePoint,
        q: &CurvePoint,
    ) -> Result<HeightValue> {
        Ok(curve
            .x_of_sum(p, q)?
            .map_or_else(Rational::zero, |x| int(x.naive_height() as i64)))
    }
}

/// `<P, Q> = (h(P + Q) - h(P) - h(Q)) / 2`.
pub fn pairing<H: HeightFunction + ?Sized>(
    curve: &WeierstrassCurve,
    h: &H,
    p: &CurvePoint,
    q: &CurvePoint,
) -> Result<HeightValue> {
    let s = h.height_of_sum(curve, p, q)?;
    Ok((s - h.height(curve, p)? - h.height(curve, q)?) / int(2))
}

/// Pairing `<P_i, P_j>` of the explicit Legendre points for `d = p^f + 1`.
pub fn legendre_pairing(i: usize, j: usize, d: usize) -> Result<HeightValue> {
    for index in [i, j] {
        if index >= d {
            return Err(Error::IndexOutOfRange { index, d });
        }
    }
    let dd = d as i64;
    let den = BigInt::from(2 * dd);
    Ok(if i == j {
        Rational::new(BigInt::from((dd - 1) * (dd - 2)), den)
    } else if (i + d - j).is_multiple_of(2) {
        Rational::new(BigInt::from(2 * (1 - dd)), den)
    } else {
        Rational::zero()
    })
}

/// The `d x d` matrix of [`legendre_pairing`] values.
pub fn legendre_gram(d: usize) -> Matrix<Rational> {
    Matrix::from_fn(d, d, |i, j| legendre_pairing(i, j, d).expect("indices below d"))
}

/// Lower bound `(d-1)/(2d)` for nonzero heights on the Legendre family.
pub fn legendre_min_norm_bound(d: usize) -> HeightValue {
    Rational::new(BigInt::from(d - 1), BigInt::from(2 * d))
}

/// Minimal nonzero height `(q+1)/3` on the E1 curve.
pub fn e1_min_norm(q: u64) -> Result<HeightValue> {
    if q < 2 || !(q + 1).is_multiple_of(3) {
        return Err(Error::InvalidFamily(format!("3 does not divide q + 1 = {}", q + 1)));
    }
    Ok(int(((q + 1) / 3) as i64))
}

/// Discriminant roots sharing one multiplicity, as a square-free product.
#[derive(Clone, Debug)]
pub struct RootClass {
    pub multiplicity: usize,
    pub roots: Poly,
    /// Roots where `a4` vanishes too (additive reduction); only filled for double roots.
    pub additive: Option<Poly>,
}

#[derive(Clone, Debug)]
pub struct InfinityReport {
    pub multiplicity: usize,
    pub additive: bool,
    pub nice: bool,
}

/// Outcome of the niceness test for `y^2 = x^3 + a4 x + a6`.
///
/// The verdict covers the finite places, where the model is assumed minimal.
/// The place at infinity is reported separately.
#[derive(Clone, Debug)]
pub struct NiceCurveProfile {
    pub d: usize,
    pub chi: usize,
    pub discriminant: Poly,
    pub classes: Vec<RootClass>,
    pub infinity: InfinityReport,
    /// No root of multiplicity above two.
    pub condition1: bool,
    /// Every double root has additive reduction.
    pub condition2: bool,
}

impl NiceCurveProfile {
    pub fn is_nice(&self) -> bool {
        self.condition1 && self.condition2
    }

    /// Name of the first failing condition.
    pub fn failure(&self) -> Option<&'static str> {
        if !self.condition1 {
            Some("condition 1: discriminant root of multiplicity above 2")
        } else if !self.condition2 {
            Some("condition 2: double root with multiplicative reduction")
        } else {
            None
        }
    }
}

fn deg(p: &Poly) -> Option<usize> {
    p.degree()
}

pub fn nice_check(curve: &WeierstrassCurve) -> Result<NiceCurveProfile> {
    if !curve.is_short() {
        return Err(Error::InvalidParams("niceness test needs a short Weierstrass model".into()));
    }
    if curve.field().p() <= 3 {
        return Err(Error::InvalidParams("niceness test needs characteristic above 3".into()));
    }
    let (a4, a6) = (curve.a4(), curve.a6());
    let d = [(a4, 4), (a6, 6)]
        .iter()
        .filter_map(|(a, i)| deg(a).map(|k| k.div_ceil(*i)))
        .max()
        .unwrap_or(0);
    let disc = curve.discriminant();
    if disc.is_zero() {
        return Err(Error::SingularCurve);
    }
    let mut classes = Vec::new();
    let (mut condition1, mut condition2) = (true, true);
    for (roots, multiplicity) in disc.squarefree_decomposition()? {
        if roots.is_constant() {
            continue;
        }
        let additive = (multiplicity == 2).then(|| roots.gcd(a4));
        if multiplicity > 2 {
            condition1 = false;
        }
        if let Some(a) = &additive {
            if deg(a) != deg(&roots) {
                condition2 = false;
            }
        }
        classes.push(RootClass {
            multiplicity,
            roots,
            additive,
        });
    }
    classes.sort_by_key(|c| c.multiplicity);
    let inf_mult = 12 * d - deg(&disc).unwrap_or(0);
    let inf_additive = inf_mult > 0 && deg(a4).is_none_or(|k| k < 4 * d);
    Ok(NiceCurveProfile {
        d,
        chi: d,
        discriminant: disc,
        classes,
        infinity: InfinityReport {
            multiplicity: inf_mult,
            additive: inf_additive,
            nice: inf_mult <= 1 || (inf_mult == 2 && inf_additive),
        },
        condition1,
        condition2,
    })
}

/// `<P, P> = 2 chi + 2 (P.O)` on a nice curve, with `x(P) = f/g`.
pub fn nice_height(profile: &NiceCurveProfile, p: &CurvePoint) -> Result<HeightValue> {
    if !profile.is_nice() {
        return Err(Error::NotNice(profile.failure().unwrap_or("").into()));
    }
    let x = p.x().ok_or(Error::IdentityPoint)?;
    let df = deg(x.num()).unwrap_or(0) as i64;
    let dg = deg(x.den()).unwrap_or(0) as i64;
    let two_d = 2 * profile.d as i64;
    Ok(int(two_d + dg + (df - dg - two_d).max(0)))
}

/// Whether `nice_height` equals `deg f` for this point.
pub fn in_large_degree_regime(profile: &NiceCurveProfile, p: &CurvePoint) -> bool {
    p.x().is_some_and(|x| {
        let df = deg(x.num()).unwrap_or(0);
        let dg = deg(x.den()).unwrap_or(0);
        df >= dg + 2 * profile.d
    })
}

/// `true` when `h` is an integer multiple of `unit`.
pub fn is_multiple_of(h: &Rational, unit: &Rational) -> bool {
    !unit.is_zero() && (h / unit).denom().is_one()
}
