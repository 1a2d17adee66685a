//! Elliptic curves over `F_r(t)` in long Weierstrass form, the chord-tangent
//! group law, and the two explicit point families.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::field::{self, Fe, Field, FieldCtx};
use crate::poly::{same_field, Poly, RationalFunction};

/// `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6` with polynomial coefficients.
#[derive(Clone, Debug)]
pub struct WeierstrassCurve {
    field: Field,
    coeffs: [Poly; 5],
    // rational-function copies of the coefficients, used by the group law
    rf: [RationalFunction; 5],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CurvePoint {
    Identity,
    Affine {
        x: RationalFunction,
        y: RationalFunction,
    },
}

impl CurvePoint {
    pub fn affine(x: RationalFunction, y: RationalFunction) -> Self {
        CurvePoint::Affine { x, y }
    }

    pub fn is_identity(&self) -> bool {
        matches!(self, CurvePoint::Identity)
    }

    pub fn x(&self) -> Option<&RationalFunction> {
        match self {
            CurvePoint::Identity => None,
            CurvePoint::Affine { x, .. } => Some(x),
        }
    }

    pub fn y(&self) -> Option<&RationalFunction> {
        match self {
            CurvePoint::Identity => None,
            CurvePoint::Affine { y, .. } => Some(y),
        }
    }

    /// Coefficient indices of `(x_num, x_den, y_num, y_den)`; empty for the identity.
    pub fn key(&self) -> Vec<Vec<u128>> {
        match self {
            CurvePoint::Identity => Vec::new(),
            CurvePoint::Affine { x, y } => vec![
                x.num().to_indices(),
                x.den().to_indices(),
                y.num().to_indices(),
                y.den().to_indices(),
            ],
        }
    }
}

const A1: usize = 0;
const A2: usize = 1;
const A3: usize = 2;
const A4: usize = 3;
const A6: usize = 4;

impl WeierstrassCurve {
    /// Coefficients in the order `a1, a2, a3, a4, a6`.
    pub fn new(field: &Field, coeffs: [Poly; 5]) -> Result<Self> {
        if coeffs.iter().any(|c| !same_field(c.field(), field)) {
            return Err(Error::ContextMismatch);
        }
        let rf = coeffs.clone().map(RationalFunction::from);
        let curve = WeierstrassCurve {
            field: field.clone(),
            coeffs,
            rf,
        };
        if curve.discriminant().is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(curve)
    }

    /// `y^2 = x^3 + a4 x + a6`.
    pub fn short(field: &Field, a4: Poly, a6: Poly) -> Result<Self> {
        let z = Poly::zero(field);
        Self::new(field, [z.clone(), z.clone(), z, a4, a6])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn a1(&self) -> &Poly {
        &self.coeffs[A1]
    }
    pub fn a2(&self) -> &Poly {
        &self.coeffs[A2]
    }
    pub fn a3(&self) -> &Poly {
        &self.coeffs[A3]
    }
    pub fn a4(&self) -> &Poly {
        &self.coeffs[A4]
    }
    pub fn a6(&self) -> &Poly {
        &self.coeffs[A6]
    }

    pub fn coefficients(&self) -> &[Poly; 5] {
        &self.coeffs
    }

    pub fn is_short(&self) -> bool {
        self.a1().is_zero() && self.a2().is_zero() && self.a3().is_zero()
    }

    pub fn discriminant(&self) -> Poly {
        let f = &self.field;
        let k = |n: i64| Poly::constant(f, f.from_int(n));
        let (a1, a2, a3, a4, a6) = (self.a1(), self.a2(), self.a3(), self.a4(), self.a6());
        let b2 = &(a1 * a1) + &(&k(4) * a2);
        let b4 = &(&k(2) * a4) + &(a1 * a3);
        let b6 = &(a3 * a3) + &(&k(4) * a6);
        let b8 = &(&(&(&(a1 * a1) * a6) + &(&(&k(4) * a2) * a6)) - &(&(a1 * a3) * a4))
            + &(&(&(a2 * a3) * a3) - &(a4 * a4));
        let t1 = -&(&(&b2 * &b2) * &b8);
        let t2 = &k(8) * &(&(&b4 * &b4) * &b4);
        let t3 = &k(27) * &(&b6 * &b6);
        let t4 = &k(9) * &(&(&b2 * &b4) * &b6);
        &(&(&t1 - &t2) - &t3) + &t4
    }

    fn check_point(&self, p: &CurvePoint) -> Result<()> {
        if let CurvePoint::Affine { x, y } = p {
            if !same_field(x.field(), &self.field) || !same_field(y.field(), &self.field) {
                return Err(Error::ContextMismatch);
            }
        }
        Ok(())
    }

    fn term(&self, i: usize, v: &RationalFunction) -> Option<RationalFunction> {
        (!self.rf[i].is_zero()).then(|| &self.rf[i] * v)
    }

    pub fn on_curve(&self, p: &CurvePoint) -> Result<bool> {
        self.check_point(p)?;
        let CurvePoint::Affine { x, y } = p else {
            return Ok(true);
        };
        let mut lhs = y.square();
        if let Some(v) = self.term(A1, &(x * y)) {
            lhs = &lhs + &v;
        }
        if let Some(v) = self.term(A3, y) {
            lhs = &lhs + &v;
        }
        let x2 = x.square();
        let mut rhs = &x2 * x;
        if let Some(v) = self.term(A2, &x2) {
            rhs = &rhs + &v;
        }
        if let Some(v) = self.term(A4, x) {
            rhs = &rhs + &v;
        }
        rhs = &rhs + &self.rf[A6];
        Ok(lhs == rhs)
    }

    pub fn neg(&self, p: &CurvePoint) -> CurvePoint {
        match p {
            CurvePoint::Identity => CurvePoint::Identity,
            CurvePoint::Affine { x, y } => {
                let mut ny = -y;
                if let Some(v) = self.term(A1, x) {
                    ny = &ny - &v;
                }
                ny = &ny - &self.rf[A3];
                CurvePoint::affine(x.clone(), ny)
            }
        }
    }

    /// Slope of the chord or tangent through `p` and `q`; `None` when the sum is the identity.
    fn slope(
        &self,
        (x1, y1): (&RationalFunction, &RationalFunction),
        (x2, y2): (&RationalFunction, &RationalFunction),
    ) -> Option<RationalFunction> {
        if x1 != x2 {
            let dx = x2 - x1;
            return Some((y2 - y1).checked_div(&dx).expect("distinct x"));
        }
        // x1 == x2: either q = -p or q = p
        let mut s = y1 + y2;
        if let Some(v) = self.term(A1, x2) {
            s = &s + &v;
        }
        s = &s + &self.rf[A3];
        if s.is_zero() {
            return None;
        }
        // tangent: (3x^2 + 2 a2 x + a4 - a1 y) / (2y + a1 x + a3), and here s = 2y + a1 x + a3
        let f = &self.field;
        let mut num = x1.square().scale(f.from_int(3));
        if let Some(v) = self.term(A2, x1) {
            num = &num + &v.scale(f.from_int(2));
        }
        num = &num + &self.rf[A4];
        if let Some(v) = self.term(A1, y1) {
            num = &num - &v;
        }
        Some(num.checked_div(&s).expect("nonzero tangent denominator"))
    }

    fn sum_x(
        &self,
        lambda: &RationalFunction,
        x1: &RationalFunction,
        x2: &RationalFunction,
    ) -> RationalFunction {
        let mut x3 = lambda.square();
        if let Some(v) = self.term(A1, lambda) {
            x3 = &x3 + &v;
        }
        &(&(&x3 - &self.rf[A2]) - x1) - x2
    }

    pub fn add(&self, p: &CurvePoint, q: &CurvePoint) -> Result<CurvePoint> {
        self.check_point(p)?;
        self.check_point(q)?;
        let (CurvePoint::Affine { x: x1, y: y1 }, CurvePoint::Affine { x: x2, y: y2 }) = (p, q)
        else {
            return Ok(if p.is_identity() { q.clone() } else { p.clone() });
        };
        let Some(lambda) = self.slope((x1, y1), (x2, y2)) else {
            return Ok(CurvePoint::Identity);
        };
        let x3 = self.sum_x(&lambda, x1, x2);
        // y3 = -(lambda + a1) x3 - nu - a3 with nu = y1 - lambda x1
        let nu = y1 - &(&lambda * x1);
        let lam_a1 = &lambda + &self.rf[A1];
        let y3 = &(&(-&(&lam_a1 * &x3)) - &nu) - &self.rf[A3];
        Ok(CurvePoint::affine(x3, y3))
    }

    /// x-coordinate of `p + q` without forming its y-coordinate; `None` for the identity.
    pub fn x_of_sum(&self, p: &CurvePoint, q: &CurvePoint) -> Result<Option<RationalFunction>> {
        self.check_point(p)?;
        self.check_point(q)?;
        match (p, q) {
            (CurvePoint::Identity, other) | (other, CurvePoint::Identity) => {
                Ok(other.x().cloned())
            }
            (CurvePoint::Affine { x: x1, y: y1 }, CurvePoint::Affine { x: x2, y: y2 }) => Ok(self
                .slope((x1, y1), (x2, y2))
                .map(|lambda| self.sum_x(&lambda, x1, x2))),
        }
    }

    pub fn double(&self, p: &CurvePoint) -> Result<CurvePoint> {
        self.add(p, p)
    }

    pub fn sub(&self, p: &CurvePoint, q: &CurvePoint) -> Result<CurvePoint> {
        self.add(p, &self.neg(q))
    }

    /// `n * p` by double-and-add.
    pub fn mul_scalar(&self, n: i64, p: &CurvePoint) -> Result<CurvePoint> {
        let base = if n < 0 { self.neg(p) } else { p.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = CurvePoint::Identity;
        let mut cur = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(&acc, &cur)?;
            }
            k >>= 1;
            if k > 0 {
                cur = self.double(&cur)?;
            }
        }
        Ok(acc)
    }

    /// `sum c_i P_i`.
    pub fn combination(&self, coeffs: &[i64], points: &[CurvePoint]) -> Result<CurvePoint> {
        let mut acc = CurvePoint::Identity;
        for (&c, p) in coeffs.iter().zip(points) {
            if c != 0 {
                acc = self.add(&acc, &self.mul_scalar(c, p)?)?;
            }
        }
        Ok(acc)
    }

    /// Drops repeated points and keeps one representative of each `{P, -P}` pair.
    pub fn dedup_signs(&self, points: &[CurvePoint]) -> Vec<CurvePoint> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for p in points {
            if p.is_identity() || seen.contains(&p.key()) {
                continue;
            }
            seen.insert(p.key());
            seen.insert(self.neg(p).key());
            out.push(p.clone());
        }
        out
    }
}

/// Parameters of `y^2 = x^3 + t^q - t` over `F_r(t)`, `q = p^c`, `r = p^s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CurveE1Params {
    pub p: u32,
    pub c: u32,
    pub s: u32,
}

impl CurveE1Params {
    pub fn new(p: u32, c: u32, s: u32) -> Result<Self> {
        if let Some(cond) = field::sufficiency_failure(p, c, s)? {
            return Err(Error::InvalidParams(format!(
                "r = {p}^{s} is not sufficiently large for q = {p}^{c}: condition {cond} fails"
            )));
        }
        Ok(CurveE1Params { p, c, s })
    }

    pub fn q(&self) -> u64 {
        (self.p as u64).pow(self.c)
    }

    pub fn rank(&self) -> usize {
        2 * (self.q() as usize - 1)
    }

    pub fn field(&self) -> Result<Field> {
        FieldCtx::new(self.p, self.s as usize)
    }
}

/// `y^2 = x^3 + t^q - t`.
pub fn e1_curve(params: &CurveE1Params, field: &Field) -> Result<WeierstrassCurve> {
    if field.p() != params.p || field.degree() != params.s as usize {
        return Err(Error::ContextMismatch);
    }
    let t = Poly::t(field);
    let a6 = &t.pow(params.q()) - &t;
    WeierstrassCurve::short(field, Poly::zero(field), a6)
}

/// Recognizes `y^2 = x^3 + t^q - t` and returns `q`.
pub fn e1_exponent(curve: &WeierstrassCurve) -> Option<u64> {
    if !curve.is_short() || !curve.a4().is_zero() {
        return None;
    }
    let a6 = curve.a6();
    let q = a6.degree()? as u64;
    let t = Poly::t(curve.field());
    (q > 1 && *a6 == &t.pow(q) - &t).then_some(q)
}

/// The `sigma` and `beta` constants driving the explicit E1 points.
#[derive(Clone, Debug)]
pub struct ExplicitSeedSet {
    pub sigmas: Vec<Fe>,
    pub betas: Vec<Fe>,
}

impl ExplicitSeedSet {
    pub fn solve(field: &FieldCtx, q: u64) -> Result<Self> {
        let sigmas = field::solve_sigma(field, q as u128)?;
        let betas = field::solve_beta(field, q as u128)?;
        if sigmas.len() as u64 != 6 * (q - 1) || betas.len() as u64 != q {
            return Err(Error::Internal(format!(
                "seed sets have sizes {} and {}, expected {} and {q}",
                sigmas.len(),
                betas.len(),
                6 * (q - 1)
            )));
        }
        Ok(ExplicitSeedSet { sigmas, betas })
    }
}

/// The `6q(q-1)` points `(sigma^2 (t - gamma)^((q+1)/3), sigma^3 (t - gamma^q)^((q+1)/2))`
/// with `gamma = beta / sigma^6`.
///
/// Both readings of the y-coordinate (`gamma^q` and `gamma`) and both signs are
/// tried; exactly the candidates on the curve are kept.
pub fn e1_explicit_points(
    curve: &WeierstrassCurve,
    seeds: &ExplicitSeedSet,
) -> Result<Vec<CurvePoint>> {
    let q = e1_exponent(curve).ok_or_else(|| Error::InvalidFamily("not an E1 curve".into()))?;
    let f = curve.field();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for &sigma in &seeds.sigmas {
        let s2 = f.square(sigma);
        let s3 = f.mul(s2, sigma);
        let s6 = f.square(s3);
        for &beta in &seeds.betas {
            let gamma = f.div(beta, s6).ok_or(Error::DivisionByZero)?;
            let x: RationalFunction = Poly::linear(f, gamma).pow((q + 1) / 3).scale(s2).into();
            let mut found = false;
            for shift in [f.pow(gamma, q as u128), gamma] {
                let base: RationalFunction =
                    Poly::linear(f, shift).pow(q.div_ceil(2)).scale(s3).into();
                for y in [base.clone(), -&base] {
                    let pt = CurvePoint::affine(x.clone(), y);
                    if curve.on_curve(&pt)? {
                        found = true;
                        if seen.insert(pt.key()) {
                            out.push(pt);
                        }
                    }
                }
            }
            if !found {
                return Err(Error::NotOnCurve(format!(
                    "no candidate for sigma = {}, beta = {} lies on the curve",
                    f.index(sigma),
                    f.index(beta)
                )));
            }
        }
    }
    let expected = 6 * q * (q - 1);
    if out.len() as u64 != expected {
        return Err(Error::Internal(format!(
            "constructed {} explicit points, expected {expected}",
            out.len()
        )));
    }
    Ok(out)
}

/// Legendre family `y^2 = x(x+1)(x+u^d)` over `GF(p^(2f))(u)`, `d = p^f + 1`.
#[derive(Clone, Debug)]
pub struct LegendreParams {
    pub p: u32,
    pub f: u32,
    pub d: usize,
    pub field: Field,
    /// Fixed primitive `d`-th root of unity.
    pub zeta: Fe,
}

impl LegendreParams {
    pub fn new(p: u32, f: u32) -> Result<Self> {
        if !field::is_prime(p as u64) {
            return Err(Error::InvalidParams(format!("p = {p} is not prime")));
        }
        if p == 2 {
            return Err(Error::InvalidParams("p must be odd".into()));
        }
        if f == 0 {
            return Err(Error::InvalidParams("f must be positive".into()));
        }
        let pf = field::checked_pow(p as u128, f)
            .filter(|&v| v < 1 << 20)
            .ok_or_else(|| Error::InvalidParams(format!("d = {p}^{f} + 1 too large")))?;
        let d = pf as usize + 1;
        let field = FieldCtx::new(p, 2 * f as usize)?;
        let zeta = field
            .element_of_order(d as u128)
            .ok_or_else(|| Error::Internal(format!("no primitive {d}-th root of unity")))?;
        Ok(LegendreParams { p, f, d, field, zeta })
    }

    pub fn rank(&self) -> usize {
        self.d - 2
    }
}

pub fn legendre_curve(params: &LegendreParams) -> Result<WeierstrassCurve> {
    let f = &params.field;
    let ud = Poly::monomial(f, f.one(), params.d);
    let z = Poly::zero(f);
    let a2 = &ud + &Poly::one(f);
    WeierstrassCurve::new(f, [z.clone(), a2, z.clone(), ud, z])
}

/// `P_i = (zeta^i u, zeta^i u (zeta^i u + 1)^(d/2))` for `i = 0..d`.
pub fn legendre_explicit_points(
    params: &LegendreParams,
    curve: &WeierstrassCurve,
) -> Result<Vec<CurvePoint>> {
    let f = &params.field;
    let mut zi = f.one();
    let mut out = Vec::with_capacity(params.d);
    for i in 0..params.d {
        let xu = Poly::monomial(f, zi, 1);
        let y = &xu * &(&xu + &Poly::one(f)).pow(params.d as u64 / 2);
        let pt = CurvePoint::affine(xu.into(), y.into());
        if !curve.on_curve(&pt)? {
            return Err(Error::NotOnCurve(format!("P_{i}")));
        }
        out.push(pt);
        zi = f.mul(zi, params.zeta);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e1(p: u32, c: u32, s: u32) -> (CurveE1Params, WeierstrassCurve) {
        let params = CurveE1Params::new(p, c, s).unwrap();
        let field = params.field().unwrap();
        let curve = e1_curve(&params, &field).unwrap();
        (params, curve)
    }

    #[test]
    fn e1_curve_shape() {
        let (_, curve) = e1(5, 1, 4);
        let f = curve.field().clone();
        assert_eq!(f.order(), 625);
        assert_eq!(curve.a6(), &Poly::from_ints(&f, &[0, -1, 0, 0, 0, 1]));
        assert!(curve.is_short() && curve.a4().is_zero());
        assert_eq!(e1_exponent(&curve), Some(5));
        // -432 (t^q - t)^2
        let expect = &Poly::from_ints(&f, &[-432]) * &curve.a6().pow(2);
        assert_eq!(curve.discriminant(), expect);

        let (_, c11) = e1(11, 1, 2);
        let f11 = c11.field().clone();
        assert_eq!(c11.a6(), &(&Poly::t(&f11).pow(11) - &Poly::t(&f11)));
    }

    #[test]
    fn rejects_insufficient_r() {
        assert!(matches!(CurveE1Params::new(5, 1, 1), Err(Error::InvalidParams(m)) if m.contains("8 | (p+1)s")));
    }

    #[test]
    fn non_point() {
        let (_, curve) = e1(5, 1, 4);
        let f = curve.field().clone();
        let p = CurvePoint::affine(RationalFunction::zero(&f), RationalFunction::constant(&f, f.one()));
        assert!(!curve.on_curve(&p).unwrap());
        assert!(curve.on_curve(&CurvePoint::Identity).unwrap());
    }

    #[test]
    fn context_mismatch() {
        let (_, curve) = e1(5, 1, 4);
        let other = FieldCtx::new(7, 1).unwrap();
        let p = CurvePoint::affine(RationalFunction::zero(&other), RationalFunction::zero(&other));
        assert!(matches!(curve.on_curve(&p), Err(Error::ContextMismatch)));
    }

    #[test]
    fn explicit_points_q5() {
        let (_, curve) = e1(5, 1, 4);
        let seeds = ExplicitSeedSet::solve(curve.field(), 5).unwrap();
        let pts = e1_explicit_points(&curve, &seeds).unwrap();
        assert_eq!(pts.len(), 120);
        for p in &pts {
            assert!(curve.on_curve(p).unwrap());
            assert_eq!(p.x().unwrap().num().degree(), Some(2));
            assert!(p.x().unwrap().is_polynomial());
        }
        assert_eq!(curve.dedup_signs(&pts).len(), 60);
    }

    #[test]
    fn doubling_formula_q5() {
        let (_, curve) = e1(5, 1, 4);
        let f = curve.field().clone();
        let seeds = ExplicitSeedSet::solve(&f, 5).unwrap();
        let pts = e1_explicit_points(&curve, &seeds).unwrap();
        let a6 = curve.a6().clone();
        for pt in pts.iter().step_by(17) {
            let x = pt.x().unwrap();
            let (fp, gp) = (x.num(), x.den());
            let two_p = curve.double(pt).unwrap();
            // (f^4 - 8 f g^3 a6) / (4 (g f^3 + g^4 a6))
            let num = &fp.pow(4) - &(&(&Poly::from_ints(&f, &[8]) * fp) * &(&gp.pow(3) * &a6));
            let den = &Poly::from_ints(&f, &[4]) * &(&(gp * &fp.pow(3)) + &(&gp.pow(4) * &a6));
            let expect = RationalFunction::new(num, den).unwrap();
            assert_eq!(two_p.x().unwrap(), &expect);
            assert!(curve.on_curve(&two_p).unwrap());
        }
    }

    #[test]
    fn group_identities() {
        let (_, curve) = e1(5, 1, 4);
        let seeds = ExplicitSeedSet::solve(curve.field(), 5).unwrap();
        let pts = e1_explicit_points(&curve, &seeds).unwrap();
        let p = &pts[0];
        assert_eq!(curve.add(p, &CurvePoint::Identity).unwrap(), *p);
        assert_eq!(curve.add(p, &curve.neg(p)).unwrap(), CurvePoint::Identity);
        let (a, b, c) = (&pts[3], &pts[41], &pts[77]);
        let left = curve.add(&curve.add(a, b).unwrap(), c).unwrap();
        let right = curve.add(a, &curve.add(b, c).unwrap()).unwrap();
        assert_eq!(left, right);
        assert_eq!(curve.add(a, b).unwrap(), curve.add(b, a).unwrap());
        assert_eq!(
            curve.mul_scalar(3, a).unwrap(),
            curve.add(a, &curve.double(a).unwrap()).unwrap()
        );
        assert_eq!(curve.mul_scalar(-2, a).unwrap(), curve.neg(&curve.double(a).unwrap()));
        let s = curve.add(a, b).unwrap();
        assert_eq!(curve.x_of_sum(a, b).unwrap().as_ref(), s.x());
    }

    #[test]
    fn legendre_points() {
        for (p, f, d) in [(3, 1, 4), (5, 1, 6), (7, 1, 8), (3, 2, 10)] {
            let params = LegendreParams::new(p, f).unwrap();
            assert_eq!(params.d, d);
            assert_eq!(params.field.multiplicative_order(params.zeta), Some(d as u128));
            let curve = legendre_curve(&params).unwrap();
            assert!(!curve.discriminant().is_zero());
            let pts = legendre_explicit_points(&params, &curve).unwrap();
            assert_eq!(pts.len(), d);
            let fld = &params.field;
            let u = Poly::t(fld);
            let p0 = CurvePoint::affine(
                u.clone().into(),
                (&u * &(&u + &Poly::one(fld)).pow(d as u64 / 2)).into(),
            );
            assert_eq!(pts[0], p0);
        }
    }

    #[test]
    fn legendre_group_law_char3() {
        let params = LegendreParams::new(3, 1).unwrap();
        let curve = legendre_curve(&params).unwrap();
        let pts = legendre_explicit_points(&params, &curve).unwrap();
        let s = curve.add(&pts[0], &pts[1]).unwrap();
        assert!(curve.on_curve(&s).unwrap());
        let d = curve.double(&pts[2]).unwrap();
        assert!(curve.on_curve(&d).unwrap());
        let left = curve.add(&s, &pts[2]).unwrap();
        let right = curve.add(&pts[0], &curve.add(&pts[1], &pts[2]).unwrap()).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn legendre_rejects_even_p() {
        assert!(LegendreParams::new(2, 1).is_err());
        assert!(LegendreParams::new(9, 1).is_err());
    }
}
