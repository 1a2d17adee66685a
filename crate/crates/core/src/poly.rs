//! Polynomials and rational functions in one variable over a [`FieldCtx`],
//! with valuations at finite places and at infinity.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Fe, Field, FieldCtx};

/// Dense polynomial, coefficients low degree first, no trailing zeros.
#[derive(Clone)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Fe>,
}

pub(crate) fn same_field(a: &Field, b: &Field) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        same_field(&self.field, &other.field) && self.coeffs == other.coeffs
    }
}

impl Eq for Poly {}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl Poly {
    pub fn from_coeffs(field: &Field, mut coeffs: Vec<Fe>) -> Self {
        while coeffs.last().is_some_and(Fe::is_zero) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    /// Coefficients given as prime-field integers.
    pub fn from_ints(field: &Field, coeffs: &[i64]) -> Self {
        Self::from_coeffs(field, coeffs.iter().map(|&c| field.from_int(c)).collect())
    }

    pub fn zero(field: &Field) -> Self {
        Self::from_coeffs(field, Vec::new())
    }

    pub fn one(field: &Field) -> Self {
        Self::constant(field, field.one())
    }

    pub fn constant(field: &Field, c: Fe) -> Self {
        Self::from_coeffs(field, vec![c])
    }

    /// The variable `t`.
    pub fn t(field: &Field) -> Self {
        Self::monomial(field, field.one(), 1)
    }

    pub fn monomial(field: &Field, c: Fe, k: usize) -> Self {
        let mut coeffs = vec![Fe::ZERO; k + 1];
        coeffs[k] = c;
        Self::from_coeffs(field, coeffs)
    }

    /// `t - alpha`.
    pub fn linear(field: &Field, alpha: Fe) -> Self {
        Self::from_coeffs(field, vec![field.neg(alpha), field.one()])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    fn ctx(&self) -> &FieldCtx {
        &self.field
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Fe {
        self.coeffs.get(i).copied().unwrap_or(Fe::ZERO)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == self.ctx().one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<Fe> {
        self.coeffs.last().copied()
    }

    fn check(&self, other: &Poly) {
        assert!(same_field(&self.field, &other.field), "polynomials over different fields");
    }

    pub fn scale(&self, c: Fe) -> Poly {
        let f = self.ctx();
        Self::from_coeffs(&self.field, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(self.ctx().inv(l).expect("nonzero leading coefficient")),
        }
    }

    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        self.check(d);
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let f = self.ctx();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(&self.field), self.clone()));
        }
        let lead_inv = f.inv(d.coeffs[dd]).expect("nonzero leading coefficient");
        let mut quot = vec![Fe::ZERO; rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = f.mul(rem[k], lead_inv);
            if c.is_zero() {
                continue;
            }
            quot[k - dd] = c;
            for (i, &dc) in d.coeffs.iter().enumerate() {
                let idx = k - dd + i;
                rem[idx] = f.sub(rem[idx], f.mul(c, dc));
            }
        }
        rem.truncate(dd);
        Ok((
            Self::from_coeffs(&self.field, quot),
            Self::from_coeffs(&self.field, rem),
        ))
    }

    /// Quotient of a division known to be exact.
    pub fn exact_div(&self, d: &Poly) -> Result<Poly> {
        let (q, r) = self.div_rem(d)?;
        if !r.is_zero() {
            return Err(Error::Internal(format!("{self:?} is not divisible by {d:?}")));
        }
        Ok(q)
    }

    pub fn rem(&self, d: &Poly) -> Result<Poly> {
        Ok(self.div_rem(d)?.1)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        self.check(other);
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Poly {
        let f = self.ctx();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(c, f.from_int((i % f.p() as usize) as i64)))
            .collect();
        Self::from_coeffs(&self.field, coeffs)
    }

    pub fn evaluate(&self, x: Fe) -> Fe {
        let f = self.ctx();
        self.coeffs
            .iter()
            .rev()
            .fold(Fe::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn pow(&self, mut k: u64) -> Poly {
        let mut acc = Poly::one(&self.field);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplicity of `t - alpha` as a factor, by repeated exact division.
    pub fn multiplicity_at(&self, alpha: Fe) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroValuation);
        }
        let lin = Poly::linear(&self.field, alpha);
        let mut cur = self.clone();
        let mut m = 0;
        loop {
            let (q, r) = cur.div_rem(&lin)?;
            if !r.is_zero() {
                return Ok(m);
            }
            cur = q;
            m += 1;
        }
    }

    /// `t^n f(1/t)` for `n >= deg f`.
    pub fn reversed(&self, n: usize) -> Poly {
        assert!(self.degree().is_none_or(|d| d <= n));
        let mut coeffs = vec![Fe::ZERO; n + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[n - i] = c;
        }
        Self::from_coeffs(&self.field, coeffs)
    }

    /// `g` with `g^p = self`, when every exponent is a multiple of p.
    pub fn pth_root(&self) -> Option<Poly> {
        let f = self.ctx();
        let p = f.p() as usize;
        if self.coeffs.iter().enumerate().any(|(i, c)| i % p != 0 && !c.is_zero()) {
            return None;
        }
        let coeffs = self.coeffs.iter().step_by(p).map(|&c| f.pth_root(c)).collect();
        Some(Self::from_coeffs(&self.field, coeffs))
    }

    /// Square-free decomposition of a nonzero polynomial: pairs `(g_i, i)`
    /// with each `g_i` monic, square-free, pairwise coprime and
    /// `monic(self) = prod g_i^i`.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(Poly, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroValuation);
        }
        let mut out = Vec::new();
        self.squarefree_into(1, &mut out)?;
        out.sort_by_key(|(_, m)| *m);
        Ok(out)
    }

    fn squarefree_into(&self, scale: usize, out: &mut Vec<(Poly, usize)>) -> Result<()> {
        let f = self.monic();
        if f.is_constant() {
            return Ok(());
        }
        let p = self.ctx().p() as usize;
        let mut c = f.gcd(&f.derivative());
        let mut w = f.exact_div(&c)?;
        let mut i = 1;
        while !w.is_one() {
            let y = w.gcd(&c);
            let fac = w.exact_div(&y)?;
            if !fac.is_one() {
                out.push((fac, i * scale));
            }
            i += 1;
            w = y;
            c = c.exact_div(&w)?;
        }
        if !c.is_one() {
            let root = c
                .pth_root()
                .ok_or_else(|| Error::Internal("residual factor is not a p-th power".into()))?;
            root.squarefree_into(scale * p, out)?;
        }
        Ok(())
    }

    /// Text form `[c0,c1,...]` with elements written as field indices.
    pub fn to_text(&self) -> String {
        let f = self.ctx();
        let parts: Vec<String> = self.coeffs.iter().map(|&c| f.index(c).to_string()).collect();
        format!("[{}]", parts.join(","))
    }

    pub fn parse(field: &Field, text: &str) -> Result<Poly> {
        let inner = text
            .trim()
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected [..] coefficient list, got {text:?}")))?;
        let coeffs = inner
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| {
                let n: i128 = s
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad coefficient {s:?}")))?;
                field.from_signed_index(n)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_coeffs(field, coeffs))
    }

    pub fn to_indices(&self) -> Vec<u128> {
        self.coeffs.iter().map(|&c| self.ctx().index(c)).collect()
    }

    pub fn from_indices(field: &Field, idx: &[u128]) -> Result<Poly> {
        let coeffs = idx
            .iter()
            .map(|&i| field.from_index(i))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_coeffs(field, coeffs))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.check(rhs);
        let f = self.ctx();
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, &b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a = f.add(*a, b);
        }
        Poly::from_coeffs(&self.field, coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let f = self.ctx();
        Poly::from_coeffs(&self.field, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.check(rhs);
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(&self.field);
        }
        let f = self.ctx();
        let mut coeffs = vec![Fe::ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = f.add(coeffs[i + j], f.mul(a, b));
            }
        }
        Poly::from_coeffs(&self.field, coeffs)
    }
}

/// `num / den` with `gcd(num, den) = 1` and `den` monic.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}/{:?}", self.num, self.den)
    }
}

impl From<Poly> for RationalFunction {
    fn from(num: Poly) -> Self {
        let den = Poly::one(num.field());
        RationalFunction { num, den }
    }
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if !same_field(num.field(), den.field()) {
            return Err(Error::ContextMismatch);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            let one = Poly::one(den.field());
            return RationalFunction { num, den: one };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g).unwrap(), den.exact_div(&g).unwrap())
        };
        let lead = den.leading().expect("nonzero denominator");
        if lead == den.field().one() {
            RationalFunction { num, den }
        } else {
            let inv = den.field().inv(lead).unwrap();
            RationalFunction {
                num: num.scale(inv),
                den: den.scale(inv),
            }
        }
    }

    pub fn zero(field: &Field) -> Self {
        Poly::zero(field).into()
    }

    pub fn constant(field: &Field, c: Fe) -> Self {
        Poly::constant(field, c).into()
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn field(&self) -> &Field {
        self.num.field()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    pub fn scale(&self, c: Fe) -> Self {
        Self::canonical(self.num.scale(c), self.den.clone())
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// `ord_(t - alpha)`: multiplicity in the numerator minus multiplicity in the denominator.
    pub fn ord_at(&self, alpha: Fe) -> Result<i64> {
        if self.is_zero() {
            return Err(Error::ZeroValuation);
        }
        Ok(self.num.multiplicity_at(alpha)? as i64 - self.den.multiplicity_at(alpha)? as i64)
    }

    /// `deg(den) - deg(num)`.
    pub fn ord_infinity(&self) -> Result<i64> {
        match (self.num.degree(), self.den.degree()) {
            (Some(n), Some(d)) => Ok(d as i64 - n as i64),
            _ => Err(Error::ZeroValuation),
        }
    }

    /// `max(deg num, deg den)`.
    pub fn naive_height(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::canonical(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::canonical(num, &self.den * &rhs.den)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        // cross-cancel first so the gcds stay small
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let cancel = |a: &Poly, g: &Poly| {
            if g.is_one() || g.is_zero() {
                a.clone()
            } else {
                a.exact_div(g).unwrap()
            }
        };
        let num = &cancel(&self.num, &g1) * &cancel(&rhs.num, &g2);
        let den = &cancel(&self.den, &g2) * &cancel(&rhs.den, &g1);
        RationalFunction::canonical(num, den)
    }
}
