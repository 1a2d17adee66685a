//! Finite fields `GF(p^s)` in a power basis over `GF(p)`.
//!
//! A [`FieldCtx`] owns the modulus and all per-field constants. Elements are
//! small `Copy` values ([`Fe`]) and every operation goes through the context,
//! so elements never carry a pointer back to their field.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported extension degree.
pub const MAX_DEGREE: usize = 16;

/// Shared handle to a field context.
pub type Field = Arc<FieldCtx>;

/// An element of `GF(p^s)`: coefficients of `1, x, ..., x^(s-1)` reduced mod p.
///
/// Slots at index `>= s` are always zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fe([u16; MAX_DEGREE]);

impl Fe {
    pub const ZERO: Fe = Fe([0; MAX_DEGREE]);

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn coeffs(&self, s: usize) -> &[u16] {
        &self.0[..s]
    }
}

impl fmt::Debug for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.0.iter().rposition(|&c| c != 0).map_or(1, |i| i + 1);
        write!(f, "Fe{:?}", &self.0[..last])
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FieldDump {
    pub p: u32,
    pub s: usize,
    pub modulus_coeffs: Vec<u32>,
}

/// Context for `GF(p^s)`.
pub struct FieldCtx {
    p: u32,
    s: usize,
    /// Monic modulus, low degree first, length `s + 1`.
    modulus: Vec<u32>,
    order: u128,
    /// Distinct prime factors of `order - 1`.
    unit_factors: Vec<u128>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.p, self.s)
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.s == other.s && self.modulus == other.modulus
    }
}

impl Eq for FieldCtx {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors by trial division.
pub fn prime_factors(mut n: u128) -> Vec<u128> {
    let mut out = Vec::new();
    let mut d = 2u128;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn checked_pow(base: u128, exp: u32) -> Option<u128> {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

fn pow_mod(mut base: u128, mut exp: u128, m: u128) -> u128 {
    // m stays far below 2^64 for every caller, so products fit.
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

// Dense polynomials over GF(p), used only to find and test the modulus.
mod prime_poly {
    pub fn trim(a: &mut Vec<u32>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    pub fn inv(a: u32, p: u32) -> u32 {
        super::pow_mod(a as u128, (p - 2) as u128, p as u128) as u32
    }

    pub fn rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        let mut r = a.to_vec();
        trim(&mut r);
        let dm = m.len() - 1;
        let lead_inv = inv(m[dm], p) as u64;
        while r.len() > dm {
            let top = r.len() - 1;
            let coef = r[top] as u64 * lead_inv % p as u64;
            let shift = top - dm;
            for (i, &mc) in m.iter().enumerate() {
                let sub = coef * mc as u64 % p as u64;
                r[shift + i] = ((r[shift + i] as u64 + p as u64 - sub) % p as u64) as u32;
            }
            trim(&mut r);
        }
        r
    }

    pub fn mulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut prod = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
            }
        }
        let prod: Vec<u32> = prod.into_iter().map(|c| c as u32).collect();
        rem(&prod, m, p)
    }

    /// `x^(p^k) mod m`.
    pub fn frobenius_x(m: &[u32], p: u32, k: usize) -> Vec<u32> {
        let mut cur = rem(&[0, 1], m, p);
        for _ in 0..k {
            // raise to the p-th power by square-and-multiply
            let mut acc = vec![1u32];
            let mut base = cur.clone();
            let mut e = p;
            while e > 0 {
                if e & 1 == 1 {
                    acc = mulmod(&acc, &base, m, p);
                }
                base = mulmod(&base, &base, m, p);
                e >>= 1;
            }
            cur = acc;
        }
        cur
    }

    pub fn sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let n = a.len().max(b.len());
        let mut out: Vec<u32> = (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect();
        trim(&mut out);
        out
    }

    pub fn gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let mut a = a.to_vec();
        let mut b = b.to_vec();
        trim(&mut a);
        trim(&mut b);
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    /// Rabin's irreducibility test for a monic `m` of degree `s`.
    pub fn is_irreducible(m: &[u32], p: u32) -> bool {
        let s = m.len() - 1;
        if s == 1 {
            return true;
        }
        if frobenius_x(m, p, s) != rem(&[0, 1], m, p) {
            return false;
        }
        for l in super::prime_factors(s as u128) {
            let h = frobenius_x(m, p, s / l as usize);
            let g = gcd(m, &sub(&h, &[0, 1], p), p);
            if g.len() != 1 {
                return false;
            }
        }
        true
    }
}

impl FieldCtx {
    /// Builds `GF(p^s)` with the lexicographically least monic irreducible
    /// modulus (coefficient vectors compared constant term first).
    pub fn new(p: u32, s: usize) -> Result<Field> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if s == 0 {
            return Err(Error::InvalidParams("field degree s must be positive".into()));
        }
        if s > MAX_DEGREE || p > i16::MAX as u32 {
            return Err(Error::InvalidParams(format!(
                "GF({p}^{s}) exceeds supported size (p < 32768, s <= {MAX_DEGREE})"
            )));
        }
        let order = checked_pow(p as u128, s as u32)
            .filter(|&r| r < 1u128 << 100)
            .ok_or_else(|| Error::InvalidParams(format!("GF({p}^{s}) too large")))?;

        let modulus = Self::least_irreducible(p, s);
        Ok(Arc::new(FieldCtx {
            p,
            s,
            modulus,
            order,
            unit_factors: prime_factors(order - 1),
        }))
    }

    fn least_irreducible(p: u32, s: usize) -> Vec<u32> {
        // Counter whose most significant digit is the constant term.
        let mut low = vec![0u32; s];
        if s > 1 {
            // a zero constant term means x divides the candidate
            low[0] = 1;
        }
        loop {
            let mut cand = low.clone();
            cand.push(1);
            if prime_poly::is_irreducible(&cand, p) {
                return cand;
            }
            let mut i = s;
            loop {
                // an irreducible of every degree exists, so this never wraps
                i -= 1;
                low[i] += 1;
                if low[i] < p {
                    break;
                }
                low[i] = 0;
            }
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.s
    }

    /// Cardinality `p^s`.
    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn dump(&self) -> FieldDump {
        FieldDump {
            p: self.p,
            s: self.s,
            modulus_coeffs: self.modulus.clone(),
        }
    }

    pub fn zero(&self) -> Fe {
        Fe::ZERO
    }

    pub fn one(&self) -> Fe {
        self.from_int(1)
    }

    /// The image of an integer in the prime field.
    pub fn from_int(&self, n: i64) -> Fe {
        let mut e = Fe::ZERO;
        e.0[0] = n.rem_euclid(self.p as i64) as u16;
        e
    }

    /// The class of `x` in the power basis (for `s = 1` this is the root of `x - 0`, i.e. 0).
    pub fn generator(&self) -> Fe {
        if self.s == 1 {
            self.from_int(-(self.modulus[0] as i64))
        } else {
            let mut e = Fe::ZERO;
            e.0[1] = 1;
            e
        }
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Fe> {
        if coeffs.len() > self.s {
            return Err(Error::Parse(format!(
                "{} coefficients for a degree-{} field",
                coeffs.len(),
                self.s
            )));
        }
        let mut e = Fe::ZERO;
        for (slot, &c) in e.0.iter_mut().zip(coeffs) {
            *slot = (c % self.p) as u16;
        }
        Ok(e)
    }

    /// Integer encoding `sum c_i p^i`, in `0..order`.
    pub fn index(&self, a: Fe) -> u128 {
        a.0[..self.s]
            .iter()
            .rev()
            .fold(0u128, |acc, &c| acc * self.p as u128 + c as u128)
    }

    pub fn from_index(&self, mut n: u128) -> Result<Fe> {
        if n >= self.order {
            return Err(Error::Parse(format!("element index {n} out of range for {self:?}")));
        }
        let mut e = Fe::ZERO;
        for slot in e.0[..self.s].iter_mut() {
            *slot = (n % self.p as u128) as u16;
            n /= self.p as u128;
        }
        Ok(e)
    }

    /// Decodes the integer convention used by text fixtures: nonnegative values
    /// are element indices, negative values are negated indices.
    pub fn from_signed_index(&self, n: i128) -> Result<Fe> {
        if n < 0 {
            Ok(self.neg(self.from_index(n.unsigned_abs())?))
        } else {
            self.from_index(n as u128)
        }
    }

    /// All elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> + '_ {
        (0..self.order).map(move |i| self.from_index(i).expect("index in range"))
    }

    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        let p = self.p as u16;
        let mut out = Fe::ZERO;
        for i in 0..self.s {
            let v = a.0[i] + b.0[i];
            out.0[i] = if v >= p { v - p } else { v };
        }
        out
    }

    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        let p = self.p as u16;
        let mut out = Fe::ZERO;
        for i in 0..self.s {
            let (x, y) = (a.0[i], b.0[i]);
            out.0[i] = if x >= y { x - y } else { x + p - y };
        }
        out
    }

    pub fn neg(&self, a: Fe) -> Fe {
        self.sub(Fe::ZERO, a)
    }

    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        let p = self.p as u64;
        let s = self.s;
        if s == 1 {
            let mut out = Fe::ZERO;
            out.0[0] = (a.0[0] as u64 * b.0[0] as u64 % p) as u16;
            return out;
        }
        let mut prod = [0u64; 2 * MAX_DEGREE];
        for i in 0..s {
            let x = a.0[i] as u64;
            if x == 0 {
                continue;
            }
            for j in 0..s {
                prod[i + j] += x * b.0[j] as u64;
            }
        }
        // reduce from the top; modulus is monic
        for k in (s..2 * s - 1).rev() {
            let c = prod[k] % p;
            if c == 0 {
                continue;
            }
            let base = k - s;
            for i in 0..s {
                // subtract c * m_i, kept nonnegative by adding a multiple of p
                prod[base + i] += (p - c) * self.modulus[i] as u64;
            }
        }
        let mut out = Fe::ZERO;
        for i in 0..s {
            out.0[i] = (prod[i] % p) as u16;
        }
        out
    }

    pub fn square(&self, a: Fe) -> Fe {
        self.mul(a, a)
    }

    pub fn scale(&self, a: Fe, k: i64) -> Fe {
        self.mul(a, self.from_int(k))
    }

    pub fn pow(&self, a: Fe, mut e: u128) -> Fe {
        let mut acc = self.one();
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: Fe) -> Option<Fe> {
        if a.is_zero() {
            return None;
        }
        if self.s == 1 {
            let p = self.p as u128;
            return Some(self.from_int(pow_mod(a.0[0] as u128, p - 2, p) as i64));
        }
        Some(self.pow(a, self.order - 2))
    }

    pub fn div(&self, a: Fe, b: Fe) -> Option<Fe> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    /// `a^p`.
    pub fn frobenius(&self, a: Fe) -> Fe {
        self.pow(a, self.p as u128)
    }

    /// The unique `b` with `b^p = a`.
    pub fn pth_root(&self, a: Fe) -> Fe {
        self.pow(a, self.order / self.p as u128)
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: Fe) -> Option<u128> {
        if a.is_zero() {
            return None;
        }
        let mut n = self.order - 1;
        for &l in &self.unit_factors {
            while n.is_multiple_of(l) && self.pow(a, n / l) == self.one() {
                n /= l;
            }
        }
        Some(n)
    }

    /// First element (in index order) generating the unit group.
    pub fn primitive_element(&self) -> Fe {
        let one = self.one();
        let n = self.order - 1;
        (1..self.order)
            .map(|i| self.from_index(i).expect("index in range"))
            .find(|&g| self.unit_factors.iter().all(|&l| self.pow(g, n / l) != one))
            .expect("unit group is cyclic")
    }

    /// An element of exact multiplicative order `k`, if `k | order - 1`.
    pub fn element_of_order(&self, k: u128) -> Option<Fe> {
        let n = self.order - 1;
        if k == 0 || !n.is_multiple_of(k) {
            return None;
        }
        Some(self.pow(self.primitive_element(), n / k))
    }
}

/// Checks the three divisibility conditions that make `r = p^s` large enough
/// for the curve `y^2 = x^3 + t^q - t` with `q = p^c`.
pub fn is_sufficiently_large(p: u32, c: u32, s: u32) -> Result<bool> {
    Ok(sufficiency_failure(p, c, s)?.is_none())
}

/// Validates the `(p, c)` family constraints.
pub fn check_e1_family(p: u32, c: u32) -> Result<()> {
    if !is_prime(p as u64) {
        return Err(Error::InvalidFamily(format!("p = {p} is not prime")));
    }
    if p <= 3 || p % 6 != 5 {
        return Err(Error::InvalidFamily(format!("p = {p} must be a prime > 3 with p = -1 mod 6")));
    }
    if c == 0 || c.is_multiple_of(2) {
        return Err(Error::InvalidFamily(format!("c = {c} must be odd")));
    }
    Ok(())
}

/// Names the first failing condition, or `None` when all hold.
pub fn sufficiency_failure(p: u32, c: u32, s: u32) -> Result<Option<&'static str>> {
    check_e1_family(p, c)?;
    if s == 0 || !s.is_multiple_of(c) {
        return Ok(Some("c | s"));
    }
    if !((p as u64 + 1) * s as u64).is_multiple_of(8) {
        return Ok(Some("8 | (p+1)s"));
    }
    let qm1 = checked_pow(p as u128, c)
        .map(|q| q - 1)
        .filter(|&v| v < 1u128 << 60)
        .ok_or_else(|| Error::InvalidParams(format!("q = {p}^{c} too large")))?;
    let m = 3 * qm1;
    if pow_mod(p as u128, s as u128, m) != 1 % m {
        return Ok(Some("3(p^c - 1) | p^s - 1"));
    }
    Ok(None)
}

/// Smallest `s` for which `p^s` is sufficiently large.
pub fn min_sufficient_s(p: u32, c: u32) -> Result<u32> {
    check_e1_family(p, c)?;
    // s must be a multiple of lcm(2c, 8 / gcd(8, p + 1)); the search stays below 8c.
    (1..=8 * c)
        .find(|&s| matches!(sufficiency_failure(p, c, s), Ok(None)))
        .ok_or_else(|| Error::Internal(format!("no sufficient s found for p={p}, c={c}")))
}

/// All `sigma` with `sigma^(6(q-1)) = -1`.
pub fn solve_sigma(field: &FieldCtx, q: u128) -> Result<Vec<Fe>> {
    let k = 12 * (q - 1);
    let h = field.element_of_order(k).ok_or_else(|| {
        Error::NoSolution(format!(
            "12(q-1) = {k} does not divide r - 1 = {}",
            field.order() - 1
        ))
    })?;
    // sigma^(6(q-1)) = -1 exactly for the odd powers of an element of order 12(q-1)
    let h2 = field.square(h);
    let mut cur = h;
    let mut out = Vec::with_capacity((k / 2) as usize);
    for _ in 0..k / 2 {
        out.push(cur);
        cur = field.mul(cur, h2);
    }
    out.sort();
    Ok(out)
}

/// Solves `A x = b` over GF(p); returns a particular solution and a kernel basis.
fn solve_prime_field(
    a: &[Vec<u32>],
    b: &[u32],
    p: u32,
) -> Option<(Vec<u32>, Vec<Vec<u32>>)> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let pm = p as u64;
    let mut m: Vec<Vec<u64>> = a
        .iter()
        .zip(b)
        .map(|(row, &bi)| row.iter().map(|&v| v as u64).chain([bi as u64]).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, pr);
        let inv = pow_mod(m[r][c] as u128, (p - 2) as u128, p as u128) as u64;
        for v in m[r].iter_mut() {
            *v = *v * inv % pm;
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..=cols {
                    m[i][j] = (m[i][j] + (pm - f) * m[r][j]) % pm;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| row[cols] != 0) {
        return None;
    }
    let mut particular = vec![0u32; cols];
    for (i, &c) in pivots.iter().enumerate() {
        particular[c] = m[i][cols] as u32;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let kernel = free
        .iter()
        .map(|&f| {
            let mut v = vec![0u32; cols];
            v[f] = 1;
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = ((pm - m[i][f]) % pm) as u32;
            }
            v
        })
        .collect();
    Some((particular, kernel))
}

/// All `beta` with `beta^q + beta = 1`, via the GF(p)-linear map `beta -> beta^q + beta`.
pub fn solve_beta(field: &FieldCtx, q: u128) -> Result<Vec<Fe>> {
    let s = field.degree();
    let p = field.p();
    let columns: Vec<Fe> = (0..s)
        .map(|i| {
            let mut e = Fe::ZERO;
            e.0[i] = 1;
            field.add(field.pow(e, q), e)
        })
        .collect();
    let matrix: Vec<Vec<u32>> = (0..s)
        .map(|row| columns.iter().map(|col| col.0[row] as u32).collect())
        .collect();
    let rhs: Vec<u32> = field.one().0[..s].iter().map(|&c| c as u32).collect();
    let (particular, kernel) = solve_prime_field(&matrix, &rhs, p)
        .ok_or_else(|| Error::Internal("beta^q + beta = 1 has no solution".into()))?;

    let count = checked_pow(p as u128, kernel.len() as u32)
        .filter(|&n| n <= 1 << 24)
        .ok_or_else(|| Error::Internal("solution set of beta^q + beta = 1 too large".into()))?;
    let mut out = Vec::with_capacity(count as usize);
    for mut idx in 0..count {
        let mut v: Vec<u64> = particular.iter().map(|&c| c as u64).collect();
        for k in &kernel {
            let t = (idx % p as u128) as u64;
            idx /= p as u128;
            for (vi, &ki) in v.iter_mut().zip(k) {
                *vi = (*vi + t * ki as u64) % p as u64;
            }
        }
        let coeffs: Vec<u32> = v.into_iter().map(|c| c as u32).collect();
        out.push(field.from_coeffs(&coeffs)?);
    }
    out.sort();
    Ok(out)
}
