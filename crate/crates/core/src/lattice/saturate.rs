//! Basis of the lattice spanned by a dependent generating set, from its Gram
//! matrix alone.
//!
//! 1. Pick a maximal independent subset `B` greedily (exact Gram-Schmidt).
//! 2. Express every generator in `B`-coordinates; clear the common
//!    denominator `M`, so the scaled lattice sits between `M Z^n` and `Z^n`.
//! 3. Triangularize the integer coordinate rows modulo `M` (Hermite form).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::Matrix;
use super::LatticeBasis;
use crate::error::{Error, Result};
use crate::Rational;

/// Greedy maximal independent subset of the generators, in input order.
pub fn independent_subset(g: &Matrix<Rational>) -> Result<Vec<usize>> {
    let n = g.rows();
    let mut basis: Vec<usize> = Vec::new();
    // mu[j][k] and squared lengths d[j] of the orthogonalized basis vectors
    let mut mu: Vec<Vec<Rational>> = Vec::new();
    let mut d: Vec<Rational> = Vec::new();
    for i in 0..n {
        if g[(i, i)].is_negative() {
            return Err(Error::NotPsd(format!("negative diagonal entry at {i}")));
        }
        // r[j] = <v_i, b_j*>
        let mut r: Vec<Rational> = Vec::with_capacity(basis.len());
        for (j, &bj) in basis.iter().enumerate() {
            let mut s = g[(i, bj)].clone();
            for k in 0..j {
                s -= &mu[j][k] * &r[k];
            }
            r.push(s);
        }
        let mut residual = g[(i, i)].clone();
        for j in 0..basis.len() {
            residual -= &r[j] * &r[j] / &d[j];
        }
        if residual.is_negative() {
            return Err(Error::NotPsd(format!("generator {i} has negative residual norm")));
        }
        if residual.is_zero() {
            continue;
        }
        mu.push(r.iter().zip(&d).map(|(rj, dj)| rj / dj).collect());
        d.push(residual);
        basis.push(i);
    }
    Ok(basis)
}

fn lcm_denominators<'a>(it: impl Iterator<Item = &'a Rational>) -> BigInt {
    it.fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// Integer rows spanning the same lattice as `rows`, given `modulus * Z^n` lies in it.
/// Output is upper triangular with positive diagonal and reduced off-diagonal entries.
pub fn hermite_mod(rows: &[Vec<BigInt>], n: usize, modulus: &BigInt) -> Vec<Vec<BigInt>> {
    let mut h: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { modulus.clone() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    for row in rows {
        let mut v: Vec<BigInt> = row.iter().map(|x| x.mod_floor(modulus)).collect();
        for j in 0..n {
            if v[j].is_zero() {
                continue;
            }
            let egcd = h[j][j].extended_gcd(&v[j]);
            let (g, a, b) = (egcd.gcd, egcd.x, egcd.y);
            let hj = &h[j][j] / &g;
            let vj = &v[j] / &g;
            let mut new_h = Vec::with_capacity(n);
            let mut new_v = Vec::with_capacity(n);
            for k in 0..n {
                new_h.push((&a * &h[j][k] + &b * &v[k]).mod_floor(modulus));
                new_v.push((&vj * &h[j][k] - &hj * &v[k]).mod_floor(modulus));
            }
            // the diagonal must stay the exact gcd, not its residue
            new_h[j] = g;
            h[j] = new_h;
            v = new_v;
        }
    }
    // canonical reduction above the diagonal
    for k in 0..n {
        for i in 0..k {
            let f = h[i][k].div_floor(&h[k][k]);
            if !f.is_zero() {
                for c in k..n {
                    let t = &f * &h[k][c];
                    h[i][c] -= t;
                }
            }
        }
    }
    h
}

/// Gram matrix of a basis of the lattice spanned by all generators of `g`.
pub fn saturate(g: &Matrix<Rational>) -> Result<LatticeBasis> {
    if !g.is_symmetric() {
        return Err(Error::NotPsd("Gram matrix is not symmetric".into()));
    }
    let basis = independent_subset(g)?;
    let n = basis.len();
    if n == 0 {
        return Err(Error::RankDeficient { expected: 1, found: 0 });
    }
    let gb = g.submatrix(&basis, &basis);
    let gb_inv = gb
        .inverse()
        .ok_or_else(|| Error::Internal("independent subset has singular Gram block".into()))?;

    // integer adjugate-like matrix: gb_inv = adj / scale
    let scale = lcm_denominators(gb_inv.entries().iter());
    let scale_q = Rational::from_integer(scale.clone());
    let adj = gb_inv.map(|x| (x * &scale_q).to_integer());

    let all: Vec<usize> = (0..g.rows()).collect();
    let cross = g.submatrix(&basis, &all);
    let cross_den = lcm_denominators(cross.entries().iter());
    let cross_q = Rational::from_integer(cross_den.clone());
    let cross_int = cross.map(|x| (x * &cross_q).to_integer());

    // coordinates of generator k are adj * cross_int[:, k] / (scale * cross_den)
    let mut coords: Vec<Vec<BigInt>> = Vec::with_capacity(g.rows());
    for k in 0..g.rows() {
        let w: Vec<BigInt> = (0..n)
            .map(|i| (0..n).map(|j| &adj[(i, j)] * &cross_int[(j, k)]).sum())
            .collect();
        coords.push(w);
    }
    let mut modulus = &scale * &cross_den;
    let common = coords
        .iter()
        .flatten()
        .fold(modulus.clone(), |acc, x| acc.gcd(x));
    if !common.is_one() {
        modulus /= &common;
        for w in coords.iter_mut() {
            for x in w.iter_mut() {
                *x /= &common;
            }
        }
    }

    // each basis generator must map to modulus * e_i
    for (i, &b) in basis.iter().enumerate() {
        let ok = coords[b]
            .iter()
            .enumerate()
            .all(|(j, x)| if i == j { *x == modulus } else { x.is_zero() });
        if !ok {
            return Err(Error::Internal("basis coordinates are not unit vectors".into()));
        }
    }
    // the coordinates must reproduce every norm exactly
    let m_q = Rational::from_integer(modulus.clone());
    for (k, w) in coords.iter().enumerate() {
        let wq: Vec<Rational> = w.iter().map(|x| Rational::from_integer(x.clone()) / &m_q).collect();
        let mut norm = Rational::zero();
        for i in 0..n {
            for j in 0..n {
                norm += &wq[i] * &gb[(i, j)] * &wq[j];
            }
        }
        if norm != g[(k, k)] {
            return Err(Error::NotPsd(format!(
                "generator {k} is inconsistent with the independent subset"
            )));
        }
    }

    let h = hermite_mod(&coords, n, &modulus);
    let change = Matrix::from_fn(n, n, |i, j| {
        Rational::new(h[i][j].clone(), modulus.clone())
    });
    let gram = change.congruence(&gb);
    Ok(LatticeBasis::from_gram_unchecked(gram, Some(basis)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qi(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn redundant_generators_collapse() {
        // {v, v, 2v} with |v|^2 = 3
        let g = Matrix::from_fn(3, 3, |i, j| {
            let c = [1, 1, 2];
            qi(3 * c[i] * c[j])
        });
        let b = saturate(&g).unwrap();
        assert_eq!(b.rank(), 1);
        assert_eq!(b.det(), qi(3));
    }

    #[test]
    fn finds_finer_lattice() {
        // 2e1, 3e1 in Z: spans Z
        let g = Matrix::from_fn(2, 2, |i, j| {
            let c = [2, 3];
            qi(c[i] * c[j])
        });
        assert_eq!(saturate(&g).unwrap().det(), qi(1));
    }

    #[test]
    fn rejects_zero_and_non_psd() {
        let z = Matrix::from_fn(2, 2, |_, _| qi(0));
        assert!(matches!(saturate(&z), Err(Error::RankDeficient { .. })));
        let bad = Matrix::from_rows(vec![vec![qi(1), qi(2)], vec![qi(2), qi(1)]]);
        assert!(matches!(saturate(&bad), Err(Error::NotPsd(_))));
        let asym = Matrix::from_rows(vec![vec![qi(1), qi(0)], vec![qi(1), qi(1)]]);
        assert!(matches!(saturate(&asym), Err(Error::NotPsd(_))));
    }

    #[test]
    fn hermite_basic() {
        let rows = vec![vec![BigInt::from(4), BigInt::from(2)], vec![BigInt::from(2), BigInt::from(4)]];
        let h = hermite_mod(&rows, 2, &BigInt::from(12));
        // lattice spanned by (4,2), (2,4), 12 Z^2 has determinant 12
        let det = &h[0][0] * &h[1][1];
        assert_eq!(det, BigInt::from(12));
        assert!(h[1][0].is_zero());
    }
}
