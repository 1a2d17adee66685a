//! LLL reduction driven purely by the Gram matrix.

use super::matrix::Matrix;
use crate::scalar::Scalar;

/// Gram-Schmidt data `(mu, B)` of a positive definite Gram matrix.
fn gso<T: Scalar>(g: &Matrix<T>) -> (Matrix<T>, Vec<T>) {
    g.ldl().expect("LLL input must be positive definite")
}

/// LLL-reduces the basis described by `g` with parameter `3/4`.
///
/// Returns the reduced Gram matrix and the unimodular transform `U`
/// (rows: new basis vectors in old coordinates), so `U g U^T` is the result.
pub fn lll_gram<T: Scalar>(g: &Matrix<T>) -> (Matrix<T>, Matrix<T>) {
    let n = g.rows();
    let mut g = g.clone();
    let mut u = Matrix::<T>::identity(n);
    if n <= 1 {
        return (g, u);
    }
    let delta = T::from_i64(3) / T::from_i64(4);
    let (mut mu, mut b) = gso(&g);
    let mut k = 1;
    while k < n {
        for j in (0..k).rev() {
            let r = mu[(k, j)].round_nearest();
            if r.is_zero() {
                continue;
            }
            // b_k -= r b_j
            for i in 0..n {
                let v = g[(j, i)].clone() * r.clone();
                g[(k, i)] = g[(k, i)].clone() - v;
                let w = u[(j, i)].clone() * r.clone();
                u[(k, i)] = u[(k, i)].clone() - w;
            }
            for i in 0..n {
                let v = g[(i, j)].clone() * r.clone();
                g[(i, k)] = g[(i, k)].clone() - v;
            }
            mu[(k, j)] = mu[(k, j)].clone() - r.clone();
            for i in 0..j {
                let v = mu[(j, i)].clone() * r.clone();
                mu[(k, i)] = mu[(k, i)].clone() - v;
            }
        }
        let m = mu[(k, k - 1)].clone();
        if b[k] >= (delta.clone() - m.clone() * m) * b[k - 1].clone() {
            k += 1;
        } else {
            g.swap_rows(k, k - 1);
            g.swap_cols(k, k - 1);
            u.swap_rows(k, k - 1);
            (mu, b) = gso(&g);
            k = (k - 1).max(1);
        }
    }
    (g, u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use num_traits::Signed;

    fn qi(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn reduces_skewed_basis() {
        // basis (1,0), (7,1) of Z^2
        let g = Matrix::from_rows(vec![vec![qi(1), qi(7)], vec![qi(7), qi(50)]]);
        let (red, u) = lll_gram(&g);
        assert_eq!(red, Matrix::identity(2));
        assert_eq!(u.congruence(&g), red);
        assert_eq!(u.det().abs(), qi(1));
    }

    #[test]
    fn float_path() {
        let g: Matrix<f64> = Matrix::from_rows(vec![vec![1.0, 7.0], vec![7.0, 50.0]]);
        let (red, _) = lll_gram(&g);
        assert!((red[(1, 1)] - 1.0).abs() < 1e-9);
    }
}
