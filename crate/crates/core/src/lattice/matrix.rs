use std::ops::{Index, IndexMut};

use crate::scalar::{Real, Scalar};

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn mul(&self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        Self::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(T::zero(), |acc, k| {
                acc + self[(i, k)].clone() * rhs[(k, j)].clone()
            })
        })
    }

    /// `self * g * self^T`.
    pub fn congruence(&self, g: &Matrix<T>) -> Matrix<T> {
        self.mul(g).mul(&self.transpose())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// Row echelon form by elimination with largest-magnitude pivots;
    /// returns the pivot columns and the sign of the row permutation.
    fn echelon(&mut self) -> (Vec<usize>, bool) {
        let mut pivots = Vec::new();
        let mut flipped = false;
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let best = (r..self.rows)
                .filter(|&i| !self[(i, c)].is_zero())
                .max_by(|&a, &b| {
                    self[(a, c)]
                        .abs()
                        .partial_cmp(&self[(b, c)].abs())
                        .unwrap_or(std::cmp::Ordering::Equal)
                });
            let Some(pr) = best else { continue };
            if pr != r {
                self.swap_rows(pr, r);
                flipped = !flipped;
            }
            let pivot = self[(r, c)].clone();
            for i in r + 1..self.rows {
                if self[(i, c)].is_zero() {
                    continue;
                }
                let factor = self[(i, c)].clone() / pivot.clone();
                for j in c..self.cols {
                    let v = self[(r, j)].clone() * factor.clone();
                    self[(i, j)] = self[(i, j)].clone() - v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (pivots, flipped)
    }

    /// Exact for exact scalars.
    pub fn rank(&self) -> usize {
        self.clone().echelon().0.len()
    }

    pub fn det(&self) -> T {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let mut m = self.clone();
        let (pivots, flipped) = m.echelon();
        if pivots.len() < self.rows {
            return T::zero();
        }
        let d = (0..self.rows).fold(T::one(), |acc, i| acc * m[(i, i)].clone());
        if flipped {
            -d
        } else {
            d
        }
    }

    /// Gauss-Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<Matrix<T>> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                T::one()
            } else {
                T::zero()
            }
        });
        for c in 0..n {
            let pr = (c..n).find(|&i| !aug[(i, c)].is_zero())?;
            aug.swap_rows(pr, c);
            let inv = T::one() / aug[(c, c)].clone();
            for j in 0..2 * n {
                aug[(c, j)] = aug[(c, j)].clone() * inv.clone();
            }
            for i in 0..n {
                if i == c || aug[(i, c)].is_zero() {
                    continue;
                }
                let f = aug[(i, c)].clone();
                for j in 0..2 * n {
                    let v = aug[(c, j)].clone() * f.clone();
                    aug[(i, j)] = aug[(i, j)].clone() - v;
                }
            }
        }
        Some(Matrix::from_fn(n, n, |i, j| aug[(i, j + n)].clone()))
    }

    /// `G = L D L^T` with `L` unit lower triangular, for positive definite `G`.
    ///
    /// `L[i][j]` are the Gram-Schmidt coefficients and `D` the squared lengths
    /// of the orthogonalized vectors. `None` if some pivot is not positive.
    pub fn ldl(&self) -> Option<(Matrix<T>, Vec<T>)> {
        assert!(self.is_square());
        let n = self.rows;
        let mut l = Matrix::<T>::identity(n);
        let mut d: Vec<T> = Vec::with_capacity(n);
        for i in 0..n {
            for j in 0..i {
                let mut s = self[(i, j)].clone();
                for k in 0..j {
                    s = s - l[(i, k)].clone() * l[(j, k)].clone() * d[k].clone();
                }
                l[(i, j)] = s / d[j].clone();
            }
            let mut s = self[(i, i)].clone();
            for k in 0..i {
                s = s - l[(i, k)].clone() * l[(i, k)].clone() * d[k].clone();
            }
            if !s.is_positive() {
                return None;
            }
            d.push(s);
        }
        Some((l, d))
    }
}

impl<T: Real> Matrix<T> {
    /// Upper triangular `R` with `R^T R = self`.
    pub fn cholesky_upper(&self) -> Option<Matrix<T>> {
        let (l, d) = self.ldl()?;
        let n = self.rows;
        Some(Matrix::from_fn(n, n, |i, j| {
            if i > j {
                T::zero()
            } else {
                l[(j, i)] * d[i].sqrt()
            }
        }))
    }
}
