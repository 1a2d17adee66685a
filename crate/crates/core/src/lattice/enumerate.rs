//! Shortest vector by Fincke-Pohst enumeration.
//!
//! The search tree is pruned in floating point with a small slack; every
//! candidate leaf is re-evaluated exactly, so the returned norm is exact.

use num_bigint::BigInt;
use num_traits::Zero;

use super::matrix::Matrix;
use super::reduce::lll_gram;
use crate::scalar::Scalar;
use crate::Rational;

const SLACK: f64 = 1e-9;

struct Search<'a> {
    n: usize,
    mu: Vec<Vec<f64>>,
    d: Vec<f64>,
    gram: &'a Matrix<Rational>,
    bound: f64,
    best: Rational,
    best_x: Vec<i64>,
    x: Vec<i64>,
}

impl Search<'_> {
    fn exact_norm(&self, x: &[i64]) -> Rational {
        let mut s = Rational::zero();
        for i in 0..self.n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..self.n {
                if x[j] != 0 {
                    s += &self.gram[(i, j)] * Rational::from_integer((x[i] * x[j]).into());
                }
            }
        }
        s
    }

    fn descend(&mut self, level: usize, partial: f64) {
        let n = self.n;
        let center: f64 = -(level + 1..n)
            .map(|j| self.mu[j][level] * self.x[j] as f64)
            .sum::<f64>();
        let room = (self.bound * (1.0 + SLACK) - partial) / self.d[level];
        if room < 0.0 {
            return;
        }
        let r = room.sqrt();
        let mut lo = (center - r).ceil() as i64;
        let hi = (center + r).floor() as i64;
        // x and -x have the same norm: make the leading nonzero coordinate positive
        if self.x[level + 1..].iter().all(|&v| v == 0) {
            lo = lo.max(0);
        }
        for v in lo..=hi {
            self.x[level] = v;
            let diff = v as f64 - center;
            let p = partial + self.d[level] * diff * diff;
            if level == 0 {
                if self.x.iter().any(|&c| c != 0) {
                    let norm = self.exact_norm(&self.x);
                    if norm < self.best {
                        self.bound = norm.to_f64();
                        self.best = norm;
                        self.best_x = self.x.clone();
                    }
                }
            } else {
                self.descend(level - 1, p);
            }
        }
        self.x[level] = 0;
    }
}

/// Minimum nonzero norm of the lattice with Gram matrix `gram` and a witness
/// in the coordinates of that basis.
pub fn shortest_vector(gram: &Matrix<Rational>) -> (Rational, Vec<BigInt>) {
    let n = gram.rows();
    let (red, u) = lll_gram(gram);
    let (l, d) = red.ldl().expect("positive definite");
    let start = (0..n)
        .min_by(|&a, &b| red[(a, a)].cmp(&red[(b, b)]))
        .expect("rank >= 1");
    let mut search = Search {
        n,
        mu: (0..n).map(|i| (0..n).map(|j| l[(i, j)].to_f64()).collect()).collect(),
        d: d.iter().map(Scalar::to_f64).collect(),
        gram: &red,
        bound: red[(start, start)].to_f64(),
        best: red[(start, start)].clone(),
        best_x: (0..n).map(|i| i64::from(i == start)).collect(),
        x: vec![0; n],
    };
    search.descend(n - 1, 0.0);
    let witness = (0..n)
        .map(|j| {
            (0..n)
                .map(|i| Rational::from_integer(search.best_x[i].into()) * &u[(i, j)])
                .sum::<Rational>()
                .to_integer()
        })
        .collect();
    (search.best, witness)
}
