//! Gram matrices of point sets and their JSON fixture format.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::matrix::Matrix;
use crate::curve::{CurvePoint, WeierstrassCurve};
use crate::error::{Error, Result};
use crate::heights::HeightFunction;
use crate::scalar::Scalar;
use crate::Rational;

/// Symmetric matrix of pairings between `n_gen` generators.
#[derive(Clone, Debug, PartialEq)]
pub struct GramMatrix<T> {
    entries: Matrix<T>,
}

impl<T: Scalar> GramMatrix<T> {
    pub fn new(entries: Matrix<T>) -> Result<Self> {
        if !entries.is_symmetric() {
            return Err(Error::NotPsd("Gram matrix is not symmetric".into()));
        }
        if (0..entries.rows()).any(|i| entries[(i, i)].is_negative()) {
            return Err(Error::NotPsd("negative diagonal entry".into()));
        }
        Ok(GramMatrix { entries })
    }

    pub fn n_gen(&self) -> usize {
        self.entries.rows()
    }

    pub fn entries(&self) -> &Matrix<T> {
        &self.entries
    }

    pub fn rank(&self) -> usize {
        self.entries.rank()
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GramJson {
    pub n_gen: usize,
    pub scale: i64,
    /// Scaled integer entries, upper triangle, row-major.
    pub entries: Vec<i64>,
}

impl GramMatrix<Rational> {
    /// Least common denominator of the entries.
    pub fn scale(&self) -> BigInt {
        self.entries
            .entries()
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
    }

    pub fn to_json(&self) -> Result<GramJson> {
        let scale = self.scale();
        let sq = Rational::from_integer(scale.clone());
        let n = self.n_gen();
        let mut entries = Vec::with_capacity(n * (n + 1) / 2);
        for i in 0..n {
            for j in i..n {
                let v = (&self.entries[(i, j)] * &sq).to_integer();
                entries.push(
                    v.to_i64()
                        .ok_or_else(|| Error::Internal("Gram entry exceeds i64".into()))?,
                );
            }
        }
        Ok(GramJson {
            n_gen: n,
            scale: scale
                .to_i64()
                .ok_or_else(|| Error::Internal("Gram scale exceeds i64".into()))?,
            entries,
        })
    }

    pub fn from_json(json: &GramJson) -> Result<Self> {
        let n = json.n_gen;
        if json.entries.len() != n * (n + 1) / 2 || json.scale <= 0 {
            return Err(Error::Parse("malformed Gram JSON".into()));
        }
        let scale = BigInt::from(json.scale);
        let mut m = Matrix::zeros(n, n);
        let mut it = json.entries.iter();
        for i in 0..n {
            for j in i..n {
                let v = Rational::new(BigInt::from(*it.next().unwrap()), scale.clone());
                m[(j, i)] = v.clone();
                m[(i, j)] = v;
            }
        }
        Self::new(m)
    }

    pub fn to_json_string(&self) -> Result<String> {
        Ok(serde_json::to_string(&self.to_json()?)?)
    }
}

/// Gram matrix of `<P_i, P_j>` after dropping duplicate and sign-repeated points.
///
/// The `N(N+1)/2` pairings are evaluated on the current rayon pool.
pub fn gram_from_points<H: HeightFunction>(
    curve: &WeierstrassCurve,
    points: &[CurvePoint],
    height: &H,
) -> Result<GramMatrix<Rational>> {
    let pts = curve.dedup_signs(points);
    let n = pts.len();
    let heights: Vec<Rational> = pts
        .par_iter()
        .map(|p| height.height(curve, p))
        .collect::<Result<_>>()?;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let half = Rational::new(1.into(), 2.into());
    let values: Vec<Rational> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let hs = height.height_of_sum(curve, &pts[i], &pts[j])?;
            Ok((hs - &heights[i] - &heights[j]) * &half)
        })
        .collect::<Result<_>>()?;
    let mut m = Matrix::zeros(n, n);
    for (i, h) in heights.into_iter().enumerate() {
        m[(i, i)] = h;
    }
    for ((i, j), v) in pairs.into_iter().zip(values) {
        m[(j, i)] = v.clone();
        m[(i, j)] = v;
    }
    GramMatrix::new(m)
}
