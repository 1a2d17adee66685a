//! Exact lattice computations on Gram matrices: saturation, covolume,
//! shortest vectors, E8 recognition and Euclidean embeddings.

pub mod density;
pub mod enumerate;
pub mod gram;
pub mod matrix;
pub mod reduce;
pub mod saturate;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use density::{density_from_normalized, normalized_center_density, DensityReport, SqrtRational};
pub use gram::{gram_from_points, GramJson, GramMatrix};
pub use matrix::Matrix;
pub use saturate::saturate;

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::Rational;

/// Largest rank accepted by [`LatticeBasis::shortest_vector`].
pub const ENUMERATION_RANK_LIMIT: usize = 12;

/// A lattice given by the positive definite Gram matrix of a basis.
#[derive(Clone, Debug, PartialEq)]
pub struct LatticeBasis {
    gram: Matrix<Rational>,
    /// Generator indices that were used as the reference basis, if any.
    source: Option<Vec<usize>>,
}

impl LatticeBasis {
    pub fn new(gram: Matrix<Rational>) -> Result<Self> {
        if !gram.is_symmetric() || gram.rows() == 0 {
            return Err(Error::NotPsd("basis Gram must be square, symmetric and nonempty".into()));
        }
        if gram.ldl().is_none() {
            return Err(Error::NotPsd("basis Gram is not positive definite".into()));
        }
        Ok(LatticeBasis { gram, source: None })
    }

    pub(crate) fn from_gram_unchecked(gram: Matrix<Rational>, source: Option<Vec<usize>>) -> Self {
        LatticeBasis { gram, source }
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &Matrix<Rational> {
        &self.gram
    }

    pub fn independent_generators(&self) -> Option<&[usize]> {
        self.source.as_deref()
    }

    pub fn det(&self) -> Rational {
        self.gram.det()
    }

    /// Covolume `sqrt(det)`.
    pub fn covolume(&self) -> SqrtRational {
        SqrtRational::new(self.det()).expect("positive definite")
    }

    /// LLL-reduced basis of the same lattice.
    pub fn reduced(&self) -> LatticeBasis {
        let (g, _) = reduce::lll_gram(&self.gram);
        LatticeBasis { gram: g, source: None }
    }

    /// Exact minimum norm and a witness in this basis' coordinates.
    pub fn shortest_vector(&self) -> Result<(Rational, Vec<BigInt>)> {
        if self.rank() > ENUMERATION_RANK_LIMIT {
            return Err(Error::RankTooLarge {
                rank: self.rank(),
                limit: ENUMERATION_RANK_LIMIT,
            });
        }
        Ok(enumerate::shortest_vector(&self.gram))
    }

    /// Even, unimodular and of rank 8, with minimum 2.
    pub fn is_e8(&self) -> bool {
        if self.rank() != 8 || self.det() != Rational::one() {
            return false;
        }
        if !self.gram.entries().iter().all(|x| x.is_integer()) {
            return false;
        }
        let two = BigInt::from(2);
        if !(0..8).all(|i| (self.gram[(i, i)].to_integer() % &two).is_zero()) {
            return false;
        }
        matches!(self.shortest_vector(), Ok((m, _)) if m == Rational::from_integer(two))
    }

    /// Upper triangular real coordinates; column `i` is the image of basis vector `i`.
    pub fn euclidean_embedding<F: Real>(&self) -> Result<Matrix<F>> {
        let g = self.gram.map(|x| F::from_f64(crate::scalar::Scalar::to_f64(x)).unwrap());
        g.cholesky_upper()
            .ok_or_else(|| Error::Internal("numerically singular Gram matrix".into()))
    }
}
