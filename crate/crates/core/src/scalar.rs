//! Scalar abstractions shared by the lattice code.
//!
//! Exact work runs over [`crate::Rational`]; `f64`/`f32` are used for the
//! Euclidean embedding, density reporting and enumeration pruning.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Float, FromPrimitive, Num, Signed, ToPrimitive};

pub trait Scalar: Clone + Debug + PartialOrd + Num + Signed + Send + Sync {
    fn from_i64(v: i64) -> Self;
    /// Nearest integer, ties away from zero.
    fn round_nearest(&self) -> Self;
    fn to_f64(&self) -> f64;
}

impl Scalar for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn round_nearest(&self) -> Self {
        self.round()
    }
    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Scalar for f32 {
    fn from_i64(v: i64) -> Self {
        v as f32
    }
    fn round_nearest(&self) -> Self {
        self.round()
    }
    fn to_f64(&self) -> f64 {
        *self as f64
    }
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn round_nearest(&self) -> Self {
        self.round()
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

/// Floating point scalars.
pub trait Real: Scalar + Float + FromPrimitive {}

impl Real for f32 {}
impl Real for f64 {}
