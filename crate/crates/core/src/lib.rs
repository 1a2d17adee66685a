//! Exact Mordell-Weil lattice computations for elliptic curves over
//! function fields of positive characteristic, and the sphere packing
//! density bounds they yield.

pub mod curve;
pub mod error;
pub mod field;
pub mod bounds;
pub mod heights;
pub mod io;
pub mod lattice;
pub mod poly;
pub mod scalar;

pub use error::{Error, Result};

/// Exact rational scalar used by every height and Gram computation.
pub type Rational = num_rational::BigRational;
/// Heights and pairing values.
pub type HeightValue = Rational;
pub type RationalMatrix = lattice::Matrix<Rational>;
pub type RealMatrix = lattice::Matrix<f64>;
pub type RealMatrix32 = lattice::Matrix<f32>;
