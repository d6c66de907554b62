//! Exact-arithmetic toolkit for p:-q resonant planar polynomial systems:
//! first-integral coefficients, saddle quantities, time-reversibility, and
//! the symmetry (Sibirsky) ideal with its Groebner-basis implicitization.
//!
//! Modules:
//! - [`polyring`]: sparse multivariate polynomials over exact scalars
//! - [`system`]: resonant family definitions and the monomial weight map
//! - [`integral`]: first-integral recursion, saddle quantities, and an
//!   independent power-series oracle
//! - [`reversibility`]: reversibility tests, the invariant monoid, symmetry
//!   ideal generators, and the reversibility variety as an ideal
//! - [`groebner`]: Buchberger's algorithm, reduced bases, elimination, and
//!   implicitization

pub mod error;
pub mod groebner;
pub mod integral;
pub mod polyring;
pub mod reversibility;
pub mod scalar;
pub mod system;

pub use error::{Error, Result};
pub use scalar::{ExactScalar, Scalar};

/// Exact rational coefficients used throughout the toolkit.
pub type Rat = num_rational::BigRational;

/// Polynomials over [`Rat`].
pub type Poly = polyring::Polynomial<Rat>;
