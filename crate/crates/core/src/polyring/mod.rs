//! Sparse multivariate polynomial rings.
//!
//! - [`VariableSet`]: shared, ordered list of variable names
//! - [`Monomial`]: exponent vectors
//! - [`MonomialOrder`]: lex, graded, and block elimination orders
//! - [`Polynomial`]: map-backed sparse polynomials over a [`Scalar`]
//! - [`parse_polynomial`]: expression parser (explicit `*` only)
//!
//! [`Scalar`]: crate::scalar::Scalar

mod monomial;
mod order;
mod parser;
mod poly;

pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use parser::parse_polynomial;
pub use poly::{Polynomial, VariableSet};
