//! Scalar coefficient abstraction over num-traits.
//!
//! [`Scalar`] is what plain polynomial arithmetic needs: a signed,
//! field-like type with parse and print support. [`ExactScalar`] adds exact
//! rational structure (numerator/denominator over `BigInt`) for the layers
//! where rounding would be meaningless: coefficient recursions, conjugation
//! weights, content normalization, Groebner bases. `Rat` is the intended
//! instance everywhere; `f64` satisfies `Scalar` for generic ring work.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};

/// Coefficient type for polynomial arithmetic.
pub trait Scalar: Clone + PartialEq + Debug + Display + Signed {
    /// Parse an unsigned decimal integer literal.
    fn from_decimal_str(digits: &str) -> Option<Self>;

    /// The scalar for a small nonnegative integer.
    fn from_u32(n: u32) -> Self;

    /// Canonical-form check run after arithmetic in debug builds.
    fn debug_assert_canonical(&self) {}
}

impl Scalar for BigRational {
    fn from_decimal_str(digits: &str) -> Option<Self> {
        BigInt::from_str(digits).ok().map(BigRational::from_integer)
    }

    fn from_u32(n: u32) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn debug_assert_canonical(&self) {
        debug_assert!(
            self.denom().is_positive(),
            "denominator must be positive: {}",
            self
        );
        debug_assert!(
            self.numer().gcd(self.denom()).is_one(),
            "rational not in lowest terms: {}",
            self
        );
    }
}

impl Scalar for f64 {
    fn from_decimal_str(digits: &str) -> Option<Self> {
        f64::from_str(digits).ok()
    }

    fn from_u32(n: u32) -> Self {
        n as f64
    }
}

/// Exact rational scalar with access to numerator and denominator.
pub trait ExactScalar: Scalar + Eq {
    /// `numer / denom` in lowest terms; `denom` must be nonzero.
    fn from_big(numer: BigInt, denom: BigInt) -> Self;
    fn numerator(&self) -> BigInt;
    fn denominator(&self) -> BigInt;

    fn from_int(n: i64) -> Self {
        Self::from_big(BigInt::from(n), BigInt::one())
    }

    /// The fraction `n/d` from machine integers.
    fn ratio(n: i64, d: i64) -> Self {
        Self::from_big(BigInt::from(n), BigInt::from(d))
    }

    /// Integer power, negative exponents allowed (base must be nonzero then).
    fn pow_i64(&self, exp: i64) -> Self {
        let mut base = if exp < 0 {
            Self::one() / self.clone()
        } else {
            self.clone()
        };
        let mut k = exp.unsigned_abs();
        let mut acc = Self::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base.clone();
            }
            k >>= 1;
            if k > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

impl ExactScalar for BigRational {
    fn from_big(numer: BigInt, denom: BigInt) -> Self {
        BigRational::new(numer, denom)
    }

    fn numerator(&self) -> BigInt {
        self.numer().clone()
    }

    fn denominator(&self) -> BigInt {
        self.denom().clone()
    }
}
