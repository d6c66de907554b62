//! Exponent vectors.

use crate::error::{Error, Result};

/// A power product over a fixed number of variables, one exponent each.
///
/// The derived `Ord` compares raw exponent vectors so monomials can key a
/// `BTreeMap`; orders with algebraic meaning live in
/// [`MonomialOrder`](super::MonomialOrder).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    /// The empty product (all exponents zero) over `nvars` variables.
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The single variable power `x_i^e`.
    pub fn axis(nvars: usize, i: usize, e: u32) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = e;
        Monomial { exps }
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::MismatchedVariables);
        }
        Ok(self.mul(other))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len(), "monomials from different rings");
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
            .collect();
        Monomial { exps }
    }

    /// Does `self` divide `other`?
    pub fn divides(&self, other: &Self) -> bool {
        self.len() == other.len()
            && self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    /// `self / other`, when `other` divides `self`.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        if !other.divides(self) {
            return None;
        }
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a - b)
            .collect();
        Some(Monomial { exps })
    }

    pub fn lcm(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len(), "monomials from different rings");
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.max(b))
            .collect();
        Monomial { exps }
    }

    pub fn pow(&self, k: u32) -> Self {
        let exps = self
            .exps
            .iter()
            .map(|&e| e.checked_mul(k).expect("exponent overflow"))
            .collect();
        Monomial { exps }
    }

    /// The exponent vector read back to front.
    pub fn reversed(&self) -> Self {
        let mut exps = self.exps.clone();
        exps.reverse();
        Monomial { exps }
    }
}
