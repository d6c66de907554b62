//! Term orders: lex, graded lex, graded reverse lex, and block orders.

use std::cmp::Ordering;

use super::Monomial;
use crate::error::{Error, Result};

/// A monomial order.
///
/// `Block` splits the exponent vector into a leading group of `elim`
/// variables compared under `outer` and a trailing group compared under
/// `inner` on ties. Any monomial that touches the leading group beats every
/// monomial that does not, which is exactly the elimination property.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MonomialOrder {
    Lex,
    DegLex,
    DegRevLex,
    Block {
        elim: usize,
        outer: Box<MonomialOrder>,
        inner: Box<MonomialOrder>,
    },
}

impl MonomialOrder {
    pub fn block(elim: usize, outer: MonomialOrder, inner: MonomialOrder) -> Self {
        MonomialOrder::Block {
            elim,
            outer: Box::new(outer),
            inner: Box::new(inner),
        }
    }

    /// Compare two monomials of the same ring; panics on a length mismatch.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.try_compare(a, b).expect("monomials from different rings")
    }

    pub fn try_compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.len() != b.len() {
            return Err(Error::MismatchedVariables);
        }
        Ok(self.cmp_slices(a.exponents(), b.exponents()))
    }

    fn cmp_slices(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Lex => lex(a, b),
            MonomialOrder::DegLex => deg(a).cmp(&deg(b)).then_with(|| lex(a, b)),
            MonomialOrder::DegRevLex => deg(a).cmp(&deg(b)).then_with(|| revlex(a, b)),
            MonomialOrder::Block { elim, outer, inner } => {
                let k = (*elim).min(a.len());
                outer
                    .cmp_slices(&a[..k], &b[..k])
                    .then_with(|| inner.cmp_slices(&a[k..], &b[k..]))
            }
        }
    }
}

fn deg(a: &[u32]) -> u64 {
    a.iter().map(|&e| e as u64).sum()
}

fn lex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

/// Reverse-lex tiebreak: scanning from the last variable, the first
/// difference decides, with the smaller exponent winning.
fn revlex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other.reverse(),
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::from_exponents(exps.to_vec())
    }

    #[test]
    fn lex_prefers_earlier_variables() {
        let ord = MonomialOrder::Lex;
        assert_eq!(ord.compare(&m(&[2, 0]), &m(&[1, 5])), Ordering::Greater);
        assert_eq!(ord.compare(&m(&[1, 2]), &m(&[1, 3])), Ordering::Less);
    }

    #[test]
    fn graded_orders_split_on_the_classic_pair() {
        // x^2*y*z vs x*y^3 with x > y > z: deglex says the first is larger,
        // degrevlex the second.
        let a = m(&[2, 1, 1]);
        let b = m(&[1, 3, 0]);
        assert_eq!(MonomialOrder::DegLex.compare(&a, &b), Ordering::Greater);
        assert_eq!(MonomialOrder::DegRevLex.compare(&a, &b), Ordering::Less);
    }

    #[test]
    fn degree_dominates_graded_orders() {
        let big = m(&[0, 0, 4]);
        let small = m(&[1, 1, 1]);
        assert_eq!(MonomialOrder::DegLex.compare(&big, &small), Ordering::Greater);
        assert_eq!(MonomialOrder::DegRevLex.compare(&big, &small), Ordering::Greater);
    }

    #[test]
    fn block_order_eliminates_leading_variables() {
        // Ring (t, x, y); eliminate t. Anything with t outranks anything
        // without, regardless of the tail.
        let ord = MonomialOrder::block(1, MonomialOrder::Lex, MonomialOrder::DegRevLex);
        assert_eq!(ord.compare(&m(&[1, 0, 0]), &m(&[0, 7, 7])), Ordering::Greater);
        assert_eq!(ord.compare(&m(&[0, 2, 0]), &m(&[0, 1, 1])), Ordering::Greater);
    }

    #[test]
    fn mismatched_lengths_error() {
        let e = MonomialOrder::Lex.try_compare(&m(&[1]), &m(&[1, 0]));
        assert_eq!(e, Err(Error::MismatchedVariables));
    }
}
