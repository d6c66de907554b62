//! Sparse polynomials as monomial-to-coefficient maps.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Monomial, MonomialOrder};
use crate::error::{Error, Result};
use crate::scalar::{ExactScalar, Scalar};

/// Ordered list of variable names shared by every polynomial of one ring.
///
/// Clones are cheap (the table sits behind an `Arc`); two sets are equal
/// when they list the same names in the same order.
#[derive(Clone, Debug)]
pub struct VariableSet {
    names: Arc<Vec<String>>,
}

impl VariableSet {
    /// Build a variable set, rejecting duplicate names.
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::DuplicateVariable(n.clone()));
            }
        }
        Ok(VariableSet { names: Arc::new(names) })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

impl PartialEq for VariableSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }
}

impl Eq for VariableSet {}

/// Sparse multivariate polynomial over the scalar type `C`.
///
/// Zero coefficients are never stored; the zero polynomial has no terms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial<C> {
    vars: VariableSet,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Scalar> Polynomial<C> {
    pub fn zero(vars: &VariableSet) -> Self {
        Polynomial { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &VariableSet, c: C) -> Self {
        let mut f = Self::zero(vars);
        f.add_term(Monomial::one(vars.len()), c);
        f
    }

    pub fn one(vars: &VariableSet) -> Self {
        Self::constant(vars, C::one())
    }

    /// The variable with index `i`.
    pub fn variable(vars: &VariableSet, i: usize) -> Self {
        Self::term(vars, Monomial::axis(vars.len(), i, 1), C::one())
    }

    pub fn variable_named(vars: &VariableSet, name: &str) -> Result<Self> {
        let i = vars
            .index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.into()))?;
        Ok(Self::variable(vars, i))
    }

    /// The single term `c * mono`.
    pub fn term(vars: &VariableSet, mono: Monomial, c: C) -> Self {
        assert_eq!(mono.len(), vars.len(), "monomial length != ring size");
        let mut f = Self::zero(vars);
        f.add_term(mono, c);
        f
    }

    pub fn from_terms<I>(vars: &VariableSet, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
    {
        let mut f = Self::zero(vars);
        for (m, c) in terms {
            assert_eq!(m.len(), vars.len(), "monomial length != ring size");
            f.add_term(m, c);
        }
        f
    }

    pub fn vars(&self) -> &VariableSet {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    /// Coefficient of `m`, zero when absent.
    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// `Some(c)` when the polynomial is the constant `c`.
    pub fn constant_value(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: C) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                c.debug_assert_canonical();
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    sum.debug_assert_canonical();
                    e.insert(sum);
                }
            }
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.vars != other.vars {
            return Err(Error::MismatchedVariables);
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        if self.vars != other.vars {
            return Err(Error::MismatchedVariables);
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.vars != other.vars {
            return Err(Error::MismatchedVariables);
        }
        let mut out = Self::zero(&self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        Ok(out)
    }

    /// Multiply by a scalar.
    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(&self.vars);
        for (m, a) in &self.terms {
            out.add_term(m.clone(), a.clone() * c.clone());
        }
        out
    }

    /// Multiply by the single term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &C) -> Self {
        let mut out = Self::zero(&self.vars);
        if c.is_zero() {
            return out;
        }
        for (m1, c1) in &self.terms {
            out.add_term(m1.mul(m), c1.clone() * c.clone());
        }
        out
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.vars);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.checked_mul(&base).unwrap();
            }
            k >>= 1;
            if k > 0 {
                base = base.checked_mul(&base).unwrap();
            }
        }
        acc
    }

    /// Leading term under `order`, `None` for zero.
    pub fn leading(&self, order: &MonomialOrder) -> Option<(&Monomial, &C)> {
        self.terms
            .iter()
            .max_by(|(m1, _), (m2, _)| order.compare(m1, m2))
    }

    /// Terms sorted descending under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&Monomial, &C)> {
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by(|(m1, _), (m2, _)| order.compare(m2, m1));
        ts
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.exponent(i);
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[i] = e - 1;
            out.add_term(Monomial::from_exponents(exps), c.clone() * C::from_u32(e));
        }
        out
    }

    /// Rewrite into the ring `target`, sending each variable to its image in
    /// `bindings` (looked up by name) or, when unbound, to the target
    /// variable of the same name. Only variables that actually occur need an
    /// image; bound images must be polynomials over `target`.
    pub fn substitute(
        &self,
        target: &VariableSet,
        bindings: &[(&str, Polynomial<C>)],
    ) -> Result<Polynomial<C>> {
        for (_, img) in bindings {
            if img.vars != *target {
                return Err(Error::MismatchedVariables);
            }
        }
        let mut images: Vec<Option<Polynomial<C>>> = vec![None; self.vars.len()];
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for i in 0..self.vars.len() {
                let e = m.exponent(i);
                if e == 0 {
                    continue;
                }
                if images[i].is_none() {
                    let name = self.vars.name(i);
                    let img = match bindings.iter().find(|(n, _)| *n == name) {
                        Some((_, f)) => f.clone(),
                        None => Polynomial::variable_named(target, name)?,
                    };
                    images[i] = Some(img);
                }
                term = term.checked_mul(&images[i].as_ref().unwrap().pow(e))?;
            }
            out = out.checked_add(&term)?;
        }
        Ok(out)
    }
}

impl<C: ExactScalar> Polynomial<C> {
    /// Scale to integer coefficients of content one with a positive leading
    /// coefficient under `order`.
    pub fn integer_normalized(&self, order: &MonomialOrder) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = BigInt::one();
        for c in self.terms.values() {
            den = den.lcm(&c.denominator());
        }
        let mut content = BigInt::zero();
        for c in self.terms.values() {
            content = content.gcd(&(c.numerator() * (&den / c.denominator())));
        }
        let out = self.scale(&C::from_big(den, content));
        let (_, lc) = out.leading(order).unwrap();
        if lc.is_negative() {
            -&out
        } else {
            out
        }
    }
}

impl<C: Scalar> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn neg(self) -> Polynomial<C> {
        let mut out = Polynomial::zero(&self.vars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<C: Scalar> Add for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn add(self, other: Self) -> Polynomial<C> {
        self.checked_add(other).expect("mismatched variable sets")
    }
}

impl<C: Scalar> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn sub(self, other: Self) -> Polynomial<C> {
        self.checked_sub(other).expect("mismatched variable sets")
    }
}

impl<C: Scalar> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn mul(self, other: Self) -> Polynomial<C> {
        self.checked_mul(other).expect("mismatched variable sets")
    }
}

impl<C: Scalar> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self
            .sorted_terms(&MonomialOrder::DegRevLex)
            .into_iter()
            .enumerate()
        {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            let mono = render_monomial(m, &self.vars);
            if mono.is_empty() {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write!(f, "{}", mono)?;
            } else {
                write!(f, "{}*{}", mag, mono)?;
            }
        }
        Ok(())
    }
}

fn render_monomial(m: &Monomial, vars: &VariableSet) -> String {
    let mut parts = Vec::new();
    for i in 0..m.len() {
        match m.exponent(i) {
            0 => {}
            1 => parts.push(vars.name(i).to_string()),
            e => parts.push(format!("{}^{}", vars.name(i), e)),
        }
    }
    parts.join("*")
}
