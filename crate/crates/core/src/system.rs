//! Resonant family definitions.
//!
//! A family fixes a resonance p:-q (gcd(p,q) = 1) and a finite set S of
//! exponent pairs (u,v), u+v >= 1. The system reads
//!
//! ```text
//!   dx/dt =  x (p - sum_{(u,v) in S} a_{qu,pv} x^{qu} y^{pv})
//!   dy/dt = -y (q - sum_{(u,v) in S} b_{qv,pu} x^{qv} y^{pu})
//! ```
//!
//! Each coefficient is either a rational number or a free symbol; the free
//! symbols generate the parameter ring. Variables are stored with the a's
//! first in canonical term order and the b's mirrored behind them, so the
//! conjugation a_{qu,pv} <-> b_{qv,pu} is exactly reversal of the exponent
//! tuple.

use crate::error::{Error, Result};
use crate::polyring::{Monomial, Polynomial, VariableSet};
use crate::scalar::ExactScalar;
use num_integer::Integer;

/// The resonance ratio p:-q of the linear part; p and q are positive and
/// coprime.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Resonance {
    p: u32,
    q: u32,
}

impl Resonance {
    pub fn new(p: u32, q: u32) -> Result<Self> {
        if p == 0 || q == 0 || p.gcd(&q) != 1 {
            return Err(Error::BadResonance { p, q });
        }
        Ok(Resonance { p, q })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }
}

/// One perturbation exponent pair (u, v) with u + v >= 1.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TermIndex {
    pub u: u32,
    pub v: u32,
}

impl TermIndex {
    pub fn new(u: u32, v: u32) -> Self {
        TermIndex { u, v }
    }
}

/// A monomial in the parameter ring, viewed as the exponent tuple of a word
/// in the coefficient symbols.
pub type ExponentTuple = Monomial;

/// A p:-q resonant family: resonance, exponent set, and per-term coefficient
/// assignments (`None` = free symbol).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SystemFamily<C> {
    resonance: Resonance,
    terms: Vec<TermIndex>,
    a_values: Vec<Option<C>>,
    b_values: Vec<Option<C>>,
    vars: VariableSet,
}

/// Canonical slot order: ascending u+v, ties broken by descending u.
fn canonical_key(t: &TermIndex) -> (u32, std::cmp::Reverse<u32>) {
    (t.u + t.v, std::cmp::Reverse(t.u))
}

fn subscript_name(prefix: &str, j1: u64, j2: u64) -> String {
    if j1 <= 9 && j2 <= 9 {
        format!("{}{}{}", prefix, j1, j2)
    } else {
        format!("{}_{}_{}", prefix, j1, j2)
    }
}

impl<C: ExactScalar> SystemFamily<C> {
    /// Build a family from term specs `(index, a value, b value)`; `None`
    /// keeps the coefficient symbolic. Specs may arrive in any order.
    pub fn new(
        p: u32,
        q: u32,
        specs: Vec<(TermIndex, Option<C>, Option<C>)>,
    ) -> Result<Self> {
        let resonance = Resonance::new(p, q)?;
        let mut specs = specs;
        specs.sort_by_key(|(t, _, _)| canonical_key(t));
        for (i, (t, _, _)) in specs.iter().enumerate() {
            if t.u + t.v == 0 {
                return Err(Error::ZeroTermIndex);
            }
            if specs[..i].iter().any(|(s, _, _)| s == t) {
                return Err(Error::DuplicateTermIndex { u: t.u, v: t.v });
            }
        }
        let terms: Vec<TermIndex> = specs.iter().map(|(t, _, _)| *t).collect();
        let a_values: Vec<Option<C>> = specs.iter().map(|(_, a, _)| a.clone()).collect();
        let b_values: Vec<Option<C>> = specs.iter().map(|(_, _, b)| b.clone()).collect();
        let (p64, q64) = (p as u64, q as u64);
        let mut names: Vec<String> = terms
            .iter()
            .map(|t| subscript_name("a", q64 * t.u as u64, p64 * t.v as u64))
            .collect();
        names.extend(terms.iter().rev().map(|t| {
            subscript_name("b", q64 * t.v as u64, p64 * t.u as u64)
        }));
        let vars = VariableSet::new(names)?;
        Ok(SystemFamily { resonance, terms, a_values, b_values, vars })
    }

    /// All coefficients left symbolic.
    pub fn symbolic(p: u32, q: u32, indices: &[(u32, u32)]) -> Result<Self> {
        Self::new(
            p,
            q,
            indices
                .iter()
                .map(|&(u, v)| (TermIndex::new(u, v), None, None))
                .collect(),
        )
    }

    pub fn resonance(&self) -> Resonance {
        self.resonance
    }

    /// Number of exponent pairs in S.
    pub fn ell(&self) -> usize {
        self.terms.len()
    }

    pub fn term(&self, s: usize) -> TermIndex {
        self.terms[s]
    }

    pub fn terms(&self) -> &[TermIndex] {
        &self.terms
    }

    /// The 2*ell parameter variables: a's in slot order, then b's mirrored.
    pub fn param_vars(&self) -> &VariableSet {
        &self.vars
    }

    /// Ring index of the a-symbol of slot `s`.
    pub fn a_index(&self, s: usize) -> usize {
        s
    }

    /// Ring index of the b-symbol of slot `s`.
    pub fn b_index(&self, s: usize) -> usize {
        2 * self.ell() - 1 - s
    }

    /// Ring index of the conjugate partner of variable `i`.
    pub fn conjugate_index(&self, i: usize) -> usize {
        2 * self.ell() - 1 - i
    }

    pub fn a_value(&self, s: usize) -> Option<&C> {
        self.a_values[s].as_ref()
    }

    pub fn b_value(&self, s: usize) -> Option<&C> {
        self.b_values[s].as_ref()
    }

    pub fn is_fully_numeric(&self) -> bool {
        self.a_values.iter().all(Option::is_some) && self.b_values.iter().all(Option::is_some)
    }

    /// The a-coefficient of slot `s` as a parameter-ring polynomial: its
    /// value when assigned, the corresponding variable when symbolic.
    pub fn a_poly(&self, s: usize) -> Polynomial<C> {
        match &self.a_values[s] {
            Some(c) => Polynomial::constant(&self.vars, c.clone()),
            None => Polynomial::variable(&self.vars, self.a_index(s)),
        }
    }

    pub fn b_poly(&self, s: usize) -> Polynomial<C> {
        match &self.b_values[s] {
            Some(c) => Polynomial::constant(&self.vars, c.clone()),
            None => Polynomial::variable(&self.vars, self.b_index(s)),
        }
    }

    /// The weight of ring variable `i`: its own subscript pair.
    pub fn weight(&self, i: usize) -> (u64, u64) {
        let (p, q) = (self.resonance.p as u64, self.resonance.q as u64);
        let ell = self.ell();
        if i < ell {
            let t = self.terms[i];
            (q * t.u as u64, p * t.v as u64)
        } else {
            let t = self.terms[2 * ell - 1 - i];
            (q * t.v as u64, p * t.u as u64)
        }
    }

    /// The weight map L: sum of variable weights, exponent-weighted.
    pub fn l_map(&self, nu: &ExponentTuple) -> Result<(u64, u64)> {
        self.check_tuple(nu)?;
        let mut l1 = 0u64;
        let mut l2 = 0u64;
        for i in 0..nu.len() {
            let e = nu.exponent(i) as u64;
            if e == 0 {
                continue;
            }
            let (w1, w2) = self.weight(i);
            l1 += e * w1;
            l2 += e * w2;
        }
        Ok((l1, l2))
    }

    /// The conjugate word: every a-symbol swapped with its b-partner. With
    /// the mirrored layout this is reversal of the exponent tuple.
    pub fn hat(&self, nu: &ExponentTuple) -> Result<ExponentTuple> {
        self.check_tuple(nu)?;
        Ok(nu.reversed())
    }

    /// kappa(nu) = (q/p)^(sum of a-exponents - sum of b-exponents).
    pub fn kappa(&self, nu: &ExponentTuple) -> Result<C> {
        self.check_tuple(nu)?;
        let ell = self.ell();
        let mut e = 0i64;
        for i in 0..nu.len() {
            let exp = nu.exponent(i) as i64;
            if i < ell {
                e += exp;
            } else {
                e -= exp;
            }
        }
        let base = C::ratio(self.resonance.q as i64, self.resonance.p as i64);
        Ok(base.pow_i64(e))
    }

    /// `Some(k)` when L(nu) = (q*k, p*k); such words form the invariant
    /// monoid.
    pub fn level_of(&self, nu: &ExponentTuple) -> Result<Option<u64>> {
        let (l1, l2) = self.l_map(nu)?;
        let (p, q) = (self.resonance.p as u64, self.resonance.q as u64);
        if l1 % q == 0 && l2 % p == 0 && l1 / q == l2 / p {
            Ok(Some(l1 / q))
        } else {
            Ok(None)
        }
    }

    /// Does every monomial of `f` have weight exactly `(j, k)`? The zero
    /// polynomial counts as homogeneous.
    pub fn is_weight_homogeneous(&self, f: &Polynomial<C>, j: u64, k: u64) -> Result<bool> {
        if *f.vars() != self.vars {
            return Err(Error::MismatchedVariables);
        }
        for (m, _) in f.terms() {
            if self.l_map(m)? != (j, k) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The coordinate change x -> alpha x rescales each coefficient:
    /// a-values by alpha^(p v - q u), b-values by alpha^(p u - q v).
    /// All values must be numeric and alpha nonzero.
    pub fn scale_parameters(&self, alpha: &C) -> Result<Self> {
        if alpha.is_zero() {
            return Err(Error::ZeroScale);
        }
        let (p, q) = (self.resonance.p as i64, self.resonance.q as i64);
        let mut specs = Vec::with_capacity(self.ell());
        for s in 0..self.ell() {
            let t = self.terms[s];
            let ea = p * t.v as i64 - q * t.u as i64;
            let a = match &self.a_values[s] {
                Some(c) => c.clone() * alpha.pow_i64(ea),
                None => {
                    let name = self.vars.name(self.a_index(s)).to_string();
                    return Err(Error::SymbolicParameter(name));
                }
            };
            let b = match &self.b_values[s] {
                Some(c) => c.clone() * alpha.pow_i64(-ea),
                None => {
                    let name = self.vars.name(self.b_index(s)).to_string();
                    return Err(Error::SymbolicParameter(name));
                }
            };
            specs.push((t, Some(a), Some(b)));
        }
        Self::new(self.resonance.p, self.resonance.q, specs)
    }

    fn check_tuple(&self, nu: &ExponentTuple) -> Result<()> {
        if nu.len() != 2 * self.ell() {
            return Err(Error::BadTupleLength { got: nu.len(), expected: 2 * self.ell() });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat;
    use crate::scalar::ExactScalar;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::ratio(n, d)
    }

    /// 1:-2 with all exponent pairs of u+v <= 2, symbolic.
    fn degree5() -> SystemFamily<Rat> {
        SystemFamily::symbolic(1, 2, &[(1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]).unwrap()
    }

    fn word(family: &SystemFamily<Rat>, entries: &[(&str, u32)]) -> Monomial {
        let vars = family.param_vars();
        let mut exps = vec![0u32; vars.len()];
        for (name, e) in entries {
            exps[vars.index_of(name).unwrap()] = *e;
        }
        Monomial::from_exponents(exps)
    }

    #[test]
    fn canonical_parameter_ring() {
        let f = degree5();
        let names: Vec<&str> = f.param_vars().names().iter().map(String::as_str).collect();
        assert_eq!(
            names,
            ["a20", "a01", "a40", "a21", "a02", "b40", "b21", "b02", "b20", "b01"]
        );
        // Mirrored pairing: each variable's partner sits at the mirror slot.
        assert_eq!(f.param_vars().name(f.conjugate_index(0)), "b01");
        assert_eq!(f.param_vars().name(f.conjugate_index(1)), "b20");
    }

    #[test]
    fn validation_errors() {
        assert!(matches!(
            SystemFamily::<Rat>::symbolic(2, 4, &[(1, 0)]),
            Err(Error::BadResonance { .. })
        ));
        assert!(matches!(
            SystemFamily::<Rat>::symbolic(1, 2, &[(0, 0)]),
            Err(Error::ZeroTermIndex)
        ));
        assert!(matches!(
            SystemFamily::<Rat>::symbolic(1, 2, &[(1, 0), (1, 0)]),
            Err(Error::DuplicateTermIndex { u: 1, v: 0 })
        ));
    }

    #[test]
    fn weights_and_l_map() {
        let f = degree5();
        // L(a20^2 * b02) = 2*(2,0) + (0,2) = (4,2).
        let nu = word(&f, &[("a20", 2), ("b02", 1)]);
        assert_eq!(f.l_map(&nu).unwrap(), (4, 2));
        assert_eq!(f.level_of(&nu).unwrap(), Some(2));
        // a01*b02 has L = (0,3): not on the resonant ray.
        let off = word(&f, &[("a01", 1), ("b02", 1)]);
        assert_eq!(f.l_map(&off).unwrap(), (0, 3));
        assert_eq!(f.level_of(&off).unwrap(), None);
    }

    #[test]
    fn hat_swaps_conjugate_symbols() {
        let f = degree5();
        let nu = word(&f, &[("a20", 2), ("b02", 1)]);
        let expect = word(&f, &[("b01", 2), ("a40", 1)]);
        assert_eq!(f.hat(&nu).unwrap(), expect);
        assert_eq!(f.hat(&f.hat(&nu).unwrap()).unwrap(), nu);
    }

    #[test]
    fn kappa_values_and_inverse_law() {
        let f = degree5();
        let nu = word(&f, &[("a21", 1)]);
        assert_eq!(f.kappa(&nu).unwrap(), rat(2, 1));
        let pair = word(&f, &[("a20", 2), ("b02", 1)]);
        assert_eq!(f.kappa(&pair).unwrap(), rat(2, 1));
        let hat = f.hat(&pair).unwrap();
        assert_eq!(
            f.kappa(&pair).unwrap() * f.kappa(&hat).unwrap(),
            rat(1, 1)
        );
    }

    #[test]
    fn weight_homogeneity() {
        let f = degree5();
        let g = crate::polyring::parse_polynomial::<Rat>(
            "4*a01*a20 - b01*b20",
            f.param_vars(),
        )
        .unwrap();
        assert!(f.is_weight_homogeneous(&g, 2, 1).unwrap());
        assert!(!f.is_weight_homogeneous(&g, 4, 2).unwrap());
        let mixed = crate::polyring::parse_polynomial::<Rat>(
            "a01 + a20",
            f.param_vars(),
        )
        .unwrap();
        assert!(!f.is_weight_homogeneous(&mixed, 0, 1).unwrap());
    }

    #[test]
    fn scaling_follows_the_coordinate_change() {
        // a20 has (u,v) = (1,0): exponent p*v - q*u = -2, so alpha = 2
        // sends a20 = 1 to 1/4; its partner b01 moves oppositely.
        let fam = SystemFamily::new(
            1,
            2,
            vec![(
                TermIndex::new(1, 0),
                Some(rat(1, 1)),
                Some(rat(3, 1)),
            )],
        )
        .unwrap();
        let scaled = fam.scale_parameters(&rat(2, 1)).unwrap();
        assert_eq!(scaled.a_value(0), Some(&rat(1, 4)));
        assert_eq!(scaled.b_value(0), Some(&rat(12, 1)));
        assert!(matches!(
            degree5().scale_parameters(&rat(2, 1)),
            Err(Error::SymbolicParameter(_))
        ));
        assert!(matches!(
            fam.scale_parameters(&rat(0, 1)),
            Err(Error::ZeroScale)
        ));
    }

    #[test]
    fn tuple_length_is_checked() {
        let f = degree5();
        let short = Monomial::one(3);
        assert!(matches!(f.l_map(&short), Err(Error::BadTupleLength { .. })));
    }
}
