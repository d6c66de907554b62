//! Groebner-basis machinery over exact rational coefficients.
//!
//! - [`normal_form`]: multivariate division with remainder, divisors tried
//!   in list order.
//! - [`buchberger`]: Buchberger's completion with the coprime and chain
//!   pair-pruning criteria and normal (smallest-lcm-first) selection.
//! - [`GroebnerBasis::reduce`] / [`reduce_basis`]: the unique reduced basis.
//! - [`eliminate`]: elimination ideals through block orders.
//! - [`ideal_membership`] / [`ideal_equal`]: membership and ideal equality
//!   by mutual reduction.
//! - [`implicitize`]: the full elimination pipeline that turns a symbolic
//!   family's substitution ideal into relations among its coefficients.
//!
//! Everything is deterministic: ties in pair selection break on indices,
//! reduced bases are sorted by leading monomial, and intermediate elements
//! are rescaled to integer coefficients of content one after every
//! reduction to keep rational arithmetic small.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::polyring::{Monomial, MonomialOrder, Polynomial, VariableSet};
use crate::reversibility::{build_h_ideal_with, AbOrder};
use crate::scalar::ExactScalar;
use crate::system::SystemFamily;

/// A generator list together with the monomial order it is a basis for.
///
/// Values are only constructed by [`buchberger`] (which guarantees the
/// Buchberger criterion) or by [`GroebnerBasis::verified`] (which checks
/// it), so holding one certifies that every S-polynomial of two elements
/// reduces to zero modulo the list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis<C> {
    vars: VariableSet,
    order: MonomialOrder,
    elements: Vec<Polynomial<C>>,
    reduced: bool,
}

impl<C: ExactScalar> GroebnerBasis<C> {
    /// Check the Buchberger criterion on `elements` and wrap them.
    pub fn verified(
        vars: &VariableSet,
        order: &MonomialOrder,
        elements: Vec<Polynomial<C>>,
    ) -> Result<Self> {
        let elements: Vec<_> = elements.into_iter().filter(|g| !g.is_zero()).collect();
        for g in &elements {
            if g.vars() != vars {
                return Err(Error::MismatchedVariables);
            }
        }
        for i in 0..elements.len() {
            for j in i + 1..elements.len() {
                let s = s_polynomial(&elements[i], &elements[j], order)?;
                if !normal_form(&s, &elements, order)?.is_zero() {
                    return Err(Error::NotGroebner);
                }
            }
        }
        Ok(GroebnerBasis {
            vars: vars.clone(),
            order: order.clone(),
            elements,
            reduced: false,
        })
    }

    /// The shared variable set.
    pub fn vars(&self) -> &VariableSet {
        &self.vars
    }

    /// The monomial order the basis was computed under.
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// The basis elements.
    pub fn elements(&self) -> &[Polynomial<C>] {
        &self.elements
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// True for the zero ideal.
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Whether this basis is in reduced form.
    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// Remainder of `f` modulo the basis.
    pub fn normal_form(&self, f: &Polynomial<C>) -> Result<Polynomial<C>> {
        normal_form(f, &self.elements, &self.order)
    }

    /// Ideal membership of `f`.
    pub fn contains(&self, f: &Polynomial<C>) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// The unique reduced basis of the same ideal: minimal generator set,
    /// every element fully reduced against the others, integer-normalized,
    /// sorted by leading monomial ascending.
    pub fn reduce(&self) -> Self {
        let order = &self.order;
        let mut elems: Vec<Polynomial<C>> = self
            .elements
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| g.integer_normalized(order))
            .collect();
        // Divisibility implies order-comparability, so sorting by leading
        // monomial lets one ascending sweep find every redundant element.
        elems.sort_by(|a, b| {
            order.compare(a.leading(order).unwrap().0, b.leading(order).unwrap().0)
        });
        let mut minimal: Vec<Polynomial<C>> = Vec::new();
        'next: for g in elems {
            let lt = g.leading(order).unwrap().0;
            for h in &minimal {
                if h.leading(order).unwrap().0.divides(lt) {
                    continue 'next;
                }
            }
            minimal.push(g);
        }
        // Tail-reduce each element against the rest. Leading terms never
        // change, so a fixpoint is reached after at most two sweeps.
        loop {
            let mut changed = false;
            for i in 0..minimal.len() {
                let others: Vec<&Polynomial<C>> = minimal
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, g)| g)
                    .collect();
                let r = divide_remainder(&minimal[i], &others, order)
                    .expect("shared ring")
                    .integer_normalized(order);
                if r != minimal[i] {
                    minimal[i] = r;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        GroebnerBasis {
            vars: self.vars.clone(),
            order: order.clone(),
            elements: minimal,
            reduced: true,
        }
    }
}

/// The unique reduced basis of `g`'s ideal.
pub fn reduce_basis<C: ExactScalar>(g: &GroebnerBasis<C>) -> GroebnerBasis<C> {
    g.reduce()
}

/// Remainder of `f` under multivariate division by `divisors`, tried in
/// list order: no term of the result is divisible by any divisor's leading
/// term, and the difference lies in the ideal the divisors generate.
pub fn normal_form<C: ExactScalar>(
    f: &Polynomial<C>,
    divisors: &[Polynomial<C>],
    order: &MonomialOrder,
) -> Result<Polynomial<C>> {
    let refs: Vec<&Polynomial<C>> = divisors.iter().collect();
    divide_remainder(f, &refs, order)
}

/// Division core over borrowed divisors; terms are cancelled in place.
fn divide_remainder<C: ExactScalar>(
    f: &Polynomial<C>,
    divisors: &[&Polynomial<C>],
    order: &MonomialOrder,
) -> Result<Polynomial<C>> {
    for g in divisors {
        if g.vars() != f.vars() {
            return Err(Error::MismatchedVariables);
        }
    }
    let leads: Vec<Option<(Monomial, C)>> = divisors
        .iter()
        .map(|g| g.leading(order).map(|(m, c)| (m.clone(), c.clone())))
        .collect();
    let mut work = f.clone();
    let mut rem = Polynomial::zero(f.vars());
    while !work.is_zero() {
        let (lm, lc) = {
            let (m, c) = work.leading(order).unwrap();
            (m.clone(), c.clone())
        };
        let mut divided = false;
        for (g, lead) in divisors.iter().zip(&leads) {
            if let Some((gm, gc)) = lead {
                if gm.divides(&lm) {
                    let t = lm.div_exact(gm).unwrap();
                    let ratio = lc.clone() / gc.clone();
                    for (m, c) in g.terms() {
                        work.add_term(m.mul(&t), -(c.clone() * ratio.clone()));
                    }
                    divided = true;
                    break;
                }
            }
        }
        if !divided {
            rem.add_term(lm.clone(), lc.clone());
            work.add_term(lm, -lc);
        }
    }
    Ok(rem)
}

/// The S-polynomial of `f` and `g`, cross-multiplied by the leading
/// coefficients so integer inputs stay integer. Zero if either input is.
pub fn s_polynomial<C: ExactScalar>(
    f: &Polynomial<C>,
    g: &Polynomial<C>,
    order: &MonomialOrder,
) -> Result<Polynomial<C>> {
    if g.vars() != f.vars() {
        return Err(Error::MismatchedVariables);
    }
    let (fm, fc) = match f.leading(order) {
        Some((m, c)) => (m.clone(), c.clone()),
        None => return Ok(Polynomial::zero(f.vars())),
    };
    let (gm, gc) = match g.leading(order) {
        Some((m, c)) => (m.clone(), c.clone()),
        None => return Ok(Polynomial::zero(f.vars())),
    };
    let l = fm.lcm(&gm);
    let sf = f.mul_term(&l.div_exact(&fm).unwrap(), &gc);
    let sg = g.mul_term(&l.div_exact(&gm).unwrap(), &fc);
    sf.checked_sub(&sg)
}

/// Key a pending pair by the indices in ascending order.
fn pair_key(i: usize, j: usize) -> (usize, usize) {
    if i < j {
        (i, j)
    } else {
        (j, i)
    }
}

/// A pending S-pair with its cached lcm.
struct Pair {
    lcm: Monomial,
    degree: u64,
    i: usize,
    j: usize,
}

impl Pair {
    fn new(lts: &[Monomial], i: usize, j: usize) -> Self {
        let lcm = lts[i].lcm(&lts[j]);
        Pair {
            degree: lcm.total_degree(),
            lcm,
            i,
            j,
        }
    }
}

/// Buchberger's algorithm: complete `gens` to a basis on which every
/// S-polynomial reduces to zero.
///
/// Pending pairs are processed smallest lcm first (by total degree, then
/// the order, then indices); a pair is dropped when the leading monomials
/// are coprime, or when a third element divides the lcm and both of its
/// pairs with the two members have already been handled. Every new element
/// is rescaled to integer content-one form. At least one polynomial is
/// required to fix the ring; an all-zero input yields the empty basis.
pub fn buchberger<C: ExactScalar>(
    gens: &[Polynomial<C>],
    order: &MonomialOrder,
) -> Result<GroebnerBasis<C>> {
    let vars = gens
        .first()
        .expect("at least one polynomial is needed to fix the ring")
        .vars()
        .clone();
    let mut basis: Vec<Polynomial<C>> = Vec::new();
    for g in gens {
        if g.vars() != &vars {
            return Err(Error::MismatchedVariables);
        }
        if !g.is_zero() {
            basis.push(g.integer_normalized(order));
        }
    }
    let mut lts: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading(order).unwrap().0.clone())
        .collect();
    let mut pending: Vec<Pair> = Vec::new();
    let mut pending_set: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            pending.push(Pair::new(&lts, i, j));
            pending_set.insert((i, j));
        }
    }
    while !pending.is_empty() {
        // Normal selection: smallest lcm of the leading monomials.
        let best = pending
            .iter()
            .enumerate()
            .min_by(|(_, x), (_, y)| {
                x.degree
                    .cmp(&y.degree)
                    .then_with(|| order.compare(&x.lcm, &y.lcm))
                    .then_with(|| (x.i, x.j).cmp(&(y.i, y.j)))
            })
            .map(|(idx, _)| idx)
            .unwrap();
        let Pair { lcm: l, i, j, .. } = pending.swap_remove(best);
        pending_set.remove(&(i, j));
        // Coprime criterion: disjoint leading monomials reduce to zero.
        if lts[i].mul(&lts[j]) == l {
            continue;
        }
        // Chain criterion: a third divisor of the lcm whose pairs with both
        // members are no longer pending makes this pair redundant.
        let chained = (0..lts.len()).any(|k| {
            k != i
                && k != j
                && lts[k].divides(&l)
                && !pending_set.contains(&pair_key(i, k))
                && !pending_set.contains(&pair_key(j, k))
        });
        if chained {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], order)?;
        let refs: Vec<&Polynomial<C>> = basis.iter().collect();
        let r = divide_remainder(&s, &refs, order)?;
        if !r.is_zero() {
            let r = r.integer_normalized(order);
            let t = basis.len();
            lts.push(r.leading(order).unwrap().0.clone());
            basis.push(r);
            for k in 0..t {
                pending.push(Pair::new(&lts, k, t));
                pending_set.insert((k, t));
            }
        }
    }
    Ok(GroebnerBasis {
        vars,
        order: order.clone(),
        elements: basis,
        reduced: false,
    })
}

/// Generators of the elimination ideal: everything in the ideal of `gens`
/// that involves none of `elim_vars`.
///
/// The eliminated variables must be exactly the leading block of the ring
/// (in any order within the block). The basis is computed under a block
/// order that is lex between the two groups and `inner` within the tail,
/// then filtered to the elements free of the block — which the elimination
/// property of block orders certifies to generate the intersection ideal.
pub fn eliminate<C: ExactScalar>(
    gens: &[Polynomial<C>],
    elim_vars: &[&str],
    inner: MonomialOrder,
) -> Result<Vec<Polynomial<C>>> {
    let vars = gens
        .first()
        .expect("at least one polynomial is needed to fix the ring")
        .vars()
        .clone();
    let k = elim_vars.len();
    if k > vars.len() {
        return Err(Error::BadEliminationBlock);
    }
    let block: BTreeSet<&str> = vars.names()[..k].iter().map(String::as_str).collect();
    let requested: BTreeSet<&str> = elim_vars.iter().copied().collect();
    if requested.len() != k || block != requested {
        return Err(Error::BadEliminationBlock);
    }
    let order = MonomialOrder::block(k, MonomialOrder::Lex, inner);
    let gb = buchberger(gens, &order)?.reduce();
    Ok(gb
        .elements()
        .iter()
        .filter(|g| {
            g.terms()
                .all(|(m, _)| m.exponents()[..k].iter().all(|&e| e == 0))
        })
        .cloned()
        .collect())
}

/// Whether `f` lies in the ideal generated by `gens`.
pub fn ideal_membership<C: ExactScalar>(
    f: &Polynomial<C>,
    gens: &[Polynomial<C>],
    order: &MonomialOrder,
) -> Result<bool> {
    let gb = buchberger(gens, order)?;
    gb.contains(f)
}

/// Whether `f1` and `f2` generate the same ideal: every generator of each
/// reduces to zero modulo a basis of the other.
pub fn ideal_equal<C: ExactScalar>(
    f1: &[Polynomial<C>],
    f2: &[Polynomial<C>],
    order: &MonomialOrder,
) -> Result<bool> {
    let g1 = buchberger(f1, order)?;
    let g2 = buchberger(f2, order)?;
    for f in f2 {
        if !g1.contains(f)? {
            return Ok(false);
        }
    }
    for f in f1 {
        if !g2.contains(f)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Relations among the coefficients of a symbolic family that hold on every
/// mirror-symmetric parameter assignment, by eliminating the auxiliary
/// substitution variables from the family's implicitization ideal.
///
/// Output polynomials live in the family's parameter ring, integer
/// normalized and sorted by graded-reverse-lex leading monomial.
pub fn implicitize<C: ExactScalar>(family: &SystemFamily<C>) -> Result<Vec<Polynomial<C>>> {
    implicitize_with(family, AbOrder::Family)
}

/// [`implicitize`] with an explicit ordering of the coefficient variables
/// inside the elimination ring.
pub fn implicitize_with<C: ExactScalar>(
    family: &SystemFamily<C>,
    ab_order: AbOrder,
) -> Result<Vec<Polynomial<C>>> {
    let problem = build_h_ideal_with(family, ab_order)?;
    let k = 2 + family.ell();
    let elim: Vec<&str> = problem.ring().names()[..k]
        .iter()
        .map(String::as_str)
        .collect();
    let fence = eliminate(problem.generators(), &elim, MonomialOrder::Lex)?;
    let target = family.param_vars();
    let deg = MonomialOrder::DegRevLex;
    let mut out: Vec<Polynomial<C>> = fence
        .iter()
        .map(|g| Ok(g.substitute(target, &[])?.integer_normalized(&deg)))
        .collect::<Result<_>>()?;
    out.sort_by(|a, b| deg.compare(a.leading(&deg).unwrap().0, b.leading(&deg).unwrap().0));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_polynomial;
    use crate::Rat;

    fn ring(names: &[&str]) -> VariableSet {
        VariableSet::new(names.iter().copied()).unwrap()
    }

    fn p(vars: &VariableSet, s: &str) -> Polynomial<Rat> {
        parse_polynomial(s, vars).unwrap()
    }

    #[test]
    fn normal_form_of_self_is_zero() {
        let r = ring(&["x", "y"]);
        let f = p(&r, "x^2*y - 3*x + 1/2");
        let nf = normal_form(&f, &[f.clone()], &MonomialOrder::Lex).unwrap();
        assert!(nf.is_zero());
    }

    #[test]
    fn normal_form_single_division_step() {
        let r = ring(&["x", "y"]);
        let f = p(&r, "x^2*y");
        let g = p(&r, "x^2 - 1");
        let nf = normal_form(&f, &[g], &MonomialOrder::Lex).unwrap();
        assert_eq!(nf, p(&r, "y"));
    }

    #[test]
    fn normal_form_is_idempotent() {
        let r = ring(&["x", "y"]);
        let f = p(&r, "x^3 + y");
        let g = vec![p(&r, "x^2 - y"), p(&r, "y^2 - 1")];
        let order = MonomialOrder::DegRevLex;
        let nf = normal_form(&f, &g, &order).unwrap();
        assert_eq!(normal_form(&nf, &g, &order).unwrap(), nf);
    }

    #[test]
    fn normal_form_checks_rings() {
        let r = ring(&["x", "y"]);
        let other = ring(&["x", "z"]);
        let f = p(&r, "x");
        let g = p(&other, "x");
        assert_eq!(
            normal_form(&f, &[g], &MonomialOrder::Lex),
            Err(Error::MismatchedVariables)
        );
    }

    #[test]
    fn s_polynomial_cancels_leading_terms() {
        let r = ring(&["x", "y"]);
        let order = MonomialOrder::Lex;
        let f = p(&r, "x^2 + y");
        let g = p(&r, "x*y - 1");
        // lcm = x^2 y; 1*(y*f) - 1*(x*g) = y^2 + x.
        let s = s_polynomial(&f, &g, &order).unwrap();
        assert_eq!(s, p(&r, "y^2 + x"));
    }

    #[test]
    fn buchberger_on_a_single_generator() {
        let r = ring(&["x"]);
        let gb = buchberger(&[p(&r, "x")], &MonomialOrder::Lex).unwrap();
        assert_eq!(gb.elements(), &[p(&r, "x")]);
    }

    #[test]
    fn buchberger_linear_pair_reduces_to_axes() {
        let r = ring(&["x", "y"]);
        let gens = vec![p(&r, "x + y"), p(&r, "x - y")];
        let gb = buchberger(&gens, &MonomialOrder::Lex).unwrap().reduce();
        assert_eq!(gb.elements(), &[p(&r, "y"), p(&r, "x")]);
        assert!(gb.is_reduced());
    }

    #[test]
    fn buchberger_all_zero_input_gives_empty_basis() {
        let r = ring(&["x"]);
        let gb = buchberger(&[Polynomial::<Rat>::zero(&r)], &MonomialOrder::Lex).unwrap();
        assert!(gb.is_empty());
        // The zero ideal contains only zero.
        assert!(gb.contains(&Polynomial::zero(&r)).unwrap());
        assert!(!gb.contains(&p(&r, "x")).unwrap());
    }

    #[test]
    fn reduced_basis_drops_redundant_generators() {
        let r = ring(&["x", "y"]);
        let gens = vec![p(&r, "x"), p(&r, "x + y")];
        let gb = buchberger(&gens, &MonomialOrder::Lex).unwrap().reduce();
        assert_eq!(gb.elements(), &[p(&r, "y"), p(&r, "x")]);
        // Reducing again changes nothing.
        assert_eq!(gb.reduce().elements(), gb.elements());
    }

    #[test]
    fn reduced_basis_ignores_generator_order() {
        let r = ring(&["x", "y", "z"]);
        let order = MonomialOrder::DegRevLex;
        let gens = vec![
            p(&r, "x^2 + y*z"),
            p(&r, "y^2 - z^2"),
            p(&r, "x*y + z^2"),
        ];
        let forward = buchberger(&gens, &order).unwrap().reduce();
        let mut back = gens.clone();
        back.reverse();
        let backward = buchberger(&back, &order).unwrap().reduce();
        assert_eq!(forward.elements(), backward.elements());
    }

    #[test]
    fn verified_accepts_real_bases_and_rejects_failures() {
        let r = ring(&["x", "y"]);
        let order = MonomialOrder::Lex;
        let good = vec![p(&r, "y"), p(&r, "x")];
        assert!(GroebnerBasis::verified(&r, &order, good).is_ok());
        // x*y's S-polynomial with x^2 - y reduces to y^2, not zero.
        let bad = vec![p(&r, "x*y"), p(&r, "x^2 - y")];
        assert_eq!(
            GroebnerBasis::verified(&r, &order, bad),
            Err(Error::NotGroebner)
        );
    }

    #[test]
    fn eliminate_projects_a_parametrized_curve() {
        let r = ring(&["t", "x", "y"]);
        let gens = vec![p(&r, "t - x"), p(&r, "t^2 - y")];
        let out = eliminate(&gens, &["t"], MonomialOrder::Lex).unwrap();
        assert_eq!(out, vec![p(&r, "x^2 - y")]);
    }

    #[test]
    fn eliminate_nothing_is_the_reduced_basis() {
        let r = ring(&["x", "y"]);
        let gens = vec![p(&r, "x + y"), p(&r, "x - y")];
        let out = eliminate(&gens, &[], MonomialOrder::Lex).unwrap();
        assert_eq!(out, vec![p(&r, "y"), p(&r, "x")]);
    }

    #[test]
    fn eliminate_rejects_non_prefix_blocks() {
        let r = ring(&["t", "x", "y"]);
        let gens = vec![p(&r, "t - x")];
        assert_eq!(
            eliminate(&gens, &["x"], MonomialOrder::Lex),
            Err(Error::BadEliminationBlock)
        );
        assert_eq!(
            eliminate(&gens, &["t", "t"], MonomialOrder::Lex),
            Err(Error::BadEliminationBlock)
        );
    }

    #[test]
    fn membership_and_ideal_equality() {
        let r = ring(&["x", "y"]);
        let order = MonomialOrder::DegRevLex;
        let gens = vec![p(&r, "x^2 - y"), p(&r, "y^2 - 1")];
        assert!(ideal_membership(&gens[0], &gens, &order).unwrap());
        assert!(ideal_membership(&p(&r, "x^4 - 1"), &gens, &order).unwrap());
        assert!(!ideal_membership(&p(&r, "x"), &gens, &order).unwrap());

        let shuffled = vec![gens[1].clone(), gens[0].clone()];
        assert!(ideal_equal(&gens, &shuffled, &order).unwrap());
        let x = vec![p(&r, "x")];
        let x2 = vec![p(&r, "x^2")];
        assert!(!ideal_equal(&x, &x2, &order).unwrap());
    }

    #[test]
    fn normal_form_is_linear_modulo_the_ideal() {
        let r = ring(&["x", "y"]);
        let order = MonomialOrder::DegRevLex;
        let gb = buchberger(&[p(&r, "x^2 - y"), p(&r, "x*y - 1")], &order)
            .unwrap()
            .reduce();
        let f = p(&r, "x^3 + 2*x*y - 7");
        let g = p(&r, "y^3 - x + 1/3");
        let sum = f.checked_add(&g).unwrap();
        let lhs = gb.normal_form(&sum).unwrap();
        let parts = gb
            .normal_form(&f)
            .unwrap()
            .checked_add(&gb.normal_form(&g).unwrap())
            .unwrap();
        let rhs = gb.normal_form(&parts).unwrap();
        assert_eq!(lhs, rhs);
    }
}
