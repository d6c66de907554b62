//! Time-reversal symmetry of resonant families.
//!
//! - [`is_time_reversible`]: the coefficient test `b = (q/p)·a` slot by
//!   slot on a numeric family.
//! - [`conjugate_poly`]: the parameter-ring involution that swaps each
//!   word for its mirror word.
//! - [`enumerate_monoid`]: all parameter words whose weight lands on the
//!   resonant ray, up to a level bound.
//! - [`sibirsky_generators`]: the binomial generators `κ(ν)[ν] − [ν̂]` of
//!   the symmetry ideal, one per mirror pair.
//! - [`build_h_ideal`] / [`theta_reduce`]: the substitution ideal whose
//!   elimination implicitizes the reversible variety, and the reduction
//!   map that certifies binomials lie in its kernel.
//! - [`symmetry_check`]: the first-integral coefficient symmetry
//!   `v(q·t1, p·t2) = v(q·t2, p·t1)` on reversible numeric families.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::groebner::normal_form;
use crate::integral::FirstIntegralTable;
use crate::polyring::{Monomial, MonomialOrder, Polynomial, VariableSet};
use crate::scalar::ExactScalar;
use crate::system::{ExponentTuple, SystemFamily, TermIndex};

/// One failing slot of the reversibility test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation<C> {
    /// The term index (u, v) whose coefficients disagree.
    pub index: TermIndex,
    /// The actual b-coefficient.
    pub b: C,
    /// The value (q/p)·a the b-coefficient would need.
    pub expected: C,
}

/// Outcome of [`is_time_reversible`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReversibilityReport<C> {
    pub reversible: bool,
    pub violations: Vec<Violation<C>>,
}

/// Test a numeric family for time-reversal symmetry: every slot must
/// satisfy `b = (q/p)·a`.
pub fn is_time_reversible<C: ExactScalar>(
    family: &SystemFamily<C>,
) -> Result<ReversibilityReport<C>> {
    let ratio = C::ratio(
        family.resonance().q() as i64,
        family.resonance().p() as i64,
    );
    let mut violations = Vec::new();
    for s in 0..family.ell() {
        let a = family
            .a_value(s)
            .ok_or_else(|| symbolic_name(family, family.a_index(s)))?;
        let b = family
            .b_value(s)
            .ok_or_else(|| symbolic_name(family, family.b_index(s)))?;
        let expected = ratio.clone() * a.clone();
        if *b != expected {
            violations.push(Violation {
                index: family.term(s),
                b: b.clone(),
                expected,
            });
        }
    }
    Ok(ReversibilityReport {
        reversible: violations.is_empty(),
        violations,
    })
}

/// Error for a symbolic slot encountered where a number is needed.
fn symbolic_name<C: ExactScalar>(family: &SystemFamily<C>, i: usize) -> Error {
    Error::SymbolicParameter(family.param_vars().name(i).to_string())
}

/// Apply the mirror involution to every word of a parameter-ring
/// polynomial, leaving coefficients unchanged.
pub fn conjugate_poly<C: ExactScalar>(
    family: &SystemFamily<C>,
    f: &Polynomial<C>,
) -> Result<Polynomial<C>> {
    if f.vars() != family.param_vars() {
        return Err(Error::MismatchedVariables);
    }
    let mut out = Polynomial::zero(f.vars());
    for (m, c) in f.terms() {
        out.add_term(family.hat(m)?, c.clone());
    }
    Ok(out)
}

/// A parameter word on the resonant weight ray.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidElement {
    /// The exponent tuple ν over the parameter variables.
    pub nu: ExponentTuple,
    /// The level k with L(ν) = (q·k, p·k).
    pub level: u32,
}

/// All nonzero words ν with L(ν) = (q·k, p·k) for some 1 ≤ k ≤ `k_max`,
/// in lexicographic order of the exponent tuple.
pub fn enumerate_monoid<C: ExactScalar>(
    family: &SystemFamily<C>,
    k_max: u32,
) -> Vec<MonoidElement> {
    let (p, q) = (
        family.resonance().p() as u64,
        family.resonance().q() as u64,
    );
    let n = 2 * family.ell();
    let weights: Vec<(u64, u64)> = (0..n).map(|i| family.weight(i)).collect();
    let budget = (q * k_max as u64, p * k_max as u64);
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    descend(
        0,
        (0, 0),
        &mut exps,
        &weights,
        budget,
        (p, q),
        &mut out,
    );
    out.sort_by(|x, y| x.nu.cmp(&y.nu));
    out
}

/// Depth-first enumeration over exponent counts within the weight budget.
fn descend(
    i: usize,
    l: (u64, u64),
    exps: &mut Vec<u32>,
    weights: &[(u64, u64)],
    budget: (u64, u64),
    pq: (u64, u64),
    out: &mut Vec<MonoidElement>,
) {
    if i == weights.len() {
        let (p, q) = pq;
        if l.0 % q == 0 && l.1 % p == 0 && l.0 / q == l.1 / p && l.0 + l.1 > 0 {
            out.push(MonoidElement {
                nu: Monomial::from_exponents(exps.clone()),
                level: (l.0 / q) as u32,
            });
        }
        return;
    }
    let (w1, w2) = weights[i];
    let mut c = 0u32;
    loop {
        let here = (l.0 + w1 * c as u64, l.1 + w2 * c as u64);
        if here.0 > budget.0 || here.1 > budget.1 {
            break;
        }
        exps[i] = c;
        descend(i + 1, here, exps, weights, budget, pq, out);
        c += 1;
    }
    exps[i] = 0;
}

/// Binomial generators of the symmetry ideal up to a level bound.
#[derive(Clone, Debug)]
pub struct SibirskyGeneratorSet<C> {
    family: SystemFamily<C>,
    level_bound: u32,
    generators: Vec<Polynomial<C>>,
}

impl<C: ExactScalar> SibirskyGeneratorSet<C> {
    /// The family the generators belong to.
    pub fn family(&self) -> &SystemFamily<C> {
        &self.family
    }

    /// The level the monoid enumeration was truncated at.
    pub fn level_bound(&self) -> u32 {
        self.level_bound
    }

    /// The generators, one per mirror pair with distinct members.
    pub fn generators(&self) -> &[Polynomial<C>] {
        &self.generators
    }

    /// Number of generators.
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    /// True when no pair produced a generator.
    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }
}

/// Emit `κ(ν)·[ν] − [ν̂]` once per unordered mirror pair {ν, ν̂} with
/// ν ≠ ν̂ and level ≤ `k_max`, taking the graded-reverse-lex larger word
/// as representative and rescaling to integer content-one positive-leading
/// form. Self-mirrored words contribute nothing (their binomial is zero).
pub fn sibirsky_generators<C: ExactScalar>(
    family: &SystemFamily<C>,
    k_max: u32,
) -> Result<SibirskyGeneratorSet<C>> {
    let deg = MonomialOrder::DegRevLex;
    let ring = family.param_vars();
    let mut seen: BTreeSet<Monomial> = BTreeSet::new();
    let mut generators = Vec::new();
    for elem in enumerate_monoid(family, k_max) {
        if seen.contains(&elem.nu) {
            continue;
        }
        let hat = family.hat(&elem.nu)?;
        seen.insert(elem.nu.clone());
        seen.insert(hat.clone());
        if hat == elem.nu {
            continue;
        }
        let rep = if deg.compare(&elem.nu, &hat).is_gt() {
            elem.nu.clone()
        } else {
            hat.clone()
        };
        let rep_hat = family.hat(&rep)?;
        let kappa = family.kappa(&rep)?;
        let binomial = Polynomial::term(ring, rep, kappa)
            .checked_sub(&Polynomial::term(ring, rep_hat, C::one()))?;
        generators.push(binomial.integer_normalized(&deg));
    }
    Ok(SibirskyGeneratorSet {
        family: family.clone(),
        level_bound: k_max,
        generators,
    })
}

/// How the coefficient variables are ordered inside the elimination ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AbOrder {
    /// The family's own slot order (a-block, then the mirrored b-block).
    Family,
    /// Alphabetical by variable name.
    Name,
}

/// The substitution ideal whose elimination yields the coefficient
/// relations of the reversible variety.
#[derive(Clone, Debug)]
pub struct ImplicitizationProblem<C> {
    family: SystemFamily<C>,
    ring: VariableSet,
    generators: Vec<Polynomial<C>>,
    zeta: Vec<i64>,
}

impl<C: ExactScalar> ImplicitizationProblem<C> {
    /// The symbolic family the ideal was built from.
    pub fn family(&self) -> &SystemFamily<C> {
        &self.family
    }

    /// The ring {gamma, w, t_1..t_ell, coefficient variables}.
    pub fn ring(&self) -> &VariableSet {
        &self.ring
    }

    /// The ideal generators.
    pub fn generators(&self) -> &[Polynomial<C>] {
        &self.generators
    }

    /// The exponents ζ_s = u_s − v_s, one per family slot.
    pub fn zeta(&self) -> &[i64] {
        &self.zeta
    }
}

/// [`build_h_ideal_with`] under the family's own coefficient order.
pub fn build_h_ideal<C: ExactScalar>(
    family: &SystemFamily<C>,
) -> Result<ImplicitizationProblem<C>> {
    build_h_ideal_with(family, AbOrder::Family)
}

/// Build the substitution ideal of a symbolic family over the ring
/// {gamma, w, t_1..t_ell, coefficients}: the unit relation `1 − w·gamma`,
/// one `a − t` relation per slot, and one `b − (q/p)·gamma^ζ·t` relation
/// per slot, with negative powers of gamma written as powers of w.
pub fn build_h_ideal_with<C: ExactScalar>(
    family: &SystemFamily<C>,
    ab_order: AbOrder,
) -> Result<ImplicitizationProblem<C>> {
    let ell = family.ell();
    for s in 0..ell {
        if family.a_value(s).is_some() {
            return Err(numeric_name(family, family.a_index(s)));
        }
        if family.b_value(s).is_some() {
            return Err(numeric_name(family, family.b_index(s)));
        }
    }
    let mut ab: Vec<String> = family.param_vars().names().to_vec();
    if ab_order == AbOrder::Name {
        ab.sort();
    }
    let mut names = vec!["gamma".to_string(), "w".to_string()];
    names.extend((1..=ell).map(|k| format!("t{}", k)));
    names.extend(ab);
    let ring = VariableSet::new(names)?;
    let n = ring.len();
    let zeta: Vec<i64> = (0..ell)
        .map(|s| {
            let t = family.term(s);
            t.u as i64 - t.v as i64
        })
        .collect();

    let mut generators = Vec::with_capacity(1 + 2 * ell);
    let mut wg = vec![0u32; n];
    wg[0] = 1;
    wg[1] = 1;
    generators.push(
        Polynomial::one(&ring)
            .checked_sub(&Polynomial::term(&ring, Monomial::from_exponents(wg), C::one()))?,
    );
    for s in 0..ell {
        let a = Polynomial::variable_named(&ring, family.param_vars().name(family.a_index(s)))?;
        generators.push(a.checked_sub(&Polynomial::variable(&ring, 2 + s))?);
    }
    for s in 0..ell {
        let b = Polynomial::variable_named(&ring, family.param_vars().name(family.b_index(s)))?;
        generators.push(b.checked_sub(&theta_image(&ring, family, &zeta, s))?);
    }
    Ok(ImplicitizationProblem {
        family: family.clone(),
        ring,
        generators,
        zeta,
    })
}

/// Error for a numeric slot encountered where a symbol is needed.
fn numeric_name<C: ExactScalar>(family: &SystemFamily<C>, i: usize) -> Error {
    Error::NumericParameter(family.param_vars().name(i).to_string())
}

/// The term (q/p)·gamma^ζ_s·t_{s+1}, negative powers of gamma as w.
fn theta_image<C: ExactScalar>(
    ring: &VariableSet,
    family: &SystemFamily<C>,
    zeta: &[i64],
    s: usize,
) -> Polynomial<C> {
    let mut exps = vec![0u32; ring.len()];
    exps[2 + s] = 1;
    if zeta[s] >= 0 {
        exps[0] = zeta[s] as u32;
    } else {
        exps[1] = (-zeta[s]) as u32;
    }
    let ratio = C::ratio(
        family.resonance().q() as i64,
        family.resonance().p() as i64,
    );
    Polynomial::term(ring, Monomial::from_exponents(exps), ratio)
}

/// Substitute `a_s → t_{s+1}`, `b_s → (q/p)·gamma^ζ_s·t_{s+1}` into a
/// parameter-ring polynomial and reduce modulo `w·gamma − 1`.
pub fn theta_reduce<C: ExactScalar>(
    problem: &ImplicitizationProblem<C>,
    f: &Polynomial<C>,
) -> Result<Polynomial<C>> {
    let family = &problem.family;
    let ring = &problem.ring;
    let mut bindings: Vec<(&str, Polynomial<C>)> = Vec::new();
    for s in 0..family.ell() {
        bindings.push((
            family.param_vars().name(family.a_index(s)),
            Polynomial::variable(ring, 2 + s),
        ));
        bindings.push((
            family.param_vars().name(family.b_index(s)),
            theta_image(ring, family, &problem.zeta, s),
        ));
    }
    let image = f.substitute(ring, &bindings)?;
    let mut wg = vec![0u32; ring.len()];
    wg[0] = 1;
    wg[1] = 1;
    let rel = Polynomial::term(ring, Monomial::from_exponents(wg), C::one())
        .checked_sub(&Polynomial::one(ring))?;
    normal_form(&image, &[rel], &MonomialOrder::Lex)
}

/// One failing index pair of [`symmetry_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryFailure<C> {
    pub t1: i64,
    pub t2: i64,
    pub left: C,
    pub right: C,
}

/// Outcome of [`symmetry_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryReport<C> {
    pub ok: bool,
    pub failures: Vec<SymmetryFailure<C>>,
}

/// Verify `v(q·t1, p·t2) = v(q·t2, p·t1)` for every pair present in the
/// table of a numeric, reversible family.
pub fn symmetry_check<C: ExactScalar>(
    table: &FirstIntegralTable<C>,
) -> Result<SymmetryReport<C>> {
    let family = table.family();
    if !is_time_reversible(family)?.reversible {
        return Err(Error::NotReversible);
    }
    let (p, q) = (
        family.resonance().p() as i64,
        family.resonance().q() as i64,
    );
    let mut failures = Vec::new();
    for (&(k1, k2), v) in table.iter() {
        if k1 < 0 || k2 < 0 || k1 % q != 0 || k2 % p != 0 {
            continue;
        }
        let (t1, t2) = (k1 / q, k2 / p);
        if t1 >= t2 {
            continue;
        }
        if let Some(w) = table.get(q * t2, p * t1) {
            if v != w {
                failures.push(SymmetryFailure {
                    t1,
                    t2,
                    left: v.constant_value().unwrap(),
                    right: w.constant_value().unwrap(),
                });
            }
        }
    }
    Ok(SymmetryReport {
        ok: failures.is_empty(),
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    use crate::integral::{compute_first_integral, compute_saddle_quantities, NuEvaluator};
    use crate::polyring::parse_polynomial;
    use crate::Rat;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::ratio(n, d)
    }

    fn degree5() -> SystemFamily<Rat> {
        SystemFamily::symbolic(1, 2, &[(1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]).unwrap()
    }

    fn pp(family: &SystemFamily<Rat>, s: &str) -> Polynomial<Rat> {
        parse_polynomial(s, family.param_vars()).unwrap()
    }

    #[test]
    fn reversibility_requires_b_equal_q_over_p_a() {
        let fam = SystemFamily::new(
            1,
            2,
            vec![
                (TermIndex::new(1, 0), Some(rat(3, 1)), Some(rat(6, 1))),
                (TermIndex::new(0, 1), Some(rat(1, 1)), Some(rat(2, 1))),
            ],
        )
        .unwrap();
        assert!(is_time_reversible(&fam).unwrap().reversible);

        let broken = SystemFamily::new(
            1,
            2,
            vec![
                (TermIndex::new(1, 0), Some(rat(3, 1)), Some(rat(6, 1))),
                (TermIndex::new(0, 1), Some(rat(1, 1)), Some(rat(1, 1))),
            ],
        )
        .unwrap();
        let report = is_time_reversible(&broken).unwrap();
        assert!(!report.reversible);
        assert_eq!(report.violations.len(), 1);
        assert_eq!(report.violations[0].index, TermIndex::new(0, 1));
        assert_eq!(report.violations[0].b, rat(1, 1));
        assert_eq!(report.violations[0].expected, rat(2, 1));
    }

    #[test]
    fn one_to_one_resonance_mirrors_by_index_swap() {
        let fam = SystemFamily::new(
            1,
            1,
            vec![
                (TermIndex::new(1, 0), Some(rat(2, 1)), Some(rat(2, 1))),
                (TermIndex::new(0, 1), Some(rat(5, 1)), Some(rat(5, 1))),
            ],
        )
        .unwrap();
        assert!(is_time_reversible(&fam).unwrap().reversible);
    }

    #[test]
    fn reversibility_rejects_symbolic_families() {
        let fam = degree5();
        assert_eq!(
            is_time_reversible(&fam),
            Err(Error::SymbolicParameter("a20".to_string()))
        );
    }

    #[test]
    fn conjugation_swaps_mirror_words() {
        let fam = degree5();
        let f = pp(&fam, "a01*a20");
        assert_eq!(conjugate_poly(&fam, &f).unwrap(), pp(&fam, "b01*b20"));
        let g = pp(&fam, "2*a21 - b21 + 1/3*a40*b01^2");
        let twice = conjugate_poly(&fam, &conjugate_poly(&fam, &g).unwrap()).unwrap();
        assert_eq!(twice, g);
        let zero = Polynomial::zero(fam.param_vars());
        assert!(conjugate_poly(&fam, &zero).unwrap().is_zero());
    }

    #[test]
    fn monoid_level_one_of_the_degree_five_family() {
        let fam = degree5();
        assert!(enumerate_monoid(&fam, 0).is_empty());
        let level1 = enumerate_monoid(&fam, 1);
        let words: Vec<Monomial> = ["a21", "b21", "a01*a20", "b01*b20", "a01*b20", "a20*b01"]
            .iter()
            .map(|s| pp(&fam, s).terms().next().unwrap().0.clone())
            .collect();
        assert_eq!(level1.len(), words.len());
        for w in &words {
            assert!(level1.iter().any(|e| &e.nu == w && e.level == 1));
        }
    }

    #[test]
    fn monoid_is_closed_under_the_mirror_map() {
        let fam = degree5();
        let elems = enumerate_monoid(&fam, 2);
        for e in &elems {
            let hat = fam.hat(&e.nu).unwrap();
            assert!(elems.iter().any(|f| f.nu == hat && f.level == e.level));
        }
        // Lexicographic output order on the exponent tuples.
        for pair in elems.windows(2) {
            assert!(pair[0].nu < pair[1].nu);
        }
    }

    #[test]
    fn sibirsky_level_one_generators() {
        let fam = degree5();
        let set = sibirsky_generators(&fam, 1).unwrap();
        assert_eq!(set.level_bound(), 1);
        let expected = [pp(&fam, "4*a01*a20 - b01*b20"), pp(&fam, "2*a21 - b21")];
        assert_eq!(set.len(), expected.len());
        for e in &expected {
            assert!(set.generators().contains(e), "missing {}", e);
        }
    }

    #[test]
    fn sibirsky_pair_normalization_on_a_level_three_pair() {
        let fam = degree5();
        let set = sibirsky_generators(&fam, 3).unwrap();
        let published = pp(&fam, "2*a20^2*b02 - a40*b01^2");
        assert!(
            set.generators().contains(&published),
            "missing {}",
            published
        );
    }

    #[test]
    fn h_ideal_of_the_degree_five_family() {
        let fam = degree5();
        let problem = build_h_ideal(&fam).unwrap();
        assert_eq!(problem.zeta(), &[1, -1, 2, 0, -2]);
        assert_eq!(
            problem.ring().names(),
            [
                "gamma", "w", "t1", "t2", "t3", "t4", "t5", "a20", "a01", "a40", "a21", "a02",
                "b40", "b21", "b02", "b20", "b01"
            ]
        );
        let r = problem.ring();
        let want: Vec<Polynomial<Rat>> = [
            "1 - w*gamma",
            "a20 - t1",
            "a01 - t2",
            "a40 - t3",
            "a21 - t4",
            "a02 - t5",
            "b01 - 2*gamma*t1",
            "b20 - 2*w*t2",
            "b02 - 2*gamma^2*t3",
            "b21 - 2*t4",
            "b40 - 2*w^2*t5",
        ]
        .iter()
        .map(|s| parse_polynomial(s, r).unwrap())
        .collect();
        assert_eq!(problem.generators(), &want[..]);
    }

    #[test]
    fn h_ideal_rejects_numeric_families() {
        let fam = SystemFamily::new(
            1,
            2,
            vec![(TermIndex::new(1, 0), Some(rat(1, 1)), None)],
        )
        .unwrap();
        assert_eq!(
            build_h_ideal(&fam).unwrap_err(),
            Error::NumericParameter("a20".to_string())
        );
    }

    #[test]
    fn name_order_sorts_the_coefficient_block() {
        let fam = degree5();
        let problem = build_h_ideal_with(&fam, AbOrder::Name).unwrap();
        assert_eq!(
            problem.ring().names()[7..],
            [
                "a01", "a02", "a20", "a21", "a40", "b01", "b02", "b20", "b21", "b40"
            ]
        );
    }

    #[test]
    fn theta_kills_sibirsky_binomials() {
        let fam = degree5();
        let problem = build_h_ideal(&fam).unwrap();
        assert!(theta_reduce(&problem, &pp(&fam, "2*a21 - b21"))
            .unwrap()
            .is_zero());
        assert!(theta_reduce(&problem, &pp(&fam, "2*a20^2*b02 - a40*b01^2"))
            .unwrap()
            .is_zero());
        let image = theta_reduce(&problem, &pp(&fam, "a01")).unwrap();
        assert_eq!(
            image,
            parse_polynomial("t2", problem.ring()).unwrap()
        );
    }

    #[test]
    fn quantity_words_rebuild_the_quantities_via_mirror_pairs() {
        // g_{qk,pk} = (1/2) sum over level-k words of
        //   (g^(nu)/kappa(nu)) * (kappa(nu)[nu] - [nu_hat]).
        let fam = degree5();
        let qs = compute_saddle_quantities(&fam, 2).unwrap();
        let mut eval = NuEvaluator::new(&fam);
        let ring = fam.param_vars();
        for k in 1..=2u32 {
            let mut sum = Polynomial::zero(ring);
            for e in enumerate_monoid(&fam, k) {
                if e.level != k {
                    continue;
                }
                let g = eval.g(&e.nu).unwrap();
                if g.is_zero() {
                    continue;
                }
                let kappa = fam.kappa(&e.nu).unwrap();
                let hat = fam.hat(&e.nu).unwrap();
                let binomial = Polynomial::term(ring, e.nu.clone(), kappa.clone())
                    .checked_sub(&Polynomial::term(ring, hat, rat(1, 1)))
                    .unwrap();
                sum = sum.checked_add(&binomial.scale(&(g / kappa))).unwrap();
            }
            sum = sum.scale(&rat(1, 2));
            assert_eq!(&sum, qs.g(k), "level {}", k);
        }
    }

    #[test]
    fn symmetry_holds_on_a_reversible_table() {
        let fam = SystemFamily::new(
            1,
            2,
            vec![
                (TermIndex::new(1, 0), Some(rat(3, 5)), Some(rat(6, 5))),
                (TermIndex::new(0, 1), Some(rat(-2, 1)), Some(rat(-4, 1))),
                (TermIndex::new(1, 1), Some(rat(1, 7)), Some(rat(2, 7))),
            ],
        )
        .unwrap();
        let table = compute_first_integral(&fam, 12).unwrap();
        let report = symmetry_check(&table).unwrap();
        assert!(report.ok, "failures: {:?}", report.failures);
    }

    #[test]
    fn symmetry_check_requires_a_reversible_family() {
        let fam = SystemFamily::new(
            1,
            2,
            vec![(TermIndex::new(0, 1), Some(rat(1, 1)), Some(rat(1, 1)))],
        )
        .unwrap();
        let table = compute_first_integral(&fam, 9).unwrap();
        assert_eq!(symmetry_check(&table), Err(Error::NotReversible));
    }
}
