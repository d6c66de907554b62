//! First-integral coefficients and saddle quantities.
//!
//! For a p:-q resonant family the formal series
//! `Psi = x^q y^p + sum v_{k1,k2} x^{k1+q} y^{k2+p}` can be chosen so that
//! its derivative along the vector field collapses onto the resonant ray:
//! `X(Psi) = sum_k g_k (x^q y^p)^{k+1}`. The obstructions g_k are the
//! saddle quantities; the system is integrable at the saddle iff they all
//! vanish.
//!
//! This module computes the v-table and the g's three independent ways:
//! - [`compute_first_integral`] / [`compute_saddle_quantities`]: the
//!   degree-by-degree coefficient recursion, in two summation modes;
//! - [`NuEvaluator`]: per-word recursions giving the coefficient of a single
//!   parameter word in v or g directly;
//! - [`oracle_series`]: an undetermined-coefficients solve of
//!   `X(Psi) = 0` off the ray via dense Gaussian elimination, for numeric
//!   families only.
//!
//! [`residual`] rebuilds `X(Psi) - sum g_k (x^q y^p)^{k+1}` explicitly and
//! must return zero up to the truncation degree.

use std::collections::{BTreeMap, HashMap};


use crate::error::{Error, Result};
use crate::polyring::{Monomial, Polynomial, VariableSet};
use crate::scalar::ExactScalar;
use crate::system::SystemFamily;

/// Which index set the recursion sums over.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SummationMode {
    /// All indices k1 >= -q, k2 >= -p, seeded with v = 1 at (0,0) and v = 0
    /// on the rest of the zero-sum boundary set.
    Augmented,
    /// Only indices of the shape (q*t1, p*t2) with t1, t2 >= 0, which is
    /// where all coefficients of these families live.
    NonNegative,
}

/// Computed table of first-integral coefficients v_{k1,k2}.
#[derive(Clone, Debug)]
pub struct FirstIntegralTable<C> {
    family: SystemFamily<C>,
    degree: u32,
    mode: SummationMode,
    v: BTreeMap<(i64, i64), Polynomial<C>>,
}

impl<C: ExactScalar> FirstIntegralTable<C> {
    pub fn family(&self) -> &SystemFamily<C> {
        &self.family
    }

    /// Truncation degree of Psi in (x, y).
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn mode(&self) -> SummationMode {
        self.mode
    }

    /// The stored coefficient at (k1, k2), if that index was computed.
    pub fn get(&self, k1: i64, k2: i64) -> Option<&Polynomial<C>> {
        self.v.get(&(k1, k2))
    }

    /// The coefficient at (k1, k2), zero when outside the computed shape.
    pub fn v(&self, k1: i64, k2: i64) -> Polynomial<C> {
        self.v
            .get(&(k1, k2))
            .cloned()
            .unwrap_or_else(|| Polynomial::zero(self.family.param_vars()))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(i64, i64), &Polynomial<C>)> {
        self.v.iter()
    }

    pub fn len(&self) -> usize {
        self.v.len()
    }

    pub fn is_empty(&self) -> bool {
        self.v.is_empty()
    }
}

/// Saddle quantities g_1 .. g_K of a family.
#[derive(Clone, Debug)]
pub struct QuantityTable<C> {
    family: SystemFamily<C>,
    g: Vec<Polynomial<C>>,
}

impl<C: ExactScalar> QuantityTable<C> {
    pub fn family(&self) -> &SystemFamily<C> {
        &self.family
    }

    /// Highest computed level K.
    pub fn level(&self) -> u32 {
        self.g.len() as u32
    }

    /// g_k for 1 <= k <= level.
    pub fn g(&self, k: u32) -> &Polynomial<C> {
        &self.g[(k - 1) as usize]
    }

    pub fn quantities(&self) -> &[Polynomial<C>] {
        &self.g
    }
}

/// Subscript lookup: which slot (if any) carries the a- or b-symbol with a
/// given subscript pair.
struct SubscriptIndex {
    a: HashMap<(u64, u64), usize>,
    b: HashMap<(u64, u64), usize>,
}

impl SubscriptIndex {
    fn build<C: ExactScalar>(family: &SystemFamily<C>) -> Self {
        let (p, q) = (
            family.resonance().p() as u64,
            family.resonance().q() as u64,
        );
        let mut a = HashMap::new();
        let mut b = HashMap::new();
        for s in 0..family.ell() {
            let t = family.term(s);
            a.insert((q * t.u as u64, p * t.v as u64), s);
            b.insert((q * t.v as u64, p * t.u as u64), s);
        }
        SubscriptIndex { a, b }
    }
}

/// Indices of one total-degree layer in the chosen mode.
fn layer_indices(p: i64, q: i64, d: i64, mode: SummationMode) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    match mode {
        SummationMode::Augmented => {
            for k1 in -q..=(d + p) {
                out.push((k1, d - k1));
            }
        }
        SummationMode::NonNegative => {
            let mut t1 = 0;
            while q * t1 <= d {
                let rest = d - q * t1;
                if rest % p == 0 {
                    out.push((q * t1, rest));
                }
                t1 += 1;
            }
        }
    }
    out
}

/// The degree-by-degree recursion. Returns the v-table and the saddle
/// quantities g_k for every k with (p+q)(k+1) <= degree.
fn run_recursion<C: ExactScalar>(
    family: &SystemFamily<C>,
    degree: u32,
    mode: SummationMode,
) -> Result<(BTreeMap<(i64, i64), Polynomial<C>>, Vec<Polynomial<C>>)> {
    let (p, q) = (
        family.resonance().p() as i64,
        family.resonance().q() as i64,
    );
    if (degree as i64) < p + q {
        return Err(Error::DegreeTooSmall { degree, min: (p + q) as u32 });
    }
    let vars = family.param_vars().clone();
    let subs = SubscriptIndex::build(family);
    let mut table: BTreeMap<(i64, i64), Polynomial<C>> = BTreeMap::new();
    let mut quantities = Vec::new();

    // Zero-sum seed layer: 1 at (0,0), 0 elsewhere.
    for (k1, k2) in layer_indices(p, q, 0, mode) {
        let seed = if (k1, k2) == (0, 0) {
            Polynomial::one(&vars)
        } else {
            Polynomial::zero(&vars)
        };
        table.insert((k1, k2), seed);
    }

    let dmax = degree as i64 - p - q;
    for d in 1..=dmax {
        let mut layer = Vec::new();
        for (k1, k2) in layer_indices(p, q, d, mode) {
            // Bracket sum over already-computed lower layers.
            let mut numer = Polynomial::zero(&vars);
            for (&(s1, s2), vs) in &table {
                if vs.is_zero() {
                    continue;
                }
                let (d1, d2) = (k1 - s1, k2 - s2);
                if d1 < 0 || d2 < 0 {
                    continue;
                }
                let mut bracket = Polynomial::zero(&vars);
                if let Some(&slot) = subs.a.get(&(d1 as u64, d2 as u64)) {
                    let c = C::from_int(s1 + q);
                    bracket = bracket.checked_add(&family.a_poly(slot).scale(&c))?;
                }
                if let Some(&slot) = subs.b.get(&(d1 as u64, d2 as u64)) {
                    let c = C::from_int(s2 + p);
                    bracket = bracket.checked_sub(&family.b_poly(slot).scale(&c))?;
                }
                if !bracket.is_zero() {
                    numer = numer.checked_add(&bracket.checked_mul(vs)?)?;
                }
            }
            let denom = p * k1 - q * k2;
            if denom == 0 {
                // Resonant index (q*k, p*k): the unremovable part of X(Psi)
                // is the saddle quantity; the coefficient itself is set to 0.
                quantities.push(-&numer);
                layer.push(((k1, k2), Polynomial::zero(&vars)));
            } else {
                let inv = C::one() / C::from_int(denom);
                layer.push(((k1, k2), numer.scale(&inv)));
            }
        }
        table.extend(layer);
    }
    Ok((table, quantities))
}

/// First-integral coefficients up to total degree `degree` in (x, y), using
/// the boundary-seeded summation.
pub fn compute_first_integral<C: ExactScalar>(
    family: &SystemFamily<C>,
    degree: u32,
) -> Result<FirstIntegralTable<C>> {
    compute_first_integral_with_mode(family, degree, SummationMode::Augmented)
}

pub fn compute_first_integral_with_mode<C: ExactScalar>(
    family: &SystemFamily<C>,
    degree: u32,
    mode: SummationMode,
) -> Result<FirstIntegralTable<C>> {
    let (v, _) = run_recursion(family, degree, mode)?;
    Ok(FirstIntegralTable { family: family.clone(), degree, mode, v })
}

/// Saddle quantities g_1 .. g_level.
pub fn compute_saddle_quantities<C: ExactScalar>(
    family: &SystemFamily<C>,
    level: u32,
) -> Result<QuantityTable<C>> {
    let span = (family.resonance().p() + family.resonance().q()) as u32;
    let degree = span * (level + 1);
    let (_, g) = run_recursion(family, degree, SummationMode::NonNegative)?;
    debug_assert_eq!(g.len() as u32, level);
    Ok(QuantityTable { family: family.clone(), g })
}

/// Per-word recursion: the coefficient V(nu) of a parameter word in the
/// v-table entry at its weight, and the coefficient g(nu) in the saddle
/// quantity at its level. Evaluations are memoized per word.
pub struct NuEvaluator<'a, C: ExactScalar> {
    family: &'a SystemFamily<C>,
    memo: HashMap<Monomial, C>,
}

impl<'a, C: ExactScalar> NuEvaluator<'a, C> {
    pub fn new(family: &'a SystemFamily<C>) -> Self {
        NuEvaluator { family, memo: HashMap::new() }
    }

    pub fn family(&self) -> &SystemFamily<C> {
        self.family
    }

    /// Sum over single-letter removals: `(s1+q) V(nu')` for a-letters,
    /// `-(s2+p) V(nu')` for b-letters, where (s1,s2) is the weight of the
    /// shortened word nu'.
    fn bracket(&mut self, nu: &Monomial) -> Result<C> {
        let (p, q) = (
            self.family.resonance().p() as i64,
            self.family.resonance().q() as i64,
        );
        let ell = self.family.ell();
        let mut sum = C::zero();
        for i in 0..nu.len() {
            if nu.exponent(i) == 0 {
                continue;
            }
            let mut exps = nu.exponents().to_vec();
            exps[i] -= 1;
            let shorter = Monomial::from_exponents(exps);
            let (s1, s2) = self.family.l_map(&shorter)?;
            let inner = self.v(&shorter)?;
            let contribution = if i < ell {
                C::from_int(s1 as i64 + q) * inner
            } else {
                -(C::from_int(s2 as i64 + p) * inner)
            };
            sum = sum + contribution;
        }
        Ok(sum)
    }

    /// V(nu): 1 on the empty word, 0 on the resonant ray, otherwise the
    /// bracket sum divided by p*L1 - q*L2.
    pub fn v(&mut self, nu: &Monomial) -> Result<C> {
        if let Some(c) = self.memo.get(nu) {
            return Ok(c.clone());
        }
        let (l1, l2) = self.family.l_map(nu)?;
        let (p, q) = (
            self.family.resonance().p() as i64,
            self.family.resonance().q() as i64,
        );
        let value = if nu.is_one() {
            C::one()
        } else {
            let denom = p * l1 as i64 - q * l2 as i64;
            if denom == 0 {
                C::zero()
            } else {
                self.bracket(nu)? * (C::one() / C::from_int(denom))
            }
        };
        self.memo.insert(nu.clone(), value.clone());
        Ok(value)
    }

    /// g(nu): minus the bracket sum; defined only on the resonant ray at
    /// level >= 1.
    pub fn g(&mut self, nu: &Monomial) -> Result<C> {
        match self.family.level_of(nu)? {
            Some(k) if k >= 1 => Ok(-self.bracket(nu)?),
            _ => Err(Error::NotResonantWord),
        }
    }
}

/// One-shot V(nu).
pub fn v_of_nu<C: ExactScalar>(family: &SystemFamily<C>, nu: &Monomial) -> Result<C> {
    NuEvaluator::new(family).v(nu)
}

/// One-shot g(nu).
pub fn g_coeff_of_nu<C: ExactScalar>(family: &SystemFamily<C>, nu: &Monomial) -> Result<C> {
    NuEvaluator::new(family).g(nu)
}

/// The combined ring (x, y, parameters...) and the two vector-field
/// components of the family in it.
pub fn vector_field<C: ExactScalar>(
    family: &SystemFamily<C>,
) -> Result<(VariableSet, Polynomial<C>, Polynomial<C>)> {
    let (p, q) = (
        family.resonance().p() as u32,
        family.resonance().q() as u32,
    );
    let mut names = vec!["x".to_string(), "y".to_string()];
    names.extend(family.param_vars().names().iter().cloned());
    let ring = VariableSet::new(names)?;
    let n = ring.len();
    let x_pow = |ex: u32, ey: u32| {
        let mut exps = vec![0u32; n];
        exps[0] = ex;
        exps[1] = ey;
        Monomial::from_exponents(exps)
    };
    // dx/dt = x (p - sum a_{qu,pv} x^{qu} y^{pv})
    let mut px = Polynomial::term(&ring, x_pow(1, 0), C::from_int(p as i64));
    // dy/dt = -y (q - sum b_{qv,pu} x^{qv} y^{pu})
    let mut qy = Polynomial::term(&ring, x_pow(0, 1), -C::from_int(q as i64));
    for s in 0..family.ell() {
        let t = family.term(s);
        let a = family.a_poly(s).substitute(&ring, &[])?;
        let b = family.b_poly(s).substitute(&ring, &[])?;
        let ma = x_pow(q * t.u + 1, p * t.v);
        let mb = x_pow(q * t.v, p * t.u + 1);
        px = px.checked_sub(&a.mul_term(&ma, &C::one()))?;
        qy = qy.checked_add(&b.mul_term(&mb, &C::one()))?;
    }
    Ok((ring, px, qy))
}

/// Truncate to terms of (x, y)-degree at most `degree` (parameter exponents
/// do not count), assuming x and y are the first two ring variables.
fn truncate_xy<C: ExactScalar>(f: &Polynomial<C>, degree: u32) -> Polynomial<C> {
    Polynomial::from_terms(
        f.vars(),
        f.terms().filter_map(|(m, c)| {
            let d = m.exponent(0) as u64 + m.exponent(1) as u64;
            (d <= degree as u64).then(|| (m.clone(), c.clone()))
        }),
    )
}

/// Rebuild `X(Psi) - sum g_k (x^q y^p)^(k+1)` from the computed table and
/// truncate to the table degree. A correct computation returns zero.
pub fn residual<C: ExactScalar>(
    family: &SystemFamily<C>,
    degree: u32,
) -> Result<Polynomial<C>> {
    let (p, q) = (
        family.resonance().p() as i64,
        family.resonance().q() as i64,
    );
    let (table, quantities) = run_recursion(family, degree, SummationMode::Augmented)?;
    let (ring, px, qy) = vector_field(family)?;
    let n = ring.len();

    // Psi = sum v_{k1,k2} x^{k1+q} y^{k2+p}; the table's unit entry at
    // (0, 0) contributes the leading monomial x^q y^p itself.
    let mut psi = Polynomial::zero(&ring);
    for (&(k1, k2), v) in &table {
        if v.is_zero() {
            continue;
        }
        let lifted = v.substitute(&ring, &[])?;
        let mut exps = vec![0u32; n];
        exps[0] = (k1 + q) as u32;
        exps[1] = (k2 + p) as u32;
        psi = psi.checked_add(&lifted.mul_term(&Monomial::from_exponents(exps), &C::one()))?;
    }

    let xpsi = px
        .checked_mul(&psi.derivative(0))?
        .checked_add(&qy.checked_mul(&psi.derivative(1))?)?;

    let mut expected = Polynomial::zero(&ring);
    for (idx, gk) in quantities.iter().enumerate() {
        let k = idx as i64 + 1;
        let lifted = gk.substitute(&ring, &[])?;
        let mut exps = vec![0u32; n];
        exps[0] = (q * (k + 1)) as u32;
        exps[1] = (p * (k + 1)) as u32;
        expected =
            expected.checked_add(&lifted.mul_term(&Monomial::from_exponents(exps), &C::one()))?;
    }

    Ok(truncate_xy(&xpsi.checked_sub(&expected)?, degree))
}

/// Power-series values from the recursion-free oracle: undetermined
/// coefficients solved degree by degree with dense Gaussian elimination,
/// saddle quantities read off the resonant coefficients of X(Psi).
#[derive(Clone, Debug)]
pub struct OracleSeries<C> {
    pub v: BTreeMap<(i64, i64), C>,
    pub g: Vec<C>,
}

/// Solve the square linear system `m * u = rhs` over an exact field by
/// Gauss-Jordan elimination. Panics if the matrix is singular.
fn solve_dense<C: ExactScalar>(mut m: Vec<Vec<C>>, mut rhs: Vec<C>) -> Vec<C> {
    let n = m.len();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .expect("oracle system is singular");
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        let inv = C::one() / m[col][col].clone();
        for c in col..n {
            m[col][c] = m[col][c].clone() * inv.clone();
        }
        rhs[col] = rhs[col].clone() * inv;
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for c in col..n {
                m[r][c] = m[r][c].clone() - factor.clone() * m[col][c].clone();
            }
            rhs[r] = rhs[r].clone() - factor * rhs[col].clone();
        }
    }
    rhs
}

/// Independent check values for a fully numeric family: build Psi degree by
/// degree so that X(Psi) vanishes off the resonant ray, then read the saddle
/// quantities directly from the resonant coefficients.
pub fn oracle_series<C: ExactScalar>(
    family: &SystemFamily<C>,
    degree: u32,
) -> Result<OracleSeries<C>> {
    let (p, q) = (
        family.resonance().p() as i64,
        family.resonance().q() as i64,
    );
    if (degree as i64) < p + q {
        return Err(Error::DegreeTooSmall { degree, min: (p + q) as u32 });
    }
    for s in 0..family.ell() {
        for (val, idx) in [
            (family.a_value(s), family.a_index(s)),
            (family.b_value(s), family.b_index(s)),
        ] {
            if val.is_none() {
                return Err(Error::SymbolicParameter(
                    family.param_vars().name(idx).to_string(),
                ));
            }
        }
    }

    let ring = VariableSet::new(["x", "y"])?;
    let mono = |ex: u32, ey: u32| Monomial::from_exponents(vec![ex, ey]);
    // Vector field with numeric coefficients.
    let mut px = Polynomial::term(&ring, mono(1, 0), C::from_int(p));
    let mut qy = Polynomial::term(&ring, mono(0, 1), -C::from_int(q));
    for s in 0..family.ell() {
        let t = family.term(s);
        let a = family.a_value(s).unwrap().clone();
        let b = family.b_value(s).unwrap().clone();
        px = px.checked_sub(&Polynomial::term(
            &ring,
            mono(q as u32 * t.u + 1, p as u32 * t.v),
            a,
        ))?;
        qy = qy.checked_add(&Polynomial::term(
            &ring,
            mono(q as u32 * t.v, p as u32 * t.u + 1),
            b,
        ))?;
    }
    let apply_x = |f: &Polynomial<C>| -> Result<Polynomial<C>> {
        px.checked_mul(&f.derivative(0))?
            .checked_add(&qy.checked_mul(&f.derivative(1))?)
    };

    let mut psi = Polynomial::term(&ring, mono(q as u32, p as u32), C::one());
    let mut xpsi = apply_x(&psi)?;
    let mut v = BTreeMap::new();
    let mut g = Vec::new();

    for d in 1..=(degree as i64 - p - q) {
        // Unknown slots at this degree; the resonant one is pinned to zero.
        let resonant = (d % (p + q) == 0).then(|| (q * (d / (p + q)), p * (d / (p + q))));
        let slots: Vec<(i64, i64)> = (-q..=(d + p))
            .map(|k1| (k1, d - k1))
            .filter(|idx| Some(*idx) != resonant)
            .collect();
        let monos: Vec<Monomial> = slots
            .iter()
            .map(|&(k1, k2)| mono((k1 + q) as u32, (k2 + p) as u32))
            .collect();
        let n = slots.len();
        let mut matrix = vec![vec![C::zero(); n]; n];
        let mut rhs = vec![C::zero(); n];
        for (j, mj) in monos.iter().enumerate() {
            let image = apply_x(&Polynomial::term(&ring, mj.clone(), C::one()))?;
            for (i, mi) in monos.iter().enumerate() {
                matrix[i][j] = image.coeff(mi);
            }
        }
        for (i, mi) in monos.iter().enumerate() {
            rhs[i] = -xpsi.coeff(mi);
        }
        let solution = solve_dense(matrix, rhs);

        let mut increment = Polynomial::zero(&ring);
        for (j, val) in solution.iter().enumerate() {
            increment =
                increment.checked_add(&Polynomial::term(&ring, monos[j].clone(), val.clone()))?;
            v.insert(slots[j], val.clone());
        }
        psi = psi.checked_add(&increment)?;
        xpsi = xpsi.checked_add(&apply_x(&increment)?)?;

        if let Some((r1, r2)) = resonant {
            v.insert((r1, r2), C::zero());
            g.push(xpsi.coeff(&mono((r1 + q) as u32, (r2 + p) as u32)));
        }
    }
    let _ = psi;
    Ok(OracleSeries { v, g })
}
