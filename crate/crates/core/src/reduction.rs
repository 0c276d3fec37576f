//! Autoreduced sets and the differential division algorithm.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::diffpoly::{Ambient, DerivOp, DiffPoly, Indeterminate, Monomial, Rank};
use crate::error::{Error, Result};

/// Why a list of polynomials fails to be autoreduced. Indices refer to the
/// input list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Constant { index: usize },
    DuplicateLeader { first: usize, second: usize },
    /// `reducee` is not reduced with respect to `by`.
    NotReduced { reducee: usize, by: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Constant { index } => write!(f, "element {} is constant", index + 1),
            Violation::DuplicateLeader { first, second } => {
                write!(f, "elements {} and {} share a leader", first + 1, second + 1)
            }
            Violation::NotReduced { reducee, by } => write!(
                f,
                "element {} is not reduced with respect to element {}",
                reducee + 1,
                by + 1
            ),
        }
    }
}

/// Nonconstant, pairwise reduced polynomials listed by increasing rank.
#[derive(Clone, PartialEq, Eq)]
pub struct AutoreducedSet {
    ambient: Ambient,
    elements: Vec<DiffPoly>,
    ranks: Vec<Rank>,
}

impl fmt::Debug for AutoreducedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.elements).finish()
    }
}

impl AutoreducedSet {
    /// Validates `polys` and sorts them by rank.
    pub fn new(ambient: &Ambient, polys: Vec<DiffPoly>) -> Result<Self> {
        validate_autoreduced(ambient, &polys)
    }

    pub fn empty(ambient: &Ambient) -> Self {
        AutoreducedSet {
            ambient: ambient.clone(),
            elements: Vec::new(),
            ranks: Vec::new(),
        }
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    pub fn elements(&self) -> &[DiffPoly] {
        &self.elements
    }

    pub fn ranks(&self) -> &[Rank] {
        &self.ranks
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leaders(&self) -> impl Iterator<Item = &Indeterminate> {
        self.ranks.iter().map(|r| &r.leader)
    }

    pub fn separants(&self) -> Vec<DiffPoly> {
        self.elements
            .iter()
            .map(|f| f.separant().expect("nonconstant"))
            .collect()
    }

    pub fn initials(&self) -> Vec<DiffPoly> {
        self.elements
            .iter()
            .map(|f| f.initial().expect("nonconstant"))
            .collect()
    }

    /// `H_Λ = ∏ i_f s_f`.
    pub fn h_product(&self) -> DiffPoly {
        self.separants()
            .iter()
            .zip(self.initials())
            .fold(self.ambient.one(), |acc, (s, i)| &(&acc * s) * &i)
    }

    /// `g` is reduced with respect to every element.
    pub fn reduces(&self, g: &DiffPoly) -> bool {
        self.elements
            .iter()
            .all(|f| g.is_reduced_wrt(f).expect("nonconstant"))
    }

    /// `g` is partially reduced with respect to every element.
    pub fn partially_reduces(&self, g: &DiffPoly) -> bool {
        self.elements
            .iter()
            .all(|f| g.is_partially_reduced_wrt(f).expect("nonconstant"))
    }
}

/// Sorts `polys` by rank and checks that they form an autoreduced set.
pub fn validate_autoreduced(ambient: &Ambient, polys: &[DiffPoly]) -> Result<AutoreducedSet> {
    let violation = |v| Err(Error::NotAutoreduced(v));
    for p in polys {
        p.check_same_ambient(&ambient.zero())?;
    }
    let mut ranked = Vec::with_capacity(polys.len());
    for (index, p) in polys.iter().enumerate() {
        match p.rank() {
            Ok(r) => ranked.push((r, index)),
            Err(_) => return violation(Violation::Constant { index }),
        }
    }
    ranked.sort();
    for w in ranked.windows(2) {
        if w[0].0.leader == w[1].0.leader {
            let (first, second) = (w[0].1.min(w[1].1), w[0].1.max(w[1].1));
            return violation(Violation::DuplicateLeader { first, second });
        }
    }
    for (pos, (_, j)) in ranked.iter().enumerate() {
        for (_, i) in &ranked[..pos] {
            for (reducee, by) in [(*j, *i), (*i, *j)] {
                if !polys[reducee].is_reduced_wrt(&polys[by]).expect("nonconstant") {
                    return violation(Violation::NotReduced { reducee, by });
                }
            }
        }
    }
    Ok(AutoreducedSet {
        ambient: ambient.clone(),
        elements: ranked.iter().map(|(_, i)| polys[*i].clone()).collect(),
        ranks: ranked.into_iter().map(|(r, _)| r).collect(),
    })
}

/// The canonical ranking on autoreduced sets: lexicographic on rank
/// sequences, where a proper extension of a sequence is *lower*.
pub fn compare_autoreduced_sets(a: &AutoreducedSet, b: &AutoreducedSet) -> Result<Ordering> {
    if a.ambient != b.ambient {
        return Err(Error::AmbientMismatch(
            "autoreduced sets live in different rings".into(),
        ));
    }
    for (ra, rb) in a.ranks.iter().zip(&b.ranks) {
        match ra.cmp(rb) {
            Ordering::Equal => {}
            other => return Ok(other),
        }
    }
    Ok(b.len().cmp(&a.len()))
}

/// Greedy extraction of a lowest autoreduced subset: repeatedly take the
/// lowest-ranked remaining element (first in input order on ties) and keep
/// only elements reduced with respect to it.
pub fn minimal_autoreduced_subset(polys: &[DiffPoly]) -> Result<AutoreducedSet> {
    let mut candidates: Vec<(Rank, &DiffPoly)> = polys
        .iter()
        .filter_map(|p| p.rank().ok().map(|r| (r, p)))
        .collect();
    let ambient = match candidates.first() {
        Some((_, p)) => p.ambient().clone(),
        None => return Err(Error::AllConstant),
    };
    let mut chosen = Vec::new();
    let mut ranks = Vec::new();
    while !candidates.is_empty() {
        let best = (0..candidates.len())
            .min_by(|&i, &j| candidates[i].0.cmp(&candidates[j].0))
            .expect("nonempty");
        let (rank, pick) = candidates.remove(best);
        pick.check_same_ambient(&ambient.zero())?;
        candidates.retain(|(_, g)| g.is_reduced_wrt(pick).expect("nonconstant"));
        chosen.push(pick.clone());
        ranks.push(rank);
    }
    Ok(AutoreducedSet {
        ambient,
        elements: chosen,
        ranks,
    })
}

/// One summand `coefficient · δ^op(Λ[index])` of a division certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cofactor {
    pub coefficient: DiffPoly,
    pub op: DerivOp,
    pub index: usize,
}

/// Witness for `M · f = f₀ + Σ c_t · δ^{κ_t}(Λ[i_t])` with `f₀` reduced and
/// `M = ∏ s_i^{a_i} · i_i^{b_i}`.
///
/// When every `a_i` and `b_i` equals `exponent` the multiplier is `H_Λ^r`;
/// see [`ReductionCertificate::is_h_power`]. Equalizing is not always
/// possible while keeping `f₀` reduced (padding by separants can raise leader
/// degrees again), so the per-element exponents are part of the witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionCertificate {
    pub exponent: u32,
    pub separant_exponents: Vec<u32>,
    pub initial_exponents: Vec<u32>,
    pub remainder: DiffPoly,
    pub cofactors: Vec<Cofactor>,
}

impl ReductionCertificate {
    /// True iff the multiplier is exactly `H_Λ^exponent`.
    pub fn is_h_power(&self) -> bool {
        self.separant_exponents
            .iter()
            .chain(&self.initial_exponents)
            .all(|&e| e == self.exponent)
    }

    /// The multiplier `∏ s_i^{a_i} i_i^{b_i}`.
    pub fn multiplier(&self, set: &AutoreducedSet) -> DiffPoly {
        let mut acc = set.ambient.one();
        for (k, (s, i)) in set.separants().iter().zip(set.initials()).enumerate() {
            acc = &acc * &s.pow(self.separant_exponents[k]);
            acc = &acc * &i.pow(self.initial_exponents[k]);
        }
        acc
    }

    /// `M f − f₀ − Σ c_t δ^{κ_t}(Λ[i_t])`; zero iff the identity holds.
    pub fn defect(&self, f: &DiffPoly, set: &AutoreducedSet) -> DiffPoly {
        let mut acc = &self.multiplier(set) * f;
        acc = &acc - &self.remainder;
        for c in &self.cofactors {
            let deriv = set.elements[c.index].derive_by(&c.op).expect("same ambient");
            acc = &acc - &(&c.coefficient * &deriv);
        }
        acc
    }

    /// Checks the identity exactly and that the remainder is reduced.
    pub fn verify(&self, f: &DiffPoly, set: &AutoreducedSet) -> bool {
        set.reduces(&self.remainder) && self.defect(f, set).is_zero()
    }
}

#[derive(Clone)]
struct Reducer<'a> {
    set: &'a AutoreducedSet,
    separants: Vec<DiffPoly>,
    initials: Vec<DiffPoly>,
    derivatives: BTreeMap<(usize, DerivOp), DiffPoly>,
    current: DiffPoly,
    cofactors: BTreeMap<(usize, DerivOp), DiffPoly>,
    separant_exp: Vec<u32>,
    initial_exp: Vec<u32>,
}

#[derive(Clone, Copy)]
enum Multiplier {
    Separant(usize),
    Initial(usize),
}

impl<'a> Reducer<'a> {
    fn new(f: &DiffPoly, set: &'a AutoreducedSet) -> Self {
        Reducer {
            set,
            separants: set.separants(),
            initials: set.initials(),
            derivatives: BTreeMap::new(),
            current: f.clone(),
            cofactors: BTreeMap::new(),
            separant_exp: vec![0; set.len()],
            initial_exp: vec![0; set.len()],
        }
    }

    fn derivative(&mut self, index: usize, op: &DerivOp) -> DiffPoly {
        self.derivatives
            .entry((index, op.clone()))
            .or_insert_with(|| self.set.elements[index].derive_by(op).expect("same ambient"))
            .clone()
    }

    fn multiply_all(&mut self, by: &DiffPoly) {
        self.current = &self.current * by;
        for c in self.cofactors.values_mut() {
            *c = &*c * by;
        }
    }

    fn add_cofactor(&mut self, index: usize, op: &DerivOp, coeff: DiffPoly) {
        let slot = self
            .cofactors
            .entry((index, op.clone()))
            .or_insert_with(|| self.set.ambient.zero());
        *slot = &*slot + &coeff;
    }

    /// Lowers the degree of `v` in the current polynomial below `degree` using
    /// `divisor = δ^op Λ[index]`, whose coefficient of `v^degree` is the
    /// multiplier polynomial.
    fn eliminate(&mut self, v: &Indeterminate, index: usize, op: &DerivOp, degree: u32, mult: Multiplier) {
        let divisor = self.derivative(index, op);
        let lc = match mult {
            Multiplier::Separant(k) => self.separants[k].clone(),
            Multiplier::Initial(k) => self.initials[k].clone(),
        };
        loop {
            let d = self.current.degree_in(v);
            if d < degree {
                return;
            }
            let lead = self.current.coefficient(v, d);
            let shift = Monomial::power(v.clone(), d - degree);
            let quotient = match lead.div_exact(&lc) {
                Some(q) => q,
                None => {
                    self.multiply_all(&lc);
                    match mult {
                        Multiplier::Separant(k) => self.separant_exp[k] += 1,
                        Multiplier::Initial(k) => self.initial_exp[k] += 1,
                    }
                    lead
                }
            };
            let q = quotient.mul_monomial(&shift, &num_traits::One::one());
            self.current = &self.current - &(&q * &divisor);
            self.add_cofactor(index, op, q);
        }
    }

    /// Highest indeterminate of the current polynomial that is a proper
    /// derivative of a leader, with the highest-ranked such element.
    fn offender(&self) -> Option<(Indeterminate, usize)> {
        let indets = self.current.indeterminates();
        for v in indets.iter().rev() {
            let hit = (0..self.set.len())
                .rev()
                .find(|&k| v.is_proper_derivative_of(&self.set.ranks[k].leader));
            if let Some(k) = hit {
                return Some((v.clone(), k));
            }
        }
        None
    }

    fn partial_reduction(&mut self) {
        while let Some((v, k)) = self.offender() {
            let op = self.set.ranks[k]
                .leader
                .op
                .quotient(&v.op)
                .expect("proper derivative");
            self.eliminate(&v, k, &op, 1, Multiplier::Separant(k));
        }
    }

    fn algebraic_reduction(&mut self) {
        let m = self.set.ambient.derivations();
        for k in (0..self.set.len()).rev() {
            let Rank { leader, degree } = self.set.ranks[k].clone();
            self.eliminate(&leader, k, &DerivOp::identity(m), degree, Multiplier::Initial(k));
        }
    }

    /// Multiplies through so that every separant and initial carries the same
    /// exponent, turning the multiplier into a power of `H_Λ`.
    fn balance(&mut self) -> bool {
        let r = self
            .separant_exp
            .iter()
            .chain(&self.initial_exp)
            .copied()
            .max()
            .unwrap_or(0);
        let mut pad = self.set.ambient.one();
        for k in 0..self.set.len() {
            pad = &pad * &self.separants[k].pow(r - self.separant_exp[k]);
            pad = &pad * &self.initials[k].pow(r - self.initial_exp[k]);
            self.separant_exp[k] = r;
            self.initial_exp[k] = r;
        }
        if pad.is_constant() {
            // A constant pad only rescales; fold it in exactly.
            self.multiply_all(&pad);
            return false;
        }
        self.multiply_all(&pad);
        true
    }

    fn size(&self) -> usize {
        self.current.num_terms() + self.cofactors.values().map(DiffPoly::num_terms).sum::<usize>()
    }

    fn finish(self) -> ReductionCertificate {
        let exponent = self
            .separant_exp
            .iter()
            .chain(&self.initial_exp)
            .copied()
            .max()
            .unwrap_or(0);
        let cofactors = self
            .cofactors
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((index, op), coefficient)| Cofactor {
                coefficient,
                op,
                index,
            })
            .collect();
        ReductionCertificate {
            exponent,
            separant_exponents: self.separant_exp,
            initial_exponents: self.initial_exp,
            remainder: self.current,
            cofactors,
        }
    }
}

/// Budget for equalizing the multiplier: rounds of pad-and-rereduce, and a
/// cap on the term count of the working state relative to the first
/// reduced state.
const MAX_BALANCE_ROUNDS: usize = 8;
const MAX_BALANCE_GROWTH: usize = 16;

/// Differential division of `f` by `set`.
///
/// Proper derivatives of leaders are eliminated first, highest offender
/// first (multiplying by separants), then leader degrees are lowered from the
/// top element down (multiplying by initials). Multipliers are skipped when
/// the leading coefficient is already divisible. The product of separants
/// and initials is then padded towards a power of `H_Λ` and the algebraic
/// phase repeated; if that does not settle within the budget the last
/// reduced state is returned with its unequal exponents.
pub fn diff_remainder(f: &DiffPoly, set: &AutoreducedSet) -> Result<ReductionCertificate> {
    f.check_same_ambient(&set.ambient.zero())?;
    let mut reducer = Reducer::new(f, set);
    if f.is_constant() || set.is_empty() {
        return Ok(reducer.finish());
    }
    reducer.partial_reduction();
    reducer.algebraic_reduction();
    let mut reduced = reducer.clone();
    let limit = reduced.size().max(64) * MAX_BALANCE_GROWTH;
    for _ in 0..MAX_BALANCE_ROUNDS {
        if !reducer.balance() {
            reduced = reducer;
            break;
        }
        reducer.algebraic_reduction();
        if reducer.size() > limit {
            break;
        }
        reduced = reducer.clone();
    }
    let cert = reduced.finish();
    debug_assert!(set.reduces(&cert.remainder));
    Ok(cert)
}

/// `f ∈ [Λ]:H_Λ^∞` decided by a zero remainder; valid when `set` is a
/// characteristic set of a prime differential ideal.
pub fn membership_by_remainder(f: &DiffPoly, set: &AutoreducedSet) -> Result<bool> {
    Ok(diff_remainder(f, set)?.remainder.is_zero())
}
