//! Coherence, bounded characteristic-set checks, and equality of prime
//! differential ideals presented by characteristic sets.

use std::collections::BTreeSet;

use crate::diffpoly::{Ambient, DerivOp, DiffPoly, Indeterminate, Monomial, Rational};
use crate::error::{Error, Result};
use crate::ideal::{PrimeVerdict, TruncatedIdeal, Truncation};
use crate::reduction::{validate_autoreduced, AutoreducedSet, Violation};

/// Two elements whose leaders are derivatives of the same variable, with the
/// least common derivative `u = δ^ξ u_i = δ^η u_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaPair {
    pub i: usize,
    pub j: usize,
    pub xi: DerivOp,
    pub eta: DerivOp,
    pub u: Indeterminate,
}

/// Pairs of elements whose leaders are derivatives of one variable.
/// Pairs are listed with the higher-ranked element first (`i > j`), from the
/// top of the set down.
pub fn delta_pairs(set: &AutoreducedSet) -> Vec<DeltaPair> {
    let ranks = set.ranks();
    let mut out = Vec::new();
    for i in (0..ranks.len()).rev() {
        for j in (0..i).rev() {
            let (a, b) = (&ranks[i].leader, &ranks[j].leader);
            if !a.same_variable(b) {
                continue;
            }
            let u = Indeterminate::new(a.block, a.var, a.op.lcm(&b.op));
            out.push(DeltaPair {
                i,
                j,
                xi: a.op.quotient(&u.op).expect("lcm is a multiple"),
                eta: b.op.quotient(&u.op).expect("lcm is a multiple"),
                u,
            });
        }
    }
    out
}

/// `s_j · δ^ξ f_i − s_i · δ^η f_j`.
pub fn delta_polynomial(set: &AutoreducedSet, pair: &DeltaPair) -> DiffPoly {
    let (fi, fj) = (&set.elements()[pair.i], &set.elements()[pair.j]);
    let si = fi.separant().expect("nonconstant");
    let sj = fj.separant().expect("nonconstant");
    let di = fi.derive_by(&pair.xi).expect("same ambient");
    let dj = fj.derive_by(&pair.eta).expect("same ambient");
    &(&sj * &di) - &(&si * &dj)
}

/// Every derivative `δ^κ f_i` whose leader ranks strictly below `u`.
pub fn lower_ideal_generators(set: &AutoreducedSet, u: &Indeterminate) -> Vec<DiffPoly> {
    let m = set.ambient().derivations();
    let mut out = Vec::new();
    for (f, rank) in set.elements().iter().zip(set.ranks()) {
        let Some(room) = u.order().checked_sub(rank.leader.order()) else {
            continue;
        };
        for op in DerivOp::all_up_to(m, room) {
            if rank.leader.derive(&op) < *u {
                out.push(f.derive_by(&op).expect("same ambient"));
            }
        }
    }
    out
}

/// The ideal `(Λ)_u` over the indeterminates its generators mention.
pub fn lower_ideal(set: &AutoreducedSet, u: &Indeterminate) -> Result<TruncatedIdeal> {
    let gens = lower_ideal_generators(set, u);
    let t = Truncation::spanning(set.ambient(), &gens)?;
    TruncatedIdeal::new(&t, gens)
}

/// A Δ-polynomial outside `(Λ)_u : H_Λ^∞`.
#[derive(Clone, Debug)]
pub struct IncoherenceWitness {
    pub pair: DeltaPair,
    pub delta: DiffPoly,
    /// `(Λ)_u : H_Λ^∞` in the truncation spanned by the Δ-polynomial, the
    /// lower generators and `H_Λ`.
    pub saturation: TruncatedIdeal,
}

#[derive(Clone, Debug)]
pub struct CoherenceReport {
    pub pairs_checked: usize,
    pub witness: Option<IncoherenceWitness>,
}

impl CoherenceReport {
    pub fn is_coherent(&self) -> bool {
        self.witness.is_none()
    }
}

fn saturated_lower_ideal(set: &AutoreducedSet, pair: &DeltaPair, delta: &DiffPoly) -> Result<TruncatedIdeal> {
    let gens = lower_ideal_generators(set, &pair.u);
    let h = set.h_product();
    let mut span = gens.clone();
    span.push(delta.clone());
    span.push(h.clone());
    let t = Truncation::spanning(set.ambient(), &span)?;
    TruncatedIdeal::new(&t, gens)?.saturate(&h)
}

/// Checks every Δ-polynomial against its saturated lower ideal; stops at the
/// first failure, in pair order.
pub fn is_coherent(set: &AutoreducedSet) -> Result<CoherenceReport> {
    let pairs = delta_pairs(set);
    let mut checked = 0;
    for pair in pairs {
        checked += 1;
        let delta = delta_polynomial(set, &pair);
        let saturation = saturated_lower_ideal(set, &pair, &delta)?;
        if !saturation.contains(&delta)? {
            return Ok(CoherenceReport {
                pairs_checked: checked,
                witness: Some(IncoherenceWitness {
                    pair,
                    delta,
                    saturation,
                }),
            });
        }
    }
    Ok(CoherenceReport {
        pairs_checked: checked,
        witness: None,
    })
}

/// Degree and derivative-order caps for bounded searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub degree: u32,
    pub order: u32,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { degree: 2, order: 2 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReducedProbe {
    /// A nonzero element of `(Λ):H_Λ^∞` reduced with respect to `Λ`.
    Found(DiffPoly),
    NoneUpTo(Caps),
}

/// Outcome of [`charset_report`]. Checks after a failed autoreduction are
/// not run.
#[derive(Clone, Debug)]
pub struct CharSetReport {
    pub caps: Caps,
    pub autoreduced: std::result::Result<AutoreducedSet, Violation>,
    pub coherence: Option<CoherenceReport>,
    pub reduced_probe: Option<ReducedProbe>,
    pub prime_probe: Option<PrimeVerdict>,
    pub truncation: Option<Truncation>,
}

impl CharSetReport {
    /// A concrete violation was found.
    pub fn refuted(&self) -> bool {
        self.autoreduced.is_err()
            || self.coherence.as_ref().is_some_and(|c| !c.is_coherent())
            || matches!(self.reduced_probe, Some(ReducedProbe::Found(_)))
            || matches!(self.prime_probe, Some(PrimeVerdict::NotPrime(_)))
    }
}

/// `(Λ):H_Λ^∞` over the indeterminates of `Λ` and `H_Λ`.
pub fn algebraic_saturation(set: &AutoreducedSet) -> Result<TruncatedIdeal> {
    let h = set.h_product();
    let mut span = set.elements().to_vec();
    span.push(h.clone());
    let t = Truncation::spanning(set.ambient(), &span)?;
    TruncatedIdeal::new(&t, set.elements().to_vec())?.saturate(&h)
}

/// Monomials in `vars` of total degree at most `degree` whose degree in each
/// leader stays below that leader's degree.
fn reduced_monomials(set: &AutoreducedSet, vars: &[Indeterminate], degree: u32) -> Vec<Monomial> {
    let bound = |v: &Indeterminate| {
        set.ranks()
            .iter()
            .find(|r| &r.leader == v)
            .map_or(u32::MAX, |r| r.degree - 1)
    };
    let mut out = vec![Monomial::one()];
    let mut frontier = vec![(Monomial::one(), 0usize)];
    for _ in 0..degree {
        let mut next = Vec::new();
        for (m, start) in &frontier {
            for (k, v) in vars.iter().enumerate().skip(*start) {
                if m.degree_in(v) < bound(v) {
                    let n = m.mul(&Monomial::var(v.clone()));
                    out.push(n.clone());
                    next.push((n, k));
                }
            }
        }
        frontier = next;
    }
    out
}

/// Bounded Rosenfeld-criterion check. A clean report means only that no
/// violation was found up to the caps.
pub fn charset_report(ambient: &Ambient, polys: &[DiffPoly], caps: Caps) -> Result<CharSetReport> {
    let set = match validate_autoreduced(ambient, polys) {
        Ok(set) => set,
        Err(Error::NotAutoreduced(v)) => {
            return Ok(CharSetReport {
                caps,
                autoreduced: Err(v),
                coherence: None,
                reduced_probe: None,
                prime_probe: None,
                truncation: None,
            })
        }
        Err(e) => return Err(e),
    };
    let coherence = is_coherent(&set)?;
    let saturation = algebraic_saturation(&set)?;
    let truncation = saturation.truncation().clone();
    let vars: Vec<Indeterminate> = truncation
        .variables()
        .iter()
        .filter(|v| v.order() <= caps.order)
        .cloned()
        .collect();
    let monomials = reduced_monomials(&set, &vars, caps.degree);
    let polys: Vec<DiffPoly> = monomials
        .iter()
        .map(|m| DiffPoly::from_terms(ambient, [(m.clone(), Rational::from_integer(1.into()))]))
        .collect();
    let relations = saturation.linear_relations(&polys)?;
    let reduced_probe = match relations.first() {
        Some(v) => ReducedProbe::Found(DiffPoly::from_terms(
            ambient,
            monomials.iter().cloned().zip(v.iter().cloned()),
        )),
        None => ReducedProbe::NoneUpTo(caps),
    };
    let prime_probe = saturation.prime_probe(caps.degree);
    Ok(CharSetReport {
        caps,
        autoreduced: Ok(set),
        coherence: Some(coherence),
        reduced_probe: Some(reduced_probe),
        prime_probe: Some(prime_probe),
        truncation: Some(truncation),
    })
}

/// The four membership conditions comparing `(Λ):H_Λ^∞` and `(Γ):H_Γ^∞`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EqualityReport {
    pub lambda_in_gamma: bool,
    pub h_lambda_outside_gamma: bool,
    pub gamma_in_lambda: bool,
    pub h_gamma_outside_lambda: bool,
}

impl EqualityReport {
    pub fn equal(&self) -> bool {
        self.lambda_in_gamma && self.h_lambda_outside_gamma && self.gamma_in_lambda && self.h_gamma_outside_lambda
    }
}

/// Compares two characteristic sets of prime differential ideals through
/// their algebraic saturations over the joint truncation.
pub fn ideal_equal_charsets(lambda: &AutoreducedSet, gamma: &AutoreducedSet) -> Result<EqualityReport> {
    if lambda.ambient() != gamma.ambient() {
        return Err(Error::AmbientMismatch("characteristic sets over different rings".into()));
    }
    let (hl, hg) = (lambda.h_product(), gamma.h_product());
    let mut span: Vec<DiffPoly> = lambda.elements().iter().chain(gamma.elements()).cloned().collect();
    span.push(hl.clone());
    span.push(hg.clone());
    let t = Truncation::spanning(lambda.ambient(), &span)?;
    let jl = TruncatedIdeal::new(&t, lambda.elements().to_vec())?.saturate(&hl)?;
    let jg = TruncatedIdeal::new(&t, gamma.elements().to_vec())?.saturate(&hg)?;
    let all_in = |polys: &[DiffPoly], j: &TruncatedIdeal| -> Result<bool> {
        for p in polys {
            if !j.contains(p)? {
                return Ok(false);
            }
        }
        Ok(true)
    };
    Ok(EqualityReport {
        lambda_in_gamma: all_in(lambda.elements(), &jg)?,
        h_lambda_outside_gamma: !jg.contains(&hl)?,
        gamma_in_lambda: all_in(gamma.elements(), &jl)?,
        h_gamma_outside_lambda: !jl.contains(&hg)?,
    })
}

/// All `δ^κ λ` whose indeterminates have order at most `order`.
pub fn prolonged_generators(set: &AutoreducedSet, order: u32) -> Vec<DiffPoly> {
    let m = set.ambient().derivations();
    let mut out = Vec::new();
    for (f, rank) in set.elements().iter().zip(set.ranks()) {
        let Some(room) = order.checked_sub(rank.leader.order()) else {
            continue;
        };
        for op in DerivOp::all_up_to(m, room) {
            out.push(f.derive_by(&op).expect("same ambient"));
        }
    }
    out
}

/// `(prolonged generators) : h^∞` over the indeterminates of the generators,
/// `h` and `extra`.
pub fn prolonged_saturation_by(
    ambient: &Ambient,
    generators: &[DiffPoly],
    h: &DiffPoly,
    extra: &[DiffPoly],
) -> Result<TruncatedIdeal> {
    let mut span: Vec<DiffPoly> = generators.iter().chain(extra).cloned().collect();
    span.push(h.clone());
    let t = Truncation::spanning(ambient, &span)?;
    TruncatedIdeal::new(&t, generators.to_vec())?.saturate(h)
}

/// `(Λ prolonged to order k) : H_Λ^∞`. When `Λ` is a characteristic set of
/// a prime `P` this is `P` restricted to the indeterminates involved.
pub fn prolonged_saturation(set: &AutoreducedSet, order: u32, extra: &[DiffPoly]) -> Result<TruncatedIdeal> {
    prolonged_saturation_by(set.ambient(), &prolonged_generators(set, order), &set.h_product(), extra)
}

/// Indeterminates mentioned by any of `polys`.
pub fn indeterminates_of(polys: &[DiffPoly]) -> BTreeSet<Indeterminate> {
    polys.iter().flat_map(DiffPoly::indeterminates).collect()
}
