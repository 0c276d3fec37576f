//! Independent checks used against the library: plain Gaussian elimination
//! on coefficient vectors, and evaluation at random rational points.

use std::collections::{BTreeMap, BTreeSet};

use diffalg::diffpoly::{DiffPoly, Indeterminate, Monomial};
use diffalg::Rational;
use num_traits::{One, Zero};
use rand::Rng;

type Row = BTreeMap<Monomial, Rational>;

fn row(f: &DiffPoly) -> Row {
    f.terms().map(|(m, c)| (m.clone(), c.clone())).collect()
}

/// Echelon form keyed by pivot monomial (the largest monomial of each row).
#[derive(Default)]
pub struct Echelon {
    rows: BTreeMap<Monomial, Row>,
}

impl Echelon {
    fn reduce(&self, mut r: Row) -> Row {
        loop {
            let hit = r
                .iter()
                .rev()
                .find(|(m, _)| self.rows.contains_key(*m))
                .map(|(m, c)| (m.clone(), c.clone()));
            let Some((m, c)) = hit else { return r };
            let pivot = &self.rows[&m];
            for (pm, pc) in pivot {
                let e = r.entry(pm.clone()).or_insert_with(Rational::zero);
                *e -= &c * pc;
                if e.is_zero() {
                    r.remove(pm);
                }
            }
        }
    }

    /// Adds a row; returns false if it was already in the span.
    pub fn insert(&mut self, f: &DiffPoly) -> bool {
        let r = self.reduce(row(f));
        let Some((m, c)) = r.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) else {
            return false;
        };
        let inv = Rational::one() / c;
        let r: Row = r.into_iter().map(|(k, v)| (k, v * &inv)).collect();
        self.rows.insert(m, r);
        true
    }

    pub fn contains(&self, f: &DiffPoly) -> bool {
        self.reduce(row(f)).is_empty()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

pub fn span_contains(target: &DiffPoly, spanning: &[DiffPoly]) -> bool {
    let mut e = Echelon::default();
    for s in spanning {
        e.insert(s);
    }
    e.contains(target)
}

/// All monomials in `vars` of total degree at most `degree`.
pub fn monomials(vars: &[Indeterminate], degree: u32) -> Vec<Monomial> {
    let mut out = vec![Monomial::one()];
    let mut frontier = vec![(Monomial::one(), 0usize)];
    for _ in 0..degree {
        let mut next = Vec::new();
        for (m, start) in &frontier {
            for (k, v) in vars.iter().enumerate().skip(*start) {
                let n = m.mul(&Monomial::var(v.clone()));
                out.push(n.clone());
                next.push((n, k));
            }
        }
        frontier = next;
    }
    out
}

/// `f ∈ span{ m·g : deg(m·g) ≤ cap }`. Sound for membership; complete once
/// `cap` exceeds the degree of a representation.
pub fn bounded_member(f: &DiffPoly, gens: &[DiffPoly], vars: &[Indeterminate], cap: u32) -> bool {
    let mut spanning = Vec::new();
    for g in gens {
        let d = g.total_degree();
        if d > cap || g.is_zero() {
            continue;
        }
        for m in monomials(vars, cap - d) {
            spanning.push(g.mul_monomial(&m, &Rational::one()));
        }
    }
    span_contains(f, &spanning)
}

pub fn indets_of(polys: &[&DiffPoly]) -> BTreeSet<Indeterminate> {
    polys.iter().flat_map(|p| p.indeterminates()).collect()
}

pub fn random_point<R: Rng>(rng: &mut R, vars: &BTreeSet<Indeterminate>) -> BTreeMap<Indeterminate, Rational> {
    vars.iter()
        .map(|v| (v.clone(), super::random_rational(rng)))
        .collect()
}

pub fn eval_at<R: Rng>(rng: &mut R, f: &DiffPoly, vars: &BTreeSet<Indeterminate>) -> Rational {
    f.evaluate(&random_point(rng, vars)).unwrap()
}

/// `δ_k f` by the Leibniz rule, term by term.
pub fn derive_oracle(f: &DiffPoly, k: usize) -> DiffPoly {
    let m = f.ambient().derivations();
    let step = diffalg::DerivOp::unit(m, k);
    let mut terms = Vec::new();
    for (mono, c) in f.terms() {
        for (i, (v, e)) in mono.factors().iter().enumerate() {
            let rest = mono
                .factors()
                .iter()
                .enumerate()
                .map(|(j, (w, d))| (w.clone(), if i == j { d - 1 } else { *d }))
                .filter(|(_, d)| *d > 0)
                .chain(std::iter::once((v.derive(&step), 1)));
            terms.push((Monomial::from_factors(rest), c * Rational::from_integer((*e).into())));
        }
    }
    DiffPoly::from_terms(f.ambient(), terms)
}

/// `g` is reduced with respect to every element of `set`, judged from leaders
/// and degrees alone.
pub fn reduced_oracle(g: &DiffPoly, set: &[DiffPoly]) -> bool {
    set.iter().all(|f| {
        let u = f.leader().unwrap();
        let d = f.degree_in(&u);
        g.indeterminates().iter().all(|v| !v.is_proper_derivative_of(&u)) && g.degree_in(&u) < d
    })
}

/// `∂f/∂v`, term by term.
pub fn partial_oracle(f: &DiffPoly, v: &Indeterminate) -> DiffPoly {
    let mut terms = Vec::new();
    for (mono, c) in f.terms() {
        let e = mono.degree_in(v);
        if e == 0 {
            continue;
        }
        let rest = mono
            .factors()
            .iter()
            .map(|(w, d)| (w.clone(), if w == v { d - 1 } else { *d }))
            .filter(|(_, d)| *d > 0);
        terms.push((Monomial::from_factors(rest), c * Rational::from_integer(e.into())));
    }
    DiffPoly::from_terms(f.ambient(), terms)
}

pub fn derive_by_oracle(f: &DiffPoly, op: &diffalg::DerivOp) -> DiffPoly {
    let mut g = f.clone();
    for (k, &e) in op.exponents().iter().enumerate() {
        for _ in 0..e {
            g = derive_oracle(&g, k);
        }
    }
    g
}

/// `s_j δ^ξ f_i − s_i δ^η f_j`, recomputed from scratch.
pub fn delta_oracle(fi: &DiffPoly, fj: &DiffPoly, xi: &diffalg::DerivOp, eta: &diffalg::DerivOp) -> DiffPoly {
    let si = partial_oracle(fi, &fi.leader().unwrap());
    let sj = partial_oracle(fj, &fj.leader().unwrap());
    &(&sj * &derive_by_oracle(fi, xi)) - &(&si * &derive_by_oracle(fj, eta))
}

/// Invariance of the prime with characteristic set `set`, decided one
/// prolongation order higher than the library uses and over every
/// indeterminate up to that order, a σ-stable variable set: `σ_g` maps the
/// truncated ideal into itself for every `g`.
pub fn brute_force_invariant(set: &diffalg::AutoreducedSet) -> bool {
    use diffalg::gaction::sigma_apply;
    use diffalg::rosenfeld::prolonged_generators;
    use diffalg::{Truncation, TruncatedIdeal};
    let a = set.ambient();
    let k = set.elements().iter().map(DiffPoly::max_order).max().unwrap_or(0) + 1;
    let t = Truncation::new(a, a.indets_up_to(k)).unwrap();
    let j = TruncatedIdeal::new(&t, prolonged_generators(set, k))
        .unwrap()
        .saturate(&set.h_product())
        .unwrap();
    let basis = j.groebner_basis();
    a.group()
        .elements()
        .all(|g| basis.iter().all(|b| j.contains(&sigma_apply(g, b).unwrap()).unwrap()))
}
