//! Polynomial ideals in finitely many indeterminates.
//!
//! A [`Truncation`] fixes a finite set of indeterminates, ordered by the
//! ranking with the highest first; ideals are computed with respect to the
//! degree-reverse-lexicographic order this induces.

mod groebner;
mod linalg;
mod poly;

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::diffpoly::{Ambient, DiffPoly, Indeterminate, Monomial, Rational};
use crate::error::{Error, Result};
use groebner::{groebner, reduce, Basis};
use poly::{divides, Exp, MonomialOrder, Poly};

pub(crate) use linalg::nullspace;

const ORDER: MonomialOrder = MonomialOrder::DegRevLex;

/// A finite, ranked list of indeterminates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Truncation {
    ambient: Ambient,
    vars: Vec<Indeterminate>,
    index: BTreeMap<Indeterminate, usize>,
}

impl Truncation {
    pub fn new<I>(ambient: &Ambient, vars: I) -> Result<Self>
    where
        I: IntoIterator<Item = Indeterminate>,
    {
        let mut set = BTreeSet::new();
        for v in vars {
            ambient.check_indet(&v)?;
            set.insert(v);
        }
        let vars: Vec<Indeterminate> = set.into_iter().rev().collect();
        let index = vars.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        Ok(Truncation {
            ambient: ambient.clone(),
            vars,
            index,
        })
    }

    /// The indeterminates occurring in `polys`.
    pub fn spanning(ambient: &Ambient, polys: &[DiffPoly]) -> Result<Self> {
        for p in polys {
            p.check_same_ambient(&ambient.zero())?;
        }
        Self::new(ambient, polys.iter().flat_map(DiffPoly::indeterminates))
    }

    /// Every indeterminate of order at most `order`.
    pub fn up_to_order(ambient: &Ambient, order: u32) -> Self {
        Self::new(ambient, ambient.indets_up_to(order)).expect("indeterminates of the ambient")
    }

    pub fn union(&self, other: &Truncation) -> Result<Self> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch("truncations over different rings".into()));
        }
        Self::new(&self.ambient, self.vars.iter().chain(&other.vars).cloned())
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    /// Variables, highest ranked first.
    pub fn variables(&self) -> &[Indeterminate] {
        &self.vars
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn contains_var(&self, v: &Indeterminate) -> bool {
        self.index.contains_key(v)
    }

    /// Fails with the highest indeterminate of `f` not in the truncation.
    pub fn check(&self, f: &DiffPoly) -> Result<()> {
        f.check_same_ambient(&self.ambient.zero())?;
        match f.indeterminates().into_iter().rev().find(|v| !self.contains_var(v)) {
            Some(v) => Err(Error::OutsideTruncation(v)),
            None => Ok(()),
        }
    }

    fn to_poly(&self, f: &DiffPoly, offset: usize, order: MonomialOrder) -> Poly {
        let width = offset + self.vars.len();
        let terms = f
            .terms()
            .map(|(m, c)| {
                let mut e = vec![0; width];
                for (v, d) in m.factors() {
                    e[offset + self.index[v]] = *d;
                }
                (e, c.clone())
            })
            .collect();
        Poly::from_terms(order, terms)
    }

    fn monomial(&self, e: &[u32]) -> Monomial {
        Monomial::from_factors(
            e.iter()
                .enumerate()
                .filter(|(_, d)| **d > 0)
                .map(|(i, d)| (self.vars[i].clone(), *d)),
        )
    }

    fn from_poly(&self, p: &Poly, offset: usize) -> DiffPoly {
        DiffPoly::from_terms(
            &self.ambient,
            p.terms
                .iter()
                .map(|(e, c)| (self.monomial(&e[offset..]), c.clone())),
        )
    }
}

/// `f = Σ cofactors[i] · generators[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipCertificate {
    pub cofactors: Vec<DiffPoly>,
}

impl MembershipCertificate {
    pub fn combination(&self, ideal: &TruncatedIdeal) -> DiffPoly {
        let mut acc = ideal.truncation.ambient.zero();
        for (c, g) in self.cofactors.iter().zip(&ideal.generators) {
            acc = &acc + &(c * g);
        }
        acc
    }

    pub fn verify(&self, f: &DiffPoly, ideal: &TruncatedIdeal) -> bool {
        self.cofactors.len() == ideal.generators.len() && &self.combination(ideal) == f
    }
}

/// `h^exponent · f = Σ cofactors[i] · generators[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaturationCertificate {
    pub exponent: u32,
    pub membership: MembershipCertificate,
}

impl SaturationCertificate {
    pub fn verify(&self, f: &DiffPoly, h: &DiffPoly, ideal: &TruncatedIdeal) -> bool {
        self.membership.verify(&(&h.pow(self.exponent) * f), ideal)
    }
}

/// Outcome of [`TruncatedIdeal::prime_probe`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrimeVerdict {
    NotPrime(PrimeWitness),
    /// No zero divisor was found among the candidates of degree at most the
    /// cap. This is not a proof of primality.
    NoViolationUpTo(u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrimeWitness {
    /// `f·g` lies in the ideal while neither factor does.
    ZeroDivisors { f: DiffPoly, g: DiffPoly },
    UnitIdeal,
}

/// An ideal of the polynomial ring over a truncation. Gröbner bases are
/// computed once, on first use.
#[derive(Clone, Debug)]
pub struct TruncatedIdeal {
    truncation: Truncation,
    generators: Vec<DiffPoly>,
    basis: OnceLock<Basis>,
    tracked: OnceLock<Basis>,
}

impl TruncatedIdeal {
    pub fn new(truncation: &Truncation, generators: Vec<DiffPoly>) -> Result<Self> {
        for g in &generators {
            truncation.check(g)?;
        }
        Ok(TruncatedIdeal {
            truncation: truncation.clone(),
            generators,
            basis: OnceLock::new(),
            tracked: OnceLock::new(),
        })
    }

    pub fn truncation(&self) -> &Truncation {
        &self.truncation
    }

    pub fn generators(&self) -> &[DiffPoly] {
        &self.generators
    }

    /// The same generators over a larger truncation.
    pub fn rebase(&self, truncation: &Truncation) -> Result<TruncatedIdeal> {
        if truncation == &self.truncation {
            return Ok(self.clone());
        }
        TruncatedIdeal::new(truncation, self.generators.clone())
    }

    fn generator_polys(&self) -> Vec<Poly> {
        self.generators
            .iter()
            .map(|g| self.truncation.to_poly(g, 0, ORDER))
            .collect()
    }

    fn plain(&self) -> &Basis {
        if let Some(b) = self.tracked.get() {
            return b;
        }
        self.basis
            .get_or_init(|| groebner(&self.generator_polys(), self.truncation.len(), ORDER, false))
    }

    fn tracked(&self) -> &Basis {
        self.tracked
            .get_or_init(|| groebner(&self.generator_polys(), self.truncation.len(), ORDER, true))
    }

    /// The reduced Gröbner basis: monic, sorted by increasing leading
    /// monomial.
    pub fn groebner_basis(&self) -> Vec<DiffPoly> {
        self.plain()
            .polys
            .iter()
            .map(|p| self.truncation.from_poly(p, 0))
            .collect()
    }

    pub fn is_unit(&self) -> bool {
        let b = &self.plain().polys;
        b.len() == 1 && b[0].lead_exp().iter().all(|&e| e == 0)
    }

    pub fn is_zero(&self) -> bool {
        self.plain().polys.is_empty()
    }

    pub fn normal_form(&self, f: &DiffPoly) -> Result<DiffPoly> {
        self.truncation.check(f)?;
        let p = self.truncation.to_poly(f, 0, ORDER);
        let (r, _) = reduce(&p, &self.plain().polys, ORDER, false);
        Ok(self.truncation.from_poly(&r, 0))
    }

    pub fn contains(&self, f: &DiffPoly) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Membership with cofactors in terms of the original generators.
    pub fn member(&self, f: &DiffPoly) -> Result<Option<MembershipCertificate>> {
        self.truncation.check(f)?;
        let basis = self.tracked();
        let p = self.truncation.to_poly(f, 0, ORDER);
        let (r, q) = reduce(&p, &basis.polys, ORDER, true);
        if !r.is_zero() {
            return Ok(None);
        }
        let reps = basis.reps.as_ref().expect("tracked basis");
        let mut cofactors = vec![Poly::zero(); self.generators.len()];
        for (qi, rep) in q.iter().zip(reps) {
            if qi.is_zero() {
                continue;
            }
            for (c, r) in cofactors.iter_mut().zip(rep) {
                *c = c.add(&qi.mul(r, ORDER), ORDER);
            }
        }
        Ok(Some(MembershipCertificate {
            cofactors: cofactors
                .iter()
                .map(|c| self.truncation.from_poly(c, 0))
                .collect(),
        }))
    }

    /// `I : h^∞`, by adjoining `t`, adding `1 − t·h` and eliminating `t`.
    pub fn saturate(&self, h: &DiffPoly) -> Result<TruncatedIdeal> {
        if h.is_zero() {
            return Err(Error::ZeroSaturator);
        }
        self.truncation.check(h)?;
        if h.is_constant() {
            return TruncatedIdeal::new(&self.truncation, self.generators.clone());
        }
        let order = MonomialOrder::Elimination(1);
        let n = self.truncation.len();
        let mut gens: Vec<Poly> = self
            .generators
            .iter()
            .map(|g| self.truncation.to_poly(g, 1, order))
            .collect();
        let mut t_exp = vec![0; n + 1];
        t_exp[0] = 1;
        let th = self.truncation.to_poly(h, 1, order).mul_term(&Rational::one(), &t_exp);
        gens.push(Poly::constant(n + 1, Rational::one()).sub_mul_term(&Rational::one(), &vec![0; n + 1], &th, order));
        let basis = groebner(&gens, n + 1, order, false);
        let kept = basis
            .polys
            .iter()
            .filter(|p| p.terms.iter().all(|(e, _)| e[0] == 0))
            .map(|p| self.truncation.from_poly(p, 1))
            .collect();
        TruncatedIdeal::new(&self.truncation, kept)
    }

    /// Smallest `r ≤ max_exponent` with `h^r f ∈ I`, with cofactors.
    pub fn saturation_member(
        &self,
        f: &DiffPoly,
        h: &DiffPoly,
        max_exponent: u32,
    ) -> Result<Option<SaturationCertificate>> {
        self.truncation.check(f)?;
        self.truncation.check(h)?;
        let mut g = f.clone();
        for r in 0..=max_exponent {
            if self.contains(&g)? {
                let membership = self.member(&g)?.expect("normal form is zero");
                return Ok(Some(SaturationCertificate {
                    exponent: r,
                    membership,
                }));
            }
            g = &g * h;
        }
        Ok(None)
    }

    pub fn equals(&self, other: &TruncatedIdeal) -> Result<bool> {
        if self.truncation != other.truncation {
            return Err(Error::TruncationMismatch);
        }
        Ok(self.plain().polys == other.plain().polys)
    }

    /// Basis of the linear relations `Σ a_k polys[k] ∈ I`, as coefficient
    /// vectors.
    pub fn linear_relations(&self, polys: &[DiffPoly]) -> Result<Vec<Vec<Rational>>> {
        let mut forms = Vec::with_capacity(polys.len());
        for p in polys {
            forms.push(self.truncation.to_poly(&self.normal_form(p)?, 0, ORDER));
        }
        Ok(kernel(&forms))
    }

    /// Bounded search for zero divisors modulo the ideal.
    ///
    /// Candidates `f` are standard monomials, monomial contents and cofactors
    /// of basis elements, `v − a` for rational roots `a` of univariate basis
    /// elements, and binomials `m₁ + c·m₂` with small `c`, all of degree at
    /// most `degree_cap`. For each `f` the kernel of `g ↦ NF(f·g)` over the
    /// standard monomials of degree at most the cap is computed exactly, so
    /// for a given `f` the search for `g` is complete.
    pub fn prime_probe(&self, degree_cap: u32) -> PrimeVerdict {
        if self.is_unit() {
            return PrimeVerdict::NotPrime(PrimeWitness::UnitIdeal);
        }
        let basis = &self.plain().polys;
        let n = self.truncation.len();
        let standard = standard_monomials(n, degree_cap, basis);
        let mut seen = BTreeSet::new();
        let mut tried = 0;
        for f in probe_candidates(n, degree_cap, basis, &standard) {
            let (f, _) = reduce(&f, basis, ORDER, false);
            if f.is_zero() || f.total_degree() == 0 || !seen.insert(f.monic().terms) {
                continue;
            }
            tried += 1;
            if tried > MAX_PROBE_CANDIDATES {
                break;
            }
            let images: Vec<Poly> = standard
                .iter()
                .map(|s| reduce(&f.mul_term(&Rational::one(), s), basis, ORDER, false).0)
                .collect();
            if let Some(v) = kernel(&images).into_iter().next() {
                let g = Poly::from_terms(
                    ORDER,
                    standard
                        .iter()
                        .zip(v)
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(s, c)| (s.clone(), c))
                        .collect(),
                );
                return PrimeVerdict::NotPrime(PrimeWitness::ZeroDivisors {
                    f: self.truncation.from_poly(&f, 0),
                    g: self.truncation.from_poly(&g, 0),
                });
            }
        }
        PrimeVerdict::NoViolationUpTo(degree_cap)
    }
}

/// Upper bound on the number of distinct `f` examined by the prime probe.
pub const MAX_PROBE_CANDIDATES: usize = 400;

/// Kernel of the linear map sending the k-th unit vector to `images[k]`.
fn kernel(images: &[Poly]) -> Vec<Vec<Rational>> {
    let mut rows: BTreeMap<&Exp, Vec<Rational>> = BTreeMap::new();
    for (k, p) in images.iter().enumerate() {
        for (e, c) in &p.terms {
            rows.entry(e)
                .or_insert_with(|| vec![Rational::zero(); images.len()])[k] = c.clone();
        }
    }
    let rows: Vec<Vec<Rational>> = rows.into_values().collect();
    nullspace(&rows, images.len())
}

/// Exponents of degree at most `cap` that no leading monomial divides,
/// sorted by increasing degree.
fn standard_monomials(n: usize, cap: u32, basis: &[Poly]) -> Vec<Exp> {
    let mut out = vec![vec![0; n]];
    let mut layer = vec![vec![0; n]];
    for _ in 0..cap {
        let mut next = BTreeSet::new();
        for e in &layer {
            // Only raise variables at or after the last nonzero slot so each
            // monomial is produced once.
            let start = e.iter().rposition(|&d| d > 0).unwrap_or(0);
            for i in start..n {
                let mut f = e.clone();
                f[i] += 1;
                if !basis.iter().any(|g| divides(g.lead_exp(), &f)) {
                    next.insert(f);
                }
            }
        }
        layer = next.into_iter().collect();
        layer.sort_by(|a, b| ORDER.cmp(a, b));
        out.extend(layer.iter().cloned());
    }
    out
}

fn probe_candidates(n: usize, cap: u32, basis: &[Poly], standard: &[Exp]) -> Vec<Poly> {
    let mut out = Vec::new();
    let unit = |e: &Exp| Poly::monomial(e.clone(), Rational::one());
    out.extend(standard.iter().skip(1).map(unit));
    for g in basis {
        // Monomial content and the matching cofactor.
        let mut content = g.lead_exp().clone();
        for (e, _) in &g.terms {
            for (c, d) in content.iter_mut().zip(e) {
                *c = (*c).min(*d);
            }
        }
        if content.iter().any(|&d| d > 0) {
            let rest = Poly {
                terms: g
                    .terms
                    .iter()
                    .map(|(e, c)| (poly::exp_div(e, &content), c.clone()))
                    .collect(),
            };
            out.push(unit(&content));
            if rest.total_degree() <= cap {
                out.push(rest);
            }
        }
        let vars: BTreeSet<usize> = g
            .terms
            .iter()
            .flat_map(|(e, _)| e.iter().enumerate().filter(|(_, d)| **d > 0).map(|(i, _)| i))
            .collect();
        if vars.len() == 1 {
            let v = *vars.iter().next().unwrap();
            let coeffs: BTreeMap<u32, Rational> = g.terms.iter().map(|(e, c)| (e[v], c.clone())).collect();
            for a in rational_roots(&coeffs) {
                let mut e = vec![0; n];
                e[v] = 1;
                out.push(Poly::from_terms(ORDER, vec![(e, Rational::one()), (vec![0; n], -a)]));
            }
        }
    }
    let small: Vec<Rational> = [(1, 1), (-1, 1), (2, 1), (-2, 1), (1, 2), (-1, 2)]
        .iter()
        .map(|&(p, q)| Rational::new(p.into(), q.into()))
        .collect();
    for (i, a) in standard.iter().enumerate().skip(1) {
        for b in &standard[..i] {
            for c in &small {
                out.push(Poly::from_terms(
                    ORDER,
                    vec![(a.clone(), Rational::one()), (b.clone(), c.clone())],
                ));
            }
        }
    }
    out
}

/// Rational roots of `Σ coeffs[d] x^d`, by the rational root theorem when the
/// cleared integer coefficients are small enough to factor by trial division.
fn rational_roots(coeffs: &BTreeMap<u32, Rational>) -> Vec<Rational> {
    let lcm = coeffs
        .values()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: BTreeMap<u32, BigInt> = coeffs
        .iter()
        .map(|(d, c)| (*d, (c * Rational::from(lcm.clone())).to_integer()))
        .collect();
    let low = *ints.keys().next().expect("nonzero polynomial");
    let high = *ints.keys().next_back().unwrap();
    let mut roots = Vec::new();
    if low > 0 {
        roots.push(Rational::zero());
    }
    if high == low {
        return roots;
    }
    let divisors = |x: &BigInt| -> Option<Vec<i64>> {
        let x = x.abs().to_i64().filter(|&x| x <= 1_000_000)?;
        Some((1..=x).filter(|d| x % d == 0).collect())
    };
    let (Some(ps), Some(qs)) = (divisors(&ints[&low]), divisors(&ints[&high])) else {
        return roots;
    };
    let eval = |x: &Rational| -> Rational {
        coeffs
            .iter()
            .map(|(d, c)| c * num_traits::pow(x.clone(), *d as usize))
            .sum()
    };
    let mut found = BTreeSet::new();
    for p in &ps {
        for q in &qs {
            for s in [1, -1] {
                let x = Rational::new((s * p).into(), (*q).into());
                if eval(&x).is_zero() {
                    found.insert(x);
                }
            }
        }
    }
    roots.extend(found);
    roots
}

/// Reduced Gröbner basis of `generators` over `truncation`.
pub fn groebner_basis(generators: &[DiffPoly], truncation: &Truncation) -> Result<Vec<DiffPoly>> {
    Ok(TruncatedIdeal::new(truncation, generators.to_vec())?.groebner_basis())
}

pub fn ideal_member(f: &DiffPoly, ideal: &TruncatedIdeal) -> Result<Option<MembershipCertificate>> {
    ideal.member(f)
}

pub fn saturate(ideal: &TruncatedIdeal, h: &DiffPoly) -> Result<TruncatedIdeal> {
    ideal.saturate(h)
}

pub fn ideal_equal_trunc(a: &TruncatedIdeal, b: &TruncatedIdeal) -> Result<bool> {
    a.equals(b)
}

pub fn bounded_prime_probe(ideal: &TruncatedIdeal, degree_cap: u32) -> PrimeVerdict {
    ideal.prime_probe(degree_cap)
}
