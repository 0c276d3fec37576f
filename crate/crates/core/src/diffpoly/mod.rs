//! Differential polynomials over ℚ in commuting derivations.
//!
//! Indices are 0-based throughout the library: derivation `k` is `δ_{k+1}`
//! and variable `j` is `x_{j+1}`. The text format is 1-based.

mod indet;
mod monomial;

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use indet::{DerivOp, Indeterminate, Rank};
pub use monomial::Monomial;

use crate::error::{Error, Result};
use crate::group::GroupSpec;

pub type Rational = num_rational::BigRational;

/// Integer `n` as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den` as a rational.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// The ring `ℚ{x̄}`: `m` derivations, `n` variables per block, one block per
/// element of `group`.
#[derive(Clone, Debug)]
pub struct Ambient {
    derivations: usize,
    vars: usize,
    group: Arc<GroupSpec>,
}

impl PartialEq for Ambient {
    fn eq(&self, other: &Self) -> bool {
        self.derivations == other.derivations
            && self.vars == other.vars
            && (Arc::ptr_eq(&self.group, &other.group) || self.group == other.group)
    }
}

impl Eq for Ambient {}

impl Ambient {
    pub fn new(derivations: usize, vars: usize, group: GroupSpec) -> Result<Self> {
        if vars == 0 {
            return Err(Error::AmbientMismatch("need at least one variable".into()));
        }
        Ok(Ambient {
            derivations,
            vars,
            group: Arc::new(group),
        })
    }

    /// Ambient over the trivial group.
    pub fn plain(derivations: usize, vars: usize) -> Self {
        Self::new(derivations, vars, GroupSpec::trivial()).expect("vars >= 1")
    }

    pub fn derivations(&self) -> usize {
        self.derivations
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn blocks(&self) -> usize {
        self.group.order()
    }

    pub fn check_indet(&self, v: &Indeterminate) -> Result<()> {
        if v.op.derivations() != self.derivations {
            return Err(Error::AmbientMismatch(format!(
                "{v:?} uses {} derivations, ambient has {}",
                v.op.derivations(),
                self.derivations
            )));
        }
        if v.var >= self.vars {
            return Err(Error::VariableOutOfRange {
                index: v.var + 1,
                max: self.vars,
            });
        }
        if v.block >= self.blocks() {
            return Err(Error::AmbientMismatch(format!(
                "{v:?} refers to block {} of a group of order {}",
                v.block,
                self.blocks()
            )));
        }
        Ok(())
    }

    /// `δ^ξ x_{block,var}`, validated against this ambient.
    pub fn indet(&self, block: usize, var: usize, exponents: &[u32]) -> Result<Indeterminate> {
        let v = Indeterminate::new(block, var, DerivOp::new(exponents.to_vec()));
        self.check_indet(&v)?;
        Ok(v)
    }

    /// The order-zero variable `x_{block,var}`.
    pub fn base_var(&self, block: usize, var: usize) -> Indeterminate {
        Indeterminate::new(block, var, DerivOp::identity(self.derivations))
    }

    /// The canonical orderly ranking, checking both arguments belong here.
    pub fn compare_indets(&self, u: &Indeterminate, v: &Indeterminate) -> Result<Ordering> {
        self.check_indet(u)?;
        self.check_indet(v)?;
        Ok(u.cmp(v))
    }

    /// Every indeterminate of order at most `max_order`, in increasing rank.
    pub fn indets_up_to(&self, max_order: u32) -> Vec<Indeterminate> {
        let mut out = Vec::new();
        for op in DerivOp::all_up_to(self.derivations, max_order) {
            for block in 0..self.blocks() {
                for var in 0..self.vars {
                    out.push(Indeterminate::new(block, var, op.clone()));
                }
            }
        }
        out.sort();
        out
    }

    pub fn zero(&self) -> DiffPoly {
        DiffPoly {
            ambient: self.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(&self, c: Rational) -> DiffPoly {
        DiffPoly::from_terms(self, [(Monomial::one(), c)])
    }

    pub fn one(&self) -> DiffPoly {
        self.constant(Rational::one())
    }

    /// The polynomial consisting of the single indeterminate `v`.
    pub fn poly(&self, v: Indeterminate) -> Result<DiffPoly> {
        self.check_indet(&v)?;
        Ok(DiffPoly::from_terms(self, [(Monomial::var(v), Rational::one())]))
    }
}

/// A differential polynomial: finitely many nonzero rational coefficients on
/// monomials in the indeterminates of its ambient.
#[derive(Clone, PartialEq, Eq)]
pub struct DiffPoly {
    ambient: Ambient,
    terms: BTreeMap<Monomial, Rational>,
}

impl std::hash::Hash for DiffPoly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state)
    }
}

impl fmt::Debug for DiffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::print_poly(self))
    }
}

impl DiffPoly {
    /// Builds a polynomial from `(monomial, coefficient)` pairs, merging
    /// duplicates and discarding zeros.
    pub fn from_terms<I>(ambient: &Ambient, terms: I) -> DiffPoly
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut out = BTreeMap::new();
        for (m, c) in terms {
            add_term(&mut out, m, c);
        }
        DiffPoly {
            ambient: ambient.clone(),
            terms: out,
        }
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for elements of ℚ, including zero.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_zero() {
            Some(Rational::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    /// Highest term under the monomial order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn indeterminates(&self) -> BTreeSet<Indeterminate> {
        self.terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|(v, _)| v.clone()))
            .collect()
    }

    /// Largest derivative order of any indeterminate present.
    pub fn max_order(&self) -> u32 {
        self.terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|(v, _)| v.order()))
            .max()
            .unwrap_or(0)
    }

    pub fn scale(&self, c: &Rational) -> DiffPoly {
        if c.is_zero() {
            return self.ambient.zero();
        }
        DiffPoly {
            ambient: self.ambient.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> DiffPoly {
        if c.is_zero() {
            return self.ambient.zero();
        }
        DiffPoly {
            ambient: self.ambient.clone(),
            terms: self.terms.iter().map(|(n, a)| (n.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> DiffPoly {
        let mut acc = self.ambient.one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Makes the leading coefficient 1 (zero stays zero).
    pub fn monic(&self) -> DiffPoly {
        match self.leading_term() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    pub fn degree_in(&self, v: &Indeterminate) -> u32 {
        self.terms.keys().map(|m| m.degree_in(v)).max().unwrap_or(0)
    }

    /// Coefficient of `v^d` when viewed as a univariate polynomial in `v`.
    pub fn coefficient(&self, v: &Indeterminate, d: u32) -> DiffPoly {
        DiffPoly::from_terms(
            &self.ambient,
            self.terms.iter().filter_map(|(m, c)| {
                let (e, rest) = m.split(v);
                (e == d).then(|| (rest, c.clone()))
            }),
        )
    }

    /// The highest-ranking indeterminate occurring in `self`.
    pub fn leader(&self) -> Result<Indeterminate> {
        self.terms
            .keys()
            .filter_map(Monomial::top)
            .max()
            .cloned()
            .ok_or(Error::ConstantPolynomial)
    }

    pub fn degree_in_leader(&self) -> Result<u32> {
        let u = self.leader()?;
        Ok(self.degree_in(&u))
    }

    pub fn rank(&self) -> Result<Rank> {
        let leader = self.leader()?;
        let degree = self.degree_in(&leader);
        Ok(Rank { leader, degree })
    }

    /// Formal partial derivative, treating indeterminates as independent.
    pub fn partial_derivative(&self, v: &Indeterminate) -> DiffPoly {
        DiffPoly::from_terms(
            &self.ambient,
            self.terms.iter().filter_map(|(m, c)| {
                let (e, rest) = m.split(v);
                (e > 0).then(|| {
                    (
                        rest.mul(&Monomial::power(v.clone(), e - 1)),
                        c * Rational::from_integer(BigInt::from(e)),
                    )
                })
            }),
        )
    }

    /// `s_f = ∂f/∂u_f`.
    pub fn separant(&self) -> Result<DiffPoly> {
        let u = self.leader()?;
        Ok(self.partial_derivative(&u))
    }

    /// `i_f`, the coefficient of `u_f^{d_f}`.
    pub fn initial(&self) -> Result<DiffPoly> {
        let Rank { leader, degree } = self.rank()?;
        Ok(self.coefficient(&leader, degree))
    }

    /// `δ_k f` (0-based `k`), by the Leibniz rule. Constants have derivative 0
    /// since ℚ carries the trivial derivations.
    pub fn derivative(&self, k: usize) -> Result<DiffPoly> {
        let m = self.ambient.derivations;
        if k >= m {
            return Err(Error::DerivationOutOfRange { index: k + 1, max: m });
        }
        let mut out = BTreeMap::new();
        for (mono, c) in &self.terms {
            let factors = mono.factors();
            for (i, (v, e)) in factors.iter().enumerate() {
                let mut dv = v.clone();
                dv.op.bump(k);
                let rest = Monomial::from_factors(
                    factors
                        .iter()
                        .enumerate()
                        .map(|(j, (w, f))| (w.clone(), if i == j { f - 1 } else { *f })),
                );
                let coeff = c * Rational::from_integer(BigInt::from(*e));
                add_term(&mut out, rest.mul(&Monomial::var(dv)), coeff);
            }
        }
        Ok(DiffPoly {
            ambient: self.ambient.clone(),
            terms: out,
        })
    }

    /// `δ^op f`.
    pub fn derive_by(&self, op: &DerivOp) -> Result<DiffPoly> {
        if op.derivations() != self.ambient.derivations {
            return Err(Error::AmbientMismatch(format!(
                "operator {op:?} does not match {} derivations",
                self.ambient.derivations
            )));
        }
        let mut f = self.clone();
        for (k, &e) in op.exponents().iter().enumerate() {
            for _ in 0..e {
                f = f.derivative(k)?;
            }
        }
        Ok(f)
    }

    /// Relabels indeterminates through an injective map.
    pub fn map_indeterminates(&self, f: impl Fn(&Indeterminate) -> Indeterminate) -> DiffPoly {
        DiffPoly::from_terms(
            &self.ambient,
            self.terms
                .iter()
                .map(|(m, c)| (m.map_indeterminates(&f), c.clone())),
        )
    }

    /// Plain polynomial evaluation with each `δ^ξ x` an independent variable.
    pub fn evaluate(&self, assignment: &BTreeMap<Indeterminate, Rational>) -> Result<Rational> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut value = c.clone();
            for (v, e) in m.factors() {
                let x = assignment
                    .get(v)
                    .ok_or_else(|| Error::MissingAssignment(v.clone()))?;
                value *= num_traits::pow(x.clone(), *e as usize);
            }
            total += value;
        }
        Ok(total)
    }

    /// `self / divisor` if the division is exact.
    pub fn div_exact(&self, divisor: &DiffPoly) -> Option<DiffPoly> {
        let (dm, dc) = divisor.leading_term()?;
        let (dm, dc) = (dm.clone(), dc.clone());
        let mut rem = self.clone();
        let mut quot = BTreeMap::new();
        while let Some((m, c)) = rem.leading_term() {
            let q = m.div(&dm)?;
            let qc = c / &dc;
            rem = &rem - &divisor.mul_monomial(&q, &qc);
            add_term(&mut quot, q, qc);
        }
        Some(DiffPoly {
            ambient: self.ambient.clone(),
            terms: quot,
        })
    }

    /// No proper derivative of `u_f` occurs in `self`.
    pub fn is_partially_reduced_wrt(&self, f: &DiffPoly) -> Result<bool> {
        let u = f.leader()?;
        Ok(self
            .indeterminates()
            .iter()
            .all(|v| !v.is_proper_derivative_of(&u)))
    }

    /// Partially reduced and of degree in `u_f` below `d_f`.
    pub fn is_reduced_wrt(&self, f: &DiffPoly) -> Result<bool> {
        let rank = f.rank()?;
        Ok(self.is_partially_reduced_wrt(f)? && self.degree_in(&rank.leader) < rank.degree)
    }

    pub fn is_reduced_wrt_all(&self, set: &[DiffPoly]) -> Result<bool> {
        for f in set {
            if !self.is_reduced_wrt(f)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Content-free representative with positive leading coefficient and
    /// integer coefficients; used for display-stable witnesses.
    pub fn primitive(&self) -> DiffPoly {
        use num_integer::Integer;
        if self.is_zero() {
            return self.clone();
        }
        let mut den = BigInt::one();
        let mut num = BigInt::zero();
        for c in self.terms.values() {
            den = den.lcm(c.denom());
            num = num.gcd(c.numer());
        }
        let mut factor = Rational::new(den, num);
        if self.leading_term().unwrap().1.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    fn assert_same_ambient(&self, other: &DiffPoly) {
        assert!(
            self.ambient == other.ambient,
            "differential polynomials from different ambients"
        );
    }

    pub fn check_same_ambient(&self, other: &DiffPoly) -> Result<()> {
        if self.ambient == other.ambient {
            Ok(())
        } else {
            Err(Error::AmbientMismatch(
                "polynomials live in different rings".into(),
            ))
        }
    }
}

fn add_term(terms: &mut BTreeMap<Monomial, Rational>, m: Monomial, c: Rational) {
    if c.is_zero() {
        return;
    }
    match terms.entry(m) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl Add for &DiffPoly {
    type Output = DiffPoly;
    fn add(self, rhs: &DiffPoly) -> DiffPoly {
        self.assert_same_ambient(rhs);
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            add_term(&mut terms, m.clone(), c.clone());
        }
        DiffPoly {
            ambient: self.ambient.clone(),
            terms,
        }
    }
}

impl Sub for &DiffPoly {
    type Output = DiffPoly;
    fn sub(self, rhs: &DiffPoly) -> DiffPoly {
        self.assert_same_ambient(rhs);
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            add_term(&mut terms, m.clone(), -c);
        }
        DiffPoly {
            ambient: self.ambient.clone(),
            terms,
        }
    }
}

impl Mul for &DiffPoly {
    type Output = DiffPoly;
    fn mul(self, rhs: &DiffPoly) -> DiffPoly {
        self.assert_same_ambient(rhs);
        let mut terms = BTreeMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                add_term(&mut terms, a.mul(b), x * y);
            }
        }
        DiffPoly {
            ambient: self.ambient.clone(),
            terms,
        }
    }
}

impl Neg for &DiffPoly {
    type Output = DiffPoly;
    fn neg(self) -> DiffPoly {
        DiffPoly {
            ambient: self.ambient.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for DiffPoly {
            type Output = DiffPoly;
            fn $method(self, rhs: DiffPoly) -> DiffPoly { (&self).$method(&rhs) }
        }
        impl $tr<&DiffPoly> for DiffPoly {
            type Output = DiffPoly;
            fn $method(self, rhs: &DiffPoly) -> DiffPoly { (&self).$method(rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for DiffPoly {
    type Output = DiffPoly;
    fn neg(self) -> DiffPoly {
        -&self
    }
}
