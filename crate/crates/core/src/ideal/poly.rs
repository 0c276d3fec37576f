//! Dense-exponent sparse polynomials for Gröbner computations.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use crate::diffpoly::Rational;

pub(crate) type Exp = Vec<u32>;

/// Monomial orders on exponent vectors; variable 0 is the largest.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum MonomialOrder {
    DegRevLex,
    /// Block order: degrevlex on the first `k` variables, ties broken by
    /// degrevlex on the rest. Eliminates the first block.
    Elimination(usize),
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl MonomialOrder {
    pub(crate) fn cmp(self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::DegRevLex => grevlex(a, b),
            MonomialOrder::Elimination(k) => {
                grevlex(&a[..k], &b[..k]).then_with(|| grevlex(&a[k..], &b[k..]))
            }
        }
    }
}

pub(crate) fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub(crate) fn exp_div(a: &[u32], b: &[u32]) -> Exp {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub(crate) fn exp_mul(a: &[u32], b: &[u32]) -> Exp {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub(crate) fn exp_lcm(a: &[u32], b: &[u32]) -> Exp {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

pub(crate) fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

/// Terms sorted strictly decreasing under the order the polynomial was built
/// with; no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub(crate) struct Poly {
    pub(crate) terms: Vec<(Exp, Rational)>,
}

impl Poly {
    pub(crate) fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub(crate) fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub(crate) fn monomial(e: Exp, c: Rational) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: vec![(e, c)],
            }
        }
    }

    pub(crate) fn from_terms(order: MonomialOrder, mut terms: Vec<(Exp, Rational)>) -> Self {
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Exp, Rational)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Poly { terms: out }
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn lead(&self) -> Option<&(Exp, Rational)> {
        self.terms.first()
    }

    pub(crate) fn lead_exp(&self) -> &Exp {
        &self.terms[0].0
    }

    pub(crate) fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(e, _)| e.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    pub(crate) fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    pub(crate) fn monic(&self) -> Poly {
        match self.lead() {
            Some((_, c)) if !c.is_one() => self.scale(&c.recip()),
            _ => self.clone(),
        }
    }

    /// `self − c · x^e · other`, merging in order.
    pub(crate) fn sub_mul_term(&self, c: &Rational, e: &[u32], other: &Poly, order: MonomialOrder) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other
            .terms
            .iter()
            .map(|(f, d)| (exp_mul(f, e), -(d * c)))
            .peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some((ea, _)), Some((eb, _))) => match order.cmp(ea, eb) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let (ea, ca) = a.next().unwrap();
                        let (_, cb) = b.next().unwrap();
                        let s = ca + cb;
                        if !s.is_zero() {
                            out.push((ea.clone(), s));
                        }
                    }
                },
                (Some(_), None) => {
                    out.extend(a.cloned());
                    break;
                }
                (None, Some(_)) => {
                    out.extend(b);
                    break;
                }
                (None, None) => break,
            }
        }
        Poly { terms: out }
    }

    pub(crate) fn add(&self, other: &Poly, order: MonomialOrder) -> Poly {
        if other.is_zero() {
            return self.clone();
        }
        let nvars = other.terms[0].0.len();
        self.sub_mul_term(&-Rational::one(), &vec![0; nvars], other, order)
    }

    pub(crate) fn mul_term(&self, c: &Rational, e: &[u32]) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(f, d)| (exp_mul(f, e), d * c))
                .collect(),
        }
    }

    pub(crate) fn mul(&self, other: &Poly, order: MonomialOrder) -> Poly {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                terms.push((exp_mul(ea, eb), ca * cb));
            }
        }
        Poly::from_terms(order, terms)
    }
}
