use std::cmp::Ordering;

use super::Indeterminate;

/// A power product of indeterminates. Factors are kept sorted by decreasing
/// rank with strictly positive exponents; the empty product is `1`.
///
/// Monomials are ordered by total degree, then lexicographically with
/// variables compared by rank.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    factors: Vec<(Indeterminate, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Indeterminate) -> Self {
        Monomial {
            factors: vec![(v, 1)],
        }
    }

    pub fn power(v: Indeterminate, e: u32) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial {
                factors: vec![(v, e)],
            }
        }
    }

    pub fn from_factors<I: IntoIterator<Item = (Indeterminate, u32)>>(factors: I) -> Self {
        let mut out = Monomial::one();
        for (v, e) in factors {
            out = out.mul(&Monomial::power(v, e));
        }
        out
    }

    pub fn factors(&self) -> &[(Indeterminate, u32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|(_, e)| e).sum()
    }

    pub fn degree_in(&self, v: &Indeterminate) -> u32 {
        self.factors
            .iter()
            .find(|(w, _)| w == v)
            .map_or(0, |(_, e)| *e)
    }

    /// Highest-ranked indeterminate, if any.
    pub fn top(&self) -> Option<&Indeterminate> {
        self.factors.first().map(|(v, _)| v)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut factors = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut a, mut b) = (self.factors.iter().peekable(), other.factors.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                    Ordering::Greater => {
                        factors.push((va.clone(), *ea));
                        a.next();
                    }
                    Ordering::Less => {
                        factors.push((vb.clone(), *eb));
                        b.next();
                    }
                    Ordering::Equal => {
                        factors.push((va.clone(), ea + eb));
                        a.next();
                        b.next();
                    }
                },
                (Some(_), None) => {
                    factors.extend(a.cloned());
                    break;
                }
                (None, Some(_)) => {
                    factors.extend(b.cloned());
                    break;
                }
                (None, None) => break,
            }
        }
        Monomial { factors }
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut factors = Vec::with_capacity(self.factors.len());
        let mut rest = other.factors.iter().peekable();
        for (v, e) in &self.factors {
            match rest.peek() {
                Some((w, f)) if w == v => {
                    if f > e {
                        return None;
                    }
                    if e > f {
                        factors.push((v.clone(), e - f));
                    }
                    rest.next();
                }
                Some((w, _)) if w > v => return None,
                _ => factors.push((v.clone(), *e)),
            }
        }
        if rest.next().is_some() {
            return None;
        }
        Some(Monomial { factors })
    }

    /// Splits off the power of `v`: returns `(deg_v, self / v^deg_v)`.
    pub fn split(&self, v: &Indeterminate) -> (u32, Monomial) {
        let mut d = 0;
        let factors = self
            .factors
            .iter()
            .filter(|(w, e)| {
                if w == v {
                    d = *e;
                    false
                } else {
                    true
                }
            })
            .cloned()
            .collect();
        (d, Monomial { factors })
    }

    pub fn map_indeterminates(&self, f: impl Fn(&Indeterminate) -> Indeterminate) -> Monomial {
        Monomial::from_factors(self.factors.iter().map(|(v, e)| (f(v), *e)))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.factors.iter().zip(&other.factors) {
                let c = a.0.cmp(&b.0).then(a.1.cmp(&b.1));
                if c != Ordering::Equal {
                    return c;
                }
            }
            self.factors.len().cmp(&other.factors.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
