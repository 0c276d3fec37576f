#![allow(dead_code)]

use diffalg::diffpoly::{ratio, Ambient, DiffPoly, Indeterminate, Monomial};
use diffalg::reduction::{minimal_autoreduced_subset, AutoreducedSet};
use diffalg::Rational;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    let num = loop {
        let n = rng.gen_range(-5i64..=5);
        if n != 0 {
            break n;
        }
    };
    ratio(num, rng.gen_range(1i64..=3))
}

/// A random polynomial with `terms` terms, each of total degree at most
/// `max_degree`, in indeterminates of order at most `max_order`.
pub fn random_poly<R: Rng>(
    rng: &mut R,
    ambient: &Ambient,
    max_order: u32,
    max_degree: u32,
    terms: usize,
) -> DiffPoly {
    let pool = ambient.indets_up_to(max_order);
    random_poly_in(rng, ambient, &pool, max_degree, terms)
}

pub fn random_poly_in<R: Rng>(
    rng: &mut R,
    ambient: &Ambient,
    pool: &[Indeterminate],
    max_degree: u32,
    terms: usize,
) -> DiffPoly {
    let mut out = Vec::new();
    for _ in 0..terms {
        let degree = rng.gen_range(0..=max_degree);
        let factors = (0..degree).map(|_| (pool.choose(rng).unwrap().clone(), 1));
        out.push((Monomial::from_factors(factors), random_rational(rng)));
    }
    DiffPoly::from_terms(ambient, out)
}

pub fn random_nonconstant<R: Rng>(
    rng: &mut R,
    ambient: &Ambient,
    max_order: u32,
    max_degree: u32,
    terms: usize,
) -> DiffPoly {
    loop {
        let f = random_poly(rng, ambient, max_order, max_degree.max(1), terms);
        if !f.is_constant() {
            return f;
        }
    }
}

/// A random autoreduced set obtained by greedy extraction from a few random
/// polynomials.
pub fn random_autoreduced<R: Rng>(
    rng: &mut R,
    ambient: &Ambient,
    max_order: u32,
    max_degree: u32,
) -> AutoreducedSet {
    let count = rng.gen_range(1..=3);
    let polys: Vec<DiffPoly> = (0..count)
        .map(|_| {
            let terms = rng.gen_range(1..=4);
            random_nonconstant(rng, ambient, max_order, max_degree, terms)
        })
        .collect();
    minimal_autoreduced_subset(&polys).unwrap()
}

pub mod fixtures;
pub mod oracles;
