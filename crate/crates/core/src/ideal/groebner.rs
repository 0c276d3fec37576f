//! Buchberger's algorithm with optional cofactor tracking.

use num_traits::{One, Zero};

use super::poly::{coprime, divides, exp_div, exp_lcm, MonomialOrder, Poly};
use crate::diffpoly::Rational;

/// A reduced Gröbner basis, monic and sorted by increasing leading monomial.
/// When tracked, `reps[i][j]` is the cofactor of input generator `j` in
/// `polys[i]`.
#[derive(Clone, Debug)]
pub(crate) struct Basis {
    pub(crate) polys: Vec<Poly>,
    pub(crate) reps: Option<Vec<Vec<Poly>>>,
}

struct Tracker {
    order: MonomialOrder,
    generators: usize,
    enabled: bool,
}

impl Tracker {
    fn unit(&self, j: usize, nvars: usize) -> Vec<Poly> {
        if !self.enabled {
            return Vec::new();
        }
        let mut v = vec![Poly::zero(); self.generators];
        v[j] = Poly::constant(nvars, Rational::one());
        v
    }

    fn sub_mul(&self, rep: &mut [Poly], c: &Rational, e: &[u32], other: &[Poly]) {
        if !self.enabled {
            return;
        }
        for (r, o) in rep.iter_mut().zip(other) {
            *r = r.sub_mul_term(c, e, o, self.order);
        }
    }

    fn scale(&self, rep: &mut [Poly], c: &Rational) {
        for r in rep.iter_mut() {
            *r = r.scale(c);
        }
    }
}

/// Full reduction of `f` by `basis`. Returns the remainder and, if
/// requested, the quotient attached to every basis element.
pub(crate) fn reduce(
    f: &Poly,
    basis: &[Poly],
    order: MonomialOrder,
    want_quotients: bool,
) -> (Poly, Vec<Poly>) {
    let mut quotients = if want_quotients {
        vec![Poly::zero(); basis.len()]
    } else {
        Vec::new()
    };
    let mut p = f.clone();
    let mut remainder = Vec::new();
    while let Some((e, c)) = p.lead().cloned() {
        match basis
            .iter()
            .position(|g| !g.is_zero() && divides(g.lead_exp(), &e))
        {
            Some(k) => {
                let g = &basis[k];
                let shift = exp_div(&e, g.lead_exp());
                let coeff = &c / &g.terms[0].1;
                p = p.sub_mul_term(&coeff, &shift, g, order);
                if want_quotients {
                    quotients[k] = quotients[k].add(&Poly::monomial(shift, coeff), order);
                }
            }
            None => {
                remainder.push((e, c));
                p.terms.remove(0);
            }
        }
    }
    (Poly { terms: remainder }, quotients)
}

/// Computes the reduced Gröbner basis of `generators`.
pub(crate) fn groebner(generators: &[Poly], nvars: usize, order: MonomialOrder, track: bool) -> Basis {
    let tracker = Tracker {
        order,
        generators: generators.len(),
        enabled: track,
    };
    let mut basis: Vec<Poly> = Vec::new();
    let mut reps: Vec<Vec<Poly>> = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();

    let add = |mut h: Poly,
                   mut rep: Vec<Poly>,
                   basis: &mut Vec<Poly>,
                   reps: &mut Vec<Vec<Poly>>,
                   pairs: &mut Vec<(usize, usize)>| {
        let inv = h.terms[0].1.recip();
        h = h.scale(&inv);
        tracker.scale(&mut rep, &inv);
        let k = basis.len();
        for i in 0..k {
            pairs.push((i, k));
        }
        basis.push(h);
        reps.push(rep);
    };

    for (j, g) in generators.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let (r, q) = reduce(g, &basis, order, track);
        if r.is_zero() {
            continue;
        }
        let mut rep = tracker.unit(j, nvars);
        for (k, qk) in q.iter().enumerate() {
            if !qk.is_zero() {
                for (term_e, term_c) in &qk.terms {
                    tracker.sub_mul(&mut rep, term_c, term_e, &reps[k]);
                }
            }
        }
        add(r, rep, &mut basis, &mut reps, &mut pairs);
    }

    while !pairs.is_empty() {
        // Normal selection strategy: smallest lcm first.
        let pos = (0..pairs.len())
            .min_by(|&a, &b| {
                let (i, j) = pairs[a];
                let (k, l) = pairs[b];
                let la = exp_lcm(basis[i].lead_exp(), basis[j].lead_exp());
                let lb = exp_lcm(basis[k].lead_exp(), basis[l].lead_exp());
                order.cmp(&la, &lb).then((j, i).cmp(&(l, k)))
            })
            .unwrap();
        let (i, j) = pairs.remove(pos);
        let (li, lj) = (basis[i].lead_exp().clone(), basis[j].lead_exp().clone());
        if coprime(&li, &lj) {
            continue;
        }
        let lcm = exp_lcm(&li, &lj);
        let pending = |a: usize, b: usize| {
            let key = (a.min(b), a.max(b));
            pairs.contains(&key)
        };
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && divides(basis[k].lead_exp(), &lcm)
                && !pending(i, k)
                && !pending(j, k)
        });
        if chain {
            continue;
        }
        let si = exp_div(&lcm, &li);
        let sj = exp_div(&lcm, &lj);
        let s = basis[i]
            .mul_term(&Rational::one(), &si)
            .sub_mul_term(&Rational::one(), &sj, &basis[j], order);
        let mut rep = Vec::new();
        if track {
            rep = vec![Poly::zero(); generators.len()];
            tracker.sub_mul(&mut rep, &-Rational::one(), &si, &reps[i]);
            tracker.sub_mul(&mut rep, &Rational::one(), &sj, &reps[j]);
        }
        let (r, q) = reduce(&s, &basis, order, track);
        if r.is_zero() {
            continue;
        }
        if track {
            for (k, qk) in q.iter().enumerate() {
                for (term_e, term_c) in &qk.terms {
                    tracker.sub_mul(&mut rep, term_c, term_e, &reps[k]);
                }
            }
        }
        add(r, rep, &mut basis, &mut reps, &mut pairs);
    }

    interreduce(basis, reps, order, &tracker)
}

fn interreduce(basis: Vec<Poly>, reps: Vec<Vec<Poly>>, order: MonomialOrder, tracker: &Tracker) -> Basis {
    // Minimal basis: drop elements whose leading monomial is divisible by
    // another's (keeping the earliest of equal leading monomials).
    let keep: Vec<usize> = (0..basis.len())
        .filter(|&i| {
            !(0..basis.len()).any(|j| {
                j != i
                    && divides(basis[j].lead_exp(), basis[i].lead_exp())
                    && (basis[j].lead_exp() != basis[i].lead_exp() || j < i)
            })
        })
        .collect();
    let mut polys: Vec<Poly> = keep.iter().map(|&i| basis[i].clone()).collect();
    let mut new_reps: Vec<Vec<Poly>> = if tracker.enabled {
        keep.iter().map(|&i| reps[i].clone()).collect()
    } else {
        Vec::new()
    };
    for i in 0..polys.len() {
        let others: Vec<Poly> = polys
            .iter()
            .enumerate()
            .map(|(k, p)| if k == i { Poly::zero() } else { p.clone() })
            .collect();
        let head = Poly {
            terms: polys[i].terms[..1].to_vec(),
        };
        let tail = Poly {
            terms: polys[i].terms[1..].to_vec(),
        };
        let (r, q) = reduce(&tail, &others, order, tracker.enabled);
        polys[i] = head.add(&r, order);
        if tracker.enabled {
            let mut rep = new_reps[i].clone();
            for (k, qk) in q.iter().enumerate() {
                for (term_e, term_c) in &qk.terms {
                    let other = new_reps[k].clone();
                    tracker.sub_mul(&mut rep, term_c, term_e, &other);
                }
            }
            new_reps[i] = rep;
        }
    }
    let mut idx: Vec<usize> = (0..polys.len()).collect();
    idx.sort_by(|&a, &b| order.cmp(polys[a].lead_exp(), polys[b].lead_exp()));
    let sorted: Vec<Poly> = idx.iter().map(|&i| polys[i].clone()).collect();
    let reps = tracker
        .enabled
        .then(|| idx.iter().map(|&i| new_reps[i].clone()).collect());
    debug_assert!(sorted.iter().all(|p| p.terms[0].1.is_one()));
    debug_assert!(sorted.iter().all(|p| !p.terms[0].1.is_zero()));
    Basis {
        polys: sorted,
        reps,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diffpoly::rat;

    fn p(terms: &[(&[u32], i64)]) -> Poly {
        Poly::from_terms(
            MonomialOrder::DegRevLex,
            terms.iter().map(|(e, c)| (e.to_vec(), rat(*c))).collect(),
        )
    }

    #[test]
    fn linear_system() {
        // y + z, y − z  →  {z, y}
        let gens = [p(&[(&[1, 0], 1), (&[0, 1], 1)]), p(&[(&[1, 0], 1), (&[0, 1], -1)])];
        let b = groebner(&gens, 2, MonomialOrder::DegRevLex, true);
        assert_eq!(b.polys, vec![p(&[(&[0, 1], 1)]), p(&[(&[1, 0], 1)])]);
        let reps = b.reps.unwrap();
        for (g, rep) in b.polys.iter().zip(&reps) {
            let mut acc = Poly::zero();
            for (r, gen) in rep.iter().zip(&gens) {
                acc = acc.add(&r.mul(gen, MonomialOrder::DegRevLex), MonomialOrder::DegRevLex);
            }
            assert_eq!(&acc, g);
        }
    }

    #[test]
    fn twisted_cubic_s_pairs_reduce_to_zero() {
        // x0 = x, x1 = y, x2 = z: y − x², z − x³
        let o = MonomialOrder::DegRevLex;
        let gens = [
            p(&[(&[0, 1, 0], 1), (&[2, 0, 0], -1)]),
            p(&[(&[0, 0, 1], 1), (&[3, 0, 0], -1)]),
        ];
        let b = groebner(&gens, 3, o, false);
        for i in 0..b.polys.len() {
            for j in 0..i {
                let (li, lj) = (b.polys[i].lead_exp(), b.polys[j].lead_exp());
                let l = exp_lcm(li, lj);
                let s = b.polys[i]
                    .mul_term(&rat(1), &exp_div(&l, li))
                    .sub_mul_term(&rat(1), &exp_div(&l, lj), &b.polys[j], o);
                assert!(reduce(&s, &b.polys, o, false).0.is_zero());
            }
        }
        assert_eq!(b.polys.len(), 3);
    }
}
