mod common;

use std::cmp::Ordering;

use common::oracles::derive_oracle;
use diffalg::diffpoly::{Ambient, DerivOp, Indeterminate};
use diffalg::GroupSpec;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every operator `δ^ξ` in `m` derivations with `Σξ ≤ max`, built by
/// counting rather than through the library.
fn ops(m: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|p: Vec<u32>| {
                let used: u32 = p.iter().sum();
                (0..=max - used).map(move |e| {
                    let mut q = p.clone();
                    q.push(e);
                    q
                })
            })
            .collect();
    }
    out
}

fn key(v: &Indeterminate) -> (u32, usize, usize, Vec<u32>) {
    let xi = v.op.exponents().to_vec();
    (xi.iter().sum(), v.block, v.var, xi)
}

#[test]
fn orderly_ranking_is_a_linear_order() {
    for m in 1..=3 {
        for n in 1..=2 {
            for k in 1..=3 {
                let ambient = Ambient::new(m, n, GroupSpec::cyclic(k)).unwrap();
                let mut all = Vec::new();
                for xi in ops(m, 4) {
                    for block in 0..k {
                        for var in 0..n {
                            all.push(ambient.indet(block, var, &xi).unwrap());
                        }
                    }
                }
                let expected = k * n * ops(m, 4).len();
                assert_eq!(all.len(), expected);
                for u in &all {
                    for v in &all {
                        let c = ambient.compare_indets(u, v).unwrap();
                        assert_eq!(c, key(u).cmp(&key(v)), "{u:?} {v:?}");
                        assert_eq!(c == Ordering::Equal, u == v);
                        assert_eq!(c.reverse(), ambient.compare_indets(v, u).unwrap());
                    }
                }
                // Agreement with the tuple key on all pairs makes the order
                // total; transitivity follows by checking sorted positions.
                let mut sorted = all.clone();
                sorted.sort_by(|a, b| ambient.compare_indets(a, b).unwrap());
                for (i, u) in sorted.iter().enumerate() {
                    for v in &sorted[i + 1..] {
                        assert_eq!(ambient.compare_indets(u, v).unwrap(), Ordering::Less);
                    }
                }
                let mut listed = ambient.indets_up_to(4);
                listed.sort_by_key(key);
                assert_eq!(listed, ambient.indets_up_to(4));
                assert_eq!(listed.len(), expected);
            }
        }
    }
}

#[test]
fn ranking_is_compatible_with_derivations() {
    let ambient = Ambient::new(2, 2, GroupSpec::cyclic(2)).unwrap();
    let all = ambient.indets_up_to(3);
    for u in &all {
        for v in &all {
            for j in 0..2 {
                let step = DerivOp::unit(2, j);
                assert_eq!(u.cmp(v), u.derive(&step).cmp(&v.derive(&step)));
                assert!(u.derive(&step) > *u);
            }
        }
    }
}

#[test]
fn derivations_raise_rank() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..200 {
        let m = rng.gen_range(1..=3);
        let n = rng.gen_range(1..=2);
        let k = rng.gen_range(1..=3);
        let ambient = Ambient::new(m, n, GroupSpec::cyclic(k)).unwrap();
        let terms = rng.gen_range(1..=4);
        let f = common::random_nonconstant(&mut rng, &ambient, 2, 3, terms);
        let j = rng.gen_range(0..m);
        let d = f.derivative(j).unwrap();
        assert_eq!(d, derive_oracle(&f, j));
        assert!(d.rank().unwrap() > f.rank().unwrap());
        assert_eq!(d.leader().unwrap(), f.leader().unwrap().derive(&DerivOp::unit(m, j)));
        assert_eq!(d.degree_in_leader().unwrap(), 1);
    }
}
