mod common;

use common::oracles::{indets_of, reduced_oracle};
use diffalg::diffpoly::Ambient;
use diffalg::reduction::{diff_remainder, membership_by_remainder};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn certificates_on_random_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut nontrivial = 0;
    for case in 0..1500 {
        let m = rng.gen_range(1..=2);
        let n = rng.gen_range(1..=2);
        let ambient = Ambient::plain(m, n);
        let set = common::random_autoreduced(&mut rng, &ambient, 2, 3);
        let terms = rng.gen_range(1..=5);
        let f = common::random_poly(&mut rng, &ambient, 3, 3, terms);
        let cert = diff_remainder(&f, &set).unwrap();
        if cert.exponent > 0 {
            nontrivial += 1;
        }
        assert!(reduced_oracle(&cert.remainder, set.elements()), "case {case}: {f:?} by {set:?} -> {cert:?}");
        assert!(cert.verify(&f, &set), "case {case}");
        let again = diff_remainder(&cert.remainder, &set).unwrap();
        assert_eq!(again.remainder, cert.remainder);
        assert_eq!(again.exponent, 0);
    }
    assert!(nontrivial > 100);
}

#[test]
fn identity_holds_at_rational_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let ambient = Ambient::plain(rng.gen_range(1..=2), rng.gen_range(1..=2));
        let set = common::random_autoreduced(&mut rng, &ambient, 2, 3);
        let f = common::random_poly(&mut rng, &ambient, 2, 3, 4);
        let cert = diff_remainder(&f, &set).unwrap();
        let lhs = &cert.multiplier(&set) * &f;
        let mut rhs = cert.remainder.clone();
        for c in &cert.cofactors {
            rhs = &rhs + &(&c.coefficient * &set.elements()[c.index].derive_by(&c.op).unwrap());
        }
        let vars = indets_of(&[&lhs, &rhs]);
        for _ in 0..10 {
            let point = common::oracles::random_point(&mut rng, &vars);
            assert_eq!(lhs.evaluate(&point).unwrap(), rhs.evaluate(&point).unwrap());
        }
    }
}

/// Multiples of elements reduce to zero. Derivatives need not: with an
/// incoherent set the reducer may use a different element for a shared
/// derivative leader.
#[test]
fn multiples_of_elements_reduce_to_zero() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..100 {
        let ambient = Ambient::plain(2, 2);
        let set = common::random_autoreduced(&mut rng, &ambient, 1, 2);
        for e in set.elements() {
            let scaled = e * &common::random_poly(&mut rng, &ambient, 1, 1, 2);
            for g in [e, &scaled] {
                assert!(diff_remainder(g, &set).unwrap().remainder.is_zero(), "{g:?} by {set:?}");
                assert!(membership_by_remainder(g, &set).unwrap());
            }
        }
    }
}
