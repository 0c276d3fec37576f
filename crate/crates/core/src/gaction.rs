//! The finite-group action on blocks of differential variables.
//!
//! `σ_g` sends `δ^ξ x_{h,j}` to `δ^ξ x_{g·h,j}`; it is a differential ring
//! automorphism fixing ℚ.

use std::collections::BTreeMap;

use crate::diffpoly::{Ambient, DiffPoly, Indeterminate};
use crate::error::{Error, Result};
use crate::reduction::AutoreducedSet;
use crate::rosenfeld::{prolonged_generators, prolonged_saturation_by, Caps};

pub fn sigma_indet(ambient: &Ambient, g: usize, v: &Indeterminate) -> Indeterminate {
    Indeterminate::new(ambient.group().mul(g, v.block), v.var, v.op.clone())
}

/// `σ_g(f)` for the element with index `g`.
pub fn sigma_apply(g: usize, f: &DiffPoly) -> Result<DiffPoly> {
    let ambient = f.ambient();
    let order = ambient.group().order();
    if g >= order {
        return Err(Error::UnknownGroupElement(format!("#{}", g + 1)));
    }
    Ok(f.map_indeterminates(|v| sigma_indet(ambient, g, v)))
}

/// `σ_g(f)` for the element called `name`.
pub fn sigma_apply_named(name: &str, f: &DiffPoly) -> Result<DiffPoly> {
    sigma_apply(f.ambient().group().index_of(name)?, f)
}

/// `σ̄(a) = (σ_{g_i}(a_j))`, blocks outermost.
pub fn bar_sigma(ambient: &Ambient, base: &[DiffPoly]) -> Result<Vec<DiffPoly>> {
    if base.len() != ambient.vars() {
        return Err(Error::Arity {
            expected: ambient.vars(),
            got: base.len(),
        });
    }
    let mut out = Vec::with_capacity(ambient.blocks() * base.len());
    for g in ambient.group().elements() {
        for a in base {
            a.check_same_ambient(&ambient.zero())?;
            out.push(sigma_apply(g, a)?);
        }
    }
    Ok(out)
}

/// `σ̄` of the symbolic point `(x_{e,1}, …, x_{e,n})`: the variables
/// `x_{g_i,j}` in block order.
pub fn bar_sigma_symbolic(ambient: &Ambient) -> Vec<Indeterminate> {
    ambient
        .group()
        .elements()
        .flat_map(|g| (0..ambient.vars()).map(move |j| ambient.base_var(g, j)))
        .collect()
}

/// Substitutes `values[i]` for the i-th slot of `σ̄` (and `δ^ξ values[i]`
/// for its derivatives).
pub fn substitute(f: &DiffPoly, values: &[DiffPoly]) -> Result<DiffPoly> {
    let ambient = f.ambient();
    let slots = bar_sigma_symbolic(ambient);
    if values.len() != slots.len() {
        return Err(Error::Arity {
            expected: slots.len(),
            got: values.len(),
        });
    }
    let target = values.first().map_or(ambient, DiffPoly::ambient).clone();
    let mut images: BTreeMap<Indeterminate, DiffPoly> = BTreeMap::new();
    let mut acc = target.zero();
    for (m, c) in f.terms() {
        let mut term = target.constant(c.clone());
        for (v, e) in m.factors() {
            let base = &values[v.block * ambient.vars() + v.var];
            if !images.contains_key(v) {
                images.insert(v.clone(), base.derive_by(&v.op)?);
            }
            term = &term * &images[v].pow(*e);
        }
        acc = &acc + &term;
    }
    Ok(acc)
}

/// The four conditions for one non-identity element `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementReport {
    pub element: String,
    pub lambda_in_transported: bool,
    pub h_outside_transported: bool,
    pub transported_in_lambda: bool,
    pub transported_h_outside: bool,
}

impl ElementReport {
    pub fn holds(&self) -> bool {
        self.lambda_in_transported
            && self.h_outside_transported
            && self.transported_in_lambda
            && self.transported_h_outside
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvarianceReport {
    /// Prolongation order used for both saturations.
    pub order: u32,
    /// Caps of the characteristic-set check the caller relied on, if any.
    pub charset_caps: Option<Caps>,
    pub elements: Vec<ElementReport>,
}

impl InvarianceReport {
    pub fn invariant(&self) -> bool {
        self.elements.iter().all(ElementReport::holds)
    }
}

/// Tests `σ_g(P) = P` for every `g`, where `P` is the prime differential
/// ideal with characteristic set `Λ`.
///
/// Both `Λ` and `Λ_g = σ_g(Λ)` are prolonged to the maximal order `k` of
/// `Λ`, and `(Λ_{≤k}):H_Λ^∞` is compared with `σ_g` of it, whose
/// saturating element is `σ_g(H_Λ)`. Prolonging matters: `Λ_g` need not be
/// autoreduced for the ranking, so the plain algebraic saturations of `Λ`
/// and `Λ_g` can differ even when `P` is invariant.
pub fn g_invariance_check(set: &AutoreducedSet, charset_caps: Option<Caps>) -> Result<InvarianceReport> {
    let ambient = set.ambient();
    let group = ambient.group();
    let order = set.elements().iter().map(DiffPoly::max_order).max().unwrap_or(0);
    let gens = prolonged_generators(set, order);
    let h = set.h_product();
    let mut elements = Vec::new();
    for g in group.elements().skip(1) {
        let moved: Vec<DiffPoly> = gens.iter().map(|p| sigma_apply(g, p)).collect::<Result<_>>()?;
        let moved_h = sigma_apply(g, &h)?;
        let moved_set: Vec<DiffPoly> = set
            .elements()
            .iter()
            .map(|p| sigma_apply(g, p))
            .collect::<Result<_>>()?;
        let mut extra: Vec<DiffPoly> = moved.clone();
        extra.push(moved_h.clone());
        let j = prolonged_saturation_by(ambient, &gens, &h, &extra)?;
        let mut back = gens.clone();
        back.push(h.clone());
        let jg = prolonged_saturation_by(ambient, &moved, &moved_h, &back)?;
        let jg = jg.rebase(j.truncation())?;
        let all_in = |polys: &[DiffPoly], ideal: &crate::ideal::TruncatedIdeal| -> Result<bool> {
            for p in polys {
                if !ideal.contains(p)? {
                    return Ok(false);
                }
            }
            Ok(true)
        };
        elements.push(ElementReport {
            element: group.name(g).to_string(),
            lambda_in_transported: all_in(set.elements(), &jg)?,
            h_outside_transported: !jg.contains(&h)?,
            transported_in_lambda: all_in(&moved_set, &j)?,
            transported_h_outside: !j.contains(&moved_h)?,
        });
    }
    Ok(InvarianceReport {
        order,
        charset_caps,
        elements,
    })
}

/// Generators of the diagonal ideal: `Λ` together with `x_{e,j} − x_{g,j}`
/// for every non-identity `g` and every `j`.
pub fn diagonal_ideal(ambient: &Ambient, lambda: &[DiffPoly]) -> Result<Vec<DiffPoly>> {
    for f in lambda {
        f.check_same_ambient(&ambient.zero())?;
        if let Some(v) = f.indeterminates().into_iter().find(|v| v.block != 0) {
            return Err(Error::ForeignBlock(ambient.group().name(v.block).to_string()));
        }
    }
    let mut out = lambda.to_vec();
    for g in ambient.group().elements().skip(1) {
        for j in 0..ambient.vars() {
            let e = ambient.poly(ambient.base_var(0, j))?;
            let x = ambient.poly(ambient.base_var(g, j))?;
            out.push(&e - &x);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupSpec;
    use crate::reduction::{minimal_autoreduced_subset, validate_autoreduced};
    use crate::text::{parse_poly, print_poly};

    fn z(k: usize, m: usize, n: usize) -> Ambient {
        Ambient::new(m, n, GroupSpec::cyclic(k)).unwrap()
    }

    #[test]
    fn sigma_swaps_blocks() {
        let a = z(2, 1, 1);
        let f = parse_poly(&a, "d1 x[e,1] * x[g,1]").unwrap();
        assert_eq!(print_poly(&sigma_apply_named("g", &f).unwrap()), print_poly(&parse_poly(&a, "d1 x[g,1] * x[e,1]").unwrap()));
        assert_eq!(sigma_apply(0, &f).unwrap(), f);
        assert!(sigma_apply(2, &f).is_err());
    }

    #[test]
    fn bar_sigma_orders_blocks_outermost() {
        let a = z(2, 0, 2);
        let base = [parse_poly(&a, "x[e,1]").unwrap(), parse_poly(&a, "x[e,2]").unwrap()];
        let out: Vec<String> = bar_sigma(&a, &base).unwrap().iter().map(print_poly).collect();
        assert_eq!(out, ["x[e,1]", "x[e,2]", "x[g,1]", "x[g,2]"]);
        assert!(bar_sigma(&a, &base[..1]).is_err());
        let t = Ambient::plain(0, 1);
        assert_eq!(bar_sigma_symbolic(&t), vec![t.base_var(0, 0)]);
    }

    #[test]
    fn invariance_examples() {
        let a = z(2, 1, 1);
        let parse = |srcs: &[&str]| -> Vec<DiffPoly> { srcs.iter().map(|s| parse_poly(&a, s).unwrap()).collect() };
        let swap = validate_autoreduced(&a, &parse(&["d1 x[e,1] - x[g,1]", "d1 x[g,1] - x[e,1]"])).unwrap();
        assert!(g_invariance_check(&swap, None).unwrap().invariant());
        let lop = validate_autoreduced(&a, &parse(&["d1 x[e,1] - x[g,1]", "d1 x[g,1]"])).unwrap();
        let r = g_invariance_check(&lop, None).unwrap();
        assert!(!r.invariant());
        let t = Ambient::plain(1, 1);
        let s = validate_autoreduced(&t, &[parse_poly(&t, "d1 x[1]").unwrap()]).unwrap();
        assert!(g_invariance_check(&s, None).unwrap().elements.is_empty());
    }

    #[test]
    fn diagonal_examples() {
        for k in [2, 3] {
            let a = z(k, 1, 1);
            let lambda = [parse_poly(&a, "d1 x[e,1] - x[e,1]").unwrap()];
            let d = diagonal_ideal(&a, &lambda).unwrap();
            assert_eq!(d.len(), k);
            let set = minimal_autoreduced_subset(&d).unwrap();
            assert!(g_invariance_check(&set, None).unwrap().invariant());
        }
        let a = z(3, 0, 1);
        let d: Vec<String> = diagonal_ideal(&a, &[parse_poly(&a, "x[e,1]").unwrap()])
            .unwrap()
            .iter()
            .map(print_poly)
            .collect();
        assert_eq!(d, ["x[e,1]", "-x[g,1] + x[e,1]", "-x[g^2,1] + x[e,1]"]);
        assert!(diagonal_ideal(&a, &[parse_poly(&a, "x[g,1]").unwrap()]).is_err());
    }
}
