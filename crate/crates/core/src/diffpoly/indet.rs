use std::cmp::Ordering;
use std::fmt;

/// A derivative operator `δ_1^{ξ_1} ⋯ δ_m^{ξ_m}`, stored as its exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DerivOp(Vec<u32>);

impl DerivOp {
    /// The identity operator in `m` derivations.
    pub fn identity(m: usize) -> Self {
        DerivOp(vec![0; m])
    }

    pub fn new(exponents: Vec<u32>) -> Self {
        DerivOp(exponents)
    }

    /// The single derivation `δ_k` (0-based `k`).
    pub fn unit(m: usize, k: usize) -> Self {
        let mut e = vec![0; m];
        e[k] = 1;
        DerivOp(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn derivations(&self) -> usize {
        self.0.len()
    }

    /// Total order `Σ ξ_k`.
    pub fn order(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn compose(&self, other: &DerivOp) -> DerivOp {
        DerivOp(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise `self ≤ other`, i.e. `δ^other` is a derivative of `δ^self`.
    pub fn divides(&self, other: &DerivOp) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other − self` when `self` divides `other`.
    pub fn quotient(&self, other: &DerivOp) -> Option<DerivOp> {
        self.divides(other)
            .then(|| DerivOp(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect()))
    }

    /// Componentwise maximum: the least common derivative operator.
    pub fn lcm(&self, other: &DerivOp) -> DerivOp {
        DerivOp(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub(crate) fn bump(&mut self, k: usize) {
        self.0[k] += 1;
    }

    /// All operators of total order at most `max_order`, in a deterministic
    /// order (graded, then lexicographic on exponents).
    pub fn all_up_to(m: usize, max_order: u32) -> Vec<DerivOp> {
        fn go(m: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<DerivOp>) {
            if prefix.len() == m {
                if left == 0 {
                    out.push(DerivOp(prefix.clone()));
                }
                return;
            }
            for e in (0..=left).rev() {
                prefix.push(e);
                go(m, left - e, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        for order in 0..=max_order {
            go(m, order, &mut Vec::new(), &mut out);
            if m == 0 {
                break;
            }
        }
        out
    }
}

impl fmt::Debug for DerivOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "δ{:?}", self.0)
    }
}

/// The algebraic indeterminate `δ^ξ x_{g,j}`.
///
/// `block` is the position of `g` in the group enumeration and `var` is the
/// 0-based variable index. Ordering is the canonical orderly ranking: compare
/// `(Σξ, block, var, ξ_1, …, ξ_m)` lexicographically, i.e. the variable
/// position slot is linearized block-major to match `x̄ = (x_{g_1}, …, x_{g_ℓ})`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Indeterminate {
    pub block: usize,
    pub var: usize,
    pub op: DerivOp,
}

impl Indeterminate {
    pub fn new(block: usize, var: usize, op: DerivOp) -> Self {
        Indeterminate { block, var, op }
    }

    /// Same differential variable `x_{block,var}`, ignoring the operator.
    pub fn same_variable(&self, other: &Indeterminate) -> bool {
        self.block == other.block && self.var == other.var
    }

    /// True iff `self` is a derivative of `other`, possibly equal.
    pub fn is_derivative_of(&self, other: &Indeterminate) -> bool {
        self.same_variable(other) && other.op.divides(&self.op)
    }

    /// True iff `self = δ^θ other` with `θ ≠ 0`.
    pub fn is_proper_derivative_of(&self, other: &Indeterminate) -> bool {
        self.is_derivative_of(other) && self.op != other.op
    }

    pub fn derive(&self, op: &DerivOp) -> Indeterminate {
        Indeterminate {
            block: self.block,
            var: self.var,
            op: self.op.compose(op),
        }
    }

    pub fn order(&self) -> u32 {
        self.op.order()
    }
}

impl Ord for Indeterminate {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order()
            .cmp(&other.order())
            .then(self.block.cmp(&other.block))
            .then(self.var.cmp(&other.var))
            .then_with(|| self.op.0.cmp(&other.op.0))
    }
}

impl PartialOrd for Indeterminate {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Indeterminate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}x[{},{}]", self.op, self.block, self.var + 1)
    }
}

/// The rank `(u_f, d_f)` of a nonconstant polynomial, ordered lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rank {
    pub leader: Indeterminate,
    pub degree: u32,
}
