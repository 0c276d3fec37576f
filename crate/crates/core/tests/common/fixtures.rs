//! Curated inputs with hand-derived answers.

use diffalg::diffpoly::{Ambient, DiffPoly};
use diffalg::reduction::{validate_autoreduced, AutoreducedSet};
use diffalg::text::parse_poly;
use diffalg::GroupSpec;

pub fn polys(a: &Ambient, srcs: &[&str]) -> Vec<DiffPoly> {
    srcs.iter().map(|s| parse_poly(a, s).unwrap()).collect()
}

pub fn set(a: &Ambient, srcs: &[&str]) -> AutoreducedSet {
    validate_autoreduced(a, &polys(a, srcs)).unwrap()
}

/// `(m, n, Λ, coherent)`. The first two are the reference pair.
pub const COHERENCE: &[(usize, usize, &[&str], bool)] = &[
    (2, 1, &["d1 x[1] - x[1]", "d2 x[1]"], true),
    (2, 1, &["d1 x[1] - x[1]", "d2 x[1] - 1"], false),
    (2, 1, &["d1 x[1] - x[1]", "d2 x[1] - x[1]"], true),
    (2, 1, &["d1 x[1]", "d2 x[1]"], true),
    (2, 1, &["d1 x[1] - x[1]", "d2 x[1] - 2 * x[1]"], true),
    (2, 2, &["d1 x[1] - x[2]", "d2 x[1]", "d2 x[2]"], true),
    (2, 1, &["d1 x[1] - x[1]^2", "d2 x[1]"], true),
    (2, 2, &["d1 x[1] - x[2]", "d2 x[1]"], false),
    (2, 3, &["d1 x[1] - x[2]", "d2 x[1] - x[3]"], false),
    (2, 2, &["d1 x[1] - x[1]", "d2 x[1] - x[2]"], false),
    (2, 1, &["d1 x[1] - 1", "d2 x[1] - x[1]"], false),
    (2, 1, &["d1 x[1] - x[1]", "d2 x[1] - x[1]^2"], false),
];

/// `(m, n, Λ)`: characteristic sets of prime differential ideals.
pub const CHARSETS: &[(usize, usize, &[&str])] = &[
    (1, 1, &["d1 x[1] - x[1]"]),
    (2, 1, &["d1 x[1] - x[1]", "d2 x[1]"]),
    (1, 2, &["d1 x[1] - x[2]", "d1 x[2] + x[1]"]),
    (1, 1, &["x[1] * d1 x[1] - 1"]),
    (1, 2, &["x[2] - x[1]^2"]),
];

/// `(m, n, Λ, Γ, equal)`.
pub const EQUALITY: &[(usize, usize, &[&str], &[&str], bool)] = &[
    (1, 1, &["d1 x[1] - x[1]"], &["2 * d1 x[1] - 2 * x[1]"], true),
    (1, 1, &["d1 x[1] - x[1]"], &["-1/3 * d1 x[1] + 1/3 * x[1]"], true),
    (1, 1, &["d1 x[1] - x[1]"], &["d1 x[1] - 2 * x[1]"], false),
    (1, 1, &["d1 x[1] - x[1]"], &["d1 x[1] + x[1]"], false),
    (1, 1, &["d1 x[1] - x[1]"], &["d1 x[1]"], false),
    (2, 1, &["d1 x[1] - x[1]", "d2 x[1]"], &["3 * d2 x[1]", "3 * d1 x[1] - 3 * x[1]"], true),
    (2, 1, &["d1 x[1] - x[1]", "d2 x[1]"], &["d1 x[1] - x[1]", "d2 x[1] - x[1]"], false),
    (1, 2, &["d1 x[1] - x[2]", "d1 x[2] + x[1]"], &["d1 x[2] + x[1]", "d1 x[1] - x[2]"], true),
    (1, 2, &["d1 x[1] - x[2]", "d1 x[2] + x[1]"], &["d1 x[1] - x[2]", "d1 x[2] - x[1]"], false),
    (1, 2, &["d1 x[1] - x[2]", "d1 x[2] + x[1]"], &["d1 x[1] - x[2]", "2 * d1 x[2] + 2 * x[1]"], true),
    (1, 1, &["x[1] * d1 x[1] - 1"], &["-x[1] * d1 x[1] + 1"], true),
    (1, 1, &["x[1] * d1 x[1] - 1"], &["x[1] * d1 x[1] - 2"], false),
    (0, 2, &["x[2] - x[1]^2"], &["2 * x[2] - 2 * x[1]^2"], true),
    (0, 2, &["x[2] - x[1]^2"], &["x[2] + x[1]^2"], false),
    (0, 2, &["x[1] * x[2] - x[1]"], &["x[2] - 1"], true),
    (0, 2, &["x[1]^2 * x[2] - x[1]^2"], &["x[2] - 1"], true),
    (0, 2, &["x[1] * x[2] + x[2] - x[1] - 1"], &["x[2] - 1"], true),
    (0, 2, &["x[1] * x[2] - 1"], &["x[2] - 1"], false),
    (0, 2, &["x[1]", "x[2]"], &["x[2]", "x[1]"], true),
    (0, 2, &["x[1]", "x[2]"], &["x[1]", "x[2] - 1"], false),
];

pub fn group(name: &str) -> GroupSpec {
    GroupSpec::builtin(name).unwrap().unwrap()
}

/// `(group, m, n, Λ, invariant)`.
pub const INVARIANCE: &[(&str, usize, usize, &[&str], bool)] = &[
    ("cyclic:2", 1, 1, &["d1 x[e,1] - x[g,1]", "d1 x[g,1] - x[e,1]"], true),
    ("cyclic:2", 1, 1, &["d1 x[e,1] - x[g,1]", "d1 x[g,1]"], false),
    ("cyclic:2", 1, 1, &["d1 x[e,1] - x[e,1]", "d1 x[g,1] - x[g,1]"], true),
    ("cyclic:2", 1, 1, &["d1 x[e,1] - x[e,1]", "d1 x[g,1] + x[g,1]"], false),
    ("cyclic:2", 0, 1, &["x[g,1] - x[e,1]"], true),
    ("cyclic:2", 0, 1, &["x[g,1] - 2 * x[e,1]"], false),
    ("cyclic:2", 0, 1, &["x[e,1] * x[g,1] - 1"], true),
    ("cyclic:2", 1, 1, &["d1 x[e,1] - x[e,1]", "x[g,1] - x[e,1]"], true),
    ("cyclic:3", 1, 1, &["d1 x[e,1] - x[g,1]", "d1 x[g,1] - x[g^2,1]", "d1 x[g^2,1] - x[e,1]"], true),
    ("cyclic:3", 1, 1, &["d1 x[e,1] - x[g,1]", "d1 x[g,1] - x[e,1]", "d1 x[g^2,1]"], false),
    ("cyclic:3", 0, 1, &["x[g,1] - x[e,1]", "x[g^2,1] - x[e,1]"], true),
    ("cyclic:3", 0, 1, &["x[g^2,1] + x[g,1] + x[e,1]"], true),
    ("cyclic:3", 0, 1, &["x[g,1] - x[e,1]"], false),
    ("cyclic:3", 1, 1, &["d1 x[e,1]", "d1 x[g,1]", "d1 x[g^2,1]"], true),
    ("sym:3", 0, 1, &["x[p132,1] - x[e,1]", "x[p213,1] - x[e,1]", "x[p231,1] - x[e,1]", "x[p312,1] - x[e,1]", "x[p321,1] - x[e,1]"], true),
    ("sym:3", 0, 1, &["x[p321,1] + x[p312,1] + x[p231,1] + x[p213,1] + x[p132,1] + x[e,1]"], true),
    ("sym:3", 0, 1, &["x[p213,1] - x[e,1]"], false),
    ("sym:3", 1, 1, &["d1 x[e,1]", "d1 x[p132,1]", "d1 x[p213,1]", "d1 x[p231,1]", "d1 x[p312,1]", "d1 x[p321,1] - 1"], false),
    ("sym:3", 1, 1, &["d1 x[e,1] - 1", "d1 x[p132,1] - 1", "d1 x[p213,1] - 1", "d1 x[p231,1] - 1", "d1 x[p312,1] - 1", "d1 x[p321,1] - 1"], true),
    ("sym:3", 0, 2, &["x[e,2] - x[e,1]^2", "x[p132,2] - x[p132,1]^2", "x[p213,2] - x[p213,1]^2", "x[p231,2] - x[p231,1]^2", "x[p312,2] - x[p312,1]^2", "x[p321,2] - x[p321,1]^2"], true),
];

/// `(ideal, h, expected saturation)` over `x, y, z`.
pub const SATURATIONS: &[(&[&str], &str, &[&str])] = &[
    (&["y*z"], "y", &["z"]),
    (&["y^2"], "y", &["1"]),
    (&["x*y", "x*z"], "x", &["y", "z"]),
    (&["x*y^2"], "y", &["x"]),
    (&["x^2*y"], "x", &["y"]),
    (&["x*y - x"], "x", &["y - 1"]),
    (&["x*y - x"], "y - 1", &["x"]),
    (&["x^2", "x*y"], "x", &["1"]),
    (&["x^2", "x*y"], "y", &["x"]),
    (&["y"], "x", &["y"]),
    (&["x*y"], "x + 1", &["x*y"]),
    (&["x^3 - x^2"], "x", &["x - 1"]),
    (&["x^3 - 3*x^2 + 2*x"], "x", &["x^2 - 3*x + 2"]),
    (&["x^2 - 2*x + 1", "x*y - y"], "x - 1", &["1"]),
    (&["x*z", "y*z"], "z", &["x", "y"]),
    (&["x*y*z"], "x*y", &["z"]),
    (&["x^2*y + y"], "y", &["x^2 + 1"]),
    (&["x^2 - y^2"], "x + y", &["x - y"]),
    (&["x*y", "y*z", "x*z"], "x", &["y", "z"]),
    (&["y^2 - x^3"], "x", &["y^2 - x^3"]),
    (&["x*y"], "2", &["x*y"]),
];

/// The ring `ℚ[x, y, z]` with `x, y, z` spelled `x[1], x[2], x[3]`.
pub fn xyz(a: &Ambient, s: &str) -> DiffPoly {
    let s = s.replace('x', "X").replace('y', "x[2]").replace('z', "x[3]").replace('X', "x[1]");
    parse_poly(a, &s).unwrap()
}

/// `(m, n, Λ, f, f ∈ [Λ]:H_Λ^∞)` over the sets of `CHARSETS`.
pub const BRIDGE: &[(usize, usize, &[&str], &str, bool)] = &[
    (1, 1, &["d1 x[1] - x[1]"], "d1^2 x[1] - x[1]", true),
    (1, 1, &["d1 x[1] - x[1]"], "x[1]", false),
    (1, 1, &["d1 x[1] - x[1]"], "d1 x[1] * x[1] - x[1]^2", true),
    (1, 1, &["d1 x[1] - x[1]"], "d1^3 x[1] - d1 x[1]", true),
    (1, 1, &["d1 x[1] - x[1]"], "d1 x[1] + x[1]", false),
    (2, 1, &["d1 x[1] - x[1]", "d2 x[1]"], "d1 d2 x[1]", true),
    (2, 1, &["d1 x[1] - x[1]", "d2 x[1]"], "d2^2 x[1] + d2 x[1]", true),
    (2, 1, &["d1 x[1] - x[1]", "d2 x[1]"], "d1^2 x[1] - x[1]", true),
    (2, 1, &["d1 x[1] - x[1]", "d2 x[1]"], "d1 x[1]", false),
    (2, 1, &["d1 x[1] - x[1]", "d2 x[1]"], "x[1] * d2 x[1] - 1", false),
    (1, 2, &["d1 x[1] - x[2]", "d1 x[2] + x[1]"], "d1^2 x[1] + x[1]", true),
    (1, 2, &["d1 x[1] - x[2]", "d1 x[2] + x[1]"], "d1^2 x[2] + x[2]", true),
    (1, 2, &["d1 x[1] - x[2]", "d1 x[2] + x[1]"], "x[1]^2 + x[2]^2 - 1", false),
    (1, 2, &["d1 x[1] - x[2]", "d1 x[2] + x[1]"], "x[1] * d1 x[1] + x[2] * d1 x[2]", true),
    (1, 2, &["d1 x[1] - x[2]", "d1 x[2] + x[1]"], "x[1] - x[2]", false),
    (1, 1, &["x[1] * d1 x[1] - 1"], "x[1] * d1 x[1] - 1", true),
    (1, 1, &["x[1] * d1 x[1] - 1"], "x[1]^2 * d1^2 x[1] + d1 x[1]", true),
    (1, 1, &["x[1] * d1 x[1] - 1"], "d1 x[1]", false),
    (1, 1, &["x[1] * d1 x[1] - 1"], "x[1]^2 * d1 x[1] - x[1]", true),
    (1, 1, &["x[1] * d1 x[1] - 1"], "x[1]", false),
    (1, 2, &["x[2] - x[1]^2"], "x[2] - x[1]^2", true),
    (1, 2, &["x[2] - x[1]^2"], "d1 x[2] - 2 * x[1] * d1 x[1]", true),
    (1, 2, &["x[2] - x[1]^2"], "x[2]^2 - x[1]^4", true),
    (1, 2, &["x[2] - x[1]^2"], "x[2] - x[1]", false),
    (1, 2, &["x[2] - x[1]^2"], "d1 x[2]", false),
];
