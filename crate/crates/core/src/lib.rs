//! Exact differential algebra over ℚ.
//!
//! The crate covers differential polynomials under the canonical orderly
//! ranking, the differential division algorithm with checkable
//! certificates, autoreduced and coherent sets, saturation ideals computed
//! with Gröbner bases in finitely many variables, and finite group actions
//! permuting blocks of differential variables.

pub mod diffpoly;
pub mod error;
pub mod gaction;
pub mod group;
pub mod ideal;
pub mod reduction;
pub mod rosenfeld;
pub mod text;

pub use diffpoly::{Ambient, DerivOp, DiffPoly, Indeterminate, Monomial, Rank, Rational};
pub use error::{Error, Result};
pub use group::GroupSpec;
pub use ideal::{Truncation, TruncatedIdeal};
pub use reduction::{AutoreducedSet, ReductionCertificate};
