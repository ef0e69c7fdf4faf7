//! Exact computations with homogeneous derivations of polynomial rings.
//!
//! A homogeneous derivation of the Laurent polynomial ring in `n` variables is
//! an operator `D^c_alpha = x^c sum_j alpha_j x_j d_j` with degree `c` in `Z^n`
//! and nonzero coefficient vector `alpha` in `Q^n`. This crate represents such
//! operators exactly (arbitrary-precision rationals, no floating point) and
//! provides:
//!
//! * [`derivation`] — the bracket calculus, classification into the two
//!   polynomial classes (locally nilpotent `x^a d_i` and diagonal-type
//!   `x^p sum beta_j x_j d_j`), weights, and a monomial-action oracle;
//! * [`graph`] — the directed graphs attached to a generating set, with cycle
//!   detection, strongly connected components, deterministic topological
//!   order, and DOT export;
//! * [`criteria`] — deciders for finite dimensionality of the Lie algebra
//!   generated by a pure type I or pure type II set, with checkable witnesses
//!   and pairwise diagnostics;
//! * [`closure`] — a graded worklist engine that saturates a generating set
//!   under the bracket and, when it closes, reports an explicit basis,
//!   structure constants, lower central and derived series, and a model
//!   filiform recognizer.
//!
//! All operations are pure functions on immutable values.

pub mod closure;
pub mod criteria;
pub mod derivation;
pub mod error;
pub mod graph;
pub mod linalg;
pub mod vector;

pub use derivation::{
    classify_type1, classify_type2, DerivationClass, HomogeneousDerivation, Monomial, TypeIData,
    TypeIIData,
};
pub use error::{Error, Result};
pub use vector::{Int, LatticeVector, Rat, RationalVector};
