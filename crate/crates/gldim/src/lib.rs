//! Finite-dimensional associative algebras, their Pierce decomposition graphs,
//! and recursive bounds on global dimension.
//!
//! The crate accepts an algebra presented either as a quiver with relations or
//! as a structure-constant table over `Q` or `F_p`, constructs the directed
//! graph recording which Pierce components `f·A·e` are nonzero, and runs a
//! recursive corner-reduction engine that combines source/sink splittings,
//! Morita reductions, and flatness-based refinements into an interval bound
//! `[lower, upper]` on the global dimension — sometimes deciding outright that
//! it is infinite. Every verdict can be cross-checked against an independent
//! oracle that computes minimal projective resolutions of the simple modules.

pub mod algebra;
pub mod engine;
pub mod fdmodule;
pub mod field;
pub mod gallery;
pub mod graph;
pub mod homology;
pub mod io;
pub mod matrix;
pub mod poset;
pub mod quiver;
pub mod subspace;

pub use algebra::PresentedAlgebra;
pub use engine::{analyze, BoundReport, Dim, UpperBound};
pub use field::{Field, PrimeField, Rationals};
pub use graph::PierceGraph;
