//! Finite binary relations, two-colored digraphs, and monochromatic
//! absorption.
//!
//! This crate implements a small calculus of binary relations over
//! finite vertex sets (boolean operations, composition, closures,
//! foresets and aftersets, asymmetric parts, independence, and the set
//! order a relation induces), models directed graphs whose edges carry
//! two colors, and constructively computes an independent set that
//! every other vertex reaches by a single-color path. That such a set
//! exists is the conclusion of the Sands–Sauer–Woodrow theorem, which
//! holds unconditionally on finite graphs.
//!
//! Alongside the solver there are path-surgery routines (turning
//! closure-level reachability into explicit duplicate-free paths) and a
//! brute-force oracle that certifies every result at desk scale.
//!
//! ```
//! use ssw::{oracle, solver};
//!
//! let g = oracle::random_graph(8, 0.3, 0.2, 7);
//! let trace = solver::solve(&g)?;
//! assert!(g.is_solution(trace.result())?);
//! # Ok::<(), ssw::Error>(())
//! ```
//!
//! The guide under `book/` walks through the concepts chapter by
//! chapter; its code listings compile and run as part of this crate's
//! doc tests.

mod error;
pub mod format;
pub mod graph;
pub mod oracle;
pub mod path;
pub mod relation;
pub mod report;
pub mod solver;
pub mod universe;

pub use error::Error;
pub use graph::{HypothesisReport, TwoColoredDigraph};
pub use path::Path;
pub use relation::{Relation, SporderCheck};
pub use solver::{Chain, SolveTrace};
pub use universe::{Universe, VertexSet};

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;

#[cfg(doctest)]
pub mod book;
