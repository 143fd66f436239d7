//! Exact workbench for fall colorings and related coloring parameters.
//!
//! * [`graph`]: simple graphs, the generator families, join, Cartesian
//!   product and DIMACS I/O.
//! * [`coloring`]: colorings and their classification (proper, fall, b-,
//!   Grundy, partial Grundy, complete).
//! * [`solvers`]: exact search for `χ`, the fall spectrum, `φ`, `Γ`, `∂Γ`
//!   and `ψ`, each with a witness.
//! * [`theorems`]: join composition/restriction of fall colorings, join
//!   additivity checks and the gap-family verification.
//! * [`expr`] and [`cli`]: the expression syntax and the command-line front end.

pub mod cli;
pub mod coloring;
pub mod error;
pub mod expr;
pub mod graph;
pub mod solvers;
pub mod theorems;

pub use coloring::{classify, Coloring, ColoringClass, ColoringKind};
pub use error::{Error, Result};
pub use graph::{cartesian_product, join, Graph};
pub use solvers::{Parameter, SearchLimits, Solution};
