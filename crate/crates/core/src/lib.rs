//! Exact solver for the 4-path vertex cover problem.
//!
//! The decision procedure is iterative compression around a branch-and-reduce
//! algorithm for the disjoint variant, in which a set `V1` that already
//! covers every 4-path is forbidden from the solution. See [`solver`] for the
//! entry points and [`rules`] for the rule cascade.

mod combinations;
pub mod bench;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod observations;
pub mod oracle;
pub mod partition;
pub mod report;
pub mod rules;
pub mod selftest;
pub mod solver;

pub use error::{InvariantViolation, SolveError};
pub use graph::{Graph, GraphError, VertexId, VertexSet};
pub use partition::{Instance, InstanceError, Side};
pub use solver::{
    iterative_compression, minimize, solve_disjoint, verify_cover, CoverResult, Minimum, SolveOptions, SolveStats,
};
