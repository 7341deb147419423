//! Induced, acyclic and uniquely restricted matchings.
//!
//! * [`graph`] and [`matching`]: the data model and the feasibility
//!   predicates for the four matching kinds.
//! * [`oracles`]: exact reference solvers (polynomial maximum matching,
//!   branch and bound for the restricted kinds, enumeration of maximum
//!   matchings).
//! * [`cograph`]: maximum-weight acyclic matching on P4-free graphs.
//! * [`twop3`]: maximum-weight acyclic matching on 2P3-free graphs.
//! * [`characterization`]: graphs all of whose maximum matchings are
//!   acyclic, or induced.
//! * [`reduction`]: the restricted-SAT reduction to "is there an acyclic
//!   maximum matching" and its verification.
//! * [`io`], [`generate`], [`selftest`]: file formats, seeded generators
//!   and the desk-scale acceptance suites.

pub mod characterization;
pub mod classes;
pub mod cograph;
mod dsu;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod matching;
pub mod oracles;
pub mod reduction;
pub mod selftest;
pub mod twop3;

pub use error::{Error, Result};
pub use graph::{Edge, Graph};
pub use matching::{is_kind_matching, matched_subgraph, Matching, MatchingKind};
pub use oracles::{Limits, SolveResult};
