//! Exact reference solvers.
//!
//! [`maximum_matching`] is polynomial (Hopcroft–Karp on bipartite inputs,
//! blossom otherwise). Everything else here is exponential and guarded by
//! [`Limits`]; exceeding a guard is an error, never a silent truncation.

pub mod bipartite;
pub mod blossom;
mod enumerate;
mod search;

use serde::{Deserialize, Serialize};

pub use enumerate::{enumerate_maximum_matchings, every_maximum_matching_is, MaximumMatchings};
pub use search::{for_each_restricted_matching, max_restricted_matching, max_restricted_matching_with};

use crate::classes::is_bipartite;
use crate::graph::{Edge, Graph};
use crate::matching::{Matching, MatchingKind};

/// Size guards for the exponential oracles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Branch-and-bound for the restricted kinds.
    pub restricted_max_vertices: usize,
    /// Enumeration of all maximum matchings.
    pub enumeration_max_vertices: usize,
    /// Counting perfect matchings.
    pub perfect_matching_max_vertices: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            restricted_max_vertices: 16,
            enumeration_max_vertices: 14,
            perfect_matching_max_vertices: 24,
        }
    }
}

impl Limits {
    /// No guards at all. Only sensible on inputs known to be easy.
    pub fn unbounded() -> Self {
        Limits {
            restricted_max_vertices: usize::MAX,
            enumeration_max_vertices: usize::MAX,
            perfect_matching_max_vertices: usize::MAX,
        }
    }
}

/// An optimal matching of some kind.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    /// Cardinality (unweighted) or total weight (weighted).
    pub value: i64,
    pub witness: Matching,
    pub kind: MatchingKind,
}

impl SolveResult {
    pub fn empty(kind: MatchingKind) -> Self {
        SolveResult {
            value: 0,
            witness: Matching::empty(),
            kind,
        }
    }

    /// Larger value wins; on equal value the lexicographically smaller
    /// witness wins.
    pub fn better_than(&self, other: &SolveResult) -> bool {
        self.value > other.value || (self.value == other.value && self.witness < other.witness)
    }
}

/// A maximum cardinality matching. `value` is ν(g).
pub fn maximum_matching(g: &Graph) -> SolveResult {
    let mate = match is_bipartite(g) {
        Some(sides) => bipartite::hopcroft_karp(g, &sides.a),
        None => blossom::maximum_matching_mates(g),
    };
    let witness = Matching::new(
        mate.iter()
            .enumerate()
            .filter_map(|(v, m)| m.filter(|&w| v < w).map(|w| Edge::new(v, w))),
    );
    SolveResult {
        value: witness.len() as i64,
        witness,
        kind: MatchingKind::Unrestricted,
    }
}
