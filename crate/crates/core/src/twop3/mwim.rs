//! Maximum-weight induced matching, as a pluggable subroutine.

use crate::error::Result;
use crate::graph::Graph;
use crate::matching::MatchingKind;
use crate::oracles::{max_restricted_matching_with, Limits, SolveResult};

/// A solver for maximum-weight induced matching. Implementations must never
/// return edges of weight `<= 0`.
pub trait InducedMatchingBackend {
    fn max_weight_induced_matching(&self, g: &Graph) -> Result<SolveResult>;
}

/// Exact branch and bound; exponential, guarded by `limits`.
#[derive(Clone, Debug, Default)]
pub struct ExactBackend {
    pub limits: Limits,
}

impl InducedMatchingBackend for ExactBackend {
    fn max_weight_induced_matching(&self, g: &Graph) -> Result<SolveResult> {
        max_restricted_matching_with(g, MatchingKind::Induced, true, &self.limits)
    }
}

impl<B: InducedMatchingBackend + ?Sized> InducedMatchingBackend for &B {
    fn max_weight_induced_matching(&self, g: &Graph) -> Result<SolveResult> {
        (**self).max_weight_induced_matching(g)
    }
}

/// Maximum-weight induced matching with the default backend.
pub fn mwim(g: &Graph) -> Result<SolveResult> {
    ExactBackend::default().max_weight_induced_matching(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(mwim(&Graph::cycle(6)).unwrap().value, 2);
        assert_eq!(mwim(&Graph::path(4)).unwrap().value, 1);
        let k2 = Graph::from_weighted_edges(2, &[(0, 1, -1)]).unwrap();
        let r = mwim(&k2).unwrap();
        assert_eq!(r.value, 0);
        assert!(r.witness.is_empty());
    }
}
