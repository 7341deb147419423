//! Maximum-weight acyclic matching on 2P3-free graphs, including a custom
//! induced-matching backend plugged into the solver.
//!
//! cargo run --example twop3_solver

use std::cell::Cell;

use acyclic_matching::twop3::{classify_component, mwim, ExactBackend, InducedMatchingBackend, TwoP3Solver};
use acyclic_matching::{Graph, Matching, SolveResult};

/// Counts how often the solver asks for an induced matching.
struct Counting {
    inner: ExactBackend,
    calls: Cell<usize>,
}

impl InducedMatchingBackend for Counting {
    fn max_weight_induced_matching(&self, g: &Graph) -> acyclic_matching::Result<SolveResult> {
        self.calls.set(self.calls.get() + 1);
        self.inner.max_weight_induced_matching(g)
    }
}

fn main() -> acyclic_matching::Result<()> {
    // x=0 with pendant x'=1 and two cherries 2-3, 4-5
    let spider = Graph::from_edges(6, &[(0, 1), (0, 2), (2, 3), (0, 4), (4, 5)])?;
    let pm = Matching::new([(0, 1), (2, 3), (4, 5)]);
    println!("shape: {}", classify_component(&spider, &pm)?);
    println!("induced matching alone: {}", mwim(&spider)?.value);

    let backend = Counting {
        inner: ExactBackend::default(),
        calls: Cell::new(0),
    };
    let out = TwoP3Solver::new(&backend).solve(&spider)?;
    println!(
        "acyclic optimum {} from {:?}; {} backend calls, seeds per type 2-5 {:?}",
        out.result.value,
        out.source,
        backend.calls.get(),
        out.stats.seeds
    );

    let two_p3 = Graph::path(3).disjoint_union(&Graph::path(3));
    if let Err(e) = TwoP3Solver::new(ExactBackend::default()).solve(&two_p3) {
        println!("2P3 itself: {e}");
    }
    Ok(())
}
