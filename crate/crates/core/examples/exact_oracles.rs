//! Exact reference solvers: weighted branch and bound, enumeration of all
//! maximum matchings, and the size guards that keep them bounded.
//!
//! cargo run --example exact_oracles

use acyclic_matching::oracles::{
    enumerate_maximum_matchings, max_restricted_matching, max_restricted_matching_with, Limits,
};
use acyclic_matching::{Graph, MatchingKind};

fn main() -> acyclic_matching::Result<()> {
    let g = Graph::from_weighted_edges(5, &[(0, 1, 4), (1, 2, 1), (2, 3, 4), (3, 4, 1), (0, 4, 2)])?;
    for kind in MatchingKind::ALL {
        let r = max_restricted_matching(&g, kind, true)?;
        println!("{:<8} weight {} via {:?}", kind.cli_name(), r.value, r.witness.edges());
    }

    println!("maximum matchings of C6:");
    for m in enumerate_maximum_matchings(&Graph::cycle(6), &Limits::default())? {
        println!("  {:?}", m.edges());
    }

    let big = Graph::cycle(40);
    match max_restricted_matching(&big, MatchingKind::Acyclic, false) {
        Err(e) => println!("C40 with default limits: {e}"),
        Ok(r) => println!("C40: {}", r.value),
    }
    let raised = Limits {
        restricted_max_vertices: 40,
        ..Limits::default()
    };
    let r = max_restricted_matching_with(&big, MatchingKind::Acyclic, false, &raised)?;
    println!("C40 with a raised guard: {}", r.value);
    Ok(())
}
