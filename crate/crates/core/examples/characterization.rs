//! Linear-time tests for "every maximum matching is acyclic / induced",
//! compared with enumerating the maximum matchings.
//!
//! cargo run --example characterization

use acyclic_matching::characterization::{component_shapes, every_max_matching_acyclic, every_max_matching_induced};
use acyclic_matching::oracles::{every_maximum_matching_is, Limits};
use acyclic_matching::{Graph, MatchingKind};

fn main() -> acyclic_matching::Result<()> {
    let graphs = [
        ("C5 + P3", Graph::cycle(5).disjoint_union(&Graph::path(3))),
        ("C4", Graph::cycle(4)),
        ("K(1,5) + K3", Graph::star(5).disjoint_union(&Graph::complete(3))),
        ("P4", Graph::path(4)),
    ];
    for (name, g) in &graphs {
        let shapes: Vec<_> = component_shapes(g).into_iter().map(|(_, s)| s).collect();
        println!(
            "{name:<12} {shapes:?}: acyclic {} (enumeration {}), induced {} (enumeration {})",
            every_max_matching_acyclic(g),
            every_maximum_matching_is(g, MatchingKind::Acyclic, &Limits::default())?,
            every_max_matching_induced(g),
            every_maximum_matching_is(g, MatchingKind::Induced, &Limits::default())?,
        );
    }
    Ok(())
}
