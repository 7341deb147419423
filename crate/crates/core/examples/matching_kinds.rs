//! The four matching kinds on small graphs, and the chain
//! `nu_s <= nu_ac <= nu_ur <= nu` on a random one.
//!
//! cargo run --example matching_kinds

use acyclic_matching::generate::{generate, GenSpec, Model};
use acyclic_matching::oracles::{max_restricted_matching, maximum_matching};
use acyclic_matching::{is_kind_matching, matched_subgraph, Graph, Matching, MatchingKind};

fn main() -> acyclic_matching::Result<()> {
    let m = Matching::new([(0, 1), (2, 3)]);
    for (name, g) in [("P4", Graph::path(4)), ("C4", Graph::cycle(4))] {
        let sub = matched_subgraph(&g, &m)?;
        println!("{name} with {{01, 23}}: G(M) has {} edges", sub.graph.edge_count());
        for kind in MatchingKind::ALL {
            println!("  {:<8} {}", kind.cli_name(), is_kind_matching(&g, &m, kind)?);
        }
    }

    let g = generate(&GenSpec::new(Model::Gnp, 10, 7))?;
    let value = |kind| max_restricted_matching(&g, kind, false).map(|r| r.value);
    println!(
        "random G(10, 0.5): nu_s={} nu_ac={} nu_ur={} nu={}",
        value(MatchingKind::Induced)?,
        value(MatchingKind::Acyclic)?,
        value(MatchingKind::UniquelyRestricted)?,
        maximum_matching(&g).value
    );
    Ok(())
}
