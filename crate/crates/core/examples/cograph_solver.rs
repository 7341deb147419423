//! Cotree construction and maximum-weight acyclic matching on P4-free graphs.
//!
//! cargo run --example cograph_solver

use acyclic_matching::cograph::{build_cotree, mwam_p4free};
use acyclic_matching::generate::{generate, GenSpec, Model};
use acyclic_matching::oracles::max_restricted_matching;
use acyclic_matching::{Graph, MatchingKind};

fn main() -> acyclic_matching::Result<()> {
    let g = Graph::complete_bipartite(2, 3).disjoint_union(&Graph::complete(3));
    println!("cotree of K(2,3) + K3: {:?}", build_cotree(&g)?);

    if let Err(e) = build_cotree(&Graph::path(4)) {
        println!("P4: {e}");
    }

    let mut spec = GenSpec::new(Model::Cograph, 12, 2024);
    spec.weights = Some((-3, 9));
    let g = generate(&spec)?;
    let fast = mwam_p4free(&g)?;
    let exact = max_restricted_matching(&g, MatchingKind::Acyclic, true)?;
    println!(
        "random weighted cograph on 12 vertices: {} (oracle {}), witness {:?}",
        fast.value,
        exact.value,
        fast.witness.edges()
    );
    Ok(())
}
