//! Seeded generators for every model.
//!
//! cargo run --example generators

use acyclic_matching::classes::{is_2p3_free, is_p4_free};
use acyclic_matching::generate::{generate, GenSpec, Model};

fn main() -> acyclic_matching::Result<()> {
    for model in Model::ALL {
        let n = if model == Model::Reduction { 3 } else { 10 };
        let g = generate(&GenSpec::new(model, n, 11))?;
        println!(
            "{model:<10} n={:<3} m={:<3} P4-free {:<5} 2P3-free {}",
            g.n(),
            g.edge_count(),
            is_p4_free(&g),
            g.n() <= 40 && is_2p3_free(&g)
        );
    }
    let spec = GenSpec::new(Model::Twop3free, 9, 5);
    assert_eq!(generate(&spec)?, generate(&spec)?);
    println!("same spec, same graph");
    Ok(())
}
