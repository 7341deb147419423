//! Graph, CNF and label files.
//!
//! cargo run --example file_formats

use acyclic_matching::io::{emit_graph, emit_labels, parse_cnf, parse_graph};
use acyclic_matching::reduction::build_reduction;

fn main() -> acyclic_matching::Result<()> {
    let g = parse_graph("c a weighted path\np edge 4 3\ne 3 4 7\ne 1 2\ne 2 3 -1\n")?;
    print!("{}", emit_graph(&g));

    match parse_graph("p edge 3 1\ne 2 2\n") {
        Err(e) => println!("{e}"),
        Ok(_) => unreachable!(),
    }

    let f = parse_cnf("p cnf 3 3\n1 2 -3 0\n-1 3 0\n-2\n1 0\n")?;
    println!("{f}; tautological clauses {:?}", f.tautological_clauses());

    let xor = parse_cnf("p cnf 2 2\n1 2 0\n-1 -2 0\n")?;
    let labels = emit_labels(&build_reduction(&xor)?);
    for line in labels.lines().skip(64).take(3) {
        println!("{line}");
    }
    Ok(())
}
