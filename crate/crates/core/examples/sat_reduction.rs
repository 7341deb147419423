//! The restricted-SAT reduction: build an instance, run the structural
//! checks, and decide the formula through truth assignments.
//!
//! cargo run --example sat_reduction

use acyclic_matching::reduction::{
    assignment_to_matching, build_reduction, decide_via_assignments, verify_instance, CnfFormula,
};
use acyclic_matching::{is_kind_matching, MatchingKind};

fn main() -> acyclic_matching::Result<()> {
    let sat = CnfFormula::from_dimacs(2, &[&[1, 2], &[-1, -2]])?;
    let unsat = CnfFormula::from_dimacs(2, &[&[1, 2], &[-1, 2], &[1, -2], &[-1, -2]])?;
    for f in [sat, unsat] {
        let inst = build_reduction(&f)?;
        let report = verify_instance(&inst)?;
        println!(
            "{f}: {} vertices, {} edges, |A| = {}, nu = {}",
            report.n_vertices, report.n_edges, report.size_a, report.matching_number
        );
        for bits in 0..4u8 {
            let a = [bits & 1 == 1, bits & 2 == 2];
            let m = assignment_to_matching(&inst, &a)?;
            println!(
                "  x1={} x2={}: {} edges, acyclic {}",
                a[0],
                a[1],
                m.len(),
                is_kind_matching(&inst.graph, &m, MatchingKind::Acyclic)?
            );
        }
        println!("  some assignment works: {}", decide_via_assignments(&inst)?);
    }
    Ok(())
}
