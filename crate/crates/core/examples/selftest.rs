//! A quick run of the acceptance suites and their JSON report.
//!
//! cargo run --release --example selftest

use acyclic_matching::selftest::{run_selftest, SelftestConfig, SuiteSizes};

fn main() {
    let report = run_selftest(&SelftestConfig {
        seed: 1,
        sizes: SuiteSizes::quick(),
    });
    for c in &report.criteria {
        println!("{} {:>2} {} ({} cases)", if c.passed { "ok  " } else { "FAIL" }, c.id, c.name, c.cases);
    }
    println!("JSON report: {} bytes, all passed: {}", report.to_json().len(), report.all_passed());
}
