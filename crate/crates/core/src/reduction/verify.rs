//! Polynomial checks on a reduction instance.

use serde::{Deserialize, Serialize};

use super::gadget::{self, GADGET_ORDER, GADGET_SIZE};
use super::{build_reduction_with, canonical_matching, ReductionInstance};
use crate::error::{Error, Result};
use crate::matching::{is_kind_matching, MatchingKind};
use crate::oracles::bipartite::hopcroft_karp;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub claim: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub n_vertices: usize,
    pub n_edges: usize,
    pub size_a: usize,
    pub size_b: usize,
    pub max_degree: usize,
    pub matching_number: usize,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

/// Runs every check and reports each outcome.
pub fn inspect_instance(inst: &ReductionInstance) -> VerificationReport {
    let g = &inst.graph;
    let mut checks = Vec::new();
    let mut check = |claim: &str, passed: bool, detail: String| {
        checks.push(Check {
            claim: claim.to_string(),
            passed,
            detail,
        })
    };

    let expected = build_reduction_with(&inst.formula, inst.options);
    let same = matches!(&expected, Ok(e) if e.graph == *g && e.labels == inst.labels);
    check(
        "construction",
        same,
        match &expected {
            Ok(_) if same => "graph matches the formula".into(),
            Ok(e) => format!(
                "expected {} vertices / {} edges, found {} / {}",
                e.graph.n(),
                e.graph.edge_count(),
                g.n(),
                g.edge_count()
            ),
            Err(err) => err.to_string(),
        },
    );

    let mut bad_gadgets = Vec::new();
    for var in 0..inst.num_vars() {
        let base = GADGET_ORDER * var;
        if g.n() < base + GADGET_ORDER {
            bad_gadgets.push(var + 1);
            continue;
        }
        let ids: Vec<usize> = (base..base + GADGET_ORDER).collect();
        let (sub, _) = g.induced_subgraph(&ids);
        let ends = (0..GADGET_ORDER).filter(|&v| sub.degree(v) == 1).count();
        let has_edges = gadget::build_gadget(var)
            .iter()
            .all(|(a, b)| g.has_edge(a.id(), b.id()));
        let cycles = gadget::forcing_cycles(var).iter().all(|c| {
            (0..c.len()).all(|k| g.has_edge(c[k].id(), c[(k + 1) % c.len()].id()))
        });
        if sub.edge_count() != GADGET_SIZE || ends != 10 || !has_edges || !cycles {
            bad_gadgets.push(var + 1);
        }
    }
    check(
        "gadget",
        bad_gadgets.is_empty(),
        if bad_gadgets.is_empty() {
            format!("{} gadgets with 32 vertices, 38 edges, 10 endvertices and the three cycles", inst.num_vars())
        } else {
            format!("gadgets {bad_gadgets:?} differ from the template")
        },
    );

    let mut in_a = vec![false; g.n()];
    for &v in &inst.side_a {
        in_a[v] = true;
    }
    let partition_ok = inst.side_a.len() + inst.side_b.len() == g.n()
        && inst.side_b.iter().all(|&v| !in_a[v]);
    let crossing = g.edges().iter().find(|e| in_a[e.0] == in_a[e.1]);
    check(
        "claim1:bipartite",
        partition_ok && crossing.is_none(),
        match crossing {
            Some(e) => format!("edge {e:?} has both ends on one side"),
            None if !partition_ok => "A and B do not partition the vertices".into(),
            None => "every edge joins A and B".into(),
        },
    );
    check(
        "claim1:sides",
        inst.side_a.len() <= inst.side_b.len(),
        format!("|A| = {}, |B| = {}", inst.side_a.len(), inst.side_b.len()),
    );
    let max_degree = g.max_degree();
    check("claim1:degree", max_degree <= 4, format!("max degree {max_degree}"));

    let matching_number = hopcroft_karp(g, &inst.side_a).iter().flatten().count() / 2;
    check(
        "claim1:matching-number",
        matching_number == inst.side_a.len(),
        format!("nu = {matching_number}, |A| = {}", inst.side_a.len()),
    );

    let canonical = canonical_matching(inst);
    let canonical_ok = canonical.validate(g).is_ok() && canonical.len() == matching_number;
    check(
        "claim1:canonical",
        canonical_ok,
        format!("canonical matching has {} edges", canonical.len()),
    );
    let ur = canonical_ok && is_kind_matching(g, &canonical, MatchingKind::UniquelyRestricted).unwrap_or(false);
    check(
        "nu-ur",
        ur,
        if ur {
            "canonical maximum matching is uniquely restricted".into()
        } else {
            "canonical matching is not a uniquely restricted maximum matching".into()
        },
    );

    VerificationReport {
        n_vertices: g.n(),
        n_edges: g.edge_count(),
        size_a: inst.side_a.len(),
        size_b: inst.side_b.len(),
        max_degree,
        matching_number,
        checks,
    }
}

/// [`inspect_instance`], failing on the first violated claim.
pub fn verify_instance(inst: &ReductionInstance) -> Result<VerificationReport> {
    let report = inspect_instance(inst);
    match report.first_failure() {
        Some(c) => Err(Error::Verification {
            claim: c.claim.clone(),
            detail: c.detail.clone(),
        }),
        None => Ok(report),
    }
}
