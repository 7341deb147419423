//! Desk-scale acceptance suites.
//!
//! Every suite draws from its own ChaCha8 stream (the configured seed, stream
//! number = suite id), so suites are independent of each other and the JSON
//! report is a pure function of the configuration.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::characterization::{every_max_matching_acyclic, every_max_matching_induced};
use crate::cograph::mwam_p4free;
use crate::error::Result;
use crate::generate::{gnp, random_2p3_free, random_cograph, random_restricted_formula, random_weights};
use crate::graph::Graph;
use crate::io::JSON_SCHEMA;
use crate::matching::{is_kind_matching, matched_subgraph, Matching, MatchingKind};
use crate::oracles::{
    every_maximum_matching_is, for_each_restricted_matching, max_restricted_matching, max_restricted_matching_with,
    maximum_matching, Limits,
};
use crate::reduction::{
    assignment_to_matching, brute_force_satisfiable, build_reduction, build_reduction_with, canonical_matching,
    decide_via_assignments, inspect_instance, CnfFormula, ReductionInstance, ReductionOptions,
};
use crate::twop3::{classify_component, ExactBackend, ShapeClass, TwoP3Solver};

/// Case counts per suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteSizes {
    pub chain_graphs: usize,
    pub cographs: usize,
    pub twop3_graphs: usize,
    pub lemma_graphs: usize,
    /// Largest order swept exhaustively for the recognizers.
    pub exhaustive_max_n: usize,
    pub recognizer_random_graphs: usize,
    pub reduction_instances: usize,
    pub satisfiable_formulas: usize,
}

impl SuiteSizes {
    pub fn full() -> Self {
        SuiteSizes {
            chain_graphs: 1000,
            cographs: 200,
            twop3_graphs: 200,
            lemma_graphs: 50,
            exhaustive_max_n: 6,
            recognizer_random_graphs: 2000,
            reduction_instances: 20,
            satisfiable_formulas: 10,
        }
    }

    pub fn quick() -> Self {
        SuiteSizes {
            chain_graphs: 60,
            cographs: 20,
            twop3_graphs: 10,
            lemma_graphs: 5,
            exhaustive_max_n: 4,
            recognizer_random_graphs: 50,
            reduction_instances: 4,
            satisfiable_formulas: 3,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelftestConfig {
    pub seed: u64,
    pub sizes: SuiteSizes,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        SelftestConfig {
            seed: 20240607,
            sizes: SuiteSizes::full(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionReport {
    pub id: u32,
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelftestReport {
    pub schema: String,
    pub seed: u64,
    pub sizes: SuiteSizes,
    pub criteria: Vec<CriterionReport>,
}

impl SelftestReport {
    pub fn all_passed(&self) -> bool {
        self.criteria.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Suite ids with a name, in report order.
pub const SUITES: [(u32, &str); 9] = [
    (1, "chain nu_s <= nu_ac <= nu_ur <= nu"),
    (2, "P4-free solver matches the weighted oracle"),
    (3, "2P3-free solver matches the weighted oracle"),
    (4, "acyclic matchings in 2P3-free graphs have the listed shapes"),
    (5, "recognizers agree with maximum matching enumeration"),
    (6, "reduction instances satisfy the structural claims"),
    (7, "satisfying assignments give acyclic maximum matchings"),
    (8, "unsatisfiable and single-clause instances"),
    (9, "canonical maximum matching is uniquely restricted"),
];

pub fn run_selftest(config: &SelftestConfig) -> SelftestReport {
    SelftestReport {
        schema: JSON_SCHEMA.to_string(),
        seed: config.seed,
        sizes: config.sizes,
        criteria: SUITES.iter().map(|&(id, _)| run_suite(id, config)).collect(),
    }
}

/// Runs one suite. Unknown ids panic.
pub fn run_suite(id: u32, config: &SelftestConfig) -> CriterionReport {
    let name = SUITES
        .iter()
        .find(|s| s.0 == id)
        .unwrap_or_else(|| panic!("no suite {id}"))
        .1;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(id as u64);
    let s = &config.sizes;
    let mut tally = Tally::default();
    let outcome = match id {
        1 => chain(&mut rng, s.chain_graphs, &mut tally),
        2 => cographs(&mut rng, s.cographs, &mut tally),
        3 => twop3(&mut rng, s.twop3_graphs, &mut tally),
        4 => lemma_shapes(&mut rng, s.lemma_graphs, &mut tally),
        5 => recognizers(&mut rng, s.exhaustive_max_n, s.recognizer_random_graphs, &mut tally),
        6 => structural(&mut rng, s.reduction_instances, &mut tally),
        7 => forward(&mut rng, s.satisfiable_formulas, &mut tally),
        8 => reverse(&mut tally),
        9 => ur_remark(&mut rng, s.reduction_instances, &mut tally),
        _ => unreachable!(),
    };
    if let Err(e) = outcome {
        tally.fail(format!("error: {e}"));
    }
    CriterionReport {
        id,
        name: name.to_string(),
        cases: tally.cases,
        failures: tally.failures,
        passed: tally.failures == 0 && tally.cases > 0,
        detail: tally.first_failure.unwrap_or(tally.note),
    }
}

#[derive(Default)]
struct Tally {
    cases: usize,
    failures: usize,
    first_failure: Option<String>,
    note: String,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.fail(what());
        }
    }

    fn fail(&mut self, what: String) {
        self.failures += 1;
        self.first_failure.get_or_insert(what);
    }
}

fn random_order<R: Rng>(rng: &mut R, max_n: usize) -> usize {
    rng.gen_range(1..=max_n)
}

fn edge_list(g: &Graph) -> String {
    format!("n={} {:?}", g.n(), g.weighted_edges().collect::<Vec<_>>())
}

fn chain<R: Rng>(rng: &mut R, count: usize, t: &mut Tally) -> Result<()> {
    let mut largest = 0;
    for _ in 0..count {
        let n = random_order(rng, 12);
        let p = rng.gen_range(0.15..0.85);
        let g = gnp(rng, n, p);
        let nu = maximum_matching(&g).value;
        let s = max_restricted_matching(&g, MatchingKind::Induced, false)?.value;
        let ac = max_restricted_matching(&g, MatchingKind::Acyclic, false)?.value;
        let ur = max_restricted_matching(&g, MatchingKind::UniquelyRestricted, false)?.value;
        largest = largest.max(nu);
        t.check(s <= ac && ac <= ur && ur <= nu, || {
            format!("{s}, {ac}, {ur}, {nu} out of order on {}", edge_list(&g))
        });
    }
    t.note = format!("largest matching number {largest}");
    Ok(())
}

fn cographs<R: Rng>(rng: &mut R, count: usize, t: &mut Tally) -> Result<()> {
    for _ in 0..count {
        let n = random_order(rng, 12);
        let g = random_cograph(rng, n);
        let g = random_weights(rng, &g, (-3, 9));
        let got = mwam_p4free(&g)?;
        let want = max_restricted_matching(&g, MatchingKind::Acyclic, true)?.value;
        let valid = is_kind_matching(&g, &got.witness, MatchingKind::Acyclic)? && got.witness.weight_in(&g) == got.value;
        t.check(got.value == want && valid, || {
            format!("solver {} vs oracle {want} on {}", got.value, edge_list(&g))
        });
    }
    Ok(())
}

fn twop3<R: Rng>(rng: &mut R, count: usize, t: &mut Tally) -> Result<()> {
    let solver = TwoP3Solver::new(ExactBackend::default());
    let mut wins = [0usize; 5];
    let mut discarded = 0;
    for _ in 0..count {
        let n = random_order(rng, 11);
        let p = rng.gen_range(0.2..0.9);
        let g = random_2p3_free(rng, n, p, 100_000)?;
        let g = random_weights(rng, &g, (1, 9));
        let outcome = solver.solve(&g)?;
        wins[outcome.source as usize] += 1;
        discarded += outcome.stats.discarded;
        let got = outcome.result;
        let want = max_restricted_matching(&g, MatchingKind::Acyclic, true)?.value;
        let valid = is_kind_matching(&g, &got.witness, MatchingKind::Acyclic)? && got.witness.weight_in(&g) == got.value;
        t.check(got.value == want && valid, || {
            format!("solver {} vs oracle {want} on {}", got.value, edge_list(&g))
        });
    }
    t.note = format!("optimum from candidate types 1-5: {wins:?}; {discarded} candidates discarded by re-check");
    Ok(())
}

/// At most one component of `G(M)` is not a K2, and that one has a shape.
pub fn lemma_shape_holds(g: &Graph, m: &Matching) -> Result<bool> {
    let sub = matched_subgraph(g, m)?;
    let mut big = 0;
    for comp in sub.graph.components() {
        if comp.len() == 2 {
            continue;
        }
        big += 1;
        let (t, map) = sub.graph.induced_subgraph(&comp);
        let mut local = vec![usize::MAX; sub.graph.n()];
        for (i, &v) in map.iter().enumerate() {
            local[v] = i;
        }
        let restricted = Matching::new(
            sub.matching
                .edges()
                .iter()
                .filter(|e| local[e.0] != usize::MAX)
                .map(|e| (local[e.0], local[e.1])),
        );
        if classify_component(&t, &restricted)? == ShapeClass::Invalid {
            return Ok(false);
        }
    }
    Ok(big <= 1)
}

fn lemma_shapes<R: Rng>(rng: &mut R, count: usize, t: &mut Tally) -> Result<()> {
    let mut matchings = 0usize;
    for _ in 0..count {
        let n = rng.gen_range(4..=10);
        let p = rng.gen_range(0.2..0.9);
        let g = random_2p3_free(rng, n, p, 100_000)?;
        let mut bad: Option<Matching> = None;
        let mut err = None;
        for_each_restricted_matching(&g, MatchingKind::Acyclic, &Limits::default(), |m| {
            matchings += 1;
            match lemma_shape_holds(&g, m) {
                Ok(true) => {}
                Ok(false) => {
                    bad.get_or_insert_with(|| m.clone());
                }
                Err(e) => {
                    err.get_or_insert(e);
                }
            }
        })?;
        if let Some(e) = err {
            return Err(e);
        }
        t.check(bad.is_none(), || format!("{:?} on {}", bad.unwrap().edges(), edge_list(&g)));
    }
    t.note = format!("{matchings} acyclic matchings inspected");
    Ok(())
}

fn recognizers<R: Rng>(rng: &mut R, max_n: usize, random: usize, t: &mut Tally) -> Result<()> {
    let limits = Limits::default();
    let one = |g: &Graph, t: &mut Tally| -> Result<()> {
        let ac = every_maximum_matching_is(g, MatchingKind::Acyclic, &limits)?;
        let ind = every_maximum_matching_is(g, MatchingKind::Induced, &limits)?;
        let (rac, rind) = (every_max_matching_acyclic(g), every_max_matching_induced(g));
        t.check(ac == rac && ind == rind && (!rind || rac), || {
            format!("recognizers ({rac}, {rind}) vs enumeration ({ac}, {ind}) on {}", edge_list(g))
        });
        Ok(())
    };
    for n in 0..=max_n {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for mask in 0u64..1 << pairs.len() {
            let edges: Vec<(usize, usize)> = (0..pairs.len()).filter(|&k| mask >> k & 1 == 1).map(|k| pairs[k]).collect();
            one(&Graph::from_edges(n, &edges)?, t)?;
        }
    }
    for _ in 0..random {
        let n = rng.gen_range(7..=8);
        let p = rng.gen_range(0.1..0.6);
        one(&gnp(rng, n, p), t)?;
    }
    Ok(())
}

fn random_instances<R: Rng>(rng: &mut R, count: usize) -> Result<Vec<ReductionInstance>> {
    (0..count)
        .map(|k| {
            let n = 1 + k % 5;
            build_reduction(&random_restricted_formula(rng, n, 10_000)?)
        })
        .collect()
}

fn structural<R: Rng>(rng: &mut R, count: usize, t: &mut Tally) -> Result<()> {
    for inst in random_instances(rng, count)? {
        let report = inspect_instance(&inst);
        t.check(report.all_passed(), || {
            let c = report.first_failure().unwrap();
            format!("{}: {} for {}", c.claim, c.detail, inst.formula)
        });
    }
    Ok(())
}

fn forward<R: Rng>(rng: &mut R, count: usize, t: &mut Tally) -> Result<()> {
    let mut found = 0;
    let mut drawn = 0;
    while found < count {
        drawn += 1;
        let n = rng.gen_range(2..=5);
        let f = random_restricted_formula(rng, n, 10_000)?;
        let Some(a) = brute_force_satisfiable(&f) else {
            continue;
        };
        found += 1;
        let inst = build_reduction(&f)?;
        let m = assignment_to_matching(&inst, &a)?;
        let nu = maximum_matching(&inst.graph).value as usize;
        let acyclic = is_kind_matching(&inst.graph, &m, MatchingKind::Acyclic)?;
        let decided = decide_via_assignments(&inst)?;
        t.check(m.len() == nu && acyclic && decided, || {
            format!("size {} of {nu}, acyclic {acyclic}, decided {decided} for {f}", m.len())
        });
    }
    t.note = format!("{found} satisfiable formulas out of {drawn} drawn");
    Ok(())
}

fn single_clause_formulas() -> Vec<CnfFormula> {
    let mut out = Vec::new();
    for vars in [2usize, 3] {
        for signs in 0..1u32 << vars {
            let clause: Vec<i64> = (0..vars)
                .map(|v| if signs >> v & 1 == 1 { -(v as i64 + 1) } else { v as i64 + 1 })
                .collect();
            out.push(CnfFormula::from_dimacs(vars, &[&clause]).expect("valid"));
        }
    }
    out
}

/// The reduction instances small enough for the exact acyclic oracle.
pub fn oracle_limits() -> Limits {
    Limits {
        restricted_max_vertices: 128,
        ..Limits::default()
    }
}

fn reverse(t: &mut Tally) -> Result<()> {
    let unsat = CnfFormula::from_dimacs(2, &[&[1, 2], &[-1, 2], &[1, -2], &[-1, -2]])?;
    let inst = build_reduction(&unsat)?;
    t.check(!decide_via_assignments(&inst)?, || "assignment sweep accepted the unsatisfiable formula".into());
    let xor = CnfFormula::from_dimacs(2, &[&[1, 2], &[-1, -2]])?;

    let relaxed = ReductionOptions {
        allow_pure_variables: true,
    };
    let mut exact: Vec<(CnfFormula, ReductionInstance)> = vec![(unsat.clone(), inst), (xor.clone(), build_reduction(&xor)?)];
    for f in single_clause_formulas() {
        let inst = build_reduction_with(&f, relaxed)?;
        exact.push((f, inst));
    }
    for (f, inst) in &exact {
        let nu = maximum_matching(&inst.graph).value;
        let ac = max_restricted_matching_with(&inst.graph, MatchingKind::Acyclic, false, &oracle_limits())?.value;
        let sat = brute_force_satisfiable(f).is_some();
        let decided = decide_via_assignments(inst)?;
        t.check((ac == nu) == sat && decided == sat, || {
            format!("nu_ac {ac}, nu {nu}, sweep {decided}, satisfiable {sat} for {f}")
        });
    }
    t.note = format!("{} instances solved exactly", exact.len());
    Ok(())
}

fn ur_remark<R: Rng>(rng: &mut R, count: usize, t: &mut Tally) -> Result<()> {
    for inst in random_instances(rng, count)? {
        let m = canonical_matching(&inst);
        let nu = maximum_matching(&inst.graph).value as usize;
        let ur = is_kind_matching(&inst.graph, &m, MatchingKind::UniquelyRestricted)?;
        t.check(m.len() == nu && ur, || format!("size {} of {nu}, ur {ur} for {}", m.len(), inst.formula));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_selftest_passes_and_is_stable() {
        let config = SelftestConfig {
            seed: 1,
            sizes: SuiteSizes::quick(),
        };
        let a = run_selftest(&config);
        assert!(a.all_passed(), "{}", a.to_json());
        assert_eq!(a.to_json(), run_selftest(&config).to_json());
    }
}
