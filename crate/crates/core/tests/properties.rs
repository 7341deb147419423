//! Randomized checks against oracles written independently of the library.

use acyclic_matching::characterization::{every_max_matching_acyclic, every_max_matching_induced};
use acyclic_matching::classes::{count_perfect_matchings, is_2p3_free, is_p4_free};
use acyclic_matching::cograph::mwam_p4free;
use acyclic_matching::generate::{generate, random_restricted_formula, GenSpec, Model};
use acyclic_matching::io::{emit_cnf, emit_graph, parse_cnf, parse_graph};
use acyclic_matching::oracles::{every_maximum_matching_is, max_restricted_matching, maximum_matching, Limits};
use acyclic_matching::reduction::{
    assignment_to_matching, brute_force_satisfiable, build_reduction, decide_via_assignments, CnfFormula,
};
use acyclic_matching::selftest::lemma_shape_holds;
use acyclic_matching::twop3::mwam_2p3free;
use acyclic_matching::{is_kind_matching, Graph, Matching, MatchingKind};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use MatchingKind::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        (Just(n), proptest::collection::vec(any::<bool>(), pairs), proptest::collection::vec(-3i64..=9, pairs))
            .prop_map(|(n, mask, w)| {
                let mut edges = Vec::new();
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if mask[k] {
                            edges.push((u, v, w[k]));
                        }
                        k += 1;
                    }
                }
                Graph::from_weighted_edges(n, &edges).unwrap()
            })
    })
}

/// Depth-first cycle detection on the subgraph spanned by `vs`.
fn induced_has_cycle(g: &Graph, vs: &[usize]) -> bool {
    let inside = |x: usize| vs.contains(&x);
    let mut parent = vec![usize::MAX; g.n()];
    let mut seen = vec![false; g.n()];
    for &s in vs {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for y in g.neighbors(x).filter(|&y| inside(y)) {
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = x;
                    stack.push(y);
                } else if parent[x] != y {
                    return true;
                }
            }
        }
    }
    false
}

/// Feasibility straight from the definitions.
fn naive_is_kind(g: &Graph, m: &[(usize, usize)], kind: MatchingKind) -> bool {
    let vs: Vec<usize> = m.iter().flat_map(|&(a, b)| [a, b]).collect();
    let inner: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .filter(|e| vs.contains(&e.0) && vs.contains(&e.1))
        .map(|e| (e.0, e.1))
        .collect();
    match kind {
        Unrestricted => true,
        Induced => inner.len() == m.len(),
        Acyclic => !induced_has_cycle(g, &vs),
        UniquelyRestricted => {
            // count perfect matchings of G(M) by subset enumeration
            let mut count = 0;
            for mask in 0u32..1 << inner.len() {
                let chosen: Vec<(usize, usize)> = (0..inner.len()).filter(|&k| mask >> k & 1 == 1).map(|k| inner[k]).collect();
                if chosen.len() != m.len() {
                    continue;
                }
                let mut cover: Vec<usize> = chosen.iter().flat_map(|&(a, b)| [a, b]).collect();
                cover.sort_unstable();
                cover.dedup();
                if cover.len() == vs.len() {
                    count += 1;
                }
            }
            count == 1
        }
    }
}

/// Best value over every edge subset that is a matching of `kind`.
fn naive_optimum(g: &Graph, kind: MatchingKind, weighted: bool) -> i64 {
    let edges: Vec<(usize, usize, i64)> = g.weighted_edges().map(|(e, w)| (e.0, e.1, w)).collect();
    let mut best = 0;
    for mask in 0u32..1 << edges.len() {
        let chosen: Vec<(usize, usize, i64)> = (0..edges.len()).filter(|&k| mask >> k & 1 == 1).map(|k| edges[k]).collect();
        let mut used: Vec<usize> = chosen.iter().flat_map(|&(a, b, _)| [a, b]).collect();
        used.sort_unstable();
        used.dedup();
        if used.len() != 2 * chosen.len() {
            continue;
        }
        let pairs: Vec<(usize, usize)> = chosen.iter().map(|&(a, b, _)| (a, b)).collect();
        if !naive_is_kind(g, &pairs, kind) {
            continue;
        }
        let value = if weighted { chosen.iter().map(|c| c.2).sum() } else { chosen.len() as i64 };
        best = best.max(value);
    }
    best
}

fn naive_has_induced_p4(g: &Graph) -> bool {
    let n = g.n();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let vs = [a, b, c, d];
                    if (0..4).any(|i| (i + 1..4).any(|j| vs[i] == vs[j])) {
                        continue;
                    }
                    let path = g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, d);
                    let chords = g.has_edge(a, c) || g.has_edge(a, d) || g.has_edge(b, d);
                    if path && !chords {
                        return true;
                    }
                }
            }
        }
    }
    false
}

fn naive_has_induced_2p3(g: &Graph) -> bool {
    let n = g.n();
    let is_p3 = |x: usize, y: usize, z: usize| g.has_edge(x, y) && g.has_edge(y, z) && !g.has_edge(x, z);
    let perms = |[a, b, c]: [usize; 3]| [[a, b, c], [b, a, c], [a, c, b]];
    for mask in 0u32..1 << n {
        if mask.count_ones() != 6 {
            continue;
        }
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        // split into two triples with no edges between them, each a P3
        for split in 0u32..1 << 6 {
            if split.count_ones() != 3 || split & 1 == 0 {
                continue;
            }
            let left: Vec<usize> = (0..6).filter(|&k| split >> k & 1 == 1).map(|k| vs[k]).collect();
            let right: Vec<usize> = (0..6).filter(|&k| split >> k & 1 == 0).map(|k| vs[k]).collect();
            if left.iter().any(|&x| right.iter().any(|&y| g.has_edge(x, y))) {
                continue;
            }
            let p3 = |t: &[usize]| perms([t[0], t[1], t[2]]).iter().any(|p| is_p3(p[0], p[1], p[2]));
            if p3(&left) && p3(&right) {
                return true;
            }
        }
    }
    false
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn restricted_optima_match_subset_enumeration(g in arb_graph(6)) {
        for kind in MatchingKind::ALL {
            for weighted in [false, true] {
                let r = max_restricted_matching(&g, kind, weighted).unwrap();
                prop_assert_eq!(r.value, naive_optimum(&g, kind, weighted), "{:?} weighted={}", kind, weighted);
                prop_assert!(is_kind_matching(&g, &r.witness, kind).unwrap());
            }
        }
    }

    #[test]
    fn maximum_matching_matches_subset_enumeration(g in arb_graph(7)) {
        prop_assume!(g.edge_count() <= 16);
        prop_assert_eq!(maximum_matching(&g).value, naive_optimum(&g, Unrestricted, false));
    }

    #[test]
    fn feasibility_predicates_match_definitions(g in arb_graph(8), picks in proptest::collection::vec(any::<prop::sample::Index>(), 0..5)) {
        prop_assume!(g.edge_count() > 0);
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for p in picks {
            let e = g.edges()[p.index(g.edge_count())];
            if pairs.iter().all(|&(a, b)| a != e.0 && a != e.1 && b != e.0 && b != e.1) {
                pairs.push((e.0, e.1));
            }
        }
        let m = Matching::new(pairs.iter().copied());
        for kind in MatchingKind::ALL {
            prop_assert_eq!(is_kind_matching(&g, &m, kind).unwrap(), naive_is_kind(&g, &pairs, kind), "{:?}", kind);
        }
        let sub = acyclic_matching::matched_subgraph(&g, &m).unwrap();
        let unique = count_perfect_matchings(&sub.graph).unwrap() == 1;
        prop_assert_eq!(is_kind_matching(&g, &m, UniquelyRestricted).unwrap(), unique);
    }

    #[test]
    fn features_are_hereditary(g in arb_graph(8)) {
        for kind in MatchingKind::ALL {
            let w = max_restricted_matching(&g, kind, false).unwrap().witness;
            for drop in w.edges() {
                let smaller = Matching::new(w.edges().iter().copied().filter(|e| e != drop));
                prop_assert!(is_kind_matching(&g, &smaller, kind).unwrap());
            }
        }
    }

    #[test]
    fn chain_inequality(g in arb_graph(10)) {
        let v = |kind| max_restricted_matching(&g, kind, false).unwrap().value;
        let (s, ac, ur, nu) = (v(Induced), v(Acyclic), v(UniquelyRestricted), maximum_matching(&g).value);
        prop_assert!(s <= ac && ac <= ur && ur <= nu, "{} {} {} {}", s, ac, ur, nu);
    }

    #[test]
    fn class_recognizers_match_definitions(g in arb_graph(8)) {
        prop_assert_eq!(is_p4_free(&g), !naive_has_induced_p4(&g));
        prop_assert_eq!(is_2p3_free(&g), !naive_has_induced_2p3(&g));
    }

    #[test]
    fn recognizers_match_enumeration(g in arb_graph(8)) {
        let limits = Limits::default();
        prop_assert_eq!(every_max_matching_acyclic(&g), every_maximum_matching_is(&g, Acyclic, &limits).unwrap());
        prop_assert_eq!(every_max_matching_induced(&g), every_maximum_matching_is(&g, Induced, &limits).unwrap());
        prop_assert!(!every_max_matching_induced(&g) || every_max_matching_acyclic(&g));
    }

    #[test]
    fn graph_file_round_trip(g in arb_graph(9)) {
        prop_assert_eq!(parse_graph(&emit_graph(&g)).unwrap(), g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn cograph_solver_matches_oracle(seed in any::<u64>(), n in 1usize..=11) {
        let mut spec = GenSpec::new(Model::Cograph, n, seed);
        spec.weights = Some((-3, 9));
        let g = generate(&spec).unwrap();
        let r = mwam_p4free(&g).unwrap();
        prop_assert_eq!(r.value, max_restricted_matching(&g, Acyclic, true).unwrap().value);
        prop_assert_eq!(r.witness.weight_in(&g), r.value);
    }

    #[test]
    fn twop3_solver_matches_oracle(seed in any::<u64>(), n in 1usize..=9, p in 0.2f64..0.9) {
        let mut spec = GenSpec::new(Model::Twop3free, n, seed);
        spec.p = p;
        spec.weights = Some((1, 9));
        let g = generate(&spec).unwrap();
        let r = mwam_2p3free(&g).unwrap();
        prop_assert_eq!(r.value, max_restricted_matching(&g, Acyclic, true).unwrap().value);
        prop_assert!(is_kind_matching(&g, &r.witness, Acyclic).unwrap());
    }

    #[test]
    fn acyclic_matchings_of_2p3_free_graphs_have_shapes(seed in any::<u64>(), n in 2usize..=9, p in 0.2f64..0.9) {
        let mut spec = GenSpec::new(Model::Twop3free, n, seed);
        spec.p = p;
        let g = generate(&spec).unwrap();
        acyclic_matching::oracles::for_each_restricted_matching(&g, Acyclic, &Limits::default(), |m| {
            assert!(lemma_shape_holds(&g, m).unwrap(), "{:?} in {:?}", m, g);
        }).unwrap();
    }

    #[test]
    fn reduction_decides_satisfiability(seed in any::<u64>(), n in 0usize..=8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_restricted_formula(&mut rng, n, 10_000).unwrap();
        let inst = build_reduction(&f).unwrap();
        prop_assert_eq!(decide_via_assignments(&inst).unwrap(), brute_force_satisfiable(&f).is_some());
        let nu = maximum_matching(&inst.graph).value as usize;
        prop_assert_eq!(nu, inst.side_a.len());
        let mask = seed as usize;
        let assignment: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
        prop_assert_eq!(assignment_to_matching(&inst, &assignment).unwrap().len(), nu);
        prop_assert_eq!(inst.side_a.len(), 14 * n + f.clauses.iter().map(Vec::len).sum::<usize>());
    }

    #[test]
    fn cnf_file_round_trip(seed in any::<u64>(), n in 0usize..=7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f: CnfFormula = random_restricted_formula(&mut rng, n, 10_000).unwrap();
        prop_assert_eq!(parse_cnf(&emit_cnf(&f)).unwrap(), f);
    }
}
