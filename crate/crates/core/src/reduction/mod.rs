//! Reduction from restricted SAT to "does some maximum matching stay
//! acyclic", together with its computational checks.
//!
//! Vertex numbering: gadget `i` (0-based) owns ids `32 i .. 32 i + 32` in
//! the order documented in [`gadget`]. After the `32 n` gadget vertices come
//! the clause-literal pairs, clause by clause, literals in ascending
//! variable order, two ids per literal: `ℓ(r,1)` then `ℓ(r,2)`.

pub mod cnf;
pub mod gadget;
pub mod verify;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::matching::{is_kind_matching, Matching, MatchingKind};

pub use cnf::{brute_force_satisfiable, normalize_cnf, CnfFormula, Literal, Normalized, Verdict};
pub use gadget::{build_gadget, GadgetRole, GadgetVertex};
pub use verify::{inspect_instance, verify_instance, Check, VerificationReport};

/// Most variables [`decide_via_assignments`] will sweep.
pub const MAX_ASSIGNMENT_VARS: usize = 20;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionOptions {
    /// Accept variables that occur in only one polarity. Their unused slot
    /// vertices simply stay clause-free.
    pub allow_pure_variables: bool,
}

/// Role label of a vertex of the reduction graph.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VertexLabel {
    Gadget(GadgetVertex),
    /// `side` is 1 or 2; `clause` is 0-based.
    Literal {
        clause: usize,
        literal: Literal,
        side: u8,
    },
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Gadget(v) => write!(f, "{v}"),
            VertexLabel::Literal {
                clause,
                literal,
                side,
            } => write!(f, "{literal}({},{side})", clause + 1),
        }
    }
}

impl fmt::Debug for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionInstance {
    pub graph: Graph,
    /// u, x, y vertices and every `ℓ(r,1)`; ascending.
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
    /// `labels[v]` is the role of vertex `v`.
    pub labels: Vec<VertexLabel>,
    pub formula: CnfFormula,
    pub options: ReductionOptions,
}

impl ReductionInstance {
    pub fn num_vars(&self) -> usize {
        self.formula.num_vars
    }

    pub fn gadget_vertex(&self, var: usize, role: GadgetRole, index: usize) -> usize {
        GadgetVertex::new(var, role, index).id()
    }

    /// Id of `ℓ(r,side)` for the `k`-th literal (ascending variable) of clause `r`.
    pub fn literal_vertex(&self, clause: usize, k: usize, side: u8) -> usize {
        literal_base(&self.formula, clause) + 2 * k + side as usize - 1
    }

    pub fn find(&self, label: &VertexLabel) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

fn literal_base(f: &CnfFormula, clause: usize) -> usize {
    gadget::GADGET_ORDER * f.num_vars + 2 * f.clauses[..clause].iter().map(Vec::len).sum::<usize>()
}

pub fn build_reduction(f: &CnfFormula) -> Result<ReductionInstance> {
    build_reduction_with(f, ReductionOptions::default())
}

pub fn build_reduction_with(f: &CnfFormula, options: ReductionOptions) -> Result<ReductionInstance> {
    f.check_restricted()?;
    if !options.allow_pure_variables {
        for (v, &(p, n)) in f.occurrences().iter().enumerate() {
            if (p == 0) != (n == 0) {
                return Err(Error::InvalidFormula(format!(
                    "x{} occurs in only one polarity; normalize first",
                    v + 1
                )));
            }
        }
    }

    let n_gadget = gadget::GADGET_ORDER * f.num_vars;
    let n_lit: usize = f.clauses.iter().map(Vec::len).sum();
    let order = n_gadget + 2 * n_lit;

    let mut labels = Vec::with_capacity(order);
    for var in 0..f.num_vars {
        labels.extend((0..gadget::GADGET_ORDER).map(|o| VertexLabel::Gadget(GadgetVertex::from_offset(var, o))));
    }
    let mut lit_vertex = Vec::with_capacity(f.clauses.len());
    for (r, c) in f.clauses.iter().enumerate() {
        let mut ids = Vec::with_capacity(c.len());
        for &literal in c {
            ids.push(labels.len());
            for side in 1..=2 {
                labels.push(VertexLabel::Literal {
                    clause: r,
                    literal,
                    side,
                });
            }
        }
        lit_vertex.push(ids);
    }

    let mut edges: Vec<Edge> = Vec::with_capacity(38 * f.num_vars + 3 * n_lit);
    for var in 0..f.num_vars {
        edges.extend(build_gadget(var).iter().map(|(a, b)| Edge::new(a.id(), b.id())));
    }
    for ids in &lit_vertex {
        edges.extend(ids.iter().map(|&a| Edge::new(a, a + 1)));
    }
    for var in 0..f.num_vars {
        for positive in [true, false] {
            let role = if positive { GadgetRole::F } else { GadgetRole::T };
            let lit = Literal { var, positive };
            let holders = f.clauses.iter().enumerate().filter(|(_, c)| c.contains(&lit));
            for (occ, (r, c)) in holders.enumerate() {
                let slot1 = GadgetVertex::new(var, role, 2 * occ + 1).id();
                let slot2 = GadgetVertex::new(var, role, 2 * occ + 2).id();
                // literals are sorted by variable, so the others are too
                let others: Vec<usize> = (0..c.len()).filter(|&k| c[k].var != var).collect();
                let own = c.iter().position(|&l| l == lit).unwrap();
                let at = |k: usize| lit_vertex[r][k];
                match others[..] {
                    [k] => {
                        let (first, second) = if var < c[k].var { (own, k) } else { (k, own) };
                        edges.push(Edge::new(at(first), slot1));
                        edges.push(Edge::new(at(second), slot2));
                    }
                    [k, k2] => {
                        edges.push(Edge::new(at(k), slot1));
                        edges.push(Edge::new(at(k2), slot2));
                    }
                    _ => unreachable!("restricted clauses have 2 or 3 literals"),
                }
            }
        }
    }
    let graph = Graph::from_edges(order, &edges)?;

    let in_a = |l: &VertexLabel| match l {
        VertexLabel::Gadget(v) => matches!(v.role, GadgetRole::U | GadgetRole::X | GadgetRole::Y),
        VertexLabel::Literal { side, .. } => *side == 1,
    };
    let (side_a, side_b): (Vec<usize>, Vec<usize>) = (0..order).partition(|&v| in_a(&labels[v]));

    let inst = ReductionInstance {
        graph,
        side_a,
        side_b,
        labels,
        formula: f.clone(),
        options,
    };
    for var in 0..f.num_vars {
        for cycle in gadget::forcing_cycles(var) {
            for k in 0..cycle.len() {
                let (a, b) = (cycle[k].id(), cycle[(k + 1) % cycle.len()].id());
                assert!(inst.graph.has_edge(a, b), "gadget lost {}-{}", cycle[k], cycle[(k + 1) % cycle.len()]);
            }
        }
    }
    Ok(inst)
}

/// The maximum matching taking every pendant edge plus `u(i,j)t(i,j)` for a
/// true variable, `u(i,j)f(i,j)` for a false one. Always has `|A|` edges.
pub fn assignment_to_matching(inst: &ReductionInstance, assignment: &[bool]) -> Result<Matching> {
    if assignment.len() != inst.num_vars() {
        return Err(Error::InvalidFormula(format!(
            "assignment has {} values for {} variables",
            assignment.len(),
            inst.num_vars()
        )));
    }
    use GadgetRole::*;
    let mut m = Vec::with_capacity(inst.side_a.len());
    for (var, &value) in assignment.iter().enumerate() {
        let v = |role, index| GadgetVertex::new(var, role, index).id();
        m.extend((1..=8).map(|j| (v(Y, j), v(Z, j))));
        m.extend((1..=2).map(|j| (v(X, j), v(W, j))));
        let partner = if value { T } else { F };
        m.extend((1..=4).map(|j| (v(U, j), v(partner, j))));
    }
    for (r, c) in inst.formula.clauses.iter().enumerate() {
        for k in 0..c.len() {
            m.push((inst.literal_vertex(r, k, 1), inst.literal_vertex(r, k, 2)));
        }
    }
    Ok(Matching::new(m))
}

/// The Claim 1 matching: every variable set true.
pub fn canonical_matching(inst: &ReductionInstance) -> Matching {
    assignment_to_matching(inst, &vec![true; inst.num_vars()]).expect("length matches")
}

/// First assignment (in binary counting order, `x1` least significant)
/// whose matching is acyclic.
pub fn find_acyclic_assignment(inst: &ReductionInstance) -> Result<Option<Vec<bool>>> {
    let n = inst.num_vars();
    if n > MAX_ASSIGNMENT_VARS {
        return Err(Error::SizeGuard {
            what: "assignment sweep",
            actual: n,
            limit: MAX_ASSIGNMENT_VARS,
        });
    }
    for bits in 0u64..1 << n {
        let a: Vec<bool> = (0..n).map(|v| bits >> v & 1 == 1).collect();
        let m = assignment_to_matching(inst, &a)?;
        if is_kind_matching(&inst.graph, &m, MatchingKind::Acyclic)? {
            return Ok(Some(a));
        }
    }
    Ok(None)
}

/// True iff some truth assignment yields an acyclic maximum matching. That
/// this coincides with `ν_ac = ν`, and with satisfiability, is the
/// reduction's correctness argument; it is only cross-checked against the
/// exact oracle on tiny instances.
pub fn decide_via_assignments(inst: &ReductionInstance) -> Result<bool> {
    Ok(find_acyclic_assignment(inst)?.is_some())
}
