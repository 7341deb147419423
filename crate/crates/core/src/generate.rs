//! Seeded random graphs and formulas.
//!
//! [`generate`] seeds a ChaCha8 stream (`rand_chacha::ChaCha8Rng`,
//! `seed_from_u64`) from [`GenSpec::seed`], so a spec always yields the same
//! graph on every platform. The individual generators take the generator
//! state explicitly.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::classes::is_2p3_free;
use crate::cograph::CotreeNode;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::reduction::{build_reduction, CnfFormula, Literal};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    Gnp,
    Tree,
    Cycle,
    Star,
    Cograph,
    Twop3free,
    Reduction,
}

impl Model {
    pub const ALL: [Model; 7] = [
        Model::Gnp,
        Model::Tree,
        Model::Cycle,
        Model::Star,
        Model::Cograph,
        Model::Twop3free,
        Model::Reduction,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Model::Gnp => "gnp",
            Model::Tree => "tree",
            Model::Cycle => "cycle",
            Model::Star => "star",
            Model::Cograph => "cograph",
            Model::Twop3free => "twop3free",
            Model::Reduction => "reduction",
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Model::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Generation(format!("unknown model '{s}'")))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GenSpec {
    pub model: Model,
    /// Vertices, or variables for [`Model::Reduction`].
    pub n: usize,
    /// Edge probability for `gnp` and `twop3free`.
    pub p: f64,
    /// Inclusive weight range; unit weights when `None`.
    pub weights: Option<(i64, i64)>,
    pub seed: u64,
    /// Rejection budget for `twop3free` and `reduction`.
    pub max_tries: usize,
}

impl GenSpec {
    pub fn new(model: Model, n: usize, seed: u64) -> Self {
        GenSpec {
            model,
            n,
            p: 0.5,
            weights: None,
            seed,
            max_tries: 10_000,
        }
    }
}

pub fn generate(spec: &GenSpec) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let g = match spec.model {
        Model::Gnp => gnp(&mut rng, spec.n, spec.p),
        Model::Tree => random_tree(&mut rng, spec.n),
        Model::Cycle => Graph::cycle(spec.n),
        Model::Star => Graph::star(spec.n.saturating_sub(1)),
        Model::Cograph => random_cograph(&mut rng, spec.n),
        Model::Twop3free => random_2p3_free(&mut rng, spec.n, spec.p, spec.max_tries)?,
        Model::Reduction => {
            let f = random_restricted_formula(&mut rng, spec.n, spec.max_tries)?;
            build_reduction(&f)?.graph
        }
    };
    Ok(match spec.weights {
        Some(range) => random_weights(&mut rng, &g, range),
        None => g,
    })
}

pub fn gnp<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("simple by construction")
}

/// Each vertex after the first attaches to a uniform earlier vertex.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    Graph::from_edges(n, &edges).expect("tree")
}

/// Random cotree over a shuffled vertex set: every internal node splits its
/// vertices into two or three non-empty parts and is a union or a join with
/// equal probability.
pub fn random_cograph<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let mut vertices: Vec<usize> = (0..n).collect();
    vertices.shuffle(rng);
    if n == 0 {
        return Graph::empty(0);
    }
    random_cotree(rng, &vertices).evaluate(n)
}

fn random_cotree<R: Rng>(rng: &mut R, vertices: &[usize]) -> CotreeNode {
    if vertices.len() == 1 {
        return CotreeNode::Leaf(vertices[0]);
    }
    let parts = rng.gen_range(2..=vertices.len().min(3));
    let mut cuts: Vec<usize> = (1..vertices.len()).collect();
    cuts.shuffle(rng);
    let mut cuts = cuts[..parts - 1].to_vec();
    cuts.sort_unstable();
    let mut children = Vec::with_capacity(parts);
    let mut start = 0;
    for end in cuts.into_iter().chain([vertices.len()]) {
        children.push(random_cotree(rng, &vertices[start..end]));
        start = end;
    }
    if rng.gen_bool(0.5) {
        CotreeNode::Union(children)
    } else {
        CotreeNode::Join(children)
    }
}

/// Rejection-samples `G(n, p)` until the draw is 2P3-free.
pub fn random_2p3_free<R: Rng>(rng: &mut R, n: usize, p: f64, max_tries: usize) -> Result<Graph> {
    for _ in 0..max_tries {
        let g = gnp(rng, n, p);
        if is_2p3_free(&g) {
            return Ok(g);
        }
    }
    Err(Error::Generation(format!(
        "no 2P3-free G({n}, {p}) within {max_tries} draws"
    )))
}

pub fn random_weights<R: Rng>(rng: &mut R, g: &Graph, (lo, hi): (i64, i64)) -> Graph {
    g.reweighted(|_, _| rng.gen_range(lo..=hi))
}

/// A random formula in the restricted fragment in which every variable
/// occurs once or twice in each polarity. With fewer than two variables no
/// clause can be formed and the formula is empty.
pub fn random_restricted_formula<R: Rng>(rng: &mut R, num_vars: usize, max_tries: usize) -> Result<CnfFormula> {
    if num_vars < 2 {
        return CnfFormula::new(num_vars, Vec::new());
    }
    let mut pool = Vec::new();
    'attempt: for _ in 0..max_tries {
        pool.clear();
        for var in 0..num_vars {
            for positive in [true, false] {
                let copies = rng.gen_range(1..=2);
                pool.extend(std::iter::repeat(Literal { var, positive }).take(copies));
            }
        }
        pool.shuffle(rng);
        let mut clauses = Vec::new();
        let mut rest = &pool[..];
        while !rest.is_empty() {
            let size = match rest.len() {
                2 | 3 => rest.len(),
                4 => 2,
                _ => rng.gen_range(2..=3),
            };
            let (clause, tail) = rest.split_at(size);
            let mut vars: Vec<usize> = clause.iter().map(|l| l.var).collect();
            vars.sort_unstable();
            vars.dedup();
            if vars.len() != size {
                continue 'attempt;
            }
            let mut clause = clause.to_vec();
            clause.sort_unstable();
            clauses.push(clause);
            rest = tail;
        }
        clauses.sort();
        return CnfFormula::new(num_vars, clauses);
    }
    Err(Error::Generation(format!(
        "no restricted formula over {num_vars} variables within {max_tries} draws"
    )))
}
