//! Shapes a non-K2 component of G(M) can take when M is an acyclic
//! matching of a 2P3-free graph.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::Matching;

/// Shape of a tree `T` with a perfect matching.
///
/// * `SpiderII(k)`: matching edge `xx'`, plus `k >= 2` matching edges
///   `y_i y_i'` with `x y_i` an edge.
/// * `DoubleSpiderIII(k, l)`: matching edge `xx'`, `k` pendant matching
///   edges hanging off `x`, `l` off `x'` (`k, l >= 1`).
/// * `DoubleSpiderIV(k, l)`: matching edges `xx'`, `yy'` with `xy` an edge,
///   `k` pendant matching edges hanging off `x`, `l` off `y` (`k, l >= 1`).
///
/// For the double spiders the larger side is reported first (`k >= l`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ShapeClass {
    K2,
    P4Shape,
    SpiderII(usize),
    DoubleSpiderIII(usize, usize),
    DoubleSpiderIV(usize, usize),
    Invalid,
}

impl fmt::Display for ShapeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapeClass::K2 => write!(f, "K2"),
            ShapeClass::P4Shape => write!(f, "P4"),
            ShapeClass::SpiderII(k) => write!(f, "spider({k})"),
            ShapeClass::DoubleSpiderIII(k, l) => write!(f, "double-spider-iii({k},{l})"),
            ShapeClass::DoubleSpiderIV(k, l) => write!(f, "double-spider-iv({k},{l})"),
            ShapeClass::Invalid => write!(f, "invalid"),
        }
    }
}

/// Labels the connected graph `t` with perfect matching `m` by one of the
/// shapes above, or `Invalid` when none fits exactly.
pub fn classify_component(t: &Graph, m: &Matching) -> Result<ShapeClass> {
    m.validate(t)?;
    if 2 * m.len() != t.n() {
        return Err(Error::InvalidMatching(format!(
            "{} edges cannot perfectly match {} vertices",
            m.len(),
            t.n()
        )));
    }
    if !t.is_connected() || t.n() == 0 {
        return Err(Error::InvalidGraph("component must be connected and non-empty".into()));
    }
    if t.edge_count() + 1 != t.n() {
        return Ok(ShapeClass::Invalid);
    }
    // A tree with a perfect matching: on 2 vertices it is K2, on 4 the only
    // such tree is P4.
    match t.n() {
        2 => return Ok(ShapeClass::K2),
        4 => return Ok(ShapeClass::P4Shape),
        _ => {}
    }
    let mate = m.mates(t.n());
    let mate = |v: usize| mate[v].expect("perfect matching");
    let leaf = |v: usize| t.degree(v) == 1;

    // Counts, per hub, the matching edges (other than `skip`) that hang
    // off it as hub - a - a' with deg(a) = 2 and a' a leaf. None if some
    // matching edge does not hang off exactly one hub this way.
    let hang = |hubs: &[usize], skip: &[usize]| -> Option<Vec<usize>> {
        let mut counts = vec![0; hubs.len()];
        for e in m.edges() {
            if skip.contains(&e.0) {
                continue;
            }
            let mut attached = None;
            for (a, b) in [(e.0, e.1), (e.1, e.0)] {
                let touching: Vec<usize> = (0..hubs.len()).filter(|&h| t.has_edge(a, hubs[h])).collect();
                if touching.is_empty() {
                    continue;
                }
                if touching.len() > 1 || t.degree(a) != 2 || !leaf(b) || attached.is_some() {
                    return None;
                }
                attached = Some(touching[0]);
            }
            counts[attached?] += 1;
        }
        Some(counts)
    };

    for e in m.edges() {
        for (x, xp) in [(e.0, e.1), (e.1, e.0)] {
            if leaf(xp) {
                if let Some(c) = hang(&[x], &[x, xp]) {
                    if c[0] >= 2 {
                        return Ok(ShapeClass::SpiderII(c[0]));
                    }
                }
            }
        }
        if let Some(c) = hang(&[e.0, e.1], &[e.0, e.1]) {
            if c[0] >= 1 && c[1] >= 1 {
                return Ok(ShapeClass::DoubleSpiderIII(c[0].max(c[1]), c[0].min(c[1])));
            }
        }
    }
    for e in t.edges() {
        if m.contains(*e) {
            continue;
        }
        let (x, y) = (e.0, e.1);
        let (xp, yp) = (mate(x), mate(y));
        if !leaf(xp) || !leaf(yp) {
            continue;
        }
        if let Some(c) = hang(&[x, y], &[x, y]) {
            if c[0] >= 1 && c[1] >= 1 {
                return Ok(ShapeClass::DoubleSpiderIV(c[0].max(c[1]), c[0].min(c[1])));
            }
        }
    }
    Ok(ShapeClass::Invalid)
}
