//! Text formats.
//!
//! Graph files are DIMACS-edge style with 1-based ids:
//!
//! ```text
//! c optional comment
//! p edge 4 3
//! e 1 2
//! e 2 3 5
//! e 3 4
//! ```
//!
//! The third field of an `e` line is an optional integer weight (default 1).
//! CNF files are standard DIMACS `p cnf`. Label sidecars list `role -> id`
//! lines followed by `A:` and `B:` membership lines.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::reduction::{CnfFormula, Literal, ReductionInstance};

/// Version tag carried by every JSON document the CLI prints.
pub const JSON_SCHEMA: &str = "acyclic-matching/1";

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn field<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("bad {what} '{tok}'")))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize, i64)> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut toks = raw.split_whitespace();
        match toks.next() {
            None | Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(parse_err(line, "second problem line"));
                }
                if toks.next() != Some("edge") {
                    return Err(parse_err(line, "expected 'p edge <n> <m>'"));
                }
                let n = field(toks.next(), line, "vertex count")?;
                let m = field(toks.next(), line, "edge count")?;
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) = header.ok_or_else(|| parse_err(line, "edge before problem line"))?;
                let u: usize = field(toks.next(), line, "endpoint")?;
                let v: usize = field(toks.next(), line, "endpoint")?;
                let w: i64 = match toks.next() {
                    Some(t) => field(Some(t), line, "weight")?,
                    None => 1,
                };
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(parse_err(line, format!("vertex {x} outside 1..={n}")));
                    }
                }
                if u == v {
                    return Err(parse_err(line, format!("loop at vertex {u}")));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(parse_err(line, format!("duplicate edge {u}-{v}")));
                }
                edges.push((u - 1, v - 1, w));
            }
            Some(other) => return Err(parse_err(line, format!("unknown line type '{other}'"))),
        }
        if toks.next().is_some() {
            return Err(parse_err(line, "trailing fields"));
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(0, "no problem line"))?;
    if edges.len() != m {
        return Err(parse_err(0, format!("header declares {m} edges, body has {}", edges.len())));
    }
    Graph::from_weighted_edges(n, &edges)
}

/// Canonical text: edges sorted, weights written only when not 1.
pub fn emit_graph(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (e, w) in g.weighted_edges() {
        if w == 1 {
            out.push_str(&format!("e {} {}\n", e.0 + 1, e.1 + 1));
        } else {
            out.push_str(&format!("e {} {} {w}\n", e.0 + 1, e.1 + 1));
        }
    }
    out
}

/// DIMACS CNF. Clauses may span lines; a lone `0` is an empty clause.
/// Tautological clauses are kept (see [`CnfFormula::tautological_clauses`]).
pub fn parse_cnf(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<Vec<Literal>> = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        if trimmed.starts_with('%') {
            break;
        }
        last_line = line;
        if trimmed.starts_with('p') {
            if header.is_some() {
                return Err(parse_err(line, "second problem line"));
            }
            let mut toks = trimmed.split_whitespace().skip(1);
            if toks.next() != Some("cnf") {
                return Err(parse_err(line, "expected 'p cnf <vars> <clauses>'"));
            }
            let v = field(toks.next(), line, "variable count")?;
            let c = field(toks.next(), line, "clause count")?;
            if toks.next().is_some() {
                return Err(parse_err(line, "trailing fields"));
            }
            header = Some((v, c));
            continue;
        }
        let (num_vars, _) = header.ok_or_else(|| parse_err(line, "clause before problem line"))?;
        for tok in trimmed.split_whitespace() {
            let x: i64 = field(Some(tok), line, "literal")?;
            if x == 0 {
                clauses.push(std::mem::take(&mut current));
            } else if x.unsigned_abs() as usize > num_vars {
                return Err(parse_err(line, format!("variable {} outside 1..={num_vars}", x.abs())));
            } else {
                current.push(Literal::from_dimacs(x));
            }
        }
    }
    if !current.is_empty() {
        return Err(parse_err(last_line, "clause not terminated by 0"));
    }
    let (num_vars, count) = header.ok_or_else(|| parse_err(0, "no problem line"))?;
    if clauses.len() != count {
        return Err(parse_err(0, format!("header declares {count} clauses, body has {}", clauses.len())));
    }
    CnfFormula::new(num_vars, clauses)
}

pub fn emit_cnf(f: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", f.num_vars, f.clauses.len());
    for c in &f.clauses {
        for l in c {
            out.push_str(&format!("{} ", l.to_dimacs()));
        }
        out.push_str("0\n");
    }
    out
}

/// Label sidecar for a reduction instance, with 1-based ids.
pub fn emit_labels(inst: &ReductionInstance) -> String {
    let mut out = String::new();
    for (v, label) in inst.labels.iter().enumerate() {
        out.push_str(&format!("{label} -> {}\n", v + 1));
    }
    for (name, side) in [("A", &inst.side_a), ("B", &inst.side_b)] {
        out.push_str(name);
        out.push(':');
        for v in side {
            out.push_str(&format!(" {}", v + 1));
        }
        out.push('\n');
    }
    out
}

/// Parsed sidecar, ids back to 0-based.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LabelMap {
    pub labels: Vec<(String, usize)>,
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
}

pub fn parse_labels(text: &str) -> Result<LabelMap> {
    let mut map = LabelMap::default();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        let ids = |rest: &str| -> Result<Vec<usize>> {
            rest.split_whitespace()
                .map(|t| match t.parse::<usize>() {
                    Ok(v) if v > 0 => Ok(v - 1),
                    _ => Err(parse_err(line, format!("bad vertex id '{t}'"))),
                })
                .collect()
        };
        if let Some(rest) = trimmed.strip_prefix("A:") {
            map.side_a = ids(rest)?;
        } else if let Some(rest) = trimmed.strip_prefix("B:") {
            map.side_b = ids(rest)?;
        } else if let Some((label, id)) = trimmed.split_once("->") {
            let id = ids(id)?;
            if id.len() != 1 {
                return Err(parse_err(line, "expected exactly one id"));
            }
            map.labels.push((label.trim().to_string(), id[0]));
        } else {
            return Err(parse_err(line, "expected 'role -> id', 'A:' or 'B:'"));
        }
    }
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduction::build_reduction;

    #[test]
    fn k2_and_c4() {
        let g = parse_graph("p edge 2 1\ne 1 2\n").unwrap();
        assert_eq!(g, Graph::path(2));
        assert_eq!(emit_graph(&Graph::cycle(4)), "p edge 4 4\ne 1 2\ne 1 4\ne 2 3\ne 3 4\n");
    }

    #[test]
    fn graph_errors_carry_lines() {
        let cases = [
            ("p edge 2 1\ne 1 1\n", 2),
            ("p edge 2 2\ne 1 2\ne 2 1\n", 3),
            ("p edge 2 1\ne 1 3\n", 2),
            ("e 1 2\n", 1),
            ("p edge 2 1\nx 1 2\n", 2),
            ("p edge 2 1\ne 1 2 heavy\n", 2),
        ];
        for (text, line) in cases {
            match parse_graph(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
        assert!(parse_graph("p edge 3 2\ne 1 2\n").is_err());
    }

    #[test]
    fn weighted_round_trip() {
        let g = Graph::from_weighted_edges(4, &[(2, 3, -2), (0, 1, 1), (1, 2, 7)]).unwrap();
        let text = emit_graph(&g);
        assert_eq!(parse_graph(&text).unwrap(), g);
        assert!(text.contains("e 3 4 -2\n"));
    }

    #[test]
    fn cnf_parsing() {
        let f = parse_cnf("c hi\np cnf 2 2\n1 2 0\n-1 -2 0\n").unwrap();
        assert_eq!(f, CnfFormula::from_dimacs(2, &[&[1, 2], &[-1, -2]]).unwrap());
        assert_eq!(parse_cnf(&emit_cnf(&f)).unwrap(), f);
        let t = parse_cnf("p cnf 2 1\n1 -1 2 0\n").unwrap();
        assert_eq!(t.tautological_clauses(), vec![0]);
        let e = parse_cnf("p cnf 1 1\n0\n").unwrap();
        assert!(e.clauses[0].is_empty());
        let split = parse_cnf("p cnf 3 1\n1 2\n3 1 0\n").unwrap();
        assert_eq!(split.clauses, vec![vec![Literal::pos(0), Literal::pos(1), Literal::pos(2)]]);
        assert!(parse_cnf("p cnf 1 1\n2 0\n").is_err());
        assert!(parse_cnf("p cnf 2 1\n1 2\n").is_err());
    }

    #[test]
    fn labels_round_trip() {
        let f = CnfFormula::from_dimacs(2, &[&[1, 2], &[-1, -2]]).unwrap();
        let inst = build_reduction(&f).unwrap();
        let map = parse_labels(&emit_labels(&inst)).unwrap();
        assert_eq!(map.labels.len(), 72);
        assert_eq!(map.labels[0], ("u(1,1)".to_string(), 0));
        assert_eq!(map.labels[64], ("x1(1,1)".to_string(), 64));
        assert_eq!(map.side_a, inst.side_a);
        assert_eq!(map.side_b, inst.side_b);
    }
}
