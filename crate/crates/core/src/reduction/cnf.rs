//! CNF formulas and the normalization into the restricted fragment
//! (clauses of size 2 or 3, each variable at most twice per polarity).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A literal over variable `var` (0-based).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal { var, positive: true }
    }

    pub fn neg(var: usize) -> Self {
        Literal { var, positive: false }
    }

    /// From a DIMACS integer (`3` is x3, `-3` its negation).
    pub fn from_dimacs(x: i64) -> Self {
        assert!(x != 0, "0 terminates a clause, it is not a literal");
        Literal {
            var: x.unsigned_abs() as usize - 1,
            positive: x > 0,
        }
    }

    pub fn to_dimacs(self) -> i64 {
        let v = self.var as i64 + 1;
        if self.positive {
            v
        } else {
            -v
        }
    }

    pub fn negated(self) -> Self {
        Literal {
            var: self.var,
            positive: !self.positive,
        }
    }

    pub fn holds(self, assignment: &[bool]) -> bool {
        assignment[self.var] == self.positive
    }
}

impl fmt::Debug for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "x{}", self.var + 1)
        } else {
            write!(f, "~x{}", self.var + 1)
        }
    }
}

/// Clauses are kept as sorted, duplicate-free literal lists.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CnfFormula {
    pub num_vars: usize,
    pub clauses: Vec<Vec<Literal>>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<Vec<Literal>>) -> Result<Self> {
        let mut f = CnfFormula {
            num_vars,
            clauses: Vec::with_capacity(clauses.len()),
        };
        for mut c in clauses {
            if let Some(l) = c.iter().find(|l| l.var >= num_vars) {
                return Err(Error::InvalidFormula(format!(
                    "literal {l} outside {num_vars} variables"
                )));
            }
            c.sort_unstable();
            c.dedup();
            f.clauses.push(c);
        }
        Ok(f)
    }

    /// Convenience constructor from DIMACS-style integers.
    pub fn from_dimacs(num_vars: usize, clauses: &[&[i64]]) -> Result<Self> {
        Self::new(
            num_vars,
            clauses
                .iter()
                .map(|c| c.iter().map(|&x| Literal::from_dimacs(x)).collect())
                .collect(),
        )
    }

    /// Indices of clauses containing a variable and its negation.
    pub fn tautological_clauses(&self) -> Vec<usize> {
        self.clauses
            .iter()
            .enumerate()
            .filter(|(_, c)| is_tautology(c))
            .map(|(i, _)| i)
            .collect()
    }

    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().any(|l| l.holds(assignment)))
    }

    /// `(positive, negative)` occurrence counts per variable.
    pub fn occurrences(&self) -> Vec<(usize, usize)> {
        let mut occ = vec![(0, 0); self.num_vars];
        for c in &self.clauses {
            for l in c {
                if l.positive {
                    occ[l.var].0 += 1;
                } else {
                    occ[l.var].1 += 1;
                }
            }
        }
        occ
    }

    /// Checks the restricted fragment: 2 or 3 literals over distinct
    /// variables per clause, each variable at most twice per polarity.
    pub fn check_restricted(&self) -> Result<()> {
        for (r, c) in self.clauses.iter().enumerate() {
            if !(2..=3).contains(&c.len()) {
                return Err(Error::InvalidFormula(format!(
                    "clause {} has {} literals",
                    r + 1,
                    c.len()
                )));
            }
            if c.windows(2).any(|w| w[0].var == w[1].var) {
                return Err(Error::InvalidFormula(format!(
                    "clause {} repeats a variable",
                    r + 1
                )));
            }
        }
        for (v, &(p, n)) in self.occurrences().iter().enumerate() {
            if p > 2 || n > 2 {
                return Err(Error::InvalidFormula(format!(
                    "x{} occurs {p} times positively and {n} times negatively",
                    v + 1
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for CnfFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.clauses.is_empty() {
            return write!(f, "(empty)");
        }
        for (i, c) in self.clauses.iter().enumerate() {
            if i > 0 {
                write!(f, " & ")?;
            }
            write!(f, "(")?;
            for (j, l) in c.iter().enumerate() {
                if j > 0 {
                    write!(f, " | ")?;
                }
                write!(f, "{l}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

fn is_tautology(c: &[Literal]) -> bool {
    c.windows(2).any(|w| w[0].var == w[1].var)
}

/// Truth-table satisfiability; exponential, for small formulas only.
pub fn brute_force_satisfiable(f: &CnfFormula) -> Option<Vec<bool>> {
    assert!(f.num_vars < 31, "truth table too large");
    (0u32..1 << f.num_vars)
        .map(|bits| (0..f.num_vars).map(|v| bits >> v & 1 == 1).collect::<Vec<bool>>())
        .find(|a| f.satisfied_by(a))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Satisfiable,
    Unsatisfiable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Normalized {
    /// Equisatisfiable restricted formula over variables that occur in both
    /// polarities; `original_var[v]` is the input variable behind `v`.
    Restricted {
        formula: CnfFormula,
        original_var: Vec<usize>,
    },
    /// Normalization decided the formula outright.
    Decided(Verdict),
}

/// Removes tautologies, propagates unit clauses and eliminates pure
/// literals until none applies, then renumbers the surviving variables.
pub fn normalize_cnf(f: &CnfFormula) -> Result<Normalized> {
    let mut clauses: Vec<Vec<Literal>> = f
        .clauses
        .iter()
        .filter(|c| !is_tautology(c))
        .cloned()
        .collect();
    loop {
        if clauses.iter().any(Vec::is_empty) {
            return Ok(Normalized::Decided(Verdict::Unsatisfiable));
        }
        if clauses.is_empty() {
            return Ok(Normalized::Decided(Verdict::Satisfiable));
        }
        if let Some(unit) = clauses.iter().find(|c| c.len() == 1).map(|c| c[0]) {
            assign(&mut clauses, unit);
            continue;
        }
        let mut seen = vec![(false, false); f.num_vars];
        for l in clauses.iter().flatten() {
            if l.positive {
                seen[l.var].0 = true;
            } else {
                seen[l.var].1 = true;
            }
        }
        let pure = seen.iter().enumerate().find_map(|(v, &(p, n))| match (p, n) {
            (true, false) => Some(Literal::pos(v)),
            (false, true) => Some(Literal::neg(v)),
            _ => None,
        });
        match pure {
            Some(l) => assign(&mut clauses, l),
            None => break,
        }
    }

    let mut used: Vec<usize> = clauses.iter().flatten().map(|l| l.var).collect();
    used.sort_unstable();
    used.dedup();
    let mut new_id = vec![usize::MAX; f.num_vars];
    for (i, &v) in used.iter().enumerate() {
        new_id[v] = i;
    }
    let formula = CnfFormula::new(
        used.len(),
        clauses
            .iter()
            .map(|c| {
                c.iter()
                    .map(|l| Literal {
                        var: new_id[l.var],
                        positive: l.positive,
                    })
                    .collect()
            })
            .collect(),
    )?;
    formula
        .check_restricted()
        .map_err(|e| Error::NotNormalizable(e.to_string()))?;
    Ok(Normalized::Restricted {
        formula,
        original_var: used,
    })
}

/// Makes `lit` true: drops satisfied clauses, strips the falsified literal.
fn assign(clauses: &mut Vec<Vec<Literal>>, lit: Literal) {
    clauses.retain(|c| !c.contains(&lit));
    let neg = lit.negated();
    for c in clauses.iter_mut() {
        c.retain(|&l| l != neg);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_then_pure_is_satisfiable() {
        let f = CnfFormula::from_dimacs(2, &[&[1], &[-1, 2]]).unwrap();
        assert_eq!(
            normalize_cnf(&f).unwrap(),
            Normalized::Decided(Verdict::Satisfiable)
        );
    }

    #[test]
    fn tautology_alone_is_satisfiable() {
        let f = CnfFormula::from_dimacs(2, &[&[1, -1, 2]]).unwrap();
        assert_eq!(f.tautological_clauses(), vec![0]);
        assert_eq!(
            normalize_cnf(&f).unwrap(),
            Normalized::Decided(Verdict::Satisfiable)
        );
    }

    #[test]
    fn restricted_input_is_unchanged() {
        let f = CnfFormula::from_dimacs(2, &[&[1, 2], &[-1, -2]]).unwrap();
        assert_eq!(
            normalize_cnf(&f).unwrap(),
            Normalized::Restricted {
                formula: f.clone(),
                original_var: vec![0, 1]
            }
        );
    }

    #[test]
    fn empty_clause_is_unsatisfiable() {
        let f = CnfFormula::from_dimacs(1, &[&[], &[1, -1]]).unwrap();
        assert_eq!(
            normalize_cnf(&f).unwrap(),
            Normalized::Decided(Verdict::Unsatisfiable)
        );
        let f = CnfFormula::from_dimacs(1, &[&[1], &[-1]]).unwrap();
        assert_eq!(
            normalize_cnf(&f).unwrap(),
            Normalized::Decided(Verdict::Unsatisfiable)
        );
    }

    #[test]
    fn renumbers_surviving_variables() {
        // x1 is pure and goes; x2, x3 remain as the new x1, x2.
        let f = CnfFormula::from_dimacs(3, &[&[1, 2, 3], &[2, 3], &[-2, -3]]).unwrap();
        match normalize_cnf(&f).unwrap() {
            Normalized::Restricted {
                formula,
                original_var,
            } => {
                assert_eq!(original_var, vec![1, 2]);
                assert_eq!(formula, CnfFormula::from_dimacs(2, &[&[1, 2], &[-1, -2]]).unwrap());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn long_clauses_are_not_normalizable() {
        let f = CnfFormula::from_dimacs(
            4,
            &[&[1, 2, 3, 4], &[-1, -2], &[-3, -4], &[1, -2], &[3, -4], &[-1, 4], &[2, -3]],
        )
        .unwrap();
        assert!(matches!(normalize_cnf(&f), Err(Error::NotNormalizable(_))));
    }

    #[test]
    fn brute_force_oracle() {
        let unsat = CnfFormula::from_dimacs(2, &[&[1, 2], &[-1, 2], &[1, -2], &[-1, -2]]).unwrap();
        assert_eq!(brute_force_satisfiable(&unsat), None);
        let sat = CnfFormula::from_dimacs(2, &[&[1, 2], &[-1, -2]]).unwrap();
        let a = brute_force_satisfiable(&sat).unwrap();
        assert!(sat.satisfied_by(&a));
    }
}
