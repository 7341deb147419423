//! Command-line front end. Results go to stdout as JSON, diagnostics to
//! stderr. Vertex ids in JSON output are 1-based, like the files.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use acyclic_matching::characterization::{component_shapes, ComponentShape};
use acyclic_matching::classes::find_induced_2p3;
use acyclic_matching::cograph::{build_cotree, mwam_p4free};
use acyclic_matching::generate::{generate, GenSpec, Model};
use acyclic_matching::io::{emit_graph, emit_labels, parse_cnf, parse_graph, JSON_SCHEMA};
use acyclic_matching::oracles::{max_restricted_matching_with, maximum_matching, Limits};
use acyclic_matching::reduction::{
    build_reduction_with, find_acyclic_assignment, inspect_instance, normalize_cnf, CnfFormula, Normalized,
    ReductionOptions, MAX_ASSIGNMENT_VARS,
};
use acyclic_matching::selftest::{run_selftest, SelftestConfig, SuiteSizes};
use acyclic_matching::twop3::mwam_2p3free;
use acyclic_matching::{Error, Graph, Matching, MatchingKind, SolveResult};

#[derive(Parser)]
#[command(name = "acmatch", version, about = "Induced, acyclic and uniquely restricted matchings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact optimum of one matching kind (exponential for the restricted kinds).
    Solve {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Maximize total edge weight instead of cardinality.
        #[arg(long)]
        weighted: bool,
        /// Size guard of the exponential search, in vertices.
        #[arg(long, default_value_t = Limits::default().restricted_max_vertices)]
        max_vertices: usize,
        file: PathBuf,
    },
    /// Maximum-weight acyclic matching with a class-specific algorithm.
    SolveClass {
        #[arg(long, value_enum)]
        class: Class,
        file: PathBuf,
    },
    /// Tests a structural property.
    Recognize {
        #[arg(long, value_enum)]
        property: Property,
        file: PathBuf,
    },
    /// Builds the reduction graph of a restricted CNF formula.
    Reduce {
        cnf: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        labels: PathBuf,
        #[command(flatten)]
        prep: Prep,
    },
    /// Builds the reduction graph and checks it.
    VerifyReduction {
        cnf: PathBuf,
        #[command(flatten)]
        prep: Prep,
    },
    /// Writes a seeded random graph.
    Gen {
        #[arg(long)]
        model: Model,
        /// Vertices, or variables for the reduction model.
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Edge probability for gnp and twop3free.
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        /// Inclusive weight range LO:HI.
        #[arg(long, value_parser = parse_range)]
        weights: Option<(i64, i64)>,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Runs the acceptance suites and prints a JSON report.
    Selftest {
        #[arg(long, default_value_t = SelftestConfig::default().seed)]
        seed: u64,
        /// Small case counts, for a fast smoke run.
        #[arg(long)]
        quick: bool,
    },
}

#[derive(clap::Args)]
struct Prep {
    /// Normalize the formula first; a formula decided by normalization is
    /// reported without building a graph.
    #[arg(long)]
    normalize: bool,
    /// Accept variables occurring in only one polarity.
    #[arg(long)]
    allow_pure: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Matching,
    Induced,
    Acyclic,
    Unique,
}

impl From<Kind> for MatchingKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Matching => MatchingKind::Unrestricted,
            Kind::Induced => MatchingKind::Induced,
            Kind::Acyclic => MatchingKind::Acyclic,
            Kind::Unique => MatchingKind::UniquelyRestricted,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Class {
    #[value(name = "p4free")]
    P4Free,
    #[value(name = "2p3free")]
    TwoP3Free,
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    #[value(name = "p4free")]
    P4Free,
    #[value(name = "2p3free")]
    TwoP3Free,
    AllMaxAcyclic,
    AllMaxInduced,
}

fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = s.split_once(':').ok_or("expected LO:HI")?;
    let lo: i64 = lo.trim().parse().map_err(|_| format!("bad bound '{lo}'"))?;
    let hi: i64 = hi.trim().parse().map_err(|_| format!("bad bound '{hi}'"))?;
    if lo > hi {
        return Err(format!("empty range {lo}:{hi}"));
    }
    Ok((lo, hi))
}

/// A failed command: exit status plus an optional JSON body for stdout.
struct Failure {
    code: u8,
    message: String,
    body: Option<Value>,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let body = match &e {
            Error::NotCograph { witness } => Some(class_violation("p4free", witness)),
            Error::Not2P3Free { witness } => Some(class_violation("2p3free", witness)),
            _ => None,
        };
        Failure {
            code: e.exit_code() as u8,
            message: e.to_string(),
            body,
        }
    }
}

fn class_violation(class: &str, witness: &[usize]) -> Value {
    json!({
        "schema": JSON_SCHEMA,
        "error": "class_violation",
        "class": class,
        "witness": one_based(witness),
    })
}

fn one_based(vs: &[usize]) -> Vec<usize> {
    vs.iter().map(|v| v + 1).collect()
}

fn edges_json(m: &Matching) -> Vec<[usize; 2]> {
    m.edges().iter().map(|e| [e.0 + 1, e.1 + 1]).collect()
}

fn result_json(r: &SolveResult) -> Value {
    json!({
        "schema": JSON_SCHEMA,
        "kind": r.kind,
        "value": r.value,
        "edges": edges_json(&r.witness),
    })
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure {
        code: 2,
        message: format!("{}: {e}", path.display()),
        body: None,
    })
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure {
        code: 1,
        message: format!("{}: {e}", path.display()),
        body: None,
    })
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    Ok(parse_graph(&read(path)?)?)
}

fn print(v: &Value) {
    emit(&format!("{}\n", serde_json::to_string_pretty(v).expect("json")));
}

/// Writes to stdout; a closed pipe is not an error.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

/// The formula to build from, or the verdict normalization reached.
fn prepare(path: &Path, prep: &Prep) -> Result<Result<CnfFormula, Value>, Failure> {
    let f = parse_cnf(&read(path)?)?;
    if !prep.normalize {
        return Ok(Ok(f));
    }
    Ok(match normalize_cnf(&f)? {
        Normalized::Restricted { formula, .. } => Ok(formula),
        Normalized::Decided(verdict) => Err(json!({
            "schema": JSON_SCHEMA,
            "normalized": "decided",
            "verdict": verdict,
        })),
    })
}

fn options(prep: &Prep) -> ReductionOptions {
    ReductionOptions {
        allow_pure_variables: prep.allow_pure,
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Solve {
            kind,
            weighted,
            max_vertices,
            file,
        } => {
            let g = read_graph(&file)?;
            let kind = MatchingKind::from(kind);
            let r = if kind == MatchingKind::Unrestricted && !weighted {
                maximum_matching(&g)
            } else {
                let limits = Limits {
                    restricted_max_vertices: max_vertices,
                    ..Limits::default()
                };
                max_restricted_matching_with(&g, kind, weighted, &limits)?
            };
            print(&result_json(&r));
        }
        Command::SolveClass { class, file } => {
            let g = read_graph(&file)?;
            let r = match class {
                Class::P4Free => mwam_p4free(&g)?,
                Class::TwoP3Free => mwam_2p3free(&g)?,
            };
            print(&result_json(&r));
        }
        Command::Recognize { property, file } => {
            let g = read_graph(&file)?;
            let (name, witness) = match property {
                Property::P4Free => (
                    "p4free",
                    match build_cotree(&g) {
                        Ok(_) => None,
                        Err(Error::NotCograph { witness }) => Some(witness.to_vec()),
                        Err(e) => return Err(e.into()),
                    },
                ),
                Property::TwoP3Free => ("2p3free", find_induced_2p3(&g).map(|w| w.to_vec())),
                Property::AllMaxAcyclic => (
                    "all-max-acyclic",
                    offending_component(&g, |s| s.is_tree() || s.is_odd_cycle()),
                ),
                Property::AllMaxInduced => (
                    "all-max-induced",
                    offending_component(&g, |s| matches!(s, ComponentShape::Star | ComponentShape::Triangle)),
                ),
            };
            let mut out = json!({
                "schema": JSON_SCHEMA,
                "property": name,
                "result": witness.is_none(),
            });
            if let Some(w) = witness {
                out["witness"] = json!(one_based(&w));
            }
            print(&out);
        }
        Command::Reduce { cnf, out, labels, prep } => {
            let f = match prepare(&cnf, &prep)? {
                Ok(f) => f,
                Err(verdict) => {
                    print(&verdict);
                    return Ok(0);
                }
            };
            let inst = build_reduction_with(&f, options(&prep))?;
            write(&out, &emit_graph(&inst.graph))?;
            write(&labels, &emit_labels(&inst))?;
            print(&json!({
                "schema": JSON_SCHEMA,
                "n_vertices": inst.graph.n(),
                "n_edges": inst.graph.edge_count(),
                "size_A": inst.side_a.len(),
            }));
        }
        Command::VerifyReduction { cnf, prep } => {
            let f = match prepare(&cnf, &prep)? {
                Ok(f) => f,
                Err(verdict) => {
                    print(&verdict);
                    return Ok(0);
                }
            };
            let inst = build_reduction_with(&f, options(&prep))?;
            let report = inspect_instance(&inst);
            let assignment = if inst.num_vars() <= MAX_ASSIGNMENT_VARS {
                Some(find_acyclic_assignment(&inst)?)
            } else {
                None
            };
            let mut out = json!({
                "schema": JSON_SCHEMA,
                "report": report,
                "all_passed": report.all_passed(),
                "acyclic_assignment_exists": assignment.as_ref().map(Option::is_some),
            });
            if let Some(Some(a)) = &assignment {
                out["assignment"] = json!(a);
            }
            print(&out);
            if let Some(c) = report.first_failure() {
                eprintln!("acmatch: verification failed ({}): {}", c.claim, c.detail);
                return Ok(4);
            }
        }
        Command::Gen {
            model,
            n,
            seed,
            p,
            weights,
            out,
        } => {
            let spec = GenSpec {
                p,
                weights,
                ..GenSpec::new(model, n, seed)
            };
            let text = emit_graph(&generate(&spec)?);
            match out {
                Some(path) => write(&path, &text)?,
                None => emit(&text),
            }
        }
        Command::Selftest { seed, quick } => {
            let config = SelftestConfig {
                seed,
                sizes: if quick { SuiteSizes::quick() } else { SuiteSizes::full() },
            };
            let report = run_selftest(&config);
            emit(&format!("{}\n", report.to_json()));
            if !report.all_passed() {
                return Ok(1);
            }
        }
    }
    Ok(0)
}

fn offending_component(g: &Graph, ok: impl Fn(ComponentShape) -> bool) -> Option<Vec<usize>> {
    component_shapes(g)
        .into_iter()
        .find(|(_, s)| !ok(*s))
        .map(|(c, _)| c)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            if let Some(body) = f.body {
                print(&body);
            }
            eprintln!("acmatch: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
