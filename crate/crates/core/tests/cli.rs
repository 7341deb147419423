use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use acyclic_matching::io::{parse_graph, parse_labels};
use acyclic_matching::Graph;
use serde_json::Value;

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path
}

fn acmatch(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_acmatch")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

const P4: &str = "p edge 4 3\ne 1 2\ne 2 3\ne 3 4\n";
const C4: &str = "p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 1 4\n";
const XOR: &str = "p cnf 2 2\n1 2 0\n-1 -2 0\n";

#[test]
fn solve_acyclic_on_p4() {
    let out = acmatch(&["solve", "--kind", "acyclic", scratch("p4.g", P4).to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["value"], 2);
    assert_eq!(v["kind"], "acyclic");
    assert_eq!(v["edges"], serde_json::json!([[1, 2], [3, 4]]));
    assert_eq!(v["schema"], "acyclic-matching/1");
}

#[test]
fn every_kind_is_accepted() {
    let file = scratch("c4-kinds.g", C4);
    for (kind, value) in [("matching", 2), ("induced", 1), ("acyclic", 1), ("unique", 1)] {
        let out = acmatch(&["solve", "--kind", kind, "--weighted", file.to_str().unwrap()]);
        assert_eq!(json(&out)["value"], value, "{kind}");
    }
}

#[test]
fn recognize_all_max_acyclic_on_c4() {
    let out = acmatch(&["recognize", "--property", "all-max-acyclic", scratch("c4.g", C4).to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["result"], false);
    assert_eq!(v["witness"], serde_json::json!([1, 2, 3, 4]));
    let out = acmatch(&["recognize", "--property", "2p3free", scratch("c4b.g", C4).to_str().unwrap()]);
    assert_eq!(json(&out)["result"], true);
}

#[test]
fn class_violation_exits_3_with_witness() {
    let two_p3 = "p edge 6 4\ne 1 2\ne 2 3\ne 4 5\ne 5 6\n";
    let out = acmatch(&["solve-class", "--class", "2p3free", scratch("2p3.g", two_p3).to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json(&out)["witness"], serde_json::json!([1, 2, 3, 4, 5, 6]));
    let out = acmatch(&["solve-class", "--class", "p4free", scratch("p4c.g", P4).to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    let out = acmatch(&["solve-class", "--class", "p4free", scratch("c4c.g", C4).to_str().unwrap()]);
    assert_eq!(json(&out)["value"], 1);
}

#[test]
fn parse_errors_exit_2() {
    let out = acmatch(&["solve", "--kind", "matching", scratch("loop.g", "p edge 2 1\ne 1 1\n").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    let out = acmatch(&["solve", "--kind", "matching", "/nonexistent/graph"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn size_guard_exits_5() {
    let big = acyclic_matching::io::emit_graph(&Graph::cycle(30));
    let file = scratch("c30.g", &big);
    let out = acmatch(&["solve", "--kind", "acyclic", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(5));
    let out = acmatch(&["solve", "--kind", "acyclic", "--max-vertices", "30", file.to_str().unwrap()]);
    // all 15 edges would cover the whole cycle
    assert_eq!(json(&out)["value"], 14);
}

#[test]
fn verify_reduction_reports_claims() {
    let out = acmatch(&["verify-reduction", scratch("xor.cnf", XOR).to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["report"]["matching_number"], 32);
    assert_eq!(v["all_passed"], true);
    assert_eq!(v["acyclic_assignment_exists"], true);

    let unsat = "p cnf 2 4\n1 2 0\n-1 2 0\n1 -2 0\n-1 -2 0\n";
    let v = json(&acmatch(&["verify-reduction", scratch("unsat.cnf", unsat).to_str().unwrap()]));
    assert_eq!(v["acyclic_assignment_exists"], false);

    let pure = "p cnf 2 1\n1 2 0\n";
    let out = acmatch(&["verify-reduction", scratch("pure.cnf", pure).to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let out = acmatch(&["verify-reduction", "--allow-pure", scratch("pure2.cnf", pure).to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let out = acmatch(&["verify-reduction", "--normalize", scratch("pure3.cnf", pure).to_str().unwrap()]);
    assert_eq!(json(&out)["verdict"], "satisfiable");
}

#[test]
fn reduce_writes_instance_and_labels() {
    let cnf = scratch("xor-r.cnf", XOR);
    let dir = cnf.parent().unwrap();
    let (g, l) = (dir.join("xor.g"), dir.join("xor.labels"));
    let out = acmatch(&[
        "reduce",
        cnf.to_str().unwrap(),
        "--out",
        g.to_str().unwrap(),
        "--labels",
        l.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!((v["n_vertices"].as_u64(), v["size_A"].as_u64()), (Some(72), Some(32)));
    let graph = parse_graph(&fs::read_to_string(&g).unwrap()).unwrap();
    assert_eq!(graph.n(), 72);
    let labels = parse_labels(&fs::read_to_string(&l).unwrap()).unwrap();
    assert_eq!(labels.labels.len(), 72);
    assert_eq!(labels.side_a.len(), 32);
}

#[test]
fn gen_is_reproducible() {
    let a = acmatch(&["gen", "--model", "gnp", "--n", "9", "--seed", "5"]);
    let b = acmatch(&["gen", "--model", "gnp", "--n", "9", "--seed", "5"]);
    assert_eq!(a.stdout, b.stdout);
    let c5 = acmatch(&["gen", "--model", "cycle", "--n", "5"]);
    assert_eq!(parse_graph(&String::from_utf8(c5.stdout).unwrap()).unwrap(), Graph::cycle(5));
    let bad = acmatch(&["gen", "--model", "petersen", "--n", "5"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn quick_selftest_is_byte_stable() {
    let a = acmatch(&["selftest", "--quick", "--seed", "3"]);
    let b = acmatch(&["selftest", "--quick", "--seed", "3"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["criteria"].as_array().unwrap().len(), 9);
}
