use jinv_cli::{
    AdmissibleOut, AtlasOut, BoundsOut, CharmapOut, CocenterOut, KacOut, PoincareOut, SteinbergOut,
};
use jinv_core::classify::{excluded_values, ClassificationRow, TripleClassification};
use jinv_core::JTuple;
use serde::de::DeserializeOwned;
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt::Debug;
use std::process::{Command, Output};

fn jinv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jinv")).args(args).output().expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = jinv(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

/// Parses the JSON a command printed and checks that re-emitting it gives
/// the same bytes.
fn parse_json<T: Serialize + DeserializeOwned + PartialEq + Debug>(args: &[&str]) -> T {
    let mut full = args.to_vec();
    full.push("--json");
    let text = stdout_of(&full);
    let value: T = serde_json::from_str(text.trim_end()).unwrap();
    assert_eq!(serde_json::to_string(&value).unwrap(), text.trim_end());
    value
}

#[test]
fn kac_json_is_exact() {
    assert_eq!(stdout_of(&["kac", "--group", "PGO", "--n", "4", "--json"]), "{\"r\":3,\"d\":[1,1,3],\"k\":[2,2,1]}\n");
}

#[test]
fn triple_example_rows() {
    let text = stdout_of(&["triple", "--ii", "1,2,2", "--anisotropic"]);
    let js: Vec<&str> = text.lines().map(|l| l.split("J = ").nth(1).unwrap().trim_end_matches(" *")).collect();
    assert_eq!(js, ["(1,2,1)", "(2,1,1)", "(2,1,1)"]);
}

#[test]
fn steinberg_a1() {
    let out: SteinbergOut = parse_json(&["steinberg", "--family", "A", "--rank", "1"]);
    let rhos: Vec<Vec<i64>> = out.entries.iter().map(|e| e.rho.0.clone()).collect();
    assert_eq!(rhos, vec![vec![0], vec![-1]]);
}

#[test]
fn exit_codes() {
    assert_eq!(jinv(&["kac", "--n", "4"]).status.code(), Some(2));
    assert_eq!(jinv(&["nonsense"]).status.code(), Some(2));
    assert_eq!(jinv(&["triple", "--ii", "1,2", "--anisotropic"]).status.code(), Some(2));
    let bad = jinv(&["steinberg", "--family", "D", "--rank", "1"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("rank"));
    let bad = jinv(&["triple", "--ii", "1,2,2", "--isotropic"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("inconsistent profile"));
    let bad = jinv(&["bounds", "--rank", "4", "--ii", "3,1,1"]);
    assert_eq!(bad.status.code(), Some(1));
    assert_eq!(jinv(&["bounds", "--rank", "4", "--ii", "3,1,1", "--unchecked"]).status.code(), Some(0));
    assert_eq!(jinv(&["steinberg", "--family", "D", "--rank", "5", "--cap", "100"]).status.code(), Some(1));
    assert_eq!(jinv(&["admissible", "--group", "SO", "--n", "8", "--p", "4"]).status.code(), Some(1));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["steinberg", "--family", "D", "--rank", "4", "--json"],
        vec!["steinberg", "--family", "B", "--rank", "3"],
        vec!["atlas", "--group", "SO", "--n", "12"],
    ] {
        assert_eq!(jinv(&args).stdout, jinv(&args).stdout, "{args:?}");
    }
}

#[test]
fn json_round_trips() {
    let k: KacOut = parse_json(&["kac", "--group", "SO", "--n", "12"]);
    assert_eq!(k.d, vec![1, 3, 5]);
    let a: AdmissibleOut = parse_json(&["admissible", "--group", "SO", "--n", "8"]);
    assert_eq!(a.tuples.len(), 6);
    let s: SteinbergOut = parse_json(&["steinberg", "--family", "D", "--rank", "4"]);
    assert_eq!(s.entries.len(), 192);
    let c: CharmapOut = parse_json(&["charmap", "--family", "D", "--rank", "4", "--lattice", "adjoint"]);
    assert_eq!((c.dim, c.degree_one_generators), (2, 2));
    let z: CocenterOut = parse_json(&["cocenter", "--family", "D", "--rank", "6"]);
    assert_eq!(z.invariant_factors, vec![2, 2]);
    let b: BoundsOut = parse_json(&["bounds", "--rank", "3", "--ii", "2,2,2"]);
    assert_eq!(b.common_index, 2);
    let p: PoincareOut = parse_json(&["poincare", "--group", "PGO", "--n", "4", "--j", "2,1,1"]);
    assert_eq!(p.coefficients, vec![1, 2, 2, 3, 3, 2, 2, 1]);
    let q: ClassificationRow = parse_json(&["classify-qf", "--dim", "8", "--ii-s", "0", "--anisotropic"]);
    assert_eq!(q.description, "Pf_3");
    let i: ClassificationRow = parse_json(&["classify-inv", "--degree", "6", "--ii", "0,1,1"]);
    assert_eq!(i.j, JTuple::from([1]));
    let t: TripleClassification = parse_json(&["triple", "--ii", "1,1,2", "--anisotropic"]);
    assert!(t.members.iter().all(|m| m.j == JTuple::from([1, 1, 1])));
    let _: AtlasOut = parse_json(&["atlas", "--group", "PGO", "--n", "4"]);
}

#[test]
fn atlas_agrees_with_excluded_values() {
    let atlas: AtlasOut = parse_json(&["atlas", "--group", "PGO", "--n", "4"]);
    assert_eq!(atlas.entries.len(), 18);
    let excluded: BTreeSet<JTuple> =
        atlas.entries.iter().filter(|e| e.status == "excluded").map(|e| e.j.clone()).collect();
    assert_eq!(excluded, excluded_values().into_iter().collect());
    assert_eq!(atlas.entries.iter().filter(|e| e.status == "occurs").count(), 15);
    let other: AtlasOut = parse_json(&["atlas", "--group", "SO", "--n", "8"]);
    assert!(other.entries.iter().all(|e| e.status == "admissible"));
}

#[test]
fn unsorted_triple_is_relabelled() {
    let out = jinv(&["triple", "--ii", "2,2,1", "--anisotropic"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("reordered"));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), stdout_of(&["triple", "--ii", "1,2,2", "--anisotropic"]));
}
