use serde_json::Value;
use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_graphcert"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin().args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut a = vec!["--json"];
    a.extend_from_slice(args);
    let o = run(&a);
    assert!(code(&o) == 0 || code(&o) == 2, "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn temp(name: &str, text: &str) -> String {
    let p: PathBuf = [env!("CARGO_TARGET_TMPDIR"), name].iter().collect();
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

const FIG_CIRCUIT: &str = "\
# ten vertices, sixteen edges, every degree even
10 16 simple
0 1
1 5
5 6
6 7
7 5
5 9
9 7
7 8
8 9
9 4
4 1
1 2
2 4
4 3
3 2
2 0
";

#[test]
fn envelope_fields() {
    let v = json(&["info", "fam:petersen"]);
    for key in ["command", "digest", "results", "witnesses", "caps_hit", "version"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["command"], "info");
    assert_eq!(v["digest"].as_str().unwrap().len(), 64);
    assert_eq!(v["results"]["n"], 10);
    assert_eq!(v["results"]["diameter"], 2);
    assert_eq!(v["results"]["bipartite"], false);
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        vec!["--json", "color", "--mode", "edge", "fam:petersen"],
        vec!["--json", "planar", "fam:complete_bipartite:3,3"],
        vec!["--json", "aut", "fam:cycle:6"],
        vec!["degseq", "4,4,3,3,2,2"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(code(&a), 0);
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn file_stdin_and_family_inputs_share_a_digest() {
    let gen = run(&["gen", "cycle:5"]);
    assert_eq!(code(&gen), 0);
    let text = String::from_utf8(gen.stdout).unwrap();
    assert!(text.starts_with("5 5 simple\n"));
    let path = temp("c5.el", &text);
    let d1 = json(&["info", &path])["digest"].clone();
    let o = run_stdin(&["--json", "info", "-"], &text);
    let d2 = serde_json::from_slice::<Value>(&o.stdout).unwrap()["digest"].clone();
    let d3 = json(&["info", "fam:cycle:5"])["digest"].clone();
    assert_eq!(d1, d2);
    assert_eq!(d1, d3);
}

#[test]
fn exit_codes() {
    // negative verdicts are still exit 0
    let o = run(&["--json", "degseq", "--class", "simple", "3,3,3,1"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["results"]["graphical"], false);
    assert_eq!(v["results"]["erdos_gallai"]["failing_k"], 2);
    assert!(v["results"]["violated_condition"].is_string());
    // usage and input errors
    assert_eq!(code(&run(&["frobnicate"])), 1);
    assert_eq!(code(&run(&["info", "/no/such/file"])), 1);
    assert_eq!(code(&run(&["info", &temp("bad.el", "3 1 simple\n0 7\n")])), 1);
    assert_eq!(code(&run(&["info", "fam:wheel:2"])), 1);
    assert_eq!(code(&run(&["transform", "fam:path:3", "--op", "delete-edge", "--at", "0,2"])), 1);
    assert_eq!(code(&run(&["--help"])), 0);
    // caps
    let capped = run(&["--json", "--cap-search", "5", "iso", "fam:cycle:8", "fam:cycle:8"]);
    assert_eq!(code(&capped), 2);
    let v: Value = serde_json::from_slice(&capped.stdout).unwrap();
    assert_eq!(v["caps_hit"].as_array().unwrap().len(), 1);
}

#[test]
fn usage_errors_name_the_problem() {
    let o = run(&["info", &temp("bad2.el", "3 2 simple\n0 1\n")]);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn petersen_edge_coloring_uses_four_colors() {
    let path = temp("petersen.el", &String::from_utf8(run(&["gen", "petersen"]).stdout).unwrap());
    let v = json(&["color", "--mode", "edge", "--alg", "vizing", &path]);
    assert_eq!(v["results"]["colors"], 4);
    assert_eq!(v["results"]["proper"], true);
    let exact = json(&["color", "--mode", "edge", "--alg", "exact", &path]);
    assert_eq!(exact["results"]["chromatic_index"], 4);
    assert_eq!(exact["results"]["class"], "class 2");
    let dot = run(&["color", "--mode", "edge", "--dot", &path]);
    let text = String::from_utf8(dot.stdout).unwrap();
    assert!(text.starts_with("graph G {"));
    assert_eq!(text.matches(" -- ").count(), 15);
    assert_eq!(text.matches("color=").count(), 15);
}

#[test]
fn euler_circuit_report() {
    let path = temp("circuit.el", FIG_CIRCUIT);
    let v = json(&["walk", "--euler", &path]);
    assert_eq!(v["results"]["euler"], "circuit");
    assert_eq!(v["results"]["trail_length"], 16);
    assert_eq!(v["results"]["fleury_admissible"], true);
    assert_eq!(v["witnesses"]["trail"].as_array().unwrap().len(), 17);
}

#[test]
fn walk_hamilton_and_tsp() {
    let v = json(&["walk", "--hamilton", "--toughness", "fam:petersen"]);
    assert_eq!(v["results"]["hamiltonian"], false);
    assert_eq!(v["results"]["traceable"], true);
    let w = temp("w.txt", "4\n0 1 9 1\n1 0 1 9\n9 1 0 1\n1 9 1 0\n");
    let t = json(&["walk", "--tsp", &w]);
    assert_eq!(t["results"]["tour_length"], 4);
    let bare = temp("w2.txt", "0 1 9 1\n1 0 1 9\n9 1 0 1\n1 9 1 0\n");
    assert_eq!(json(&["walk", "--tsp", &bare])["results"]["tour_length"], 4);
}

#[test]
fn trees_subcommand() {
    let o = run(&["trees", "--prufer-decode", "10,7,5,8,2,3,8,2"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.starts_with("10 9 simple"));
    let v = json(&["trees", "--prufer-decode", "10,7,5,8,2,3,8,2"]);
    assert_eq!(v["results"]["reencodes"], true);
    assert_eq!(String::from_utf8(run(&["trees", "--count", "fam:complete:6"]).stdout).unwrap(), "1296\n");
    assert_eq!(String::from_utf8(run(&["trees", "--prufer-encode", "fam:star:4"]).stdout).unwrap(), "1,1,1\n");
    assert_eq!(json(&["trees", "fam:petersen"])["results"]["spanning_trees"], "2000");
}

#[test]
fn connectivity_certificates() {
    let v = json(&["connect", "fam:petersen", "--menger", "0,2"]);
    assert_eq!(v["results"]["kappa"], 3);
    assert_eq!(v["results"]["lambda"], 3);
    assert_eq!(v["results"]["disjoint_paths"], 3);
    assert_eq!(v["results"]["cut_size"], 3);
    assert_eq!(v["results"]["paths_verified"], true);
    assert_eq!(v["results"]["cut_separates"], true);
    assert!(v["witnesses"]["menger"].is_object());
}

#[test]
fn matching_inputs() {
    let v = json(&["match", "fam:sylvester"]);
    assert_eq!(v["results"]["perfect"], false);
    assert!(v["results"]["deficiency"].as_u64().unwrap() > 0);
    let f = json(&["match", "fam:complete:5", "--factor", "two_even_regular", "--arboricity"]);
    assert_eq!(f["results"]["factorization_verified"], true);
    assert_eq!(f["results"]["arboricity"], 3);
    let p = temp("poset.txt", "5\n0 1\n1 2\n0 3\n");
    let d = json(&["match", "--poset", &p]);
    assert_eq!(d["results"]["width"], 3);
    assert_eq!(d["results"]["chain_count"], 3);
    assert_eq!(d["results"]["verified"], true);
    let m = temp("m.txt", "1 1 0\n0 1 0\n0 1 0\n");
    let k = json(&["match", "--matrix", &m]);
    assert_eq!(k["results"]["independent_ones"], 2);
    assert_eq!(k["results"]["covering_lines"], 2);
}

#[test]
fn planar_reports() {
    let k5 = json(&["planar", "fam:complete:5"]);
    assert_eq!(k5["results"]["planar"], false);
    assert_eq!(k5["results"]["subdivision_verified"], true);
    assert_eq!(k5["results"]["minor_verified"], true);
    assert_eq!(k5["results"]["guy_bound"], 1);
    let outer = json(&["planar", "--outer", "fam:complete:4"]);
    assert_eq!(outer["results"]["planar"], true);
    assert_eq!(outer["results"]["outerplanar"], false);
    assert!(outer["witnesses"]["outer_minor"].is_object());
    assert_eq!(json(&["planar", "--genus", "complete:7"])["results"]["genus"], 1);
    let z = json(&["planar", "--zarankiewicz", "4,5"]);
    assert_eq!(z["results"]["crossings"], 8);
    assert_eq!(z["results"]["zarankiewicz_number"], 8);
    let rot = temp("k4.rot", "1 2 3\n0 3 2\n0 1 3\n0 2 1\n");
    let r = json(&["planar", "fam:complete:4", "--rotation", &rot]);
    assert_eq!(r["results"]["faces"], 4);
    assert_eq!(r["results"]["rotation_genus"], 0);
}

#[test]
fn transform_and_iso() {
    let line = run(&["transform", "fam:complete_bipartite:1,3", "--op", "line"]);
    let path = temp("line.el", &String::from_utf8(line.stdout).unwrap());
    let v = json(&["iso", &path, "fam:complete:3"]);
    assert_eq!(v["results"]["verified"], true);
    let hom = json(&["iso", "--hom", "fam:cycle:5", "fam:complete:2"]);
    assert!(hom["results"]["violated_condition"].is_string());
    let aut = json(&["aut", "fam:petersen"]);
    assert_eq!(aut["results"]["order"], 120);
    assert_eq!(aut["results"]["vertex_transitive"], true);
}

#[test]
fn degree_sequence_classes() {
    let pm = json(&["degseq", "--class", "pm", "3,3,3,3,3,3"]);
    assert_eq!(pm["results"]["verdict"], "realizable");
    assert_eq!(pm["results"]["verified"], true);
    assert_eq!(pm["witnesses"]["perfect_matching"].as_array().unwrap().len(), 3);
    let tree = json(&["degseq", "--class", "tree", "3,1,1,1"]);
    assert_eq!(tree["results"]["verdict"], "realizable");
    assert_eq!(run(&["degseq", "--class", "bogus", "1,1"]).status.code(), Some(1));
}
