use std::path::Path;
use std::process::Command;

use serde_json::Value;
use spannerweave::cli::{run, EXIT_BOUND, EXIT_CONTRACT, EXIT_INPUT, EXIT_OK};
use spannerweave::io::parse_graph;
use spannerweave::treedec::parse_pace;

struct Outcome {
    code: i32,
    out: String,
    err: String,
}

fn sw(args: &[&str], stdin: &str) -> Outcome {
    let mut argv = vec!["spannerweave"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    Outcome { code, out: String::from_utf8(out).unwrap(), err: String::from_utf8(err).unwrap() }
}

fn json(o: &Outcome) -> Value {
    serde_json::from_str(&o.out).unwrap_or_else(|e| panic!("bad json ({e}): {}", o.out))
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn cycle_six_through_the_separator() {
    let g = sw(&["gen", "cycle", "6"], "");
    assert_eq!(g.code, EXIT_OK, "{}", g.err);
    let sep = sw(&["separator"], &g.out);
    assert_eq!(sep.code, EXIT_OK);
    assert_eq!(json(&sep)["radius"], 1);
}

#[test]
fn collective_spanner_on_a_planted_instance() {
    let g = sw(&["gen", "tree-spanner", "256", "5", "256", "--seed", "1"], "");
    assert_eq!(g.code, EXIT_OK);
    let s = sw(&["spanner", "--mode", "collective", "--k", "1", "--verify"], &g.out);
    assert_eq!(s.code, EXIT_OK, "{}", s.err);
    let v = json(&s);
    assert!(v["trees"].as_array().unwrap().len() <= 8);
    assert_eq!(v["bounds_hold"], true);
    assert!(v["report"]["max_surplus"].as_f64().unwrap() <= v["bounds"]["surplus"].as_f64().unwrap());
}

#[test]
fn sparse_edge_list_reingests() {
    let g = sw(&["gen", "connected", "40", "20", "--seed", "3"], "");
    let s = sw(&["spanner", "--mode", "sparse", "--format", "edgelist"], &g.out);
    assert_eq!(s.code, EXIT_OK);
    let host = parse_graph(&g.out).unwrap();
    let h = parse_graph(&s.out).unwrap();
    assert!(h.is_spanning_subgraph_of(&host) && h.is_connected());
    assert_eq!(sw(&["spanner", "--mode", "collective", "--format", "edgelist"], &g.out).code, EXIT_CONTRACT);
}

#[test]
fn dimacs_output_round_trips() {
    let a = sw(&["gen", "grid", "3", "4", "--format", "dimacs"], "");
    let b = sw(&["gen", "grid", "3", "4"], "");
    assert!(a.out.starts_with("p edge 12 17"));
    assert_eq!(parse_graph(&a.out).unwrap(), parse_graph(&b.out).unwrap());
}

#[test]
fn decompose_formats() {
    let g = sw(&["gen", "cycle", "12"], "").out;
    let j = json(&sw(&["decompose", "--k", "2"], &g));
    assert_eq!(j["k"], 2);
    assert!(!j["nodes"].as_array().unwrap().is_empty());
    assert!(sw(&["decompose", "--dot"], &g).out.starts_with("digraph"));
}

#[test]
fn exit_codes() {
    let bad = sw(&["separator"], "0 1\n1 x\n");
    assert_eq!(bad.code, EXIT_INPUT);
    assert!(bad.err.contains("line 2"), "{}", bad.err);
    assert_eq!(sw(&["separator"], "0 1\n2 3\n").code, EXIT_CONTRACT);
    assert_eq!(sw(&["separator", "--k", "5"], "0 1\n1 2\n").code, EXIT_CONTRACT);
    assert_eq!(sw(&["separator", "/no/such/file"], "").code, EXIT_INPUT);
    assert_eq!(sw(&["no-such-command"], "").code, EXIT_INPUT);
    assert_eq!(sw(&["--help"], "").code, EXIT_OK);
}

#[test]
fn verify_reports_and_trips_on_bounds() {
    let dir = tempfile::tempdir().unwrap();
    let sp = dir.path().join("h.txt");
    let g = sw(&["gen", "tree-spanner", "30", "3", "10", "--seed", "2", "--planted-spanner", p(&sp)], "");
    assert_eq!(g.code, EXIT_OK);
    let r = sw(&["verify", "--spanner", p(&sp)], &g.out);
    assert_eq!(r.code, EXIT_OK);
    let surplus = json(&r)["max_surplus"].as_u64().unwrap();
    assert!(surplus >= 1);
    let tight = (surplus - 1).to_string();
    assert_eq!(sw(&["verify", "--spanner", p(&sp), "--max-surplus", &tight], &g.out).code, EXIT_BOUND);
    let loose = surplus.to_string();
    assert_eq!(sw(&["verify", "--spanner", p(&sp), "--max-surplus", &loose], &g.out).code, EXIT_OK);
    assert_eq!(sw(&["verify", "--trees", p(&sp)], &g.out).code, EXIT_OK);
}

#[test]
fn decomposition_commands() {
    let dir = tempfile::tempdir().unwrap();
    let (g, h, td, cert) = (dir.path().join("g"), dir.path().join("h"), dir.path().join("td"), dir.path().join("c"));
    let out = sw(
        &["gen", "tw-spanner", "25", "2", "3", "15", "--seed", "9", "--planted-spanner", p(&h), "--planted-td", p(&td), "--certificate", p(&cert)],
        "",
    );
    assert_eq!(out.code, EXIT_OK, "{}", out.err);
    std::fs::write(&g, &out.out).unwrap();
    let c: Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    assert_eq!(c["stretch"], 3);

    let valid = sw(&["td-validate", p(&h), p(&td)], "");
    assert_eq!(valid.code, EXIT_OK);
    assert_eq!(json(&valid)["valid"], true);
    let m = json(&sw(&["td-metrics", p(&h), p(&td), "--k", "3"], ""));
    assert_eq!(m["k_breadth"], 0);
    assert!(m["width"].as_u64().unwrap() <= 2);

    let expanded = sw(&["td-expand", p(&h), p(&td), "--radius", "1"], "");
    assert_eq!(expanded.code, EXIT_OK);
    let e = parse_pace(&expanded.out).unwrap();
    assert_eq!(sw(&["td-validate", p(&h), "-"], &expanded.out).code, EXIT_OK);
    assert_eq!(e.num_bags(), parse_pace(&std::fs::read_to_string(&td).unwrap()).unwrap().num_bags());

    let lifted = sw(&["td-lift", p(&g), p(&h), p(&td), "--stretch", "3"], "");
    assert_eq!(lifted.code, EXIT_OK, "{}", lifted.err);
    assert_eq!(sw(&["td-validate", p(&g), "-"], &lifted.out).code, EXIT_OK);
    // the planted decomposition misses the extra edges of the host graph
    let invalid = sw(&["td-validate", p(&g), p(&td)], "");
    assert_eq!(invalid.code, EXIT_CONTRACT);
    assert_eq!(json(&invalid)["valid"], false);
}

#[test]
fn lift_names_the_offending_edge() {
    let dir = tempfile::tempdir().unwrap();
    let (g, h, td) = (dir.path().join("g"), dir.path().join("h"), dir.path().join("td"));
    std::fs::write(&g, "0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n").unwrap();
    std::fs::write(&h, "0 1\n1 2\n2 3\n3 4\n4 5\n").unwrap();
    std::fs::write(&td, "s td 5 2 6\nb 1 1 2\nb 2 2 3\nb 3 3 4\nb 4 4 5\nb 5 5 6\n1 2\n2 3\n3 4\n4 5\n").unwrap();
    let r = sw(&["td-lift", p(&g), p(&h), p(&td), "--stretch", "3"], "");
    assert_eq!(r.code, EXIT_CONTRACT);
    assert!(r.err.contains("(0, 5)"), "{}", r.err);
    assert_eq!(sw(&["td-lift", p(&g), p(&h), p(&td), "--stretch", "5"], "").code, EXIT_OK);
}

#[test]
fn pace_parse_errors_have_lines() {
    let dir = tempfile::tempdir().unwrap();
    let td = dir.path().join("td");
    std::fs::write(&td, "s td 1 2 2\nb 1 1 x\n").unwrap();
    let r = sw(&["td-validate", "-", p(&td)], "0 1\n");
    assert_eq!(r.code, EXIT_INPUT);
    assert!(r.err.contains("line 2"), "{}", r.err);
}

#[test]
fn binary_runs_with_thread_cap() {
    let out = Command::new(env!("CARGO_BIN_EXE_spannerweave"))
        .args(["gen", "chordal", "20", "--seed", "4"])
        .env("SPANNERWEAVE_THREADS", "1")
        .output()
        .unwrap();
    assert!(out.status.success());
    let g = parse_graph(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    assert_eq!(g.n(), 20);
    let bad = Command::new(env!("CARGO_BIN_EXE_spannerweave")).args(["--threads", "0", "gen", "cycle", "5"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_CONTRACT));
}

#[test]
fn generation_is_deterministic() {
    let a = sw(&["gen", "tw-spanner", "40", "2", "5", "20", "--seed", "12"], "");
    let b = sw(&["gen", "tw-spanner", "40", "2", "5", "20", "--seed", "12"], "");
    let c = sw(&["gen", "tw-spanner", "40", "2", "5", "20", "--seed", "13"], "");
    assert_eq!(a.out, b.out);
    assert_ne!(a.out, c.out);
}
