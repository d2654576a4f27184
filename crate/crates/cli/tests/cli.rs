use std::path::PathBuf;
use std::process::{Command, Output};
use std::sync::Arc;

use gkm_core::cohomology::{make_generators, random_class};
use gkm_core::gkmgraph::build_g2_combinatorial;
use gkm_core::{BigInt, Class, LinearForm};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn gkm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gkm")).args(args).env_remove("GKM_SEED").output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn class_text(class: &Class) -> String {
    let mut s = serde_json::to_string_pretty(&class.to_json()).unwrap();
    s.push('\n');
    s
}

fn corrupted_graph_text() -> String {
    let g = build_g2_combinatorial();
    let label = LinearForm::new([1, 1, -2]).unwrap();
    let edge = (0..g.edges().len()).find(|&i| g.edges()[i].label != label).unwrap();
    let mut s = serde_json::to_string_pretty(&g.with_label(edge, label).to_json()).unwrap();
    s.push('\n');
    s
}

/// The shipped fixtures, regenerated from the library.
fn expected_fixtures() -> Vec<(&'static str, String)> {
    let g = Arc::new(build_g2_combinatorial());
    let gs = make_generators::<BigInt>(g.clone()).unwrap();
    let f = gs.f.clone().unwrap();
    let (_, r1) = random_class::<BigInt, _>(&g, 4, 4, &mut ChaCha8Rng::seed_from_u64(1)).unwrap();
    let (_, r2) = random_class::<BigInt, _>(&g, 5, 5, &mut ChaCha8Rng::seed_from_u64(2)).unwrap();
    vec![
        ("tau1.json", class_text(&gs.tau[0])),
        ("f.json", class_text(&f)),
        ("f_squared.json", class_text(&(&f * &f))),
        ("random_deg4.json", class_text(&r1)),
        ("random_deg5.json", class_text(&r2)),
        ("corrupted_g2_graph.json", corrupted_graph_text()),
    ]
}

#[test]
fn fixtures_are_current() {
    let bless = std::env::var_os("GKM_BLESS").is_some();
    for (name, text) in expected_fixtures() {
        if bless {
            std::fs::write(fixture(name), &text).unwrap();
        }
        let on_disk = std::fs::read_to_string(fixture(name)).unwrap_or_default();
        assert_eq!(on_disk, text, "fixture {name} is stale; rerun with GKM_BLESS=1");
    }
}

#[test]
fn graph_json_reports_isomorphism() {
    let out = gkm(&["graph", "--system", "g2", "--format", "json"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["isomorphic_to_generic"], Value::Bool(true));
    assert_eq!(v["vertices"].as_array().unwrap().len(), 12);
    assert_eq!(v["edges"].as_array().unwrap().len(), 36);
}

#[test]
fn graph_dot_edge_counts() {
    let a2 = stdout(&gkm(&["graph", "--system", "a2", "--format", "dot"]));
    assert_eq!(a2.matches(" -- ").count(), 9);
    let g2 = stdout(&gkm(&["graph", "--system", "g2", "--format", "dot"]));
    assert_eq!(g2.matches(" -- ").count(), 36);
}

fn hilbert_ranks(args: &[&str]) -> (bool, Vec<u64>) {
    let out = gkm(args);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = v.as_array().unwrap();
    assert!(rows.iter().all(|r| r["match"] == Value::Bool(true)));
    (out.status.success(), rows.iter().map(|r| r["graded_rank"].as_u64().unwrap()).collect())
}

#[test]
fn hilbert_tables() {
    let (ok, g2) = hilbert_ranks(&["hilbert", "--system", "g2", "--k-max", "8", "--format", "json"]);
    assert!(ok);
    assert_eq!(g2, [1, 5, 14, 30, 55, 91, 139, 199, 271]);
    let (ok, a2) = hilbert_ranks(&["hilbert", "--system", "a2", "--k-max", "3", "--format", "json"]);
    assert!(ok);
    assert_eq!(a2, [1, 5, 14, 29]);
    let (ok, single) = hilbert_ranks(&["hilbert", "--k-max", "0", "--format", "json"]);
    assert!(ok);
    assert_eq!(single, [1]);
}

#[test]
fn hilbert_text_has_one_row_per_degree() {
    let out = stdout(&gkm(&["hilbert", "--k-max", "0"]));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[1].split_whitespace().collect::<Vec<_>>(), ["0", "1", "1", "true"]);
}

#[test]
fn verify_passes_on_both_systems() {
    let g2 = gkm(&["verify", "--system", "g2", "--k-max", "8"]);
    assert!(g2.status.success(), "{}", stdout(&g2));
    assert!(!stdout(&g2).contains("FAIL"));
    let a2 = gkm(&["verify", "--system", "a2", "--k-max", "6"]);
    assert!(a2.status.success(), "{}", stdout(&a2));
}

#[test]
fn verify_fails_on_a_corrupted_graph() {
    let path = fixture("corrupted_g2_graph.json");
    let out = gkm(&["verify", "--graph-file", path.to_str().unwrap(), "--k-max", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("first failing item"));
    let graph = gkm(&["graph", "--graph-file", path.to_str().unwrap()]);
    assert_eq!(graph.status.code(), Some(2));
}

#[test]
fn check_fixtures() {
    for name in ["tau1.json", "f.json", "f_squared.json", "random_deg4.json", "random_deg5.json"] {
        let out = gkm(&["check", fixture(name).to_str().unwrap()]);
        assert!(out.status.success(), "{name}");
        assert_eq!(stdout(&out), "true\n");
    }
}

#[test]
fn check_reports_a_violation() {
    let dir = tempfile::tempdir().unwrap();
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(fixture("tau1.json")).unwrap()).unwrap();
    v["values"]["123:+"] = serde_json::json!([{"e": [1, 0, 0], "c": "7"}]);
    let path = dir.path().join("bad.json");
    std::fs::write(&path, v.to_string()).unwrap();
    let out = gkm(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).starts_with("Violation: edge 123:+ -- "));
    let reduce = gkm(&["reduce", path.to_str().unwrap()]);
    assert_eq!(reduce.status.code(), Some(1));
}

#[test]
fn reduce_f_squared_golden() {
    let out = gkm(&["reduce", fixture("f_squared.json").to_str().unwrap()]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let coeffs = v["coeffs"].as_object().unwrap();
    assert_eq!(coeffs.len(), 12);
    let nonzero: Vec<&String> =
        coeffs.iter().filter(|(_, c)| !c.as_array().unwrap().is_empty()).map(|(k, _)| k).collect();
    assert_eq!(nonzero, ["tau1^0 tau2^0 f^1"]);
    // e3(s) = (t1-t2)(t2-t3)(t3-t1) = -t1^2 t2 + t1^2 t3 + t1 t2^2 - t1 t3^2 - t2^2 t3 + t2 t3^2
    let text = stdout(&gkm(&["reduce", fixture("f_squared.json").to_str().unwrap(), "--format", "text"]));
    assert_eq!(text, "tau1^0 tau2^0 f^1: -t1^2*t2 + t1^2*t3 + t1*t2^2 - t1*t3^2 - t2^2*t3 + t2*t3^2\n");
}

#[test]
fn reduce_random_fixtures() {
    for name in ["random_deg4.json", "random_deg5.json", "tau1.json"] {
        let out = gkm(&["reduce", fixture(name).to_str().unwrap()]);
        assert!(out.status.success(), "{name}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn basis_listing() {
    let out = gkm(&["basis", "--system", "g2", "--format", "json"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["monomials"].as_array().unwrap().len(), 12);
    assert_eq!(v["generating_polynomial"], serde_json::json!([1, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 1]));
    assert_eq!(v["determinant_nonzero"], Value::Bool(true));
}

#[test]
fn generators_dump_seven_classes() {
    let v: Value = serde_json::from_str(&stdout(&gkm(&["generators"]))).unwrap();
    let names: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(names, ["f", "t1", "t2", "t3", "tau1", "tau2", "tau3"]);
    assert_eq!(
        v["tau1"],
        serde_json::from_str::<Value>(&std::fs::read_to_string(fixture("tau1.json")).unwrap()).unwrap()
    );
}

#[test]
fn input_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("junk.json");
    std::fs::write(&path, "{\"graph\":\"g2\"").unwrap();
    assert_eq!(gkm(&["check", path.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(gkm(&["check", "/nonexistent/class.json"]).status.code(), Some(2));
    assert_eq!(gkm(&["hilbert", "--format", "dot"]).status.code(), Some(2));
    assert_eq!(gkm(&["frobnicate"]).status.code(), Some(2));
    let a2_class = gkm(&["check", "--system", "a2", fixture("tau1.json").to_str().unwrap()]);
    assert_eq!(a2_class.status.code(), Some(2));
}

#[test]
fn output_is_deterministic_and_can_go_to_a_file() {
    let a = gkm(&["verify", "--k-max", "4", "--seed", "5"]);
    let b = gkm(&["verify", "--k-max", "4", "--seed", "5", "--jobs", "2"]);
    assert_eq!(a.stdout, b.stdout);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("graph.dot");
    let out = gkm(&["graph", "--format", "dot", "--output", path.to_str().unwrap()]);
    assert!(out.status.success() && out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(path).unwrap(), stdout(&gkm(&["graph", "--format", "dot"])));
}

#[test]
fn seed_environment_variable() {
    let run = |seed: &str| {
        Command::new(env!("CARGO_BIN_EXE_gkm")).args(["basis", "--seed", "1"]).env("GKM_SEED", seed).output().unwrap()
    };
    assert!(run("42").status.success());
    assert_eq!(run("forty-two").status.code(), Some(2));
}
