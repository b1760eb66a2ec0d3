use std::path::Path;
use std::process::{Command, Output};

const EXAMPLE: &str = "x1*x3, x2*x3, x1*x4, x2*x4, x1*x5, x2*x5";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lcmlattice")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn enumerate_writes_dag() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("k4");
    let o = run(&["enumerate", "--atoms", "4", "--out", path(&out)]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("50 lattices"));
    assert!(out.join("dag.json").exists());

    let streamed = dir.path().join("k3");
    let o = run(&["enumerate", "--atoms", "3", "--out", path(&streamed), "--stream", "--jobs", "2"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("4 lattices"));
}

#[test]
fn betti_and_invariants_of_an_ideal() {
    let o = run(&["betti", "--ideal", EXAMPLE]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("pdim S/I = 4"));

    let o = run(&["betti", "--ideal", EXAMPLE, "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["projective_dimension"], 4);

    let o = run(&["invariants", "--ideal", "x1*x2, x2*x3"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["cardinality"], 4);
    assert_eq!(v["pdim_quotient"], 2);
}

#[test]
fn sdepth_prints_certificate() {
    let o = run(&["sdepth", "--ideal", EXAMPLE, "--quotient", "--certificate"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("sdepth S/I = 2"), "{text}");
    assert!(text.contains("*K["), "{text}");
}

#[test]
fn verify_ideal_exit_codes() {
    let o = run(&["verify-ideal", "--ideal", "x1*x2, x2*x3, x3*x4"]);
    assert_eq!(o.status.code(), Some(0));
    // six generators: the broken equality is reported without failing
    let o = run(&["verify-ideal", "--ideal", EXAMPLE]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!((v["depth"].as_u64(), v["sdepth_quotient"].as_u64()), (Some(1), Some(2)));
    assert!(String::from_utf8_lossy(&o.stderr).contains("more than five generators"));
}

#[test]
fn bad_input_exits_with_two() {
    assert_eq!(run(&["verify-ideal", "--ideal", "x1*"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--atoms", "9"]).status.code(), Some(2));
    assert_eq!(run(&["betti", "--lattice", "/nonexistent.json"]).status.code(), Some(2));
}

#[test]
fn verify_resume_and_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("run");
    let o = run(&["verify", "--atoms", "4", "--out", path(&out)]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("PASS\n"));
    let o = run(&["verify", "--atoms", "4", "--resume", path(&out)]);
    assert_eq!(o.status.code(), Some(0));

    let o = run(&["report", "--in", path(&out), "--format", "csv"]);
    assert!(o.status.success());
    let csv = std::fs::read_to_string(out.join("report.csv")).unwrap();
    assert_eq!(csv.lines().count(), 51);
    assert!(csv.starts_with("No.,|L|,pdim S/I,spdim S/I,pdim I,spdim I,Length,dim,Breadth"));

    let o = run(&["report", "--in", path(&out), "--format", "csv"]);
    assert!(o.status.success());
    assert_eq!(std::fs::read_to_string(out.join("report.csv")).unwrap(), csv);

    let json_dir = dir.path().join("json");
    let o = run(&["report", "--in", path(&out), "--format", "json", "--out", path(&json_dir)]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(json_dir.join("report.json")).unwrap()).unwrap();
    assert!(v.is_object() || v.is_array());
}

#[test]
fn verify_exhaustive_k3_report_has_four_rows() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["verify", "--atoms", "3", "--exhaustive", "--out", path(dir.path())]);
    assert_eq!(o.status.code(), Some(0));
    run(&["report", "--in", path(dir.path())]);
    let csv = std::fs::read_to_string(dir.path().join("report.csv")).unwrap();
    assert_eq!(csv.lines().count(), 5);
}
