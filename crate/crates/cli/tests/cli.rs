//! Runs the `bezier-rac` binary and checks files and exit codes.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use bezier_rac_cli::formats::{load, DrawingFile, EmbeddingFile};
use serde_json::Value;

fn fixture(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(rel)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bezier-rac")).args(args).output().unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn kite_draws_with_one_crossing() {
    let tmp = tempfile::tempdir().unwrap();
    let out = tmp.path().join("kite.json");
    let svg = tmp.path().join("kite.svg");
    let o = run(&["draw-rac", "--input", s(&fixture("embedding/kite.json")), "--output", s(&out), "--svg", s(&svg), "--verify"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let d: DrawingFile = load(&out).unwrap();
    assert_eq!(d.crossings.len(), 1);
    assert_eq!(d.edges.len(), 6);
    let text = std::fs::read_to_string(&svg).unwrap();
    assert_eq!(text.matches("<path").count(), 6);
}

#[test]
fn malformed_rotation_is_an_input_error() {
    let o = run(&["draw-rac", "--input", s(&fixture("embedding/bad-euler.json"))]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Euler"));
}

#[test]
fn generated_embeddings_verify_end_to_end() {
    let tmp = tempfile::tempdir().unwrap();
    let emb = tmp.path().join("g.json");
    let out = tmp.path().join("d.json");
    let o = run(&["gen", "--n", "40", "--crossing-fraction", "0.8", "--seed", "5", "--output", s(&emb)]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["draw-rac", "--input", s(&emb), "--output", s(&out), "--verify"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stdout));
    let o = run(&["verify", "--input", s(&out), "--mode", "rac", "--tol-angle", "1e-6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stdout).contains("verdict: pass"));
}

#[test]
fn generator_output_is_deterministic() {
    let a = run(&["gen", "--n", "25", "--seed", "9"]);
    let b = run(&["gen", "--n", "25", "--seed", "9"]);
    assert_eq!(a.stdout, b.stdout);
    let f: EmbeddingFile = serde_json::from_slice(&a.stdout).unwrap();
    f.to_embedding().unwrap();
    let planar = run(&["gen", "--n", "25", "--crossing-fraction", "0", "--seed", "9"]);
    let f: EmbeddingFile = serde_json::from_slice(&planar.stdout).unwrap();
    assert!(f.crossing_pairs.is_empty());
}

#[test]
fn star_draws_planar_and_reports_metrics() {
    let tmp = tempfile::tempdir().unwrap();
    let out = tmp.path().join("s.json");
    let report = tmp.path().join("r.json");
    let o = run(&["draw-planar", "--input", s(&fixture("jointbox/star-4.json")), "--output", s(&out), "--verify", "--report", s(&report)]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let r: Value = load(&report).unwrap();
    assert_eq!(r["passed"], true);
    assert!(r["max_curvature"].as_f64().unwrap() <= r["curvature_bound"].as_f64().unwrap());
    assert_eq!(r["min_angular_resolution"].as_array().unwrap().len(), 5);
}

#[test]
fn port_collision_is_an_input_error() {
    let o = run(&["draw-planar", "--input", s(&fixture("jointbox/port-collision.json"))]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("port"));
}

#[test]
fn verify_exit_codes() {
    let ok = run(&["verify", "--input", s(&fixture("drawing/right-angle.json"))]);
    assert_eq!(ok.status.code(), Some(0));
    let bad = run(&["verify", "--input", s(&fixture("drawing/corrupted.json"))]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stdout).contains("violations: "));
    let missing = run(&["verify", "--input", "/nonexistent/drawing.json"]);
    assert_eq!(missing.status.code(), Some(2));
    let usage = run(&["verify"]);
    assert_eq!(usage.status.code(), Some(2));
}

#[test]
fn planar_mode_rejects_a_declared_crossing() {
    let o = run(&["verify", "--input", s(&fixture("drawing/right-angle.json")), "--mode", "planar"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn render_marks_the_crossing() {
    let tmp = tempfile::tempdir().unwrap();
    let svg = tmp.path().join("r.svg");
    let o = run(&["render", "--input", s(&fixture("drawing/right-angle.json")), "--output", s(&svg)]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&svg).unwrap();
    assert!(text.contains("stroke=\"red\""));
    assert_eq!(text.matches("<path").count(), 2);
}

#[test]
fn fixtures_can_be_regenerated() {
    let o = run(&["gen", "--fixture", "wheel-8"]);
    assert_eq!(o.status.code(), Some(0));
    let got: Value = serde_json::from_slice(&o.stdout).unwrap();
    let want: Value = load(&fixture("jointbox/wheel-8.json")).unwrap();
    assert_eq!(got, want);
    assert_eq!(run(&["gen", "--fixture", "nope"]).status.code(), Some(2));
}
