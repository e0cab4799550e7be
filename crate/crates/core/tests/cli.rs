use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::process::Command;
use weilcount::counting::{atable_from_ctable, random_weil_invariant, CTable};

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_weilcount")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned())
}

#[test]
fn a_symbolic_prints_expression() {
    let (code, out) = run(&["a-symbolic", "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "C[2,1] + (g−1)·C[1,1]^2 + C[1,1]");
}

#[test]
fn euler_json() {
    let (code, out) = run(&["--json", "euler", "--n", "2", "--g", "2"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["euler"], "-3");
}

fn temp_file(name: &str, body: &str) -> String {
    let dir = std::env::temp_dir().join(format!("weilcount-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn pgn_rejects_table_breaking_positivity() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut c = CTable::with_pic0(2);
    c.insert(2, 1, random_weil_invariant(2, 2, 1, &mut rng)).unwrap();
    let a = atable_from_ctable(2, 2, &c).unwrap();
    let p = temp_file("a2.json", &a.to_json().to_string());
    assert_eq!(run(&["pgn", "--n", "2", "--g", "2", "--a-table", &p]).0, 1);
    assert_eq!(run(&["qgn", "--n", "2", "--g", "2", "--a-table", &p]).0, 1);
}

#[test]
fn pgn_without_table_is_usage_error() {
    assert_eq!(run(&["pgn", "--n", "1", "--g", "2"]).0, 0);
    assert_eq!(run(&["pgn", "--n", "2", "--g", "2"]).0, 2);
}

#[test]
fn eval_on_genus_two_curve() {
    let p = &temp_file("curve.json", r#"{"g": 2, "q": 2, "numerator": [1, 0, 3, 0, 4]}"#);
    assert_eq!(run(&["eval", "--curve", p, "--n", "1"]), (0, "8\n".into()));
    assert_eq!(run(&["eval", "--curve", p, "--n", "1", "--k", "2"]), (0, "64\n".into()));
}

#[test]
fn verify_suite_passes() {
    let (code, out) = run(&["verify", "delta", "--iterations", "5"]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["euler"]).0, 2);
    assert_eq!(run(&["verify", "no-such-suite"]).0, 2);
    assert_eq!(run(&["integrality"]).0, 2);
}

#[test]
fn domain_error_exits_two() {
    assert_eq!(run(&["euler", "--n", "3", "--g", "1"]).0, 2);
}
