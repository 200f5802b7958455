//! End-to-end checks of the binary: worked examples, grammars, JSON
//! round-trips and exit codes.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tubings"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout)
        .unwrap()
        .trim_end()
        .to_string()
}

#[test]
fn multiply_simplex_worked_example() {
    let out = stdout(&[
        "multiply",
        "--algebra",
        "dsym",
        "--left",
        "n=2;{1}",
        "--right",
        "n=3;{1}{3}",
    ]);
    assert_eq!(
        out,
        "3 * n=5;{1}{2}{3}{5}\n4 * n=5;{1}{2}{4}{5}\n3 * n=5;{1}{3}{4}{5}"
    );
}

#[test]
fn enumerate_count_and_listing() {
    assert_eq!(
        stdout(&[
            "enumerate",
            "--family",
            "cycle",
            "--n",
            "4",
            "--rank",
            "vertices",
            "--count"
        ]),
        "20"
    );
    let all = stdout(&["enumerate", "--family", "edgeless", "--n", "3"]);
    assert_eq!(all.lines().count(), 7);
    assert!(all.lines().next().unwrap() == "n=3;");
}

#[test]
fn fvector_hexagon() {
    assert_eq!(
        stdout(&["fvector", "--family", "cycle", "--n", "3"]),
        "6 6 1"
    );
    assert_eq!(
        stdout(&["fvector", "--graph", "n=3;edges=(1-2,2-3,1-3)"]),
        "6 6 1"
    );
}

#[test]
fn convert_matrix() {
    assert_eq!(
        stdout(&["convert", "--from", "perm", "--to", "tubing", "--input", "2431"]),
        "n=4;{1,4}{1,3,4}{4}"
    );
    assert_eq!(
        stdout(&["convert", "--from", "perm", "--to", "tree", "--input", "2431"]),
        "((..)(.(..)))"
    );
    assert_eq!(
        stdout(&[
            "convert",
            "--from",
            "tubing",
            "--to",
            "perm",
            "--input",
            "n=4;{4}{1,4}{1,3,4}"
        ]),
        "2431"
    );
    assert_eq!(
        stdout(&[
            "convert",
            "--from",
            "partition",
            "--to",
            "tubing",
            "--input",
            "({1,2,4},{3})"
        ]),
        "n=4;{1,2,4}"
    );
    assert_eq!(
        stdout(&[
            "convert",
            "--from",
            "tree",
            "--to",
            "tubing",
            "--input",
            "(.(.(..)))"
        ]),
        "n=3;{2,3}{3}"
    );
    assert_eq!(
        stdout(&[
            "convert",
            "--from",
            "tubing",
            "--to",
            "tree",
            "--input",
            "n=3;{2,3}{3}"
        ]),
        "(.(.(..)))"
    );
}

#[test]
fn project_tonks_chain() {
    assert_eq!(
        stdout(&[
            "project",
            "--map",
            "tonks-p",
            "--input",
            "n=4;{4}{1,4}{1,3,4}"
        ]),
        "n=4;{1}{3,4}{4}"
    );
    // Factoring through the cycle gives the same final answer.
    let mid = stdout(&[
        "project",
        "--map",
        "tonks-c",
        "--input",
        "n=4;{4}{1,4}{1,3,4}",
    ]);
    let fin = stdout(&["project", "--map", "tonks-w", "--input", &mid]);
    assert_eq!(fin, "n=4;{1}{3,4}{4}");
}

#[test]
fn verify_pass_and_json() {
    let out = stdout(&["verify", "--property", "tonks-factorization", "--n", "4"]);
    assert!(out.contains("pass"), "{out}");
    let js = stdout(&["verify", "--property", "counting", "--n", "5", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&js).unwrap();
    assert_eq!(v["pass"], serde_json::Value::Bool(true));
    assert!(v["cases"].as_u64().unwrap() > 0);
}

#[test]
fn json_round_trip_and_determinism() {
    let args = [
        "multiply",
        "--algebra",
        "wsym",
        "--left",
        "n=2;{1}",
        "--right",
        "n=3;{1}{1,2}",
        "--json",
    ];
    let a = stdout(&args);
    let b = stdout(&args);
    assert_eq!(a, b, "output is deterministic");
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["algebra"], "wsym");
    assert_eq!(v["degree"], 5);
    let terms = v["terms"].as_array().unwrap();
    let total: i64 = terms
        .iter()
        .map(|t| t["coeff"].as_str().unwrap().parse::<i64>().unwrap())
        .sum();
    assert_eq!(total, 10, "coefficient sum over (2,3) shuffles");
    // Every term re-parses as a basis element of the algebra: feed one back.
    let first = terms[0]["basis"].as_str().unwrap();
    let echoed = stdout(&[
        "multiply",
        "--algebra",
        "wsym",
        "--left",
        first,
        "--right",
        "n=1;",
    ]);
    assert!(!echoed.is_empty());
}

#[test]
fn null_face_grammar() {
    let out = stdout(&[
        "multiply",
        "--algebra",
        "dsym-tilde",
        "--left",
        "n=2;{1}",
        "--right",
        "1",
    ]);
    assert_eq!(out, "1 * null(2)");
    let cop = stdout(&["coproduct", "--algebra", "dsym-tilde", "--input", "null(2)"]);
    assert_eq!(
        cop,
        "1 * 1 (x) null(2)\n1 * null(1) (x) null(1)\n1 * null(2) (x) 1"
    );
}

#[test]
fn out_file_option() {
    let dir = std::env::temp_dir().join("tubings-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("fvector.txt");
    let _ = stdout(&[
        "fvector",
        "--family",
        "path",
        "--n",
        "3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(std::fs::read_to_string(&path).unwrap().trim(), "5 5 1");
}

#[test]
fn env_var_sets_json_default() {
    let out = Command::new(env!("CARGO_BIN_EXE_tubings"))
        .env("TUBINGS_OUTPUT", "json")
        .args(["fvector", "--family", "path", "--n", "3"])
        .output()
        .unwrap();
    let v: serde_json::Value =
        serde_json::from_slice(&out.stdout).expect("env var switches to JSON");
    assert_eq!(v["f_vector"], serde_json::json!([5, 5, 1]));
}

#[test]
fn exit_codes() {
    // Usage errors: 64.
    assert_eq!(
        run(&["enumerate", "--family", "cycle"]).status.code(),
        Some(64)
    );
    assert_eq!(run(&["bogus"]).status.code(), Some(64));
    // Domain errors: 1.
    let bad = run(&[
        "multiply",
        "--algebra",
        "ssym",
        "--left",
        "n=3;{1}",
        "--right",
        "n=1;",
    ]);
    assert_eq!(bad.status.code(), Some(1));
    let invalid = run(&["enumerate", "--graph", "n=3;edges=(1-5)"]);
    assert_eq!(invalid.status.code(), Some(1));
    // Success: 0.
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
