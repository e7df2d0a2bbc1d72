//! End-to-end tests that drive the compiled binary.

use std::process::{Command, Output};

fn bicx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bicx"))
        .args(args)
        .env_remove("BICX_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf8 stdout")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf8 stderr")
}

#[test]
fn eval_prints_cartesian_form() {
    let out = bicx(&["eval", "(1+i2)*(1-i2)"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "2\n");
    assert_eq!(stdout(&bicx(&["eval", "e1*e2"])), "0\n");
    assert_eq!(stdout(&bicx(&["eval", "j1^2"])), "1\n");
    assert_eq!(stdout(&bicx(&["eval", "inv(i2)"])), "-i2\n");
    assert_eq!(stdout(&bicx(&["eval", "1/2 + i1 - 2*j1"])), "1/2 + i1 - 2*j1\n");
}

#[test]
fn eval_display_transforms() {
    let out = bicx(&["eval", "idem(1+2*i1+3*i2+4*j1)"]);
    assert_eq!(stdout(&out), "(5 - i1)*e1 + (-3 + 5*i1)*e2\n");
    let out = bicx(&["eval", "vec(1+2*i1+3*i2+4*j1)"]);
    assert_eq!(stdout(&out), "(1, 2, 3, 4)\n");
}

#[test]
fn eval_float_mode() {
    let out = bicx(&["--mode", "float", "eval", "1/2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "0.5\n");
    let out = bicx(&["--mode", "float", "eval", "9^999"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("overflow"));
}

#[test]
fn eval_json_format() {
    let out = bicx(&["--format", "json", "eval", "1+2*i1"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json");
    assert_eq!(value["form"], "cartesian");
    assert_eq!(value["value"], "1 + 2*i1");
    assert_eq!(value["coords"][1], "2");
}

#[test]
fn eval_errors_and_exit_codes() {
    let out = bicx(&["eval", "inv(e1)"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("not invertible"));
    let out = bicx(&["eval", "1+"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("byte 2"));
    let out = bicx(&["eval", "1 / 2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = bicx(&["nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn conj_applies_one_conjugation() {
    let out = bicx(&["conj", "dag3", "2+3*i1-i2"]);
    assert_eq!(stdout(&out), "2 - 3*i1 + i2\n");
    let out = bicx(&["conj", "DAG1", "i2"]);
    assert_eq!(stdout(&out), "-i2\n");
    let out = bicx(&["conj", "dag9", "i2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("pdag7"));
}

#[test]
fn inverse_routes_agree() {
    for kind in ["idempotent", "full", "sub123", "sub345", "sub367"] {
        let out = bicx(&["inverse", "--kind", kind, "1+i1"]);
        assert_eq!(out.status.code(), Some(0), "kind {kind}");
        assert_eq!(stdout(&out), "1/2 - 1/2*i1\n", "kind {kind}");
        let out = bicx(&["inverse", "--kind", kind, "e1"]);
        assert_eq!(out.status.code(), Some(1), "kind {kind}");
    }
}

#[test]
fn roots_lists_all_square_roots() {
    let out = bicx(&["roots", "--", "-1"]);
    assert_eq!(stdout(&out), "i1\ni2\n-i2\n-i1\n");
    let out = bicx(&["roots", "1"]);
    assert_eq!(stdout(&out), "1\nj1\n-j1\n-1\n");
    let out = bicx(&["roots", "--mode", "float", "4"]);
    assert_eq!(out.status.code(), Some(1));
    let out = bicx(&["roots", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("irrational"));
}

#[test]
fn reflect_across_axis_and_hyperplane() {
    let out = bicx(&["reflect", "--axis", "j1", "1+2*i1+3*i2+4*j1"]);
    assert_eq!(stdout(&out), "(1, 2, 3, -4)\n");
    let out = bicx(&["reflect", "--normal", "0,1,1,0", "1+2*i1+3*i2+4*j1"]);
    assert_eq!(stdout(&out), "(1, -3, -2, 4)\n");
    let out = bicx(&["reflect", "--normal", "0,1,-1,0", "1+2*i1+3*i2+4*j1"]);
    assert_eq!(stdout(&out), "(1, 3, 2, 4)\n");
    let out = bicx(&["reflect", "--normal", "0,0,0,0", "i1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = bicx(&["reflect", "i1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn table_renders_byte_exact_csv() {
    let expected = "\
,dag0,dag1,dag2,dag3,dag4,dag5,pdag6,pdag7
dag0,dag0,dag1,dag2,dag3,dag4,dag5,pdag6,pdag7
dag1,dag1,dag0,dag3,dag2,pdag6,pdag7,dag4,dag5
dag2,dag2,dag3,dag0,dag1,pdag7,pdag6,dag5,dag4
dag3,dag3,dag2,dag1,dag0,dag5,dag4,pdag7,pdag6
dag4,dag4,pdag7,pdag6,dag5,dag0,dag3,dag2,dag1
dag5,dag5,pdag6,pdag7,dag4,dag3,dag0,dag1,dag2
pdag6,pdag6,dag5,dag4,pdag7,dag1,dag2,dag3,dag0
pdag7,pdag7,dag4,dag5,pdag6,dag2,dag1,dag0,dag3
";
    let out = bicx(&["table", "--which", "conj", "--format", "csv"]);
    assert_eq!(stdout(&out), expected);
}

#[test]
fn table_markdown_and_json() {
    let out = bicx(&["table", "--which", "d8", "--format", "md"]);
    let text = stdout(&out);
    assert!(text.starts_with("|  | Id | x | a2x | a2 | a3x | ax | a | a3 |\n"));
    assert_eq!(text.lines().count(), 10);
    let out = bicx(&["table", "--which", "d8", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json");
    assert_eq!(value["order"][6], "a");
    assert_eq!(value["table"][1][6], "a3x");
    // Identical invocations produce identical bytes.
    let again = bicx(&["table", "--which", "d8", "--format", "json"]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn subgroups_lists_ten_for_each_group() {
    let out = bicx(&["subgroups"]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 10);
    assert_eq!(lines[0], "{dag0}");
    assert_eq!(lines[9], "{dag0, dag1, dag2, dag3, dag4, dag5, pdag6, pdag7}");
    assert!(lines.contains(&"{dag0, dag3, pdag6, pdag7}"));
    let out = bicx(&["subgroups", "--which", "d8"]);
    assert_eq!(stdout(&out).lines().count(), 10);
}

#[test]
fn verify_single_check_passes() {
    for name in ["cayley-table", "d8-isomorphism", "square-roots-of-minus-one"] {
        let out = bicx(&["verify", "--theorem", name]);
        assert_eq!(out.status.code(), Some(0), "{name}: {}", stderr(&out));
        assert!(stdout(&out).contains(&format!("PASS {name}")));
    }
    let out = bicx(&["verify", "--theorem", "not-a-check"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("cayley-table"));
}

#[test]
fn verify_all_reports_the_known_failures() {
    let out = bicx(&["verify", "--all", "--samples", "50"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    let failing: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("FAIL "))
        .map(|l| &l[5..])
        .collect();
    assert_eq!(failing, ["inverse-formulas", "conjugate-products-real"]);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS ")).count(), 12);
    assert!(text.contains("12 passed, 2 failed"));
    assert!(stderr(&out).contains("inverse-formulas"));
}

#[test]
fn verify_json_format() {
    let out = bicx(&["verify", "--theorem", "group-axioms", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json");
    assert_eq!(value["failed"], 0);
    assert_eq!(value["checks"][0]["name"], "group-axioms");
    assert_eq!(value["checks"][0]["passed"], true);
}

#[test]
fn verify_seed_env_is_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_bicx"))
        .args(["verify", "--theorem", "idempotent-agreement", "--samples", "25"])
        .env("BICX_SEED", "12345")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0));
    let out = Command::new(env!("CARGO_BIN_EXE_bicx"))
        .args(["verify", "--theorem", "idempotent-agreement"])
        .env("BICX_SEED", "not-a-number")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unsupported_formats_are_usage_errors() {
    let out = bicx(&["eval", "--format", "csv", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = bicx(&["verify", "--theorem", "cayley-table", "--format", "md"]);
    assert_eq!(out.status.code(), Some(2));
}
