use std::process::{Command, Output};

use qscheme_core::classifier::{mirror_label, CROSS_ARROWS, DRAWN_ARROWS};

const GOLDEN_DOT: &str = include_str!("golden/scheme.dot");

fn qscheme(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qscheme")).args(args).env_remove("QSCHEME_HARD_CAP").output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn list_contains_askey_wilson() {
    let out = qscheme(&["list"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.lines().any(|l| l.starts_with("1a\t1a\tAskey-Wilson")), "{text}");
    assert!(text.lines().count() >= 17);
}

#[test]
fn list_filters_by_node() {
    let out = qscheme(&["list", "--node", "4d"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 1);
    assert!(text.contains("little q-Laguerre"));

    let out = qscheme(&["list", "--node", "9z"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).is_empty());
}

#[test]
fn list_json_parses() {
    let out = qscheme(&["list", "--json"]);
    let rows: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 22);
}

#[test]
fn eval_bottom_family() {
    let out = qscheme(&["eval", "5b", "--q", "1/2", "--n", "2", "--x", "2"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let row = text.lines().find(|l| l.starts_with("2\t")).unwrap();
    assert_eq!(row, "2\tx^2 - 3/2 x + 1/2\t1/4\t0\t3/2");
}

#[test]
fn eval_degree_zero_is_one() {
    let out = qscheme(&["eval", "1a", "--n", "0"]);
    assert_eq!(code(&out), 0);
    let row = stdout(&out).lines().nth(2).unwrap().to_string();
    assert!(row.starts_with("0\t1\t"), "{row}");
}

#[test]
fn eval_first_recurrence_coefficient() {
    // A_0 = a + b for Al-Salam-Chihara in the variable x = z + 1/z
    let out = qscheme(&["eval", "3a", "--param", "a=2", "--param", "b=1/4", "--n", "1", "--json"]);
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["rows"][0]["A"], "9/4");
    assert_eq!(doc["rows"][1]["u"], "x - 9/4");
}

#[test]
fn eval_raw_vector() {
    let out = qscheme(&["eval", "--q", "1/2", "--a", "0,0,1", "--b", "1,1,0", "--d1", "1", "--n", "2"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).starts_with("# vector"));
}

#[test]
fn eval_rejects_bad_input() {
    for args in [
        &["eval", "1a", "--param", "z=1"][..],
        &["eval", "1a", "--param", "a=x"],
        &["eval", "nope"],
        &["eval", "q-racah", "--n", "5"],
        &["eval", "1a", "--n", "25"],
        &["eval", "1a", "--q", "1"],
    ] {
        let out = qscheme(args);
        assert_eq!(code(&out), 2, "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"), "{args:?}");
    }
}

#[test]
fn hard_cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_qscheme"))
        .args(["eval", "5a", "--n", "30"])
        .env("QSCHEME_HARD_CAP", "40")
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    let out = Command::new(env!("CARGO_BIN_EXE_qscheme"))
        .args(["eval", "5a", "--n", "3"])
        .env("QSCHEME_HARD_CAP", "2")
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&qscheme(&["frobnicate"])), 2);
    assert_eq!(code(&qscheme(&["verify", "nope"])), 2);
    assert_eq!(code(&qscheme(&["graph", "--format", "svg"])), 2);
}

#[test]
fn graph_dot_matches_golden() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scheme.dot");
    let out = qscheme(&["graph", "--format", "dot", "-o", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), GOLDEN_DOT);
    assert_eq!(stdout(&qscheme(&["graph"])), GOLDEN_DOT);
}

#[test]
fn golden_contains_transcribed_arrows() {
    assert!(GOLDEN_DOT.contains("// 34 nodes"));
    for (from, to) in DRAWN_ARROWS.iter().chain(CROSS_ARROWS.iter()) {
        for (f, t) in [(from.to_string(), to.to_string()), (mirror_label(from), mirror_label(to))] {
            assert!(GOLDEN_DOT.contains(&format!("\"{f}\" -> \"{t}\";")), "{f} -> {t}");
        }
    }
}

#[test]
fn graph_json_schema() {
    let a = qscheme(&["graph", "--format", "json"]);
    let b = qscheme(&["graph", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
    let doc: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(doc["nodes"].as_array().unwrap().len(), 34);
    assert_eq!(doc["unlisted"].as_array().unwrap().len(), 27);
    let arrows = doc["arrows"].as_array().unwrap();
    assert!(arrows.iter().all(|a| a.as_array().is_some_and(|p| p.len() == 2)));
}

#[test]
fn verify_charts_warns_and_passes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("charts.json");
    let out = qscheme(&["verify", "charts", "--json", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("PASS charts"));
    assert!(text.contains("row 5e"));
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc[0]["suite"], "charts");
    assert_eq!(doc[0]["warnings"].as_array().unwrap().len(), 3);
}

#[test]
fn verify_catalog_passes() {
    let out = qscheme(&["verify", "catalog", "--n-max", "6"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("PASS catalog (22 checks)"));
}

#[test]
fn verify_is_deterministic() {
    let run = || qscheme(&["verify", "recurrence", "--samples", "10", "--seed", "3", "--json", "-"]).stdout;
    assert_eq!(run(), run());
}

#[test]
fn verify_all_passes() {
    let out = qscheme(&["verify", "all", "--samples", "20"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(!stdout(&out).contains("FAIL"));
}

#[test]
fn verify_rejects_degree_above_cap() {
    assert_eq!(code(&qscheme(&["verify", "eigen", "--n-max", "99"])), 2);
}

#[test]
fn config_presets_parameters() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("config.json");
    std::fs::write(&path, r#"{"q": "1/3", "params": {"3a": {"a": "2", "b": "1/4"}}}"#).unwrap();
    let out = qscheme(&["--config", path.to_str().unwrap(), "eval", "3a", "--n", "1"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("q=1/3 a=2 b=1/4"), "{text}");
    assert!(text.contains("x - 9/4"));

    std::fs::write(&path, r#"{"bogus": 1}"#).unwrap();
    let out = qscheme(&["--config", path.to_str().unwrap(), "list"]);
    assert_eq!(code(&out), 2);
}
