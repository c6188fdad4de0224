use nilcoh::catalog;
use nilcoh::cli::run_cli;
use serde_json::Value;

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["nilcoh"];
    full.extend_from_slice(args);
    let out = run_cli(full);
    (out.code, serde_json::from_str(&out.stdout).expect("stdout is JSON"))
}

#[test]
fn betti_torus3_text() {
    let out = run_cli(["nilcoh", "betti", "--catalog", "torus3", "--format", "text"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("betti: 1,6,15,20,15,6,1"));
}

#[test]
fn verdict_all_stages_iwasawa_all_true() {
    let (code, v) = json(&["verdict", "--all-stages", "--catalog", "iwasawa"]);
    assert_eq!(code, 0);
    assert_eq!(v["all_flags"], true);
    let stages = v["stages"].as_array().unwrap();
    assert_eq!(stages.len(), 7);
    for s in stages {
        for flag in s["flags"].as_object().unwrap().values() {
            assert_eq!(flag, true);
        }
    }
}

#[test]
fn deform_scan_n6c_h_minus_column() {
    let (code, v) = json(&["deform-scan", "--catalog", "n6c"]);
    assert_eq!(code, 0);
    let rows = v["rows"].as_array().unwrap();
    let ts: Vec<&str> = rows.iter().map(|r| r["t"].as_str().unwrap()).collect();
    let minus: Vec<u64> = rows.iter().map(|r| r["h_minus"].as_u64().unwrap()).collect();
    assert_eq!(ts, ["0", "1/4", "1/2"]);
    assert_eq!(minus, [1, 0, 0]);
    assert_eq!(v["upper_semicontinuous"], true);
}

#[test]
fn deform_scan_nakamura_document() {
    let (code, v) = json(&["deform-scan", "--catalog", "iwasawa-def-ii"]);
    assert_eq!(code, 0);
    assert_eq!(v["class"], "(ii)");
    assert_eq!(v["hodge_row"], serde_json::json!([2, 2, 2, 5, 2, 1, 5, 5, 1]));
}

#[test]
fn json_is_byte_identical_across_runs() {
    for args in [["decompose", "--stage", "2", "--catalog", "iwasawa-def-ii"], ["harmonic", "--stage", "3", "--catalog", "solv6"]] {
        let a = run_cli(std::iter::once("nilcoh").chain(args));
        let b = run_cli(std::iter::once("nilcoh").chain(args));
        assert_eq!(a, b);
    }
}

#[test]
fn digest_ignores_comments_and_spacing() {
    let dir = tempfile::tempdir().unwrap();
    let plain = dir.path().join("a.lie");
    let noisy = dir.path().join("b.lie");
    let src = catalog::source("kt4").unwrap();
    std::fs::write(&plain, src).unwrap();
    std::fs::write(&noisy, format!("# extra comment\n\n{src}")).unwrap();
    let (_, a) = json(&["betti", plain.to_str().unwrap()]);
    let (_, b) = json(&["betti", noisy.to_str().unwrap()]);
    assert_eq!(a["input_digest"], b["input_digest"]);
    assert!(a["input_digest"].as_str().unwrap().starts_with("sha256:"));
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run_cli(["nilcoh", "hlc", "--catalog", "n6c", "--out", path.to_str().unwrap()]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["holds"], true);
}

#[test]
fn catalog_subcommand_prints_document() {
    let out = run_cli(["nilcoh", "catalog", "solv6", "--format", "text"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, catalog::source("solv6").unwrap());
}

fn assert_error(args: &[&str], code: &str) {
    let (exit, v) = json(args);
    assert_ne!(exit, 0, "{args:?}");
    assert_eq!(v["schema"], 1);
    assert_eq!(v["error"]["code"], code, "{v}");
    assert!(v["error"]["message"].as_str().is_some_and(|m| !m.is_empty()));
}

#[test]
fn error_paths_are_machine_readable() {
    assert_error(&["dolbeault", "--catalog", "n6c"], "almost_complex::NotIntegrable");
    assert_error(&["catalog", "nope"], "cli_frontend::Usage");
    assert_error(&["betti", "--catalog", "nope"], "cli_frontend::Usage");
    assert_error(&["betti"], "cli_frontend::Usage");
    assert_error(&["betti", "/nonexistent/file.lie"], "cli_frontend::Io");
    assert_error(&["cohomology", "--stage", "9", "--catalog", "torus2"], "cli_frontend::Usage");
    assert_error(&["hlc", "--catalog", "solv6"], "cli_frontend::Usage");
    assert_error(&["verdict", "--catalog", "iwasawa", "--stage", "2", "--all-stages"], "cli_frontend::Usage");
    assert_error(&["frobnicate"], "cli_frontend::Usage");
}

#[test]
fn parse_errors_carry_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.lie");
    std::fs::write(&path, "dim 4\nd e4 = e1^^e2\n").unwrap();
    let (exit, v) = json(&["betti", path.to_str().unwrap()]);
    assert_ne!(exit, 0);
    assert!(v["error"]["code"].as_str().unwrap().starts_with("cli_frontend::"));
    assert!(v["error"]["message"].as_str().unwrap().contains('2'));
}

#[test]
fn text_errors_go_to_stderr() {
    let out = run_cli(["nilcoh", "dolbeault", "--catalog", "n6c", "--format", "text"]);
    assert_ne!(out.code, 0);
    assert!(out.stdout.is_empty());
    assert!(out.stderr.contains("almost_complex::NotIntegrable"));
}
