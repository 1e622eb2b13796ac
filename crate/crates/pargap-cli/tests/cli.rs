//! End-to-end behaviour of the `pargap` binary: exit codes, report shapes,
//! notation handling and the documented command surfaces.

use std::process::{Command, Output};

fn pargap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pargap"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn submax_reports_the_gap_bound() {
    let out = pargap(&["submax", "--type", "G2", "--parabolic", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("submaximal symmetry dimension S(G2/P{1}) = 7"), "{text}");
    assert!(text.contains("X<#O"), "{text}");
}

#[test]
fn rigid_geometry_banners_and_exits_zero() {
    let out = pargap(&["submax", "--type", "A1", "--parabolic", "1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("Yamaguchi-rigid"));
}

#[test]
fn missing_required_flag_is_a_usage_error() {
    let out = pargap(&["submax", "--type", "A3"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn unknown_type_is_a_usage_error() {
    let out = pargap(&["submax", "--type", "Z9", "--parabolic", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("error"));
}

#[test]
fn out_of_range_node_is_a_usage_error() {
    let out = pargap(&["submax", "--type", "A3", "--parabolic", "5"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn help_exits_zero() {
    let out = pargap(&["--help"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for cmd in ["submax", "h2", "verify-tables", "jacobi-sweep", "oracle-compare", "rigidity-check"] {
        assert!(text.contains(cmd), "missing {cmd} in help: {text}");
    }
}

#[test]
fn json_and_text_reports_carry_the_same_integers() {
    let json_out = pargap(&["submax", "--type", "E7", "--parabolic", "7", "--json"]);
    assert!(json_out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&json_out)).unwrap();
    assert_eq!(doc["S"], 76);
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(doc["query"]["lie_type"], "E7");

    let text_out = pargap(&["submax", "--type", "E7", "--parabolic", "7"]);
    assert!(text_out.status.success());
    let text = stdout(&text_out);
    for key in ["dim_g", "dim_flag", "depth"] {
        let v = doc[key].as_i64().unwrap();
        assert!(text.contains(&v.to_string()), "{key}={v} missing from text: {text}");
    }
    assert!(text.contains("= 76"), "{text}");
    let branch = &doc["branches"][0];
    for key in ["dim_g_minus", "dim_a0", "dim_a", "s_w"] {
        let v = branch[key].as_i64().unwrap();
        assert!(text.contains(&v.to_string()), "{key}={v} missing from text: {text}");
    }
}

#[test]
fn branch_filter_selects_one_row() {
    let out = pargap(&["submax", "--type", "A3", "--parabolic", "1,2", "--branch", "2,3", "--json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["branches"].as_array().unwrap().len(), 1);
    assert_eq!(doc["branches"][0]["word"], serde_json::json!([2, 3]));

    let missing = pargap(&["submax", "--type", "A3", "--parabolic", "1,2", "--branch", "3,2"]);
    assert_eq!(missing.status.code(), Some(1));
    assert!(stderr(&missing).contains("no regular branch"));
}

#[test]
fn notation_flag_switches_labelling() {
    let input = pargap(&["submax", "--type", "B2", "--parabolic", "1", "--json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&input)).unwrap();
    assert_eq!(doc["query"]["canonical_type"], "C2");
    assert_eq!(doc["query"]["relabelled"], true);
    assert_eq!(doc["branches"][0]["word"], serde_json::json!([1, 2]));

    let canonical = pargap(&["submax", "--type", "B2", "--parabolic", "1", "--notation", "canonical", "--json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&canonical)).unwrap();
    assert_eq!(doc["branches"][0]["word"], serde_json::json!([2, 1]));
    assert_eq!(doc["query"]["canonical_crossed"], serde_json::json!([2]));
}

#[test]
fn h2_lists_irregular_modules() {
    let out = pargap(&["h2", "--type", "F4", "--parabolic", "1,2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("irregular"), "{text}");
    assert!(text.contains("regular"), "{text}");
}

#[test]
fn verify_tables_passes_and_exits_zero() {
    let out = pargap(&["verify-tables", "--max-rank", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("PASS"));
}

#[test]
fn rigidity_presets_have_documented_verdicts() {
    for (preset, verdict) in [
        ("proj2d", "rigid"),
        ("conf3d", "rigid"),
        ("petrov-n", "inconclusive"),
        ("petrov-iii", "inconclusive"),
        ("g2-31", "inconclusive"),
    ] {
        let out = pargap(&["rigidity-check", "--spectra", preset]);
        assert!(out.status.success(), "{preset} should exit 0");
        assert!(
            stdout(&out).contains(&format!("verdict: {verdict}")),
            "{preset}: {}",
            stdout(&out)
        );
    }
    let bad = pargap(&["rigidity-check", "--spectra", "not-a-preset"]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn inline_spectra_json_is_accepted() {
    let out = pargap(&["rigidity-check", "--spectra", r#"{"-1":[1,-2,-5],"0":[-3,0]}"#, "--json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["rigid"], true);
}

#[test]
fn thread_cap_env_is_honoured() {
    let out = Command::new(env!("CARGO_BIN_EXE_pargap"))
        .args(["jacobi-sweep", "--max-rank", "2"])
        .env("PARGAP_THREADS", "1")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).contains("obstructed branches (6)"));
}
