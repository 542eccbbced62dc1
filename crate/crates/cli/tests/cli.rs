use std::fs;
use std::path::Path;

use gqchar::{run_with, CharTable, EXIT_CAP, EXIT_INVALID, EXIT_OK};

fn run(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut argv = vec!["gqchar"];
    argv.extend_from_slice(args);
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

struct Files {
    _dir: tempfile::TempDir,
    p5: String,
    w5: String,
    bare: String,
    e8: String,
}

fn files() -> Files {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    Files {
        p5: write(d, "p5.json", r#"{"family": "pibar5"}"#),
        w5: write(d, "w5.toml", "lambda = [\"q^2\", \"z^2*q^-3\"]\n"),
        bare: write(d, "bare.json", r#"{"matrix": [["q^2", "q^-2"], ["1", "q^2"]]}"#),
        e8: write(d, "e8.toml", "family = \"pibar1\"\nkind = \"E\"\nrank = 8\n"),
        _dir: dir,
    }
}

#[test]
fn catalog_lists_entries() {
    let (code, out, _) = run(&["catalog", "--max-rank", "2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("pibar5"));
    assert!(!out.contains("pibar4"));
}

#[test]
fn roots_table_and_json() {
    let f = files();
    let (code, out, _) = run(&["roots", "--config", &f.p5]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("(1,2)") && out.contains("null"));
    let (_, out, _) = run(&["roots", "--config", &f.p5, "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let kinds: Vec<&str> = v.as_array().unwrap().iter().map(|r| r["kind"].as_str().unwrap()).collect();
    assert_eq!(kinds.iter().filter(|k| **k == "real").count(), 2);
    assert_eq!(kinds.len(), 4);
}

#[test]
fn order_flag_changes_printing() {
    let f = files();
    let (_, out, _) = run(&["roots", "--config", &f.p5, "--order", "12"]);
    assert!(out.contains("z^4*q^-2"), "{out}");
    let (_, out, _) = run(&["roots", "--config", &f.p5]);
    assert!(out.contains("z^2*q^-2"), "{out}");
}

#[test]
fn weyl_orbit() {
    let f = files();
    let (code, out, _) = run(&["weyl", "--config", &f.p5, "--weight", &f.w5, "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["order"], 4);
    assert_eq!(v["elements"].as_array().unwrap().len(), 4);
}

#[test]
fn classify_catalog_and_bare() {
    let f = files();
    let (code, out, _) = run(&["classify", "--config", &f.p5, "--weight", &f.w5, "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["finite"], true);
    assert_eq!(v["search_finite"], true);
    let (code, _, err) = run(&["classify", "--config", &f.bare, "--weight", &f.w5]);
    assert_eq!(code, EXIT_INVALID);
    assert!(err.contains("NotCatalogObject"));
}

#[test]
fn classify_samples_agree() {
    let f = files();
    let (code, out, _) = run(&["classify", "--config", &f.p5, "--sample", "60", "--seed", "11"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("agree 60"));
}

#[test]
fn bad_reading_and_missing_file() {
    let f = files();
    let (code, _, _) = run(&["classify", "--config", &f.p5, "--weight", &f.w5, "--c10-reading", "9,9"]);
    assert_eq!(code, EXIT_INVALID);
    let (code, _, _) = run(&["roots", "--config", "/nonexistent.json"]);
    assert_eq!(code, EXIT_INVALID);
    let (code, _, _) = run(&["frobnicate"]);
    assert_eq!(code, EXIT_INVALID);
}

#[test]
fn cap_exceeded_exit_code() {
    let f = files();
    let (code, _, err) = run(&["roots", "--config", &f.e8]);
    assert_eq!(code, EXIT_CAP, "{err}");
}

#[test]
fn char_json_round_trips_byte_identical() {
    let f = files();
    let (code, out, _) = run(&["char", "--config", &f.p5, "--weight", &f.w5, "--height", "4", "--method", "both", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let t: CharTable = serde_json::from_str(&out).unwrap();
    assert_eq!(format!("{}\n", serde_json::to_string_pretty(&t).unwrap()), out);
    assert!(t.rows.iter().all(|r| r.r#match == Some(true)));
    let depths: Vec<(i64, Vec<i64>)> = t.rows.iter().map(|r| (r.weight.iter().sum(), r.weight.clone())).collect();
    let mut sorted = depths.clone();
    sorted.sort();
    assert_eq!(depths, sorted);
}

#[test]
fn match_flag_only_when_equal() {
    let f = files();
    let (_, out, _) = run(&["char", "--config", &f.p5, "--weight", &f.w5, "--height", "5", "--method", "both", "--format", "json"]);
    let t: CharTable = serde_json::from_str(&out).unwrap();
    for r in &t.rows {
        assert_eq!(r.r#match, Some(r.formula == r.oracle));
    }
}

#[test]
fn atypical_formula_is_rejected_but_oracle_runs() {
    let f = files();
    let dir = tempfile::tempdir().unwrap();
    let w = write(dir.path(), "w0.json", r#"{"lambda": ["1", "1"]}"#);
    let (code, _, err) = run(&["char", "--config", &f.p5, "--weight", &w, "--height", "2"]);
    assert_eq!(code, EXIT_INVALID, "{err}");
    let (code, out, _) = run(&["char", "--config", &f.p5, "--weight", &w, "--height", "2", "--method", "oracle"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("oracle"));
}

#[test]
fn verify_emits_gram_matrices() {
    let f = files();
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("grams");
    let (code, out, _) = run(&["verify", "--config", &f.p5, "--weight", &f.w5, "--height", "3", "--emit-gram", g.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("0 mismatches"));
    let m: serde_json::Value = serde_json::from_str(&fs::read_to_string(g.join("gram_1_1.json")).unwrap()).unwrap();
    assert_eq!(m["rank"], 2);
}

#[test]
fn word_cap_reports_cap_exceeded() {
    let f = files();
    let (code, _, _) = run(&["verify", "--config", &f.p5, "--weight", &f.w5, "--height", "6", "--word-cap", "2"]);
    assert_eq!(code, EXIT_CAP);
}
