mod common;

use std::process::Command;

use common::strip_timings;
use fieldlab::cli::doc::ResultDoc;
use fieldlab::cli::{run, verify_document, OutputDocument, Outcome};

fn fieldlab(args: &[&str]) -> Outcome {
    run(std::iter::once("fieldlab").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> (i32, OutputDocument) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = fieldlab(&all);
    let doc = serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout));
    (out.code, doc)
}

#[test]
fn analyze_gaussian_rationals() {
    let (code, doc) = json(&["analyze", "x^2+1"]);
    assert_eq!(code, 0);
    let ResultDoc::Analysis(a) = &doc.results[0] else { panic!() };
    assert_eq!(a.automorphisms, vec![vec!["0/1", "1/1"], vec!["0/1", "-1/1"]]);
    assert_eq!(a.automorphisms.iter().map(|v| v.join(",")).collect::<Vec<_>>(), ["0/1,1/1", "0/1,-1/1"]);
    assert!(a.galois);
    assert_eq!(a.composition_table, Some(vec![vec![0, 1], vec![1, 0]]));
    assert_eq!(a.gram_determinant, "-4/1");
    assert_eq!(verify_document(&doc).unwrap(), 1);
}

#[test]
fn analyze_text_lists_automorphisms() {
    let out = fieldlab(&["analyze", "x^4 - 10*x^2 + 1"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("θ ↦ -10*θ + θ^3"), "{}", out.stdout);
    assert!(out.stdout.contains("Galois: yes"));
}

#[test]
fn pell_first_solution() {
    let out = fieldlab(&["pell", "--b", "0", "--c", "-2", "--count", "1"]);
    assert_eq!(out.code, 0);
    let (code, doc) = json(&["pell", "--b", "0", "--c", "-2", "--count", "1"]);
    assert_eq!(code, 0);
    let ResultDoc::Pell(s) = &doc.results[0] else { panic!() };
    assert!(["3/1", "-3/1"].contains(&s.x.as_str()) && ["2/1", "-2/1"].contains(&s.y.as_str()));
    assert!(out.stdout.contains(&format!("({}, {})", s.x.trim_end_matches("/1"), s.y.trim_end_matches("/1"))));
}

#[test]
fn normal_search_needs_galois() {
    let (code, doc) = json(&["normal", "x^3-2", "--set", "x", "--count", "1"]);
    assert_eq!(code, 3);
    let err = doc.error.unwrap();
    assert_eq!(err.kind, "not_galois");
    assert!(err.message.contains('1'));
}

#[test]
fn invalid_inputs_exit_2() {
    for args in [
        &["analyze", "x^^2"][..],
        &["analyze", "x^2 - 1"],
        &["analyze", "x^4 + 2*x^2 + 1"],
        &["primitive", "x^4 + 3*x^2 + 2", "--set", "x", "--count", "1"],
        &["analyze", ""],
        &["pell", "--b", "0", "--c", "-1"],
        &["pell", "--b", "x", "--c", "1"],
        &["primitive", "x^2+1", "--set", "x;3", "--count", "1"],
        &["primitive", "x^2+1", "--set", "x", "--count", "0"],
        &["norm-one", "x - 3", "--count", "1"],
        &["density-probe", "x^2", "--degree", "3", "--grid", "1"],
        &["frobnicate"],
    ] {
        let out = fieldlab(args);
        assert_eq!(out.code, 2, "{args:?}: {}", out.stderr);
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn syntax_error_reports_offset() {
    let (code, doc) = json(&["analyze", "x^^2"]);
    assert_eq!(code, 2);
    let err = doc.error.unwrap();
    assert_eq!(err.kind, "syntax");
    assert!(err.message.contains("offset 2"));
}

#[test]
fn budget_exhaustion_keeps_partial_results() {
    let (code, doc) = json(&["primitive", "x^2+1", "--set", "x", "--count", "100", "--max-height", "2"]);
    assert_eq!(code, 4);
    assert_eq!(doc.error.as_ref().unwrap().kind, "height_cap_exceeded");
    assert!(!doc.results.is_empty() && doc.results.len() < 100);
    assert_eq!(verify_document(&doc).unwrap(), doc.results.len());
}

#[test]
fn degree_cap_exits_5() {
    let (code, doc) = json(&["analyze", "x^5 - 2", "--degree-cap", "4"]);
    assert_eq!(code, 5);
    assert_eq!(doc.error.unwrap().kind, "degree_cap_exceeded");
}

#[test]
fn documents_round_trip_and_verify() {
    for args in [
        &["analyze", "x^4 + x^3 + x^2 + x + 1"][..],
        &["analyze", "x^3 - x - 1"],
        &["primitive", "x^3-2", "--set", "x;x^2;x^3+x", "--count", "5"],
        &["normal", "x^4+1", "--set", "x;x^2", "--count", "5"],
        &["norm-one", "x^4 - 10*x^2 + 1", "--count", "3", "--normal"],
        &["norm-one", "x^3 - x - 1", "--count", "3"],
        &["pell", "--b", "1", "--c", "-1", "--count", "5"],
        &["density-probe", "x^2;x^3+x", "--degree", "2", "--grid", "4"],
    ] {
        let (code, doc) = json(args);
        assert_eq!(code, 0, "{args:?}");
        let text = serde_json::to_string(&doc).unwrap();
        let back: OutputDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(verify_document(&back).unwrap(), doc.results.len(), "{args:?}");
    }
}

#[test]
fn tampered_documents_fail_verification() {
    let (_, doc) = json(&["norm-one", "x^2+1", "--count", "2", "--normal"]);
    let mut bad = doc.clone();
    let ResultDoc::Witness(w) = &mut bad.results[0] else { panic!() };
    w.a = vec!["1/1".into(), "1/1".into()];
    assert!(verify_document(&bad).is_err());

    let mut bad = doc.clone();
    let ResultDoc::Witness(w) = &mut bad.results[1] else { panic!() };
    w.certificates[0].normal_det = Some(vec!["0/1".into(), "0/1".into()]);
    assert!(verify_document(&bad).is_err());

    let (_, doc) = json(&["pell", "--b", "0", "--c", "-2", "--count", "1"]);
    let mut bad = doc.clone();
    let ResultDoc::Pell(s) = &mut bad.results[0] else { panic!() };
    s.y = "1/1".into();
    assert!(verify_document(&bad).is_err());
}

#[test]
fn same_seed_same_bytes() {
    let args = ["--json", "norm-one", "x^4+1", "--count", "5", "--randomized", "--seed", "9"];
    let a = fieldlab(&args);
    let b = fieldlab(&args);
    assert_eq!(a.code, 0);
    assert_eq!(strip_timings(&a.stdout), strip_timings(&b.stdout));
    let c = fieldlab(&["--json", "norm-one", "x^4+1", "--count", "5", "--randomized", "--seed", "10"]);
    assert_eq!(c.code, 0);
}

#[test]
fn help_documents_output_formats() {
    let out = fieldlab(&["--help"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("3/5 + 4/5*θ"));
    assert!(out.stdout.contains("p/q"));
}

#[test]
fn binary_honours_environment_overrides() {
    let bin = env!("CARGO_BIN_EXE_fieldlab");
    let out = Command::new(bin)
        .args(["primitive", "x^2+1", "--set", "x", "--count", "50"])
        .env("FIELDLAB_MAX_HEIGHT", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("height cap 2"));

    // the flag wins over the environment
    let out = Command::new(bin)
        .args(["primitive", "x^2+1", "--set", "x", "--count", "50", "--max-height", "20"])
        .env("FIELDLAB_MAX_HEIGHT", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));

    let out = Command::new(bin)
        .args(["analyze", "x^5 - 2"])
        .env("FIELDLAB_DEGREE_CAP", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(5));

    let seeded = |seed: &str| {
        let out = Command::new(bin)
            .args(["--json", "primitive", "x^2-2", "--set", "x", "--count", "3", "--randomized"])
            .env("FIELDLAB_SEED", seed)
            .output()
            .unwrap();
        let doc: OutputDocument = serde_json::from_slice(&out.stdout).unwrap();
        doc.diagnostics.seed
    };
    assert_eq!(seeded("77"), Some(77));
}
