use std::path::PathBuf;
use std::process::{Command, Output};

use hopfrob::cli::report::{Verdict, VerificationReport};
use hopfrob::cli::{cmd_center, cmd_check_hopf, cmd_frob_monoidal, cmd_frobenius, parse_cayley, CommonArgs, Family, FamilyPair};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn schema(name: &str) -> serde_json::Value {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../schema").join(name);
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn hopfrob(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfrob")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_report(args: &[&str]) -> (i32, VerificationReport, serde_json::Value) {
    let mut full = args.to_vec();
    full.extend(["--json", "--stable"]);
    let o = hopfrob(&full);
    let text = stdout(&o);
    let value: serde_json::Value = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{e}: {text}"));
    let report: VerificationReport = serde_json::from_value(value.clone()).unwrap();
    (o.status.code().unwrap(), report, value)
}

fn assert_valid_report(value: &serde_json::Value) {
    let validator = jsonschema::validator_for(&schema("report.schema.json")).unwrap();
    let errors: Vec<String> = validator.iter_errors(value).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:?}");
}

#[test]
fn check_hopf_taft_exits_zero() {
    let (code, r, v) = json_report(&["check-hopf", "--family", "taft", "--l", "3"]);
    assert_eq!(code, 0);
    assert!(r.passed());
    assert_eq!(r.summary.failed, 0);
    assert_valid_report(&v);
}

#[test]
fn check_hopf_on_dual_passes() {
    let (code, r, _) = json_report(&["check-hopf", "--family", "uqsl2", "--l", "3", "--dual"]);
    assert_eq!(code, 0, "{r}");
}

#[test]
fn broken_counit_is_reported_with_witness() {
    let f = fixture("broken.json");
    let (code, r, v) = json_report(&["check-hopf", "--file", f.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_valid_report(&v);
    let step = r.step("hopf-counit-is-multiplicative").unwrap();
    assert_eq!(step.verdict, Verdict::Fail);
    assert_eq!(step.witness.as_deref(), Some("g ⊗ g ↦ 1 but 0"));
    assert_eq!(r.step("hopf-associativity").unwrap().verdict, Verdict::Pass);
}

#[test]
fn frobenius_taft_cyclic_fails_with_decision_path() {
    let (code, r, v) = json_report(&["frobenius", "--family-pair", "taft-cyclic", "--l", "3"]);
    assert_eq!(code, 1);
    assert_valid_report(&v);
    let failed: Vec<_> = r.steps.iter().filter(|s| s.verdict == Verdict::Fail).collect();
    assert_eq!(failed.len(), 1, "{r}");
    assert!(failed[0].witness.as_deref().unwrap().contains("identically"), "{r}");
}

#[test]
fn frobenius_uqsl2_right_passes() {
    let (code, r, v) = json_report(&["frobenius", "--family-pair", "uqsl2-cyclic", "--l", "3", "--constraint", "right"]);
    assert_eq!(code, 0, "{r}");
    assert_valid_report(&v);
    assert_eq!(r.step("comodule-right").unwrap().witness.as_deref(), Some("yes"));
    assert_eq!(r.step("comodule-left").unwrap().witness.as_deref(), Some("no"));
}

#[test]
fn frobenius_from_file_morphism() {
    let f = fixture("kc2.json");
    let (code, r, _) = json_report(&["frobenius", "--file", f.to_str().unwrap(), "--name", "unit", "--constraint", "right"]);
    assert_eq!(code, 0, "{r}");
}

#[test]
fn group_center_passes() {
    let (code, r, v) = json_report(&["center", "--family-pair", "group", "--g", "c4", "--k", "c2"]);
    assert_eq!(code, 0, "{r}");
    assert_valid_report(&v);
    assert!(r.steps_with_prefix("braided-").count() > 0);
}

#[test]
fn uqsl2_center_fails_on_left_side() {
    let mut a = CommonArgs::new();
    a.family_pair = Some(FamilyPair::Uqsl2Cyclic);
    let r = cmd_center(&a).unwrap();
    assert!(!r.passed());
    assert_eq!(r.step("mutual-inverse-right").unwrap().verdict, Verdict::Pass);
    assert_eq!(r.step("mutual-inverse-left").unwrap().verdict, Verdict::Fail);
    assert_eq!(r.step("braided-precondition").unwrap().verdict, Verdict::Fail);
    let compare: Vec<_> = r.steps_with_prefix("compare-models").collect();
    let first = compare.first().unwrap();
    assert_eq!(first.verdict, Verdict::Fail);
    assert_eq!(
        first.witness.as_deref(),
        Some("δ¹(1 ⊗ 1) = 1 ⊗ 1 ⊗ 1 but δ²(1 ⊗ 1) = k ⊗ 1 ⊗ 1")
    );
}

#[test]
fn uqsl2_frob_monoidal_passes() {
    let mut a = CommonArgs::new();
    a.family_pair = Some(FamilyPair::Uqsl2Cyclic);
    let r = cmd_frob_monoidal(&a).unwrap();
    assert!(r.passed(), "{r}");
    assert!(r.step("frobmon1").is_some());
    assert!(r.steps.iter().filter(|s| s.check == "frobmon2").count() >= 27);
}

#[test]
fn file_testset_feeds_monoidal_checks() {
    let f = fixture("kc2.json");
    let o = hopfrob(&[
        "frob-monoidal", "--family-pair", "group", "--g", "c4", "--k", "c2",
        "--testset", "file", "--file", f.to_str().unwrap(), "--stable",
    ]);
    let text = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{text}");
    assert!(text.contains("sign"), "{text}");
}

#[test]
fn stable_output_is_deterministic_and_untimed() {
    let args = ["frobenius", "--family-pair", "group", "--g", "s3", "--k", "c3", "--json", "--stable"];
    let (a, b) = (hopfrob(&args), hopfrob(&args));
    assert_eq!(a.stdout, b.stdout);
    assert!(!stdout(&a).contains("timing_ms"));
    let timed = hopfrob(&["check-hopf", "--family", "cyclic", "--l", "2", "--json"]);
    assert!(stdout(&timed).contains("timing_ms"));
}

#[test]
fn report_round_trips_through_json() {
    let mut a = CommonArgs::new();
    a.family = Some(Family::Taft);
    a.l = 2;
    let r = cmd_check_hopf(&a).unwrap();
    let back: VerificationReport = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
    assert_eq!(back, r);
}

#[test]
fn group_frobenius_lists_coset_representatives() {
    let mut a = CommonArgs::new();
    a.family_pair = Some(FamilyPair::Group);
    a.g = Some("c4".into());
    a.k = Some("c2".into());
    let r = cmd_frobenius(&a).unwrap();
    assert!(r.passed(), "{r}");
    assert!(r.step("trace").is_some());
}

#[test]
fn fixtures_match_input_schema() {
    let validator = jsonschema::validator_for(&schema("input.schema.json")).unwrap();
    for name in ["kc2.json", "broken.json"] {
        let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(fixture(name)).unwrap()).unwrap();
        assert!(validator.is_valid(&v), "{name}");
    }
}

#[test]
fn malformed_input_reports_line_and_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{\n  \"algebras\": {\n    \"x\": 3,\n  }\n}\n").unwrap();
    let o = hopfrob(&["check-hopf", "--file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("parse error") && err.contains("line 3"), "{err}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(hopfrob(&["frobenius"]).status.code(), Some(2));
    assert_eq!(hopfrob(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(hopfrob(&["check-hopf", "--family", "uqsl2", "--l", "4"]).status.code(), Some(2));
}

#[test]
fn cayley_tables() {
    let o = hopfrob(&["check-hopf", "--cayley", fixture("c3.cayley").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = hopfrob(&["check-hopf", "--cayley", fixture("not_a_group.cayley").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let (labels, table) = parse_cayley("e a\n0 1\n1 0\n").unwrap();
    assert_eq!(labels, ["e", "a"]);
    assert_eq!(table, vec![vec![0, 1], vec![1, 0]]);
}

#[test]
fn every_command_emits_schema_valid_reports() {
    for args in [
        &["frob-monoidal", "--family-pair", "group", "--g", "s3", "--k", "c3"][..],
        &["report", "--family-pair", "group", "--g", "c4", "--k", "c2"],
        &["center", "--family-pair", "unit", "--family", "cyclic", "--l", "3"],
    ] {
        let (code, r, v) = json_report(args);
        assert_eq!(code, 0, "{args:?}: {r}");
        assert_valid_report(&v);
        assert_eq!(r.summary.passed, r.steps.iter().filter(|s| s.verdict == Verdict::Pass).count());
    }
}
