//! Golden-file tests: identical invocations must produce byte-identical JSON
//! once the timing field is removed.

use hyperoct::report::{self, Budget};
use hyperoct::scalar::rat;

fn normalized(report: &report::Report) -> String {
    let mut v = report.to_json();
    v.as_object_mut().unwrap().remove("timing_ms");
    serde_json::to_string_pretty(&v).unwrap()
}

fn assert_matches_golden(name: &str, got: &str) {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    let expected = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("missing golden file {}: {e}", path.display()));
    assert_eq!(
        got.trim_end(),
        expected.trim_end(),
        "report drifted from {name}"
    );
}

#[test]
fn classify_extreme_golden() {
    let r = report::run_classify(&rat(1, 3), &rat(1, 3));
    assert_matches_golden("classify_extreme.json", &normalized(&r));
}

#[test]
fn classify_witness_golden() {
    let r = report::run_classify(&rat(1, 3), &rat(0, 1));
    assert_matches_golden("classify_witness.json", &normalized(&r));
}

#[test]
fn gram_fail_golden() {
    let r = report::run_gram(3, &rat(1, 3), &rat(0, 1), &Budget::default()).unwrap();
    assert!(!r.passed());
    assert_matches_golden("gram_fail.json", &normalized(&r));
}

#[test]
fn phi_word_golden() {
    let r = report::run_phi(
        Some(vec![-2, -4, -5, 1, 3, 6]),
        None,
        None,
        Some(rat(1, 3)),
        Some(rat(1, 3)),
    )
    .unwrap();
    assert_matches_golden("phi_word.json", &normalized(&r));
}

#[test]
fn moments_golden() {
    let r = report::run_moments(6, false, &Budget::default()).unwrap();
    assert_matches_golden("moments_6.json", &normalized(&r));
}

#[test]
fn moments_csv_golden() {
    let csv = report::moments_csv(6);
    assert_matches_golden("moments_6.csv", &csv);
}

#[test]
fn repeated_runs_are_byte_identical() {
    for _ in 0..3 {
        let a = normalized(&report::run_classify(&rat(-1, 4), &rat(1, 3)));
        let b = normalized(&report::run_classify(&rat(-1, 4), &rat(1, 3)));
        assert_eq!(a, b);
    }
    let a = report::run_fock_verify(2, 2, &Budget::default()).unwrap();
    let b = report::run_fock_verify(2, 2, &Budget::default()).unwrap();
    assert_eq!(normalized(&a), normalized(&b));
}
