//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//! Run with `cargo test --test acceptance -- --nocapture` to see every line.

use bsymbol_cli::suites::{self, CriterionResult};

fn check(r: CriterionResult) {
    let status = if r.passed { "pass" } else { "FAIL" };
    println!("criterion {:>2} [{status}] {}: {}", r.id, r.name, r.detail);
    assert!(r.passed, "criterion {} failed: {}", r.id, r.detail);
}

#[test]
fn criterion_01_paper_example_byte_exact() {
    check(suites::criterion_1_example());
}

#[test]
fn criterion_02_shift_formula_oracle() {
    check(suites::criterion_2_shift_formula());
}

#[test]
fn criterion_03_sigma_equivalence() {
    check(suites::criterion_3_sigma_equivalence());
}

#[test]
fn criterion_04_concatenation_weight_law() {
    check(suites::criterion_4_weight_law());
}

#[test]
fn criterion_05_bound_soundness() {
    check(suites::criterion_5_bound_soundness());
}

#[test]
fn criterion_06_reference_cyclic_equality() {
    check(suites::criterion_6_reference_cyclic());
}

#[test]
fn criterion_07_thm5_family() {
    check(suites::criterion_7_thm5_family());
}

#[test]
fn criterion_08_thm6_family() {
    check(suites::criterion_8_thm6_family());
}

#[test]
fn criterion_09_extension_gap_preservation() {
    check(suites::criterion_9_extension_gap());
}

#[test]
fn criterion_10_exhaustive_oracle() {
    check(suites::criterion_10_exhaustive_oracle());
}

#[test]
fn criterion_11_property_suites() {
    check(suites::criterion_11_property_suites());
}
