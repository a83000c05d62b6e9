//! Acceptance suite: every criterion prints one PASS/FAIL line and asserts
//! exact agreement. Run with `cargo test -p cyldim-core --test acceptance`.

use cyldim_core::verify::{self, CheckResult};

fn report(result: CheckResult) {
    println!(
        "{} {} — {}",
        if result.passed { "PASS" } else { "FAIL" },
        result.name,
        result.details
    );
    assert!(result.passed, "{}: {}", result.name, result.details);
}

#[test]
fn criterion_1_fig2_fixture() {
    report(verify::criterion_1_fig2());
}

#[test]
fn criterion_2_triple_equality() {
    report(verify::criterion_2_triple_equality());
}

#[test]
fn criterion_3_counting_laws() {
    report(verify::criterion_3_counting_laws());
}

#[test]
fn criterion_4_minimality() {
    report(verify::criterion_4_minimality());
}

#[test]
fn criterion_4_nonemptiness_sufficiency() {
    report(verify::criterion_4_nonemptiness_sufficiency());
}

#[test]
fn criterion_5_crystal_suite() {
    report(verify::criterion_5_crystal_suite());
}

#[test]
fn criterion_6_sum_rules() {
    report(verify::criterion_6_sum_rules());
}

#[test]
fn criterion_7_toric_schur() {
    report(verify::criterion_7_toric_schur());
}

#[test]
fn criterion_8_ring_sanity() {
    report(verify::criterion_8_ring_sanity());
}
