//! The acceptance suite: every verification criterion runs once (shared
//! across the tests below) and each test asserts one criterion, printing
//! its pass/fail line and detail.
//!
//! Criteria 2 and 3 assert entry-for-entry agreement with the printed
//! reference tables and their printed determinants. The recomputed tables
//! differ from the printed ones in a handful of cells (see the comparison
//! details these tests print, and the README), so those two stay red by
//! design: the suite reports the discrepancy instead of papering over it.

use std::sync::OnceLock;
use voaplus::verify::{verify_all, VerifyReport};

fn suite() -> &'static VerifyReport {
    static REPORT: OnceLock<VerifyReport> = OnceLock::new();
    REPORT.get_or_init(|| {
        let report = verify_all(3, 20);
        for c in &report.criteria {
            println!("{}", c.line());
            for d in &c.details {
                println!("    {}", d);
            }
        }
        report
    })
}

fn assert_criterion(id: u8) {
    let report = suite();
    let c = report
        .criteria
        .iter()
        .find(|c| c.id == id)
        .expect("criterion present");
    println!("{}", c.line());
    for d in &c.details {
        println!("    {}", d);
    }
    assert!(c.passed, "{}\n{}", c.line(), c.details.join("\n"));
}

#[test]
fn criterion_01_table_1_reproduction() {
    assert_criterion(1);
}

#[test]
fn criterion_02_table_3_reproduction() {
    assert_criterion(2);
}

#[test]
fn criterion_03_table_6_reproduction() {
    assert_criterion(3);
}

#[test]
fn criterion_04_inverse_checks() {
    assert_criterion(4);
}

#[test]
fn criterion_05_beta() {
    assert_criterion(5);
}

#[test]
fn criterion_06_rho_sigma_gamma() {
    assert_criterion(6);
}

#[test]
fn criterion_07_identity_suite() {
    assert_criterion(7);
}

#[test]
fn criterion_08_axiom_suite() {
    assert_criterion(8);
}

#[test]
fn criterion_09_spanning_certificate() {
    assert_criterion(9);
}

#[test]
fn criterion_10_root_guards() {
    assert_criterion(10);
}
