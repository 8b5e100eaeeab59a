//! Golden-file checks: the recomputed tables 1, 3, 6 and the congruence
//! constants are frozen as JSON; any drift in canonical forms or in the
//! computation itself shows up as a byte-level diff here.

use std::fs;
use std::path::PathBuf;
use voaplus::report;
use voaplus::scalar::LatticeConfig;
use voaplus::vertex::Engine;

fn golden_path(name: &str) -> PathBuf {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests");
    p.push("golden");
    p.push(name);
    p
}

fn compare(name: &str, actual: &str) {
    let path = golden_path(name);
    let expected = fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("missing golden file {:?}: {}", path, e));
    assert_eq!(
        actual.trim(),
        expected.trim(),
        "golden mismatch for {}; regenerate deliberately if the change is intended",
        name
    );
}

#[test]
fn table_1_golden() {
    let eng = Engine::new(LatticeConfig::symbolic());
    let t = report::emit_table(&eng, 1).unwrap();
    compare("table1.json", &report::table_json(&t).to_string());
}

#[test]
fn table_3_golden() {
    let eng = Engine::new(LatticeConfig::symbolic());
    let t = report::emit_table(&eng, 3).unwrap();
    compare("table3.json", &report::table_json(&t).to_string());
}

#[test]
fn table_6_golden() {
    let eng = Engine::new(LatticeConfig::symbolic());
    let t = report::emit_table(&eng, 6).unwrap();
    compare("table6.json", &report::table_json(&t).to_string());
}

#[test]
fn constants_golden() {
    let eng = Engine::new(LatticeConfig::symbolic());
    let r = report::constants_report(&eng).unwrap();
    compare("constants.json", &report::constants_json(&r).to_string());
}
