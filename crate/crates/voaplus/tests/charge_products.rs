//! Integration run of the charge-product lemma verification: the symbolic
//! identities together with the fixed-k membership certificates that fit
//! under a moderate span cap; out-of-cap items must be reported as skipped.

use voaplus::c2;
use voaplus::poly::ratio;
use voaplus::report::{verify_charge_products, ItemStatus};
use voaplus::scalar::LatticeConfig;
use voaplus::vertex::{Engine, Named};

#[test]
fn charge_products_full_run() {
    let report = verify_charge_products(2, 3, 3, 16).unwrap();
    let mut passes = 0;
    let mut skips = 0;
    for item in &report.items {
        match &item.status {
            ItemStatus::Pass => passes += 1,
            ItemStatus::Skipped(why) => {
                skips += 1;
                println!("skipped: {} ({})", item.name, why);
            }
            ItemStatus::Fail(why) => panic!("{}: {}", item.name, why),
        }
    }
    assert!(report.all_passed());
    assert!(passes >= 20, "expected a substantive run, got {}", passes);
    // the odd high-charge memberships exceed the cap and must be skipped
    assert!(skips >= 2);
    let f3 = report
        .items
        .iter()
        .find(|i| i.name.contains("F^3 lies in V+(1)"))
        .expect("high-charge item present");
    assert!(matches!(f3.status, ItemStatus::Skipped(_)));
}

#[test]
fn iterated_beta_congruence_weight_11() {
    // J_{-1}(J_{-1}E) is congruent to beta(3)^2 L(-2)^4 E at weight k+8
    let cfg = LatticeConfig::fixed(3);
    let eng = Engine::new(cfg);
    let e = eng.build_named(Named::E).unwrap();
    let j = eng.j_vector();
    let jje = eng
        .mode_apply(&j, -1, &eng.mode_apply(&j, -1, &e).unwrap())
        .unwrap();
    let mut l4e = e;
    for _ in 0..4 {
        l4e = eng.virasoro(-2, &l4e).unwrap();
    }
    // beta(3)^2 = (170/11)^2
    let cert = c2::congruent(&cfg, &jje, &l4e.scaled(&cfg.from_rat(ratio(28900, 121)))).unwrap();
    assert!(cert.verified);
    assert_eq!(cert.weight, 11);
}
