//! The one-shot verification suite behind `voaplus verify`: table
//! reproduction, inverse and orientation checks, the congruence constants
//! with their fixed-`k` certificates, the identity suites, the axiom
//! property suite, the graded spanning certificate, and the determinant
//! root guards — one pass/fail result per criterion.

use crate::c2;
use crate::fock::{partitions, FockElement, FockMonomial};
use crate::poly::{rat, ratio, Rat};
use crate::reference;
use crate::report;
use crate::scalar::{parse_ratfn, LatticeConfig, Scalar};
use crate::vertex::{binomial, mode_apply_oracle, Engine, Named};
use num::Zero;
use serde_json::{json, Value};
use std::time::Instant;

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub details: Vec<String>,
    pub seconds: f64,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "criterion {:2} [{}] {} ({:.2}s)",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.seconds
        )
    }
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub k: u32,
    pub max_weight: u32,
    pub criteria: Vec<CriterionResult>,
}

impl VerifyReport {
    pub fn failures(&self) -> usize {
        self.criteria.iter().filter(|c| !c.passed).count()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "k": self.k,
            "max_weight": self.max_weight,
            "failures": self.failures(),
            "criteria": self.criteria.iter().map(|c| json!({
                "id": c.id,
                "name": c.name,
                "passed": c.passed,
                "seconds": c.seconds,
                "details": c.details,
            })).collect::<Vec<_>>(),
        })
    }
}

fn run_criterion(
    id: u8,
    name: &'static str,
    f: impl FnOnce(&mut Vec<String>) -> Result<bool, String>,
) -> CriterionResult {
    let mut details = Vec::new();
    let t0 = Instant::now();
    let passed = match f(&mut details) {
        Ok(ok) => ok,
        Err(e) => {
            details.push(format!("error: {}", e));
            false
        }
    };
    CriterionResult {
        id,
        name,
        passed,
        details,
        seconds: t0.elapsed().as_secs_f64(),
    }
}

/// Deterministic xorshift generator for the randomized suites.
struct Rng(u64);

impl Rng {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }

    fn range(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u64) as i64
    }
}

/// A random nonzero homogeneous element of the given total weight at fixed
/// `k`: a few monomials with small coefficients.
fn random_homogeneous(rng: &mut Rng, cfg: &LatticeConfig, weight: u32) -> FockElement {
    let k = cfg.fixed_k().expect("fixed k");
    let mut charges = vec![0i32];
    let mut m = 1;
    while (m * m) as u32 * k <= weight {
        charges.push(m);
        charges.push(-m);
        m += 1;
    }
    let mut monos = Vec::new();
    for c in charges {
        for p in partitions(weight - (c * c) as u32 * k) {
            monos.push(FockMonomial::new(p, c));
        }
    }
    if monos.is_empty() {
        return FockElement::zero();
    }
    let mut e = FockElement::zero();
    let terms = 1 + rng.below(3) as usize;
    for _ in 0..terms {
        let m = monos[rng.below(monos.len() as u64) as usize].clone();
        let c = loop {
            let c = rng.range(-3, 3);
            if c != 0 {
                break c;
            }
        };
        e.add_term(m, cfg.from_int(c));
    }
    if e.is_zero() {
        // coefficients may cancel; retry with a single monomial
        let m = monos[rng.below(monos.len() as u64) as usize].clone();
        e.add_term(m, cfg.from_int(1));
    }
    e
}

fn scalar_int(cfg: &LatticeConfig, n: i64) -> Scalar {
    cfg.from_int(n)
}

pub fn verify_all(k: u32, max_weight: u32) -> VerifyReport {
    let sym = Engine::new(LatticeConfig::symbolic());
    let mut criteria = Vec::new();

    criteria.push(run_criterion(1, "table 1 reproduction", |d| {
        let t = report::emit_table(&sym, 1).map_err(|e| e.to_string())?;
        d.push(format!("determinant {}", t.determinant.as_ref().unwrap()));
        d.push(format!(
            "cells matching printed table: {}/{}",
            t.comparison.total_cells - t.comparison.mismatches.len(),
            t.comparison.total_cells
        ));
        Ok(t.comparison.matches() && t.determinant_matches == Some(true))
    }));

    criteria.push(run_criterion(2, "table 3 reproduction", |d| {
        let t = report::emit_table(&sym, 3).map_err(|e| e.to_string())?;
        d.push(format!("computed determinant {}", t.determinant.as_ref().unwrap()));
        d.push(format!(
            "printed determinant {}",
            t.printed_determinant.as_deref().unwrap_or("")
        ));
        for m in &t.comparison.mismatches {
            d.push(format!(
                "cell ({}, {}): computed {}, printed {}",
                m.row_label, m.col_label, m.computed, m.printed
            ));
        }
        Ok(t.comparison.matches() && t.determinant_matches == Some(true))
    }));

    criteria.push(run_criterion(3, "table 6 reproduction", |d| {
        let t = report::emit_table(&sym, 6).map_err(|e| e.to_string())?;
        d.push(format!("computed determinant {}", t.determinant.as_ref().unwrap()));
        d.push(format!(
            "printed determinant {}",
            t.printed_determinant.as_deref().unwrap_or("")
        ));
        for m in &t.comparison.mismatches {
            d.push(format!(
                "cell ({}, {}): computed {}, printed {}",
                m.row_label, m.col_label, m.computed, m.printed
            ));
        }
        Ok(t.comparison.matches() && t.determinant_matches == Some(true))
    }));

    criteria.push(run_criterion(4, "inverse and orientation checks", |d| {
        let t2 = report::emit_table(&sym, 2).map_err(|e| e.to_string())?;
        let t4 = report::emit_table(&sym, 4).map_err(|e| e.to_string())?;
        let t5 = report::emit_table(&sym, 5).map_err(|e| e.to_string())?;
        d.push(format!(
            "A · A^-1 = A^-1 · A = I: {}",
            t2.product_identity == Some(true)
        ));
        d.push(format!(
            "B · B^-1 = B^-1 · B = I: {}",
            t4.product_identity == Some(true)
        ));
        d.push(format!(
            "printed grid 2 orientation: {}",
            t2.orientation.as_ref().map(|o| o.resolved.as_str()).unwrap_or("")
        ));
        d.push(format!(
            "printed grid 2 mismatches: {}",
            t2.comparison.mismatches.len()
        ));
        d.push(format!(
            "printed grids 4/5 mismatches: {} + {} (they invert the printed table 3 as printed)",
            t4.comparison.mismatches.len(),
            t5.comparison.mismatches.len()
        ));
        Ok(t2.product_identity == Some(true)
            && t4.product_identity == Some(true)
            && t5.product_identity == Some(true)
            && t2.orientation.map_or(false, |o| o.right && o.left))
    }));

    criteria.push(run_criterion(5, "beta with fixed-k certificate", |d| {
        let r = report::corollary_constants(&sym).map_err(|e| e.to_string())?;
        let printed = parse_ratfn(reference::BETA).map_err(|e| e.to_string())?;
        let symbolic_ok = r.beta == printed;
        d.push(format!("beta = {}", r.beta));
        let beta_at_k = r.beta.evaluate(&rat(k as i64)).map_err(|e| e.to_string())?;
        d.push(format!("beta({}) = {}", k, crate::poly::rat_string(&beta_at_k)));
        let cfg = LatticeConfig::fixed(k);
        let eng = Engine::new(cfg);
        let e = eng.build_named(Named::E).map_err(|e| e.to_string())?;
        let je = eng.mode_apply(&eng.j_vector(), -1, &e).map_err(|e| e.to_string())?;
        let l22e = eng
            .virasoro(-2, &eng.virasoro(-2, &e).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        let cert = c2::congruent(&cfg, &je, &l22e.scaled(&Scalar::Q(beta_at_k)))
            .map_err(|e| e.to_string())?;
        d.push(format!(
            "span certificate at weight {}: verified = {}, {} generator coefficients",
            cert.weight,
            cert.verified,
            cert.coefficients.len()
        ));
        // the weight-(k+4) quotient is one-dimensional, so the certificate
        // pins the constant uniquely; record that as well
        let span = c2::c2_span(&cfg, k + 4).map_err(|e| e.to_string())?;
        d.push(format!(
            "weight-{} quotient dimension: {}",
            k + 4,
            span.quotient_dim()
        ));
        Ok(symbolic_ok && cert.verified)
    }));

    criteria.push(run_criterion(6, "rho, sigma, gamma with fixed-k certificate", |d| {
        let r = report::constants_report(&sym).map_err(|e| e.to_string())?;
        d.push(format!("rho = {}", r.constants.rho));
        d.push(format!("sigma = {}", r.constants.sigma));
        d.push(format!("gamma = {}", r.constants.gamma));
        let sixteen = &crate::scalar::RatFn::from_rat(rat(16)) * &r.constants.rho;
        let four = &crate::scalar::RatFn::from_rat(rat(4)) * &r.constants.sigma;
        let gamma_ok = r.constants.gamma == &sixteen + &four;
        d.push(format!(
            "decimal comparison: statement pair matches = {}, proof pair matches = {}",
            r.matches_statement_pair, r.matches_proof_pair
        ));
        if !r.matches_statement_pair && !r.matches_proof_pair {
            d.push(
                "neither printed pair matches: both descend from the printed tables, which \
                 differ from the recomputed ones (see criteria 2 and 4 details)"
                    .to_string(),
            );
        }
        let cfg = LatticeConfig::fixed(k);
        let eng = Engine::new(cfg);
        let j = eng.j_vector();
        let jj = eng.mode_apply(&j, -1, &j).map_err(|e| e.to_string())?;
        let l22j = eng
            .virasoro(-2, &eng.virasoro(-2, &j).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        let one = eng.build_named(Named::One).map_err(|e| e.to_string())?;
        let mut l24 = one;
        for _ in 0..4 {
            l24 = eng.virasoro(-2, &l24).map_err(|e| e.to_string())?;
        }
        let rho_at = r.constants.rho.evaluate(&rat(k as i64)).map_err(|e| e.to_string())?;
        let sigma_at = r
            .constants
            .sigma
            .evaluate(&rat(k as i64))
            .map_err(|e| e.to_string())?;
        let mut rhs = l22j.scaled(&Scalar::Q(rho_at));
        rhs.add_assign(&l24.scaled(&Scalar::Q(sigma_at)));
        let cert = c2::congruent(&cfg, &jj, &rhs).map_err(|e| e.to_string())?;
        d.push(format!(
            "span certificate at weight 8: verified = {} ({} generator coefficients)",
            cert.verified,
            cert.coefficients.len()
        ));
        Ok(gamma_ok && cert.verified)
    }));

    criteria.push(run_criterion(7, "charge-product identity suite", |d| {
        // identity parts only: the membership cap 0 skips the graded parts
        let rep = report::verify_charge_products(3, 3, k, 0).map_err(|e| e.to_string())?;
        let mut pass = true;
        let mut counted = 0;
        for item in &rep.items {
            match &item.status {
                report::ItemStatus::Pass => counted += 1,
                report::ItemStatus::Fail(why) => {
                    pass = false;
                    d.push(format!("{}: {}", item.name, why));
                }
                report::ItemStatus::Skipped(_) => {}
            }
        }
        d.push(format!("{} identities verified symbolically", counted));
        Ok(pass && counted > 0)
    }));

    criteria.push(run_criterion(8, "axiom property suite", |d| {
        axiom_suite(k, d)
    }));

    criteria.push(run_criterion(9, "graded spanning certificate", |d| {
        let cfg = LatticeConfig::fixed(k);
        let eng = Engine::new(cfg);
        let rep = c2::spanning_check(&cfg, max_weight).map_err(|e| e.to_string())?;
        let dims: Vec<String> = rep
            .per_weight
            .iter()
            .map(|w| format!("{}", w.quotient_dim))
            .collect();
        d.push(format!("quotient dimensions 0..={}: [{}]", max_weight, dims.join(", ")));
        d.push(format!(
            "total quotient {} within bound {}",
            rep.total_quotient, rep.bound
        ));
        d.push(format!("all weights spanned by the listed vectors: {}", rep.all_spanned));
        // explicit memberships
        let w18 = 4 * k + 6;
        let span18 = c2::c2_span(&cfg, w18).map_err(|e| e.to_string())?;
        let fam_g = report::family_g(&cfg);
        let mut g_ok = true;
        for (name, e) in &fam_g.members {
            if !span18.contains(e) {
                g_ok = false;
                d.push(format!("{} escapes the weight-{} span", name, w18));
            }
        }
        d.push(format!("charge-2 family at weight {}: contained = {}", w18, g_ok));
        let mut l_tail = eng.build_named(Named::One).map_err(|e| e.to_string())?;
        for _ in 0..(2 * k + 3) {
            l_tail = eng.virasoro(-2, &l_tail).map_err(|e| e.to_string())?;
        }
        let l_tail_ok = span18.contains(&l_tail);
        d.push(format!(
            "L(-2)^{} vacuum descendant at weight {}: contained = {}",
            2 * k + 3,
            4 * k + 6,
            l_tail_ok
        ));
        let mut l3e = eng.build_named(Named::E).map_err(|e| e.to_string())?;
        for _ in 0..3 {
            l3e = eng.virasoro(-2, &l3e).map_err(|e| e.to_string())?;
        }
        let span9 = c2::c2_span(&cfg, k + 6).map_err(|e| e.to_string())?;
        let l3e_ok = span9.contains(&l3e);
        d.push(format!("L(-2)^3 E at weight {}: contained = {}", k + 6, l3e_ok));
        Ok(rep.all_spanned
            && rep.total_quotient <= rep.bound
            && g_ok
            && l_tail_ok
            && l3e_ok)
    }));

    criteria.push(run_criterion(10, "determinant root guards", |d| {
        let quad = parse_ratfn("16*k^2 - 40*k + 9").map_err(|e| e.to_string())?;
        let quad_roots_ok = quad.evaluate(&ratio(1, 4)).map_err(|e| e.to_string())?.is_zero()
            && quad.evaluate(&ratio(9, 4)).map_err(|e| e.to_string())?.is_zero()
            && quad == parse_ratfn("(4*k-1)*(4*k-9)").map_err(|e| e.to_string())?;
        d.push(format!("16k^2 - 40k + 9 has roots exactly 1/4, 9/4: {}", quad_roots_ok));
        let quartic = parse_ratfn(reference::DET_C_QUARTIC).map_err(|e| e.to_string())?;
        let mut quartic_ok = true;
        for kk in 1..=100i64 {
            if quartic.evaluate(&rat(kk)).map_err(|e| e.to_string())?.is_zero() {
                quartic_ok = false;
                d.push(format!("printed quartic vanishes at k = {}", kk));
            }
        }
        d.push(format!(
            "printed quartic nonzero for every integer k in 1..=100: {}",
            quartic_ok
        ));
        // the recomputed determinant factor never vanishes either
        let true_factor = parse_ratfn("4*k - 1").map_err(|e| e.to_string())?;
        let mut true_ok = true;
        for kk in 1..=100i64 {
            if true_factor.evaluate(&rat(kk)).map_err(|e| e.to_string())?.is_zero() {
                true_ok = false;
            }
        }
        d.push(format!(
            "recomputed table-6 determinant factor 4k - 1 nonzero for k in 1..=100: {}",
            true_ok
        ));
        Ok(quad_roots_ok && quartic_ok && true_ok)
    }));

    VerifyReport {
        k,
        max_weight,
        criteria,
    }
}

/// Criterion 8: creation axiom, translation-derivative property, Virasoro
/// commutators, the commutator consequence of the Jacobi identity, weight
/// additivity, the involution automorphism property, and engine-vs-oracle
/// agreement on randomized cases. All exact.
fn axiom_suite(k: u32, d: &mut Vec<String>) -> Result<bool, String> {
    let cfg = LatticeConfig::fixed(k);
    let eng = Engine::new(cfg);
    let mut rng = Rng(0x5eed_1234_abcd_ef01);
    let mut all_ok = true;
    let fail = |d: &mut Vec<String>, what: String| {
        d.push(what);
        false
    };

    // creation axiom on random elements
    let one = eng.build_named(Named::One).map_err(|e| e.to_string())?;
    let mut ok = true;
    for _ in 0..30 {
        let w = rng.range(0, 8) as u32;
        let v = random_homogeneous(&mut rng, &cfg, w);
        if v.is_zero() {
            continue;
        }
        if eng.mode_apply(&v, -1, &one).map_err(|e| e.to_string())? != v {
            ok = fail(d, format!("creation axiom fails for {}", v));
        }
        for t in 0..3 {
            if !eng.mode_apply(&v, t, &one).map_err(|e| e.to_string())?.is_zero() {
                ok = fail(d, format!("v_{} 1 nonzero for {}", t, v));
            }
        }
    }
    d.push(format!("creation axiom on 30 random elements: {}", ok));
    all_ok &= ok;

    // (L(-1)v)_t = -t v_{t-1}
    let mut ok = true;
    for _ in 0..25 {
        let wv = rng.range(0, 6) as u32;
        let ww = rng.range(0, 6) as u32;
        let v = random_homogeneous(&mut rng, &cfg, wv);
        let w = random_homogeneous(&mut rng, &cfg, ww);
        if v.is_zero() || w.is_zero() {
            continue;
        }
        let lv = eng.virasoro(-1, &v).map_err(|e| e.to_string())?;
        for t in -3..=3i64 {
            let lhs = eng.mode_apply(&lv, t, &w).map_err(|e| e.to_string())?;
            let rhs = eng
                .mode_apply(&v, t - 1, &w)
                .map_err(|e| e.to_string())?
                .scaled(&scalar_int(&cfg, -t));
            if lhs != rhs {
                ok = fail(d, format!("translation-derivative fails at t = {}", t));
            }
        }
    }
    d.push(format!("translation-derivative property on 25 random pairs: {}", ok));
    all_ok &= ok;

    // Virasoro commutators, fixed and symbolic
    let mut ok = true;
    for mode in ["fixed", "symbolic"] {
        let (c2cfg, engine): (LatticeConfig, Engine) = if mode == "fixed" {
            (cfg, Engine::new(cfg))
        } else {
            let s = LatticeConfig::symbolic();
            (s, Engine::new(s))
        };
        for _ in 0..6 {
            let w = if mode == "fixed" {
                let wt = rng.range(0, 8) as u32;
                random_homogeneous(&mut rng, &cfg, wt)
            } else {
                // symbolic: keep to the even part plus one charged combo
                let h = rng.range(0, 6) as u32;
                let mut e = FockElement::zero();
                for p in partitions(h).into_iter().take(2) {
                    e.add_term(FockMonomial::new(p, 0), c2cfg.from_int(rng.range(1, 3)));
                }
                e
            };
            if w.is_zero() {
                continue;
            }
            for m in -3..=3i64 {
                for n in -3..=3i64 {
                    let lhs = {
                        let a = engine
                            .virasoro(m, &engine.virasoro(n, &w).map_err(|e| e.to_string())?)
                            .map_err(|e| e.to_string())?;
                        let b = engine
                            .virasoro(n, &engine.virasoro(m, &w).map_err(|e| e.to_string())?)
                            .map_err(|e| e.to_string())?;
                        a.sub(&b)
                    };
                    let mut rhs = engine
                        .virasoro(m + n, &w)
                        .map_err(|e| e.to_string())?
                        .scaled(&c2cfg.from_int(m - n));
                    if m + n == 0 {
                        let central = c2cfg.from_rat(ratio(m * m * m - m, 12));
                        rhs.add_scaled(&central, &w);
                    }
                    if lhs != rhs {
                        ok = fail(d, format!("[L({}), L({})] fails ({} k)", m, n, mode));
                    }
                }
            }
        }
    }
    d.push(format!("Virasoro relation for m, n in [-3, 3], both modes: {}", ok));
    all_ok &= ok;

    // commutator formula from the Jacobi identity
    let mut ok = true;
    let mut tested = 0;
    while tested < 12 {
        let wu = rng.range(2, 5) as u32;
        let wv = rng.range(2, 5) as u32;
        let ww = rng.range(0, (9i64 - wu as i64 - wv as i64).max(0)) as u32;
        let u = random_homogeneous(&mut rng, &cfg, wu);
        let v = random_homogeneous(&mut rng, &cfg, wv);
        let w = random_homogeneous(&mut rng, &cfg, ww);
        if u.is_zero() || v.is_zero() || w.is_zero() {
            continue;
        }
        tested += 1;
        let s = rng.range(-2, 2);
        let t = rng.range(-2, 2);
        let lhs = {
            let a = eng
                .mode_apply(&u, s, &eng.mode_apply(&v, t, &w).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?;
            let b = eng
                .mode_apply(&v, t, &eng.mode_apply(&u, s, &w).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?;
            a.sub(&b)
        };
        let mut rhs = FockElement::zero();
        for i in 0..=(wu + wv) as i64 + 2 {
            let uv = eng.mode_apply(&u, i, &v).map_err(|e| e.to_string())?;
            if uv.is_zero() {
                continue;
            }
            let term = eng
                .mode_apply(&uv, s + t - i, &w)
                .map_err(|e| e.to_string())?;
            let coeff = cfg.from_rat(Rat::from_integer(binomial(s, i)));
            rhs.add_scaled(&coeff, &term);
        }
        if lhs != rhs {
            ok = fail(d, format!("commutator formula fails at s = {}, t = {}", s, t));
        }
    }
    d.push(format!("Jacobi commutator formula on 12 random triples: {}", ok));
    all_ok &= ok;

    // weight additivity and the involution automorphism on random products
    let mut ok_weight = true;
    let mut ok_theta = true;
    for _ in 0..20 {
        let wv = rng.range(0, 6) as u32;
        let ww = rng.range(0, 6) as u32;
        let v = random_homogeneous(&mut rng, &cfg, wv);
        let w = random_homogeneous(&mut rng, &cfg, ww);
        if v.is_zero() || w.is_zero() {
            continue;
        }
        let t = rng.range(-4, 4);
        let out = eng.mode_apply(&v, t, &w).map_err(|e| e.to_string())?;
        if !out.is_zero() {
            let expect = scalar_int(&cfg, (wv + ww) as i64 - t - 1);
            if out.weight(&cfg).map_err(|e| e.to_string())? != expect {
                ok_weight = false;
                d.push(format!("weight additivity fails at t = {}", t));
            }
        }
        let lhs = out.theta();
        let rhs = eng
            .mode_apply(&v.theta(), t, &w.theta())
            .map_err(|e| e.to_string())?;
        if lhs != rhs {
            ok_theta = false;
            d.push(format!("involution automorphism fails at t = {}", t));
        }
    }
    d.push(format!("weight additivity on random products: {}", ok_weight));
    d.push(format!("involution is an automorphism on random products: {}", ok_theta));
    all_ok &= ok_weight && ok_theta;

    // engine vs literal-series oracle
    let mut ok = true;
    let mut cases = 0;
    while cases < 220 {
        let wv = rng.range(0, 5) as u32;
        let ww = rng.range(0, 5) as u32;
        let v = random_homogeneous(&mut rng, &cfg, wv);
        let w = random_homogeneous(&mut rng, &cfg, ww);
        if v.is_zero() || w.is_zero() {
            continue;
        }
        cases += 1;
        let t = rng.range(-6, 4);
        let fast = eng.mode_apply(&v, t, &w).map_err(|e| e.to_string())?;
        let slow = mode_apply_oracle(&cfg, &v, t, &w, 24).map_err(|e| e.to_string())?;
        if fast != slow {
            ok = fail(d, format!("oracle disagreement at t = {} on {} | {}", t, v, w));
        }
    }
    d.push(format!("mode application vs literal-series oracle on {} cases: {}", cases, ok));
    all_ok &= ok;

    Ok(all_ok)
}
