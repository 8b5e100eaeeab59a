//! Vertex-operator structure on the lattice Fock space: Heisenberg mode
//! actions, general mode application `v_t w` with the open-colon normal
//! ordering, Schur polynomial states, and the Virasoro operators built from
//! `ω = (1/4k) α(-1)²`.
//!
//! `mode_apply` decomposes `Y(v,z)` as the normal-ordered product of the
//! derivative fields of `α(z)` and the exponential/charge factors of
//! `Y(e^{aα},z)`, applied right-to-left. The recursion below is that
//! decomposition pushed to mode level: stripping one creation index `n`
//! from `v` splits into annihilation modes acting on `w` first and creation
//! modes prepended to the result, with binomial weight `C(-j-1, n-1)`.
//!
//! `mode_apply_oracle` recomputes the same coefficient by literal truncated
//! series expansion of every factor and is used as an independent check.

use crate::fock::{FockElement, FockMonomial};
use crate::poly::{rat, Rat};
use crate::scalar::{LatticeConfig, Scalar};
use num::{BigInt, One, Zero};
use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VertexError {
    /// Symbolic mode with both charges nonzero: the charge pairing exponent
    /// `2k·a·b` is not an integer, so plain integer modes are ill-posed.
    SymbolicChargePairing { v_charge: i32, w_charge: i32 },
    /// The brute-force oracle refuses inputs above its weight cap.
    OracleCap { total_weight: u32, cap: u32 },
    OracleNeedsFixedK,
    /// `Em`/`Fm` need a positive sector index.
    BadSectorIndex(i64),
}

impl fmt::Display for VertexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexError::SymbolicChargePairing { v_charge, w_charge } => write!(
                f,
                "symbolic mode application with charges ({}, {}): the pairing exponent 2k*a*b is k-dependent; \
                 fix k or use the dedicated charged-mode analysis",
                v_charge, w_charge
            ),
            VertexError::OracleCap { total_weight, cap } => write!(
                f,
                "oracle cap exceeded: total weight {} > cap {}",
                total_weight, cap
            ),
            VertexError::OracleNeedsFixedK => write!(f, "the series oracle runs at fixed k only"),
            VertexError::BadSectorIndex(m) => write!(f, "sector index must be >= 1, got {}", m),
        }
    }
}

impl std::error::Error for VertexError {}

/// Named generators and distinguished vectors.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Named {
    One,
    E,
    F,
    Em(i64),
    Fm(i64),
    Omega,
    J,
}

type ModeKey = (FockMonomial, i64, FockMonomial);
type SchurTable = Vec<(Vec<u32>, Rat)>;

/// Mode-application engine for one lattice configuration.
///
/// Results are memoized per monomial triple; the memo is an invisible
/// cache, identical results are produced with it cleared.
pub struct Engine {
    cfg: LatticeConfig,
    memo: RefCell<HashMap<ModeKey, Rc<FockElement>>>,
    schur: RefCell<HashMap<u32, Rc<SchurTable>>>,
}

impl Engine {
    pub fn new(cfg: LatticeConfig) -> Engine {
        Engine {
            cfg,
            memo: RefCell::new(HashMap::new()),
            schur: RefCell::new(HashMap::new()),
        }
    }

    pub fn cfg(&self) -> &LatticeConfig {
        &self.cfg
    }

    /// `ω = (1/4k) α(-1)² 1`.
    pub fn omega(&self) -> FockElement {
        let c = &self.cfg.from_rat(crate::poly::ratio(1, 4)) * &self.cfg.k_scalar().inv();
        FockElement::from_monomial(FockMonomial::new(vec![1, 1], 0), c)
    }

    /// `J = (1/4k²) α(-1)⁴ 1 - (1/k) α(-3)α(-1) 1 + (3/4k) α(-2)² 1`.
    pub fn j_vector(&self) -> FockElement {
        let k_inv = self.cfg.k_scalar().inv();
        let mut e = FockElement::zero();
        e.add_term(
            FockMonomial::new(vec![1, 1, 1, 1], 0),
            &(&self.cfg.from_rat(crate::poly::ratio(1, 4)) * &k_inv) * &k_inv,
        );
        e.add_term(FockMonomial::new(vec![3, 1], 0), -&k_inv);
        e.add_term(
            FockMonomial::new(vec![2, 2], 0),
            &self.cfg.from_rat(crate::poly::ratio(3, 4)) * &k_inv,
        );
        e
    }

    /// `rank V` in the Virasoro relation; 1 for a rank-one lattice.
    pub fn central_charge(&self) -> Scalar {
        self.cfg.one()
    }

    pub fn build_named(&self, name: Named) -> Result<FockElement, VertexError> {
        let one = || self.cfg.one();
        let combo = |m: i64, sign: i64| -> Result<FockElement, VertexError> {
            if m < 1 {
                return Err(VertexError::BadSectorIndex(m));
            }
            let mut e = FockElement::from_monomial(FockMonomial::exponential(m as i32), one());
            e.add_term(FockMonomial::exponential(-m as i32), self.cfg.from_int(sign));
            Ok(e)
        };
        match name {
            Named::One => Ok(FockElement::from_monomial(FockMonomial::vacuum(), one())),
            Named::E => combo(1, 1),
            Named::F => combo(1, -1),
            Named::Em(m) => combo(m, 1),
            Named::Fm(m) => combo(m, -1),
            Named::Omega => Ok(self.omega()),
            Named::J => Ok(self.j_vector()),
        }
    }

    /// Heisenberg mode action `α(n)`.
    ///
    /// `n < 0` prepends the creation index; `n = 0` multiplies each monomial
    /// by `2km`; `n > 0` contracts by `[α(n), α(-n)] = 2kn`.
    pub fn apply_alpha(&self, n: i64, e: &FockElement) -> FockElement {
        let mut out = FockElement::zero();
        for (m, c) in e.terms() {
            if n < 0 {
                out.add_term(m.with_prepended((-n) as u32), c.clone());
            } else if n == 0 {
                if m.charge() != 0 {
                    out.add_term(m.clone(), &self.cfg.two_k(m.charge() as i64) * c);
                }
            } else {
                let mult = m.multiplicity(n as u32);
                if mult > 0 {
                    let reduced = m.without_part(n as u32).unwrap();
                    out.add_term(reduced, &self.cfg.two_k(n * mult as i64) * c);
                }
            }
        }
        out
    }

    /// Schur polynomial state `p_j(mα)`: homogeneous of weight `j` in M(1),
    /// the `z^j` coefficient of `exp(Σ_{n≥1} m·α(-n)/n · z^n)` on the vacuum.
    pub fn schur_p(&self, j: u32, m: i64) -> FockElement {
        let table = self.schur_table(j);
        let mut out = FockElement::zero();
        for (parts, inv_z) in table.iter() {
            let scale = BigInt::from(m).pow(parts.len() as u32);
            out.add_term(
                FockMonomial::new(parts.clone(), 0),
                self.cfg.from_rat(inv_z * Rat::from_integer(scale)),
            );
        }
        out
    }

    /// Partition table for `p_j`: pairs `(λ, 1/zλ)` with `zλ = Π r^{m_r} m_r!`.
    fn schur_table(&self, j: u32) -> Rc<SchurTable> {
        if let Some(t) = self.schur.borrow().get(&j) {
            return Rc::clone(t);
        }
        let mut table = Vec::new();
        for parts in crate::fock::partitions(j) {
            table.push((parts.clone(), z_factor_inv(&parts)));
        }
        let rc = Rc::new(table);
        self.schur.borrow_mut().insert(j, Rc::clone(&rc));
        rc
    }

    /// `L(n) = ω_{n+1}`.
    pub fn virasoro(&self, n: i64, e: &FockElement) -> Result<FockElement, VertexError> {
        self.mode_apply(&self.omega(), n + 1, e)
    }

    /// The mode `v_t w`: coefficient of `z^{-t-1}` in `Y(v,z)w`.
    pub fn mode_apply(
        &self,
        v: &FockElement,
        t: i64,
        w: &FockElement,
    ) -> Result<FockElement, VertexError> {
        let mut out = FockElement::zero();
        for (vm, cv) in v.terms() {
            for (wm, cw) in w.terms() {
                if self.cfg.is_symbolic() && vm.charge() != 0 && wm.charge() != 0 {
                    return Err(VertexError::SymbolicChargePairing {
                        v_charge: vm.charge(),
                        w_charge: wm.charge(),
                    });
                }
                let r = self.mode_apply_mono(vm, t, wm);
                out.add_scaled(&(cv * cw), &r);
            }
        }
        Ok(out)
    }

    /// Heisenberg weight of `v_t w` output; `None` when the result must
    /// vanish on grading grounds.
    fn out_heisenberg_weight(&self, vm: &FockMonomial, t: i64, wm: &FockMonomial) -> Option<i64> {
        let pairing = match self.cfg.fixed_k() {
            Some(k) => 2 * k as i64 * vm.charge() as i64 * wm.charge() as i64,
            // callers guarantee a*b = 0 in symbolic mode
            None => 0,
        };
        let h = vm.heisenberg_weight() as i64 + wm.heisenberg_weight() as i64 - t - 1 - pairing;
        (h >= 0).then_some(h)
    }

    fn mode_apply_mono(&self, vm: &FockMonomial, t: i64, wm: &FockMonomial) -> Rc<FockElement> {
        let key = (vm.clone(), t, wm.clone());
        if let Some(r) = self.memo.borrow().get(&key) {
            return Rc::clone(r);
        }
        let result = Rc::new(self.mode_apply_mono_uncached(vm, t, wm));
        self.memo.borrow_mut().insert(key, Rc::clone(&result));
        result
    }

    fn mode_apply_mono_uncached(&self, vm: &FockMonomial, t: i64, wm: &FockMonomial) -> FockElement {
        let h_out = match self.out_heisenberg_weight(vm, t, wm) {
            Some(h) => h,
            None => return FockElement::zero(),
        };
        match vm.parts().first().copied() {
            // strip the leading derivative field (1/(n-1)!) d^{n-1}α(z)
            Some(n) => {
                let v_rest = vm.without_part(n).unwrap();
                let n_i = n as i64;
                let mut out = FockElement::zero();
                // annihilation modes j > 0 contract against w
                for j in wm.distinct_parts() {
                    let mult = wm.multiplicity(j) as i64;
                    let j = j as i64;
                    let b = binomial(-j - 1, n_i - 1);
                    if b.is_zero() {
                        continue;
                    }
                    let sub = self.mode_apply_mono(&v_rest, t - j - n_i, &wm.without_part(j as u32).unwrap());
                    let coeff = &self.cfg.two_k(j * mult) * &self.cfg.from_rat(Rat::from_integer(b));
                    out.add_scaled(&coeff, &sub);
                }
                // α(0) reads the charge of w
                if wm.charge() != 0 {
                    let b = binomial(-1, n_i - 1);
                    if !b.is_zero() {
                        let sub = self.mode_apply_mono(&v_rest, t - n_i, wm);
                        let coeff =
                            &self.cfg.two_k(wm.charge() as i64) * &self.cfg.from_rat(Rat::from_integer(b));
                        out.add_scaled(&coeff, &sub);
                    }
                }
                // creation modes j = -d prepend to the result
                for d in 1..=h_out {
                    let b = binomial(d - 1, n_i - 1);
                    if b.is_zero() {
                        continue;
                    }
                    let sub = self.mode_apply_mono(&v_rest, t + d - n_i, wm);
                    if sub.is_zero() {
                        continue;
                    }
                    let coeff = self.cfg.from_rat(Rat::from_integer(b));
                    let mut prepended = FockElement::zero();
                    for (m, c) in sub.terms() {
                        prepended.add_term(m.with_prepended(d as u32), c.clone());
                    }
                    out.add_scaled(&coeff, &prepended);
                }
                out
            }
            None => self.exponential_mode_mono(vm.charge(), t, wm, h_out),
        }
    }

    /// Base case `(e^{aα})_t` applied to a monomial: `z^{aα}` contributes the
    /// pairing exponent, the annihilation exponential contracts partitions of
    /// `w`, `e^{aα}` shifts the charge, the creation exponential supplies a
    /// Schur factor determined by the remaining `z`-power.
    fn exponential_mode_mono(&self, a: i32, t: i64, wm: &FockMonomial, h_out: i64) -> FockElement {
        if a == 0 {
            return if t == -1 {
                FockElement::from_monomial(wm.clone(), self.cfg.one())
            } else {
                FockElement::zero()
            };
        }
        let b = wm.charge();
        let pairing = match self.cfg.fixed_k() {
            Some(k) => 2 * k as i64 * a as i64 * b as i64,
            None => {
                debug_assert_eq!(b, 0);
                0
            }
        };
        let out_charge = a + b;
        let two_k = &self.cfg.from_int(2) * &self.cfg.k_scalar();
        let mut out = FockElement::zero();
        // enumerate contraction multisets over the distinct parts of w; the
        // exponential term for c contractions on part s carries
        // (-a/s)^c / c!  and each α(s) contraction contributes 2ks·(count),
        // so the s powers cancel: (-a)^c (2k)^c avail!/(avail-c)! / c!
        let distinct = wm.distinct_parts();
        let mut choice: Vec<usize> = vec![0; distinct.len()];
        loop {
            let mut num = Rat::one();
            let mut removed = 0i64;
            let mut contractions = 0usize;
            let mut reduced = wm.clone();
            for (idx, &s) in distinct.iter().enumerate() {
                let c = choice[idx];
                if c == 0 {
                    continue;
                }
                contractions += c;
                removed += (s as i64) * c as i64;
                let avail = wm.multiplicity(s);
                let mut falling = BigInt::one();
                for i in 0..c {
                    falling *= BigInt::from(avail - i);
                }
                num *= Rat::new(BigInt::from(-a).pow(c as u32) * falling, factorial(c));
                for _ in 0..c {
                    reduced = reduced.without_part(s).unwrap();
                }
            }
            let mut scale = self.cfg.from_rat(num);
            for _ in 0..contractions {
                scale = &scale * &two_k;
            }
            let j_cre = -t - 1 - pairing + removed;
            self.add_creation_terms(&mut out, a, out_charge, &reduced, j_cre, h_out, &scale);
            // advance the mixed-radix contraction counter
            let mut idx = 0;
            loop {
                if idx == distinct.len() {
                    return out;
                }
                if choice[idx] < wm.multiplicity(distinct[idx]) {
                    choice[idx] += 1;
                    break;
                }
                choice[idx] = 0;
                idx += 1;
            }
        }
    }

    fn add_creation_terms(
        &self,
        out: &mut FockElement,
        a: i32,
        out_charge: i32,
        reduced: &FockMonomial,
        j_cre: i64,
        h_out: i64,
        scale: &Scalar,
    ) {
        if j_cre < 0 || reduced.heisenberg_weight() as i64 + j_cre > h_out {
            return;
        }
        let shifted = reduced.with_charge(out_charge);
        if j_cre == 0 {
            out.add_term(shifted, scale.clone());
            return;
        }
        let table = self.schur_table(j_cre as u32);
        for (parts, inv_z) in table.iter() {
            let mut m = shifted.clone();
            for &p in parts {
                m = m.with_prepended(p);
            }
            let c = Rat::from_integer(BigInt::from(a).pow(parts.len() as u32)) * inv_z;
            out.add_term(m, scale * &self.cfg.from_rat(c));
        }
    }

    /// Clear the memo (results are unaffected; used by the tests that check
    /// memoized and cold paths agree bit-for-bit).
    pub fn clear_memo(&self) {
        self.memo.borrow_mut().clear();
        self.schur.borrow_mut().clear();
    }

    pub fn memo_len(&self) -> usize {
        self.memo.borrow().len()
    }
}

fn factorial(n: usize) -> BigInt {
    let mut f = BigInt::one();
    for i in 2..=n {
        f *= BigInt::from(i);
    }
    f
}

/// `1/zλ` for a partition: `zλ = Π_r r^{m_r} · m_r!`.
fn z_factor_inv(parts: &[u32]) -> Rat {
    let mut z = BigInt::one();
    let mut i = 0;
    while i < parts.len() {
        let r = parts[i];
        let mut m = 0usize;
        while i < parts.len() && parts[i] == r {
            m += 1;
            i += 1;
        }
        z *= BigInt::from(r).pow(m as u32) * factorial(m);
    }
    Rat::new(BigInt::one(), z)
}

/// Binomial coefficient `C(n, r)` for integer `n` (possibly negative) and
/// `r >= 0`, as used in the derivative-field expansion.
pub fn binomial(n: i64, r: i64) -> BigInt {
    if r < 0 {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    for i in 0..r {
        num *= BigInt::from(n - i);
    }
    num / factorial(r as usize)
}

// ---- literal-series oracle ----

/// `v_t w` by literal truncated formal-series expansion of every factor of
/// `Y(v,z)`, with the factors arranged per the open-colon rule and no
/// contraction shortcuts. Fixed `k` only; refuses inputs whose total weight
/// exceeds `cap`.
pub fn mode_apply_oracle(
    cfg: &LatticeConfig,
    v: &FockElement,
    t: i64,
    w: &FockElement,
    cap: u32,
) -> Result<FockElement, VertexError> {
    let k = cfg.fixed_k().ok_or(VertexError::OracleNeedsFixedK)?;
    let weight_of = |e: &FockElement| -> u32 {
        e.terms()
            .map(|(m, _)| m.weight_at(k))
            .max()
            .unwrap_or(0)
    };
    let total = weight_of(v) + weight_of(w);
    if total > cap {
        return Err(VertexError::OracleCap {
            total_weight: total,
            cap,
        });
    }
    let mut out = FockElement::zero();
    for (vm, cv) in v.terms() {
        for (wm, cw) in w.terms() {
            let r = oracle_mono(cfg, k, vm, t, wm);
            out.add_scaled(&(cv * cw), &r);
        }
    }
    Ok(out)
}

/// One term of a truncated operator series: annihilation parts to apply,
/// creation parts to prepend, a rational coefficient and a z-offset.
#[derive(Clone, Debug)]
struct SeriesTerm {
    ann: Vec<u32>,
    cre: Vec<u32>,
    coeff: Rat,
    zpow: i64,
    alpha_zero: u32,
}

fn oracle_mono(cfg: &LatticeConfig, k: u32, vm: &FockMonomial, t: i64, wm: &FockMonomial) -> FockElement {
    let a = vm.charge();
    let b = wm.charge();
    let pairing = 2 * k as i64 * a as i64 * b as i64;
    let hw = wm.heisenberg_weight() as i64;
    let h_out = vm.heisenberg_weight() as i64 + hw - t - 1 - pairing;
    if h_out < 0 {
        return FockElement::zero();
    }

    // literal truncated expansion of exp(± Σ (a/n) α(∓n) z^{±n}): multiply the
    // per-n exponential series term by term
    let exp_series = |sign: i64, bound: i64| -> Vec<SeriesTerm> {
        let mut terms = vec![SeriesTerm {
            ann: vec![],
            cre: vec![],
            coeff: Rat::one(),
            zpow: 0,
            alpha_zero: 0,
        }];
        if a == 0 || bound <= 0 {
            return terms;
        }
        for n in 1..=bound {
            let mut next = Vec::new();
            for term in &terms {
                let used: i64 = if sign < 0 {
                    term.ann.iter().map(|&p| p as i64).sum()
                } else {
                    term.cre.iter().map(|&p| p as i64).sum()
                };
                let mut power_coeff = Rat::one();
                let mut s = 0i64;
                while used + n * s <= bound {
                    if s > 0 {
                        // multiply by ((sign*a/n) z^{sign*n})^s / s!  — built up factor by factor
                        power_coeff = power_coeff * Rat::new(BigInt::from(sign * a as i64), BigInt::from(n * s));
                    }
                    let mut nt = term.clone();
                    nt.coeff = &term.coeff * &power_coeff;
                    for _ in 0..s {
                        if sign < 0 {
                            nt.ann.push(n as u32);
                        } else {
                            nt.cre.push(n as u32);
                        }
                    }
                    nt.zpow = term.zpow + sign * n * s;
                    next.push(nt);
                    s += 1;
                }
            }
            terms = next;
        }
        terms
    };

    let ann_terms = exp_series(-1, hw);
    let cre_terms = exp_series(1, h_out);

    // derivative fields: for each part n of v, the series
    // Σ_j C(-j-1, n-1) α(j) z^{-j-n}; states whose z-power cannot reach the
    // window left for the exponential factors are dropped
    let target_z = -t - 1 - pairing;
    let parts: Vec<i64> = vm.parts().iter().map(|&n| n as i64).collect();
    let mut rem_min = vec![0i64; parts.len() + 1];
    let mut rem_max = vec![0i64; parts.len() + 1];
    for i in (0..parts.len()).rev() {
        rem_min[i] = rem_min[i + 1] + (-hw - parts[i]);
        rem_max[i] = rem_max[i + 1] + (h_out - parts[i]);
    }
    let mut combined: Vec<SeriesTerm> = vec![SeriesTerm {
        ann: vec![],
        cre: vec![],
        coeff: Rat::one(),
        zpow: 0,
        alpha_zero: 0,
    }];
    for (fi, &n) in parts.iter().enumerate() {
        let mut next = Vec::new();
        for term in &combined {
            let cre_used: i64 = term.cre.iter().map(|&p| p as i64).sum();
            for j in -h_out..=hw {
                let bc = binomial(-j - 1, n - 1);
                if bc.is_zero() {
                    continue;
                }
                if j == 0 && b == 0 {
                    continue;
                }
                if j < 0 && cre_used - j > h_out {
                    continue;
                }
                let zpow = term.zpow - j - n;
                // the exponential factors add z-powers in [-hw, h_out]
                if zpow + rem_max[fi + 1] < target_z - h_out
                    || zpow + rem_min[fi + 1] > target_z + hw
                {
                    continue;
                }
                let mut nt = term.clone();
                nt.coeff = &term.coeff * &Rat::from_integer(bc);
                if j > 0 {
                    nt.ann.push(j as u32);
                } else if j < 0 {
                    nt.cre.push((-j) as u32);
                } else {
                    nt.alpha_zero += 1;
                }
                nt.zpow = zpow;
                next.push(nt);
            }
        }
        combined = next;
    }

    let two_k = rat(2 * k as i64);
    let mut out = FockElement::zero();
    for dv in &combined {
        for at in &ann_terms {
            for ct in &cre_terms {
                let z_total = pairing + dv.zpow + at.zpow + ct.zpow;
                if z_total != -t - 1 {
                    continue;
                }
                // apply annihilation parts (derivative-field and exponential)
                // to w; all of them commute
                let mut state = wm.clone();
                let mut coeff = &dv.coeff * &at.coeff * &ct.coeff;
                let mut dead = false;
                for &p in dv.ann.iter().chain(at.ann.iter()) {
                    let mult = state.multiplicity(p);
                    if mult == 0 {
                        dead = true;
                        break;
                    }
                    coeff = coeff * &two_k * rat(p as i64 * mult as i64);
                    state = state.without_part(p).unwrap();
                }
                if dead || coeff.is_zero() {
                    continue;
                }
                for _ in 0..dv.alpha_zero {
                    coeff = coeff * &two_k * rat(b as i64);
                }
                // charge shift, then prepend all creation parts
                let mut m = state.with_charge(a + b);
                for &p in dv.cre.iter().chain(ct.cre.iter()) {
                    m = m.with_prepended(p);
                }
                out.add_term(m, cfg.from_rat(coeff));
            }
        }
    }
    out
}

// ---- symbolic charged-mode analysis ----

/// An integer affine in `k`: `constant + k_coeff · k`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct AffineInt {
    pub constant: i64,
    pub k_coeff: i64,
}

impl AffineInt {
    pub fn new(constant: i64, k_coeff: i64) -> Self {
        AffineInt { constant, k_coeff }
    }

    pub fn value_at(&self, k: u32) -> i64 {
        self.constant + self.k_coeff * k as i64
    }
}

impl fmt::Display for AffineInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.k_coeff, self.constant) {
            (0, c) => write!(f, "{}", c),
            (d, 0) => write!(f, "{}k", d),
            (d, c) if c < 0 => write!(f, "{}k - {}", d, -c),
            (d, c) => write!(f, "{}k + {}", d, c),
        }
    }
}

/// `(e^{aα})_t e^{bα}` for an affine mode index `t`: the annihilation
/// exponential is trivial on a bare exponential, so the result is the single
/// Schur term `p_j(aα) ⊗ e^{(a+b)α}` with `j = -t - 1 - 2ab·k`.
///
/// This is the charged-mode path used by the symbolic identity checks; the
/// index stays affine in `k` and is only expanded at a chosen `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChargedModeTerm {
    pub out_charge: i32,
    /// scale `a` inside `p_j(aα)`
    pub schur_scale: i32,
    pub index: AffineInt,
}

pub fn charged_exponential_mode(a: i32, b: i32, t: AffineInt) -> ChargedModeTerm {
    ChargedModeTerm {
        out_charge: a + b,
        schur_scale: a,
        index: AffineInt::new(-t.constant - 1, -t.k_coeff - 2 * (a as i64) * (b as i64)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::FockElement;
    use crate::poly::ratio;

    fn k3() -> Engine {
        Engine::new(LatticeConfig::fixed(3))
    }

    fn sym() -> Engine {
        Engine::new(LatticeConfig::symbolic())
    }

    fn mono(parts: &[u32], charge: i32) -> FockMonomial {
        FockMonomial::new(parts.to_vec(), charge)
    }

    fn single(cfg: &LatticeConfig, parts: &[u32], charge: i32) -> FockElement {
        FockElement::from_monomial(mono(parts, charge), cfg.one())
    }

    #[test]
    fn alpha_zero_on_charges() {
        for eng in [k3(), sym()] {
            for m in 1..=2i64 {
                let em = eng.build_named(Named::Em(m)).unwrap();
                let fm = eng.build_named(Named::Fm(m)).unwrap();
                // α(0)E^m = 2km F^m and α(0)F^m = 2km E^m
                let factor = eng.cfg().two_k(m);
                assert_eq!(eng.apply_alpha(0, &em), fm.scaled(&factor));
                assert_eq!(eng.apply_alpha(0, &fm), em.scaled(&factor));
            }
        }
    }

    #[test]
    fn alpha_creation_and_commutator() {
        let eng = k3();
        let one = eng.build_named(Named::One).unwrap();
        let created = eng.apply_alpha(-2, &one);
        assert_eq!(created, single(eng.cfg(), &[2], 0));
        // α(1)α(-1)1 = 2k·1
        let x = eng.apply_alpha(1, &eng.apply_alpha(-1, &one));
        assert_eq!(x, one.scaled(&eng.cfg().from_int(6)));
    }

    #[test]
    fn vacuum_modes() {
        let eng = k3();
        let one = eng.build_named(Named::One).unwrap();
        let j = eng.j_vector();
        for t in -3..=3 {
            let r = eng.mode_apply(&one, t, &j).unwrap();
            if t == -1 {
                assert_eq!(r, j);
            } else {
                assert!(r.is_zero(), "1_{} J should vanish", t);
            }
        }
    }

    #[test]
    fn creation_axiom() {
        let eng = k3();
        let one = eng.build_named(Named::One).unwrap();
        for v in [
            eng.j_vector(),
            eng.omega(),
            eng.build_named(Named::E).unwrap(),
            single(eng.cfg(), &[3, 2, 1], 1),
        ] {
            assert_eq!(eng.mode_apply(&v, -1, &one).unwrap(), v);
            for t in 0..4 {
                assert!(eng.mode_apply(&v, t, &one).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn lemma_e_square_expansion_at_k3() {
        // E_{-2k-1}E = E² + p_{4k}(α) + p_{4k}(-α) at k = 3
        let eng = k3();
        let e = eng.build_named(Named::E).unwrap();
        let lhs = eng.mode_apply(&e, -7, &e).unwrap();
        let mut rhs = eng.build_named(Named::Em(2)).unwrap();
        rhs.add_assign(&eng.schur_p(12, 1));
        rhs.add_assign(&eng.schur_p(12, -1));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn lemma_two_mode_product_symbolic() {
        // (α(-n)α(-1)1)_{-1} E^m = 2km(n + (-1)^{n-1}) α(-n-1)F^m + α(-n)α(-1)E^m
        let eng = sym();
        for (n, m) in [(2u32, 1i64), (1, 1), (3, 2)] {
            let v = single(eng.cfg(), &[n, 1], 0);
            let em = eng.build_named(Named::Em(m)).unwrap();
            let fm = eng.build_named(Named::Fm(m)).unwrap();
            let lhs = eng.mode_apply(&v, -1, &em).unwrap();
            let sign = if n % 2 == 1 { 1 } else { -1 };
            let factor = &eng.cfg().two_k(m) * &eng.cfg().from_int(n as i64 + sign);
            let mut rhs = eng.apply_alpha(-(n as i64 + 1), &fm).scaled(&factor);
            rhs.add_assign(&eng.apply_alpha(-(n as i64), &eng.apply_alpha(-1, &em)));
            assert_eq!(lhs, rhs, "n={} m={}", n, m);
        }
    }

    #[test]
    fn virasoro_translation_rows() {
        // L(-1)α(-3)F = 3α(-4)F + α(-3)α(-1)E, symbolically
        let eng = sym();
        let f = eng.build_named(Named::F).unwrap();
        let e = eng.build_named(Named::E).unwrap();
        let lhs = eng.virasoro(-1, &eng.apply_alpha(-3, &f)).unwrap();
        let mut rhs = eng.apply_alpha(-4, &f).scaled(&eng.cfg().from_int(3));
        rhs.add_assign(&eng.apply_alpha(-3, &eng.apply_alpha(-1, &e)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn virasoro_central_term() {
        // [L(2), L(-2)]1 = (4L(0) + c/2)1 = c/2·1 with c = 1
        for eng in [k3(), sym()] {
            let one = eng.build_named(Named::One).unwrap();
            let x = eng.virasoro(2, &eng.virasoro(-2, &one).unwrap()).unwrap();
            assert_eq!(x, one.scaled(&eng.cfg().from_rat(ratio(1, 2))));
        }
    }

    #[test]
    fn l0_reads_weight() {
        let eng = k3();
        for e in [
            eng.j_vector(),
            eng.omega(),
            eng.build_named(Named::E).unwrap(),
            single(eng.cfg(), &[3, 1], 1),
        ] {
            let w = e.weight(eng.cfg()).unwrap();
            assert_eq!(eng.virasoro(0, &e).unwrap(), e.scaled(&w));
        }
    }

    #[test]
    fn l1_l2_annihilate_j() {
        for eng in [k3(), sym()] {
            let j = eng.j_vector();
            assert!(eng.virasoro(1, &j).unwrap().is_zero());
            assert!(eng.virasoro(2, &j).unwrap().is_zero());
        }
    }

    #[test]
    fn translation_on_charged_vectors_symbolic() {
        // L(-1)E^m = m α(-1) F^m, and
        // L(-1)α(-n)F^m = n α(-n-1)F^m + m α(-n)α(-1)E^m
        let eng = sym();
        for m in 1..=3i64 {
            let em = eng.build_named(Named::Em(m)).unwrap();
            let fm = eng.build_named(Named::Fm(m)).unwrap();
            let lhs = eng.virasoro(-1, &em).unwrap();
            let rhs = eng.apply_alpha(-1, &fm).scaled(&eng.cfg().from_int(m));
            assert_eq!(lhs, rhs, "m={}", m);
            for n in 1..=3i64 {
                let lhs = eng.virasoro(-1, &eng.apply_alpha(-n, &fm)).unwrap();
                let mut rhs = eng.apply_alpha(-n - 1, &fm).scaled(&eng.cfg().from_int(n));
                rhs.add_assign(
                    &eng.apply_alpha(-n, &eng.apply_alpha(-1, &em))
                        .scaled(&eng.cfg().from_int(m)),
                );
                assert_eq!(lhs, rhs, "m={} n={}", m, n);
            }
        }
    }

    #[test]
    fn schur_small_cases() {
        let eng = k3();
        let one = eng.build_named(Named::One).unwrap();
        assert_eq!(eng.schur_p(0, 5), one);
        for m in [-2i64, 1, 3] {
            let p1 = eng.schur_p(1, m);
            assert_eq!(p1, single(eng.cfg(), &[1], 0).scaled(&eng.cfg().from_int(m)));
            // p2 = (m²/2)α(-1)² + (m/2)α(-2)
            let p2 = eng.schur_p(2, m);
            let mut want = single(eng.cfg(), &[1, 1], 0).scaled(&eng.cfg().from_rat(ratio(m * m, 2)));
            want.add_assign(&single(eng.cfg(), &[2], 0).scaled(&eng.cfg().from_rat(ratio(m, 2))));
            assert_eq!(p2, want);
        }
    }

    #[test]
    fn schur_newton_recurrence() {
        let eng = k3();
        for m in [1i64, -1, 2] {
            for j in 1u32..=7 {
                let mut rhs = FockElement::zero();
                for i in 1..=j {
                    let tail = eng.schur_p(j - i, m);
                    rhs.add_scaled(&eng.cfg().from_int(m), &eng.apply_alpha(-(i as i64), &tail));
                }
                let lhs = eng.schur_p(j, m).scaled(&eng.cfg().from_int(j as i64));
                assert_eq!(lhs, rhs, "j={} m={}", j, m);
            }
        }
    }

    #[test]
    fn theta_commutes_with_modes() {
        let eng = k3();
        let cases = [
            (single(eng.cfg(), &[2, 1], 0), -1, eng.build_named(Named::E).unwrap()),
            (eng.omega(), 0, single(eng.cfg(), &[1], 1)),
            (eng.build_named(Named::E).unwrap(), -2, eng.build_named(Named::F).unwrap()),
        ];
        for (u, n, v) in cases {
            let lhs = eng.mode_apply(&u, n, &v).unwrap().theta();
            let rhs = eng.mode_apply(&u.theta(), n, &v.theta()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn weight_additivity() {
        let eng = k3();
        let cases = [
            (eng.j_vector(), -1, eng.build_named(Named::E).unwrap()),
            (eng.omega(), -3, single(eng.cfg(), &[2], 1)),
            (eng.build_named(Named::E).unwrap(), -7, eng.build_named(Named::E).unwrap()),
        ];
        for (v, t, w) in cases {
            let out = eng.mode_apply(&v, t, &w).unwrap();
            if out.is_zero() {
                continue;
            }
            let wv = v.weight(eng.cfg()).unwrap();
            let ww = w.weight(eng.cfg()).unwrap();
            let expect = &(&wv + &ww) + &eng.cfg().from_int(-t - 1);
            assert_eq!(out.weight(eng.cfg()).unwrap(), expect);
        }
    }

    #[test]
    fn oracle_agrees_on_examples() {
        let eng = k3();
        let cfg = eng.cfg();
        let one = eng.build_named(Named::One).unwrap();
        let e = eng.build_named(Named::E).unwrap();
        let om = eng.omega();
        for t in -3..=3 {
            assert_eq!(
                mode_apply_oracle(cfg, &one, t, &e, 24).unwrap(),
                eng.mode_apply(&one, t, &e).unwrap()
            );
        }
        // (ω, 1, ω): both give 2ω
        let x = mode_apply_oracle(cfg, &om, 1, &om, 24).unwrap();
        assert_eq!(x, om.scaled(&cfg.from_int(2)));
        assert_eq!(x, eng.mode_apply(&om, 1, &om).unwrap());
        // (E, -2k-1, E) at k = 3
        assert_eq!(
            mode_apply_oracle(cfg, &e, -7, &e, 24).unwrap(),
            eng.mode_apply(&e, -7, &e).unwrap()
        );
        // charged and dressed
        let u = single(cfg, &[2, 1], 1);
        let w = single(cfg, &[1], -1);
        for t in [-8, -7, -6, -2, 0] {
            assert_eq!(
                mode_apply_oracle(cfg, &u, t, &w, 24).unwrap(),
                eng.mode_apply(&u, t, &w).unwrap(),
                "t={}",
                t
            );
        }
    }

    #[test]
    fn oracle_cap_and_mode_guards() {
        let eng = k3();
        let cfg = eng.cfg();
        let heavy = single(cfg, &[9, 9, 9], 0);
        assert!(matches!(
            mode_apply_oracle(cfg, &heavy, -1, &heavy, 24),
            Err(VertexError::OracleCap { .. })
        ));
        let se = sym();
        let e = se.build_named(Named::E).unwrap();
        assert!(matches!(
            se.mode_apply(&e, -7, &e),
            Err(VertexError::SymbolicChargePairing { .. })
        ));
        assert!(matches!(
            se.build_named(Named::Em(0)),
            Err(VertexError::BadSectorIndex(0))
        ));
    }

    #[test]
    fn charged_mode_analysis() {
        // (e^{aα})_{-2k-1} e^{-aα}: index 4k, charge 0
        let t = AffineInt::new(-1, -2);
        let term = charged_exponential_mode(1, -1, t);
        assert_eq!(term.out_charge, 0);
        assert_eq!(term.index, AffineInt::new(0, 4));
        assert_eq!(term.index.to_string(), "4k");
        // (e^{α})_{-2k-1} e^{α}: index 0, charge 2
        let term = charged_exponential_mode(1, 1, t);
        assert_eq!(term.out_charge, 2);
        assert_eq!(term.index, AffineInt::new(0, 0));
        assert_eq!(term.index.value_at(3), 0);
    }

    #[test]
    fn memo_transparency() {
        let eng = k3();
        let e = eng.build_named(Named::E).unwrap();
        let j = eng.j_vector();
        let warm = eng.mode_apply(&j, -1, &e).unwrap();
        eng.clear_memo();
        let cold = eng.mode_apply(&j, -1, &e).unwrap();
        assert_eq!(warm, cold);
    }
}
