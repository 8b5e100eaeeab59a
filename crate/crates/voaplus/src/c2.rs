//! Graded computation of the span of the second products `u_{-2}v` inside
//! the fixed-point subalgebra at a fixed lattice parameter `k >= 3`:
//! per-weight spans, quotient dimensions, congruence certificates, and the
//! spanning-set verification behind the cofiniteness theorem.
//!
//! Degree-(-2) products over basis pairs suffice: `(L(-1)^m v)_{-2} =
//! (m+1)! v_{-m-2}` makes every deeper product redundant, and `u_{-2}1 =
//! L(-1)u` is picked up by the vacuum pairs.

use crate::fock::{enumerate_basis, FockElement, FockMonomial, Space};
use crate::linalg::{self, LinalgError};
use crate::poly::Rat;
use crate::scalar::{LatticeConfig, Scalar};
use crate::vertex::{Engine, Named, VertexError};
use num::Zero;
use rayon::prelude::*;
use serde_json::{json, Value};
use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum C2Error {
    /// The graded span machinery follows the standing assumption `k >= 3`;
    /// `k = 1, 2` are handled by known isomorphisms elsewhere.
    UnsupportedParameter(u32),
    NeedsFixedK,
    InhomogeneousDifference,
    /// `spanning_check` refuses caps below the heaviest listed vector.
    CapBelowListed { required: u32, given: u32 },
    Linalg(String),
    Vertex(String),
}

impl fmt::Display for C2Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            C2Error::UnsupportedParameter(k) => write!(
                f,
                "k = {} is below the supported range: the span certificates assume k >= 3 \
                 (for k = 1, 2 the algebra is isomorphic to known cofinite ones)",
                k
            ),
            C2Error::NeedsFixedK => write!(f, "span computations need a fixed integer k"),
            C2Error::InhomogeneousDifference => {
                write!(f, "congruence sides differ by an inhomogeneous element")
            }
            C2Error::CapBelowListed { required, given } => write!(
                f,
                "weight cap {} is below the heaviest listed vector; need at least {}",
                given, required
            ),
            C2Error::Linalg(e) => write!(f, "linear algebra failure: {}", e),
            C2Error::Vertex(e) => write!(f, "mode computation failure: {}", e),
        }
    }
}

impl std::error::Error for C2Error {}

impl From<LinalgError> for C2Error {
    fn from(e: LinalgError) -> Self {
        C2Error::Linalg(e.to_string())
    }
}

impl From<VertexError> for C2Error {
    fn from(e: VertexError) -> Self {
        C2Error::Vertex(e.to_string())
    }
}

fn require_fixed_k3(cfg: &LatticeConfig) -> Result<u32, C2Error> {
    let k = cfg.fixed_k().ok_or(C2Error::NeedsFixedK)?;
    if k < 3 {
        return Err(C2Error::UnsupportedParameter(k));
    }
    Ok(k)
}

// ---- indexed sparse rows over one weight component ----

/// Sorted sparse vector over the monomial index of one weight component;
/// the pivot is the highest index (the largest monomial).
#[derive(Clone, Debug, Default)]
struct SparseRow {
    entries: Vec<(u32, Rat)>,
}

impl SparseRow {
    fn lead(&self) -> Option<u32> {
        self.entries.last().map(|(i, _)| *i)
    }

    fn lead_coeff(&self) -> &Rat {
        &self.entries.last().unwrap().1
    }

    /// `self - c * other`, merged by index.
    fn sub_scaled(&self, c: &Rat, other: &SparseRow) -> SparseRow {
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut i, mut j) = (0, 0);
        loop {
            let take_self = match (self.entries.get(i), other.entries.get(j)) {
                (Some((a, _)), Some((b, _))) => {
                    if a == b {
                        let v = &self.entries[i].1 - c * &other.entries[j].1;
                        if !v.is_zero() {
                            out.push((*a, v));
                        }
                        i += 1;
                        j += 1;
                        continue;
                    }
                    a < b
                }
                (Some(_), None) => true,
                (None, Some(_)) => false,
                (None, None) => break,
            };
            if take_self {
                out.push(self.entries[i].clone());
                i += 1;
            } else {
                out.push((other.entries[j].0, -(c * &other.entries[j].1)));
                j += 1;
            }
        }
        SparseRow { entries: out }
    }

    fn scaled(&self, c: &Rat) -> SparseRow {
        SparseRow {
            entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect(),
        }
    }
}

/// Forward-reduced echelon rows keyed by pivot index.
struct Echelon {
    rows: HashMap<u32, SparseRow>,
}

impl Echelon {
    fn new() -> Self {
        Echelon {
            rows: HashMap::new(),
        }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut v: SparseRow) -> SparseRow {
        while let Some(lead) = v.lead() {
            match self.rows.get(&lead) {
                Some(row) => {
                    let c = v.lead_coeff().clone();
                    v = v.sub_scaled(&c, row);
                }
                None => break,
            }
        }
        v
    }

    /// Reduce and insert if independent; reports whether the rank grew.
    fn absorb(&mut self, v: SparseRow) -> bool {
        let v = self.reduce(v);
        match v.lead() {
            Some(lead) => {
                let inv = Rat::new(
                    v.lead_coeff().denom().clone(),
                    v.lead_coeff().numer().clone(),
                );
                let monic = v.scaled(&inv);
                self.rows.insert(lead, monic);
                true
            }
            None => false,
        }
    }
}

/// All monomials of one total weight at fixed `k`, in canonical order.
fn weight_monomials(k: u32, weight: u32) -> Vec<FockMonomial> {
    let mut out = Vec::new();
    let mut charges = vec![0i32];
    let mut m = 1i32;
    while (m * m) as u32 * k <= weight {
        charges.push(m);
        charges.push(-m);
        m += 1;
    }
    for c in charges {
        let excess = weight - (c * c) as u32 * k;
        for parts in crate::fock::partitions(excess) {
            out.push(FockMonomial::new(parts, c));
        }
    }
    out.sort();
    out
}

struct MonomialIndex {
    index: HashMap<FockMonomial, u32>,
}

impl MonomialIndex {
    fn new(k: u32, weight: u32) -> Self {
        let index = weight_monomials(k, weight)
            .into_iter()
            .enumerate()
            .map(|(i, m)| (m, i as u32))
            .collect();
        MonomialIndex { index }
    }

    fn to_row(&self, e: &FockElement) -> SparseRow {
        let mut entries: Vec<(u32, Rat)> = e
            .terms()
            .map(|(m, c)| {
                let idx = *self
                    .index
                    .get(m)
                    .unwrap_or_else(|| panic!("monomial {} outside the weight component", m));
                (idx, c.as_rat().expect("fixed-k scalar").clone())
            })
            .collect();
        entries.sort_by_key(|(i, _)| *i);
        SparseRow { entries }
    }
}

thread_local! {
    static WORKER: RefCell<Option<(LatticeConfig, Engine)>> = const { RefCell::new(None) };
}

/// Run `f` with a thread-local engine for `cfg`, reusing its memo across
/// calls; the memo is rebuilt once it grows past a fixed bound.
fn with_engine<R>(cfg: &LatticeConfig, f: impl FnOnce(&Engine) -> R) -> R {
    WORKER.with(|slot| {
        let mut slot = slot.borrow_mut();
        let rebuild = match slot.as_ref() {
            Some((c, eng)) => c != cfg || eng.memo_len() > 200_000,
            None => true,
        };
        if rebuild {
            *slot = Some((*cfg, Engine::new(*cfg)));
        }
        f(&slot.as_ref().unwrap().1)
    })
}

/// The reduced span of the weight-`N` component of the second products.
pub struct C2Span {
    pub weight: u32,
    pub ambient_dim: usize,
    index: MonomialIndex,
    echelon: Echelon,
    pub generator_count: usize,
    /// Set when early termination fired: the number of generators consumed
    /// before the span saturated the component.
    pub saturated_after: Option<usize>,
}

impl C2Span {
    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    pub fn quotient_dim(&self) -> usize {
        self.ambient_dim - self.rank()
    }

    pub fn contains(&self, e: &FockElement) -> bool {
        if e.is_zero() {
            return true;
        }
        self.echelon.reduce(self.index.to_row(e)).lead().is_none()
    }

    /// Rank of the span together with extra vectors.
    pub fn rank_with(&self, extras: &[FockElement]) -> usize {
        let mut extra_rows: Vec<SparseRow> = Vec::new();
        let mut rank = self.rank();
        'outer: for e in extras {
            if e.is_zero() {
                continue;
            }
            let mut v = self.echelon.reduce(self.index.to_row(e));
            loop {
                let lead = match v.lead() {
                    Some(l) => l,
                    None => continue 'outer,
                };
                match extra_rows.iter().find(|r| r.lead() == Some(lead)) {
                    Some(row) => {
                        let c = v.lead_coeff() / row.lead_coeff();
                        v = v.sub_scaled(&c, row);
                    }
                    None => {
                        extra_rows.push(v);
                        rank += 1;
                        continue 'outer;
                    }
                }
            }
        }
        rank
    }
}

/// Basis elements of every weight component up to a bound.
pub fn weight_bases(cfg: &LatticeConfig, up_to: u32) -> Vec<Vec<FockElement>> {
    (0..=up_to)
        .map(|n| {
            enumerate_basis(cfg, Space::FullVLPlus, n)
                .expect("fixed-k enumeration")
                .elements(cfg)
        })
        .collect()
}

/// Generator index: `(a, i, j)` for `u = basis(a)[i]`, `v = basis(N-1-a)[j]`.
pub fn generator_pairs(bases: &[Vec<FockElement>], weight: u32) -> Vec<(u32, usize, usize)> {
    let n = weight;
    let mut pairs = Vec::new();
    for a in 1..n {
        let b = (n - 1 - a) as usize;
        for i in 0..bases[a as usize].len() {
            for j in 0..bases[b].len() {
                pairs.push((a, i, j));
            }
        }
    }
    pairs
}

/// Compute the reduced weight-`N` span of all `u_{-2}v`, streaming the
/// generators in canonical order; generator products run in parallel, the
/// row reduction is a sequential fold, and the stream stops early once the
/// span saturates the component.
pub fn c2_span(cfg: &LatticeConfig, weight: u32) -> Result<C2Span, C2Error> {
    let k = require_fixed_k3(cfg)?;
    let bases = weight_bases(cfg, weight.saturating_sub(1));
    c2_span_with_bases(cfg, k, weight, &bases)
}

fn c2_span_with_bases(
    cfg: &LatticeConfig,
    k: u32,
    weight: u32,
    bases: &[Vec<FockElement>],
) -> Result<C2Span, C2Error> {
    let ambient_dim = enumerate_basis(cfg, Space::FullVLPlus, weight)
        .expect("fixed-k enumeration")
        .len();
    let index = MonomialIndex::new(k, weight);
    let pairs = generator_pairs(bases, weight);
    let mut echelon = Echelon::new();
    let mut processed = 0usize;
    let mut saturated_after = None;
    let mut chunk = 128usize;
    while processed < pairs.len() {
        if echelon.rank() == ambient_dim {
            saturated_after = Some(processed);
            break;
        }
        let upper = (processed + chunk).min(pairs.len());
        let slice = &pairs[processed..upper];
        let computed: Vec<FockElement> = slice
            .par_iter()
            .map(|(a, i, j)| {
                with_engine(cfg, |eng| {
                    eng.mode_apply(
                        &bases[*a as usize][*i],
                        -2,
                        &bases[(weight - 1 - a) as usize][*j],
                    )
                    .expect("fixed-k mode application is total")
                })
            })
            .collect();
        for e in &computed {
            if !e.is_zero() {
                echelon.absorb(index.to_row(e));
            }
        }
        processed = upper;
        chunk = (chunk * 2).min(4096);
    }
    if saturated_after.is_none() && echelon.rank() == ambient_dim {
        saturated_after = Some(processed);
    }
    Ok(C2Span {
        weight,
        ambient_dim,
        index,
        echelon,
        generator_count: pairs.len(),
        saturated_after,
    })
}

/// Quotient dimension of the weight-`N` component by the span.
pub fn quotient_dim(cfg: &LatticeConfig, weight: u32) -> Result<usize, C2Error> {
    Ok(c2_span(cfg, weight)?.quotient_dim())
}

/// Materialized weight component: the generator list itself, for use where
/// expansion coefficients over the generators are needed.
pub struct C2Component {
    pub cfg: LatticeConfig,
    pub weight: u32,
    pub generator_index: Vec<(u32, usize, usize)>,
    pub generators: Vec<FockElement>,
    pub ambient_dim: usize,
}

pub fn c2_component(cfg: &LatticeConfig, weight: u32) -> Result<C2Component, C2Error> {
    require_fixed_k3(cfg)?;
    let bases = weight_bases(cfg, weight.saturating_sub(1));
    let pairs = generator_pairs(&bases, weight);
    let generators: Vec<FockElement> = pairs
        .par_iter()
        .map(|(a, i, j)| {
            with_engine(cfg, |eng| {
                eng.mode_apply(
                    &bases[*a as usize][*i],
                    -2,
                    &bases[(weight - 1 - a) as usize][*j],
                )
                .expect("fixed-k mode application is total")
            })
        })
        .collect();
    let ambient_dim = enumerate_basis(cfg, Space::FullVLPlus, weight)
        .expect("fixed-k enumeration")
        .len();
    Ok(C2Component {
        cfg: *cfg,
        weight,
        generator_index: pairs,
        generators,
        ambient_dim,
    })
}

/// A verified congruence `lhs ≡ rhs` modulo the weight-component span.
pub struct CongruenceCertificate {
    pub lhs: FockElement,
    pub rhs: FockElement,
    pub weight: u32,
    /// Expansion of `lhs - rhs` over the generators, by `(a, i, j)` index.
    pub coefficients: Vec<((u32, usize, usize), Scalar)>,
    pub verified: bool,
    /// Residual witness when not congruent.
    pub residual: Option<FockElement>,
}

impl CongruenceCertificate {
    pub fn to_json(&self) -> Value {
        json!({
            "weight": self.weight,
            "verified": self.verified,
            "coefficients": self.coefficients.iter().map(|((a, i, j), c)| {
                json!({"a": a, "u": i, "v": j, "coeff": c.to_string()})
            }).collect::<Vec<_>>(),
            "residual": self.residual.as_ref().map(|r| r.to_json()),
        })
    }
}

/// Certify `lhs ≡ rhs mod C2` by exact expansion of the difference over the
/// `u_{-2}v` generators at its weight; verification is by reconstruction.
pub fn congruent(
    cfg: &LatticeConfig,
    lhs: &FockElement,
    rhs: &FockElement,
) -> Result<CongruenceCertificate, C2Error> {
    require_fixed_k3(cfg)?;
    let diff = lhs.sub(rhs);
    if diff.is_zero() {
        return Ok(CongruenceCertificate {
            lhs: lhs.clone(),
            rhs: rhs.clone(),
            weight: 0,
            coefficients: Vec::new(),
            verified: true,
            residual: None,
        });
    }
    let weight_scalar = diff
        .weight(cfg)
        .map_err(|_| C2Error::InhomogeneousDifference)?;
    let weight = scalar_to_u32(&weight_scalar).ok_or(C2Error::InhomogeneousDifference)?;
    let component = c2_component(cfg, weight)?;
    let decision = linalg::in_span(cfg, &diff, &component.generators)?;
    match decision.coefficients {
        Some(sparse) => Ok(CongruenceCertificate {
            lhs: lhs.clone(),
            rhs: rhs.clone(),
            weight,
            coefficients: sparse
                .into_iter()
                .map(|(i, c)| (component.generator_index[i], c))
                .collect(),
            verified: true,
            residual: None,
        }),
        None => Ok(CongruenceCertificate {
            lhs: lhs.clone(),
            rhs: rhs.clone(),
            weight,
            coefficients: Vec::new(),
            verified: false,
            residual: decision.residual,
        }),
    }
}

fn scalar_to_u32(s: &Scalar) -> Option<u32> {
    let q = s.as_rat()?;
    if !q.is_integer() {
        return None;
    }
    u32::try_from(q.to_integer()).ok()
}

/// The quotient spanning list at weight `N`: `L(-2)^m 1` (`0 <= m <= 2k+2`),
/// `L(-2)^i E` (`i <= 2`), `J`, `L(-2)J`, and `J_{-1}J`.
pub fn listed_vectors(
    cfg: &LatticeConfig,
    engine: &Engine,
    weight: u32,
) -> Result<Vec<(String, FockElement)>, C2Error> {
    let k = require_fixed_k3(cfg)?;
    let l_minus2 = |e: &FockElement, times: u32| -> Result<FockElement, C2Error> {
        let mut acc = e.clone();
        for _ in 0..times {
            acc = engine.virasoro(-2, &acc)?;
        }
        Ok(acc)
    };
    let mut out: Vec<(String, FockElement)> = Vec::new();
    if weight % 2 == 0 && weight / 2 <= 2 * k + 2 {
        let m = weight / 2;
        let one = engine.build_named(Named::One)?;
        out.push((format!("L(-2)^{} 1", m), l_minus2(&one, m)?));
    }
    if weight >= k && (weight - k) % 2 == 0 && (weight - k) / 2 <= 2 {
        let i = (weight - k) / 2;
        let e = engine.build_named(Named::E)?;
        out.push((format!("L(-2)^{} E", i), l_minus2(&e, i)?));
    }
    if weight == 4 {
        out.push(("J".to_string(), engine.j_vector()));
    }
    if weight == 6 {
        out.push(("L(-2) J".to_string(), l_minus2(&engine.j_vector(), 1)?));
    }
    if weight == 8 {
        let j = engine.j_vector();
        out.push(("J_{-1} J".to_string(), engine.mode_apply(&j, -1, &j)?));
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct WeightReport {
    pub weight: u32,
    pub ambient_dim: usize,
    pub c2_rank: usize,
    pub quotient_dim: usize,
    pub generator_count: usize,
    /// Listed spanning vectors at this weight and whether each already lies
    /// in the span.
    pub listed: Vec<(String, bool)>,
    /// Dimension left after adjoining the listed vectors; spanning requires 0.
    pub residual_dim: usize,
}

#[derive(Clone, Debug)]
pub struct SpanningReport {
    pub k: u32,
    pub max_weight: u32,
    pub per_weight: Vec<WeightReport>,
    pub total_quotient: usize,
    /// `2k + 9`, the cardinality of the spanning list.
    pub bound: usize,
    pub all_spanned: bool,
}

impl SpanningReport {
    pub fn to_json(&self) -> Value {
        json!({
            "k": self.k,
            "max_weight": self.max_weight,
            "bound": self.bound,
            "total_quotient": self.total_quotient,
            "all_spanned": self.all_spanned,
            "per_weight": self.per_weight.iter().map(|w| json!({
                "weight": w.weight,
                "ambient_dim": w.ambient_dim,
                "c2_rank": w.c2_rank,
                "quotient_dim": w.quotient_dim,
                "generators": w.generator_count,
                "listed": w.listed.iter().map(|(n, in_span)| json!({
                    "vector": n, "in_c2_span": in_span,
                })).collect::<Vec<_>>(),
                "residual_dim": w.residual_dim,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Verify, weight by weight up to the cap, that the quotient is spanned by
/// the listed vectors: residual dimension zero everywhere, and report the
/// per-weight quotient dimensions against the `2k + 9` bound.
pub fn spanning_check(cfg: &LatticeConfig, max_weight: u32) -> Result<SpanningReport, C2Error> {
    let k = require_fixed_k3(cfg)?;
    // heaviest listed coverage: L(-2)^{2k+3} 1 at 4k+6 must already reduce
    let required = 4 * k + 6;
    if max_weight < required {
        return Err(C2Error::CapBelowListed {
            required,
            given: max_weight,
        });
    }
    let engine = Engine::new(*cfg);
    let bases = weight_bases(cfg, max_weight.saturating_sub(1));
    let mut per_weight = Vec::new();
    let mut total_quotient = 0usize;
    let mut all_spanned = true;
    for n in 0..=max_weight {
        let span = c2_span_with_bases(cfg, k, n, &bases)?;
        let listed = listed_vectors(cfg, &engine, n)?;
        let listed_flags: Vec<(String, bool)> = listed
            .iter()
            .map(|(name, e)| (name.clone(), span.contains(e)))
            .collect();
        let extras: Vec<FockElement> = listed.into_iter().map(|(_, e)| e).collect();
        let rank_with = span.rank_with(&extras);
        let residual_dim = span.ambient_dim - rank_with;
        total_quotient += span.quotient_dim();
        if residual_dim != 0 {
            all_spanned = false;
        }
        per_weight.push(WeightReport {
            weight: n,
            ambient_dim: span.ambient_dim,
            c2_rank: span.rank(),
            quotient_dim: span.quotient_dim(),
            generator_count: span.generator_count,
            listed: listed_flags,
            residual_dim,
        });
    }
    Ok(SpanningReport {
        k,
        max_weight,
        per_weight,
        total_quotient,
        bound: (2 * k + 9) as usize,
        all_spanned,
    })
}
