//! The state space `M(1) ⊗ C[L]` for the rank-one even lattice `L = Zα`
//! with `<α,α> = 2k`: canonical sparse elements, the weight grading, the
//! lattice involution, and basis enumeration for homogeneous subspaces of
//! the fixed-point subalgebra.

use crate::scalar::{LatticeConfig, Scalar};
use serde_json::{json, Value};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// A basis symbol `α(-n_1)...α(-n_r) ⊗ e^{mα}`: a partition of creation
/// indices (sorted descending) plus a lattice charge `m`.
///
/// The vacuum is the empty partition at charge 0.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FockMonomial {
    parts: Vec<u32>,
    charge: i32,
}

impl FockMonomial {
    pub fn new(mut parts: Vec<u32>, charge: i32) -> Self {
        assert!(parts.iter().all(|&p| p >= 1), "creation indices start at 1");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        FockMonomial { parts, charge }
    }

    pub fn vacuum() -> Self {
        FockMonomial {
            parts: Vec::new(),
            charge: 0,
        }
    }

    pub fn exponential(charge: i32) -> Self {
        FockMonomial {
            parts: Vec::new(),
            charge,
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn charge(&self) -> i32 {
        self.charge
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// Sum of the creation indices (the weight contribution of `M(1)`).
    pub fn heisenberg_weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Total conformal weight `Σ n_i + m²k` at a fixed `k`.
    pub fn weight_at(&self, k: u32) -> u32 {
        self.heisenberg_weight() + (self.charge * self.charge) as u32 * k
    }

    pub fn with_prepended(&self, n: u32) -> FockMonomial {
        let mut parts = Vec::with_capacity(self.parts.len() + 1);
        let pos = self.parts.partition_point(|&p| p >= n);
        parts.extend_from_slice(&self.parts[..pos]);
        parts.push(n);
        parts.extend_from_slice(&self.parts[pos..]);
        FockMonomial {
            parts,
            charge: self.charge,
        }
    }

    /// Remove one occurrence of `n`; `None` if absent.
    pub fn without_part(&self, n: u32) -> Option<FockMonomial> {
        let pos = self.parts.iter().position(|&p| p == n)?;
        let mut parts = self.parts.clone();
        parts.remove(pos);
        Some(FockMonomial {
            parts,
            charge: self.charge,
        })
    }

    pub fn with_charge(&self, charge: i32) -> FockMonomial {
        FockMonomial {
            parts: self.parts.clone(),
            charge,
        }
    }

    pub fn multiplicity(&self, n: u32) -> usize {
        self.parts.iter().filter(|&&p| p == n).count()
    }

    pub fn distinct_parts(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for &p in &self.parts {
            if out.last() != Some(&p) {
                out.push(p);
            }
        }
        out
    }
}

impl Ord for FockMonomial {
    /// Canonical order: by charge magnitude, positive charge first, then by
    /// Heisenberg weight, then graded-lexicographic with the longest part
    /// first (`[4] < [3,1] < [2,2] < [2,1,1] < [1,1,1,1]`).
    fn cmp(&self, other: &Self) -> Ordering {
        let key = |m: &FockMonomial| (m.charge.unsigned_abs(), m.charge < 0);
        key(self)
            .cmp(&key(other))
            .then_with(|| self.heisenberg_weight().cmp(&other.heisenberg_weight()))
            .then_with(|| {
                for (a, b) in self.parts.iter().zip(other.parts.iter()) {
                    match b.cmp(a) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                self.parts.len().cmp(&other.parts.len())
            })
    }
}

impl PartialOrd for FockMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FockMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &p in &self.parts {
            write!(f, "a(-{})", p)?;
        }
        match self.charge {
            0 if self.parts.is_empty() => write!(f, "1"),
            0 => Ok(()),
            c => write!(f, "e({})", c),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FockError {
    ZeroElement,
    NotHomogeneous,
    NegativeWeight,
    SymbolicUnsupported(&'static str),
}

impl fmt::Display for FockError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FockError::ZeroElement => write!(f, "zero element has no defined value"),
            FockError::NotHomogeneous => write!(f, "element is not homogeneous"),
            FockError::NegativeWeight => write!(f, "weight must be nonnegative"),
            FockError::SymbolicUnsupported(what) => {
                write!(f, "{} requires a fixed lattice parameter", what)
            }
        }
    }
}

impl std::error::Error for FockError {}

/// A finite scalar-weighted combination of monomials in canonical form:
/// no explicit zero coefficients, terms ordered by the monomial order.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FockElement {
    terms: BTreeMap<FockMonomial, Scalar>,
}

impl FockElement {
    pub fn zero() -> Self {
        FockElement::default()
    }

    pub fn from_monomial(m: FockMonomial, c: Scalar) -> Self {
        let mut e = FockElement::zero();
        e.add_term(m, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FockMonomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &FockMonomial) -> Option<&Scalar> {
        self.terms.get(m)
    }

    /// Largest monomial in the canonical order (used as elimination pivot).
    pub fn leading_monomial(&self) -> Option<&FockMonomial> {
        self.terms.keys().next_back()
    }

    pub fn add_term(&mut self, m: FockMonomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &FockElement) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn add_scaled(&mut self, scale: &Scalar, other: &FockElement) {
        if scale.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            self.add_term(m.clone(), scale * c);
        }
    }

    pub fn scaled(&self, scale: &Scalar) -> FockElement {
        let mut out = FockElement::zero();
        out.add_scaled(scale, self);
        out
    }

    pub fn negated(&self) -> FockElement {
        FockElement {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &FockElement) -> FockElement {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    /// The involution: `(-1)^r` on a length-`r` monomial, charge negated.
    pub fn theta(&self) -> FockElement {
        let mut out = FockElement::zero();
        for (m, c) in &self.terms {
            let flipped = FockMonomial {
                parts: m.parts.clone(),
                charge: -m.charge,
            };
            let coeff = if m.length() % 2 == 1 { -c } else { c.clone() };
            out.add_term(flipped, coeff);
        }
        out
    }

    /// Projection onto the involution-fixed subspace: `(e + θe)/2`.
    pub fn plus_project(&self, cfg: &LatticeConfig) -> FockElement {
        let mut out = self.clone();
        out.add_assign(&self.theta());
        out.scaled(&cfg.from_rat(crate::poly::ratio(1, 2)))
    }

    /// Common weight of a nonzero homogeneous element.
    ///
    /// In symbolic mode the weight of a charged monomial is `Σn_i + m²k`;
    /// homogeneity then requires equal Heisenberg weight and equal `m²`.
    pub fn weight(&self, cfg: &LatticeConfig) -> Result<Scalar, FockError> {
        let mut it = self.terms.keys();
        let first = it.next().ok_or(FockError::ZeroElement)?;
        match cfg.fixed_k() {
            Some(k) => {
                let w = first.weight_at(k);
                for m in it {
                    if m.weight_at(k) != w {
                        return Err(FockError::NotHomogeneous);
                    }
                }
                Ok(cfg.from_int(w as i64))
            }
            None => {
                let (h, c2) = (first.heisenberg_weight(), first.charge.pow(2));
                for m in it {
                    if m.heisenberg_weight() != h || m.charge.pow(2) != c2 {
                        return Err(FockError::NotHomogeneous);
                    }
                }
                let k_term = &cfg.k_scalar() * &cfg.from_int(c2 as i64);
                Ok(&cfg.from_int(h as i64) + &k_term)
            }
        }
    }

    /// Maximum part-count over the support; the length `l_α`.
    pub fn alpha_length(&self) -> Result<usize, FockError> {
        self.terms
            .keys()
            .map(|m| m.length())
            .max()
            .ok_or(FockError::ZeroElement)
    }

    /// JSON per the element schema: a list of `{parts, charge, coeff}`
    /// objects in canonical monomial order.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| {
                    json!({
                        "parts": m.parts,
                        "charge": m.charge,
                        "coeff": c.to_string(),
                    })
                })
                .collect(),
        )
    }
}

impl fmt::Display for FockElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})*{}", c, m)?;
        }
        Ok(())
    }
}

/// Homogeneous subspace selectors for basis enumeration.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Space {
    M1Plus,
    M1Minus,
    /// Charge-`m` sector of the fixed-point subalgebra, `m >= 1`.
    SectorPlus(u32),
    FullVLPlus,
}

/// Symmetric (`E`) or antisymmetric (`F`) exponential combination.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Combo {
    E,
    F,
}

/// One basis entry: a partition dressed either with the vacuum charge or
/// with an `E^m`/`F^m` combination.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BasisVector {
    M1(Vec<u32>),
    Sector { parts: Vec<u32>, m: u32, combo: Combo },
}

impl BasisVector {
    /// Expand into a canonical element (coefficient 1 on each exponential).
    pub fn element(&self, cfg: &LatticeConfig) -> FockElement {
        match self {
            BasisVector::M1(parts) => FockElement::from_monomial(
                FockMonomial::new(parts.clone(), 0),
                cfg.one(),
            ),
            BasisVector::Sector { parts, m, combo } => {
                let mut e = FockElement::zero();
                e.add_term(FockMonomial::new(parts.clone(), *m as i32), cfg.one());
                let sign = match combo {
                    Combo::E => cfg.one(),
                    Combo::F => -&cfg.one(),
                };
                e.add_term(FockMonomial::new(parts.clone(), -(*m as i32)), sign);
                e
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            BasisVector::M1(parts) => {
                let m = FockMonomial::new(parts.clone(), 0);
                format!("{}", m)
            }
            BasisVector::Sector { parts, m, combo } => {
                let head: String = parts.iter().map(|p| format!("a(-{})", p)).collect();
                let tail = match (combo, m) {
                    (Combo::E, 1) => "E".to_string(),
                    (Combo::F, 1) => "F".to_string(),
                    (Combo::E, m) => format!("E{}", m),
                    (Combo::F, m) => format!("F{}", m),
                };
                format!("{}{}", head, tail)
            }
        }
    }
}

/// An ordered basis of one homogeneous subspace.
#[derive(Clone, Debug)]
pub struct GradedBasis {
    pub space: Space,
    /// Total weight for fixed `k`; for a symbolic charge sector this is the
    /// Heisenberg excess above the sector floor `m²k`.
    pub weight: u32,
    pub vectors: Vec<BasisVector>,
}

impl GradedBasis {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn elements(&self, cfg: &LatticeConfig) -> Vec<FockElement> {
        self.vectors.iter().map(|v| v.element(cfg)).collect()
    }
}

/// All partitions of `n` in graded-lex order with the longest part first.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn rec(n: u32, maxpart: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for p in (1..=n.min(maxpart)).rev() {
            prefix.push(p);
            rec(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n.max(1), &mut Vec::new(), &mut out);
    out
}

/// Partition count p(n).
pub fn partition_count(n: u32) -> u64 {
    // Euler pentagonal recurrence.
    let n = n as usize;
    let mut table = vec![0u64; n + 1];
    table[0] = 1;
    for i in 1..=n {
        let mut sum: i128 = 0;
        let mut j = 1i64;
        loop {
            let g1 = (j * (3 * j - 1) / 2) as usize;
            let g2 = (j * (3 * j + 1) / 2) as usize;
            if g1 > i {
                break;
            }
            let sign = if j % 2 == 0 { -1i128 } else { 1i128 };
            sum += sign * table[i - g1] as i128;
            if g2 <= i {
                sum += sign * table[i - g2] as i128;
            }
            j += 1;
        }
        table[i] = sum as u64;
    }
    table[n]
}

/// Enumerate the basis of a homogeneous subspace.
///
/// `M1Plus`/`M1Minus` at weight `N` are the partitions of `N` with an even
/// resp. odd number of parts. `SectorPlus(m)` at total weight `N` (fixed
/// `k`) carries one entry per partition of `N - m²k`, dressed with `E^m`
/// for even length and `F^m` for odd. In symbolic mode the sector weight
/// argument is interpreted as the Heisenberg excess above the floor
/// `m²k`. `FullVLPlus` requires fixed `k`.
pub fn enumerate_basis(
    cfg: &LatticeConfig,
    space: Space,
    weight: u32,
) -> Result<GradedBasis, FockError> {
    let vectors = match space {
        Space::M1Plus => partitions(weight)
            .into_iter()
            .filter(|p| p.len() % 2 == 0)
            .map(BasisVector::M1)
            .collect(),
        Space::M1Minus => partitions(weight)
            .into_iter()
            .filter(|p| p.len() % 2 == 1)
            .map(BasisVector::M1)
            .collect(),
        Space::SectorPlus(m) => {
            assert!(m >= 1, "sector index must be at least 1");
            let excess = match cfg.fixed_k() {
                Some(k) => {
                    let floor = m * m * k;
                    if weight < floor {
                        return Ok(GradedBasis {
                            space,
                            weight,
                            vectors: Vec::new(),
                        });
                    }
                    weight - floor
                }
                None => weight,
            };
            sector_vectors(m, excess)
        }
        Space::FullVLPlus => {
            let k = cfg
                .fixed_k()
                .ok_or(FockError::SymbolicUnsupported("full-space enumeration"))?;
            let mut vectors: Vec<BasisVector> = partitions(weight)
                .into_iter()
                .filter(|p| p.len() % 2 == 0)
                .map(BasisVector::M1)
                .collect();
            let mut m = 1;
            while m * m * k <= weight {
                vectors.extend(sector_vectors(m, weight - m * m * k));
                m += 1;
            }
            vectors
        }
    };
    Ok(GradedBasis {
        space,
        weight,
        vectors,
    })
}

fn sector_vectors(m: u32, excess: u32) -> Vec<BasisVector> {
    partitions(excess)
        .into_iter()
        .map(|parts| {
            let combo = if parts.len() % 2 == 0 { Combo::E } else { Combo::F };
            BasisVector::Sector { parts, m, combo }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ratio;
    use proptest::prelude::*;

    fn k3() -> LatticeConfig {
        LatticeConfig::fixed(3)
    }

    fn mono(parts: &[u32], charge: i32) -> FockMonomial {
        FockMonomial::new(parts.to_vec(), charge)
    }

    #[test]
    fn weight_examples() {
        let cfg = k3();
        let vac = FockElement::from_monomial(FockMonomial::vacuum(), cfg.one());
        assert_eq!(vac.weight(&cfg).unwrap(), cfg.from_int(0));
        // a(-3)a(-1) e^{α} at k = 3: 3 + 1 + 1·3 = 7
        let e = FockElement::from_monomial(mono(&[3, 1], 1), cfg.one());
        assert_eq!(e.weight(&cfg).unwrap(), cfg.from_int(7));
        // inhomogeneous
        let mut bad = FockElement::from_monomial(mono(&[1], 0), cfg.one());
        bad.add_term(mono(&[2], 0), cfg.one());
        assert_eq!(bad.weight(&cfg), Err(FockError::NotHomogeneous));
        assert_eq!(
            FockElement::zero().weight(&cfg),
            Err(FockError::ZeroElement)
        );
    }

    #[test]
    fn weight_symbolic_charge() {
        let cfg = LatticeConfig::symbolic();
        // E = e^α + e^{-α} has weight k
        let mut e = FockElement::from_monomial(mono(&[], 1), cfg.one());
        e.add_term(mono(&[], -1), cfg.one());
        assert_eq!(e.weight(&cfg).unwrap(), cfg.k_scalar());
    }

    #[test]
    fn theta_grading() {
        let cfg = k3();
        // θ(α(-1) e^α) = -α(-1) e^{-α}
        let e = FockElement::from_monomial(mono(&[1], 1), cfg.one());
        let t = e.theta();
        assert_eq!(t.coefficient(&mono(&[1], -1)), Some(&-&cfg.one()));
        assert_eq!(t.len(), 1);
        // involution
        assert_eq!(t.theta(), e);
    }

    #[test]
    fn plus_project_symmetrizes() {
        let cfg = k3();
        let e_alpha = FockElement::from_monomial(mono(&[], 1), cfg.one());
        let p = e_alpha.plus_project(&cfg);
        // (e^α + e^{-α})/2 = E/2
        let half = cfg.from_rat(ratio(1, 2));
        assert_eq!(p.coefficient(&mono(&[], 1)), Some(&half));
        assert_eq!(p.coefficient(&mono(&[], -1)), Some(&half));
        // already fixed: E -> E
        let mut e_big = FockElement::from_monomial(mono(&[], 1), cfg.one());
        e_big.add_term(mono(&[], -1), cfg.one());
        assert_eq!(e_big.plus_project(&cfg), e_big);
        // α(-1) e^α -> α(-1)F/2
        let a = FockElement::from_monomial(mono(&[1], 1), cfg.one());
        let pa = a.plus_project(&cfg);
        assert_eq!(pa.coefficient(&mono(&[1], 1)), Some(&half));
        assert_eq!(pa.coefficient(&mono(&[1], -1)), Some(&-&half));
        // idempotent and θ-fixed
        assert_eq!(pa.plus_project(&cfg), pa);
        assert_eq!(pa.theta(), pa);
    }

    #[test]
    fn alpha_length_examples() {
        let cfg = k3();
        let mut e = FockElement::from_monomial(mono(&[2, 1], 1), cfg.one());
        e.add_term(mono(&[2, 1], -1), cfg.one());
        assert_eq!(e.alpha_length().unwrap(), 2);
        let pure = FockElement::from_monomial(mono(&[], 1), cfg.one());
        assert_eq!(pure.alpha_length().unwrap(), 0);
        let mut long = FockElement::from_monomial(mono(&[1, 1, 1, 1], 1), cfg.one());
        long.add_term(mono(&[4], -1), cfg.one());
        assert_eq!(long.alpha_length().unwrap(), 4);
        assert!(FockElement::zero().alpha_length().is_err());
    }

    #[test]
    fn basis_m1_plus_weight_8_matches_named_family() {
        let cfg = k3();
        let b = enumerate_basis(&cfg, Space::M1Plus, 8).unwrap();
        assert_eq!(b.len(), 12);
        let got: Vec<Vec<u32>> = b
            .vectors
            .iter()
            .map(|v| match v {
                BasisVector::M1(p) => p.clone(),
                _ => panic!(),
            })
            .collect();
        // the twelve even-length partitions of 8
        let mut want = vec![
            vec![7, 1],
            vec![6, 2],
            vec![5, 3],
            vec![5, 1, 1, 1],
            vec![4, 4],
            vec![4, 2, 1, 1],
            vec![3, 3, 1, 1],
            vec![3, 2, 2, 1],
            vec![2, 2, 2, 2],
            vec![2, 2, 1, 1, 1, 1],
            vec![3, 1, 1, 1, 1, 1],
            vec![1, 1, 1, 1, 1, 1, 1, 1],
        ];
        want.sort();
        let mut got_sorted = got.clone();
        got_sorted.sort();
        assert_eq!(got_sorted, want);
        // graded-lex order, longest part first
        assert_eq!(got[0], vec![7, 1]);
        assert_eq!(got[11], vec![1, 1, 1, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn basis_weight_zero_is_vacuum() {
        let cfg = k3();
        let b = enumerate_basis(&cfg, Space::M1Plus, 0).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b.vectors[0], BasisVector::M1(vec![]));
    }

    #[test]
    fn basis_sector_weight_7_at_k3() {
        let cfg = k3();
        // V_L^+(1, k+4) at k = 3: the five partitions of 4
        let b = enumerate_basis(&cfg, Space::SectorPlus(1), 7).unwrap();
        assert_eq!(b.len(), 5);
        let names: Vec<String> = b.vectors.iter().map(|v| v.name()).collect();
        assert_eq!(
            names,
            vec![
                "a(-4)F",
                "a(-3)a(-1)E",
                "a(-2)a(-2)E",
                "a(-2)a(-1)a(-1)F",
                "a(-1)a(-1)a(-1)a(-1)E"
            ]
        );
        // below the sector floor the basis is empty
        let empty = enumerate_basis(&cfg, Space::SectorPlus(2), 7).unwrap();
        assert!(empty.is_empty());
        // at the floor it is the bare exponential combination
        let floor = enumerate_basis(&cfg, Space::SectorPlus(2), 12).unwrap();
        assert_eq!(floor.len(), 1);
        assert_eq!(floor.vectors[0].name(), "E2");
    }

    #[test]
    fn full_space_needs_fixed_k() {
        let sym = LatticeConfig::symbolic();
        assert!(enumerate_basis(&sym, Space::FullVLPlus, 4).is_err());
        let cfg = k3();
        let b = enumerate_basis(&cfg, Space::FullVLPlus, 4).unwrap();
        // even partitions of 4 (three) + sector-1 excess 1 (one)
        assert_eq!(b.len(), 4);
    }

    #[test]
    fn canonical_order_on_monomials() {
        let m4 = mono(&[4], 0);
        let m31 = mono(&[3, 1], 0);
        let m22 = mono(&[2, 2], 0);
        let m211 = mono(&[2, 1, 1], 0);
        let m1111 = mono(&[1, 1, 1, 1], 0);
        assert!(m4 < m31 && m31 < m22 && m22 < m211 && m211 < m1111);
        // charges: magnitude first, positive before negative
        assert!(mono(&[2], 0) < mono(&[], 1));
        assert!(mono(&[], 1) < mono(&[], -1));
        assert!(mono(&[], -1) < mono(&[], 2));
    }

    #[test]
    fn json_shape() {
        let cfg = k3();
        let mut e = FockElement::from_monomial(mono(&[3, 1], 1), cfg.from_int(2));
        e.add_term(mono(&[], -1), cfg.from_rat(ratio(-1, 2)));
        let j = e.to_json();
        let arr = j.as_array().unwrap();
        assert_eq!(arr.len(), 2);
        // positive charge sorts before negative at equal magnitude
        assert_eq!(arr[0]["parts"], serde_json::json!([3, 1]));
        assert_eq!(arr[0]["charge"], serde_json::json!(1));
        assert_eq!(arr[0]["coeff"], serde_json::json!("2"));
        assert_eq!(arr[1]["coeff"], serde_json::json!("-1/2"));
    }

    proptest! {
        #[test]
        fn partition_parity_counts(n in 0u32..13) {
            let cfg = k3();
            let plus = enumerate_basis(&cfg, Space::M1Plus, n).unwrap().len() as u64;
            let minus = enumerate_basis(&cfg, Space::M1Minus, n).unwrap().len() as u64;
            prop_assert_eq!(plus + minus, partition_count(n));
        }

        #[test]
        fn add_negate_cancels(parts in proptest::collection::vec(1u32..6, 0..5), c in -9i64..10, m in -2i32..3) {
            let cfg = k3();
            if c != 0 {
                let e = FockElement::from_monomial(mono(&parts, m), cfg.from_int(c));
                let mut s = e.clone();
                s.add_assign(&e.negated());
                prop_assert!(s.is_zero());
            }
        }

        #[test]
        fn theta_involution(parts in proptest::collection::vec(1u32..6, 0..5), m in -2i32..3) {
            let cfg = k3();
            let e = FockElement::from_monomial(mono(&parts, m), cfg.from_int(1));
            prop_assert_eq!(e.theta().theta(), e);
        }
    }
}
