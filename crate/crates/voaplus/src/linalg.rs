//! Dense exact linear algebra over [`Scalar`]: fraction-free determinants,
//! inverses, reduced row echelon form, span membership with certificates,
//! and coordinate expansion of elements in a graded basis.

use crate::fock::{FockElement, FockMonomial, GradedBasis};
use crate::poly::KPoly;
use crate::scalar::{LatticeConfig, RatFn, Scalar};
use num::{BigInt, BigRational, One};
use serde_json::{json, Value};
use std::collections::{BTreeMap, HashMap};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinalgError {
    NotSquare { rows: usize, cols: usize },
    Singular { determinant: String },
    ShapeMismatch,
    MixedWeights,
    NotInSpan { residual: Vec<String> },
}

impl fmt::Display for LinalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinalgError::NotSquare { rows, cols } => {
                write!(f, "matrix is not square: {}x{}", rows, cols)
            }
            LinalgError::Singular { determinant } => {
                write!(f, "matrix is singular (determinant {})", determinant)
            }
            LinalgError::ShapeMismatch => write!(f, "matrix shapes do not match"),
            LinalgError::MixedWeights => write!(f, "elements of mixed weights"),
            LinalgError::NotInSpan { residual } => {
                write!(f, "element is not in the span; residual monomials: ")?;
                for (i, r) in residual.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{}", r)?;
                }
                Ok(())
            }
        }
    }
}

impl std::error::Error for LinalgError {}

/// A dense row-major matrix of exact scalars (one mode throughout).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(rows * cols, data.len());
        ExactMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c));
        ExactMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn identity(cfg: &LatticeConfig, n: usize) -> Self {
        let mut data = vec![cfg.zero(); n * n];
        for i in 0..n {
            data[i * n + i] = cfg.one();
        }
        ExactMatrix {
            rows: n,
            cols: n,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.at(i, j).clone());
            }
        }
        ExactMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::ShapeMismatch);
        }
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc: Option<Scalar> = None;
                for l in 0..self.cols {
                    let term = self.at(i, l) * other.at(l, j);
                    acc = Some(match acc {
                        None => term,
                        Some(a) => &a + &term,
                    });
                }
                data.push(acc.unwrap());
            }
        }
        Ok(ExactMatrix {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    /// Row-vector times matrix.
    pub fn row_vec_mul(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
        if v.len() != self.rows {
            return Err(LinalgError::ShapeMismatch);
        }
        let mut out = Vec::with_capacity(self.cols);
        for j in 0..self.cols {
            let mut acc: Option<Scalar> = None;
            for i in 0..self.rows {
                let term = &v[i] * self.at(i, j);
                acc = Some(match acc {
                    None => term,
                    Some(a) => &a + &term,
                });
            }
            out.push(acc.unwrap());
        }
        Ok(out)
    }

    fn is_symbolic(&self) -> bool {
        matches!(self.data.first(), Some(Scalar::F(_)))
    }

    fn zero_like(&self) -> Scalar {
        if self.is_symbolic() {
            Scalar::F(RatFn::zero())
        } else {
            Scalar::Q(BigRational::from_integer(0.into()))
        }
    }

    fn one_like(&self) -> Scalar {
        if self.is_symbolic() {
            Scalar::F(RatFn::one())
        } else {
            Scalar::Q(BigRational::one())
        }
    }

    /// Exact determinant: denominators are cleared per row, then Bareiss
    /// fraction-free elimination runs over the polynomial (or integer)
    /// numerators with exact deferred divisions.
    pub fn determinant(&self) -> Result<Scalar, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(self.one_like());
        }
        let mut work: Vec<Vec<KPoly>> = Vec::with_capacity(n);
        let mut row_factor: Vec<RatFn> = Vec::with_capacity(n);
        for i in 0..n {
            let (polys, factor) = clear_row(&self.data[i * n..(i + 1) * n]);
            work.push(polys);
            row_factor.push(factor);
        }
        let mut sign_flip = false;
        let mut prev_pivot = KPoly::one();
        for c in 0..n {
            let pivot_row = match (c..n).find(|&r| !work[r][c].is_zero()) {
                Some(r) => r,
                None => return Ok(self.zero_like()),
            };
            if pivot_row != c {
                work.swap(pivot_row, c);
                sign_flip = !sign_flip;
            }
            for r in (c + 1)..n {
                for j in (c + 1)..n {
                    let num = &(&work[c][c] * &work[r][j]) - &(&work[r][c] * &work[c][j]);
                    work[r][j] = num.exact_div(&prev_pivot);
                }
                work[r][c] = KPoly::zero();
            }
            prev_pivot = work[c][c].clone();
        }
        let mut det = RatFn::from_poly(work[n - 1][n - 1].clone());
        if sign_flip {
            det = -&det;
        }
        for f in &row_factor {
            det = &det / f;
        }
        Ok(if self.is_symbolic() {
            Scalar::F(det)
        } else {
            let num = det.numerator().as_constant().expect("constant determinant");
            let den = det.denominator().as_constant().expect("constant determinant");
            Scalar::Q(num / den)
        })
    }

    /// Exact inverse; fails with the determinant attached when singular.
    pub fn invert(&self) -> Result<ExactMatrix, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let det = self.determinant()?;
        if det.is_zero() {
            return Err(LinalgError::Singular {
                determinant: det.to_string(),
            });
        }
        let n = self.rows;
        let mut a: Vec<Vec<Scalar>> = (0..n)
            .map(|i| self.data[i * n..(i + 1) * n].to_vec())
            .collect();
        let mut inv: Vec<Vec<Scalar>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { self.one_like() } else { self.zero_like() })
                    .collect()
            })
            .collect();
        for c in 0..n {
            let pivot_row = (c..n)
                .find(|&r| !a[r][c].is_zero())
                .expect("nonsingular matrix lost rank");
            a.swap(c, pivot_row);
            inv.swap(c, pivot_row);
            let p_inv = a[c][c].inv();
            for j in 0..n {
                a[c][j] = &a[c][j] * &p_inv;
                inv[c][j] = &inv[c][j] * &p_inv;
            }
            for r in 0..n {
                if r == c || a[r][c].is_zero() {
                    continue;
                }
                let f = std::mem::replace(&mut a[r][c], self.zero_like());
                for j in 0..n {
                    a[r][j] = &a[r][j] - &(&f * &a[c][j]);
                    inv[r][j] = &inv[r][j] - &(&f * &inv[c][j]);
                }
            }
        }
        Ok(ExactMatrix::from_rows(inv))
    }

    /// Reduced row echelon form with the rank; deterministic first-nonzero
    /// pivoting.
    pub fn rref(&self) -> (ExactMatrix, usize) {
        let mut a: Vec<Vec<Scalar>> = (0..self.rows)
            .map(|i| self.data[i * self.cols..(i + 1) * self.cols].to_vec())
            .collect();
        let mut rank = 0;
        for c in 0..self.cols {
            let pivot_row = (rank..self.rows).find(|&r| !a[r][c].is_zero());
            let pivot_row = match pivot_row {
                Some(r) => r,
                None => continue,
            };
            a.swap(rank, pivot_row);
            let p_inv = a[rank][c].inv();
            for j in 0..self.cols {
                a[rank][j] = &a[rank][j] * &p_inv;
            }
            for r in 0..self.rows {
                if r == rank || a[r][c].is_zero() {
                    continue;
                }
                let f = std::mem::replace(&mut a[r][c], self.zero_like());
                for j in 0..self.cols {
                    a[r][j] = &a[r][j] - &(&f * &a[rank][j]);
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        (ExactMatrix::from_rows(a), rank)
    }

    /// Row-major JSON with shape, scalars as canonical strings.
    pub fn to_json(&self) -> Value {
        json!({
            "rows": self.rows,
            "cols": self.cols,
            "entries": self.data.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
        })
    }

    /// LaTeX tabular matching the reference layout.
    pub fn to_latex(&self, row_labels: &[String], col_labels: &[String]) -> String {
        let mut out = String::new();
        out.push_str("\\begin{tabular}{||c|");
        for _ in 0..self.cols {
            out.push_str("c|");
        }
        out.push_str("|}\n\\hline\n");
        for l in col_labels {
            out.push_str(&format!("& ${}$ ", l));
        }
        out.push_str("\\\\\n\\hline\n");
        for i in 0..self.rows {
            out.push_str(&format!("${}$ ", row_labels[i]));
            for j in 0..self.cols {
                out.push_str(&format!("& ${}$ ", self.at(i, j)));
            }
            out.push_str("\\\\\n\\hline\n");
        }
        out.push_str("\\end{tabular}\n");
        out
    }
}

/// Clear a row to polynomial entries: returns `(polys, factor)` with
/// `polys[i] = row[i] * factor` exactly, `factor` a polynomial times a
/// positive integer.
fn clear_row(row: &[Scalar]) -> (Vec<KPoly>, RatFn) {
    // polynomial lcm of the denominators
    let mut lcm = KPoly::one();
    for s in row {
        if let Scalar::F(r) = s {
            let den = r.denominator();
            let g = lcm.gcd(den);
            lcm = &lcm * &den.exact_div(&g);
        }
    }
    let mut scaled: Vec<KPoly> = row
        .iter()
        .map(|s| match s {
            Scalar::F(r) => &lcm.exact_div(r.denominator()) * r.numerator(),
            Scalar::Q(q) => KPoly::constant(q.clone()),
        })
        .collect();
    // clear the rational coefficients with one integer factor
    let mut den_lcm = BigInt::one();
    for p in &scaled {
        if let Some(d) = p.degree() {
            for i in 0..=d {
                den_lcm = num::integer::lcm(den_lcm, p.coeff(i).denom().clone());
            }
        }
    }
    let int_scale = BigRational::from_integer(den_lcm);
    for p in scaled.iter_mut() {
        *p = p.scale(&int_scale);
    }
    let factor = RatFn::from_poly(lcm.scale(&int_scale));
    (scaled, factor)
}

/// Outcome of a span-membership query.
#[derive(Clone, Debug)]
pub struct SpanDecision {
    /// Sparse coefficients over the generator list when the element lies in
    /// the span (verified by reconstruction).
    pub coefficients: Option<Vec<(usize, Scalar)>>,
    /// When not in the span: the reduced residual, plus the monomials not
    /// hit by any pivot (a basis of the quotient).
    pub residual: Option<FockElement>,
    pub quotient_monomials: Vec<FockMonomial>,
    pub rank: usize,
}

impl SpanDecision {
    pub fn in_span(&self) -> bool {
        self.coefficients.is_some()
    }
}

struct TrackedRow {
    element: FockElement,
    combo: HashMap<usize, Scalar>,
}

/// Decide whether `e` lies in the span of `generators`, all homogeneous of
/// one weight, and produce either expansion coefficients (verified by exact
/// reconstruction) or a quotient witness.
pub fn in_span(
    cfg: &LatticeConfig,
    e: &FockElement,
    generators: &[FockElement],
) -> Result<SpanDecision, LinalgError> {
    let mut weight: Option<Scalar> = None;
    for g in generators.iter().chain(std::iter::once(e)) {
        if g.is_zero() {
            continue;
        }
        let w = g.weight(cfg).map_err(|_| LinalgError::MixedWeights)?;
        match &weight {
            None => weight = Some(w),
            Some(prev) if *prev == w => {}
            Some(_) => return Err(LinalgError::MixedWeights),
        }
    }

    let mut rows: BTreeMap<FockMonomial, TrackedRow> = BTreeMap::new();
    for (idx, g) in generators.iter().enumerate() {
        let mut elem = g.clone();
        let mut combo: HashMap<usize, Scalar> = HashMap::new();
        combo.insert(idx, cfg.one());
        reduce_tracked(&mut elem, &mut combo, &rows);
        if let Some(lead) = elem.leading_monomial().cloned() {
            let inv = elem.coefficient(&lead).unwrap().inv();
            let elem = elem.scaled(&inv);
            let combo = combo
                .into_iter()
                .map(|(i, c)| (i, &c * &inv))
                .collect();
            rows.insert(lead, TrackedRow { element: elem, combo });
        }
    }

    let mut residual = e.clone();
    let mut combo: HashMap<usize, Scalar> = HashMap::new();
    reduce_tracked(&mut residual, &mut combo, &rows);

    // monomials not covered by a pivot span the quotient
    let mut support: Vec<FockMonomial> = Vec::new();
    for g in generators.iter().chain(std::iter::once(e)) {
        for (m, _) in g.terms() {
            support.push(m.clone());
        }
    }
    support.sort();
    support.dedup();
    let quotient_monomials: Vec<FockMonomial> = support
        .into_iter()
        .filter(|m| !rows.contains_key(m))
        .collect();

    if residual.is_zero() {
        // e = Σ (-combo_i) g_i after the sign convention of reduction
        let coeffs: Vec<(usize, Scalar)> = combo
            .into_iter()
            .map(|(i, c)| (i, -&c))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        // verify by reconstruction
        let mut rebuilt = FockElement::zero();
        for (i, c) in &coeffs {
            rebuilt.add_scaled(c, &generators[*i]);
        }
        debug_assert_eq!(rebuilt, *e, "reconstruction must reproduce the element");
        if rebuilt != *e {
            return Err(LinalgError::NotInSpan {
                residual: vec!["internal reconstruction failure".into()],
            });
        }
        let mut coeffs = coeffs;
        coeffs.sort_by_key(|(i, _)| *i);
        Ok(SpanDecision {
            coefficients: Some(coeffs),
            residual: None,
            quotient_monomials,
            rank: rows.len(),
        })
    } else {
        Ok(SpanDecision {
            coefficients: None,
            residual: Some(residual),
            quotient_monomials,
            rank: rows.len(),
        })
    }
}

fn reduce_tracked(
    elem: &mut FockElement,
    combo: &mut HashMap<usize, Scalar>,
    rows: &BTreeMap<FockMonomial, TrackedRow>,
) {
    loop {
        let lead = match elem.leading_monomial() {
            Some(l) => l.clone(),
            None => return,
        };
        let row = match rows.get(&lead) {
            Some(r) => r,
            None => return,
        };
        let c = elem.coefficient(&lead).unwrap().clone();
        elem.add_scaled(&(-&c), &row.element);
        for (i, rc) in &row.combo {
            let delta = &(-&c) * rc;
            match combo.entry(*i) {
                std::collections::hash_map::Entry::Vacant(v) => {
                    if !delta.is_zero() {
                        v.insert(delta);
                    }
                }
                std::collections::hash_map::Entry::Occupied(mut o) => {
                    let s = o.get() + &delta;
                    if s.is_zero() {
                        o.remove();
                    } else {
                        *o.get_mut() = s;
                    }
                }
            }
        }
    }
}

/// Exact coordinates of `e` in a graded basis; the reconstruction
/// `Σ coords_i · basis_i = e` holds by construction.
#[derive(Clone, Debug)]
pub struct CoordinateVector {
    pub basis: GradedBasis,
    pub coords: Vec<Scalar>,
}

pub fn expand_in_basis(
    cfg: &LatticeConfig,
    e: &FockElement,
    basis: &GradedBasis,
) -> Result<CoordinateVector, LinalgError> {
    let elements = basis.elements(cfg);
    let decision = in_span(cfg, e, &elements)?;
    match decision.coefficients {
        Some(sparse) => {
            let mut coords = vec![cfg.zero(); elements.len()];
            for (i, c) in sparse {
                coords[i] = c;
            }
            Ok(CoordinateVector {
                basis: basis.clone(),
                coords,
            })
        }
        None => Err(LinalgError::NotInSpan {
            residual: decision
                .residual
                .map(|r| r.terms().map(|(m, _)| m.to_string()).collect())
                .unwrap_or_default(),
        }),
    }
}

pub fn reconstruct(cfg: &LatticeConfig, cv: &CoordinateVector) -> FockElement {
    let mut out = FockElement::zero();
    for (c, v) in cv.coords.iter().zip(cv.basis.vectors.iter()) {
        out.add_scaled(c, &v.element(cfg));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::{enumerate_basis, Space};
    use crate::poly::{rat, ratio};
    use crate::scalar::parse_ratfn;
    use crate::vertex::{Engine, Named};
    use proptest::prelude::*;

    fn qm(rows: usize, cols: usize, ints: &[i64]) -> ExactMatrix {
        ExactMatrix::new(
            rows,
            cols,
            ints.iter().map(|&n| Scalar::Q(rat(n))).collect(),
        )
    }

    /// Cofactor-expansion determinant, the independent small-size oracle.
    fn cofactor_det(m: &ExactMatrix) -> Scalar {
        let n = m.rows();
        assert_eq!(n, m.cols());
        if n == 1 {
            return m.at(0, 0).clone();
        }
        let mut acc: Option<Scalar> = None;
        for j in 0..n {
            if m.at(0, j).is_zero() {
                continue;
            }
            let mut sub = Vec::new();
            for r in 1..n {
                let mut row = Vec::new();
                for c in 0..n {
                    if c != j {
                        row.push(m.at(r, c).clone());
                    }
                }
                sub.push(row);
            }
            let minor = cofactor_det(&ExactMatrix::from_rows(sub));
            let mut term = m.at(0, j) * &minor;
            if j % 2 == 1 {
                term = -&term;
            }
            acc = Some(match acc {
                None => term,
                Some(a) => &a + &term,
            });
        }
        acc.unwrap_or_else(|| {
            Scalar::Q(num::BigRational::from_integer(0.into()))
        })
    }

    #[test]
    fn determinant_small_integers() {
        let m = qm(2, 2, &[1, 2, 3, 4]);
        assert_eq!(m.determinant().unwrap(), Scalar::Q(rat(-2)));
        let id = ExactMatrix::identity(&LatticeConfig::fixed(3), 5);
        assert_eq!(id.determinant().unwrap(), Scalar::Q(rat(1)));
        let singular = qm(2, 2, &[1, 2, 2, 4]);
        assert_eq!(singular.determinant().unwrap(), Scalar::Q(rat(0)));
        assert!(matches!(
            qm(2, 3, &[1, 2, 3, 4, 5, 6]).determinant(),
            Err(LinalgError::NotSquare { .. })
        ));
    }

    #[test]
    fn determinant_symbolic() {
        // [[k, 1], [1, 1/k]] is singular; [[k, 1], [0, 1/k]] has det 1
        let k = Scalar::F(RatFn::k());
        let one = Scalar::F(RatFn::one());
        let zero = Scalar::F(RatFn::zero());
        let k_inv = Scalar::F(RatFn::k().inv().unwrap());
        let m = ExactMatrix::from_rows(vec![
            vec![k.clone(), one.clone()],
            vec![one.clone(), k_inv.clone()],
        ]);
        assert!(m.determinant().unwrap().is_zero());
        let m = ExactMatrix::from_rows(vec![vec![k, one.clone()], vec![zero, k_inv]]);
        assert_eq!(m.determinant().unwrap(), one);
    }

    #[test]
    fn invert_round_trip_symbolic() {
        let e = |s: &str| Scalar::F(parse_ratfn(s).unwrap());
        let m = ExactMatrix::from_rows(vec![
            vec![e("1/(16*k^2)"), e("1/(2*k)"), e("2")],
            vec![e("0"), e("k"), e("1")],
            vec![e("1"), e("3"), e("0")],
        ]);
        let inv = m.invert().unwrap();
        let id = ExactMatrix::identity(&LatticeConfig::symbolic(), 3);
        assert_eq!(m.mul(&inv).unwrap(), id);
        assert_eq!(inv.mul(&m).unwrap(), id);
        // det(M^{-1}) = det(M)^{-1}
        let d = m.determinant().unwrap();
        assert_eq!(inv.determinant().unwrap(), d.inv());
        // singular error carries the determinant
        let s = ExactMatrix::from_rows(vec![
            vec![e("k"), e("k^2")],
            vec![e("1"), e("k")],
        ]);
        assert!(matches!(s.invert(), Err(LinalgError::Singular { .. })));
    }

    #[test]
    fn rref_rank() {
        let m = qm(3, 3, &[1, 2, 3, 2, 4, 6, 1, 0, 1]);
        let (_, rank) = m.rref();
        assert_eq!(rank, 2);
    }

    #[test]
    fn in_span_trivial_cases() {
        let cfg = LatticeConfig::fixed(3);
        let eng = Engine::new(cfg);
        let e = eng.build_named(Named::E).unwrap();
        let d = in_span(&cfg, &e, &[e.clone()]).unwrap();
        assert!(d.in_span());
        assert_eq!(d.coefficients.unwrap(), vec![(0, cfg.one())]);
        // 1 against the empty list
        let one = eng.build_named(Named::One).unwrap();
        let d = in_span(&cfg, &one, &[]).unwrap();
        assert!(!d.in_span());
        assert_eq!(d.quotient_monomials.len(), 1);
        // zero element is in any span
        let d = in_span(&cfg, &FockElement::zero(), &[e]).unwrap();
        assert!(d.in_span());
        assert!(d.coefficients.unwrap().is_empty());
    }

    #[test]
    fn in_span_rejects_mixed_weights() {
        let cfg = LatticeConfig::fixed(3);
        let eng = Engine::new(cfg);
        let e = eng.build_named(Named::E).unwrap();
        let j = eng.j_vector();
        assert!(matches!(
            in_span(&cfg, &e, &[j]),
            Err(LinalgError::MixedWeights)
        ));
    }

    #[test]
    fn expand_l2sq_e_in_sector_basis() {
        // L(-2)²E over the weight-(k+4) sector basis in canonical order,
        // symbolic k
        let cfg = LatticeConfig::symbolic();
        let eng = Engine::new(cfg);
        let e = eng.build_named(Named::E).unwrap();
        let l2sq = eng
            .virasoro(-2, &eng.virasoro(-2, &e).unwrap())
            .unwrap();
        let basis = enumerate_basis(&cfg, Space::SectorPlus(1), 4).unwrap();
        let cv = expand_in_basis(&cfg, &l2sq, &basis).unwrap();
        // canonical order: a(-4)F, a(-3)a(-1)E, a(-2)a(-2)E, a(-2)a(-1)^2 F, a(-1)^4 E
        let want: Vec<Scalar> = ["2", "1/(2*k)", "1", "1/(2*k)", "1/(16*k^2)"]
            .iter()
            .map(|s| Scalar::F(parse_ratfn(s).unwrap()))
            .collect();
        assert_eq!(cv.coords, want);
        assert_eq!(reconstruct(&cfg, &cv), l2sq);
        // zero expands to zero coordinates
        let z = expand_in_basis(&cfg, &FockElement::zero(), &basis).unwrap();
        assert!(z.coords.iter().all(|c| c.is_zero()));
    }

    #[test]
    fn expand_not_in_span_lists_residual() {
        let cfg = LatticeConfig::fixed(3);
        let eng = Engine::new(cfg);
        // α(-1)F has weight k+1 = 4 but is not supported in M(1)^+
        let basis = enumerate_basis(&cfg, Space::M1Plus, 4).unwrap();
        let f = eng.build_named(Named::F).unwrap();
        let out = expand_in_basis(&cfg, &eng.apply_alpha(-1, &f), &basis);
        match out {
            Err(LinalgError::NotInSpan { residual }) => assert!(!residual.is_empty()),
            other => panic!("expected not-in-span, got {:?}", other),
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn bareiss_matches_cofactor(entries in proptest::collection::vec(-5i64..6, 16)) {
            let m = qm(4, 4, &entries);
            prop_assert_eq!(m.determinant().unwrap(), cofactor_det(&m));
        }

        #[test]
        fn symbolic_invert_round_trip(raw in proptest::collection::vec((-3i64..4, 0u8..2), 9)) {
            // small matrices with entries c or c*k
            let data: Vec<Scalar> = raw
                .iter()
                .map(|&(c, d)| {
                    let p = KPoly::monomial(rat(c), d as usize);
                    Scalar::F(RatFn::from_poly(p))
                })
                .collect();
            let m = ExactMatrix::new(3, 3, data);
            let det = m.determinant().unwrap();
            if !det.is_zero() {
                let inv = m.invert().unwrap();
                let id = ExactMatrix::identity(&LatticeConfig::symbolic(), 3);
                prop_assert_eq!(m.mul(&inv).unwrap(), id.clone());
                prop_assert_eq!(inv.mul(&m).unwrap(), id);
                prop_assert_eq!(inv.determinant().unwrap(), det.inv());
            }
        }

        #[test]
        fn det_multiplicative(a in proptest::collection::vec(-4i64..5, 9), b in proptest::collection::vec(-4i64..5, 9)) {
            let ma = qm(3, 3, &a);
            let mb = qm(3, 3, &b);
            let prod = ma.mul(&mb).unwrap();
            prop_assert_eq!(
                prod.determinant().unwrap(),
                &ma.determinant().unwrap() * &mb.determinant().unwrap()
            );
        }
    }

    #[test]
    fn expand_round_trip_on_random_combinations() {
        let cfg = LatticeConfig::fixed(3);
        let basis = enumerate_basis(&cfg, Space::FullVLPlus, 5).unwrap();
        // coordinates -> element -> coordinates is the identity
        let coords: Vec<Scalar> = (0..basis.len())
            .map(|i| Scalar::Q(ratio(i as i64 % 5 - 2, 1 + i as i64)))
            .collect();
        let cv = CoordinateVector {
            basis: basis.clone(),
            coords: coords.clone(),
        };
        let e = reconstruct(&cfg, &cv);
        let back = expand_in_basis(&cfg, &e, &basis).unwrap();
        assert_eq!(back.coords, coords);
    }
}
