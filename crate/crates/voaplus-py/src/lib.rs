//! Python bindings: a `Lattice` handle fixing the computation mode and an
//! `Element` wrapper over the canonical sparse states, plus the table,
//! constant, and span-certificate entry points.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use voaplus::c2;
use voaplus::expr;
use voaplus::fock::FockElement;
use voaplus::poly::ratio;
use voaplus::report;
use voaplus::scalar::LatticeConfig;
use voaplus::vertex::{mode_apply_oracle, Engine};

fn runtime<E: std::fmt::Display>(e: E) -> PyErr {
    PyRuntimeError::new_err(e.to_string())
}

fn value<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A state of the algebra, tied to the lattice mode it was built in.
#[pyclass(from_py_object)]
#[derive(Clone)]
struct Element {
    cfg: LatticeConfig,
    inner: FockElement,
}

#[pymethods]
impl Element {
    fn __repr__(&self) -> String {
        format!("Element({})", self.inner)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __eq__(&self, other: &Element) -> bool {
        self.cfg == other.cfg && self.inner == other.inner
    }

    fn __add__(&self, other: &Element) -> PyResult<Element> {
        if self.cfg != other.cfg {
            return Err(value("elements from different lattice modes"));
        }
        let mut out = self.inner.clone();
        out.add_assign(&other.inner);
        Ok(Element {
            cfg: self.cfg,
            inner: out,
        })
    }

    fn __sub__(&self, other: &Element) -> PyResult<Element> {
        if self.cfg != other.cfg {
            return Err(value("elements from different lattice modes"));
        }
        Ok(Element {
            cfg: self.cfg,
            inner: self.inner.sub(&other.inner),
        })
    }

    /// Multiply by the exact rational `num/den`.
    fn scale(&self, num: i64, den: i64) -> PyResult<Element> {
        if den == 0 {
            return Err(value("zero denominator"));
        }
        Ok(Element {
            cfg: self.cfg,
            inner: self.inner.scaled(&self.cfg.from_rat(ratio(num, den))),
        })
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn theta(&self) -> Element {
        Element {
            cfg: self.cfg,
            inner: self.inner.theta(),
        }
    }

    fn plus_project(&self) -> Element {
        Element {
            cfg: self.cfg,
            inner: self.inner.plus_project(&self.cfg),
        }
    }

    /// Conformal weight of a homogeneous element, as a canonical string.
    fn weight(&self) -> PyResult<String> {
        self.inner
            .weight(&self.cfg)
            .map(|w| w.to_string())
            .map_err(runtime)
    }

    fn alpha_length(&self) -> PyResult<usize> {
        self.inner.alpha_length().map_err(runtime)
    }

    /// Canonical JSON: `[{parts, charge, coeff}, ...]`.
    fn to_json(&self) -> String {
        self.inner.to_json().to_string()
    }
}

/// Computation context: a fixed integer lattice parameter or symbolic `k`.
#[pyclass(from_py_object)]
#[derive(Clone)]
struct Lattice {
    cfg: LatticeConfig,
}

#[pymethods]
impl Lattice {
    #[new]
    #[pyo3(signature = (k=None))]
    fn new(k: Option<u32>) -> PyResult<Self> {
        match k {
            Some(0) => Err(value("the lattice parameter must be positive")),
            Some(k) => Ok(Lattice {
                cfg: LatticeConfig::fixed(k),
            }),
            None => Ok(Lattice {
                cfg: LatticeConfig::symbolic(),
            }),
        }
    }

    fn is_symbolic(&self) -> bool {
        self.cfg.is_symbolic()
    }

    fn __repr__(&self) -> String {
        match self.cfg.fixed_k() {
            Some(k) => format!("Lattice(k={})", k),
            None => "Lattice(symbolic)".to_string(),
        }
    }

    /// Parse and evaluate an expression such as `"[J]_-1 E"` or
    /// `"L(-2) L(-2) 1"`.
    fn eval(&self, text: &str) -> PyResult<Element> {
        let ast = expr::parse_expr(text).map_err(value)?;
        let eng = Engine::new(self.cfg);
        let inner = expr::eval(&eng, &ast).map_err(runtime)?;
        Ok(Element {
            cfg: self.cfg,
            inner,
        })
    }

    /// Heisenberg mode action `alpha(n)`.
    fn alpha(&self, n: i64, e: &Element) -> PyResult<Element> {
        self.guard(e)?;
        let eng = Engine::new(self.cfg);
        Ok(Element {
            cfg: self.cfg,
            inner: eng.apply_alpha(n, &e.inner),
        })
    }

    /// Virasoro mode `L(n)`.
    fn virasoro(&self, n: i64, e: &Element) -> PyResult<Element> {
        self.guard(e)?;
        let eng = Engine::new(self.cfg);
        Ok(Element {
            cfg: self.cfg,
            inner: eng.virasoro(n, &e.inner).map_err(runtime)?,
        })
    }

    /// General mode application `v_t w`.
    fn mode_apply(&self, v: &Element, t: i64, w: &Element) -> PyResult<Element> {
        self.guard(v)?;
        self.guard(w)?;
        let eng = Engine::new(self.cfg);
        Ok(Element {
            cfg: self.cfg,
            inner: eng.mode_apply(&v.inner, t, &w.inner).map_err(runtime)?,
        })
    }

    /// Literal-series oracle for `v_t w` (fixed `k`, capped total weight).
    #[pyo3(signature = (v, t, w, cap=24))]
    fn mode_apply_oracle(&self, v: &Element, t: i64, w: &Element, cap: u32) -> PyResult<Element> {
        self.guard(v)?;
        self.guard(w)?;
        Ok(Element {
            cfg: self.cfg,
            inner: mode_apply_oracle(&self.cfg, &v.inner, t, &w.inner, cap).map_err(runtime)?,
        })
    }

    /// Schur polynomial state `p_j(m·alpha)`.
    fn schur_p(&self, j: u32, m: i64) -> Element {
        let eng = Engine::new(self.cfg);
        Element {
            cfg: self.cfg,
            inner: eng.schur_p(j, m),
        }
    }

    /// One of the six tables as canonical JSON (symbolic mode only).
    fn table(&self, id: u8) -> PyResult<String> {
        if !self.cfg.is_symbolic() {
            return Err(value("tables are computed at symbolic k"));
        }
        if !(1..=6).contains(&id) {
            return Err(value("table id must be 1..=6"));
        }
        let eng = Engine::new(self.cfg);
        let t = report::emit_table(&eng, id).map_err(runtime)?;
        Ok(report::table_json(&t).to_string())
    }

    /// The congruence constants report as canonical JSON (symbolic mode).
    fn constants(&self) -> PyResult<String> {
        if !self.cfg.is_symbolic() {
            return Err(value("constants are computed at symbolic k"));
        }
        let eng = Engine::new(self.cfg);
        let r = report::constants_report(&eng).map_err(runtime)?;
        Ok(report::constants_json(&r).to_string())
    }

    /// Quotient dimension of the weight component by the graded span of
    /// second products (fixed `k >= 3`).
    fn c2_quotient_dim(&self, weight: u32) -> PyResult<usize> {
        c2::quotient_dim(&self.cfg, weight).map_err(runtime)
    }

    /// Span-membership certificate for `lhs ≡ rhs`; returns
    /// `(verified, certificate_json)`.
    fn congruent(&self, lhs: &Element, rhs: &Element) -> PyResult<(bool, String)> {
        self.guard(lhs)?;
        self.guard(rhs)?;
        let cert = c2::congruent(&self.cfg, &lhs.inner, &rhs.inner).map_err(runtime)?;
        Ok((cert.verified, cert.to_json().to_string()))
    }
}

impl Lattice {
    fn guard(&self, e: &Element) -> PyResult<()> {
        if e.cfg != self.cfg {
            return Err(value("element was built in a different lattice mode"));
        }
        Ok(())
    }
}

#[pymodule]
fn voaplus_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Lattice>()?;
    m.add_class::<Element>()?;
    Ok(())
}
