//! Exact symbolic calculus for the fixed-point subalgebra of the rank-one
//! lattice vertex operator algebra, with brute-force C2-span certificates
//! at a fixed lattice parameter.
//!
//! The crate is organized bottom-up:
//!
//! - [`poly`], [`scalar`]: exact arithmetic in Q and in the rational
//!   function field Q(k);
//! - [`fock`]: the graded state space and basis enumeration;
//! - [`vertex`]: mode application `v_t w`, Virasoro operators, Schur states,
//!   and an independent literal-series oracle;
//! - [`linalg`]: dense exact linear algebra (fraction-free determinants,
//!   inverses, span membership);
//! - [`c2`]: graded spans of the products `u_{-2}v`, quotient dimensions and
//!   congruence certificates;
//! - [`reference`]: the printed reference tables and constants, used only
//!   for comparison reports;
//! - [`report`]: the named basis families, the six tables, the congruence
//!   constants, and the comparison reports;
//! - [`verify`]: the end-to-end verification suite;
//! - [`expr`]: the expression mini-language of the command line;
//! - [`cli`]: the `voaplus` command-line surface.

pub mod c2;
pub mod cli;
pub mod expr;
pub mod fock;
pub mod linalg;
pub mod poly;
pub mod reference;
pub mod report;
pub mod scalar;
pub mod verify;
pub mod vertex;

pub use fock::{FockElement, FockMonomial, GradedBasis, Space};
pub use scalar::{LatticeConfig, RatFn, Scalar};
pub use vertex::{Engine, Named};
