//! Exact-arithmetic engine for Lie bialgebras, their classical doubles,
//! and diagonal contractions.
//!
//! The crate builds on three layers:
//!
//! * [`scalar`] — multivariate polynomials over the rationals, the
//!   coefficient ring for every structure constant;
//! * [`tensor`] / [`bialgebra`] / [`double`] — sparse structure tensors,
//!   bialgebra axiom checks, and the classical double construction;
//! * [`contraction`] — diagonal exponent contractions, the
//!   double-preserving conditions and their solution families, the
//!   fundamental/coboundary/renormalization constants, and classical
//!   limits.
//!
//! [`document`] and [`catalog`] supply the on-disk algebra format and the
//! built-in worked examples driven by the `bialg` command-line tool.

pub mod bialgebra;
pub mod catalog;
pub mod cli;
pub mod contraction;
pub mod document;
pub mod double;
pub mod render;
pub mod scalar;
pub mod tensor;

pub use bialgebra::{
    check_ad_invariance, check_jacobi, check_cocycle, cocommutator_from_rmatrix, schouten_defect,
    DefectKind, DefectReport, LieBialgebra, RMatrix,
};
pub use double::{assemble_double_tensor, build_double, DoubleAlgebra};
pub use scalar::{Rational, Scalar};
pub use tensor::{transpose_roles, CocommutatorTensor, CommutatorTensor, GenericTensor};
