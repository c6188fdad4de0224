//! Exact invariant cohomology of nil- and solvmanifolds.
//!
//! Starting from structure equations of a Lie algebra, the crate computes the
//! Chevalley–Eilenberg (invariant de Rham) cohomology over ℚ(i), splits it
//! along the bigrading induced by an almost-complex structure, decides the
//! C∞-pure/full and pure/full properties stage by stage, computes Dolbeault
//! numbers of integrable structures, and evaluates deformations: the
//! Nakamura family of the Iwasawa manifold and curves `J_t = (1 - tL) J (1 - tL)^{-1}`.
//!
//! All results are invariant-level: they describe the cohomology of the
//! complex of left-invariant forms. Arithmetic is exact throughout.

pub mod almost_complex;
pub mod catalog;
pub mod cli;
pub mod cohomology;
pub mod deformation;
pub mod dsl;
pub mod error;
pub mod exterior;
pub mod field;
pub mod hodge;
pub mod linalg;
pub mod report;

pub use almost_complex::{AlmostComplexStructure, BigradedForm, PureFullVerdict};
pub use cohomology::{CohomologyBasis, CohomologySubspace};
pub use error::{Error, Result};
pub use exterior::{KForm, LieAlgebraSpec, MultiIndex};
pub use field::{GaussianRational, Rational};
pub use linalg::{Matrix, Subspace};
