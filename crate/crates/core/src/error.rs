use thiserror::Error;

use crate::exterior::KForm;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed scalar `{0}`")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("matrix is singular")]
    Singular,
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("coframe dimension {0} must be even, nonzero and at most 32")]
    BadDimension(usize),
    #[error("each coframe differential must be a 2-form on the same coframe")]
    BadDifferential,
    #[error("coframe change is not invertible")]
    DependentCoframe,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("form is not closed; d of it is {witness:?}")]
    NotClosed { witness: KForm },
    #[error("form has degree {found}, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("subspaces live in different cohomology groups")]
    AmbientMismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexStructureError {
    #[error("J does not square to -id")]
    NotAlmostComplex,
    #[error("J must have rational (real) entries")]
    NotReal,
    #[error("the (1,0)-coframe and its conjugate are not a basis")]
    DependentCoframe,
    #[error("expected {expected} holomorphic 1-forms, got {found}")]
    WrongCoframeSize { expected: usize, found: usize },
    #[error("J is not integrable: d of (1,0)-form {index} has (0,2)-part {bucket:?}")]
    NotIntegrable { index: usize, bucket: KForm },
    #[error("J acts on a {found}-dimensional space but the coframe has {expected} elements")]
    DimensionMismatch { expected: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HodgeError {
    #[error("not a symplectic form: {0}")]
    NotSymplectic(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeformationError {
    #[error("denominator of {0} vanishes at this parameter")]
    SingularParameter(&'static str),
    #[error("parameter {name} violates the smallness guard |t|^2 <= {bound}")]
    OutsideGuard { name: &'static str, bound: String },
    #[error("L J + J L is not zero")]
    AnticommutationFailure { witness: crate::linalg::Matrix },
    #[error("id - t L is singular at t = {0}")]
    SingularAt(String),
    #[error("form is not J-anti-invariant; its (1,1)-part is {witness:?}")]
    NotAntiInvariant { witness: KForm },
    #[error("metric is not J-Hermitian")]
    NotHermitian,
    #[error("Nakamura deformations need a 6-dimensional coframe with a (1,0)-coframe")]
    NotIwasawaShaped,
    #[error(transparent)]
    Structure(#[from] ComplexStructureError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("line {line}: unknown basis name `{name}`")]
    UnknownBasisName { line: usize, name: String },
    #[error("line {line}: {message}")]
    DimensionMismatch { line: usize, message: String },
}

/// Crate-wide error, carrying a module-qualified code for machine-readable reports.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
    #[error(transparent)]
    ComplexStructure(#[from] ComplexStructureError),
    #[error(transparent)]
    Hodge(#[from] HodgeError),
    #[error(transparent)]
    Deformation(#[from] DeformationError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Usage(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub fn code(&self) -> String {
        let (module, name) = match self {
            Error::Field(e) => ("exact_field", match e {
                FieldError::DivisionByZero => "DivisionByZero",
                FieldError::Parse(_) => "ParseScalar",
            }),
            Error::Linalg(e) => ("cohomology_engine", match e {
                LinalgError::Singular => "Singular",
                LinalgError::NotSquare { .. } => "NotSquare",
            }),
            Error::Structure(e) => ("exterior_complex", match e {
                StructureError::BadDimension(_) => "BadDimension",
                StructureError::BadDifferential => "BadDifferential",
                StructureError::DependentCoframe => "DependentCoframe",
            }),
            Error::Cohomology(e) => ("cohomology_engine", match e {
                CohomologyError::NotClosed { .. } => "NotClosed",
                CohomologyError::DegreeMismatch { .. } => "DegreeMismatch",
                CohomologyError::AmbientMismatch => "AmbientMismatch",
            }),
            Error::ComplexStructure(e) => ("almost_complex", match e {
                ComplexStructureError::NotAlmostComplex => "NotAlmostComplex",
                ComplexStructureError::NotReal => "NotReal",
                ComplexStructureError::DependentCoframe => "DependentCoframe",
                ComplexStructureError::WrongCoframeSize { .. } => "WrongCoframeSize",
                ComplexStructureError::NotIntegrable { .. } => "NotIntegrable",
                ComplexStructureError::DimensionMismatch { .. } => "DimensionMismatch",
            }),
            Error::Hodge(HodgeError::NotSymplectic(_)) => ("hodge_metric", "NotSymplectic"),
            Error::Deformation(e) => ("deformations", match e {
                DeformationError::SingularParameter(_) => "SingularParameter",
                DeformationError::OutsideGuard { .. } => "OutsideGuard",
                DeformationError::AnticommutationFailure { .. } => "AnticommutationFailure",
                DeformationError::SingularAt(_) => "SingularAt",
                DeformationError::NotAntiInvariant { .. } => "NotAntiInvariant",
                DeformationError::NotHermitian => "NotHermitian",
                DeformationError::NotIwasawaShaped => "NotIwasawaShaped",
                DeformationError::Structure(_) => "ComplexStructure",
            }),
            Error::Parse(e) => ("cli_frontend", match e {
                ParseError::Syntax { .. } => "Syntax",
                ParseError::UnknownBasisName { .. } => "UnknownBasisName",
                ParseError::DimensionMismatch { .. } => "DimensionMismatch",
            }),
            Error::Usage(_) => ("cli_frontend", "Usage"),
            Error::Io(_) => ("cli_frontend", "Io"),
        };
        format!("{module}::{name}")
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
