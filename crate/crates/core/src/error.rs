use thiserror::Error;

use crate::doubling::ElementClass;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields: {0} vs {1}")]
    MixedFields(String, String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix does not have determinant 1 (det = {0})")]
    NotUnimodular(String),
    #[error("invalid projective point [0:0]")]
    ZeroPoint,
    #[error("not a surface-group representation: {0}")]
    NotARepresentation(String),
    #[error("element is not hyperbolic (classified as {0:?})")]
    NotHyperbolic(ElementClass),
    #[error("unsupported field extension: {0}")]
    UnsupportedExtension(String),
    #[error("kappa = {kappa} out of range for genus {genus} (need 1 <= kappa < genus)")]
    KappaOutOfRange { kappa: usize, genus: usize },
    #[error("operation needs a field with a real embedding, got {0}")]
    NonRationalField(String),
    #[error("lifted relator is not a certain integer translation (residue plus error bound {0} exceeds 0.1)")]
    PrecisionLoss(f64),
    #[error("defect constant must be positive, got {0}")]
    NonPositiveDefect(f64),
    #[error("word enumeration would exceed the cap of {cap} words")]
    CombinatorialBlowup { cap: u64 },
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

impl Error {
    /// Stable machine-readable name used in error records.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::MixedFields(..) => "MixedFields",
            Error::SingularMatrix => "SingularMatrix",
            Error::NotUnimodular(_) => "NotUnimodular",
            Error::ZeroPoint => "ZeroPoint",
            Error::NotARepresentation(_) => "NotARepresentation",
            Error::NotHyperbolic(_) => "NotHyperbolic",
            Error::UnsupportedExtension(_) => "UnsupportedExtension",
            Error::KappaOutOfRange { .. } => "KappaOutOfRange",
            Error::NonRationalField(_) => "NonRationalField",
            Error::PrecisionLoss(_) => "PrecisionLoss",
            Error::NonPositiveDefect(_) => "NonPositiveDefect",
            Error::CombinatorialBlowup { .. } => "CombinatorialBlowup",
            Error::Parse { .. } => "ParseError",
            Error::InvalidConfig(_) => "InvalidConfig",
        }
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }
}
