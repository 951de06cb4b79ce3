use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("invalid automorphism: {0}")]
    InvalidAutomorphism(String),
    #[error("genus mismatch: expected {expected}, found {found}")]
    GenusMismatch { expected: usize, found: usize },
    #[error("cocycle does not satisfy the relator: {0}")]
    InvalidCocycle(String),
    #[error("character is trivial")]
    TrivialCharacter,
    #[error("character is trivial, the class is the cocycle itself")]
    TrivialCharacterNoReduction,
    #[error("character is not unitary")]
    NotUnitary,
    #[error("representation is not Euclidean: {0}")]
    NotEuclidean(String),
    #[error("mapping class {0} does not fix the character")]
    NotInStabilizer(String),
    #[error("every probe cocycle vanishes on the curve")]
    DegenerateProbe,
    #[error("configuration unavailable: {0}")]
    ConfigurationUnavailable(String),
    #[error("modulus image is not discrete and nontrivial")]
    ModulusNotDiscrete,
    #[error("linear image is not a finite cyclic group of order > 1")]
    NotFiniteOrder,
    #[error("character was given without logarithms")]
    MissingLogarithms,
    #[error("value not expressible in the symbol basis: {0}")]
    InexpressibleExactly(String),
    #[error("edge mismatch: {0}")]
    EdgeMismatch(String),
    #[error("invalid surface: {0}")]
    InvalidSurface(String),
    #[error("slit passes through a vertex or leaves its polygon")]
    SlitCrossesVertex,
    #[error("segments are not related by an affine map")]
    SegmentsNotAffinelyRelated,
    #[error("slits overlap")]
    SlitsOverlap,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("representation has non-positive volume")]
    NegativeVolume,
    #[error("certificate failure: {0}")]
    CertificateFailure(String),
    #[error("numeric failure: {0}")]
    Numeric(String),
}

impl Error {
    /// Process exit code for the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Unsupported(_) | Error::NegativeVolume => 2,
            Error::CertificateFailure(_) | Error::Numeric(_) => 3,
            _ => 1,
        }
    }

    /// Stable machine-readable name.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Invalid(_) => "Invalid",
            Error::InvalidAutomorphism(_) => "InvalidAutomorphism",
            Error::GenusMismatch { .. } => "GenusMismatch",
            Error::InvalidCocycle(_) => "InvalidCocycle",
            Error::TrivialCharacter => "TrivialCharacter",
            Error::TrivialCharacterNoReduction => "TrivialCharacterNoReduction",
            Error::NotUnitary => "NotUnitary",
            Error::NotEuclidean(_) => "NotEuclidean",
            Error::NotInStabilizer(_) => "NotInStabilizer",
            Error::DegenerateProbe => "DegenerateProbe",
            Error::ConfigurationUnavailable(_) => "ConfigurationUnavailable",
            Error::ModulusNotDiscrete => "ModulusNotDiscrete",
            Error::NotFiniteOrder => "NotFiniteOrder",
            Error::MissingLogarithms => "MissingLogarithms",
            Error::InexpressibleExactly(_) => "InexpressibleExactly",
            Error::EdgeMismatch(_) => "EdgeMismatch",
            Error::InvalidSurface(_) => "InvalidSurface",
            Error::SlitCrossesVertex => "SlitCrossesVertex",
            Error::SegmentsNotAffinelyRelated => "SegmentsNotAffinelyRelated",
            Error::SlitsOverlap => "SlitsOverlap",
            Error::Unsupported(_) => "Unsupported",
            Error::NegativeVolume => "NegativeVolume",
            Error::CertificateFailure(_) => "CertificateFailure",
            Error::Numeric(_) => "Numeric",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
