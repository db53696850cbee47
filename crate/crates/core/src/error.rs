use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library reports.
///
/// Variants split into two families: input that is malformed or inconsistent
/// ([`Error::is_validation`]) and well-formed input on which a mathematical
/// hypothesis fails.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("io error: {0}")]
    Io(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown corpus entry `{0}`")]
    UnknownCorpusEntry(String),
    #[error("bad polarization base: {0}")]
    BadBase(String),
    #[error("polarization value at base vertex {0} must be +1")]
    BadBaseValue(usize),
    #[error("triangle condition fails on 2-simplex {0}")]
    TriangleCondition(usize),
    #[error("not a morphism: invariant fails on edge {0}")]
    NotAMorphism(usize),
    #[error("not a simplicial map: {0}")]
    NotASimplicialMap(String),
    #[error("twist mismatch: {0}")]
    TwistMismatch(String),
    #[error("morphism does not extend: conflicting subcomplex components {0:?}")]
    NotExtendable(Vec<usize>),
    #[error("induced map is not a chain map in degree {0}")]
    NotAChainMap(usize),
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("more than one twist class has H_m ≅ ℤ (classes {0:?})")]
    NotUnique(Vec<usize>),
    #[error("map does not preserve the fundamental twist")]
    TwistNotPreserved,
    #[error("no fundamental class: {0}")]
    NoFundamentalClass(String),
    #[error("correction class is not constant on component {0}")]
    NotConstantOnComponent(usize),
    #[error("truncation depth {0} is too small (need at least 1)")]
    DepthTooSmall(usize),
    #[error("degree {degree} is outside the valid range of a depth-{depth} bar complex")]
    OutOfValidRange { degree: usize, depth: usize },
    #[error("not a group homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("invalid group table: {0}")]
    InvalidGroup(String),
    #[error("induced map on H_{0} is not ±identity")]
    NotScalar(usize),
    #[error("H_{0} vanishes; the conjugation sign is vacuous")]
    VacuousSign(usize),
    #[error("integer overflow in exact arithmetic")]
    Overflow,
}

impl Error {
    /// True for errors caused by malformed or inconsistent input.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::InvalidComplex(_)
                | Error::InvalidInput(_)
                | Error::Io(_)
                | Error::Parse(_)
                | Error::UnknownCorpusEntry(_)
                | Error::BadBase(_)
                | Error::BadBaseValue(_)
                | Error::TriangleCondition(_)
                | Error::NotAMorphism(_)
                | Error::NotASimplicialMap(_)
                | Error::InvalidGroup(_)
                | Error::NotAHomomorphism(_)
                | Error::DepthTooSmall(_)
                | Error::OutOfValidRange { .. }
                | Error::DegreeMismatch(_)
        )
    }

    /// Stable machine-readable name, used in CLI error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidComplex(_) => "InvalidComplex",
            Error::InvalidInput(_) => "InvalidInput",
            Error::Io(_) => "Io",
            Error::Parse(_) => "Parse",
            Error::UnknownCorpusEntry(_) => "UnknownCorpusEntry",
            Error::BadBase(_) => "BadBase",
            Error::BadBaseValue(_) => "BadBaseValue",
            Error::TriangleCondition(_) => "TriangleCondition",
            Error::NotAMorphism(_) => "NotAMorphism",
            Error::NotASimplicialMap(_) => "NotASimplicialMap",
            Error::TwistMismatch(_) => "TwistMismatch",
            Error::NotExtendable(_) => "NotExtendable",
            Error::NotAChainMap(_) => "NotAChainMap",
            Error::DegreeMismatch(_) => "DegreeMismatch",
            Error::NotUnique(_) => "NotUnique",
            Error::TwistNotPreserved => "TwistNotPreserved",
            Error::NoFundamentalClass(_) => "NoFundamentalClass",
            Error::NotConstantOnComponent(_) => "NotConstantOnComponent",
            Error::DepthTooSmall(_) => "DepthTooSmall",
            Error::OutOfValidRange { .. } => "OutOfValidRange",
            Error::NotAHomomorphism(_) => "NotAHomomorphism",
            Error::InvalidGroup(_) => "InvalidGroup",
            Error::NotScalar(_) => "NotScalar",
            Error::VacuousSign(_) => "VacuousSign",
            Error::Overflow => "Overflow",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Error {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Error {
        Error::Parse(e.to_string())
    }
}
