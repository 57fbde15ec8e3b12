use thiserror::Error;

/// Errors raised across the library. Every arithmetic and structural
/// precondition failure maps to one of these variants.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("no root of unity of order {n} in F_{p} (n does not divide p-1)")]
    NoSuchRoot { n: u64, p: u64 },
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("matrix shapes do not conform: {0}")]
    ShapeMismatch(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("structure fails validation: {0}")]
    InvalidStructure(String),
    #[error("group is not abelian")]
    NotAbelian,
    #[error("field characteristic divides the group order {0}")]
    BadCharacteristic(u64),
    #[error("input is not a Hopf algebra")]
    NotHopf,
    #[error("index set is not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("lambda candidate rejected: {0}")]
    InvalidLambda(String),
    #[error("z candidate rejected: {0}")]
    InvalidZ(String),
    #[error("pair is not a weak matched pair: {0}")]
    NotMatched(String),
    #[error("matched pair is not compatible: {0}")]
    NotCompatible(String),
    #[error("precondition unmet: {0}")]
    PreconditionUnmet(String),
    #[error("no antipode exists: {0}")]
    NoAntipode(String),
    #[error("antipode system underdetermined (solution space dimension {0})")]
    Underdetermined(usize),
    #[error("map does not factor through the projection: {0}")]
    WellDefinednessFailure(String),
    #[error("antipode axiom fails on the smash subspace: {0}")]
    AntipodeAxiomFailure(String),
    #[error("vector is not an integral")]
    NotAnIntegral,
    #[error("integral condition fails at basis index {0}")]
    ConditionFails(usize),
    #[error("parse error at {path}: {msg}")]
    Parse { path: String, msg: String },
    #[error("unknown example `{0}`")]
    UnknownExample(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
}

pub type Result<T> = std::result::Result<T, Error>;
