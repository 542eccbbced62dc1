//! Root systems, Weyl groups, finite-dimensionality tests and typical
//! characters for generalized quantum groups of diagonal type, together with
//! a brute-force pairing/Gram-rank oracle that checks the characters.

pub mod catalog;
pub mod characters;
pub mod config;
pub mod highestweight;
pub mod lattice;
pub mod oracle;
pub mod rootsystem;
pub mod sampling;
pub mod scalars;
pub mod weyl;

pub use catalog::{build_catalog, CatalogConfig, Family};
pub use highestweight::WeightCharacter;
pub use lattice::{Bicharacter, Weight};
pub use rootsystem::{compute_roots, RootSystemData};
pub use scalars::{FieldElement, LaurentPoly, MonomialScalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("infinite type: {0}")]
    InfiniteType(String),
    #[error("{what} cap of {cap} exceeded")]
    CapExceeded { what: &'static str, cap: usize },
    #[error("no integer k with {base}^k = {value} for root {root}")]
    NoDiscreteLog { root: String, base: MonomialScalar, value: MonomialScalar },
    #[error("lambda_beta = {value} is not a power of q_beta = {base} for beta = {root}")]
    NoIntegerExponent { root: String, base: MonomialScalar, value: MonomialScalar },
    #[error("discrete log with base 1 is ambiguous")]
    AmbiguousLog,
    #[error("functional vanishes on real root {0}")]
    DegenerateFunctional(String),
    #[error("weight character is not typical: {0}")]
    NotTypical(String),
    #[error("weight character is not finite-dimensional")]
    NotFiniteDim,
    #[error("not a catalog object: {0}")]
    NotCatalogObject(String),
    #[error("duplicate orbit point {0}")]
    DuplicateOrbitPoint(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
