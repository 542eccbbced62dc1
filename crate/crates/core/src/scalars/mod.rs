//! Exact scalars: monomials, cyclotomic integers, Laurent polynomials,
//! fractions and matrix rank.

pub mod cyclo;
pub mod field;
pub mod monomial;
pub mod poly;
pub mod rank;

pub use field::FieldElement;
pub use monomial::{discrete_log, qchar, qfactorial_nonzero, MonomialScalar};
pub use poly::LaurentPoly;
pub use rank::{matrix_rank, poly_rank, RankInfo};
