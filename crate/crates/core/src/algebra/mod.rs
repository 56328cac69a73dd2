//! Exact Laurent polynomials and rational functions with `(1 - m)` denominators.

mod gauss;
mod parse;
mod poly;
mod ratfunc;
mod var;

pub use gauss::{gaussian, gaussian_binomial};
pub use parse::{parse_den, parse_poly};
pub use poly::{Monomial, Poly, Subst};
pub use ratfunc::{rat_equal, RatFunc};
pub use var::{mask_elements, Kind, Var};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("variable {0} sent to zero appears with a negative exponent")]
    ZeroToNegativePower(String),
    #[error("variable {0} sent to a non-unit appears with a negative exponent")]
    NonIntegralImage(String),
    #[error("denominator factor vanishes")]
    ZeroDenominator,
    #[error("denominator factor {0} is not of the form 1 - monomial after substitution")]
    NonMonomialFactor(String),
    #[error("factor 1 - {0} has no positive degree in the grading variables")]
    NotExpandable(String),
    #[error("index set is not a subset of [{0}]")]
    NotASubset(usize),
    #[error("parse error: {0}")]
    Parse(String),
}
