//! Exact arithmetic over the Gaussian rationals and rational functions in
//! the coordinate symbols of a chart.

pub mod chart;
pub mod gaussian;
pub mod linalg;
pub mod parse;
pub mod poly;
pub mod scalar;

pub use chart::{Chart, StdSymbol};
pub use gaussian::{GaussianRational, GQ};
pub use linalg::{rank, solve_linear, solve_linear_many, Field, LinearSolution, Matrix};
pub use parse::{parse_scalar, ParseError};
pub use poly::{Monomial, Poly};
pub use scalar::Scalar;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("invalid chart: {0}")]
    BadChart(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}
