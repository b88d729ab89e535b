//! Structure functions, the normalization at homogeneity one, the
//! invariant tensor `P`, and the flatness verdict.

mod normalize;
mod structure;
mod tensor;
mod tensor_p;

pub use normalize::{solve_normalization, NormalizationCoefficients, GAUGE};
pub use structure::{structure_functions, StructureFunctions};
pub use tensor::Tensor;
pub use tensor_p::{assemble_p, trace_residual, CVariant, InvariantTensor};

use thiserror::Error;

use crate::exactfield::Scalar;
use crate::vfields::{CRFrame, VfError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error(transparent)]
    Field(#[from] VfError),
    #[error("holomorphic fields X_{} and X_{} do not commute", .i + 1, .j + 1)]
    NonCommuting { i: usize, j: usize },
    #[error("bracket {pair} is not in the span of the frame")]
    NotInSpan { pair: String },
    #[error("CR dimension {0} is not supported")]
    UnsupportedDimension(usize),
    #[error("contraction {contraction} at {index:?} is {value}, not 0")]
    TraceResidual {
        contraction: &'static str,
        index: Vec<usize>,
        value: String,
    },
    #[error("normalization coefficients are inconsistent with P")]
    CoefficientMismatch,
    #[error("the Nijenhuis tensor is required for n = 2")]
    MissingNijenhuis,
}

/// Structure functions, coefficients and `P` for a frame.
pub fn compute_invariant(
    frame: &CRFrame,
) -> Result<(StructureFunctions, InvariantTensor), InvariantError> {
    let sf = structure_functions(frame)?;
    let co = solve_normalization(&sf)?;
    let p = assemble_p(&sf, &co)?;
    Ok((sf, p))
}

#[derive(Clone, Debug)]
pub struct FlatnessReport {
    pub flat: bool,
    /// Nonzero `P^{i j̄}_{r s t̄}` as `([i, j, r, s, t], value)`.
    pub p_entries: Vec<(Vec<usize>, Scalar)>,
    /// Nonzero `N[i][j][k]` for n = 2.
    pub nijenhuis_entries: Vec<(Vec<usize>, Scalar)>,
}

/// Flat iff `P ≡ 0`, and for n = 2 also `N ≡ 0`.
pub fn flatness_verdict(
    p: &InvariantTensor,
    nijenhuis: Option<&Vec<Vec<Vec<Scalar>>>>,
) -> Result<FlatnessReport, InvariantError> {
    let p_entries: Vec<(Vec<usize>, Scalar)> =
        p.p.nonzero()
            .into_iter()
            .map(|(i, s)| (i, s.clone()))
            .collect();
    let mut nijenhuis_entries = Vec::new();
    if p.n == 2 {
        let nt = nijenhuis.ok_or(InvariantError::MissingNijenhuis)?;
        for (i, row) in nt.iter().enumerate() {
            for (j, col) in row.iter().enumerate() {
                for (k, v) in col.iter().enumerate() {
                    if !v.is_zero() {
                        nijenhuis_entries.push((vec![i, j, k], v.clone()));
                    }
                }
            }
        }
    }
    Ok(FlatnessReport {
        flat: p_entries.is_empty() && nijenhuis_entries.is_empty(),
        p_entries,
        nijenhuis_entries,
    })
}
