//! Concrete models: the flat quadric and its deformation, the group action
//! on the quadric, adapted bases, and the Fefferman embedding.

mod adapted;
mod fefferman;
mod frames;
mod quadric;

pub use crate::liealg::kappa11_project;
pub use adapted::{
    adapted_basis, exp_nilpotent, h, hermitian_form, random_isotropic_plane, AdaptedBasis,
    IsotropicPlane,
};
pub use fefferman::{
    build_embedding, fefferman_embed, fefferman_embed_with, fefferman_verify,
    fefferman_verify_with, in_target, scaling_squared, target_form, AlphaReading,
    FeffermanEmbedding, FeffermanReport,
};
pub use frames::{deformed_frame, flat_frame};
pub use quadric::{quadric_action_check, GroupPart, QuadricCheck};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("CR dimension {n} is not supported here (need n >= {min})")]
    UnsupportedDimension { n: usize, min: usize },
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
}
