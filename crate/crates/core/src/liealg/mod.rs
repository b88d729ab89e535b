//! The graded Lie algebra `𝔰𝔲(n+1, n)`, Lie algebra cochains on `𝔭₊`, and
//! the linear algebra around the model.

mod algebra;
mod checks;
mod cochain;
mod lemma2;
mod matrix;
mod suite;

pub use algebra::{
    block_of, build_algebra, grade_of_entry, killing, levi_bracket, skew_hermitian_basis,
    BasisElement, GradedDecomposition, SuAlgebra, GRADES,
};
pub use checks::{
    center_check, check_grading, check_jacobi_all, check_jacobi_sampled, check_minus1_bracket,
    killing_pairing_rank, CenterCheck, Failure,
};
pub use cochain::{
    act_g0_on_1, act_g0_on_2, codifferential, is_block_diagonal, kappa11_project, p_cochain,
    p_plus_coords, p_plus_dim, p_plus_element, p_plus_position, Cochain1, Cochain2,
};
pub use lemma2::{lemma2_check, real_bracket_forms, Lemma2Record};
pub use matrix::Mat;
pub use suite::{
    p_index, random_block_diagonal, random_cochain, random_trace_free, small_gq, verify_algebra,
    AlgebraReport,
};
