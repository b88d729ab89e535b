//! Exact symbolic computations for free CR distributions: frames of complex
//! vector fields, the structure functions of the adapted coframe, the
//! normalization at homogeneity one, the invariant tensor `P`, and the
//! homogeneous model `su(n+1, n)` with its grading.
//!
//! Everything is computed over the Gaussian rationals and rational
//! functions over them. There is no floating point anywhere.

pub mod crverify;
pub mod exactfield;
pub mod invariant;
pub mod liealg;
pub mod model;
pub mod vfields;
