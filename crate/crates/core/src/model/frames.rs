use std::sync::Arc;

use crate::exactfield::{Chart, Scalar};
use crate::vfields::VectorField;

use super::ModelError;

/// The flat frame on the quadric,
/// `Z_j = ∂/∂z_j − Σ_{p≥j} z̄_p ∂/∂w_{jp}`, over the standard chart.
pub fn flat_frame(n: usize) -> Result<Vec<VectorField>, ModelError> {
    if n < 2 {
        return Err(ModelError::UnsupportedDimension { n, min: 2 });
    }
    let chart = Arc::new(Chart::standard(n));
    Ok((0..n).map(|j| flat_field(&chart, j)).collect())
}

fn flat_field(chart: &Arc<Chart>, j: usize) -> VectorField {
    let mut comps = vec![(chart.z(j), Scalar::one())];
    for p in j..chart.n() {
        comps.push((chart.w(j, p).0, Scalar::var(chart.zb(p)).neg()));
    }
    VectorField::from_components(chart, comps)
}

/// The flat frame with `Z_1` replaced by `Z_1 + w̄_{12} ∂/∂w_{34}`.
pub fn deformed_frame(n: usize) -> Result<Vec<VectorField>, ModelError> {
    if n < 4 {
        return Err(ModelError::UnsupportedDimension { n, min: 4 });
    }
    let mut fields = flat_frame(n)?;
    let chart = fields[0].chart().clone();
    let extra =
        VectorField::from_components(&chart, [(chart.w(2, 3).0, Scalar::var(chart.wb(0, 1).0))]);
    fields[0] = fields[0].add(&extra).expect("same chart");
    Ok(fields)
}
