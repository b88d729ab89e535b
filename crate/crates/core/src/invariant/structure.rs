use std::sync::Arc;

use crate::exactfield::{Chart, GQ};
use crate::vfields::{expand_many_in_frame, CRFrame, Slot, VectorField};

use super::{InvariantError, Tensor};

/// Coefficients of the structure equations of the coframe
/// `{θ^i, θ^{ī}, θ^{[j k̄]}}` dual to a frame, with
/// `dθ^a(X_b, X_c) = −θ^a([X_b, X_c])`.
///
/// Index layout, with `k̄` written as `k`:
///
/// | field       | coefficient              | of                          |
/// |-------------|--------------------------|-----------------------------|
/// | `r_hol`     | `f^r_{i j k̄}`  `[r,i,j,k]` | `θ^i ∧ θ^{[j k̄]}` in `dθ^r` |
/// | `r_anti`    | `f^r_{ī j k̄}`  `[r,i,j,k]` | `θ^{ī} ∧ θ^{[j k̄]}`         |
/// | `r_levi`    | `f^r_{i j̄ k l̄}` `[r,i,j,k,l]` | `θ^{[i j̄]} ∧ θ^{[k l̄]}`   |
/// | `rs_hol`    | `f^{r s̄}_{i j k̄}` `[r,s,i,j,k]` | in `dθ^{[r s̄]}`       |
/// | `rs_anti`   | `f^{r s̄}_{ī j k̄}` `[r,s,i,j,k]` |                        |
/// | `rs_levi`   | `f^{r s̄}_{i j̄ k l̄}` `[r,s,i,j,k,l]` |                    |
///
/// The Levi-Levi families are antisymmetric in the two pairs and sum over
/// all ordered pairs, so each equals half of `dθ(X_{[i j̄]}, X_{[k l̄]})`.
#[derive(Clone, Debug)]
pub struct StructureFunctions {
    pub n: usize,
    pub chart: Arc<Chart>,
    pub r_hol: Tensor,
    pub r_anti: Tensor,
    pub r_levi: Tensor,
    pub rs_hol: Tensor,
    pub rs_anti: Tensor,
    pub rs_levi: Tensor,
}

impl StructureFunctions {
    pub fn zero(n: usize, chart: Arc<Chart>) -> Self {
        StructureFunctions {
            n,
            chart,
            r_hol: Tensor::zeros(n, 4),
            r_anti: Tensor::zeros(n, 4),
            r_levi: Tensor::zeros(n, 5),
            rs_hol: Tensor::zeros(n, 5),
            rs_anti: Tensor::zeros(n, 5),
            rs_levi: Tensor::zeros(n, 6),
        }
    }

    /// The families in a fixed order with their names.
    pub fn families(&self) -> [(&'static str, &Tensor); 6] {
        [
            ("f^r_{ijk}", &self.r_hol),
            ("f^r_{ibjk}", &self.r_anti),
            ("f^r_{ijkl}", &self.r_levi),
            ("f^{rs}_{ijk}", &self.rs_hol),
            ("f^{rs}_{ibjk}", &self.rs_anti),
            ("f^{rs}_{ijkl}", &self.rs_levi),
        ]
    }

    pub fn is_zero(&self) -> bool {
        self.families().iter().all(|(_, t)| t.is_zero())
    }
}

/// Read the structure functions off the brackets of the frame fields.
///
/// Requires commuting holomorphic fields; other integrable frames must be
/// changed to a commuting one first.
pub fn structure_functions(frame: &CRFrame) -> Result<StructureFunctions, InvariantError> {
    let n = frame.n();
    for i in 0..n {
        for j in i + 1..n {
            let b = frame.holo(i).bracket(frame.holo(j))?;
            if !b.is_zero() {
                return Err(InvariantError::NonCommuting { i, j });
            }
        }
    }
    let mut pairs: Vec<(Slot, Slot)> = Vec::new();
    for j in 0..n {
        for k in 0..n {
            for i in 0..n {
                pairs.push((Slot::Holo(i), Slot::Levi(j, k)));
                pairs.push((Slot::Anti(i), Slot::Levi(j, k)));
            }
        }
    }
    let levi: Vec<Slot> = (0..n * n).map(|a| Slot::Levi(a / n, a % n)).collect();
    for (a, &p) in levi.iter().enumerate() {
        for &q in &levi[a + 1..] {
            pairs.push((p, q));
        }
    }
    let brackets: Vec<VectorField> = pairs
        .iter()
        .map(|&(p, q)| frame.field(p).bracket(frame.field(q)))
        .collect::<Result<_, _>>()?;
    let coeffs = expand_many_in_frame(frame, &brackets)?;

    let mut sf = StructureFunctions::zero(n, frame.chart().clone());
    let half = GQ::from_ratio(1, 2);
    for ((p, q), c) in pairs.into_iter().zip(coeffs) {
        let Some(c) = c else {
            return Err(InvariantError::NotInSpan {
                pair: format!("[X_{}, X_{}]", p.label(), q.label()),
            });
        };
        // dθ^a(X_p, X_q) = −c_a
        let d = |slot: Slot| c[slot.index(n)].neg();
        match (p, q) {
            (Slot::Holo(i), Slot::Levi(j, k)) | (Slot::Anti(i), Slot::Levi(j, k)) => {
                let anti = matches!(p, Slot::Anti(_));
                let (r_t, rs_t) = if anti {
                    (&mut sf.r_anti, &mut sf.rs_anti)
                } else {
                    (&mut sf.r_hol, &mut sf.rs_hol)
                };
                for r in 0..n {
                    r_t.set(&[r, i, j, k], d(Slot::Holo(r)));
                    for s in 0..n {
                        rs_t.set(&[r, s, i, j, k], d(Slot::Levi(r, s)));
                    }
                }
            }
            (Slot::Levi(i, j), Slot::Levi(k, l)) => {
                for r in 0..n {
                    let v = d(Slot::Holo(r)).scale(&half);
                    sf.r_levi.set(&[r, k, l, i, j], v.neg());
                    sf.r_levi.set(&[r, i, j, k, l], v);
                    for s in 0..n {
                        let v = d(Slot::Levi(r, s)).scale(&half);
                        sf.rs_levi.set(&[r, s, k, l, i, j], v.neg());
                        sf.rs_levi.set(&[r, s, i, j, k, l], v);
                    }
                }
            }
            _ => unreachable!("only the pairs built above are expanded"),
        }
    }
    Ok(sf)
}
