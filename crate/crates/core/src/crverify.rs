//! Checks that a frame defines a free CR distribution.

use thiserror::Error;

use crate::exactfield::{Scalar, GQ};
use crate::vfields::{expand_in_span, recombine, CRFrame, Slot, VectorField, VfError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CrError {
    #[error("the Nijenhuis tensor is only defined here for n = 2, got n = {0}")]
    WrongDimension(usize),
    #[error(transparent)]
    Field(#[from] VfError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    TotallyReal,
    Integrable,
}

/// A failed check at the pair `(i, j)`, with the part of `[X_i, X_j]` that
/// is not allowed. The residual is the whole bracket when it is not in the
/// span of the frame.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub check: Check,
    pub i: usize,
    pub j: usize,
    pub residual: VectorField,
}

#[derive(Clone, Debug)]
pub struct CRReport {
    pub nondegenerate: bool,
    pub totally_real: bool,
    pub integrable: bool,
    /// `N[i][j][k]`, the `X_{k̄}` component of `N(X_i, X_j)`; only for n = 2.
    pub nijenhuis: Option<Vec<Vec<Vec<Scalar>>>>,
    pub witnesses: Vec<Witness>,
}

impl CRReport {
    pub fn passed(&self) -> bool {
        self.nondegenerate && self.totally_real
    }
}

struct HoloBracket {
    i: usize,
    j: usize,
    bracket: VectorField,
    coeffs: Option<Vec<Scalar>>,
}

fn holo_brackets(frame: &CRFrame) -> Result<Vec<HoloBracket>, VfError> {
    let n = frame.n();
    let mut pairs = Vec::new();
    let mut brs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            pairs.push((i, j));
            brs.push(frame.holo(i).bracket(frame.holo(j))?);
        }
    }
    let coeffs = expand_in_span(frame.fields(), &brs)?;
    Ok(pairs
        .into_iter()
        .zip(brs)
        .zip(coeffs)
        .map(|(((i, j), bracket), coeffs)| HoloBracket {
            i,
            j,
            bracket,
            coeffs,
        })
        .collect())
}

/// The part of `Σ c_k X_k` supported on slots accepted by `keep`.
fn part(frame: &CRFrame, coeffs: &[Scalar], keep: impl Fn(Slot) -> bool) -> VectorField {
    let c: Vec<Scalar> = frame
        .slots()
        .zip(coeffs)
        .map(|(s, c)| if keep(s) { c.clone() } else { Scalar::zero() })
        .collect();
    recombine(frame.fields(), &c)
}

fn residuals(frame: &CRFrame, brs: &[HoloBracket], check: Check) -> Vec<Witness> {
    let allowed = |s: Slot| match check {
        Check::TotallyReal => !matches!(s, Slot::Levi(..)),
        Check::Integrable => matches!(s, Slot::Holo(_)),
    };
    let mut out = Vec::new();
    for b in brs {
        let residual = match &b.coeffs {
            None => b.bracket.clone(),
            Some(c) => part(frame, c, |s| !allowed(s)),
        };
        if !residual.is_zero() {
            out.push(Witness {
                check,
                i: b.i,
                j: b.j,
                residual,
            });
        }
    }
    out
}

/// `[X_i, X_j]` has no `X_{k l̄}` component for all `i < j`. The
/// antiholomorphic condition is the conjugate of this one.
pub fn check_totally_real(frame: &CRFrame) -> Result<(bool, Vec<Witness>), CrError> {
    let brs = holo_brackets(frame)?;
    let w = residuals(frame, &brs, Check::TotallyReal);
    Ok((w.is_empty(), w))
}

/// `[X_i, X_j]` lies in the span of the `X_k` for all `i < j`.
pub fn check_integrability(frame: &CRFrame) -> Result<(bool, Vec<Witness>), CrError> {
    let brs = holo_brackets(frame)?;
    let w = residuals(frame, &brs, Check::Integrable);
    Ok((w.is_empty(), w))
}

/// Components of `N(X, Y) = [X,Y] − [JX,JY] + J([JX,Y] + [X,JY])` on
/// `D^{1,0}`. With `J X_i = i X_i` this is `4·[X_i, X_j]^{0,1}`, so
/// `N[i][j][k] = 4·c_{k̄}`.
pub fn nijenhuis_tensor(frame: &CRFrame) -> Result<Vec<Vec<Vec<Scalar>>>, CrError> {
    let n = frame.n();
    if n != 2 {
        return Err(CrError::WrongDimension(n));
    }
    let brs = holo_brackets(frame)?;
    Ok(nijenhuis_from(frame, &brs))
}

fn nijenhuis_from(frame: &CRFrame, brs: &[HoloBracket]) -> Vec<Vec<Vec<Scalar>>> {
    let n = frame.n();
    let mut out = vec![vec![vec![Scalar::zero(); n]; n]; n];
    for b in brs {
        let Some(c) = &b.coeffs else { continue };
        for k in 0..n {
            let v = c[Slot::Anti(k).index(n)].scale(&GQ::from_int(4));
            out[b.j][b.i][k] = v.neg();
            out[b.i][b.j][k] = v;
        }
    }
    out
}

/// Run every check on a frame that already passed the rank certificate.
pub fn verify(frame: &CRFrame) -> Result<CRReport, CrError> {
    let brs = holo_brackets(frame)?;
    let mut witnesses = residuals(frame, &brs, Check::TotallyReal);
    let totally_real = witnesses.is_empty();
    let integ = residuals(frame, &brs, Check::Integrable);
    let integrable = integ.is_empty();
    witnesses.extend(integ);
    let nijenhuis = (frame.n() == 2).then(|| nijenhuis_from(frame, &brs));
    Ok(CRReport {
        nondegenerate: true,
        totally_real,
        integrable,
        nijenhuis,
        witnesses,
    })
}
