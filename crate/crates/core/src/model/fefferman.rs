//! The embedding `𝔰𝔲(n+1, n) → 𝔰𝔲(n+1, n+1)` doubling the middle row and
//! column.
//!
//! The displayed map has entries `X/√2`. Conjugating the target by
//! `S = diag(I, 1/√2, 1/√2, I)` makes every entry Gaussian rational:
//!
//! ```text
//! [ A     X  Y ]       [ A      X  X  Y     ]
//! [ -Z*  2α -X* ]  ↦   [ -Z*/2  α  α  -X*/2 ]
//! [ T     Z -A* ]      [ -Z*/2  α  α  -X*/2 ]
//!                      [ T      Z  Z  -A*   ]
//! ```
//!
//! The image preserves the form `S⁻¹ 𝕁̃ S⁻¹`, which has the middle block
//! `[[0, 2], [2, 0]]`.

use crate::exactfield::{rank, GQ};
use crate::liealg::{Mat, SuAlgebra};

/// How to read `α` off the middle entry `m` of the source matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlphaReading {
    /// `m = 2α`, so `α = −i·Im tr A`.
    Half,
    /// `α = m`.
    Full,
}

#[derive(Clone, Debug)]
pub struct FeffermanEmbedding {
    pub n: usize,
    /// `S²`; `S` itself has irrational entries.
    pub scaling_squared: Mat,
    /// `S⁻¹ 𝕁̃ S⁻¹`, the form the images preserve.
    pub target_form: Mat,
    pub source_labels: Vec<String>,
    pub images: Vec<Mat>,
}

#[derive(Clone, Debug, Default)]
pub struct FeffermanReport {
    pub n: usize,
    pub pairs_checked: usize,
    pub homomorphism_failures: Vec<(String, String)>,
    pub relation_failures: Vec<String>,
    pub injective: bool,
    pub grade_compatible: bool,
    /// `dim 𝔭 − dim 𝔮` where `𝔮` is the preimage of the target parabolic.
    pub q_codimension: usize,
}

impl FeffermanReport {
    pub fn passed(&self) -> bool {
        self.homomorphism_failures.is_empty()
            && self.relation_failures.is_empty()
            && self.injective
            && self.grade_compatible
            && self.q_codimension == 1
    }
}

/// Maps source index `k` of `0..2n+1` to the target indices.
fn targets(n: usize, k: usize) -> Vec<usize> {
    if k < n {
        vec![k]
    } else if k == n {
        vec![n, n + 1]
    } else {
        vec![k + 1]
    }
}

pub fn fefferman_embed_with(n: usize, m: &Mat, reading: AlphaReading) -> Mat {
    let sz = 2 * n + 2;
    let mut out = Mat::zeros(sz, sz);
    let half = GQ::from_ratio(1, 2);
    for p in 0..=2 * n {
        for q in 0..=2 * n {
            let v = m.get(p, q);
            if v.is_zero() {
                continue;
            }
            let v = match (p == n, q == n) {
                (true, true) => match reading {
                    AlphaReading::Half => v * &half,
                    AlphaReading::Full => v.clone(),
                },
                (true, false) => v * &half,
                _ => v.clone(),
            };
            for &a in &targets(n, p) {
                for &b in &targets(n, q) {
                    out.set(a, b, v.clone());
                }
            }
        }
    }
    out
}

pub fn fefferman_embed(n: usize, m: &Mat) -> Mat {
    fefferman_embed_with(n, m, AlphaReading::Half)
}

pub fn target_form(n: usize) -> Mat {
    let sz = 2 * n + 2;
    let mut j = Mat::zeros(sz, sz);
    for k in 0..n {
        j.set(k, n + 2 + k, GQ::one());
        j.set(n + 2 + k, k, GQ::one());
    }
    j.set(n, n + 1, GQ::from_int(2));
    j.set(n + 1, n, GQ::from_int(2));
    j
}

pub fn scaling_squared(n: usize) -> Mat {
    let mut s = Mat::identity(2 * n + 2);
    s.set(n, n, GQ::from_ratio(1, 2));
    s.set(n + 1, n + 1, GQ::from_ratio(1, 2));
    s
}

pub fn build_embedding(alg: &SuAlgebra) -> FeffermanEmbedding {
    let n = alg.n;
    FeffermanEmbedding {
        n,
        scaling_squared: scaling_squared(n),
        target_form: target_form(n),
        source_labels: alg.basis.iter().map(|e| e.label.clone()).collect(),
        images: alg.basis.iter().map(|e| fefferman_embed(n, &e.m)).collect(),
    }
}

/// `M*𝕁̃' + 𝕁̃'M = 0` and `tr M = 0`.
pub fn in_target(n: usize, m: &Mat) -> bool {
    let j = target_form(n);
    m.adjoint().mul(&j).add(&j.mul(m)).is_zero() && m.trace().is_zero()
}

/// Grade of entry `(p, q)` in the `|1|`-grading with blocks `(n+1, n+1)`.
fn target_grade(n: usize, p: usize, q: usize) -> i32 {
    let b = |k: usize| i32::from(k > n);
    b(q) - b(p)
}

/// Allowed target grades for a source grade.
fn allowed(g: i32) -> &'static [i32] {
    match g {
        -2 => &[-1],
        -1 => &[-1, 0],
        0 => &[0],
        1 => &[0, 1],
        _ => &[1],
    }
}

pub fn fefferman_verify_with(alg: &SuAlgebra, reading: AlphaReading) -> FeffermanReport {
    let n = alg.n;
    let images: Vec<Mat> = alg
        .basis
        .iter()
        .map(|e| fefferman_embed_with(n, &e.m, reading))
        .collect();
    let mut report = FeffermanReport {
        n,
        ..Default::default()
    };
    for (e, im) in alg.basis.iter().zip(&images) {
        if !in_target(n, im) {
            report.relation_failures.push(e.label.clone());
        }
    }
    for (i, x) in alg.basis.iter().enumerate() {
        for (j, y) in alg.basis.iter().enumerate().skip(i + 1) {
            report.pairs_checked += 1;
            let lhs = images[i].commutator(&images[j]);
            let rhs = fefferman_embed_with(n, &alg.bracket(&x.m, &y.m), reading);
            if lhs != rhs {
                report
                    .homomorphism_failures
                    .push((x.label.clone(), y.label.clone()));
            }
        }
    }
    let rows: Vec<Vec<GQ>> = images
        .iter()
        .map(|m| {
            m.entries()
                .flat_map(|(_, _, v)| {
                    [
                        GQ::from_rational(v.re.clone()),
                        GQ::from_rational(v.im.clone()),
                    ]
                })
                .collect()
        })
        .collect();
    report.injective = rank(&rows) == alg.dim();
    // The doubled middle entry of g₀ is the one central direction that
    // leaves the target parabolic; it is accounted for by `q_codimension`.
    let middle = |p: usize| p == n || p == n + 1;
    report.grade_compatible = alg.basis.iter().zip(&images).all(|(e, im)| {
        im.entries().all(|(p, q, v)| {
            v.is_zero()
                || (e.grade == 0 && middle(p) && middle(q))
                || allowed(e.grade).contains(&target_grade(n, p, q))
        })
    });
    report.q_codimension = q_codimension(alg, reading);
    report
}

/// Codimension in `𝔭 = g₀ ⊕ g₁ ⊕ g₂` of the elements whose image has no
/// component in the target `g̃₋₁`.
fn q_codimension(alg: &SuAlgebra, reading: AlphaReading) -> usize {
    let n = alg.n;
    let p: Vec<Mat> = alg
        .basis
        .iter()
        .filter(|e| e.grade >= 0)
        .map(|e| fefferman_embed_with(n, &e.m, reading))
        .collect();
    // Real equations: the g̃₋₁ entries of Σ c_a image_a vanish.
    let mut rows = Vec::new();
    for a in n + 1..2 * n + 2 {
        for b in 0..=n {
            for part in 0..2 {
                rows.push(
                    p.iter()
                        .map(|m| {
                            let v = m.get(a, b);
                            GQ::from_rational(if part == 0 {
                                v.re.clone()
                            } else {
                                v.im.clone()
                            })
                        })
                        .collect::<Vec<_>>(),
                );
            }
        }
    }
    rank(&rows)
}

pub fn fefferman_verify(alg: &SuAlgebra) -> FeffermanReport {
    fefferman_verify_with(alg, AlphaReading::Half)
}
