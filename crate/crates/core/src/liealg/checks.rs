//! Exhaustive identity checks on a built algebra.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::exactfield::{rank, solve_linear, GQ};

use super::algebra::{grade_of_entry, killing, levi_bracket, SuAlgebra};
use super::matrix::Mat;

/// A failed identity, by basis labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub check: &'static str,
    pub labels: Vec<String>,
}

fn pure_grade(alg: &SuAlgebra, m: &Mat, g: i32) -> bool {
    m.entries()
        .all(|(p, q, v)| v.is_zero() || grade_of_entry(alg.n, p, q) == g)
}

/// `[g_i, g_j] ⊆ g_{i+j}` (zero when `|i+j| > 2`) and the bracket stays in
/// the algebra.
pub fn check_grading(alg: &SuAlgebra) -> Vec<Failure> {
    let mut out = Vec::new();
    for x in &alg.basis {
        for y in &alg.basis {
            let b = alg.bracket(&x.m, &y.m);
            let g = x.grade + y.grade;
            let ok = alg.contains(&b)
                && if g.abs() > 2 {
                    b.is_zero()
                } else {
                    pure_grade(alg, &b, g)
                };
            if !ok {
                out.push(Failure {
                    check: "grading",
                    labels: vec![x.label.clone(), y.label.clone()],
                });
            }
        }
    }
    out
}

fn jacobi(alg: &SuAlgebra, x: &Mat, y: &Mat, z: &Mat) -> bool {
    let a = alg.bracket(x, &alg.bracket(y, z));
    let b = alg.bracket(y, &alg.bracket(z, x));
    let c = alg.bracket(z, &alg.bracket(x, y));
    a.add(&b).add(&c).is_zero()
}

/// Jacobi on all triples `i < j < k` of basis elements.
pub fn check_jacobi_all(alg: &SuAlgebra) -> Vec<Failure> {
    let d = alg.dim();
    let mut out = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            let bij = alg.bracket(&alg.basis[i].m, &alg.basis[j].m);
            for k in j + 1..d {
                let (x, y, z) = (&alg.basis[i].m, &alg.basis[j].m, &alg.basis[k].m);
                let sum = alg
                    .bracket(x, &alg.bracket(y, z))
                    .add(&alg.bracket(y, &alg.bracket(z, x)))
                    .add(&alg.bracket(z, &bij));
                if !sum.is_zero() {
                    out.push(Failure {
                        check: "jacobi",
                        labels: vec![
                            alg.basis[i].label.clone(),
                            alg.basis[j].label.clone(),
                            alg.basis[k].label.clone(),
                        ],
                    });
                }
            }
        }
    }
    out
}

/// Jacobi on `count` random triples of basis elements.
pub fn check_jacobi_sampled(alg: &SuAlgebra, count: usize, rng: &mut impl Rng) -> Vec<Failure> {
    let idx: Vec<usize> = (0..alg.dim()).collect();
    let mut out = Vec::new();
    for _ in 0..count {
        let t: Vec<&usize> = idx.choose_multiple(rng, 3).collect();
        let (x, y, z) = (&alg.basis[*t[0]], &alg.basis[*t[1]], &alg.basis[*t[2]]);
        if !jacobi(alg, &x.m, &y.m, &z.m) {
            out.push(Failure {
                check: "jacobi",
                labels: vec![x.label.clone(), y.label.clone(), z.label.clone()],
            });
        }
    }
    out
}

/// The `g₋₂` parameter of `[X, Y]` equals `X*Y − Y*X` on all pairs of
/// `g₋₁` basis elements.
pub fn check_minus1_bracket(alg: &SuAlgebra) -> Vec<Failure> {
    let mut out = Vec::new();
    for x in alg.basis_of_grade(-1) {
        for y in alg.basis_of_grade(-1) {
            let px = alg.g_minus1_param(&x.m);
            let py = alg.g_minus1_param(&y.m);
            let b = alg.bracket(&x.m, &y.m);
            if !pure_grade(alg, &b, -2) || alg.g_minus2_param(&b) != levi_bracket(&px, &py) {
                out.push(Failure {
                    check: "g-1 bracket",
                    labels: vec![x.label.clone(), y.label.clone()],
                });
            }
        }
    }
    out
}

/// Rank of the Killing pairing between `g₁` and `g₋₁`; nondegenerate when
/// it equals `2n`.
pub fn killing_pairing_rank(alg: &SuAlgebra) -> usize {
    let m: Vec<Vec<GQ>> = alg
        .basis_of_grade(1)
        .map(|u| {
            alg.basis_of_grade(-1)
                .map(|x| killing(alg, &u.m, &x.m))
                .collect()
        })
        .collect();
    rank(&m)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterCheck {
    /// Complex dimension of `{diag(aI, b, dI) : [M, g₋] = 0}`.
    pub kernel_dim: usize,
    /// The kernel is spanned by the identity.
    pub spanned_by_identity: bool,
    /// Trace of the spanning element; `exp` of it is `β·I` with
    /// `det = β^{2n+1}`, so unit determinant forces `β^{2n+1} = 1`.
    pub trace: GQ,
    /// Dimension of the kernel inside `𝔰𝔲(n+1, n)`.
    pub su_kernel_dim: usize,
}

impl CenterCheck {
    pub fn passed(&self, n: usize) -> bool {
        self.kernel_dim == 1
            && self.spanned_by_identity
            && self.trace == GQ::from_int(2 * n as i64 + 1)
            && self.su_kernel_dim == 0
    }
}

/// Block-scalar elements of `g₀ ⊗ ℂ` that act trivially on `g₋`.
pub fn center_check(alg: &SuAlgebra) -> CenterCheck {
    let n = alg.n;
    let sz = alg.size();
    let block_scalar = |c: [GQ; 3]| {
        let mut m = Mat::zeros(sz, sz);
        for k in 0..n {
            m.set(k, k, c[0].clone());
            m.set(n + 1 + k, n + 1 + k, c[2].clone());
        }
        m.set(n, n, c[1].clone());
        m
    };
    let units = [
        [GQ::one(), GQ::zero(), GQ::zero()],
        [GQ::zero(), GQ::one(), GQ::zero()],
        [GQ::zero(), GQ::zero(), GQ::one()],
    ];
    let minus: Vec<&Mat> = alg
        .basis
        .iter()
        .filter(|e| e.grade < 0)
        .map(|e| &e.m)
        .collect();
    // One equation per matrix entry of each commutator, linear in (a, b, d).
    let mut rows = Vec::new();
    let brackets: Vec<Vec<Mat>> = units
        .iter()
        .map(|u| {
            minus
                .iter()
                .map(|x| block_scalar(u.clone()).commutator(x))
                .collect()
        })
        .collect();
    for (xi, _) in minus.iter().enumerate() {
        for p in 0..sz {
            for q in 0..sz {
                rows.push(
                    (0..3)
                        .map(|c| brackets[c][xi].get(p, q).clone())
                        .collect::<Vec<_>>(),
                );
            }
        }
    }
    let sol = solve_linear(&rows, &vec![GQ::zero(); rows.len()]);
    let kernel_dim = sol.kernel.len();
    let (spanned_by_identity, trace) = match sol.kernel.as_slice() {
        [v] => {
            let m = block_scalar([v[0].clone(), v[1].clone(), v[2].clone()]);
            let m = m.scale(&v[0].inv().unwrap_or_else(GQ::one));
            (m == Mat::identity(sz), m.trace())
        }
        _ => (false, GQ::zero()),
    };
    let su_kernel_dim = if spanned_by_identity {
        usize::from(alg.contains(&Mat::identity(sz)))
    } else {
        kernel_dim
    };
    CenterCheck {
        kernel_dim,
        spanned_by_identity,
        trace,
        su_kernel_dim,
    }
}
