//! Complex structures on `g₋₁` compatible with the bracket.
//!
//! The bracket `Λ²g₋₁ → g₋₂` is a family of `n²` real skew forms. We look
//! for endomorphisms `Ã` with `Ã·ω` symmetric for every form `ω` in that
//! family, first in complexified coordinates where `J = diag(iI, −iI)`,
//! then among the real endomorphisms of `ℝ²ⁿ`.

use num_rational::BigRational;

use crate::exactfield::{solve_linear, GQ};

use super::algebra::{build_algebra, levi_bracket};
use super::matrix::Mat;

#[derive(Clone, Debug)]
pub struct Lemma2Record {
    pub n: usize,
    /// The `n²` forms, Gram matrices in complexified coordinates.
    pub forms: Vec<Mat>,
    pub complex_kernel_dim: usize,
    /// Real dimension of the solution space among complex matrices.
    pub real_dim: usize,
    /// `E = diag(I, −I)`, the solution with `λ = 1`.
    pub e: Mat,
    /// `J = diag(iI, −iI)`.
    pub j: Mat,
    /// The kernel is spanned over ℝ by `E` and `J`.
    pub basis_is_e_j: bool,
    /// Roots of `λ² = −1` where `(λE)² = −I`.
    pub lambdas: Vec<GQ>,
    /// `λE` for each root; these are `±J`.
    pub complex_structures: Vec<Mat>,
    /// Dimension of the solution space among real `2n × 2n` matrices.
    pub real_endomorphism_dim: usize,
}

impl Lemma2Record {
    pub fn passed(&self) -> bool {
        let minus_j = self.j.neg();
        self.complex_kernel_dim == 1
            && self.real_dim == 2
            && self.basis_is_e_j
            && self.complex_structures.len() == 2
            && self.complex_structures.contains(&self.j)
            && self.complex_structures.contains(&minus_j)
    }
}

/// Real coordinates of a skew-Hermitian matrix: `Im T_kk`, then `Re T_kl`,
/// `Im T_kl` for `k < l`.
fn skew_coords(t: &Mat) -> Vec<BigRational> {
    let n = t.rows();
    let mut out = Vec::with_capacity(n * n);
    for k in 0..n {
        out.push(t.get(k, k).im.clone());
    }
    for k in 0..n {
        for l in k + 1..n {
            out.push(t.get(k, l).re.clone());
            out.push(t.get(k, l).im.clone());
        }
    }
    out
}

/// Gram matrices of the bracket forms on the real basis `e_1, …, e_n,
/// i·e_1, …, i·e_n` of `g₋₁`.
pub fn real_bracket_forms(n: usize) -> Vec<Mat> {
    let basis: Vec<Vec<GQ>> = (0..2 * n)
        .map(|a| {
            let mut v = vec![GQ::zero(); n];
            v[a % n] = if a < n { GQ::one() } else { GQ::i() };
            v
        })
        .collect();
    let mut forms = vec![Mat::zeros(2 * n, 2 * n); n * n];
    for a in 0..2 * n {
        for b in 0..2 * n {
            let c = skew_coords(&levi_bracket(&basis[a], &basis[b]));
            for (k, x) in c.into_iter().enumerate() {
                forms[k].set(a, b, GQ::from_rational(x));
            }
        }
    }
    forms
}

/// Columns are the `(1,0)` vectors `½(e_k − i·(ie_k))` and their conjugates.
fn complexification(n: usize) -> Mat {
    let half = GQ::from_ratio(1, 2);
    let ihalf = GQ::from_parts(0, 1, 1, 2);
    let mut s = Mat::zeros(2 * n, 2 * n);
    for k in 0..n {
        s.set(k, k, half.clone());
        s.set(n + k, k, -&ihalf);
        s.set(k, n + k, half.clone());
        s.set(n + k, n + k, ihalf.clone());
    }
    s
}

/// Kernel of `A ↦ (A·ω − (A·ω)ᵀ)_{ω ∈ forms}` over `d × d` matrices `A`.
fn symmetric_product_kernel(forms: &[Mat]) -> Vec<Mat> {
    let d = forms[0].rows();
    let mut rows = Vec::new();
    for w in forms {
        for p in 0..d {
            for q in p + 1..d {
                // (Aω)_{pq} − (Aω)_{qp} = Σ_k A_{pk} ω_{kq} − A_{qk} ω_{kp}
                let mut row = vec![GQ::zero(); d * d];
                for k in 0..d {
                    row[p * d + k] = &row[p * d + k] + w.get(k, q);
                    row[q * d + k] = &row[q * d + k] - w.get(k, p);
                }
                rows.push(row);
            }
        }
    }
    let rhs = vec![GQ::zero(); rows.len()];
    solve_linear(&rows, &rhs)
        .kernel
        .into_iter()
        .map(|v| Mat::from_rows(v.chunks(d).map(<[GQ]>::to_vec).collect()))
        .collect()
}

/// Solutions of `λ² = c` in the Gaussian rationals.
fn gaussian_sqrt(c: &GQ) -> Vec<GQ> {
    // Only the case the check needs: c = −1 or a rational square.
    let candidates = [GQ::i(), -GQ::i(), GQ::one(), -GQ::one()];
    candidates.into_iter().filter(|l| &(l * l) == c).collect()
}

pub fn lemma2_check(n: usize) -> Lemma2Record {
    assert!(n >= 2);
    let alg = build_algebra(n);
    debug_assert_eq!(alg.n, n);
    let real_forms = real_bracket_forms(n);
    let s = complexification(n);
    let forms: Vec<Mat> = real_forms
        .iter()
        .map(|w| s.transpose().mul(w).mul(&s))
        .collect();

    let kernel = symmetric_product_kernel(&forms);
    let mut e = Mat::zeros(2 * n, 2 * n);
    let mut j = Mat::zeros(2 * n, 2 * n);
    for k in 0..n {
        e.set(k, k, GQ::one());
        e.set(n + k, n + k, -GQ::one());
        j.set(k, k, GQ::i());
        j.set(n + k, n + k, -GQ::i());
    }
    let (basis_is_e_j, lambdas, complex_structures) = match kernel.as_slice() {
        [k] => {
            let lead = k.get(0, 0).clone();
            let k = if lead.is_zero() {
                k.clone()
            } else {
                k.scale(&lead.inv().unwrap())
            };
            let is_e = k == e && e.scale(&GQ::i()) == j;
            let sq = k.mul(&k);
            let lambdas = if sq == Mat::identity(2 * n) {
                gaussian_sqrt(&-GQ::one())
            } else {
                Vec::new()
            };
            let structures = lambdas.iter().map(|l| k.scale(l)).collect();
            (is_e, lambdas, structures)
        }
        _ => (false, Vec::new(), Vec::new()),
    };

    let real_endomorphism_dim = symmetric_product_kernel(&real_forms).len();

    Lemma2Record {
        n,
        forms,
        complex_kernel_dim: kernel.len(),
        real_dim: 2 * kernel.len(),
        e,
        j,
        basis_is_e_j,
        lambdas,
        complex_structures,
        real_endomorphism_dim,
    }
}
