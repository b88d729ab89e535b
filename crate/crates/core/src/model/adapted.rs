//! Pseudo-unitary bases adapted to an isotropic `n`-plane in `ℂ^{2n+1}`.

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::Rng;

use crate::exactfield::{rank, solve_linear, GQ};
use crate::liealg::{build_algebra, Mat};

use super::ModelError;

/// `𝕁`: the identity blocks swap the outer `n`-blocks, the middle is 1.
pub fn hermitian_form(n: usize) -> Mat {
    build_algebra(n).jform
}

/// `h(u, v) = u*𝕁v`.
pub fn h(n: usize, u: &[GQ], v: &[GQ]) -> GQ {
    let j = hermitian_form(n);
    let mut acc = GQ::zero();
    for p in 0..u.len() {
        for q in 0..v.len() {
            let c = j.get(p, q);
            if !c.is_zero() {
                acc += &(&(&u[p].conj() * c) * &v[q]);
            }
        }
    }
    acc
}

/// An `n`-plane given by column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsotropicPlane {
    pub n: usize,
    pub basis: Vec<Vec<GQ>>,
}

impl IsotropicPlane {
    /// Checks isotropy and independence.
    pub fn new(n: usize, basis: Vec<Vec<GQ>>) -> Result<Self, ModelError> {
        if basis.len() != n || basis.iter().any(|v| v.len() != 2 * n + 1) {
            return Err(ModelError::DegenerateInput(format!(
                "expected {n} vectors of length {}",
                2 * n + 1
            )));
        }
        if rank(&basis) != n {
            return Err(ModelError::DegenerateInput(
                "basis vectors are dependent".into(),
            ));
        }
        for (i, u) in basis.iter().enumerate() {
            for v in &basis[i..] {
                if !h(n, u, v).is_zero() {
                    return Err(ModelError::DegenerateInput("plane is not isotropic".into()));
                }
            }
        }
        Ok(IsotropicPlane { n, basis })
    }

    /// `span(e_1, …, e_n)`.
    pub fn standard(n: usize) -> Self {
        let basis = (0..n)
            .map(|i| {
                let mut v = vec![GQ::zero(); 2 * n + 1];
                v[i] = GQ::one();
                v
            })
            .collect();
        IsotropicPlane { n, basis }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdaptedBasis {
    pub v: Vec<Vec<GQ>>,
    pub w: Vec<Vec<GQ>>,
    /// Orthogonal to every `v_i` and `w_i`; not normalized.
    pub w_last: Vec<GQ>,
    /// `h(w_last, w_last) > 0`.
    pub norm: BigRational,
}

impl AdaptedBasis {
    /// Columns `v_1..v_n, w_{n+1}, w_1..w_n`.
    pub fn matrix(&self) -> Mat {
        let n = self.v.len();
        let cols: Vec<&Vec<GQ>> = self
            .v
            .iter()
            .chain(std::iter::once(&self.w_last))
            .chain(&self.w)
            .collect();
        let mut m = Mat::zeros(2 * n + 1, 2 * n + 1);
        for (c, col) in cols.iter().enumerate() {
            for (r, x) in col.iter().enumerate() {
                m.set(r, c, x.clone());
            }
        }
        m
    }

    /// Every Gram condition, as `B*𝕁B = 𝕁` with the middle entry replaced
    /// by the norm.
    pub fn gram_holds(&self) -> bool {
        let n = self.v.len();
        let b = self.matrix();
        let j = hermitian_form(n);
        let mut want = j.clone();
        want.set(n, n, GQ::from_rational(self.norm.clone()));
        b.adjoint().mul(&j).mul(&b) == want && self.norm.is_positive()
    }
}

fn combine(n: usize, coeffs: &[GQ], vecs: &[Vec<GQ>]) -> Vec<GQ> {
    let mut out = vec![GQ::zero(); 2 * n + 1];
    for (c, v) in coeffs.iter().zip(vecs) {
        for (o, x) in out.iter_mut().zip(v) {
            *o += &(c * x);
        }
    }
    out
}

/// The rows `v_i*𝕁`.
fn dual_rows(n: usize, vs: &[Vec<GQ>]) -> Vec<Vec<GQ>> {
    let j = hermitian_form(n);
    vs.iter()
        .map(|v| {
            (0..2 * n + 1)
                .map(|q| {
                    (0..2 * n + 1).fold(GQ::zero(), |acc, p| &acc + &(&v[p].conj() * j.get(p, q)))
                })
                .collect()
        })
        .collect()
}

/// Solve `h(v_i, w_j) = δ_ij`, correct `w_j ↦ w_j − ½ Σ_i v_i h(w_i, w_j)`
/// so the `w_j` become isotropic, and complete with the orthogonal
/// complement.
pub fn adapted_basis(plane: &IsotropicPlane) -> Result<AdaptedBasis, ModelError> {
    let n = plane.n;
    let v = plane.basis.clone();
    let rows = dual_rows(n, &v);
    if rank(&rows) != n {
        return Err(ModelError::DegenerateInput("v*J has rank below n".into()));
    }
    let mut w = Vec::with_capacity(n);
    for j in 0..n {
        let mut e = vec![GQ::zero(); n];
        e[j] = GQ::one();
        let sol = solve_linear(&rows, &e);
        w.push(sol.particular.ok_or_else(|| {
            ModelError::DegenerateInput("cannot solve h(v_i, w_j) = δ_ij".into())
        })?);
    }
    let half = GQ::from_ratio(1, 2);
    let a: Vec<Vec<GQ>> = (0..n)
        .map(|i| (0..n).map(|j| h(n, &w[i], &w[j])).collect())
        .collect();
    let w: Vec<Vec<GQ>> = (0..n)
        .map(|j| {
            let coeffs: Vec<GQ> = (0..n).map(|i| -&(&half * &a[i][j])).collect();
            let corr = combine(n, &coeffs, &v);
            w[j].iter().zip(&corr).map(|(x, c)| x + c).collect()
        })
        .collect();

    let mut all = v.clone();
    all.extend(w.iter().cloned());
    let sol = solve_linear(&dual_rows(n, &all), &vec![GQ::zero(); 2 * n]);
    let [w_last] = sol.kernel.as_slice() else {
        return Err(ModelError::DegenerateInput(
            "span(v, w) is degenerate".into(),
        ));
    };
    let norm = h(n, w_last, w_last);
    if !norm.im.is_zero() || !norm.re.is_positive() {
        return Err(ModelError::DegenerateInput(
            "complement is not positive".into(),
        ));
    }
    Ok(AdaptedBasis {
        v,
        w,
        w_last: w_last.clone(),
        norm: norm.re,
    })
}

/// `exp` of a nilpotent matrix.
pub fn exp_nilpotent(x: &Mat) -> Mat {
    let sz = x.rows();
    let mut acc = Mat::identity(sz);
    let mut term = Mat::identity(sz);
    for k in 1..=sz {
        term = term.mul(x).scale(&GQ::from_ratio(1, k as i64));
        if term.is_zero() {
            break;
        }
        acc = acc.add(&term);
    }
    acc
}

fn small(rng: &mut impl Rng) -> GQ {
    GQ::from_parts(
        rng.gen_range(-4..=4),
        rng.gen_range(1..=3),
        rng.gen_range(-4..=4),
        rng.gen_range(1..=3),
    )
}

/// `exp(X)` applied to the standard plane for a random `X ∈ g₋`, then a
/// random change of basis inside the plane.
pub fn random_isotropic_plane(n: usize, rng: &mut impl Rng) -> IsotropicPlane {
    let alg = build_algebra(n);
    let x: Vec<GQ> = (0..n).map(|_| small(rng)).collect();
    let mut t = Mat::zeros(n, n);
    for k in 0..n {
        t.set(k, k, GQ::new(BigRational::zero(), small(rng).im));
        for l in k + 1..n {
            let c = small(rng);
            t.set(l, k, -c.conj());
            t.set(k, l, c);
        }
    }
    let g = exp_nilpotent(&alg.from_g_minus1(&x).add(&alg.from_g_minus2(&t)));
    let cols: Vec<Vec<GQ>> = (0..n)
        .map(|c| (0..2 * n + 1).map(|r| g.get(r, c).clone()).collect())
        .collect();
    loop {
        let mix: Vec<Vec<GQ>> = (0..n)
            .map(|_| (0..n).map(|_| small(rng)).collect())
            .collect();
        if rank(&mix) < n {
            continue;
        }
        let basis = mix.iter().map(|row| combine(n, row, &cols)).collect();
        return IsotropicPlane::new(n, basis).expect("exp(g-) preserves isotropy");
    }
}
