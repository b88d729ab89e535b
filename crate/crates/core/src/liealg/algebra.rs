use num_rational::BigRational;
use num_traits::Zero;

use crate::exactfield::GQ;

use super::matrix::Mat;

/// Grades `-2..=2` of the block grading.
pub const GRADES: [i32; 5] = [-2, -1, 0, 1, 2];

/// `𝔰𝔲(n+1, n)` as `(2n+1) × (2n+1)` matrices `M` with
/// `M*𝕁 + 𝕁M = 0`, `tr M = 0`, where `𝕁` swaps the outer `n`-blocks and
/// fixes the middle coordinate.
///
/// Blocks have sizes `(n, 1, n)` and block `(a, b)` has grade `a − b`
/// measured downwards: `(1,0)` and `(2,1)` are `g_{-1}`, `(2,0)` is `g_{-2}`.
#[derive(Clone, Debug)]
pub struct SuAlgebra {
    pub n: usize,
    pub jform: Mat,
    pub basis: Vec<BasisElement>,
}

#[derive(Clone, Debug)]
pub struct BasisElement {
    pub grade: i32,
    pub label: String,
    pub m: Mat,
}

/// The components of an element by grade, `parts[g + 2]` for grade `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDecomposition {
    pub parts: Vec<Mat>,
}

impl GradedDecomposition {
    pub fn grade(&self, g: i32) -> &Mat {
        &self.parts[(g + 2) as usize]
    }

    pub fn sum(&self) -> Mat {
        let mut acc = Mat::zeros(self.parts[0].rows(), self.parts[0].cols());
        for p in &self.parts {
            acc = acc.add(p);
        }
        acc
    }
}

fn i() -> GQ {
    GQ::i()
}

fn one() -> GQ {
    GQ::one()
}

/// Block index of row or column `k`: 0, 1 (the middle) or 2.
pub fn block_of(n: usize, k: usize) -> usize {
    if k < n {
        0
    } else if k == n {
        1
    } else {
        2
    }
}

/// Grade of the matrix entry `(p, q)`.
pub fn grade_of_entry(n: usize, p: usize, q: usize) -> i32 {
    block_of(n, q) as i32 - block_of(n, p) as i32
}

/// Skew-Hermitian `n × n` basis: `i E_kk`, `E_kl − E_lk`, `i(E_kl + E_lk)`.
pub fn skew_hermitian_basis(n: usize) -> Vec<(String, Mat)> {
    let mut out = Vec::new();
    for k in 0..n {
        out.push((format!("iE{}{}", k + 1, k + 1), Mat::unit(n, k, k, i())));
    }
    for k in 0..n {
        for l in k + 1..n {
            let a = Mat::unit(n, k, l, one()).sub(&Mat::unit(n, l, k, one()));
            let b = Mat::unit(n, k, l, i()).add(&Mat::unit(n, l, k, i()));
            out.push((format!("E{}{}-E{}{}", k + 1, l + 1, l + 1, k + 1), a));
            out.push((format!("i(E{}{}+E{}{})", k + 1, l + 1, l + 1, k + 1), b));
        }
    }
    out
}

impl SuAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn size(&self) -> usize {
        2 * self.n + 1
    }

    /// Grade −1 element with row parameter `x`: `M10 = x`, `M21 = −x*`.
    pub fn from_g_minus1(&self, x: &[GQ]) -> Mat {
        let n = self.n;
        let mut m = Mat::zeros(2 * n + 1, 2 * n + 1);
        for (r, v) in x.iter().enumerate() {
            m.set(n, r, v.clone());
            m.set(n + 1 + r, n, -v.conj());
        }
        m
    }

    /// Grade −2 element with skew-Hermitian parameter `T`: `M20 = −T`.
    pub fn from_g_minus2(&self, t: &Mat) -> Mat {
        let n = self.n;
        let mut m = Mat::zeros(2 * n + 1, 2 * n + 1);
        m.set_block(n + 1, 0, &t.neg());
        m
    }

    /// Grade 0 element `diag(A, −2i·Im tr A, −A*)`.
    pub fn from_g0(&self, a: &Mat) -> Mat {
        let n = self.n;
        let mut m = Mat::zeros(2 * n + 1, 2 * n + 1);
        m.set_block(0, 0, a);
        let tr = a.trace();
        m.set(
            n,
            n,
            GQ::new(
                BigRational::zero(),
                -(tr.im * BigRational::from_integer(2.into())),
            ),
        );
        m.set_block(n + 1, n + 1, &a.adjoint().neg());
        m
    }

    /// Grade 1 element with column parameter `u`: `M01 = u`, `M12 = −u*`.
    pub fn from_g1(&self, u: &[GQ]) -> Mat {
        let n = self.n;
        let mut m = Mat::zeros(2 * n + 1, 2 * n + 1);
        for (r, v) in u.iter().enumerate() {
            m.set(r, n, v.clone());
            m.set(n, n + 1 + r, -v.conj());
        }
        m
    }

    /// Grade 2 element with skew-Hermitian parameter `S`: `M02 = S`.
    pub fn from_g2(&self, s: &Mat) -> Mat {
        let n = self.n;
        let mut m = Mat::zeros(2 * n + 1, 2 * n + 1);
        m.set_block(0, n + 1, s);
        m
    }

    /// Row parameter of the grade −1 part.
    pub fn g_minus1_param(&self, m: &Mat) -> Vec<GQ> {
        (0..self.n).map(|r| m.get(self.n, r).clone()).collect()
    }

    /// Parameter `T = −M20` of the grade −2 part.
    pub fn g_minus2_param(&self, m: &Mat) -> Mat {
        m.block(self.n + 1, 0, self.n, self.n).neg()
    }

    /// `M*𝕁 + 𝕁M = 0` and `tr M = 0`.
    pub fn contains(&self, m: &Mat) -> bool {
        m.adjoint()
            .mul(&self.jform)
            .add(&self.jform.mul(m))
            .is_zero()
            && m.trace().is_zero()
    }

    pub fn bracket(&self, x: &Mat, y: &Mat) -> Mat {
        x.commutator(y)
    }

    pub fn decompose(&self, m: &Mat) -> GradedDecomposition {
        let n = self.n;
        let mut parts = vec![Mat::zeros(m.rows(), m.cols()); 5];
        for (p, q, v) in m.entries() {
            if !v.is_zero() {
                let g = grade_of_entry(n, p, q);
                parts[(g + 2) as usize].set(p, q, v.clone());
            }
        }
        GradedDecomposition { parts }
    }

    /// Coordinates in [`Self::basis`], read off the blocks. `None` if `m`
    /// is not in the algebra.
    pub fn coords(&self, m: &Mat) -> Option<Vec<BigRational>> {
        if !self.contains(m) {
            return None;
        }
        let n = self.n;
        let mut out = Vec::with_capacity(self.dim());
        let skew = |b: &Mat, out: &mut Vec<BigRational>| {
            for k in 0..n {
                out.push(b.get(k, k).im.clone());
            }
            for k in 0..n {
                for l in k + 1..n {
                    out.push(b.get(k, l).re.clone());
                    out.push(b.get(k, l).im.clone());
                }
            }
        };
        skew(&self.g_minus2_param(m), &mut out);
        for r in 0..n {
            out.push(m.get(n, r).re.clone());
            out.push(m.get(n, r).im.clone());
        }
        for k in 0..n {
            for l in 0..n {
                out.push(m.get(k, l).re.clone());
                out.push(m.get(k, l).im.clone());
            }
        }
        for r in 0..n {
            out.push(m.get(r, n).re.clone());
            out.push(m.get(r, n).im.clone());
        }
        skew(&m.block(0, n + 1, n, n), &mut out);
        Some(out)
    }

    /// `Σ c_a e_a` over the real basis.
    pub fn from_coords(&self, c: &[BigRational]) -> Mat {
        let sz = self.size();
        let mut acc = Mat::zeros(sz, sz);
        for (e, x) in self.basis.iter().zip(c) {
            if !x.is_zero() {
                acc = acc.add(&e.m.scale(&GQ::from_rational(x.clone())));
            }
        }
        acc
    }

    pub fn basis_of_grade(&self, g: i32) -> impl Iterator<Item = &BasisElement> {
        self.basis.iter().filter(move |e| e.grade == g)
    }
}

/// The real basis ordered by grade `-2, -1, 0, 1, 2`; real dimensions are
/// `n², 2n, 2n², 2n, n²`.
pub fn build_algebra(n: usize) -> SuAlgebra {
    assert!(n >= 1);
    let sz = 2 * n + 1;
    let mut jform = Mat::zeros(sz, sz);
    for k in 0..n {
        jform.set(k, n + 1 + k, one());
        jform.set(n + 1 + k, k, one());
    }
    jform.set(n, n, one());
    let mut alg = SuAlgebra {
        n,
        jform,
        basis: Vec::new(),
    };
    let mut basis = Vec::new();
    for (label, t) in skew_hermitian_basis(n) {
        basis.push(BasisElement {
            grade: -2,
            label: format!("g-2:{label}"),
            m: alg.from_g_minus2(&t),
        });
    }
    let unit_vec = |r: usize, c: GQ| {
        let mut v = vec![GQ::zero(); n];
        v[r] = c;
        v
    };
    for r in 0..n {
        for (tag, c) in [("e", one()), ("ie", i())] {
            basis.push(BasisElement {
                grade: -1,
                label: format!("g-1:{tag}{}", r + 1),
                m: alg.from_g_minus1(&unit_vec(r, c)),
            });
        }
    }
    for k in 0..n {
        for l in 0..n {
            for (tag, c) in [("E", one()), ("iE", i())] {
                basis.push(BasisElement {
                    grade: 0,
                    label: format!("g0:{tag}{}{}", k + 1, l + 1),
                    m: alg.from_g0(&Mat::unit(n, k, l, c)),
                });
            }
        }
    }
    for r in 0..n {
        for (tag, c) in [("e", one()), ("ie", i())] {
            basis.push(BasisElement {
                grade: 1,
                label: format!("g1:{tag}{}", r + 1),
                m: alg.from_g1(&unit_vec(r, c)),
            });
        }
    }
    for (label, s) in skew_hermitian_basis(n) {
        basis.push(BasisElement {
            grade: 2,
            label: format!("g2:{label}"),
            m: alg.from_g2(&s),
        });
    }
    alg.basis = basis;
    alg
}

/// `X*Y − Y*X` for row vectors, an `n × n` matrix.
pub fn levi_bracket(x: &[GQ], y: &[GQ]) -> Mat {
    let n = x.len();
    let mut out = Mat::zeros(n, n);
    for k in 0..n {
        for l in 0..n {
            let v = &(&x[k].conj() * &y[l]) - &(&y[k].conj() * &x[l]);
            out.set(k, l, v);
        }
    }
    out
}

/// Killing form `B(X, Y) = 2(2n+1)·tr(XY)` of `𝔰𝔩(2n+1)` restricted to
/// the real form.
pub fn killing(alg: &SuAlgebra, x: &Mat, y: &Mat) -> GQ {
    let k = GQ::from_int(2 * (2 * alg.n as i64 + 1));
    &k * &x.mul(y).trace()
}
