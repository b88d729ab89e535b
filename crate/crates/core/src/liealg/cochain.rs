//! Cochains on `𝔭₊` with values in the complexified algebra.
//!
//! `𝔭₊ = g₁ ⊕ g₂` is identified with `(g/𝔭)*` through the Killing form.
//! Its complex basis `Z_a` consists of unit matrices: `E_{r,n}` and
//! `E_{n,n+1+r}` for `g₁` (indices `0..2n`), `E_{s,n+1+t}` for `g₂`
//! (index `2n + s·n + t`). The first `n` of them are dual to the `(1,0)`
//! part of `g₋₁`, the next `n` to the `(0,1)` part.

use std::collections::BTreeMap;

use crate::exactfield::GQ;

use super::algebra::block_of;
use super::matrix::Mat;

/// An element `Σ Z_a ∧ Z_b ⊗ φ_{ab}` of `Λ²𝔭₊ ⊗ g`, stored for `a < b`;
/// missing pairs are zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Cochain2 {
    pub n: usize,
    pub values: BTreeMap<(usize, usize), Mat>,
}

/// An element `Σ Z_a ⊗ ψ_a` of `𝔭₊ ⊗ g`; missing entries are zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Cochain1 {
    pub n: usize,
    pub values: BTreeMap<usize, Mat>,
}

pub fn p_plus_dim(n: usize) -> usize {
    2 * n + n * n
}

/// Matrix position of `Z_a`.
pub fn p_plus_position(n: usize, a: usize) -> (usize, usize) {
    if a < n {
        (a, n)
    } else if a < 2 * n {
        (n, n + 1 + (a - n))
    } else {
        let k = a - 2 * n;
        (k / n, n + 1 + k % n)
    }
}

pub fn p_plus_element(n: usize, a: usize) -> Mat {
    let (p, q) = p_plus_position(n, a);
    let mut m = Mat::zeros(2 * n + 1, 2 * n + 1);
    m.set(p, q, GQ::one());
    m
}

/// Coefficients of `m` in the `Z_a`, or `None` if `m ∉ 𝔭₊ ⊗ ℂ`.
pub fn p_plus_coords(n: usize, m: &Mat) -> Option<Vec<GQ>> {
    let mut out = vec![GQ::zero(); p_plus_dim(n)];
    let mut index = BTreeMap::new();
    for a in 0..p_plus_dim(n) {
        index.insert(p_plus_position(n, a), a);
    }
    for (p, q, v) in m.entries() {
        if v.is_zero() {
            continue;
        }
        out[*index.get(&(p, q))?] = v.clone();
    }
    Some(out)
}

fn add_into(map: &mut BTreeMap<usize, Mat>, k: usize, v: Mat) {
    match map.get_mut(&k) {
        Some(m) => *m = m.add(&v),
        None => {
            map.insert(k, v);
        }
    }
}

impl Cochain2 {
    pub fn zero(n: usize) -> Self {
        Cochain2 {
            n,
            values: BTreeMap::new(),
        }
    }

    /// Accumulates `φ_{ab} += v`, using antisymmetry when `a > b`.
    pub fn add_term(&mut self, a: usize, b: usize, v: Mat) {
        if a == b {
            return;
        }
        let (key, v) = if a < b {
            ((a, b), v)
        } else {
            ((b, a), v.neg())
        };
        match self.values.get_mut(&key) {
            Some(m) => *m = m.add(&v),
            None => {
                self.values.insert(key, v);
            }
        }
    }

    pub fn get(&self, a: usize, b: usize) -> Mat {
        let sz = 2 * self.n + 1;
        if a == b {
            return Mat::zeros(sz, sz);
        }
        let (key, sign) = if a < b {
            ((a, b), false)
        } else {
            ((b, a), true)
        };
        match self.values.get(&key) {
            Some(m) if sign => m.neg(),
            Some(m) => m.clone(),
            None => Mat::zeros(sz, sz),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.values().all(Mat::is_zero)
    }

    /// Drops zero values so that equal cochains compare equal.
    pub fn normalized(&self) -> Self {
        Cochain2 {
            n: self.n,
            values: self
                .values
                .iter()
                .filter(|(_, m)| !m.is_zero())
                .map(|(k, m)| (*k, m.clone()))
                .collect(),
        }
    }

    /// The value on `u ∧ v` for `u, v` given in the basis of `g/𝔭` dual to the `Z_a`.
    pub fn eval(&self, u: &[GQ], v: &[GQ]) -> Mat {
        let sz = 2 * self.n + 1;
        let mut acc = Mat::zeros(sz, sz);
        for (&(a, b), m) in &self.values {
            let c = &(&u[a] * &v[b]) - &(&u[b] * &v[a]);
            if !c.is_zero() {
                acc = acc.add(&m.scale(&c));
            }
        }
        acc
    }
}

impl Cochain1 {
    pub fn zero(n: usize) -> Self {
        Cochain1 {
            n,
            values: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.values().all(Mat::is_zero)
    }

    pub fn normalized(&self) -> Self {
        Cochain1 {
            n: self.n,
            values: self
                .values
                .iter()
                .filter(|(_, m)| !m.is_zero())
                .map(|(k, m)| (*k, m.clone()))
                .collect(),
        }
    }
}

/// `∂*(Z_a ∧ Z_b ⊗ X) = −Z_a ⊗ [Z_b, X] + Z_b ⊗ [Z_a, X] − [Z_a, Z_b] ⊗ X`,
/// extended linearly.
pub fn codifferential(phi: &Cochain2) -> Cochain1 {
    let n = phi.n;
    let mut out = BTreeMap::new();
    for (&(a, b), x) in &phi.values {
        if x.is_zero() {
            continue;
        }
        let za = p_plus_element(n, a);
        let zb = p_plus_element(n, b);
        add_into(&mut out, a, zb.commutator(x).neg());
        add_into(&mut out, b, za.commutator(x));
        let gamma = p_plus_coords(n, &za.commutator(&zb)).expect("p+ is a subalgebra");
        for (c, g) in gamma.iter().enumerate() {
            if !g.is_zero() {
                add_into(&mut out, c, x.scale(&-g));
            }
        }
    }
    Cochain1 { n, values: out }.normalized()
}

/// Whether `a` is block diagonal, i.e. lies in `g₀ ⊗ ℂ` up to trace.
pub fn is_block_diagonal(n: usize, a: &Mat) -> bool {
    a.entries()
        .all(|(p, q, v)| v.is_zero() || block_of(n, p) == block_of(n, q))
}

fn ad_coords(a: &Mat, n: usize, k: usize) -> Vec<GQ> {
    p_plus_coords(n, &a.commutator(&p_plus_element(n, k))).expect("g0 preserves p+")
}

/// `A·(Z_a ∧ Z_b ⊗ X) = [A, Z_a] ∧ Z_b ⊗ X + Z_a ∧ [A, Z_b] ⊗ X + Z_a ∧ Z_b ⊗ [A, X]`.
pub fn act_g0_on_2(a: &Mat, phi: &Cochain2) -> Cochain2 {
    let n = phi.n;
    let mut out = Cochain2::zero(n);
    for (&(x, y), m) in &phi.values {
        out.add_term(x, y, a.commutator(m));
        for (c, v) in ad_coords(a, n, x).iter().enumerate() {
            if !v.is_zero() {
                out.add_term(c, y, m.scale(v));
            }
        }
        for (c, v) in ad_coords(a, n, y).iter().enumerate() {
            if !v.is_zero() {
                out.add_term(x, c, m.scale(v));
            }
        }
    }
    out.normalized()
}

/// `A·(Z_a ⊗ X) = [A, Z_a] ⊗ X + Z_a ⊗ [A, X]`.
pub fn act_g0_on_1(a: &Mat, psi: &Cochain1) -> Cochain1 {
    let n = psi.n;
    let mut out = BTreeMap::new();
    for (&x, m) in &psi.values {
        add_into(&mut out, x, a.commutator(m));
        for (c, v) in ad_coords(a, n, x).iter().enumerate() {
            if !v.is_zero() {
                add_into(&mut out, c, m.scale(v));
            }
        }
    }
    Cochain1 { n, values: out }.normalized()
}

/// Keeps only the components with both arguments dual to `g₋₁`.
pub fn kappa11_project(phi: &Cochain2) -> Cochain2 {
    let n = phi.n;
    Cochain2 {
        n,
        values: phi
            .values
            .iter()
            .filter(|((a, b), _)| *a < 2 * n && *b < 2 * n)
            .map(|(k, m)| (*k, m.clone()))
            .collect(),
    }
}

/// The curvature cochain of type `Hom(g₋₁ ⊗ g₋₂, g₋₂)` carried by a tensor
/// `P^{ij̄}_{rst̄}`, given as `p(i, j, r, s, t)`.
///
/// With `ω^{[st̄]}` the `g₂` dual of `T_{ts}` and `Ω^{[ij̄]}` the entry
/// `(j, i)` of the `g₋₂` parameter, the torsion term `P^{ij̄}_{rst̄} θ^r ∧ θ^{st̄}`
/// and its conjugate give
///
/// ```text
/// φ_{r, 2n+sn+t}   has M20[j][i] = P^{ij̄}_{rst̄}
/// φ_{n+r, 2n+sn+t} has M20[j][i] = −conj(P^{jī}_{rts̄})
/// ```
pub fn p_cochain(n: usize, p: impl Fn(usize, usize, usize, usize, usize) -> GQ) -> Cochain2 {
    let sz = 2 * n + 1;
    let mut out = Cochain2::zero(n);
    for r in 0..n {
        for s in 0..n {
            for t in 0..n {
                let col = 2 * n + s * n + t;
                let mut hol = Mat::zeros(sz, sz);
                let mut anti = Mat::zeros(sz, sz);
                for i in 0..n {
                    for j in 0..n {
                        hol.set(n + 1 + j, i, p(i, j, r, s, t));
                        anti.set(n + 1 + j, i, -p(j, i, r, t, s).conj());
                    }
                }
                if !hol.is_zero() {
                    out.add_term(r, col, hol);
                }
                if !anti.is_zero() {
                    out.add_term(n + r, col, anti);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p_plus_basis_closes() {
        let n = 2;
        for a in 0..p_plus_dim(n) {
            for b in 0..p_plus_dim(n) {
                let c = p_plus_element(n, a).commutator(&p_plus_element(n, b));
                assert!(p_plus_coords(n, &c).is_some());
            }
        }
    }

    #[test]
    fn trivial_codifferential() {
        let n = 2;
        let mut phi = Cochain2::zero(n);
        // Z_0 = E_{0,2} and Z_1 = E_{1,2} commute with each other and with E_{3,4}.
        phi.add_term(0, 1, Mat::unit(5, 3, 4, GQ::one()));
        assert!(codifferential(&phi).is_zero());
    }

    #[test]
    fn projection_keeps_only_g1_pairs() {
        let n = 2;
        let mut phi = Cochain2::zero(n);
        phi.add_term(0, 3, Mat::unit(5, 4, 0, GQ::one()));
        phi.add_term(1, 5, Mat::unit(5, 3, 1, GQ::one()));
        let k = kappa11_project(&phi);
        assert_eq!(k.values.len(), 1);
        assert_eq!(kappa11_project(&k), k);
    }
}
