use crate::exactfield::{Scalar, GQ};

use super::{InvariantError, StructureFunctions, Tensor};

/// The trace that was set to zero with the `g_1` gauge freedom.
pub const GAUGE: &str = "A^i_{is} = 0";

/// Coefficients of `ω^i = θ^i + C^i_{j k̄} ω^{[j k̄]}` and
/// `ω^i_j = A^i_{kj} ω^k + B^i_{k̄ j} ω^{k̄}` in the normalized section.
///
/// Layout: `a[i,r,s] = A^i_{rs}`, `b[i,s,r] = B^i_{s̄ r}`,
/// `c[i,r,s] = C^i_{r s̄}`.
#[derive(Clone, Debug)]
pub struct NormalizationCoefficients {
    pub n: usize,
    pub a: Tensor,
    pub b: Tensor,
    pub c: Tensor,
    pub gauge: &'static str,
}

/// `F_s = Σ_{i,j} f^{i j̄}_{i s j̄}`.
pub(crate) fn full_trace(f: &Tensor) -> Vec<Scalar> {
    let n = f.n();
    (0..n)
        .map(|s| {
            let mut acc = Scalar::zero();
            for i in 0..n {
                for j in 0..n {
                    acc = acc.add(f.get(&[i, j, i, s, j]));
                }
            }
            acc
        })
        .collect()
}

fn delta(a: usize, b: usize) -> bool {
    a == b
}

fn q(a: i64, b: i64) -> GQ {
    GQ::from_ratio(a, b)
}

/// Solve the homogeneity-one normalization for `f = f^{i j̄}_{r s t̄}`.
///
/// For n ≥ 3 the steps are: gauge `A^i_{is} = 0`; the trace of `B̄` from
/// the double contraction of `P`; all of `B̄` from the contraction over
/// `i = r`; the symmetric part of `A` from the contraction over `j = t`;
/// the antisymmetric part of `A` from the torsion relation; `C` from the
/// mixed torsion relation.
pub fn solve_normalization(
    sf: &StructureFunctions,
) -> Result<NormalizationCoefficients, InvariantError> {
    let n = sf.n;
    if n < 2 {
        return Err(InvariantError::UnsupportedDimension(n));
    }
    let f = &sf.rs_hol;
    let chart = &sf.chart;
    let ni = n as i64;
    let ft = full_trace(f);
    // G^j_{st} = Σ_i f^{i j̄}_{i s t̄},  H^i_{rs} = Σ_j f^{i j̄}_{r s j̄}
    let g = |j: usize, s: usize, t: usize| {
        (0..n).fold(Scalar::zero(), |acc, i| acc.add(f.get(&[i, j, i, s, t])))
    };
    let h = |i: usize, r: usize, s: usize| {
        (0..n).fold(Scalar::zero(), |acc, j| acc.add(f.get(&[i, j, r, s, j])))
    };

    let mut a = Tensor::zeros(n, 3);
    let mut b_bar = Tensor::zeros(n, 3);
    let mut c = Tensor::zeros(n, 3);

    if n == 2 {
        // B^j_{s̄ j} = 0 is forced; a_s = A^k_{sk}.
        let a_tr: Vec<Scalar> = ft.iter().map(|x| x.scale(&q(-1, 4))).collect();
        for j in 0..n {
            for s in 0..n {
                for t in 0..n {
                    let mut v = g(j, s, t);
                    if delta(j, t) {
                        v = v.add(&a_tr[s].scale(&q(2, 1)));
                    }
                    b_bar.set(&[j, s, t], v.scale(&q(-1, 3)));
                }
            }
        }
        for i in 0..n {
            for r in 0..n {
                for s in 0..n {
                    let mut v = h(i, r, s).scale(&q(-1, 2));
                    if delta(i, r) {
                        v = v.sub(&a_tr[s]);
                    }
                    a.set(&[i, r, s], v);
                }
            }
        }
        let b = b_bar.conjugate(chart);
        for i in 0..n {
            for r in 0..n {
                for s in 0..n {
                    let mut v = b.get(&[i, s, r]).clone();
                    if delta(i, r) {
                        v = v.add(&a_tr[s].conjugate(chart));
                    }
                    c.set(&[i, r, s], v);
                }
            }
        }
        return Ok(NormalizationCoefficients {
            n,
            a,
            b,
            c,
            gauge: GAUGE,
        });
    }

    // conj(b_s), b_s = B^l_{s̄ l}
    let bt_bar: Vec<Scalar> = ft
        .iter()
        .map(|x| x.scale(&q(-(ni - 2), 2 * ni * ni - ni - 2)))
        .collect();
    for j in 0..n {
        for s in 0..n {
            for t in 0..n {
                let mut v = g(j, s, t).neg();
                if delta(j, t) {
                    v = v.sub(&bt_bar[s].scale(&q(ni, ni - 2)));
                }
                b_bar.set(&[j, s, t], v.scale(&q(1, ni + 1)));
            }
        }
    }
    let k_sym = q(3 * ni - 4, 2 * (ni - 2));
    let k_anti = q(1, 2 * (ni - 2));
    for i in 0..n {
        for r in 0..n {
            for s in 0..n {
                let mut sym = h(i, r, s).add(&h(i, s, r)).scale(&q(-1, 2));
                let mut anti = Scalar::zero();
                if delta(i, r) {
                    sym = sym.sub(&bt_bar[s].scale(&k_sym));
                    anti = anti.sub(&bt_bar[s].scale(&k_anti));
                }
                if delta(i, s) {
                    sym = sym.sub(&bt_bar[r].scale(&k_sym));
                    anti = anti.add(&bt_bar[r].scale(&k_anti));
                }
                a.set(&[i, r, s], sym.scale(&q(1, ni)).add(&anti));
            }
        }
    }
    let b = b_bar.conjugate(chart);
    let bt: Vec<Scalar> = bt_bar.iter().map(|x| x.conjugate(chart)).collect();
    for i in 0..n {
        for r in 0..n {
            for s in 0..n {
                let mut v = b.get(&[i, s, r]).clone();
                if delta(i, r) {
                    v = v.add(&bt[s].scale(&q(1, ni - 2)));
                }
                c.set(&[i, r, s], v);
            }
        }
    }
    Ok(NormalizationCoefficients {
        n,
        a,
        b,
        c,
        gauge: GAUGE,
    })
}
