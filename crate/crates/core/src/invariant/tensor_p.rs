use crate::exactfield::{Chart, Scalar, GQ};

use super::normalize::NormalizationCoefficients;
use super::{InvariantError, StructureFunctions, Tensor};

/// Which reading of the `C`-relation makes `P` trace-free:
/// `C^i_{r s̄} = B^i_{s̄ r} + (1/(n−2))·b_s·δ^i_r` with `b_s = B^l_{s̄ l}`
/// taken as is or conjugated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CVariant {
    Unconjugated,
    Conjugated,
    /// Both readings agree, which happens when `b_s` is real.
    Indistinguishable,
    /// n = 2 has no such relation.
    NotApplicable,
}

impl CVariant {
    pub fn as_str(self) -> &'static str {
        match self {
            CVariant::Unconjugated => "unconjugated",
            CVariant::Conjugated => "conjugated",
            CVariant::Indistinguishable => "indistinguishable",
            CVariant::NotApplicable => "not applicable",
        }
    }
}

/// `P^{i j̄}_{r s t̄}` stored as `p[i,j,r,s,t]`, with the coefficients
/// that produced it.
#[derive(Clone, Debug)]
pub struct InvariantTensor {
    pub n: usize,
    pub p: Tensor,
    pub coeffs: NormalizationCoefficients,
    pub c_variant: CVariant,
}

fn q(a: i64, b: i64) -> GQ {
    GQ::from_ratio(a, b)
}

/// `P = f + A^i_{rs} δ^j_t + B̄^j_{r̄ t} δ^i_s + C̄^j_{t s̄} δ^i_r`.
fn general_p(f: &Tensor, a: &Tensor, b_bar: &Tensor, c_bar: &Tensor) -> Tensor {
    let n = f.n();
    let mut p = f.clone();
    for idx in f.indices() {
        let [i, j, r, s, t] = idx[..] else {
            unreachable!()
        };
        let mut v = f.get(&idx).clone();
        if j == t {
            v = v.add(a.get(&[i, r, s]));
        }
        if i == s {
            v = v.add(b_bar.get(&[j, r, t]));
        }
        if i == r {
            v = v.add(c_bar.get(&[j, t, s]));
        }
        p.set(&idx, v);
    }
    debug_assert_eq!(p.n(), n);
    p
}

/// The closed forms after substituting the `C`-relation.
fn literal_p(f: &Tensor, co: &NormalizationCoefficients, chart: &Chart) -> Tensor {
    let n = co.n;
    let b_bar = co.b.conjugate(chart);
    let last: Vec<Scalar> = if n == 2 {
        // A^k_{sk}
        (0..n)
            .map(|s| (0..n).fold(Scalar::zero(), |acc, k| acc.add(co.a.get(&[k, s, k]))))
            .collect()
    } else {
        (0..n)
            .map(|s| {
                (0..n)
                    .fold(Scalar::zero(), |acc, l| acc.add(b_bar.get(&[l, s, l])))
                    .scale(&q(1, n as i64 - 2))
            })
            .collect()
    };
    let mut p = f.clone();
    for idx in f.indices() {
        let [i, j, r, s, t] = idx[..] else {
            unreachable!()
        };
        let mut v = f.get(&idx).clone();
        if j == t {
            v = v.add(co.a.get(&[i, r, s]));
        }
        if i == s {
            v = v.add(b_bar.get(&[j, r, t]));
        }
        if i == r {
            v = v.add(b_bar.get(&[j, s, t]));
            if j == t {
                v = v.add(&last[s]);
            }
        }
        p.set(&idx, v);
    }
    p
}

/// First failing contraction or symmetry of `p`, as `(name, index, value)`.
pub fn trace_residual(p: &Tensor) -> Option<(&'static str, Vec<usize>, Scalar)> {
    let n = p.n();
    for i in 0..n {
        for j in 0..n {
            for r in 0..n {
                for s in 0..n {
                    for t in 0..n {
                        let d = p.get(&[i, j, r, s, t]).sub(p.get(&[i, j, s, r, t]));
                        if !d.is_zero() {
                            return Some(("P^{ij}_{[rs]t}", vec![i, j, r, s, t], d));
                        }
                    }
                }
            }
        }
    }
    for i in 0..n {
        for r in 0..n {
            for s in 0..n {
                let v = (0..n).fold(Scalar::zero(), |acc, j| acc.add(p.get(&[i, j, r, s, j])));
                if !v.is_zero() {
                    return Some(("P^{ij}_{rsj}", vec![i, r, s], v));
                }
            }
        }
    }
    for j in 0..n {
        for s in 0..n {
            for t in 0..n {
                let v = (0..n).fold(Scalar::zero(), |acc, i| acc.add(p.get(&[i, j, i, s, t])));
                if !v.is_zero() {
                    return Some(("P^{ij}_{ist}", vec![j, s, t], v));
                }
            }
        }
    }
    None
}

fn c_bar_variant(co: &NormalizationCoefficients, chart: &Chart, conjugated: bool) -> Tensor {
    let n = co.n;
    let b_bar = co.b.conjugate(chart);
    let mut c_bar = Tensor::zeros(n, 3);
    for j in 0..n {
        // b_s, or its conjugate for the other reading; then conjugate C.
        for s in 0..n {
            let bt = (0..n).fold(Scalar::zero(), |acc, l| acc.add(co.b.get(&[l, s, l])));
            let extra = if conjugated { bt } else { bt.conjugate(chart) };
            for t in 0..n {
                let mut v = b_bar.get(&[j, s, t]).clone();
                if j == t {
                    v = v.add(&extra.scale(&q(1, n as i64 - 2)));
                }
                c_bar.set(&[j, t, s], v);
            }
        }
    }
    c_bar
}

/// Assemble `P` from the closed form of the respective branch and check
/// that it is symmetric in `r, s` and trace-free.
pub fn assemble_p(
    sf: &StructureFunctions,
    co: &NormalizationCoefficients,
) -> Result<InvariantTensor, InvariantError> {
    let n = co.n;
    let chart = &sf.chart;
    let f = &sf.rs_hol;
    let p = literal_p(f, co, chart);
    if let Some((which, index, value)) = trace_residual(&p) {
        return Err(InvariantError::TraceResidual {
            contraction: which,
            index,
            value: value.to_text(chart),
        });
    }
    let b_bar = co.b.conjugate(chart);
    let c_bar = co.c.conjugate(chart);
    if general_p(f, &co.a, &b_bar, &c_bar) != p {
        return Err(InvariantError::CoefficientMismatch);
    }
    let c_variant = if n == 2 {
        CVariant::NotApplicable
    } else {
        let ok = |conj| {
            let pv = general_p(f, &co.a, &b_bar, &c_bar_variant(co, chart, conj));
            trace_residual(&pv).is_none()
        };
        match (ok(false), ok(true)) {
            (true, true) => CVariant::Indistinguishable,
            (true, false) => CVariant::Unconjugated,
            (false, true) => CVariant::Conjugated,
            (false, false) => return Err(InvariantError::CoefficientMismatch),
        }
    };
    Ok(InvariantTensor {
        n,
        p,
        coeffs: co.clone(),
        c_variant,
    })
}
