//! The action of `exp g₁` and `exp g₂` on the chart `(I, z, W)` of the
//! quadric, checked against `W + W* + z*z = 0` as an ideal membership.
//!
//! The chart used here has every entry `W_kl` and its conjugate `Wb_kl` as
//! separate symbols. The entry `(k, l)` of `W + W* + z*z` is
//! `W_kl + Wb_lk + zb_k z_l`, linear in `Wb_lk` with unit coefficient, so
//! substituting `Wb_lk := −W_kl − zb_k z_l` is reduction modulo the ideal.

use crate::exactfield::{Chart, Poly, GQ};

use super::ModelError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupPart {
    /// `exp` of `Y ∈ g₁`, `Y` a column.
    G1,
    /// `exp` of `T ∈ g₂`, `T` skew-Hermitian.
    G2,
}

impl GroupPart {
    pub fn as_str(self) -> &'static str {
        match self {
            GroupPart::G1 => "g1",
            GroupPart::G2 => "g2",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadricCheck {
    pub n: usize,
    pub which: GroupPart,
    /// Number of terms left in `|det K|²·(W' + W'* + z'*z')` after reduction.
    pub residual_terms: usize,
    pub preserved: bool,
    /// Setting the parameters to zero gives the identity map.
    pub identity_at_zero: bool,
}

type PMat = Vec<Vec<Poly>>;

struct Symbols {
    chart: Chart,
    n: usize,
}

impl Symbols {
    fn new(n: usize) -> Result<Self, ModelError> {
        let mut names = Vec::new();
        let mut inv = Vec::new();
        let mut push = |names: &mut Vec<String>, a: String, b: String, sign: i8| {
            let i = names.len();
            if a == b {
                names.push(a);
                inv.push((i, sign));
            } else {
                names.push(a);
                names.push(b);
                inv.push((i + 1, 1));
                inv.push((i, 1));
            }
        };
        for k in 1..=n {
            push(&mut names, format!("z{k}"), format!("zb{k}"), 1);
        }
        for k in 1..=n {
            for l in 1..=n {
                push(&mut names, format!("W{k}{l}"), format!("Wb{k}{l}"), 1);
            }
        }
        for k in 1..=n {
            push(&mut names, format!("y{k}"), format!("yb{k}"), 1);
        }
        for k in 1..=n {
            push(&mut names, format!("t{k}{k}"), format!("t{k}{k}"), -1);
            for l in k + 1..=n {
                push(&mut names, format!("t{k}{l}"), format!("tb{k}{l}"), 1);
            }
        }
        let chart =
            Chart::custom(n, names, inv).map_err(|e| ModelError::DegenerateInput(e.to_string()))?;
        Ok(Symbols { chart, n })
    }

    fn var(&self, name: &str) -> Poly {
        Poly::var(self.chart.index_of(name).expect("known symbol"))
    }

    fn z(&self) -> PMat {
        vec![(1..=self.n).map(|k| self.var(&format!("z{k}"))).collect()]
    }

    fn w(&self) -> PMat {
        (1..=self.n)
            .map(|k| {
                (1..=self.n)
                    .map(|l| self.var(&format!("W{k}{l}")))
                    .collect()
            })
            .collect()
    }

    fn y(&self) -> PMat {
        (1..=self.n)
            .map(|k| vec![self.var(&format!("y{k}"))])
            .collect()
    }

    /// `T_kk = t_kk` (imaginary), `T_kl = t_kl`, `T_lk = −tb_kl`.
    fn t(&self) -> PMat {
        let n = self.n;
        let mut t = vec![vec![Poly::zero(); n]; n];
        for k in 0..n {
            t[k][k] = self.var(&format!("t{}{}", k + 1, k + 1));
            for l in k + 1..n {
                t[k][l] = self.var(&format!("t{}{}", k + 1, l + 1));
                t[l][k] = self.var(&format!("tb{}{}", k + 1, l + 1)).neg();
            }
        }
        t
    }

    fn adj(&self, m: &PMat) -> PMat {
        let (r, c) = (m.len(), m[0].len());
        (0..c)
            .map(|j| (0..r).map(|i| m[i][j].conj(&self.chart)).collect())
            .collect()
    }
}

fn mul(a: &PMat, b: &PMat) -> PMat {
    let (r, k, c) = (a.len(), b.len(), b[0].len());
    (0..r)
        .map(|i| {
            (0..c)
                .map(|j| (0..k).fold(Poly::zero(), |acc, l| acc.add(&a[i][l].mul(&b[l][j]))))
                .collect()
        })
        .collect()
}

fn add(a: &PMat, b: &PMat) -> PMat {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.iter().zip(y).map(|(p, q)| p.add(q)).collect())
        .collect()
}

fn scale(a: &PMat, c: &Poly) -> PMat {
    a.iter()
        .map(|r| r.iter().map(|p| p.mul(c)).collect())
        .collect()
}

fn identity(n: usize) -> PMat {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Poly::one() } else { Poly::zero() })
                .collect()
        })
        .collect()
}

fn minor(m: &PMat, i: usize, j: usize) -> PMat {
    m.iter()
        .enumerate()
        .filter(|(r, _)| *r != i)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|(c, _)| *c != j)
                .map(|(_, p)| p.clone())
                .collect()
        })
        .collect()
}

fn det(m: &PMat) -> Poly {
    match m.len() {
        0 => Poly::one(),
        1 => m[0][0].clone(),
        _ => (0..m.len()).fold(Poly::zero(), |acc, j| {
            let t = m[0][j].mul(&det(&minor(m, 0, j)));
            if j % 2 == 0 {
                acc.add(&t)
            } else {
                acc.sub(&t)
            }
        }),
    }
}

fn adjugate(m: &PMat) -> PMat {
    let n = m.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = det(&minor(m, j, i));
                    if (i + j) % 2 == 0 {
                        c
                    } else {
                        c.neg()
                    }
                })
                .collect()
        })
        .collect()
}

/// `(K, new z numerator, new W numerator)` with `z' = z_num·K⁻¹`-style
/// numerators `z_num = z̃·adj K`, `W_num = W·adj K`.
fn action(s: &Symbols, which: GroupPart, yy_coeff: &GQ) -> (PMat, PMat, PMat) {
    let n = s.n;
    let (z, w) = (s.z(), s.w());
    let (k, z_new) = match which {
        GroupPart::G1 => {
            let y = s.y();
            let yy = mul(&y, &s.adj(&y));
            let half = Poly::constant(yy_coeff.clone());
            let k = add(
                &add(&identity(n), &mul(&y, &z)),
                &scale(&mul(&yy, &w), &half),
            );
            let z_new = add(
                &z,
                &scale(&mul(&s.adj(&y), &w), &Poly::constant(-GQ::one())),
            );
            (k, z_new)
        }
        GroupPart::G2 => (add(&identity(n), &mul(&s.t(), &w)), z),
    };
    let adj = adjugate(&k);
    (k, mul(&z_new, &adj), mul(&w, &adj))
}

fn reduce(s: &Symbols, p: &Poly) -> Poly {
    let n = s.n;
    let mut out = p.clone();
    for k in 1..=n {
        for l in 1..=n {
            let wb = s
                .chart
                .index_of(&format!("Wb{l}{k}"))
                .expect("known symbol");
            let value = s
                .var(&format!("W{k}{l}"))
                .add(&s.var(&format!("zb{k}")).mul(&s.var(&format!("z{l}"))))
                .neg();
            out = out.substitute(wb, &value);
        }
    }
    out
}

/// Substitutes the action into `W + W* + z*z`, clears `|det K|²`, and
/// reduces modulo the defining ideal.
pub fn quadric_action_check(n: usize, which: GroupPart) -> Result<QuadricCheck, ModelError> {
    check_with(n, which, &GQ::from_ratio(-1, 2))
}

/// `yy_coeff` is the coefficient of `YY*W` in `K` for the `g₁` action.
fn check_with(n: usize, which: GroupPart, yy_coeff: &GQ) -> Result<QuadricCheck, ModelError> {
    if n < 2 {
        return Err(ModelError::UnsupportedDimension { n, min: 2 });
    }
    let s = Symbols::new(n)?;
    let (k, z_num, w_num) = action(&s, which, yy_coeff);
    let d = det(&k);
    let db = d.conj(&s.chart);
    let e = add(
        &add(&scale(&w_num, &db), &scale(&s.adj(&w_num), &d)),
        &mul(&s.adj(&z_num), &z_num),
    );
    let residual_terms = e.iter().flatten().map(|p| reduce(&s, p).num_terms()).sum();

    // Parameters set to zero.
    let params: Vec<usize> = (0..s.chart.len())
        .filter(|&a| {
            let name = s.chart.name(a);
            name.starts_with('y') || name.starts_with('t')
        })
        .collect();
    let at_zero = |p: &Poly| {
        params
            .iter()
            .fold(p.clone(), |acc, &v| acc.substitute(v, &Poly::zero()))
    };
    let d0 = at_zero(&d);
    let identity_at_zero = d0 == Poly::one()
        && z_num
            .iter()
            .flatten()
            .map(at_zero)
            .eq(s.z().into_iter().flatten())
        && w_num
            .iter()
            .flatten()
            .map(at_zero)
            .eq(s.w().into_iter().flatten());

    Ok(QuadricCheck {
        n,
        which,
        residual_terms,
        preserved: residual_terms == 0,
        identity_at_zero,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g2_action_preserves_the_quadric() {
        let c = quadric_action_check(2, GroupPart::G2).unwrap();
        assert!(c.preserved && c.identity_at_zero, "{c:?}");
    }

    #[test]
    fn g1_action_preserves_the_quadric() {
        let c = quadric_action_check(2, GroupPart::G1).unwrap();
        assert!(c.preserved && c.identity_at_zero, "{c:?}");
    }

    #[test]
    fn wrong_sign_is_detected() {
        let c = check_with(2, GroupPart::G1, &GQ::from_ratio(1, 2)).unwrap();
        assert!(!c.preserved);
    }
}
