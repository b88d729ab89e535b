//! Formal vector fields over a chart, Lie brackets, and adapted frames.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::exactfield::linalg::{rank, solve_linear_many};
use crate::exactfield::{Chart, Scalar, GQ};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VfError {
    #[error("vector fields live over different charts")]
    ChartMismatch,
    #[error("expected {expected} fields, got {got}")]
    WrongFieldCount { expected: usize, got: usize },
    #[error("CR dimension must be at least 2, got {0}")]
    DimensionTooSmall(usize),
    #[error("frame is degenerate at the base point: rank {rank} < {expected}")]
    DegenerateFrame { rank: usize, expected: usize },
    #[error("base point has {got} coordinates, chart has {expected}")]
    BasePointLength { expected: usize, got: usize },
    #[error("coefficient of {field} has a pole at the base point")]
    SingularAtBasePoint { field: String },
}

/// A derivation `Σ V^a ∂/∂x_a` with finitely many nonzero components.
#[derive(Clone, PartialEq, Eq)]
pub struct VectorField {
    chart: Arc<Chart>,
    comps: BTreeMap<usize, Scalar>,
}

fn same_chart(a: &Arc<Chart>, b: &Arc<Chart>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl VectorField {
    pub fn zero(chart: &Arc<Chart>) -> Self {
        VectorField {
            chart: chart.clone(),
            comps: BTreeMap::new(),
        }
    }

    /// The coordinate field `∂/∂x_a`.
    pub fn coord(chart: &Arc<Chart>, a: usize) -> Self {
        let mut v = Self::zero(chart);
        v.set(a, Scalar::one());
        v
    }

    pub fn from_components(
        chart: &Arc<Chart>,
        comps: impl IntoIterator<Item = (usize, Scalar)>,
    ) -> Self {
        let mut v = Self::zero(chart);
        for (a, s) in comps {
            let cur = v.component(a).add(&s);
            v.set(a, cur);
        }
        v
    }

    pub fn chart(&self) -> &Arc<Chart> {
        &self.chart
    }

    pub fn component(&self, a: usize) -> Scalar {
        self.comps.get(&a).cloned().unwrap_or_default()
    }

    pub fn components(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.comps.iter().map(|(a, s)| (*a, s))
    }

    pub fn set(&mut self, a: usize, s: Scalar) {
        assert!(a < self.chart.len(), "symbol index out of range");
        if s.is_zero() {
            self.comps.remove(&a);
        } else {
            self.comps.insert(a, s);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    fn check(&self, o: &VectorField) -> Result<(), VfError> {
        if same_chart(&self.chart, &o.chart) {
            Ok(())
        } else {
            Err(VfError::ChartMismatch)
        }
    }

    pub fn add(&self, o: &VectorField) -> Result<VectorField, VfError> {
        self.check(o)?;
        let mut out = self.clone();
        for (a, s) in &o.comps {
            let cur = out.component(*a).add(s);
            out.set(*a, cur);
        }
        Ok(out)
    }

    pub fn sub(&self, o: &VectorField) -> Result<VectorField, VfError> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> VectorField {
        self.scale(&Scalar::int(-1))
    }

    pub fn scale(&self, f: &Scalar) -> VectorField {
        let mut out = Self::zero(&self.chart);
        if f.is_zero() {
            return out;
        }
        for (a, s) in &self.comps {
            out.set(*a, s.mul(f));
        }
        out
    }

    /// `V(f) = Σ V^a ∂_a f`.
    pub fn apply(&self, f: &Scalar) -> Scalar {
        self.comps.iter().fold(Scalar::zero(), |acc, (a, s)| {
            acc.add(&s.mul(&f.derivative(*a)))
        })
    }

    /// `[V, W]^a = V(W^a) − W(V^a)`.
    pub fn bracket(&self, o: &VectorField) -> Result<VectorField, VfError> {
        self.check(o)?;
        let mut out = Self::zero(&self.chart);
        let keys: std::collections::BTreeSet<usize> =
            self.comps.keys().chain(o.comps.keys()).copied().collect();
        for a in keys {
            let c = self
                .apply(&o.component(a))
                .sub(&o.apply(&self.component(a)));
            out.set(a, c);
        }
        Ok(out)
    }

    /// Complex conjugate: `conj(V)^b = σ·conj(V^{b'})` where
    /// `conj(x_b) = σ·x_{b'}`.
    pub fn conjugate(&self) -> VectorField {
        let mut out = Self::zero(&self.chart);
        for (a, s) in &self.comps {
            let (b, sign) = self.chart.conj_of(*a);
            let mut c = s.conjugate(&self.chart);
            if sign < 0 {
                c = c.neg();
            }
            out.set(b, c);
        }
        out
    }

    /// Components evaluated at a point; `None` at a pole.
    pub fn eval(&self, point: &[GQ]) -> Option<Vec<GQ>> {
        let mut v = vec![GQ::zero(); self.chart.len()];
        for (a, s) in &self.comps {
            v[*a] = s.eval(point)?;
        }
        Some(v)
    }

    /// `c1*d/dx1 + c2*d/dx2 + …`, or `0`.
    pub fn to_text(&self) -> String {
        if self.comps.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .comps
            .iter()
            .map(|(a, s)| {
                let name = self.chart.name(*a);
                if s.is_one() {
                    format!("d/d{name}")
                } else {
                    format!("({})*d/d{name}", s.to_text(&self.chart))
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Debug for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Position of a field in a frame of CR dimension `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Slot {
    /// `X_i`
    Holo(usize),
    /// `X_{ī}`
    Anti(usize),
    /// `X_{i j̄}`
    Levi(usize, usize),
}

impl Slot {
    pub fn index(self, n: usize) -> usize {
        match self {
            Slot::Holo(i) => i,
            Slot::Anti(i) => n + i,
            Slot::Levi(i, j) => 2 * n + i * n + j,
        }
    }

    pub fn from_index(k: usize, n: usize) -> Slot {
        if k < n {
            Slot::Holo(k)
        } else if k < 2 * n {
            Slot::Anti(k - n)
        } else {
            let r = k - 2 * n;
            Slot::Levi(r / n, r % n)
        }
    }

    /// Slot of the conjugate field, with the sign relating them:
    /// `conj(X_s) = sign · X_{s'}`.
    pub fn conj(self) -> (Slot, i8) {
        match self {
            Slot::Holo(i) => (Slot::Anti(i), 1),
            Slot::Anti(i) => (Slot::Holo(i), 1),
            Slot::Levi(i, j) => (Slot::Levi(j, i), -1),
        }
    }

    pub fn label(self) -> String {
        match self {
            Slot::Holo(i) => format!("{}", i + 1),
            Slot::Anti(i) => format!("{}b", i + 1),
            Slot::Levi(i, j) => format!("{}{}b", i + 1, j + 1),
        }
    }
}

/// An adapted frame `X_i, X_{ī} = conj(X_i), X_{i j̄} = −[X_i, X_{j̄}]`.
#[derive(Clone, Debug)]
pub struct CRFrame {
    n: usize,
    chart: Arc<Chart>,
    fields: Vec<VectorField>,
    base_point: Vec<GQ>,
}

impl CRFrame {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn chart(&self) -> &Arc<Chart> {
        &self.chart
    }

    pub fn base_point(&self) -> &[GQ] {
        &self.base_point
    }

    /// Number of fields, `2n + n²`.
    pub fn len(&self) -> usize {
        self.fields.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fields.is_empty()
    }

    pub fn field(&self, s: Slot) -> &VectorField {
        &self.fields[s.index(self.n)]
    }

    pub fn holo(&self, i: usize) -> &VectorField {
        self.field(Slot::Holo(i))
    }

    pub fn anti(&self, i: usize) -> &VectorField {
        self.field(Slot::Anti(i))
    }

    pub fn levi(&self, i: usize, j: usize) -> &VectorField {
        self.field(Slot::Levi(i, j))
    }

    pub fn fields(&self) -> &[VectorField] {
        &self.fields
    }

    pub fn slots(&self) -> impl Iterator<Item = Slot> + '_ {
        (0..self.fields.len()).map(|k| Slot::from_index(k, self.n))
    }
}

/// Complete `X_1..X_n` to an adapted frame and certify its rank at
/// `base_point` (the origin when `None`).
pub fn build_frame(
    holo: Vec<VectorField>,
    base_point: Option<Vec<GQ>>,
) -> Result<CRFrame, VfError> {
    let chart = match holo.first() {
        Some(v) => v.chart.clone(),
        None => {
            return Err(VfError::WrongFieldCount {
                expected: 2,
                got: 0,
            })
        }
    };
    let n = chart.n();
    if n < 2 {
        return Err(VfError::DimensionTooSmall(n));
    }
    if holo.len() != n {
        return Err(VfError::WrongFieldCount {
            expected: n,
            got: holo.len(),
        });
    }
    for v in &holo {
        v.check(&holo[0])?;
    }
    let base_point = base_point.unwrap_or_else(|| vec![GQ::zero(); chart.len()]);
    if base_point.len() != chart.len() {
        return Err(VfError::BasePointLength {
            expected: chart.len(),
            got: base_point.len(),
        });
    }
    let anti: Vec<VectorField> = holo.iter().map(|v| v.conjugate()).collect();
    let mut fields = holo.clone();
    fields.extend(anti.iter().cloned());
    for x in &holo {
        for y in &anti {
            fields.push(x.bracket(y)?.neg());
        }
    }
    let mut rows = Vec::with_capacity(fields.len());
    for (k, v) in fields.iter().enumerate() {
        match v.eval(&base_point) {
            Some(r) => rows.push(r),
            None => {
                return Err(VfError::SingularAtBasePoint {
                    field: Slot::from_index(k, n).label(),
                })
            }
        }
    }
    let expected = 2 * n + n * n;
    let r = rank(&rows);
    if r < expected {
        return Err(VfError::DegenerateFrame { rank: r, expected });
    }
    Ok(CRFrame {
        n,
        chart,
        fields,
        base_point,
    })
}

/// Coefficients of `targets` in the span of `basis`, decided over the
/// fraction field; `None` marks a field outside the span.
pub fn expand_in_span(
    basis: &[VectorField],
    targets: &[VectorField],
) -> Result<Vec<Option<Vec<Scalar>>>, VfError> {
    let Some(first) = basis.first() else {
        return Ok(targets
            .iter()
            .map(|t| if t.is_zero() { Some(Vec::new()) } else { None })
            .collect());
    };
    for v in basis.iter().chain(targets) {
        v.check(first)?;
    }
    let m = first.chart.len();
    let mat: Vec<Vec<Scalar>> = (0..m)
        .map(|a| basis.iter().map(|v| v.component(a)).collect())
        .collect();
    let rhs: Vec<Vec<Scalar>> = targets
        .iter()
        .map(|t| (0..m).map(|a| t.component(a)).collect())
        .collect();
    Ok(solve_linear_many(&mat, &rhs).0)
}

/// Coefficients `c` with `V = Σ c_k X_k` over all frame slots.
pub fn expand_in_frame(frame: &CRFrame, v: &VectorField) -> Result<Option<Vec<Scalar>>, VfError> {
    Ok(expand_in_span(&frame.fields, std::slice::from_ref(v))?
        .pop()
        .unwrap())
}

/// Batched [`expand_in_frame`].
pub fn expand_many_in_frame(
    frame: &CRFrame,
    vs: &[VectorField],
) -> Result<Vec<Option<Vec<Scalar>>>, VfError> {
    expand_in_span(&frame.fields, vs)
}

/// `Σ c_k X_k`.
pub fn recombine(basis: &[VectorField], coeffs: &[Scalar]) -> VectorField {
    let mut out = VectorField::zero(basis[0].chart());
    for (v, c) in basis.iter().zip(coeffs) {
        if !c.is_zero() {
            out = out.add(&v.scale(c)).expect("same chart");
        }
    }
    out
}
