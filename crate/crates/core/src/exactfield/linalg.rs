use super::gaussian::GQ;
use super::scalar::Scalar;

/// The operations Gauss-Jordan elimination needs from a coefficient field.
pub trait Field: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    /// Panics on a zero divisor; elimination never divides by zero.
    fn div(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Pivot cost. Zero means a nonzero constant.
    fn weight(&self) -> usize;
}

impl Field for GQ {
    fn zero() -> Self {
        GQ::zero()
    }
    fn one() -> Self {
        GQ::one()
    }
    fn is_zero(&self) -> bool {
        GQ::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn weight(&self) -> usize {
        0
    }
}

impl Field for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        Scalar::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        Scalar::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Scalar::mul(self, o)
    }
    fn div(&self, o: &Self) -> Self {
        Scalar::div(self, o).expect("nonzero pivot")
    }
    fn neg(&self) -> Self {
        Scalar::neg(self)
    }
    fn weight(&self) -> usize {
        Scalar::weight(self)
    }
}

pub type Matrix<F> = Vec<Vec<F>>;

/// Outcome of solving `M x = b`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearSolution<F> {
    /// One solution with all free variables set to zero, or `None` when the
    /// system is inconsistent.
    pub particular: Option<Vec<F>>,
    /// A basis of `ker M`.
    pub kernel: Vec<Vec<F>>,
}

impl<F> LinearSolution<F> {
    pub fn is_consistent(&self) -> bool {
        self.particular.is_some()
    }
}

struct Reduced<F> {
    /// Rows in reduced echelon form with unit pivots, rhs columns appended.
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

/// Gauss-Jordan over the fraction field. Rows with a zero in the pivot
/// column are left alone, which keeps sparse frame matrices cheap.
fn reduce<F: Field>(mut rows: Vec<Vec<F>>, ncols: usize) -> Reduced<F> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len())
            .filter(|&k| !rows[k][c].is_zero())
            .min_by_key(|&k| rows[k][c].weight())
        else {
            continue;
        };
        rows.swap(r, p);
        let piv = rows[r][c].clone();
        if piv != F::one() {
            for x in rows[r].iter_mut() {
                if !x.is_zero() {
                    *x = x.div(&piv);
                }
            }
        }
        let prow = rows[r].clone();
        for (k, row) in rows.iter_mut().enumerate() {
            if k == r || row[c].is_zero() {
                continue;
            }
            let a = row[c].clone();
            for (x, y) in row.iter_mut().zip(&prow) {
                if !y.is_zero() {
                    *x = x.sub(&a.mul(y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Reduced { rows, pivots }
}

fn kernel_of<F: Field>(red: &Reduced<F>, ncols: usize) -> Vec<Vec<F>> {
    let mut out = Vec::new();
    for f in (0..ncols).filter(|c| !red.pivots.contains(c)) {
        let mut v = vec![F::zero(); ncols];
        v[f] = F::one();
        for (r, &c) in red.pivots.iter().enumerate() {
            v[c] = red.rows[r][f].neg();
        }
        out.push(v);
    }
    out
}

/// Solve `M x = rhs` exactly.
pub fn solve_linear<F: Field>(m: &[Vec<F>], rhs: &[F]) -> LinearSolution<F> {
    let cols: Vec<Vec<F>> = vec![rhs.to_vec()];
    let (mut parts, kernel) = solve_linear_many(m, &cols);
    LinearSolution {
        particular: parts.pop().unwrap(),
        kernel,
    }
}

/// Solve `M x = b` for several right-hand sides with one elimination.
/// Returns one entry per rhs (`None` if inconsistent) and a basis of `ker M`.
pub fn solve_linear_many<F: Field>(
    m: &[Vec<F>],
    rhs: &[Vec<F>],
) -> (Vec<Option<Vec<F>>>, Vec<Vec<F>>) {
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    for b in rhs {
        assert_eq!(b.len(), nrows, "rhs length must match the row count");
    }
    let rows: Vec<Vec<F>> = (0..nrows)
        .map(|i| {
            let mut row = m[i].clone();
            assert_eq!(row.len(), ncols, "ragged matrix");
            row.extend(rhs.iter().map(|b| b[i].clone()));
            row
        })
        .collect();
    let red = reduce(rows, ncols);
    let rank = red.pivots.len();
    let mut sols = Vec::with_capacity(rhs.len());
    for j in 0..rhs.len() {
        let col = ncols + j;
        if red.rows[rank..].iter().any(|row| !row[col].is_zero()) {
            sols.push(None);
            continue;
        }
        let mut x = vec![F::zero(); ncols];
        for (r, &c) in red.pivots.iter().enumerate() {
            x[c] = red.rows[r][col].clone();
        }
        sols.push(Some(x));
    }
    (sols, kernel_of(&red, ncols))
}

pub fn rank<F: Field>(m: &[Vec<F>]) -> usize {
    let ncols = m.first().map_or(0, |r| r.len());
    reduce(m.to_vec(), ncols).pivots.len()
}

pub fn mat_vec<F: Field>(m: &[Vec<F>], x: &[F]) -> Vec<F> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(x)
                .fold(F::zero(), |acc, (a, b)| acc.add(&a.mul(b)))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::Chart;

    #[test]
    fn identity_system() {
        let id = vec![vec![GQ::one(), GQ::zero()], vec![GQ::zero(), GQ::one()]];
        let s = solve_linear(&id, &[GQ::one(), GQ::zero()]);
        assert_eq!(s.particular.unwrap(), vec![GQ::one(), GQ::zero()]);
        assert!(s.kernel.is_empty());
    }

    #[test]
    fn symbolic_diagonal() {
        let c = Chart::standard(1);
        let z = Scalar::var(c.z(0));
        let m = vec![
            vec![z.clone(), Scalar::zero()],
            vec![Scalar::zero(), Scalar::one()],
        ];
        let s = solve_linear(&m, &[z.mul(&z), Scalar::zero()]);
        assert_eq!(s.particular.unwrap(), vec![z, Scalar::zero()]);
    }

    #[test]
    fn inconsistent_and_kernel() {
        let m = vec![
            vec![GQ::one(), GQ::from_int(2)],
            vec![GQ::from_int(2), GQ::from_int(4)],
        ];
        let s = solve_linear(&m, &[GQ::one(), GQ::zero()]);
        assert!(s.particular.is_none());
        assert_eq!(s.kernel, vec![vec![GQ::from_int(-2), GQ::one()]]);
        assert_eq!(rank(&m), 1);
    }

    #[test]
    fn symbolic_pivots() {
        let c = Chart::standard(2);
        let x = Scalar::var(c.z(0));
        let y = Scalar::var(c.zb(1));
        let m = vec![
            vec![x.clone(), y.clone(), Scalar::one()],
            vec![y.clone(), x.clone(), Scalar::int(2)],
            vec![Scalar::one(), x.mul(&y), y.clone()],
        ];
        let b = vec![Scalar::one(), x.clone(), Scalar::zero()];
        let s = solve_linear(&m, &b);
        let sol = s.particular.unwrap();
        assert_eq!(mat_vec(&m, &sol), b);
        assert!(s.kernel.is_empty());
    }
}
