//! The full algebra verification suite and its random inputs.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::exactfield::{solve_linear, GQ};

use super::algebra::{block_of, build_algebra};
use super::checks::{
    center_check, check_grading, check_jacobi_all, check_jacobi_sampled, check_minus1_bracket,
    killing_pairing_rank, CenterCheck, Failure,
};
use super::cochain::{
    act_g0_on_1, act_g0_on_2, codifferential, kappa11_project, p_cochain, p_plus_dim, Cochain2,
};
use super::lemma2::{lemma2_check, Lemma2Record};
use super::matrix::Mat;

/// Jacobi is exhaustive up to this dimension of the algebra, sampled above.
const JACOBI_EXHAUSTIVE_MAX_DIM: usize = 24;
const JACOBI_SAMPLES: usize = 2000;
const RANDOM_TRIALS: usize = 5;

#[derive(Clone, Debug)]
pub struct AlgebraReport {
    pub n: usize,
    pub dim: usize,
    pub grade_dims: Vec<(i32, usize)>,
    pub grading_failures: Vec<Failure>,
    pub jacobi_exhaustive: bool,
    pub jacobi_triples: usize,
    pub jacobi_failures: Vec<Failure>,
    pub bracket_failures: Vec<Failure>,
    pub killing_rank: usize,
    pub center: CenterCheck,
    pub lemma2: Lemma2Record,
    pub codiff_trivial_ok: bool,
    pub codiff_equivariant_trials: usize,
    pub codiff_equivariant_ok: bool,
    pub trace_free_coclosed_ok: bool,
}

impl AlgebraReport {
    pub fn passed(&self) -> bool {
        self.grading_failures.is_empty()
            && self.jacobi_failures.is_empty()
            && self.bracket_failures.is_empty()
            && self.killing_rank == 2 * self.n
            && self.center.passed(self.n)
            && self.lemma2.passed()
            && self.codiff_trivial_ok
            && self.codiff_equivariant_ok
            && self.trace_free_coclosed_ok
    }
}

pub fn small_gq(rng: &mut impl Rng) -> GQ {
    GQ::from_parts(rng.gen_range(-3..=3), 1, rng.gen_range(-3..=3), 1)
}

/// A random element of `g₀ ⊗ ℂ ⊕ ℂ·I`, i.e. a block diagonal matrix.
pub fn random_block_diagonal(n: usize, rng: &mut impl Rng) -> Mat {
    let sz = 2 * n + 1;
    let mut a = Mat::zeros(sz, sz);
    for p in 0..sz {
        for q in 0..sz {
            if block_of(n, p) == block_of(n, q) {
                a.set(p, q, small_gq(rng));
            }
        }
    }
    a
}

/// A sparse random 2-cochain with `terms` components.
pub fn random_cochain(n: usize, terms: usize, rng: &mut impl Rng) -> Cochain2 {
    let sz = 2 * n + 1;
    let mut phi = Cochain2::zero(n);
    for _ in 0..terms {
        let a = rng.gen_range(0..p_plus_dim(n));
        let b = rng.gen_range(0..p_plus_dim(n));
        let mut x = Mat::zeros(sz, sz);
        for _ in 0..3 {
            x.set(rng.gen_range(0..sz), rng.gen_range(0..sz), small_gq(rng));
        }
        phi.add_term(a, b, x);
    }
    phi
}

/// Flat index of `P^{ij̄}_{rst̄}` in a length-`n⁵` vector.
pub fn p_index(n: usize, i: usize, j: usize, r: usize, s: usize, t: usize) -> usize {
    (((i * n + j) * n + r) * n + s) * n + t
}

/// A random tensor symmetric in `r, s` with `Σ_j P^{ij̄}_{rsj̄} = 0` and
/// `Σ_i P^{ij̄}_{ist̄} = 0`, as a random combination of a kernel basis.
pub fn random_trace_free(n: usize, rng: &mut impl Rng) -> Vec<GQ> {
    let idx = |i, j, r, s, t| p_index(n, i, j, r, s, t);
    let unknowns = n.pow(5);
    let mut rows = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let mut row = vec![GQ::zero(); unknowns];
                for j in 0..n {
                    row[idx(c, j, a, b, j)] = GQ::one();
                }
                rows.push(row);
                let mut row = vec![GQ::zero(); unknowns];
                for i in 0..n {
                    row[idx(i, c, i, a, b)] = GQ::one();
                }
                rows.push(row);
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for r in 0..n {
                for s in r + 1..n {
                    for t in 0..n {
                        let mut row = vec![GQ::zero(); unknowns];
                        row[idx(i, j, r, s, t)] = GQ::one();
                        row[idx(i, j, s, r, t)] = -GQ::one();
                        rows.push(row);
                    }
                }
            }
        }
    }
    let sol = solve_linear(&rows, &vec![GQ::zero(); rows.len()]);
    let mut out = vec![GQ::zero(); unknowns];
    for v in sol.kernel {
        let c = small_gq(rng);
        for (o, x) in out.iter_mut().zip(v) {
            *o += &(&c * &x);
        }
    }
    out
}

pub fn verify_algebra(n: usize, seed: u64) -> AlgebraReport {
    let alg = build_algebra(n);
    let mut rng = StdRng::seed_from_u64(seed);
    let grade_dims = super::algebra::GRADES
        .iter()
        .map(|&g| (g, alg.basis_of_grade(g).count()))
        .collect();
    let d = alg.dim();
    let jacobi_exhaustive = d <= JACOBI_EXHAUSTIVE_MAX_DIM;
    let (jacobi_failures, jacobi_triples) = if jacobi_exhaustive {
        (check_jacobi_all(&alg), d * (d - 1) * (d - 2) / 6)
    } else {
        (
            check_jacobi_sampled(&alg, JACOBI_SAMPLES, &mut rng),
            JACOBI_SAMPLES,
        )
    };

    let sz = alg.size();
    let mut trivial = Cochain2::zero(n);
    // Z_0 = E_{0,n} and Z_1 = E_{1,n} commute with each other and with E_{n+1,2n}.
    trivial.add_term(0, 1, Mat::unit(sz, n + 1, 2 * n, GQ::one()));
    let codiff_trivial_ok = codifferential(&trivial).is_zero();

    let mut codiff_equivariant_ok = true;
    for _ in 0..RANDOM_TRIALS {
        let a = random_block_diagonal(n, &mut rng);
        let phi = random_cochain(n, 6, &mut rng);
        let lhs = codifferential(&act_g0_on_2(&a, &phi));
        let rhs = act_g0_on_1(&a, &codifferential(&phi));
        codiff_equivariant_ok &= lhs.normalized() == rhs.normalized();
    }

    let mut trace_free_coclosed_ok = true;
    for _ in 0..RANDOM_TRIALS.min(2) {
        let p = random_trace_free(n, &mut rng);
        let phi = p_cochain(n, |i, j, r, s, t| p[p_index(n, i, j, r, s, t)].clone());
        trace_free_coclosed_ok &= codifferential(&phi).is_zero() && kappa11_project(&phi).is_zero();
    }

    AlgebraReport {
        n,
        dim: d,
        grade_dims,
        grading_failures: check_grading(&alg),
        jacobi_exhaustive,
        jacobi_triples,
        jacobi_failures,
        bracket_failures: check_minus1_bracket(&alg),
        killing_rank: killing_pairing_rank(&alg),
        center: center_check(&alg),
        lemma2: lemma2_check(n),
        codiff_trivial_ok,
        codiff_equivariant_trials: RANDOM_TRIALS,
        codiff_equivariant_ok,
        trace_free_coclosed_ok,
    }
}
