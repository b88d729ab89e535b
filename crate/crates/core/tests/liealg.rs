use freecr_core::exactfield::GQ;
use freecr_core::liealg::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn grading_jacobi_and_bracket_n2() {
    let alg = build_algebra(2);
    assert!(check_grading(&alg).is_empty());
    assert!(check_jacobi_all(&alg).is_empty());
    assert!(check_minus1_bracket(&alg).is_empty());
}

#[test]
fn sampled_jacobi_n3() {
    let alg = build_algebra(3);
    assert_eq!(alg.dim(), 48);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    assert!(check_jacobi_sampled(&alg, 300, &mut rng).is_empty());
    assert!(check_grading(&alg).is_empty());
}

#[test]
fn decomposition_sums_back() {
    let alg = build_algebra(2);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let c: Vec<_> = (0..alg.dim())
        .map(|_| num_rational::BigRational::from_integer(rng.gen_range(-4..=4).into()))
        .collect();
    let m = alg.from_coords(&c);
    assert!(alg.contains(&m));
    let d = alg.decompose(&m);
    assert_eq!(d.sum(), m);
    assert_eq!(alg.coords(&m).unwrap(), c);
    for g in [-2, 2] {
        let b = d.grade(g);
        let s = if g < 0 {
            b.block(3, 0, 2, 2)
        } else {
            b.block(0, 3, 2, 2)
        };
        assert_eq!(s.adjoint(), s.neg());
    }
}

#[test]
fn killing_pairing_is_nondegenerate() {
    for n in 2..=3 {
        assert_eq!(killing_pairing_rank(&build_algebra(n)), 2 * n);
    }
}

#[test]
fn center_is_the_trace_line() {
    for n in 2..=3 {
        let c = center_check(&build_algebra(n));
        assert!(c.passed(n), "{c:?}");
    }
}

#[test]
fn full_suite_n2() {
    let r = verify_algebra(2, 1);
    assert!(r.passed(), "{r:?}");
    assert!(r.jacobi_exhaustive);
    assert_eq!(r.grade_dims, vec![(-2, 4), (-1, 4), (0, 8), (1, 4), (2, 4)]);
}

#[test]
fn lemma2_n3() {
    let r = lemma2_check(3);
    assert!(r.passed());
    assert_eq!(r.real_dim, 2);
    assert_eq!(r.lambdas.len(), 2);
}

#[test]
fn codifferential_is_g0_equivariant() {
    let n = 2;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..10 {
        let a = random_block_diagonal(n, &mut rng);
        assert!(is_block_diagonal(n, &a));
        let phi = random_cochain(n, 6, &mut rng);
        let lhs = codifferential(&act_g0_on_2(&a, &phi)).normalized();
        let rhs = act_g0_on_1(&a, &codifferential(&phi)).normalized();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn codifferential_is_linear() {
    let n = 2;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let p = random_cochain(n, 6, &mut rng);
    let q = random_cochain(n, 6, &mut rng);
    let mut sum = p.clone();
    for (&(a, b), m) in &q.values {
        sum.add_term(a, b, m.clone());
    }
    let mut expect = codifferential(&p);
    for (k, m) in codifferential(&q).values {
        let e = expect.values.entry(k).or_insert_with(|| Mat::zeros(5, 5));
        *e = e.add(&m);
    }
    assert_eq!(codifferential(&sum), expect.normalized());
}

#[test]
fn trace_free_tensors_are_coclosed() {
    let n = 2;
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..5 {
        let p = random_trace_free(n, &mut rng);
        let phi = p_cochain(n, |i, j, r, s, t| p[p_index(n, i, j, r, s, t)].clone());
        assert!(codifferential(&phi).is_zero());
        assert!(kappa11_project(&phi).is_zero());
    }
}

#[test]
fn a_traceful_tensor_is_not_coclosed() {
    let n = 2;
    let phi = p_cochain(n, |i, j, r, s, t| {
        if i == r && j == t && r == s {
            GQ::one()
        } else {
            GQ::zero()
        }
    });
    assert!(!codifferential(&phi).is_zero());
}
