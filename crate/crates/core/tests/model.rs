use freecr_core::crverify::verify;
use freecr_core::exactfield::{Scalar, GQ};
use freecr_core::liealg::{build_algebra, p_cochain, Cochain2, Mat};
use freecr_core::model::{
    adapted_basis, deformed_frame, fefferman_embed, fefferman_verify, fefferman_verify_with,
    flat_frame, in_target, kappa11_project, quadric_action_check, random_isotropic_plane,
    AlphaReading, GroupPart, IsotropicPlane, ModelError,
};
use freecr_core::vfields::{build_frame, VectorField};
use num_traits::Signed;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// `u*𝕁v` with `𝕁` written out: `e_k ↔ e_{n+1+k}` and 1 in the middle.
fn gram(n: usize, u: &[GQ], v: &[GQ]) -> GQ {
    let mut acc = GQ::zero();
    for k in 0..n {
        acc = &acc + &(&u[k].conj() * &v[n + 1 + k]);
        acc = &acc + &(&u[n + 1 + k].conj() * &v[k]);
    }
    &acc + &(&u[n].conj() * &v[n])
}

#[test]
fn first_flat_field_at_n2() {
    let z = flat_frame(2).unwrap();
    let c = z[0].chart().clone();
    let want = VectorField::from_components(
        &c,
        [
            (c.z(0), Scalar::one()),
            (c.w(0, 0).0, Scalar::var(c.zb(0)).neg()),
            (c.w(0, 1).0, Scalar::var(c.zb(1)).neg()),
        ],
    );
    assert_eq!(z[0], want);
}

#[test]
fn dimensions_below_the_minimum_are_rejected() {
    assert!(matches!(
        flat_frame(1),
        Err(ModelError::UnsupportedDimension { .. })
    ));
    assert!(matches!(
        deformed_frame(3),
        Err(ModelError::UnsupportedDimension { .. })
    ));
}

#[test]
fn deformation_only_moves_levi_brackets_along_w34_and_its_conjugate() {
    let z = flat_frame(4).unwrap();
    let d = deformed_frame(4).unwrap();
    let c = z[0].chart().clone();
    for j in 0..4 {
        assert!(d[0].bracket(&d[j]).unwrap().is_zero());
        let diff = d[0]
            .bracket(&d[j].conjugate())
            .unwrap()
            .sub(&z[0].bracket(&z[j].conjugate()).unwrap())
            .unwrap();
        let allowed = [c.w(2, 3).0, c.wb(2, 3).0];
        assert!(
            diff.components().all(|(a, _)| allowed.contains(&a)),
            "j={j}"
        );
    }
}

#[test]
fn model_frames_are_free_cr() {
    for n in 2..=4 {
        let r = verify(&build_frame(flat_frame(n).unwrap(), None).unwrap()).unwrap();
        assert!(r.nondegenerate && r.totally_real && r.integrable);
    }
    let r = verify(&build_frame(deformed_frame(4).unwrap(), None).unwrap()).unwrap();
    assert!(r.nondegenerate && r.totally_real && r.integrable);
}

#[test]
fn quadric_is_preserved_by_the_group_action() {
    for which in [GroupPart::G1, GroupPart::G2] {
        let q = quadric_action_check(2, which).unwrap();
        assert!(q.preserved && q.identity_at_zero, "{which:?}");
        assert_eq!(q.residual_terms, 0);
    }
}

#[test]
fn standard_plane_gets_the_standard_basis() {
    for n in 2..=3 {
        let b = adapted_basis(&IsotropicPlane::standard(n)).unwrap();
        assert_eq!(b.matrix(), Mat::identity(2 * n + 1));
        assert_eq!(b.norm, num_rational::BigRational::from_integer(1.into()));
    }
}

#[test]
fn a_non_isotropic_plane_is_rejected() {
    let n = 2;
    let mut e1 = vec![GQ::zero(); 5];
    e1[0] = GQ::one();
    let mut e4 = vec![GQ::zero(); 5];
    e4[3] = GQ::one();
    assert!(matches!(
        IsotropicPlane::new(n, vec![e1, e4]),
        Err(ModelError::DegenerateInput(_))
    ));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn adapted_bases_satisfy_the_gram_relations(seed in any::<u64>(), n in 2usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let plane = random_isotropic_plane(n, &mut rng);
        let b = adapted_basis(&plane).unwrap();
        prop_assert!(b.norm.is_positive());
        for i in 0..n {
            prop_assert!(gram(n, &b.w_last, &b.v[i]).is_zero());
            prop_assert!(gram(n, &b.w_last, &b.w[i]).is_zero());
            for j in 0..n {
                prop_assert!(gram(n, &b.v[i], &b.v[j]).is_zero());
                prop_assert!(gram(n, &b.w[i], &b.w[j]).is_zero());
                let want = if i == j { GQ::one() } else { GQ::zero() };
                prop_assert_eq!(gram(n, &b.v[i], &b.w[j]), want);
            }
        }
        prop_assert_eq!(gram(n, &b.w_last, &b.w_last), GQ::from_rational(b.norm.clone()));
        prop_assert!(b.gram_holds());
    }

    #[test]
    fn embedding_is_a_homomorphism_on_combinations(
        cx in prop::collection::vec(-2i64..=2, 24),
        cy in prop::collection::vec(-2i64..=2, 24),
    ) {
        let alg = build_algebra(2);
        let combo = |c: &[i64]| {
            alg.basis.iter().zip(c).fold(Mat::zeros(5, 5), |acc, (e, &k)| {
                acc.add(&e.m.scale(&GQ::from_int(k)))
            })
        };
        let (x, y) = (combo(&cx), combo(&cy));
        let lhs = fefferman_embed(2, &x.commutator(&y));
        let rhs = fefferman_embed(2, &x).commutator(&fefferman_embed(2, &y));
        prop_assert_eq!(lhs, rhs);
        prop_assert!(in_target(2, &fefferman_embed(2, &x)));
    }
}

#[test]
fn embedding_checks_pass_only_for_the_half_reading() {
    for n in 2..=3 {
        let alg = build_algebra(n);
        let r = fefferman_verify(&alg);
        assert!(r.passed(), "n={n}: {r:?}");
        assert!(r.injective && r.grade_compatible);
        assert!(!fefferman_verify_with(&alg, AlphaReading::Full).passed());
    }
    assert!(fefferman_embed(2, &Mat::zeros(5, 5)).is_zero());
}

#[test]
fn kappa11_projection() {
    let n = 2;
    let sz = 2 * n + 1;
    let m = Mat::unit(sz, n + 1, 0, GQ::one());
    let mut phi = Cochain2::zero(n);
    phi.add_term(0, 1, m.clone());
    phi.add_term(1, 2 * n, m.clone());
    phi.add_term(n, 2 * n + 3, m.clone());
    let once = kappa11_project(&phi);
    assert_eq!(kappa11_project(&once), once);
    assert_eq!(once.get(0, 1), m);
    assert!(once.get(1, 2 * n).is_zero() && once.get(n, 2 * n + 3).is_zero());
    // A cochain of type Hom(g₋₁ ⊗ g₋₂, g₋₂) has no (1,1) part.
    let p = p_cochain(n, |i, j, r, s, t| {
        GQ::from_int((i + 2 * j + 3 * r + s * t) as i64 % 3 - 1)
    });
    assert!(!p.is_zero());
    assert!(kappa11_project(&p).is_zero());
}
