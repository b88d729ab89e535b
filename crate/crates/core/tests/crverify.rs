use std::sync::Arc;

use freecr_core::crverify::{check_integrability, check_totally_real, nijenhuis_tensor, verify};
use freecr_core::exactfield::{Chart, Scalar, GQ};
use freecr_core::model::{deformed_frame, flat_frame};
use freecr_core::vfields::{build_frame, expand_in_frame, CRFrame, Slot, VectorField};
use proptest::prelude::*;

fn gq() -> impl Strategy<Value = GQ> {
    (-3i64..=3, -3i64..=3).prop_map(|(a, b)| GQ::from_parts(a, 1, b, 1))
}

fn constant() -> impl Strategy<Value = Scalar> {
    prop_oneof![Just(Scalar::zero()), gq().prop_map(Scalar::constant)]
}

/// Four constant coefficients, one of which also gets a `c·x` term with `x`
/// among `z1, z2, zb1, zb2`. Exact elimination on the 8×8 frame matrix
/// grows quickly with the number of non-constant entries.
fn perturbation() -> impl Strategy<Value = [Scalar; 4]> {
    (
        [constant(), constant(), constant(), constant()],
        0usize..4,
        gq(),
        0usize..4,
    )
        .prop_map(|(mut c, k, a, v)| {
            c[k] = c[k].add(&Scalar::var(v).scale(&a));
            c
        })
}

/// `X_1 = Z_1 + a Z̄_1 + b Z̄_2`, `X_2 = Z_2 + c Z̄_1 + d Z̄_2` over the flat frame.
fn perturbed(coeffs: &[Scalar; 4]) -> Vec<VectorField> {
    let z = flat_frame(2).unwrap();
    let zb: Vec<VectorField> = z.iter().map(VectorField::conjugate).collect();
    let x1 = z[0]
        .add(&zb[0].scale(&coeffs[0]))
        .unwrap()
        .add(&zb[1].scale(&coeffs[1]))
        .unwrap();
    let x2 = z[1]
        .add(&zb[0].scale(&coeffs[2]))
        .unwrap()
        .add(&zb[1].scale(&coeffs[3]))
        .unwrap();
    vec![x1, x2]
}

/// `X'_1 = g0 X_1 + (g2 + h) X_2`, `X'_2 = g1 X_1 + g3 X_2`.
fn change(x: &[VectorField], g: &[GQ; 4], h: &Scalar) -> Vec<VectorField> {
    let a = |c: &GQ| Scalar::constant(c.clone());
    let y1 = x[0]
        .scale(&a(&g[0]))
        .add(&x[1].scale(&a(&g[2]).add(h)))
        .unwrap();
    let y2 = x[0].scale(&a(&g[1])).add(&x[1].scale(&a(&g[3]))).unwrap();
    vec![y1, y2]
}

fn frame_of(fields: Vec<VectorField>) -> Option<CRFrame> {
    build_frame(fields, None).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn totally_real_survives_frame_changes(c in perturbation(), g in [gq(), gq(), gq(), gq()]) {
        let fields = perturbed(&c);
        let Some(frame) = frame_of(fields.clone()) else { return Ok(()) };
        let det = &(&g[0] * &g[3]) - &(&g[1] * &g[2]);
        prop_assume!(!det.is_zero());
        let changed = frame_of(change(&fields, &g, &Scalar::zero())).unwrap();
        prop_assert_eq!(
            check_totally_real(&frame).unwrap().0,
            check_totally_real(&changed).unwrap().0
        );
    }

    #[test]
    fn flat_frame_stays_totally_real_under_variable_changes(
        g in [gq(), gq(), gq(), gq()],
        h in gq(),
        v in 0usize..4,
    ) {
        let det = &(&g[0] * &g[3]) - &(&g[1] * &g[2]);
        prop_assume!(!det.is_zero());
        // The extra h·x vanishes at the origin, so the change stays invertible there.
        let fields = flat_frame(2).unwrap();
        let changed = frame_of(change(&fields, &g, &Scalar::var(v).scale(&h))).unwrap();
        prop_assert!(check_totally_real(&changed).unwrap().0);
    }

    #[test]
    fn nijenhuis_vanishes_iff_integrable(c in perturbation()) {
        let Some(frame) = frame_of(perturbed(&c)) else { return Ok(()) };
        let integrable = check_integrability(&frame).unwrap().0;
        let totally_real = check_totally_real(&frame).unwrap().0;
        let n = nijenhuis_tensor(&frame).unwrap();
        let zero = n.iter().flatten().flatten().all(Scalar::is_zero);
        if !zero {
            prop_assert!(!integrable);
        }
        // N only sees the D^{0,1} part of [X_i, X_j]; a Levi part is caught
        // by the totally real check instead.
        prop_assert_eq!(integrable, zero && totally_real);
    }

    #[test]
    fn holomorphic_changes_stay_integrable(f in constant(), v in 0usize..4, a in gq()) {
        // X_1 + φ X_2 with φ = f + a·x.
        let z = flat_frame(2).unwrap();
        let phi = f.add(&Scalar::var(v).scale(&a));
        let x1 = z[0].add(&z[1].scale(&phi)).unwrap();
        let frame = frame_of(vec![x1, z[1].clone()]).unwrap();
        prop_assert!(check_integrability(&frame).unwrap().0);
        let n = nijenhuis_tensor(&frame).unwrap();
        prop_assert!(n.iter().flatten().flatten().all(Scalar::is_zero));
    }
}

/// `N(X, Y) = [X,Y] − [JX,JY] + J([JX,Y] + [X,JY])` on the real fields
/// `X = X_1 + X̄_1`, `Y = X_2 + X̄_2`, with `J` read off the frame
/// expansion (`i` on holomorphic slots, `−i` on antiholomorphic ones, 0 on
/// the Levi slots). Returns the antiholomorphic coefficients.
fn nijenhuis_oracle(frame: &CRFrame) -> Vec<Scalar> {
    let n = frame.n();
    let j = |v: &VectorField| -> VectorField {
        let c = expand_in_frame(frame, v).unwrap().expect("in span");
        let mut out = VectorField::zero(frame.chart());
        for (k, x) in c.iter().enumerate() {
            let f = match Slot::from_index(k, n) {
                Slot::Holo(_) => Scalar::i(),
                Slot::Anti(_) => Scalar::i().neg(),
                Slot::Levi(..) => continue,
            };
            out = out.add(&frame.fields()[k].scale(&x.mul(&f))).unwrap();
        }
        out
    };
    let x = frame.holo(0).add(frame.anti(0)).unwrap();
    let y = frame.holo(1).add(frame.anti(1)).unwrap();
    let (jx, jy) = (j(&x), j(&y));
    let br = |a: &VectorField, b: &VectorField| a.bracket(b).unwrap();
    let inner = br(&jx, &y).add(&br(&x, &jy)).unwrap();
    let nxy = br(&x, &y)
        .sub(&br(&jx, &jy))
        .unwrap()
        .add(&j(&inner))
        .unwrap();
    let c = expand_in_frame(frame, &nxy).unwrap().unwrap();
    (0..n).map(|k| c[Slot::Anti(k).index(n)].clone()).collect()
}

#[test]
fn nijenhuis_matches_the_defining_formula() {
    let chart = flat_frame(2).unwrap()[0].chart().clone();
    // X_2 = Z_2 + 3 z1 Z̄_1, so [X_1, X_2] has X̄_1 coefficient 3.
    let c = [
        Scalar::zero(),
        Scalar::zero(),
        Scalar::var(chart.z(0)).scale(&GQ::from_int(3)),
        Scalar::zero(),
    ];
    let frame = frame_of(perturbed(&c)).unwrap();
    let n = nijenhuis_tensor(&frame).unwrap();
    assert_eq!(n[0][1], nijenhuis_oracle(&frame));
    assert_eq!(n[0][1][0], Scalar::int(12));
    assert_eq!(n[1][0][0], Scalar::int(-12));
    assert!(!check_integrability(&frame).unwrap().0);
}

#[test]
fn mixing_in_a_holomorphic_field_keeps_the_structure() {
    // X_1 + z̄_1 X_2: the bracket with X_2 is −X_2(z̄_1) X_2 = 0.
    let z = flat_frame(2).unwrap();
    let chart = z[0].chart().clone();
    let x1 = z[0].add(&z[1].scale(&Scalar::var(chart.zb(0)))).unwrap();
    let direct = x1.bracket(&z[1]).unwrap();
    assert!(direct.is_zero());
    let frame = build_frame(vec![x1, z[1].clone()], None).unwrap();
    let r = verify(&frame).unwrap();
    assert!(r.totally_real && r.integrable && r.witnesses.is_empty());
}

#[test]
fn conjugate_direction_breaks_integrability() {
    // X_1 = Z_1 + z2 Z̄_2, so [X_1, Z_2] = −Z̄_2 − z2 [Z_2, Z̄_2].
    let z = flat_frame(2).unwrap();
    let chart: Arc<Chart> = z[0].chart().clone();
    let coef = Scalar::var(chart.z(1));
    let x1 = z[0].add(&z[1].conjugate().scale(&coef)).unwrap();
    let br = x1.bracket(&z[1]).unwrap();
    let frame = build_frame(vec![x1, z[1].clone()], None).unwrap();
    let (ok, w) = check_integrability(&frame).unwrap();
    assert_eq!(ok, br.is_zero());
    assert!(!ok);
    assert_eq!((w[0].i, w[0].j), (0, 1));
    let e = expand_in_frame(&frame, &br).unwrap().unwrap();
    assert_eq!(e[Slot::Anti(1).index(2)], Scalar::int(-1));
}

#[test]
fn model_frames_pass_every_check() {
    for n in 2..=4 {
        let frame = build_frame(flat_frame(n).unwrap(), None).unwrap();
        let r = verify(&frame).unwrap();
        assert!(
            r.nondegenerate && r.totally_real && r.integrable,
            "flat n={n}"
        );
    }
    let frame = build_frame(deformed_frame(4).unwrap(), None).unwrap();
    let r = verify(&frame).unwrap();
    assert!(r.nondegenerate && r.totally_real && r.integrable);
}

#[test]
fn flat_nijenhuis_is_zero() {
    let frame = build_frame(flat_frame(2).unwrap(), None).unwrap();
    let n = nijenhuis_tensor(&frame).unwrap();
    assert!(n.iter().flatten().flatten().all(Scalar::is_zero));
    let frame3 = build_frame(flat_frame(3).unwrap(), None).unwrap();
    assert!(nijenhuis_tensor(&frame3).is_err());
}
