use std::sync::{Arc, OnceLock};

use freecr_core::crverify::{nijenhuis_tensor, verify};
use freecr_core::exactfield::{solve_linear, Chart, Scalar, GQ};
use freecr_core::invariant::{
    assemble_p, compute_invariant, flatness_verdict, solve_normalization, trace_residual,
    InvariantError, StructureFunctions, Tensor,
};
use freecr_core::model::{deformed_frame, flat_frame};
use freecr_core::vfields::{build_frame, CRFrame, VectorField};
use proptest::prelude::*;

fn frame(fields: Vec<VectorField>) -> CRFrame {
    build_frame(fields, None).unwrap()
}

/// The n = 4 flat frame with `Z_1 += c·w̄_{12} ∂w_{34}` and
/// `Z_2 += d·w̄_{23} ∂w_{14}`.
fn twisted(c: GQ, d: GQ) -> Vec<VectorField> {
    let mut z = flat_frame(4).unwrap();
    let ch = z[0].chart().clone();
    let extra = |target: usize, source: usize, k: GQ| {
        VectorField::from_components(&ch, [(target, Scalar::var(source).scale(&k))])
    };
    z[0] = z[0].add(&extra(ch.w(2, 3).0, ch.wb(0, 1).0, c)).unwrap();
    z[1] = z[1].add(&extra(ch.w(0, 3).0, ch.wb(1, 2).0, d)).unwrap();
    z
}

fn entries(t: &Tensor) -> Vec<(Vec<usize>, Scalar)> {
    t.nonzero()
        .into_iter()
        .map(|(i, s)| (i, s.clone()))
        .collect()
}

#[test]
fn flat_frames_have_vanishing_invariants() {
    for n in 2..=4 {
        let f = frame(flat_frame(n).unwrap());
        let (sf, p) = compute_invariant(&f).unwrap();
        assert!(sf.rs_hol.is_zero(), "n={n}");
        assert!(p.p.is_zero() && p.coeffs.a.is_zero() && p.coeffs.b.is_zero());
        let nij = (n == 2).then(|| nijenhuis_tensor(&f).unwrap());
        assert!(flatness_verdict(&p, nij.as_ref()).unwrap().flat);
    }
}

#[test]
fn n2_verdict_needs_the_nijenhuis_tensor() {
    let f = frame(flat_frame(2).unwrap());
    let (_, p) = compute_invariant(&f).unwrap();
    assert!(matches!(
        flatness_verdict(&p, None),
        Err(InvariantError::MissingNijenhuis)
    ));
}

#[test]
fn deformed_curvature_is_constant_and_trace_free() {
    let f = frame(deformed_frame(4).unwrap());
    let (sf, p) = compute_invariant(&f).unwrap();
    assert!(p.p.is_constant());
    assert!(trace_residual(&p.p).is_none());
    // f^{r s̄}_{i j k̄} is symmetric in i, j.
    for idx in sf.rs_hol.indices() {
        let [r, s, i, j, k] = idx[..] else {
            unreachable!()
        };
        assert_eq!(sf.rs_hol.get(&idx), sf.rs_hol.get(&[r, s, j, i, k]));
    }
    let report = flatness_verdict(&p, None).unwrap();
    assert!(!report.flat);
    assert_eq!(report.p_entries.len(), 2);
}

#[test]
fn twisted_frame_keeps_both_deformations() {
    let c = GQ::from_parts(2, 1, 1, 1);
    let d = GQ::from_parts(0, 1, 3, 1);
    let f = frame(twisted(c.clone(), d.clone()));
    let r = verify(&f).unwrap();
    assert!(r.nondegenerate && r.totally_real && r.integrable);
    let (_, p) = compute_invariant(&f).unwrap();
    // Each deformation contributes one symmetric pair, with value −coefficient.
    let want = vec![
        (vec![0, 3, 1, 2, 1], Scalar::constant(-&d)),
        (vec![0, 3, 2, 1, 1], Scalar::constant(-&d)),
        (vec![2, 3, 0, 1, 0], Scalar::constant(-&c)),
        (vec![2, 3, 1, 0, 0], Scalar::constant(-&c)),
    ];
    assert_eq!(entries(&p.p), want);
}

#[test]
fn conjugate_frame_conjugates_p() {
    let base = twisted(GQ::from_parts(2, 1, 1, 1), GQ::from_parts(0, 1, 3, 1));
    let conj: Vec<VectorField> = base.iter().map(VectorField::conjugate).collect();
    let f = frame(base);
    let g = frame(conj);
    let (sf, p) = compute_invariant(&f).unwrap();
    let (sg, q) = compute_invariant(&g).unwrap();
    // With the Hermitian-skew storage of bracketed pairs, swapping the
    // roles of X_i and X_ī leaves every index in place.
    assert_eq!(sg.rs_hol, sf.rs_hol.conjugate(&sf.chart));
    assert_eq!(q.p, p.p.conjugate(&sf.chart));
    assert!(!q.p.is_zero());
}

/// Symmetric in `(r, s)` with both single contractions zero, as the
/// kernel of the constraint matrix at n = 3.
fn trace_free_basis() -> &'static Vec<Vec<GQ>> {
    static BASIS: OnceLock<Vec<Vec<GQ>>> = OnceLock::new();
    BASIS.get_or_init(|| {
        let n = 3;
        let at = |i: usize, j: usize, r: usize, s: usize, t: usize| {
            (((i * n + j) * n + r) * n + s) * n + t
        };
        let len = n.pow(5);
        let mut rows: Vec<Vec<GQ>> = Vec::new();
        let unit = |pairs: &[(usize, i64)]| {
            let mut row = vec![GQ::zero(); len];
            for &(k, v) in pairs {
                row[k] = &row[k] + &GQ::from_int(v);
            }
            row
        };
        for i in 0..n {
            for j in 0..n {
                for r in 0..n {
                    for s in r + 1..n {
                        for t in 0..n {
                            rows.push(unit(&[(at(i, j, r, s, t), 1), (at(i, j, s, r, t), -1)]));
                        }
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let over_j: Vec<(usize, i64)> =
                        (0..n).map(|j| (at(a, j, b, c, j), 1)).collect();
                    let over_i: Vec<(usize, i64)> =
                        (0..n).map(|i| (at(i, a, i, b, c), 1)).collect();
                    rows.push(unit(&over_j));
                    rows.push(unit(&over_i));
                }
            }
        }
        let zero = vec![GQ::zero(); rows.len()];
        solve_linear(&rows, &zero).kernel
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn trace_free_input_needs_no_correction(
        seed in prop::collection::vec((-3i64..=3, -3i64..=3), 128)
    ) {
        let n = 3;
        let basis = trace_free_basis();
        let mut f = Tensor::zeros(n, 5);
        for (k, (v, (re, im))) in basis.iter().zip(seed.iter().cycle()).enumerate() {
            // Sparse combinations keep the check independent of any one basis vector.
            if k % 3 != 0 && (re + im) % 2 == 0 {
                continue;
            }
            let c = GQ::from_parts(*re, 1, *im, 1);
            for (idx, x) in f.indices().collect::<Vec<_>>().into_iter().zip(v) {
                if !x.is_zero() {
                    let cur = f.get(&idx).clone();
                    f.set(&idx, cur.add(&Scalar::constant(&c * x)));
                }
            }
        }
        let mut sf = StructureFunctions::zero(n, Arc::new(Chart::standard(n)));
        sf.rs_hol = f.clone();
        let co = solve_normalization(&sf).unwrap();
        prop_assert!(co.a.is_zero() && co.b.is_zero() && co.c.is_zero());
        let p = assemble_p(&sf, &co).unwrap();
        prop_assert_eq!(p.p, f);
    }
}

#[test]
fn trace_free_space_has_the_expected_dimension() {
    // Symmetric tensors: 3·3·6·3 = 162. The contraction over j = t is
    // symmetric in (r, s), so 18 conditions; the one over i = r gives 27;
    // they share the 3 double traces. 162 − 42 = 120.
    assert_eq!(trace_free_basis().len(), 120);
}
