use freecr_core::exactfield::{parse_scalar, rank, solve_linear, Chart, Poly, Scalar, GQ};
use proptest::prelude::*;

fn chart() -> Chart {
    Chart::standard(2)
}

fn gq() -> impl Strategy<Value = GQ> {
    (-4i64..=4, 1i64..=3, -4i64..=4, 1i64..=3).prop_map(|(a, b, c, d)| GQ::from_parts(a, b, c, d))
}

/// A polynomial with up to four terms of degree at most two in each of
/// three symbols drawn from the n = 2 chart.
fn poly() -> impl Strategy<Value = Poly> {
    let len = chart().len();
    prop::collection::vec(
        (gq(), prop::collection::vec((0..len, 0u32..=2), 0..3)),
        0..4,
    )
    .prop_map(|terms| {
        terms.into_iter().fold(Poly::zero(), |acc, (c, vars)| {
            let m = vars
                .into_iter()
                .fold(Poly::constant(c), |p, (v, e)| p.mul(&Poly::var(v).pow(e)));
            acc.add(&m)
        })
    })
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (poly(), prop::option::of(poly())).prop_map(|(num, den)| match den {
        Some(d) if !d.is_zero() => Scalar::from_parts(num, d).unwrap(),
        _ => Scalar::from_poly(num),
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn addition_and_multiplication_associate(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn multiplication_distributes(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn commutative_with_identities(a in scalar(), b in scalar()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&Scalar::zero()), a.clone());
        prop_assert_eq!(a.mul(&Scalar::one()), a.clone());
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn leibniz_rule(a in scalar(), b in scalar(), v in 0usize..8) {
        let lhs = a.mul(&b).derivative(v);
        let rhs = a.derivative(v).mul(&b).add(&a.mul(&b.derivative(v)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn quotient_rule(a in scalar(), b in scalar(), v in 0usize..8) {
        prop_assume!(!b.is_zero());
        let q = a.div(&b).unwrap();
        // (a/b)·b = a, differentiated.
        prop_assert_eq!(q.mul(&b), a.clone());
        prop_assert_eq!(q.derivative(v).mul(&b).add(&q.mul(&b.derivative(v))), a.derivative(v));
    }

    #[test]
    fn conjugation_is_a_ring_involution(a in scalar(), b in scalar()) {
        let c = chart();
        prop_assert_eq!(a.mul(&b).conjugate(&c), a.conjugate(&c).mul(&b.conjugate(&c)));
        prop_assert_eq!(a.add(&b).conjugate(&c), a.conjugate(&c).add(&b.conjugate(&c)));
        prop_assert_eq!(a.conjugate(&c).conjugate(&c), a);
    }

    #[test]
    fn text_round_trip(a in scalar()) {
        let c = chart();
        prop_assert_eq!(parse_scalar(&a.to_text(&c), &c).unwrap(), a);
    }

    #[test]
    fn solve_linear_by_substitution(
        m in prop::collection::vec(prop::collection::vec(gq(), 4), 3),
        b in prop::collection::vec(gq(), 3),
    ) {
        let sol = solve_linear(&m, &b);
        let apply = |x: &[GQ]| -> Vec<GQ> {
            m.iter()
                .map(|row| row.iter().zip(x).fold(GQ::zero(), |acc, (p, q)| &acc + &(p * q)))
                .collect()
        };
        if let Some(x) = &sol.particular {
            prop_assert_eq!(apply(x), b.clone());
        } else {
            // Inconsistent exactly when appending b raises the rank.
            let aug: Vec<Vec<GQ>> = m.iter().zip(&b).map(|(r, v)| {
                let mut r = r.clone();
                r.push(v.clone());
                r
            }).collect();
            prop_assert!(rank(&aug) > rank(&m));
        }
        prop_assert_eq!(sol.kernel.len(), 4 - rank(&m));
        for k in &sol.kernel {
            prop_assert!(apply(k).iter().all(GQ::is_zero));
        }
    }
}

fn s(text: &str) -> Scalar {
    parse_scalar(text, &chart()).unwrap()
}

#[test]
fn listed_arithmetic() {
    assert_eq!(s("(1+i)*(1-i)"), Scalar::int(2));
    assert_eq!(s("z1/z1"), Scalar::one());
    // Multiply the claimed quotient back.
    let q = s("(z1^2 - zb1^2)/(z1 - zb1)");
    assert_eq!(q, s("z1 + zb1"));
    assert_eq!(q.mul(&s("z1 - zb1")), s("z1^2 - zb1^2"));
}

#[test]
fn listed_derivatives() {
    let c = chart();
    assert_eq!(
        s("z1^2*zb1").differentiate(&c, "z1").unwrap(),
        s("2*z1*zb1")
    );
    assert!(s("z1^2").differentiate(&c, "zb1").unwrap().is_zero());
    assert_eq!(
        s("wb12*w12^2").differentiate(&c, "w12").unwrap(),
        s("2*wb12*w12")
    );
}

#[test]
fn listed_conjugates() {
    let c = chart();
    assert_eq!(s("i*z1").conjugate(&c), s("-i*zb1"));
    assert_eq!(s("w11").conjugate(&c), s("-w11"));
    assert_eq!(s("conj(conj(z1*wb12))"), s("z1*wb12"));
}

#[test]
fn listed_linear_systems() {
    let id = vec![
        vec![Scalar::one(), Scalar::zero()],
        vec![Scalar::zero(), Scalar::one()],
    ];
    let sol = solve_linear(&id, &[Scalar::one(), Scalar::zero()]);
    assert_eq!(sol.particular.unwrap(), vec![Scalar::one(), Scalar::zero()]);
    let m = vec![
        vec![s("z1"), Scalar::zero()],
        vec![Scalar::zero(), Scalar::one()],
    ];
    let sol = solve_linear(&m, &[s("z1^2"), Scalar::zero()]);
    assert_eq!(sol.particular.unwrap(), vec![s("z1"), Scalar::zero()]);
}
