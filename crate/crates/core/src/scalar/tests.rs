use super::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn q() -> ScalarK {
    ScalarK::q_power(Exponent::q(1))
}

#[test]
fn qbracket_two_telescopes() {
    // [2]_q = q + q^-1
    let expected = &q() + &q().inv().unwrap();
    assert_eq!(qint(2), expected);
    assert_eq!(alloc::format!("{}", qint(2)), "q + q^-1");
}

#[test]
fn qbracket_zero_is_zero() {
    assert!(qint(0).is_zero());
}

#[test]
fn qbracket_s_minus_one_vanishes_at_z_eq_q() {
    // [s-1]_q with y1/y2 = q must be identically zero in q.
    let e = Exponent { a2: -2, b1: 1, b2: -1 };
    let b = qbracket(e);
    let sub = b.substitute_y(&SpecValue::q_power(1), &SpecValue::int(1)).unwrap();
    assert!(sub.is_zero());
}

#[test]
fn qbracket_defining_identity() {
    // [e]_q (q - q^-1) + q^-e = q^e for a few exponents.
    let qmqi = &q() - &q().inv().unwrap();
    for e in [Exponent::q(3), Exponent::s(), Exponent { a2: -5, b1: 2, b2: 1 }] {
        let lhs = &(&qbracket(e) * &qmqi) + &ScalarK::q_power(-e);
        assert_eq!(lhs, ScalarK::q_power(e));
    }
}

#[test]
fn specialize_simple_values() {
    // q + q^-1 at q0 = 2 -> 5/2
    let x = qint(2);
    let v = x.specialize(&rat(2, 1), &SpecValue::int(1), &SpecValue::int(1)).unwrap();
    assert_eq!(v, rat(5, 2));
}

#[test]
fn specialize_denominator_vanishes() {
    // 1/(q - q^-1) at q0 = 1
    let d = (&q() - &q().inv().unwrap()).inv().unwrap();
    let r = d.specialize(&rat(1, 1), &SpecValue::int(1), &SpecValue::int(1));
    assert_eq!(r, Err(EvalError::DenominatorVanishes));
}

#[test]
fn specialize_s_bracket() {
    // [s]_q at q0 = 2, z = 4: (4 - 1/4)/(2 - 1/2) = 5/2
    let b = qbracket(Exponent::s());
    let v = b.specialize(&rat(2, 1), &SpecValue::int(4), &SpecValue::int(1)).unwrap();
    assert_eq!(v, rat(5, 2));
}

#[test]
fn display_matches_canonical_form() {
    // (q^2 z - q^-2 z^-1)/(q - q^-1) printed with y-symbols.
    let num = &(&q().pow(2) * &ScalarK::q_power(Exponent::s()))
        - &(&q().pow(-2) * &ScalarK::q_power(-Exponent::s()));
    let den = &q() - &q().inv().unwrap();
    let x = num.div(&den).unwrap();
    let s = alloc::format!("{}", x);
    assert_eq!(s, "(q^2*y1*y2^-1 - q^-2*y1^-1*y2)/(q - q^-1)");
    assert_eq!(parse_scalar(&s).unwrap(), x);
}

#[test]
fn parse_round_trips() {
    for src in ["q + q^-1", "z^2 - 1", "(y1^2 + q^-2*y2^2)/(3*q)", "q^(1/2)", "-2*v^3"] {
        let x = parse_scalar(src).unwrap();
        let printed = alloc::format!("{}", x);
        assert_eq!(parse_scalar(&printed).unwrap(), x, "round trip of {src}");
    }
}

#[test]
fn eval_odd_powers() {
    // v at q0 = 4 -> 2; v at q0 = 2 -> irrational.
    let v = ScalarK::monomial(BigInt::from(1), [1, 0, 0]);
    assert_eq!(v.eval_q(&rat(4, 1)).unwrap(), rat(2, 1));
    assert_eq!(v.eval_q(&rat(2, 1)), Err(EvalError::IrrationalValue));
    // v^2/v = v ... but v * v^-1 = 1 evaluates fine anywhere.
    let one = v.div(&v).unwrap();
    assert_eq!(one.eval_q(&rat(2, 1)).unwrap(), rat(1, 1));
}

fn arb_scalar() -> impl Strategy<Value = ScalarK> {
    // Random small Laurent fractions: numerator from a few terms, denominator
    // from a nonzero polynomial.
    let term = (any::<i8>(), -3i64..4, -2i64..3, -2i64..3)
        .prop_map(|(c, a, b1, b2)| LaurentPoly::monomial(BigInt::from(c as i64), [a, b1, b2]));
    let poly = proptest::collection::vec(term, 1..4).prop_map(|ts| {
        let mut p = LaurentPoly::zero();
        for t in ts {
            for (m, c) in t.terms() {
                p.add_term(*m, c.clone());
            }
        }
        p
    });
    (poly.clone(), poly).prop_map(|(n, d)| {
        let d = if d.is_zero() { LaurentPoly::one() } else { d };
        ScalarK::ratio(n, d)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
        let assoc = &(&a + &b) + &c == &a + &(&b + &c);
        prop_assert!(assoc);
        let distrib = &a * &(&b + &c) == &(&a * &b) + &(&a * &c);
        prop_assert!(distrib);
        let comm = &a * &b == &b * &a;
        prop_assert!(comm);
    }

    #[test]
    fn canonical_form_idempotent(a in arb_scalar()) {
        let re = ScalarK::ratio(a.numerator().clone(), a.denominator().clone());
        prop_assert_eq!(re, a);
    }

    #[test]
    fn mul_div_round_trip(a in arb_scalar(), b in arb_scalar()) {
        prop_assume!(!b.is_zero());
        let c = (&a * &b).div(&b).unwrap();
        prop_assert_eq!(c, a);
    }

    #[test]
    fn specialize_is_ring_hom(a in arb_scalar(), b in arb_scalar()) {
        let q0 = rat(3, 1);
        let y1 = SpecValue::int(5);
        let y2 = SpecValue::int(2);
        let ea = a.specialize(&q0, &y1, &y2);
        let eb = b.specialize(&q0, &y1, &y2);
        if let (Ok(ea), Ok(eb)) = (ea, eb) {
            if let Ok(es) = (&a + &b).specialize(&q0, &y1, &y2) {
                prop_assert_eq!(es, &ea + &eb);
            }
            if let Ok(ep) = (&a * &b).specialize(&q0, &y1, &y2) {
                prop_assert_eq!(ep, &ea * &eb);
            }
        }
    }
}

mod gcd_props {
    use super::super::gcd::{divides, exact_div, gcd};
    use super::super::poly::LaurentPoly;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        let term = (-4i8..5, 0i64..3, 0i64..2, 0i64..2)
            .prop_map(|(c, a, b1, b2)| (c as i64, [a, b1, b2]));
        proptest::collection::vec(term, 0..4).prop_map(|ts| {
            let mut p = LaurentPoly::zero();
            for (c, m) in ts {
                p.add_term(m, BigInt::from(c));
            }
            p
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn gcd_divides_both(a in arb_poly(), b in arb_poly()) {
            let g = gcd(&a, &b);
            if !g.is_zero() {
                prop_assert!(divides(&g, &a));
                prop_assert!(divides(&g, &b));
            } else {
                prop_assert!(a.is_zero() && b.is_zero());
            }
        }

        #[test]
        fn common_factor_detected(a in arb_poly(), b in arb_poly(), g in arb_poly()) {
            prop_assume!(!g.is_zero());
            let ag = &a * &g;
            let bg = &b * &g;
            let d = gcd(&ag, &bg);
            if !(ag.is_zero() && bg.is_zero()) {
                prop_assert!(divides(&g, &d));
            }
        }

        #[test]
        fn exact_division_round_trip(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(exact_div(&prod, &b), a);
        }
    }
}
