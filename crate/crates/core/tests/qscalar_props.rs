mod common;

use common::{nonzero_scalar, rat, scalar};
use proptest::prelude::*;
use qaff_core::qscalar::{level_pairing, qbinom, qfactorial, qint, specialize_q1};
use qaff_core::{Error, Scalar};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &Scalar::zero(), a.clone());
        prop_assert_eq!(&a * &Scalar::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn inverses(a in nonzero_scalar()) {
        let inv = a.recip().unwrap();
        prop_assert!((&a * &inv).is_one());
        prop_assert_eq!(inv.recip().unwrap(), a);
    }

    #[test]
    fn canonical_string_round_trips(a in scalar()) {
        let text = a.to_string();
        let back: Scalar = text.parse().unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn bar_is_an_involutive_automorphism(a in scalar(), b in scalar()) {
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
    }

    #[test]
    fn qint_symmetries(n in -30i64..=30, d in 1u32..=4) {
        prop_assert_eq!(qint(-n, d), -qint(n, d));
        prop_assert_eq!(qint(n, d).bar(), qint(n, d));
        prop_assert_eq!(specialize_q1(&qint(n, d)).unwrap(), rat(n, 1));
    }

    #[test]
    fn qint_closed_form(n in -12i64..=12, d in 1u32..=3) {
        // (q^{dn} - q^{-dn}) / (q^d - q^{-d}), built independently
        let d = d as i64;
        let num = &Scalar::q_pow(d * n) - &Scalar::q_pow(-d * n);
        let den = &Scalar::q_pow(d) - &Scalar::q_pow(-d);
        prop_assert_eq!(qint(n, d as u32), &num / &den);
    }

    #[test]
    fn level_pairing_is_a_product_bracket(k in -8i64..=8, l in -8i64..=8) {
        prop_assert_eq!(level_pairing(k, l), qint(k * l, 1));
        prop_assert_eq!(level_pairing(k, l), level_pairing(l, k));
    }
}

#[test]
fn literal_values() {
    assert_eq!(qint(2, 1).to_string(), "s^2 + s^-2 / 1");
    assert_eq!(qint(0, 3), Scalar::zero());
    assert_eq!(qint(1, 5), Scalar::one());
    assert_eq!(qint(3, 2).to_string(), "s^8 + 1 + s^-8 / 1");
    assert_eq!(specialize_q1(&qint(3, 2)).unwrap(), rat(3, 1));
    assert_eq!(qint(-3, 2), -qint(3, 2));
}

#[test]
fn factorials_and_printed_bracket() {
    let f3 = qfactorial(3, 1).unwrap();
    assert_eq!(f3, &qint(2, 1) * &qint(3, 1));
    assert_eq!(qfactorial(0, 2).unwrap(), Scalar::one());
    assert_eq!(qfactorial(-1, 1), Err(Error::UndefinedFactorial(-1)));
    // [4]! / ([2]! [3]!) with the printed shift r - s + 1
    let expected = &qfactorial(4, 1).unwrap() / &(&qfactorial(2, 1).unwrap() * &qfactorial(3, 1).unwrap());
    assert_eq!(qbinom(4, 2, 1).unwrap(), expected);
}

#[test]
fn division_by_zero_and_poles() {
    assert_eq!(Scalar::one().checked_div(&Scalar::zero()), Err(Error::DivisionByZero));
    assert_eq!(Scalar::zero().recip(), Err(Error::DivisionByZero));
    let pole = (&Scalar::q_pow(1) - &Scalar::one()).recip().unwrap();
    assert_eq!(specialize_q1(&pole), Err(Error::PoleAtOne));
    // removable singularity: ([2]_q - 2) / (q - 1) -> 0 at q = 1 only after cancellation
    let x = &(&qint(2, 1) - &Scalar::from_int(2)) / &(&Scalar::q_pow(1) - &Scalar::one());
    assert_eq!(specialize_q1(&x).unwrap(), rat(0, 1));
}
