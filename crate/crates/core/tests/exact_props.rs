use proptest::prelude::*;
use qchromatic::exact::{BigInt, BigRational, Family, MPoly, QPoly, QRational};

fn small_rational() -> impl Strategy<Value = BigRational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn qpoly() -> impl Strategy<Value = QPoly> {
    prop::collection::vec(small_rational(), 0..4).prop_map(QPoly::new)
}

fn nonzero_qpoly() -> impl Strategy<Value = QPoly> {
    qpoly().prop_filter("nonzero", |p| !p.is_zero())
}

fn qrational() -> impl Strategy<Value = QRational> {
    (qpoly(), nonzero_qpoly()).prop_map(|(n, d)| QRational::new(n, d).unwrap())
}

const NVARS: usize = 3;

fn mpoly() -> impl Strategy<Value = MPoly> {
    prop::collection::vec(
        (prop::collection::vec(0u32..3, NVARS), small_rational()),
        0..5,
    )
    .prop_map(|terms| MPoly::from_terms(Family::R, NVARS, terms))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn field_axioms(a in qrational(), b in qrational(), c in qrational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn canonical_form_is_stable(a in qrational()) {
        let again = QRational::new(a.numer().clone(), a.denom().clone()).unwrap();
        prop_assert_eq!(&again, &a);
        let d = a.denom();
        prop_assert!(d.leading_coeff().is_some_and(|c| c == &BigRational::from_integer(1.into())));
        prop_assert!(QPoly::gcd(a.numer(), d).is_one() || a.is_zero());
        if a.is_zero() {
            prop_assert!(d.is_one());
        }
    }

    #[test]
    fn qrational_json_round_trip(a in qrational()) {
        let s = serde_json::to_string(&a).unwrap();
        let back: QRational = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn exact_divide_round_trip(g in mpoly(), d in mpoly()) {
        prop_assume!(!d.is_zero());
        let product = &g * &d;
        prop_assert_eq!(product.exact_divide(&d).unwrap(), g);
    }

    #[test]
    fn difference_divisibility_matches_division(g in mpoly(), i in 0..NVARS, j in 0..NVARS) {
        prop_assume!(i != j);
        let diff = MPoly::difference(Family::R, NVARS, i, j);
        prop_assert_eq!(g.divisible_by_difference(i, j), g.exact_divide(&diff).is_ok());
        let multiple = &g * &diff;
        prop_assert!(multiple.divisible_by_difference(i, j));
    }
}

#[test]
fn mixing_families_is_an_error() {
    let r = MPoly::var(Family::R, 2, 0);
    let l = MPoly::var(Family::L, 2, 0);
    assert!(r.try_add(&l).is_err());
}
