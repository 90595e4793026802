use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;
use whittaker_core::exact::{kernel_of_map, rank, solve, Coordinates, Subspace};
use whittaker_core::{LinComb, Rational};

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=12).prop_map(|(n, d)| Rational::frac(n, d))
}

fn nonzero() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn lincomb() -> impl Strategy<Value = LinComb<u8>> {
    prop::collection::vec((0u8..6, rational()), 0..6).prop_map(|terms| terms.into_iter().collect())
}

proptest! {
    #[test]
    fn field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!(&a.checked_div(&b).unwrap() * &b, a);
        }
    }

    #[test]
    fn always_reduced_with_positive_denominator(a in rational(), b in nonzero()) {
        let x = &a.checked_div(&b).unwrap() + &a;
        prop_assert!(x.denom() > BigInt::from(0));
        prop_assert_eq!(x.numer().gcd(&x.denom()), if x.is_zero() { x.denom() } else { BigInt::from(1) });
    }

    #[test]
    fn text_form_round_trips(a in rational()) {
        let s = a.to_string();
        prop_assert_eq!(s.contains('/'), !a.is_integer());
        prop_assert_eq!(s.parse::<Rational>().unwrap(), a.clone());
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<Rational>(&json).unwrap(), a);
    }

    #[test]
    fn integer_powers(a in nonzero(), k in -4i32..=4) {
        let mut expected = Rational::one();
        for _ in 0..k.unsigned_abs() {
            expected = &expected * &a;
        }
        if k < 0 {
            expected = expected.recip().unwrap();
        }
        prop_assert_eq!(a.pow(k).unwrap(), expected);
    }

    #[test]
    fn lincomb_never_stores_zero(x in lincomb(), y in lincomb(), s in rational()) {
        let mut z = x.plus(&y.scaled(&s));
        z.sub_assign(&x);
        for (_, c) in &z {
            prop_assert!(!c.is_zero());
        }
        prop_assert_eq!(z, y.scaled(&s));
        prop_assert!(x.minus(&x).is_zero());
    }

    #[test]
    fn lincomb_json_round_trips(x in lincomb()) {
        let json = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<LinComb<u8>>(&json).unwrap(), x);
    }

    /// Every kernel vector is annihilated and the kernel has the dimension
    /// predicted by rank-nullity.
    #[test]
    fn kernels_are_exact(images in prop::collection::vec(lincomb(), 1..6)) {
        let domain: Vec<usize> = (0..images.len()).collect();
        let kernel = kernel_of_map(&domain, &images);
        prop_assert_eq!(kernel.len() + rank(&images), images.len());
        for k in &kernel {
            let mut sum = LinComb::zero();
            for (&i, c) in k {
                sum.add_scaled(&images[i], c);
            }
            prop_assert!(sum.is_zero());
        }
    }

    #[test]
    fn solutions_reproduce_targets(vectors in prop::collection::vec(lincomb(), 1..5), coeffs in prop::collection::vec(rational(), 5)) {
        let mut target = LinComb::zero();
        for (v, c) in vectors.iter().zip(&coeffs) {
            target.add_scaled(v, c);
        }
        let found = solve(&vectors, &target).expect("target lies in the span");
        let mut back = LinComb::zero();
        for (v, c) in vectors.iter().zip(&found) {
            back.add_scaled(v, c);
        }
        prop_assert_eq!(&back, &target);
        let coords = Coordinates::new(&vectors);
        prop_assert_eq!(coords.rank(), rank(&vectors));
        prop_assert!(coords.express(&target).is_some());
        prop_assert!(Subspace::spanned_by(&vectors).contains(&target));
    }
}

#[test]
fn canonical_text_examples() {
    assert_eq!(Rational::frac(6, -4).to_string(), "-3/2");
    assert_eq!(Rational::frac(8, 4).to_string(), "2");
    assert!("1/0".parse::<Rational>().is_err());
    assert!(Rational::zero().recip().is_err());
}

#[test]
fn rank_of_a_hand_computed_matrix() {
    // rows (1,2,3), (2,4,6), (0,1,1): rank 2, kernel spanned by 2*r0 - r1
    let row = |v: [i64; 3]| -> LinComb<u8> { (0u8..3).zip(v).map(|(i, x)| (i, Rational::from_int(x))).collect() };
    let rows = vec![row([1, 2, 3]), row([2, 4, 6]), row([0, 1, 1])];
    assert_eq!(rank(&rows), 2);
    let kernel = kernel_of_map(&[0usize, 1, 2], &rows);
    assert_eq!(kernel.len(), 1);
    let k = &kernel[0];
    assert_eq!(&k.coeff(&0) * &Rational::from_int(-1), &k.coeff(&1) * &Rational::from_int(2));
    assert!(k.coeff(&2).is_zero());
}
