use proptest::prelude::*;
use whittaker_core::checks::representation_property;
use whittaker_core::fields::t_mode;
use whittaker_core::free_field::{
    cyclic_vector_identities, degenerate_whittaker_check, irreducibility_probe, nonisomorphism_fingerprint, one_dim_chi,
    realized_central_character, tensor_n1, weyl, Twisted, WakLabel,
};
use whittaker_core::{AlgebraId, Convention, LaurentData, LinComb, Module, Rational, TruncationBox};

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

fn small() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| Rational::frac(n, d))
}

fn box_vector(m: &impl Module<Label = WakLabel>, b: TruncationBox) -> impl Strategy<Value = LinComb<WakLabel>> {
    let labels = m.box_basis(b);
    prop::collection::vec((prop::sample::select(labels), small()), 1..4).prop_map(|t| t.into_iter().collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn cyclic_identities_for_random_parameters(
        lambda in small(), mu in small(), kappa in small().prop_filter("noncritical", |k| *k != q(-2)),
        chi0 in small(), chi1 in small(),
    ) {
        let m = tensor_n1(lambda, mu, kappa, chi0, chi1);
        for r in cyclic_vector_identities(&m, 3) {
            prop_assert!(r.pass, "{}: {} vs {}", r.description, r.actual, r.expected);
        }
    }

    #[test]
    fn degenerate_case_for_random_parameters(
        lambda in small(), kappa in small().prop_filter("noncritical", |k| *k != q(-2)), chi0 in small(),
    ) {
        let m = tensor_n1(lambda, q(0), kappa, chi0, q(0));
        for r in degenerate_whittaker_check(&m).unwrap() {
            prop_assert!(r.pass, "{}: {} vs {}", r.description, r.actual, r.expected);
        }
    }

    /// Free-field commutators on arbitrary box vectors:
    /// `[a(n), a*(m)] = δ_{n+m,0}` and `[b(n), b(m)] = 2(κ+2) n δ_{n+m,0}`.
    #[test]
    fn free_field_commutators((v, n, k) in (box_vector(&tensor_n1(q(1), q(2), q(3), q(1), q(1)), TruncationBox::new(2, 2)), -3i64..=3, -3i64..=3)) {
        let m = tensor_n1(q(1), q(2), q(3), q(1), q(1));
        let delta = if n + k == 0 { q(1) } else { q(0) };
        let weyl = m.a(n, &m.astar(k, &v)).minus(&m.astar(k, &m.a(n, &v)));
        prop_assert_eq!(weyl, v.scaled(&delta));
        let heis = m.b(n, &m.b(k, &v)).minus(&m.b(k, &m.b(n, &v)));
        prop_assert_eq!(heis, v.scaled(&(q(10 * n) * &delta)));
        let mixed = m.a(n, &m.b(k, &v)).minus(&m.b(k, &m.a(n, &v)));
        prop_assert!(mixed.is_zero());
    }

    #[test]
    fn every_nonzero_vector_regenerates_the_cyclic_line(v in box_vector(&weyl(q(1), q(3)), TruncationBox::new(2, 2))) {
        let m = weyl(q(1), q(3));
        prop_assume!(!v.is_zero());
        prop_assert!(irreducibility_probe(&m, &v).unwrap());
    }

    #[test]
    fn labels_round_trip_through_json(lambda in prop::collection::vec(1u32..4, 0..3), mu in prop::collection::vec(1u32..4, 0..3)) {
        let mut l = WakLabel { lambda, mu, b: vec![] };
        l.lambda.sort_unstable_by(|a, b| b.cmp(a));
        l.mu.sort_unstable_by(|a, b| b.cmp(a));
        let json = serde_json::to_string(&l).unwrap();
        prop_assert_eq!(serde_json::from_str::<WakLabel>(&json).unwrap(), l);
    }
}

#[test]
fn t_modes_act_by_a_quarter_of_chi_squared_minus_twice_its_derivative() {
    let chi = LaurentData::new(Convention::Weight1, [(0, q(3)), (-1, q(1)), (1, Rational::frac(1, 2))]);
    let m = one_dim_chi(q(2), q(1), &chi);
    let c = realized_central_character(&chi);
    for l in m.box_basis(TruncationBox::new(2, 2)) {
        let v = LinComb::basis(l);
        for n in -3..=3 {
            assert_eq!(t_mode(&m, n, &v).unwrap(), v.scaled(&c.coeff(n)), "T({n})");
        }
    }
}

#[test]
fn spectral_flow_twists_stay_representations() {
    let chi = LaurentData::new(Convention::Weight1, [(0, q(3)), (1, q(1)), (2, q(2))]);
    let m = one_dim_chi(q(2), q(1), &chi);
    for s in [-1, 1, 2] {
        let t = Twisted { inner: &m, s };
        representation_property(&t, AlgebraId::AffineSl2, 2, TruncationBox::new(1, 2)).unwrap();
    }
}

#[test]
fn fingerprints_separate_modules() {
    let chi = |c2: i64| LaurentData::new(Convention::Weight1, [(0, q(3)), (1, q(1)), (2, q(c2))]);
    let a = nonisomorphism_fingerprint(&one_dim_chi(q(2), q(1), &chi(2))).unwrap();
    let b = nonisomorphism_fingerprint(&one_dim_chi(q(2), q(1), &chi(5))).unwrap();
    let c = nonisomorphism_fingerprint(&one_dim_chi(q(2), q(2), &chi(2))).unwrap();
    assert_ne!(a, b);
    assert_ne!(a, c);
    assert_eq!(a, nonisomorphism_fingerprint(&one_dim_chi(q(2), q(1), &chi(2))).unwrap());
    assert!(nonisomorphism_fingerprint(&tensor_n1(q(1), q(1), q(1), q(1), q(1))).is_err());
}
