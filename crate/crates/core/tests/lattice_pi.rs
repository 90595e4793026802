use proptest::prelude::*;
use whittaker_core::checks::representation_property;
use whittaker_core::fields::t_mode;
use whittaker_core::lattice::{chi_for_whittaker, compare_realization, derivation_check, pi_module, PiLabel, PiModule};
use whittaker_core::{AlgebraId, Convention, LaurentData, LinComb, Module, Rational, TruncationBox};

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

fn small() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| Rational::frac(n, d))
}

fn nonzero() -> impl Strategy<Value = Rational> {
    small().prop_filter("nonzero", |x| !x.is_zero())
}

fn module() -> PiModule {
    let chi = LaurentData::new(Convention::Weight2, [(0, q(3)), (-1, q(1)), (1, q(2))]);
    pi_module(q(2), &chi).unwrap()
}

fn box_vector(b: TruncationBox) -> impl Strategy<Value = LinComb<PiLabel>> {
    let labels = module().box_basis(b);
    prop::collection::vec((prop::sample::select(labels), small()), 1..4).prop_map(|t| t.into_iter().collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// `[c(m), d(n)] = 2m δ_{m+n,0}`, `c` and `d` isotropic, and
    /// `[a(n), a*(m)] = δ_{n+m,0}` on arbitrary box vectors.
    #[test]
    fn heisenberg_and_weyl_relations((v, m, n) in (box_vector(TruncationBox::new(2, 2)), -3i64..=3, -3i64..=3)) {
        let pi = module();
        let delta = if m + n == 0 { q(1) } else { q(0) };
        let cd = pi.c_mode(m, &pi.d_mode(n, &v)).minus(&pi.d_mode(n, &pi.c_mode(m, &v)));
        prop_assert_eq!(cd, v.scaled(&(q(2 * m) * &delta)));
        let cc = pi.c_mode(m, &pi.c_mode(n, &v)).minus(&pi.c_mode(n, &pi.c_mode(m, &v)));
        prop_assert!(cc.is_zero());
        let dd = pi.d_mode(m, &pi.d_mode(n, &v)).minus(&pi.d_mode(n, &pi.d_mode(m, &v)));
        prop_assert!(dd.is_zero());
        let weyl = pi.a(m, &pi.a_star(n, &v)).minus(&pi.a_star(n, &pi.a(m, &v)));
        prop_assert_eq!(weyl, v.scaled(&delta));
    }

    /// `L(0)` grades the basis by weight.
    #[test]
    fn l0_grades_by_weight(v in box_vector(TruncationBox::new(3, 3))) {
        let pi = module();
        let graded: LinComb<PiLabel> = v.iter().map(|(l, c)| (l.clone(), c * &q(l.weight()))).collect();
        prop_assert_eq!(pi.l0(&v), graded);
    }

    #[test]
    fn labels_round_trip_through_json(d0 in 0u32..3, c in prop::collection::vec(1u32..4, 0..3), d in prop::collection::vec(1u32..4, 0..3)) {
        let mut l = PiLabel { d0, c, d };
        l.c.sort_unstable_by(|a, b| b.cmp(a));
        l.d.sort_unstable_by(|a, b| b.cmp(a));
        let json = serde_json::to_string(&l).unwrap();
        prop_assert_eq!(serde_json::from_str::<PiLabel>(&json).unwrap(), l);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(4))]

    #[test]
    fn affine_action_for_random_data(lambda in nonzero(), c0 in small(), c1 in small(), cm1 in small()) {
        let chi = LaurentData::new(Convention::Weight2, [(0, c0), (1, c1), (-1, cm1)]);
        let pi = pi_module(lambda, &chi).unwrap();
        representation_property(&pi, AlgebraId::AffineSl2, 1, TruncationBox::new(1, 2)).unwrap();
    }

    #[test]
    fn realization_for_random_data(lambda in nonzero(), mu in small(), c0 in small(), cm1 in small()) {
        let c = LaurentData::new(Convention::Weight2, [(0, c0), (-1, cm1)]);
        let r = compare_realization(&lambda, &mu, &c, TruncationBox::new(2, 2), 2).unwrap();
        prop_assert!(r.pass(), "{:?}", r);
    }
}

#[test]
fn t_modes_act_by_chi() {
    let pi = module();
    for l in pi.box_basis(TruncationBox::new(2, 2)) {
        let v = LinComb::basis(l);
        for n in -2..=2 {
            assert_eq!(t_mode(&pi, n, &v).unwrap(), v.scaled(&pi.chi.coeff(n)), "T({n})");
        }
    }
}

#[test]
fn whittaker_chi_adds_the_top_mode() {
    let c = LaurentData::new(Convention::Weight2, [(0, q(1)), (-1, q(2))]);
    let chi = chi_for_whittaker(&q(2), &q(3), &c);
    assert_eq!(chi.coeff(1), q(6));
    assert_eq!(chi.coeff(0), q(1));
    assert_eq!(chi.power_coeff(-3), q(6));
}

#[test]
fn derivation_exactly_for_a_pure_double_pole() {
    let b = TruncationBox::new(2, 2);
    let pure = pi_module(q(2), &LaurentData::new(Convention::Weight2, [(0, q(5))])).unwrap();
    assert_eq!(derivation_check(&pure, b, 2), None);
    for extra in [-1i64, 1] {
        let chi = LaurentData::new(Convention::Weight2, [(0, q(5)), (extra, q(1))]);
        let m = pi_module(q(2), &chi).unwrap();
        assert!(derivation_check(&m, b, 2).is_some(), "extra mode {extra}");
    }
}

#[test]
fn lambda_must_be_nonzero() {
    assert!(pi_module(q(0), &LaurentData::zero(Convention::Weight2)).is_err());
}
