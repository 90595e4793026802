use whittaker_core::checks::representation_property;
use whittaker_core::fields::{l_mode, t_mode};
use whittaker_core::whittaker::{
    basis_certificate, borel_vir, casimir_omega, central_monomial_vectors, critical_quotient, nilpotency_order,
    truncated_quotient, universal, whittaker_vectors, Induced, Relation, SugawaraExtension,
};
use whittaker_core::{AlgebraId, Convention, GenSymbol, LaurentData, LinComb, Module, Rational, TruncationBox};

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

#[test]
fn f1_after_h0_on_the_cyclic_vector() {
    let m = universal(q(2), q(3), q(1));
    let w = m.cyclic_vector();
    let v = m.act(&GenSymbol::f(1), &m.act(&GenSymbol::h(0), &w));
    assert_eq!(m.format_vector(&v), "3·h(0)·w + 6·w");
}

#[test]
fn sugawara_l0_on_the_cyclic_vector() {
    let m = universal(q(2), q(3), q(1));
    let v = l_mode(&m, 0, &m.cyclic_vector()).unwrap();
    // (lambda f(0) + mu e(-1) + h(0)^2/4 + h(0)/2) w / (kappa + 2)
    let expected: LinComb<Vec<GenSymbol>> = [
        (vec![GenSymbol::f(0)], Rational::frac(2, 3)),
        (vec![GenSymbol::e(-1)], q(1)),
        (vec![GenSymbol::h(0), GenSymbol::h(0)], Rational::frac(1, 12)),
        (vec![GenSymbol::h(0)], Rational::frac(1, 6)),
    ]
    .into_iter()
    .collect();
    assert_eq!(v, expected);
}

#[test]
fn t1_is_lambda_mu_at_critical_level() {
    let m = universal(q(2), q(3), q(-2));
    let w = m.cyclic_vector();
    assert_eq!(t_mode(&m, 1, &w).unwrap(), w.scaled(&q(6)));
    assert!(t_mode(&m, 2, &w).unwrap().is_zero());
}

#[test]
fn critical_quotient_f0_on_vacuum() {
    let c = LaurentData::new(Convention::Weight2, [(0, q(12)), (-1, Rational::frac(3, 2))]);
    let m = critical_quotient(q(2), q(3), &c).unwrap();
    let v = m.act(&GenSymbol::f(0), &m.cyclic_vector());
    let half = Rational::frac(1, 2);
    let expected: LinComb<Vec<GenSymbol>> = [
        (vec![], q(6)),
        (vec![GenSymbol::h(0), GenSymbol::h(0)], Rational::frac(-1, 8)),
        (vec![GenSymbol::h(0)], Rational::frac(-1, 4)),
        (vec![GenSymbol::e(-1)], -(&half * &q(3))),
    ]
    .into_iter()
    .collect();
    assert_eq!(v, expected);
}

#[test]
fn critical_quotient_has_the_prescribed_central_character() {
    let c = LaurentData::new(Convention::Weight2, [(0, q(1)), (-1, q(2)), (-3, q(-1))]);
    let m = critical_quotient(q(2), q(3), &c).unwrap();
    let w = m.cyclic_vector();
    for n in -4..=3 {
        let expected = match n {
            1 => q(6),
            n if n >= 2 => q(0),
            n => c.coeff(n),
        };
        assert_eq!(t_mode(&m, n, &w).unwrap(), w.scaled(&expected), "T({n})");
    }
}

#[test]
fn critical_quotient_rejects_lambda_zero() {
    let c = LaurentData::zero(Convention::Weight2);
    assert!(critical_quotient(q(0), q(3), &c).is_err());
}

#[test]
fn universal_module_is_a_representation_on_a_small_box() {
    let m = universal(q(2), q(3), Rational::frac(-1, 2));
    representation_property(&m, AlgebraId::AffineSl2, 2, TruncationBox::new(2, 2)).unwrap();
}

#[test]
fn critical_quotient_is_a_representation_on_a_small_box() {
    let c = LaurentData::new(Convention::Weight2, [(0, q(1)), (-1, q(2))]);
    let m = critical_quotient(q(2), q(3), &c).unwrap();
    representation_property(&m, AlgebraId::AffineSl2, 2, TruncationBox::new(2, 2)).unwrap();
}

#[test]
fn borel_vir_module_relations() {
    let m = borel_vir(q(1), q(2), q(3), Rational::frac(-1, 2));
    let w = m.cyclic_vector();
    assert_eq!(m.act(&GenSymbol::l(1), &w), w.scaled(&q(2)));
    // L(1) e(-1) w = e(-1) L(1) w + e(0) w
    let v = m.act(&GenSymbol::l(1), &m.act(&GenSymbol::e(-1), &w));
    assert_eq!(m.format_vector(&v), "2·e(-1)·w + w");
    representation_property(&m, AlgebraId::BorelVir, 2, TruncationBox::new(2, 2)).unwrap();
}

#[test]
fn casimir_is_scalar_on_the_sugawara_extension() {
    // with d = -L(0) + a the Casimir 2(κ+2)(d + L(0)) is 2(κ+2)a
    let m = universal(q(2), q(3), q(1));
    let a = Rational::frac(5, 7);
    let ext = SugawaraExtension { inner: &m, a: a.clone() };
    let scalar = q(6) * &a;
    for l in ext.box_basis(TruncationBox::new(2, 2)) {
        let v = LinComb::basis(l);
        assert_eq!(casimir_omega(&ext, &v).unwrap(), v.scaled(&scalar));
    }
}

#[test]
fn casimir_at_the_critical_level_is_twice_t0() {
    let c = LaurentData::new(Convention::Weight2, [(0, Rational::frac(7, 3)), (-1, q(2))]);
    let m = critical_quotient(q(2), q(3), &c).unwrap();
    for l in m.box_basis(TruncationBox::new(2, 2)) {
        let v = LinComb::basis(l);
        assert_eq!(casimir_omega(&m, &v).unwrap(), v.scaled(&Rational::frac(14, 3)));
    }
}

#[test]
fn induced_module_lowers_d_degree() {
    let c = LaurentData::new(Convention::Weight2, [(0, q(3)), (-1, q(2)), (-2, q(5))]);
    let base = critical_quotient(q(2), q(3), &c).unwrap();
    let m = Induced { inner: &base };
    representation_property(&m, AlgebraId::ExtendedSl2, 2, TruncationBox::new(1, 2)).unwrap();
    // T(k) d = d T(k) - k T(k), so (T(k) - c_k)(d ⊗ w) = -k c_k (1 ⊗ w)
    let dw = m.act(&GenSymbol::D, &m.cyclic_vector());
    for k in [-2i64, -1, 0] {
        let mut r = t_mode(&m, k, &dw).unwrap();
        r.add_scaled(&dw, &-c.coeff(k));
        assert_eq!(r, m.cyclic_vector().scaled(&-(q(k) * c.coeff(k))), "k = {k}");
    }
}

#[test]
fn truncated_quotient_kills_the_relation() {
    let m = universal(q(2), q(3), q(1));
    let b = TruncationBox::new(2, 2);
    let rel = Relation::L0Minus { a: Rational::frac(1, 2) };
    let tq = truncated_quotient(&m, &rel, b).unwrap();
    let r = rel.vector(&m).unwrap();
    assert!(r.labels().all(|l| m.in_box(l, b)));
    assert!(tq.project(&r).is_zero());
    assert!(!tq.project(&m.cyclic_vector()).is_zero());
    assert_eq!(tq.dim() + tq.relations.dim(), m.box_basis(b).len());
    assert!(tq.dim() < m.box_basis(b).len());
}

#[test]
fn sugawara_type_basis_certificate() {
    let m = universal(q(2), q(3), q(1));
    let cert = basis_certificate(&m, TruncationBox::new(2, 2)).unwrap();
    assert!(cert.pass(), "{cert:?}");
    assert_eq!(cert.labels, m.box_basis(TruncationBox::new(2, 2)).len());
    assert!(basis_certificate(&universal(q(2), q(3), q(-2)), TruncationBox::new(1, 1)).is_err());
}

#[test]
fn whittaker_vectors_noncritical_and_critical() {
    let b = TruncationBox::new(2, 2);
    let m = universal(q(2), q(3), q(1));
    let ker = whittaker_vectors(&m, &q(2), &q(3), b);
    assert_eq!(ker.len(), 1);
    // at level -2: w, T(0)w, T(-1)w. T(-k)w contains μ e(-k-1)w of weight
    // k+1, and products of two T's reach length 4.
    let crit = universal(q(2), q(3), q(-2));
    let ker = whittaker_vectors(&crit, &q(2), &q(3), b);
    assert_eq!(ker.len(), 3);
    assert_eq!(central_monomial_vectors(&crit, b).len(), 3);
}

#[test]
fn nilpotency_needs_more_than_length_plus_one() {
    // (e(0) - λ) f(0) w = h(0) w, then -2λ w, then 0
    let m = universal(q(2), q(3), q(1));
    let v = m.act(&GenSymbol::f(0), &m.cyclic_vector());
    assert_eq!(m.length(&vec![GenSymbol::f(0)]), 1);
    assert_eq!(nilpotency_order(&m, &GenSymbol::e(0), &q(2), &v, 2), None);
    assert_eq!(nilpotency_order(&m, &GenSymbol::e(0), &q(2), &v, 3), Some(3));
}
