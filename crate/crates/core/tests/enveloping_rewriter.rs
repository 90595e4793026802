use std::cmp::Ordering;

use proptest::prelude::*;
use whittaker_core::rewrite::{
    borel_vir_generator, borel_vir_slot, length_top_cmp, multiply, normal_order, principal_cmp, revlex_cmp,
    ExponentVector, FamilyBlockOrder, PbwOrder, SlotOrder,
};
use whittaker_core::whittaker::{borel_vir, monomial_of_slots, slots_of, universal};
use whittaker_core::{AlgebraId, GenSymbol, LinComb, Module, Rational};

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

fn affine_word() -> impl Strategy<Value = Vec<GenSymbol>> {
    prop::collection::vec(prop::sample::select(AlgebraId::AffineSl2.generators(2)), 0..5)
}

fn borel_vir_word() -> impl Strategy<Value = Vec<GenSymbol>> {
    prop::collection::vec(prop::sample::select(AlgebraId::BorelVir.generators(2)), 0..4)
}

fn exponents() -> impl Strategy<Value = ExponentVector> {
    prop::collection::vec((1u32..10, 1u32..3), 0..4).prop_map(|p| ExponentVector::from_pairs(&p))
}

/// Acts with every monomial of a normal form; the rightmost letter first.
fn act_normal<M: Module>(m: &M, x: &LinComb<Vec<GenSymbol>>, v: &LinComb<M::Label>) -> LinComb<M::Label> {
    let mut out = LinComb::zero();
    for (word, c) in x {
        out.add_scaled(&m.act_word(word, v), c);
    }
    out
}

fn is_sorted(order: &dyn PbwOrder, word: &[GenSymbol]) -> bool {
    word.windows(2).all(|p| order.key(&p[0]) <= order.key(&p[1]))
}

proptest! {
    /// The rewritten element acts exactly like the original word on a
    /// module, which knows nothing about the rewriting.
    #[test]
    fn normal_form_acts_like_the_word(word in affine_word()) {
        let order = FamilyBlockOrder::affine();
        let nf = normal_order(AlgebraId::AffineSl2, &word, &order).unwrap();
        for (mono, _) in &nf {
            prop_assert!(is_sorted(&order, mono));
        }
        let m = universal(q(2), q(3), Rational::frac(1, 3));
        let w = m.cyclic_vector();
        prop_assert_eq!(act_normal(&m, &nf, &w), m.act_word(&word, &w));
    }

    #[test]
    fn borel_vir_normal_form_acts_like_the_word(word in borel_vir_word()) {
        let nf = normal_order(AlgebraId::BorelVir, &word, &SlotOrder).unwrap();
        for (mono, _) in &nf {
            prop_assert!(is_sorted(&SlotOrder, mono));
        }
        let m = borel_vir(q(1), q(2), q(3), Rational::frac(-1, 2));
        let w = m.cyclic_vector();
        prop_assert_eq!(act_normal(&m, &nf, &w), m.act_word(&word, &w));
    }

    #[test]
    fn normal_ordering_is_idempotent(word in affine_word()) {
        let order = FamilyBlockOrder::affine();
        let nf = normal_order(AlgebraId::AffineSl2, &word, &order).unwrap();
        for (mono, _) in &nf {
            prop_assert_eq!(normal_order(AlgebraId::AffineSl2, mono, &order).unwrap(), LinComb::basis(mono.clone()));
        }
    }

    #[test]
    fn multiplication_is_associative(a in affine_word(), b in affine_word(), c in affine_word()) {
        let order = FamilyBlockOrder::affine();
        let alg = AlgebraId::AffineSl2;
        let nf = |w: &[GenSymbol]| normal_order(alg, w, &order).unwrap();
        let (x, y, z) = (nf(&a), nf(&b), nf(&c));
        let left = multiply(alg, &multiply(alg, &x, &y, &order).unwrap(), &z, &order).unwrap();
        let right = multiply(alg, &x, &multiply(alg, &y, &z, &order).unwrap(), &order).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn orders_are_total_and_antisymmetric(i in exponents(), j in exponents(), k in exponents()) {
        for cmp in [principal_cmp, revlex_cmp, length_top_cmp] {
            prop_assert_eq!(cmp(&i, &j), cmp(&j, &i).reverse());
            prop_assert_eq!(cmp(&i, &j) == Ordering::Equal, i == j);
            if cmp(&i, &j) != Ordering::Greater && cmp(&j, &k) != Ordering::Greater {
                prop_assert_ne!(cmp(&i, &k), Ordering::Greater);
            }
        }
    }

    #[test]
    fn slots_round_trip(i in exponents()) {
        let m = monomial_of_slots(&i);
        prop_assert_eq!(slots_of(&m), i);
        prop_assert!(is_sorted(&SlotOrder, &m));
    }
}

#[test]
fn slot_numbering() {
    let cases = [(GenSymbol::e(-1), 1), (GenSymbol::l(0), 2), (GenSymbol::h(0), 3), (GenSymbol::e(-2), 4), (GenSymbol::l(-1), 5)];
    for (g, s) in cases {
        assert_eq!(borel_vir_slot(&g), Some(s));
        assert_eq!(borel_vir_generator(s), g);
    }
    assert_eq!(borel_vir_slot(&GenSymbol::e(0)), None);
    assert_eq!(borel_vir_slot(&GenSymbol::l(1)), None);
}

#[test]
fn f_then_e_picks_up_the_cartan_and_level() {
    // f(1) e(-1) = e(-1) f(1) - h(0) + c
    let nf = normal_order(AlgebraId::AffineSl2, &[GenSymbol::f(1), GenSymbol::e(-1)], &FamilyBlockOrder::affine()).unwrap();
    let expected: LinComb<Vec<GenSymbol>> = [
        (vec![GenSymbol::e(-1), GenSymbol::f(1)], q(1)),
        (vec![GenSymbol::h(0)], q(-1)),
        (vec![GenSymbol::C], q(1)),
    ]
    .into_iter()
    .collect();
    assert_eq!(nf, expected);
}

#[test]
fn words_outside_the_algebra_are_rejected() {
    assert!(normal_order(AlgebraId::BorelVir, &[GenSymbol::f(0)], &SlotOrder).is_err());
}
