use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use std::hint::black_box;
use whittaker_bench::{critical, lattice, noncritical, q, quotient};
use whittaker_core::checks::representation_property;
use whittaker_core::exact::rank;
use whittaker_core::fields::{l_mode, t_mode};
use whittaker_core::rewrite::{normal_order, FamilyBlockOrder};
use whittaker_core::whittaker::whittaker_vectors;
use whittaker_core::{AlgebraId, GenSymbol, LinComb, Module, Rational, TruncationBox};

fn rationals(c: &mut Criterion) {
    let xs: Vec<Rational> = (1..200).map(|n| Rational::frac(n * 7 - 500, n % 13 + 1)).collect();
    c.bench_function("rational sum of products", |b| {
        b.iter(|| xs.iter().zip(xs.iter().rev()).map(|(x, y)| x * y).sum::<Rational>())
    });
}

fn rewriting(c: &mut Criterion) {
    let word = [GenSymbol::f(2), GenSymbol::e(-1), GenSymbol::h(1), GenSymbol::f(0), GenSymbol::e(-2), GenSymbol::h(-1)];
    let order = FamilyBlockOrder::affine();
    c.bench_function("normal order of a length-6 word", |b| {
        b.iter(|| normal_order(AlgebraId::AffineSl2, black_box(&word), &order).unwrap())
    });
}

fn module_actions(c: &mut Criterion) {
    let b3 = TruncationBox::new(3, 3);
    c.bench_function("universal f(1) on a fresh box(3,3)", |b| {
        b.iter_batched(
            noncritical,
            |m| {
                for l in m.box_basis(b3) {
                    black_box(m.act(&GenSymbol::f(1), &LinComb::basis(l)));
                }
            },
            BatchSize::SmallInput,
        )
    });
    let m = noncritical();
    let w = m.act(&GenSymbol::e(-1), &m.act(&GenSymbol::f(0), &m.cyclic_vector()));
    c.bench_function("Sugawara L(0) on a depth-one vector", |b| b.iter(|| l_mode(&m, 0, black_box(&w)).unwrap()));
    let crit = critical();
    let w = crit.act(&GenSymbol::h(-1), &crit.cyclic_vector());
    c.bench_function("T(-1) at the critical level", |b| b.iter(|| t_mode(&crit, -1, black_box(&w)).unwrap()));
    let w = lattice().cyclic_vector();
    c.bench_function("f(-1) f(0) on the lattice module", |b| {
        b.iter_batched(
            lattice,
            |fresh| fresh.act_word(&[GenSymbol::f(-1), GenSymbol::f(0)], &w),
            BatchSize::SmallInput,
        )
    });
}

fn scans(c: &mut Criterion) {
    let mut group = c.benchmark_group("scans");
    group.sample_size(10);
    group.bench_function("representation property, quotient box(2,2)", |b| {
        b.iter_batched(
            quotient,
            |m| representation_property(&m, AlgebraId::AffineSl2, 2, TruncationBox::new(2, 2)).unwrap(),
            BatchSize::SmallInput,
        )
    });
    group.bench_function("Whittaker vectors, critical box(2,2)", |b| {
        b.iter_batched(critical, |m| whittaker_vectors(&m, &q(2), &q(3), TruncationBox::new(2, 2)), BatchSize::SmallInput)
    });
    let m = noncritical();
    let vectors: Vec<_> = m.box_basis(TruncationBox::new(3, 3)).into_iter().map(|l| m.act(&GenSymbol::f(1), &LinComb::basis(l))).collect();
    group.bench_function("rank of f(1) images, box(3,3)", |b| b.iter(|| rank(black_box(&vectors))));
    group.finish();
}

criterion_group!(benches, rationals, rewriting, module_actions, scans);
criterion_main!(benches);
