//! Universal Whittaker modules over affine sl2 and the loop Borel plus
//! Virasoro algebra, the critical-level quotient with prescribed central
//! character, and the computations built on top of them.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::algebra::{raw_bracket, AlgebraId, Family, GenSymbol};
use crate::exact::{binomial, kernel_of_map, LinComb, Rational, Subspace};
use crate::fields::l_mode;
use crate::laurent::{Convention, LaurentData};
use crate::module::{
    enumerate_monomials, format_monomial, monomial_weight, Module, ModuleError, Monomial, PbwModule, PbwRules,
    TruncationBox,
};
use crate::rewrite::{borel_vir_generator, borel_vir_slot, length_top_cmp, ExponentVector, SortKey};

fn affine_creation_key(g: &GenSymbol) -> Option<SortKey> {
    match g.family {
        Family::E if g.mode <= -1 => Some((0, g.mode)),
        Family::H if g.mode <= 0 => Some((1, g.mode)),
        Family::F if g.mode <= 0 => Some((2, g.mode)),
        _ => None,
    }
}

/// `e(0) -> lambda`, `f(1) -> mu`, every other positive generator kills.
fn whittaker_vacuum(g: &GenSymbol, lambda: &Rational, mu: &Rational) -> LinComb<Monomial> {
    let empty = Vec::new();
    match (g.family, g.mode) {
        (Family::E, 0) => LinComb::term(empty, lambda.clone()),
        (Family::F, 1) => LinComb::term(empty, mu.clone()),
        (Family::E, n) if n >= 1 => LinComb::zero(),
        (Family::H, n) if n >= 1 => LinComb::zero(),
        (Family::F, n) if n >= 2 => LinComb::zero(),
        _ => panic!("{g} is a creation generator, not a vacuum annihilator"),
    }
}

/// Parameters of the universal Whittaker module `V(lambda, mu, kappa)`.
#[derive(Clone, Debug)]
pub struct UniversalRules {
    pub lambda: Rational,
    pub mu: Rational,
    pub kappa: Rational,
}

impl PbwRules for UniversalRules {
    fn bracket(&self, x: &GenSymbol, y: &GenSymbol) -> LinComb<GenSymbol> {
        raw_bracket(x, y)
    }

    fn creation_key(&self, g: &GenSymbol) -> Option<SortKey> {
        affine_creation_key(g)
    }

    fn central(&self, g: &GenSymbol) -> Option<Rational> {
        (g.family == Family::C).then(|| self.kappa.clone())
    }

    fn vacuum(&self, g: &GenSymbol, _: &PbwModule<Self>) -> LinComb<Monomial> {
        whittaker_vacuum(g, &self.lambda, &self.mu)
    }
}

/// Universal Whittaker module with basis `e(...) h(...) f(...) w`, creation
/// modes `e(n <= -1)`, `h(n <= 0)`, `f(n <= 0)`.
pub type UniversalWhittaker = PbwModule<UniversalRules>;

pub fn universal(lambda: Rational, mu: Rational, kappa: Rational) -> UniversalWhittaker {
    PbwModule::new(UniversalRules { lambda, mu, kappa })
}

fn affine_creation_gens(max_weight: u32, with_f: bool) -> Vec<(GenSymbol, u32)> {
    let w = max_weight as i64;
    let mut gens: Vec<(GenSymbol, u32)> = Vec::new();
    gens.extend((1..=w).rev().map(|n| (GenSymbol::e(-n), n as u32)));
    gens.extend((0..=w).rev().map(|n| (GenSymbol::h(-n), n as u32)));
    if with_f {
        gens.extend((0..=w).rev().map(|n| (GenSymbol::f(-n), n as u32)));
    }
    gens
}

macro_rules! affine_module_common {
    () => {
        fn supports(&self, g: &GenSymbol) -> bool {
            AlgebraId::AffineSl2.contains(g)
        }

        fn act_basis(&self, g: &GenSymbol, label: &Monomial) -> LinComb<Monomial> {
            self.apply(g, label)
        }

        fn cyclic(&self) -> Monomial {
            Vec::new()
        }

        fn weight(&self, label: &Monomial) -> i64 {
            monomial_weight(label)
        }

        fn length(&self, label: &Monomial) -> u32 {
            label.len() as u32
        }

        fn annihilation_bound(&self, label: &Monomial) -> i64 {
            monomial_weight(label) + 1
        }

        fn format_label(&self, label: &Monomial) -> String {
            format_monomial(label, "w")
        }
    };
}

impl Module for UniversalWhittaker {
    type Label = Monomial;

    fn level(&self) -> Rational {
        self.rules.kappa.clone()
    }

    fn box_basis(&self, b: TruncationBox) -> Vec<Monomial> {
        enumerate_monomials(&affine_creation_gens(b.max_weight, true), b)
    }

    affine_module_common!();
}

/// Parameters of the critical-level quotient `V(lambda, mu, -2, c)`, where
/// every `T(n)` acts on the cyclic vector by the scalar `c_n`.
#[derive(Clone, Debug)]
pub struct CriticalRules {
    pub lambda: Rational,
    pub mu: Rational,
    /// Weight-two coefficients of `c(z)`, supported on modes `<= 0`.
    pub c: LaurentData,
}

impl PbwRules for CriticalRules {
    fn bracket(&self, x: &GenSymbol, y: &GenSymbol) -> LinComb<GenSymbol> {
        raw_bracket(x, y)
    }

    fn creation_key(&self, g: &GenSymbol) -> Option<SortKey> {
        match g.family {
            Family::F => None,
            _ => affine_creation_key(g),
        }
    }

    fn central(&self, g: &GenSymbol) -> Option<Rational> {
        (g.family == Family::C).then(|| Rational::from_int(-2))
    }

    fn vacuum(&self, g: &GenSymbol, module: &PbwModule<Self>) -> LinComb<Monomial> {
        if g.family == Family::F && g.mode <= 0 {
            self.f_on_vacuum(g.mode, module)
        } else {
            whittaker_vacuum(g, &self.lambda, &self.mu)
        }
    }
}

impl CriticalRules {
    /// Solves `T(m) w = c_m w` for `f(m) w`. Apart from the two terms
    /// `f(m) e(0) w`, the mode sum only involves `f(k) w` with `k > m`.
    fn f_on_vacuum(&self, m: i64, module: &PbwModule<Self>) -> LinComb<Monomial> {
        let w: LinComb<Monomial> = LinComb::basis(Vec::new());
        let half = Rational::frac(1, 2);
        let quarter = Rational::frac(1, 4);
        let act = |g: GenSymbol, v: &LinComb<Monomial>| module.apply_vec(&g, v);
        let mut rest = LinComb::zero();
        // 1/2 sum :e(k) f(m-k):, pivot at k = 0, zero for k > 0
        for k in (m - 1)..=-1 {
            rest.add_scaled(&act(GenSymbol::e(k), &act(GenSymbol::f(m - k), &w)), &half);
        }
        // 1/2 sum :f(k) e(m-k):, pivot at k = m
        for k in (m + 1)..=-1 {
            rest.add_scaled(&act(GenSymbol::f(k), &act(GenSymbol::e(m - k), &w)), &half);
        }
        if m == 0 {
            // e(0) f(0) = f(0) e(0) + h(0)
            rest.add_scaled(&act(GenSymbol::h(0), &w), &half);
        } else {
            rest.add_scaled(&act(GenSymbol::e(m), &act(GenSymbol::f(0), &w)), &half);
        }
        rest.add_scaled(&act(GenSymbol::e(m - 1), &w), &(&half * &self.mu));
        // 1/4 sum :h(k) h(m-k):
        for k in m..=-1 {
            rest.add_scaled(&act(GenSymbol::h(k), &act(GenSymbol::h(m - k), &w)), &quarter);
        }
        rest.add_scaled(&act(GenSymbol::h(m), &act(GenSymbol::h(0), &w)), &quarter);

        let mut out = w.scaled(&self.c.coeff(m));
        out.sub_assign(&rest);
        out.scaled(&self.lambda.recip().expect("lambda checked nonzero"))
    }
}

/// Critical-level quotient with basis `e(...) h(...) w`.
pub type CriticalQuotient = PbwModule<CriticalRules>;

/// `c` must be supported on modes `<= 0`; `T(1)` is fixed to `lambda mu`.
pub fn critical_quotient(lambda: Rational, mu: Rational, c: &LaurentData) -> Result<CriticalQuotient, ModuleError> {
    if lambda.is_zero() {
        return Err(ModuleError::Domain("the critical quotient needs lambda != 0".into()));
    }
    let c = c.to_convention(Convention::Weight2);
    if c.max_mode().is_some_and(|n| n > 0) {
        return Err(ModuleError::Domain("c(z) must be supported on modes <= 0".into()));
    }
    Ok(PbwModule::new(CriticalRules { lambda, mu, c }))
}

impl Module for CriticalQuotient {
    type Label = Monomial;

    fn level(&self) -> Rational {
        Rational::from_int(-2)
    }

    fn box_basis(&self, b: TruncationBox) -> Vec<Monomial> {
        enumerate_monomials(&affine_creation_gens(b.max_weight, false), b)
    }

    affine_module_common!();
}

/// Parameters of `V(lambda, mu, kappa1, kappa)` over the loop Borel plus
/// Virasoro algebra: `e(0) -> lambda`, `L(1) -> mu`, `c1 -> kappa1`, `c -> kappa`.
#[derive(Clone, Debug)]
pub struct BorelVirRules {
    pub lambda: Rational,
    pub mu: Rational,
    pub kappa1: Rational,
    pub kappa: Rational,
}

impl PbwRules for BorelVirRules {
    fn bracket(&self, x: &GenSymbol, y: &GenSymbol) -> LinComb<GenSymbol> {
        raw_bracket(x, y)
    }

    fn creation_key(&self, g: &GenSymbol) -> Option<SortKey> {
        borel_vir_slot(g).map(|s| (0, -(s as i64)))
    }

    fn central(&self, g: &GenSymbol) -> Option<Rational> {
        match g.family {
            Family::C => Some(self.kappa.clone()),
            Family::C1 => Some(self.kappa1.clone()),
            _ => None,
        }
    }

    fn vacuum(&self, g: &GenSymbol, _: &PbwModule<Self>) -> LinComb<Monomial> {
        let empty = Vec::new();
        match (g.family, g.mode) {
            (Family::E, 0) => LinComb::term(empty, self.lambda.clone()),
            (Family::L, 1) => LinComb::term(empty, self.mu.clone()),
            (Family::E | Family::H, n) if n >= 1 => LinComb::zero(),
            (Family::L, n) if n >= 2 => LinComb::zero(),
            _ => panic!("{g} does not annihilate the vacuum"),
        }
    }
}

pub type BorelVirModule = PbwModule<BorelVirRules>;

pub fn borel_vir(lambda: Rational, mu: Rational, kappa1: Rational, kappa: Rational) -> BorelVirModule {
    PbwModule::new(BorelVirRules { lambda, mu, kappa1, kappa })
}

impl Module for BorelVirModule {
    type Label = Monomial;

    fn level(&self) -> Rational {
        self.rules.kappa.clone()
    }

    fn supports(&self, g: &GenSymbol) -> bool {
        AlgebraId::BorelVir.contains(g)
    }

    fn act_basis(&self, g: &GenSymbol, label: &Monomial) -> LinComb<Monomial> {
        self.apply(g, label)
    }

    fn cyclic(&self) -> Monomial {
        Vec::new()
    }

    fn weight(&self, label: &Monomial) -> i64 {
        monomial_weight(label)
    }

    fn length(&self, label: &Monomial) -> u32 {
        label.len() as u32
    }

    fn box_basis(&self, b: TruncationBox) -> Vec<Monomial> {
        let mut gens: Vec<(GenSymbol, u32)> = Vec::new();
        for slot in (1..=3 * b.max_weight + 3).rev() {
            let g = borel_vir_generator(slot);
            if -g.mode <= b.max_weight as i64 {
                gens.push((g, (-g.mode) as u32));
            }
        }
        enumerate_monomials(&gens, b)
    }

    fn annihilation_bound(&self, label: &Monomial) -> i64 {
        monomial_weight(label) + 1
    }

    fn format_label(&self, label: &Monomial) -> String {
        format_monomial(label, "w")
    }
}

/// Exponent vector of a sorted loop Borel plus Virasoro monomial.
pub fn slots_of(m: &Monomial) -> ExponentVector {
    let mut v = ExponentVector::zero();
    for g in m {
        v.add(borel_vir_slot(g).expect("creation generator"), 1);
    }
    v
}

/// The monomial `u_i`, deepest slot leftmost.
pub fn monomial_of_slots(i: &ExponentVector) -> Monomial {
    let mut m = Vec::new();
    for (s, e) in i.iter().rev() {
        for _ in 0..e {
            m.push(borel_vir_generator(s));
        }
    }
    m
}

/// Basis label `u_{i,j,k} w` of the universal Whittaker module: `i_n` counts
/// `e(-n)`, `j_{n+1}` counts `h(-n)`, `k_{n+1}` counts `f(-n)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct UwBasisLabel {
    pub i: ExponentVector,
    pub j: ExponentVector,
    pub k: ExponentVector,
}

impl UwBasisLabel {
    pub fn from_monomial(m: &Monomial) -> Self {
        let mut l = UwBasisLabel { i: ExponentVector::zero(), j: ExponentVector::zero(), k: ExponentVector::zero() };
        for g in m {
            match g.family {
                Family::E => l.i.add((-g.mode) as u32, 1),
                Family::H => l.j.add((1 - g.mode) as u32, 1),
                Family::F => l.k.add((1 - g.mode) as u32, 1),
                _ => panic!("{g} is not an affine creation generator"),
            }
        }
        l
    }

    pub fn to_monomial(&self) -> Monomial {
        let mut m = Vec::new();
        for (s, e) in self.i.iter().rev() {
            m.extend(std::iter::repeat_n(GenSymbol::e(-(s as i64)), e as usize));
        }
        for (s, e) in self.j.iter().rev() {
            m.extend(std::iter::repeat_n(GenSymbol::h(1 - s as i64), e as usize));
        }
        for (s, e) in self.k.iter().rev() {
            m.extend(std::iter::repeat_n(GenSymbol::f(1 - s as i64), e as usize));
        }
        m
    }

    /// Order used for leading terms: `k`, then `j`, then `i`.
    pub fn cmp_basis_order(&self, other: &Self) -> Ordering {
        length_top_cmp(&self.k, &other.k)
            .then_with(|| length_top_cmp(&self.j, &other.j))
            .then_with(|| length_top_cmp(&self.i, &other.i))
    }
}

/// The vector obtained from `u_{i,j,k}` by replacing every `f(-n)` with the
/// Sugawara mode `L(-n)`, applied to the cyclic vector.
pub fn sugawara_basis_vector(m: &UniversalWhittaker, label: &UwBasisLabel) -> Result<LinComb<Monomial>, ModuleError> {
    let mut v = m.cyclic_vector();
    for (s, e) in label.k.iter() {
        for _ in 0..e {
            v = l_mode(m, 1 - s as i64, &v)?;
        }
    }
    for (s, e) in label.j.iter() {
        for _ in 0..e {
            v = m.act(&GenSymbol::h(1 - s as i64), &v);
        }
    }
    for (s, e) in label.i.iter() {
        for _ in 0..e {
            v = m.act(&GenSymbol::e(-(s as i64)), &v);
        }
    }
    Ok(v)
}

/// Exact basis of the Whittaker vectors of type `(lambda, mu)` inside the
/// span of the box. Images are computed in full before restriction.
pub fn whittaker_vectors<M: Module>(
    m: &M,
    lambda: &Rational,
    mu: &Rational,
    b: TruncationBox,
) -> Vec<LinComb<M::Label>> {
    let labels = m.box_basis(b);
    let top = b.max_weight as i64 + 1;
    let mut conditions: Vec<(GenSymbol, Rational)> =
        vec![(GenSymbol::e(0), lambda.clone()), (GenSymbol::f(1), mu.clone())];
    for n in 1..=top {
        conditions.push((GenSymbol::e(n), Rational::zero()));
        conditions.push((GenSymbol::f(n + 1), Rational::zero()));
        conditions.push((GenSymbol::h(n), Rational::zero()));
    }
    let images: Vec<LinComb<(usize, M::Label)>> = labels
        .iter()
        .map(|l| {
            let v = LinComb::basis(l.clone());
            let mut img = LinComb::zero();
            for (idx, (g, eta)) in conditions.iter().enumerate() {
                let mut r = m.act(g, &v);
                r.add_scaled(&v, &-eta);
                img.add_assign(&r.map_labels(|x| (idx, x.clone())));
            }
            img
        })
        .collect();
    kernel_of_map(&labels, &images)
}

/// Relation imposed on the cyclic vector of a universal module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Relation {
    /// `(L(0) - a) w`.
    L0Minus { a: Rational },
    /// `(h(0)/2 - L(0) - a) w`.
    HalfH0MinusL0 { a: Rational },
}

impl Relation {
    pub fn vector(&self, m: &UniversalWhittaker) -> Result<LinComb<Monomial>, ModuleError> {
        let w = m.cyclic_vector();
        let l0 = l_mode(m, 0, &w)?;
        Ok(match self {
            Relation::L0Minus { a } => l0.minus(&w.scaled(a)),
            Relation::HalfH0MinusL0 { a } => {
                let mut v = m.act(&GenSymbol::h(0), &w).scaled(&Rational::frac(1, 2));
                v.sub_assign(&l0);
                v.add_scaled(&w, &-a);
                v
            }
        })
    }
}

/// Quotient of a box span by the part of the submodule generated by a
/// relation vector that lies inside the box.
#[derive(Clone, Debug)]
pub struct TruncatedQuotient {
    pub truncation: TruncationBox,
    /// Images `u · r` for `u` ranging over box monomials.
    pub generators: Vec<LinComb<Monomial>>,
    pub relations: Subspace<Monomial>,
    pub complement: Vec<Monomial>,
}

impl TruncatedQuotient {
    /// Normal form of a box vector modulo the relations.
    pub fn project(&self, v: &LinComb<Monomial>) -> LinComb<Monomial> {
        self.relations.reduce(v)
    }

    pub fn dim(&self) -> usize {
        self.complement.len()
    }
}

pub fn truncated_quotient(
    m: &UniversalWhittaker,
    relation: &Relation,
    b: TruncationBox,
) -> Result<TruncatedQuotient, ModuleError> {
    let r = relation.vector(m)?;
    let labels = m.box_basis(b);
    let generators: Vec<LinComb<Monomial>> = labels.iter().map(|u| m.act_word(u, &r)).collect();
    // combinations whose components outside the box cancel
    let outside: Vec<LinComb<Monomial>> =
        generators.iter().map(|g| g.filter(|l| !m.in_box(l, b))).collect();
    let idx: Vec<usize> = (0..labels.len()).collect();
    let mut relations = Subspace::new();
    for combo in kernel_of_map(&idx, &outside) {
        let mut v = LinComb::zero();
        for (&i, c) in &combo {
            v.add_scaled(&generators[i], c);
        }
        relations.insert(&v);
    }
    let pivots: std::collections::BTreeSet<Monomial> = relations.pivots().cloned().collect();
    let complement = labels.into_iter().filter(|l| !pivots.contains(l)).collect();
    Ok(TruncatedQuotient { truncation: b, generators, relations, complement })
}

/// Adds `d` acting as `-L(0) + a` on a noncritical module.
pub struct SugawaraExtension<'a, M: Module> {
    pub inner: &'a M,
    pub a: Rational,
}

/// Adds `d` acting as `d0 - weight`, valid on graded modules such as the
/// universal module with `mu = 0`.
pub struct GradedExtension<'a, M: Module> {
    pub inner: &'a M,
    pub d0: Rational,
}

macro_rules! delegate_module {
    ($label:ty) => {
        fn level(&self) -> Rational {
            self.inner.level()
        }

        fn supports(&self, g: &GenSymbol) -> bool {
            g.family == Family::D || self.inner.supports(g)
        }

        fn cyclic(&self) -> $label {
            self.inner.cyclic()
        }

        fn weight(&self, label: &$label) -> i64 {
            self.inner.weight(label)
        }

        fn length(&self, label: &$label) -> u32 {
            self.inner.length(label)
        }

        fn box_basis(&self, b: TruncationBox) -> Vec<$label> {
            self.inner.box_basis(b)
        }

        fn annihilation_bound(&self, label: &$label) -> i64 {
            self.inner.annihilation_bound(label)
        }

        fn format_label(&self, label: &$label) -> String {
            self.inner.format_label(label)
        }
    };
}

impl<M: Module> Module for SugawaraExtension<'_, M> {
    type Label = M::Label;

    fn act_basis(&self, g: &GenSymbol, label: &M::Label) -> LinComb<M::Label> {
        if g.family == Family::D {
            let v = LinComb::basis(label.clone());
            let mut out = l_mode(self.inner, 0, &v).expect("noncritical level").scaled(&Rational::from_int(-1));
            out.add_scaled(&v, &self.a);
            out
        } else {
            self.inner.act_basis(g, label)
        }
    }

    delegate_module!(M::Label);
}

impl<M: Module> Module for GradedExtension<'_, M> {
    type Label = M::Label;

    fn act_basis(&self, g: &GenSymbol, label: &M::Label) -> LinComb<M::Label> {
        if g.family == Family::D {
            LinComb::term(label.clone(), &self.d0 - Rational::from_int(self.inner.weight(label)))
        } else {
            self.inner.act_basis(g, label)
        }
    }

    delegate_module!(M::Label);
}

/// `C[d] ⊗ M` with `x(n)` acting through `x(n) d = (d - n) x(n)`.
pub struct Induced<'a, M: Module> {
    pub inner: &'a M,
}

impl<M: Module> Module for Induced<'_, M> {
    type Label = (u32, M::Label);

    fn level(&self) -> Rational {
        self.inner.level()
    }

    fn supports(&self, g: &GenSymbol) -> bool {
        g.family == Family::D || self.inner.supports(g)
    }

    fn act_basis(&self, g: &GenSymbol, label: &(u32, M::Label)) -> LinComb<(u32, M::Label)> {
        let (k, base) = label;
        if g.family == Family::D {
            return LinComb::basis((k + 1, base.clone()));
        }
        let image = self.inner.act_basis(g, base);
        if g.is_central() || g.mode == 0 {
            return image.map_labels(|l| (*k, l.clone()));
        }
        // x(n) d^k = sum_j C(k, j) (-n)^{k-j} d^j x(n)
        let shift = Rational::from_int(-g.mode);
        let mut out = LinComb::zero();
        for j in 0..=*k {
            let c = binomial(*k, j) * shift.pow((k - j) as i32).expect("nonnegative power");
            for (l, x) in &image {
                out.add_term((j, l.clone()), &c * x);
            }
        }
        out
    }

    fn cyclic(&self) -> (u32, M::Label) {
        (0, self.inner.cyclic())
    }

    fn weight(&self, label: &(u32, M::Label)) -> i64 {
        self.inner.weight(&label.1)
    }

    fn length(&self, label: &(u32, M::Label)) -> u32 {
        label.0 + self.inner.length(&label.1)
    }

    fn box_basis(&self, b: TruncationBox) -> Vec<(u32, M::Label)> {
        let mut out = Vec::new();
        for l in self.inner.box_basis(b) {
            let len = self.inner.length(&l);
            for k in 0..=(b.max_length - len) {
                out.push((k, l.clone()));
            }
        }
        out
    }

    fn annihilation_bound(&self, label: &(u32, M::Label)) -> i64 {
        self.inner.annihilation_bound(&label.1)
    }

    fn format_label(&self, label: &(u32, M::Label)) -> String {
        match label.0 {
            0 => format!("1⊗{}", self.inner.format_label(&label.1)),
            1 => format!("d⊗{}", self.inner.format_label(&label.1)),
            k => format!("d^{}⊗{}", k, self.inner.format_label(&label.1)),
        }
    }
}

/// Casimir `2(c+2)d + h(0)^2/2 + h(0) + 2f(0)e(0)
/// + 2 sum_{n>=1} (e(-n)f(n) + f(-n)e(n) + h(-n)h(n)/2)` applied to `v`.
/// At the critical level the `d` term vanishes and `d` need not act.
pub fn casimir_omega<M: Module>(m: &M, v: &LinComb<M::Label>) -> Result<LinComb<M::Label>, ModuleError> {
    let shifted = m.level() + Rational::from_int(2);
    let mut out = LinComb::zero();
    if !shifted.is_zero() {
        out.add_scaled(&m.try_act(&GenSymbol::D, v)?, &(Rational::from_int(2) * &shifted));
    }
    let h0 = GenSymbol::h(0);
    let h0v = m.try_act(&h0, v)?;
    out.add_scaled(&m.act(&h0, &h0v), &Rational::frac(1, 2));
    out.add_assign(&h0v);
    out.add_scaled(&m.act(&GenSymbol::f(0), &m.act(&GenSymbol::e(0), v)), &Rational::from_int(2));
    let two = Rational::from_int(2);
    let term = |n: i64| {
        let mut t = m.act(&GenSymbol::e(-n), &m.act(&GenSymbol::f(n), v));
        t.add_assign(&m.act(&GenSymbol::f(-n), &m.act(&GenSymbol::e(n), v)));
        t.add_scaled(&m.act(&GenSymbol::h(-n), &m.act(&GenSymbol::h(n), v)), &Rational::frac(1, 2));
        t
    };
    let top = m.vector_bound(v).max(1);
    for n in 1..=top {
        out.add_scaled(&term(n), &two);
    }
    if !term(top + 1).is_zero() {
        return Err(ModuleError::Truncation(top + 1));
    }
    Ok(out)
}

/// Vectors `T(-k_1) ... T(-k_r) w` of the universal critical-level module,
/// `k_i >= 0`, that lie inside the box. Each is a Whittaker vector.
pub fn central_monomial_vectors(m: &UniversalWhittaker, b: TruncationBox) -> Vec<LinComb<Monomial>> {
    let gens: Vec<(GenSymbol, u32)> = (0..=b.max_weight as i64).rev().map(|k| (GenSymbol::t(-k), k as u32)).collect();
    let mut out = Vec::new();
    for word in enumerate_monomials(&gens, b) {
        let mut v = m.cyclic_vector();
        for g in word.iter().rev() {
            v = crate::fields::t_mode(m, g.mode, &v).expect("critical level");
        }
        if v.labels().all(|l| m.in_box(l, b)) {
            out.push(v);
        }
    }
    out
}

/// Outcome of expanding the Sugawara-type vectors `𝓤_{i,j,k} w` for every
/// label of a box.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisCertificate {
    pub labels: usize,
    pub rank: usize,
    /// Labels whose vector does not lead with `(λ/(κ+2))^{|k|} u_{i,j,k}`.
    pub leading_failures: Vec<String>,
}

impl BasisCertificate {
    pub fn pass(&self) -> bool {
        self.rank == self.labels && self.leading_failures.is_empty()
    }
}

pub fn basis_certificate(m: &UniversalWhittaker, b: TruncationBox) -> Result<BasisCertificate, ModuleError> {
    let shifted = &m.rules.kappa + Rational::from_int(2);
    let ratio = m
        .rules
        .lambda
        .checked_div(&shifted)
        .map_err(|_| ModuleError::Domain("the basis certificate needs a noncritical level".into()))?;
    let order = |a: &Monomial, b: &Monomial| UwBasisLabel::from_monomial(a).cmp_basis_order(&UwBasisLabel::from_monomial(b));
    let mut vectors = Vec::new();
    let mut leading_failures = Vec::new();
    for mono in m.box_basis(b) {
        let label = UwBasisLabel::from_monomial(&mono);
        let v = sugawara_basis_vector(m, &label)?;
        let expected = ratio.pow(label.k.norm() as i32).expect("nonzero ratio");
        let lead = crate::rewrite::leading_term(&v, order);
        if lead.as_ref() != Some(&(mono.clone(), expected.clone())) {
            let got = lead.map_or("0".to_string(), |(l, c)| format!("{c}·{}", format_monomial(&l, "w")));
            leading_failures.push(format!("{}: leads with {got}, expected {expected}", format_monomial(&mono, "w")));
        }
        vectors.push(v);
    }
    Ok(BasisCertificate { labels: vectors.len(), rank: crate::exact::rank(&vectors), leading_failures })
}

/// Smallest `k <= max` with `(x - eta)^k v = 0`.
pub fn nilpotency_order<M: Module>(
    m: &M,
    x: &GenSymbol,
    eta: &Rational,
    v: &LinComb<M::Label>,
    max: usize,
) -> Option<usize> {
    let mut cur = v.clone();
    for k in 0..=max {
        if cur.is_zero() {
            return Some(k);
        }
        let mut next = m.act(x, &cur);
        next.add_scaled(&cur, &-eta);
        cur = next;
    }
    None
}
