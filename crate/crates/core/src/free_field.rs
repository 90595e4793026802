//! Free-field realization: a Weyl algebra `[a(n), a*(m)] = δ_{n+m,0}` and a
//! Heisenberg field `b`, with `e, h, f` given by the Wakimoto formulas.
//!
//! Fields are indexed as `a(z) = Σ a(n) z^{-n-1}`, `a*(z) = Σ a*(n) z^{-n}`,
//! `b(z) = Σ b(n) z^{-n-1}`. Normal ordering moves `a(n)` with `n >= 0` to
//! the right and keeps `a(n)` with `n <= -1` on the left.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{spectral_flow_gen, AlgebraId, Family, GenSymbol};
use crate::exact::{LinComb, Rational};
use crate::fields::central_character_from_chi;
use crate::laurent::{Convention, LaurentData};
use crate::module::{ActionCache, Module, ModuleError, TruncationBox};

/// Basis vector `Π a(-λ_i) Π a*(1-μ_j) Π b(-ν_k)` applied to the cyclic
/// vector. Each part is a partition listed in decreasing order.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct WakLabel {
    pub lambda: Vec<u32>,
    pub mu: Vec<u32>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub b: Vec<u32>,
}

fn insert_part(p: &[u32], x: u32) -> Vec<u32> {
    let mut v = p.to_vec();
    let pos = v.iter().position(|&y| y < x).unwrap_or(v.len());
    v.insert(pos, x);
    v
}

/// Removes one copy of `x`, returning the multiplicity it had.
fn remove_part(p: &[u32], x: u32) -> Option<(Vec<u32>, u32)> {
    let count = p.iter().filter(|&&y| y == x).count() as u32;
    if count == 0 {
        return None;
    }
    let mut v = p.to_vec();
    let pos = v.iter().position(|&y| y == x).expect("present");
    v.remove(pos);
    Some((v, count))
}

impl WakLabel {
    pub fn weight(&self) -> i64 {
        let a: u32 = self.lambda.iter().sum();
        let s: u32 = self.mu.iter().map(|m| m - 1).sum();
        let b: u32 = self.b.iter().sum();
        (a + s + b) as i64
    }

    pub fn length(&self) -> u32 {
        (self.lambda.len() + self.mu.len() + self.b.len()) as u32
    }

    fn weyl_weight(&self) -> i64 {
        let a: u32 = self.lambda.iter().sum();
        let s: u32 = self.mu.iter().map(|m| m - 1).sum();
        (a + s) as i64
    }
}

/// How the Heisenberg field acts on the second tensor factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HeisenbergPart {
    /// Fock-type module `N_1(χ0, χ1)`: `b(0) = χ0`, `b(1) = χ1`, `b(m >= 2)`
    /// kills the vacuum, `b(-n)` free, `[b(n), b(m)] = 2(κ+2) n δ_{n+m,0}`.
    Fock { chi0: Rational, chi1: Rational },
    /// One-dimensional module at level `-2` where `b(n)` acts as `χ_n`.
    Character { chi: LaurentData },
}

/// `M_1(λ, μ) ⊗ (Heisenberg part)` with the Wakimoto action of affine sl2.
pub struct Wakimoto {
    pub lambda: Rational,
    pub mu: Rational,
    pub kappa: Rational,
    pub heis: HeisenbergPart,
    cache: ActionCache<WakLabel>,
}

/// `M_1(λ, μ) ⊗ N_1(χ0, χ1)` at level `κ`.
pub fn tensor_n1(lambda: Rational, mu: Rational, kappa: Rational, chi0: Rational, chi1: Rational) -> Wakimoto {
    Wakimoto { lambda, mu, kappa, heis: HeisenbergPart::Fock { chi0, chi1 }, cache: ActionCache::default() }
}

/// `M_1(λ, μ) ⊗ C_χ` at the critical level, `χ` given in any convention.
pub fn one_dim_chi(lambda: Rational, mu: Rational, chi: &LaurentData) -> Wakimoto {
    Wakimoto {
        lambda,
        mu,
        kappa: Rational::from_int(-2),
        heis: HeisenbergPart::Character { chi: chi.to_convention(Convention::Weight1) },
        cache: ActionCache::default(),
    }
}

/// The Weyl module `M_1(λ, μ)` alone, acted on by `phi(n)` and `e(n)`.
pub fn weyl(lambda: Rational, mu: Rational) -> Wakimoto {
    one_dim_chi(lambda, mu, &LaurentData::zero(Convention::Weight1))
}

type Vector = LinComb<WakLabel>;

impl Wakimoto {
    fn chi_of(&self, n: i64) -> Rational {
        match &self.heis {
            HeisenbergPart::Fock { chi0, chi1 } => match n {
                0 => chi0.clone(),
                1 => chi1.clone(),
                _ => Rational::zero(),
            },
            HeisenbergPart::Character { chi } => chi.coeff(n),
        }
    }

    /// Largest `n` with `b(n)` acting on the vacuum by a nonzero scalar.
    fn chi_top(&self) -> i64 {
        match &self.heis {
            HeisenbergPart::Fock { .. } => 1,
            HeisenbergPart::Character { chi } => chi.max_mode().unwrap_or(0).max(1),
        }
    }

    pub fn a(&self, n: i64, v: &Vector) -> Vector {
        v.flat_map(|l| {
            if n <= -1 {
                let mut l2 = l.clone();
                l2.lambda = insert_part(&l.lambda, (-n) as u32);
                return LinComb::basis(l2);
            }
            let mut out = LinComb::zero();
            if n == 0 {
                out.add_term(l.clone(), self.lambda.clone());
            }
            // contraction with a*(-n)
            if let Some((mu, count)) = remove_part(&l.mu, (n + 1) as u32) {
                out.add_term(WakLabel { mu, ..l.clone() }, Rational::from_int(count as i64));
            }
            out
        })
    }

    pub fn astar(&self, m: i64, v: &Vector) -> Vector {
        v.flat_map(|l| {
            if m <= 0 {
                let mut l2 = l.clone();
                l2.mu = insert_part(&l.mu, (1 - m) as u32);
                return LinComb::basis(l2);
            }
            let mut out = LinComb::zero();
            if m == 1 {
                out.add_term(l.clone(), self.mu.clone());
            }
            // [a*(m), a(-m)] = -1
            if let Some((lambda, count)) = remove_part(&l.lambda, m as u32) {
                out.add_term(WakLabel { lambda, ..l.clone() }, Rational::from_int(-(count as i64)));
            }
            out
        })
    }

    pub fn b(&self, n: i64, v: &Vector) -> Vector {
        match &self.heis {
            HeisenbergPart::Character { chi } => v.scaled(&chi.coeff(n)),
            HeisenbergPart::Fock { .. } => v.flat_map(|l| {
                if n <= -1 {
                    let mut l2 = l.clone();
                    l2.b = insert_part(&l.b, (-n) as u32);
                    return LinComb::basis(l2);
                }
                let mut out = LinComb::term(l.clone(), self.chi_of(n));
                if n >= 1 {
                    if let Some((b, count)) = remove_part(&l.b, n as u32) {
                        let c = Rational::from_int(2 * n * count as i64) * (&self.kappa + Rational::from_int(2));
                        out.add_term(WakLabel { b, ..l.clone() }, c);
                    }
                }
                out
            }),
        }
    }

    /// `:a*(m) a(j):`.
    fn astar_a(&self, m: i64, j: i64, v: &Vector) -> Vector {
        if j <= -1 {
            self.a(j, &self.astar(m, v))
        } else {
            self.astar(m, &self.a(j, v))
        }
    }

    /// `φ(n) = -2 Σ_j :a*(n-j) a(j):`, the Weyl part of `h(n)`.
    pub fn phi(&self, n: i64, v: &Vector) -> Vector {
        let mut out = LinComb::zero();
        for l in v.labels() {
            let u = LinComb::term(l.clone(), v.coeff(l));
            let w = l.weyl_weight();
            let mut acc = LinComb::zero();
            for j in (n - w - 2)..=(w + 1) {
                acc.add_assign(&self.astar_a(n - j, j, &u));
            }
            out.add_scaled(&acc, &Rational::from_int(-2));
        }
        out
    }

    fn h(&self, n: i64, v: &Vector) -> Vector {
        self.phi(n, v).plus(&self.b(n, v))
    }

    /// `f(n) = -Σ :a*(m1) a*(m2) a(j): - κ n a*(n) + Σ a*(m) b(n-m)`.
    fn f(&self, n: i64, v: &Vector) -> Vector {
        let mut out = LinComb::zero();
        for l in v.labels() {
            let u = LinComb::term(l.clone(), v.coeff(l));
            let w = l.weyl_weight();
            for j in (n - 2 * w - 3)..=(w + 1) {
                let right_first = j >= 0;
                for m2 in (n - j - w - 2)..=(w + 2) {
                    let m1 = n - j - m2;
                    let t = if right_first {
                        self.astar(m1, &self.astar(m2, &self.a(j, &u)))
                    } else {
                        self.a(j, &self.astar(m1, &self.astar(m2, &u)))
                    };
                    out.sub_assign(&t);
                }
            }
            out.add_scaled(&self.astar(n, &u), &-(&self.kappa * Rational::from_int(n)));
            let top = (l.weight() + 1).max(self.chi_top());
            let lo = match &self.heis {
                HeisenbergPart::Character { chi } => n - chi.max_mode().unwrap_or(0).max(w + 2),
                HeisenbergPart::Fock { .. } => n - top - 1,
            };
            let hi = match &self.heis {
                HeisenbergPart::Character { chi } => n - chi.min_mode().unwrap_or(0).min(-w - 2),
                HeisenbergPart::Fock { .. } => w + 2,
            };
            for m in lo..=hi {
                out.add_assign(&self.astar(m, &self.b(n - m, &u)));
            }
        }
        out
    }

    /// Sanity bound used by mode sums: `x(m)` kills `label` for larger `m`.
    fn bound(&self, label: &WakLabel) -> i64 {
        label.weight() + self.chi_top() + 1
    }
}

impl Module for Wakimoto {
    type Label = WakLabel;

    fn level(&self) -> Rational {
        self.kappa.clone()
    }

    fn supports(&self, g: &GenSymbol) -> bool {
        AlgebraId::AffineSl2.contains(g) || g.family == Family::Phi
    }

    fn act_basis(&self, g: &GenSymbol, label: &WakLabel) -> Vector {
        if g.family == Family::C {
            return LinComb::term(label.clone(), self.kappa.clone());
        }
        self.cache.get_or_compute(g, label, || {
            let v = LinComb::basis(label.clone());
            match g.family {
                Family::E => self.a(g.mode, &v),
                Family::H => self.h(g.mode, &v),
                Family::F => self.f(g.mode, &v),
                Family::Phi => self.phi(g.mode, &v),
                _ => panic!("{g} does not act on a Wakimoto module"),
            }
        })
    }

    fn cyclic(&self) -> WakLabel {
        WakLabel::default()
    }

    fn weight(&self, label: &WakLabel) -> i64 {
        label.weight()
    }

    fn length(&self, label: &WakLabel) -> u32 {
        label.length()
    }

    fn box_basis(&self, b: TruncationBox) -> Vec<WakLabel> {
        let with_b = matches!(self.heis, HeisenbergPart::Fock { .. });
        // generators: a(-n) weight n, a*(1-n) weight n-1, b(-n) weight n
        let mut gens: Vec<(u8, u32, u32)> = Vec::new();
        for n in 1..=b.max_weight {
            gens.push((0, n, n));
        }
        for n in 1..=b.max_weight + 1 {
            gens.push((1, n, n - 1));
        }
        if with_b {
            for n in 1..=b.max_weight {
                gens.push((2, n, n));
            }
        }
        let mut out = Vec::new();
        fn rec(
            gens: &[(u8, u32, u32)],
            start: usize,
            wleft: u32,
            lleft: u32,
            cur: &mut WakLabel,
            out: &mut Vec<WakLabel>,
        ) {
            out.push(cur.clone());
            if lleft == 0 {
                return;
            }
            for i in start..gens.len() {
                let (kind, part, w) = gens[i];
                if w > wleft {
                    continue;
                }
                let slot = match kind {
                    0 => &mut cur.lambda,
                    1 => &mut cur.mu,
                    _ => &mut cur.b,
                };
                slot.push(part);
                rec(gens, i, wleft - w, lleft - 1, cur, out);
                let slot = match kind {
                    0 => &mut cur.lambda,
                    1 => &mut cur.mu,
                    _ => &mut cur.b,
                };
                slot.pop();
            }
        }
        // parts are pushed in increasing order; sort each label afterwards
        rec(&gens, 0, b.max_weight, b.max_length, &mut WakLabel::default(), &mut out);
        for l in &mut out {
            l.lambda.sort_unstable_by(|a, b| b.cmp(a));
            l.mu.sort_unstable_by(|a, b| b.cmp(a));
            l.b.sort_unstable_by(|a, b| b.cmp(a));
        }
        out
    }

    fn annihilation_bound(&self, label: &WakLabel) -> i64 {
        self.bound(label)
    }

    fn format_label(&self, label: &WakLabel) -> String {
        let mut s = String::new();
        for &p in &label.lambda {
            s.push_str(&format!("a({})·", -(p as i64)));
        }
        for &p in &label.mu {
            s.push_str(&format!("a*({})·", 1 - p as i64));
        }
        for &p in &label.b {
            s.push_str(&format!("b({})·", -(p as i64)));
        }
        s.push('v');
        s
    }
}

/// A module twisted by spectral flow: `x` acts as `π_s(x)`.
pub struct Twisted<'a, M: Module> {
    pub inner: &'a M,
    pub s: i64,
}

impl<M: Module> Module for Twisted<'_, M> {
    type Label = M::Label;

    fn level(&self) -> Rational {
        self.inner.level()
    }

    fn supports(&self, g: &GenSymbol) -> bool {
        AlgebraId::AffineSl2.contains(g)
    }

    fn act_basis(&self, g: &GenSymbol, label: &M::Label) -> LinComb<M::Label> {
        let image = spectral_flow_gen(self.s, g).expect("affine generator");
        self.inner.act_lin(&image, &LinComb::basis(label.clone()))
    }

    fn cyclic(&self) -> M::Label {
        self.inner.cyclic()
    }

    fn weight(&self, label: &M::Label) -> i64 {
        self.inner.weight(label)
    }

    fn length(&self, label: &M::Label) -> u32 {
        self.inner.length(label)
    }

    fn box_basis(&self, b: TruncationBox) -> Vec<M::Label> {
        self.inner.box_basis(b)
    }

    fn annihilation_bound(&self, label: &M::Label) -> i64 {
        self.inner.annihilation_bound(label) + self.s.abs()
    }

    fn format_label(&self, label: &M::Label) -> String {
        self.inner.format_label(label)
    }
}

/// One verified identity on a cyclic vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub description: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

fn record(m: &Wakimoto, description: String, actual: &Vector, expected: &Vector) -> CheckRecord {
    CheckRecord {
        description,
        expected: m.format_vector(expected),
        actual: m.format_vector(actual),
        pass: actual == expected,
    }
}

fn record_on<M: Module>(m: &M, description: String, actual: &LinComb<M::Label>, expected: &LinComb<M::Label>) -> CheckRecord {
    CheckRecord {
        description,
        expected: m.format_vector(expected),
        actual: m.format_vector(actual),
        pass: actual == expected,
    }
}

/// Cyclic-vector identities of `M_1(λ,μ) ⊗ N_1(χ0,χ1)`. The `f(1)` identity
/// uses the sign of the `μ² a(-1)` term dictated by `[e(0), f(1)] = h(1)`.
pub fn cyclic_vector_identities(m: &Wakimoto, max_n: i64) -> Vec<CheckRecord> {
    let v = m.cyclic_vector();
    let (lambda, mu, kappa) = (&m.lambda, &m.mu, &m.kappa);
    let (chi0, chi1) = (m.chi_of(0), m.chi_of(1));
    let a0 = m.astar(0, &v);
    let am1 = m.a(-1, &v);
    let mut expected_f1 = a0.scaled(&(&chi1 - Rational::from_int(2) * mu * lambda));
    expected_f1.add_scaled(&v, &(mu * &(&chi0 - kappa)));
    expected_f1.add_scaled(&am1, &-(mu * mu));
    let mut out = vec![
        record(m, "f(1)v = (χ1 - 2μλ) a*(0)v + μ(χ0 - κ) v - μ² a(-1)v".into(), &m.act(&GenSymbol::f(1), &v), &expected_f1),
        record(
            m,
            "f(2)v = μ(χ1 - λμ) v".into(),
            &m.act(&GenSymbol::f(2), &v),
            &v.scaled(&(mu * &(&chi1 - lambda * mu))),
        ),
        record(m, "e(0)v = λ v".into(), &m.act(&GenSymbol::e(0), &v), &v.scaled(lambda)),
        record(
            m,
            "h(1)v = (χ1 - 2μλ) v".into(),
            &m.act(&GenSymbol::h(1), &v),
            &v.scaled(&(&chi1 - Rational::from_int(2) * mu * lambda)),
        ),
    ];
    for n in 1..=max_n {
        for g in [GenSymbol::e(n), GenSymbol::h(n + 1), GenSymbol::f(n + 2)] {
            out.push(record(m, format!("{g}v = 0"), &m.act(&g, &v), &LinComb::zero()));
        }
    }
    out
}

/// Conditions satisfied by the cyclic vector of `M_1(λ,μ) ⊗ C_χ` when `χ`
/// has top mode `p >= 2`, optionally after twisting by spectral flow `s`.
pub fn generalized_whittaker_check(m: &Wakimoto, s: i64, max_n: i64) -> Result<Vec<CheckRecord>, ModuleError> {
    let HeisenbergPart::Character { chi } = &m.heis else {
        return Err(ModuleError::Domain("generalized conditions need a one-dimensional χ-module".into()));
    };
    let p = chi.max_mode().filter(|&p| p >= 2).ok_or_else(|| {
        ModuleError::Domain("generalized conditions need a top mode p >= 2".into())
    })?;
    let t = Twisted { inner: m, s };
    let v = t.cyclic_vector();
    let (lambda, mu) = (&m.lambda, &m.mu);
    let zero = LinComb::zero();
    let mut out = vec![
        record_on(&t, format!("e({s})v = λ v"), &t.act(&GenSymbol::e(s), &v), &v.scaled(lambda)),
        record_on(
            &t,
            "h(1)v = (χ1 - 2λμ) v".into(),
            &t.act(&GenSymbol::h(1), &v),
            &v.scaled(&(chi.coeff(1) - Rational::from_int(2) * lambda * mu)),
        ),
    ];
    for k in 2..=p {
        out.push(record_on(&t, format!("h({k})v = χ{k} v"), &t.act(&GenSymbol::h(k), &v), &v.scaled(&chi.coeff(k))));
    }
    out.push(record_on(
        &t,
        format!("f({})v = μ χ{p} v", p + 1 - s),
        &t.act(&GenSymbol::f(p + 1 - s), &v),
        &v.scaled(&(mu * &chi.coeff(p))),
    ));
    for n in 1..=max_n {
        for g in [GenSymbol::e(n + s), GenSymbol::h(n + p), GenSymbol::f(n + p + 1 - s)] {
            out.push(record_on(&t, format!("{g}v = 0"), &t.act(&g, &v), &zero));
        }
    }
    Ok(out)
}

/// Invariants separating the critical-level modules `M_1(λ,μ) ⊗ C_χ` with
/// `p >= 2`: `λ`, `μ`, the modes `χ_1..χ_p`, and the central character.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fingerprint {
    pub lambda: Rational,
    pub mu: Rational,
    pub positive_modes: BTreeMap<i64, Rational>,
    pub central_character: LaurentData,
}

/// Scalars by which `T(n)` acts on `M_1 ⊗ C_χ`: `1/4 (χ² - 2∂χ)`, half of
/// [`central_character_from_chi`] because `T` carries the `1/2` of `(κ+2) L`.
pub fn realized_central_character(chi: &LaurentData) -> LaurentData {
    central_character_from_chi(chi).scaled(&Rational::frac(1, 2))
}

pub fn nonisomorphism_fingerprint(m: &Wakimoto) -> Result<Fingerprint, ModuleError> {
    let HeisenbergPart::Character { chi } = &m.heis else {
        return Err(ModuleError::Domain("fingerprints are defined for one-dimensional χ-modules".into()));
    };
    let positive_modes = chi.coeffs.iter().filter(|(n, _)| **n >= 1).map(|(n, c)| (*n, c.clone())).collect();
    Ok(Fingerprint {
        lambda: m.lambda.clone(),
        mu: m.mu.clone(),
        positive_modes,
        central_character: realized_central_character(chi),
    })
}

/// Checks that `v` is a Whittaker vector of type `(λ, 0)` with the predicted
/// `L(0)` eigenvalue when `μ = 0` and `χ1 = 0`.
pub fn degenerate_whittaker_check(m: &Wakimoto) -> Result<Vec<CheckRecord>, ModuleError> {
    let HeisenbergPart::Fock { chi0, chi1 } = &m.heis else {
        return Err(ModuleError::Domain("the degenerate check needs the Fock-type Heisenberg factor".into()));
    };
    if !m.mu.is_zero() || !chi1.is_zero() {
        return Err(ModuleError::Domain("the degenerate check needs μ = 0 and χ1 = 0".into()));
    }
    let v = m.cyclic_vector();
    let l0 = crate::fields::l_mode(m, 0, &v)?;
    let expected = (chi0 * &(chi0 + Rational::from_int(2)))
        .checked_div(&(Rational::from_int(4) * (&m.kappa + Rational::from_int(2))))
        .map_err(|_| ModuleError::Domain("L(0) needs a noncritical level".into()))?;
    Ok(vec![
        record(m, "e(0)v = λ v".into(), &m.act(&GenSymbol::e(0), &v), &v.scaled(&m.lambda)),
        record(m, "f(1)v = 0".into(), &m.act(&GenSymbol::f(1), &v), &LinComb::zero()),
        record(m, "L(0)v = χ0(χ0 + 2)/(4(κ + 2)) v".into(), &l0, &v.scaled(&expected)),
    ])
}

/// Creation generators `e(-n-1)` and `h(-m)` with their weights.
pub fn eh_generators(max_weight: u32) -> Vec<(GenSymbol, u32)> {
    let mut gens: Vec<(GenSymbol, u32)> = (1..=max_weight).rev().map(|k| (GenSymbol::e(-(k as i64)), k)).collect();
    gens.extend((0..=max_weight).rev().map(|k| (GenSymbol::h(-(k as i64)), k)));
    gens
}

/// Same as [`eh_generators`] with `φ` in place of `h`.
pub fn e_phi_generators(max_weight: u32) -> Vec<(GenSymbol, u32)> {
    eh_generators(max_weight)
        .into_iter()
        .map(|(g, w)| if g.family == Family::H { (GenSymbol::phi(g.mode), w) } else { (g, w) })
        .collect()
}

/// Box large enough that the monomials in it span the module's `b`-box:
/// trading an `a*` factor for an `h` or `φ` mode costs extra `a` factors,
/// and with `μ ≠ 0` one unit of weight per factor.
fn spanning_box(m: &Wakimoto, b: TruncationBox) -> TruncationBox {
    let extra = if m.mu.is_zero() { 0 } else { b.max_length };
    TruncationBox::new(b.max_weight + extra, b.max_length + b.max_weight + extra)
}

/// Basis check for `e(-n-1)...h(-m)... v` in a critical-level module `M_1 ⊗ C_χ`.
pub fn eh_basis_check(m: &Wakimoto, b: TruncationBox) -> Result<crate::checks::BasisReport, ModuleError> {
    if !matches!(m.heis, HeisenbergPart::Character { .. }) {
        return Err(ModuleError::Domain("the e/h basis lives in the critical-level quotient".into()));
    }
    if m.lambda.is_zero() {
        return Err(ModuleError::Domain("the e/h basis needs λ ≠ 0".into()));
    }
    let sb = spanning_box(m, b);
    Ok(crate::checks::pbw_basis_report(m, &eh_generators(sb.max_weight), b, sb))
}

/// Rank of the span of ordered `e`, `φ` monomials on `v` against the box,
/// which by the ordering argument equals the span of all words.
pub fn cyclicity_probe(m: &Wakimoto, b: TruncationBox) -> Result<crate::checks::BasisReport, ModuleError> {
    if m.lambda.is_zero() {
        return Err(ModuleError::Domain("cyclicity needs λ ≠ 0".into()));
    }
    let sb = spanning_box(m, b);
    Ok(crate::checks::pbw_basis_report(m, &e_phi_generators(sb.max_weight), b, sb))
}

/// Whether the span of `w` under the lowering operators `e(n ≥ 0)` and
/// `φ(n ≥ 1)` reaches the line of the cyclic vector.
pub fn irreducibility_probe(m: &Wakimoto, w: &Vector) -> Result<bool, ModuleError> {
    if m.lambda.is_zero() {
        return Err(ModuleError::Domain("irreducibility needs λ ≠ 0".into()));
    }
    if w.is_zero() {
        return Ok(false);
    }
    let target = m.cyclic_vector();
    let mut span = crate::exact::Subspace::new();
    let mut queue = vec![w.clone()];
    span.insert(w);
    while let Some(x) = queue.pop() {
        if span.contains(&target) {
            return Ok(true);
        }
        let bound = m.vector_bound(&x);
        let lowering = (0..=bound).map(GenSymbol::e).chain((1..=bound).map(GenSymbol::phi));
        for g in lowering {
            let y = m.act(&g, &x);
            if span.insert(&y) {
                queue.push(y);
            }
        }
    }
    Ok(span.contains(&target))
}
