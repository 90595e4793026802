//! The half-lattice module `Π_λ` and the critical-level affine action on
//! `M_T(χ) ⊗ Π_λ`.
//!
//! Heisenberg fields `c = α + β`, `d = α - β` with `[c(m), d(n)] = 2m δ_{m+n,0}`
//! and `c, d` each isotropic. On `Π_λ` the zero mode `c(0)` is `-1`, `d(0)`
//! multiplies a polynomial variable, and `e^{nc}` sends `p(d(0)) w` to
//! `λ^n p(d(0) - 2n) w`. The exponential fields use the trivial cocycle.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraId, Family, GenSymbol};
use crate::exact::{binomial, LinComb, Rational};
use crate::laurent::{Convention, LaurentData};
use crate::module::{ActionCache, Module, ModuleError, TruncationBox};

/// `d(0)^{d0} Π c(-i) Π d(-j) w_λ`, partitions in decreasing order.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PiLabel {
    pub d0: u32,
    pub c: Vec<u32>,
    pub d: Vec<u32>,
}

impl PiLabel {
    pub fn weight(&self) -> i64 {
        (self.c.iter().sum::<u32>() + self.d.iter().sum::<u32>()) as i64
    }

    pub fn length(&self) -> u32 {
        self.d0 + (self.c.len() + self.d.len()) as u32
    }
}

/// Operators on `Π_λ` beyond the affine generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PiOp {
    A(i64),
    AInv(i64),
    AStar(i64),
    Alpha(i64),
    Beta(i64),
    C(i64),
    D(i64),
}

type Vector = LinComb<PiLabel>;

fn merge(p: &[u32], q: &[u32]) -> Vec<u32> {
    let mut v: Vec<u32> = p.iter().chain(q).copied().collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

fn remove_one(p: &[u32], x: u32) -> Option<(Vec<u32>, u32)> {
    let count = p.iter().filter(|&&y| y == x).count() as u32;
    let pos = p.iter().position(|&y| y == x)?;
    let mut v = p.to_vec();
    v.remove(pos);
    Some((v, count))
}

/// Multiplicities of a decreasing partition as `(part, count)` pairs.
fn multiplicities(p: &[u32]) -> Vec<(u32, u32)> {
    let mut out: Vec<(u32, u32)> = Vec::new();
    for &x in p {
        match out.last_mut() {
            Some((y, k)) if *y == x => *k += 1,
            _ => out.push((x, 1)),
        }
    }
    out
}

/// Coefficients of `exp(n Σ_{k>=1} c(-k) z^k / k)` up to `z^top`, as
/// combinations of `c`-partitions.
fn creation_series(n: i64, top: usize) -> Vec<LinComb<Vec<u32>>> {
    let mut p: Vec<LinComb<Vec<u32>>> = vec![LinComb::basis(Vec::new())];
    // j P_j = n Σ_k c(-k) P_{j-k}
    for j in 1..=top {
        let mut acc = LinComb::zero();
        for k in 1..=j {
            for (part, coef) in &p[j - k] {
                acc.add_term(merge(part, &[k as u32]), coef * &Rational::from_int(n));
            }
        }
        p.push(acc.scaled(&Rational::frac(1, j as i64)));
    }
    p
}

/// Coefficient of `y^q` after substituting `d(-k) -> d(-k) - 2n y^k` into the
/// monomial `Π d(-k)`.
fn shift_coefficient(n: i64, d: &[u32], q: u32) -> LinComb<Vec<u32>> {
    let groups = multiplicities(d);
    let mut out = LinComb::zero();
    fn rec(
        groups: &[(u32, u32)],
        i: usize,
        left: u32,
        kept: &mut Vec<u32>,
        coef: Rational,
        step: &Rational,
        out: &mut LinComb<Vec<u32>>,
    ) {
        if i == groups.len() {
            if left == 0 {
                out.add_term(kept.clone(), coef);
            }
            return;
        }
        let (part, count) = groups[i];
        for j in 0..=count {
            if j * part > left {
                break;
            }
            let c = &coef * &binomial(count, j) * step.pow(j as i32).expect("nonzero step");
            let before = kept.len();
            kept.extend(std::iter::repeat_n(part, (count - j) as usize));
            rec(groups, i + 1, left - j * part, kept, c, step, out);
            kept.truncate(before);
        }
    }
    let step = Rational::from_int(-2 * n);
    rec(&groups, 0, q, &mut Vec::new(), Rational::one(), &step, &mut out);
    out
}

/// `M_T(χ) ⊗ Π_λ`, where `T(n)` acts by the weight-two coefficients `χ(n)`.
pub struct PiModule {
    pub lambda: Rational,
    pub chi: LaurentData,
    cache: ActionCache<PiLabel>,
    inner: ActionCache<PiLabel, Inner>,
}

/// Exponential-field modes `(n, s)` memoized per basis label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct Inner(i64, i64);

pub fn pi_module(lambda: Rational, chi: &LaurentData) -> Result<PiModule, ModuleError> {
    if lambda.is_zero() {
        return Err(ModuleError::Domain("Π_λ needs λ ≠ 0".into()));
    }
    Ok(PiModule {
        lambda,
        chi: chi.to_convention(Convention::Weight2),
        cache: ActionCache::default(),
        inner: ActionCache::default(),
    })
}

impl PiModule {
    fn each(&self, v: &Vector, f: impl Fn(&PiLabel) -> Vector) -> Vector {
        v.flat_map(f)
    }

    pub fn c_mode(&self, n: i64, v: &Vector) -> Vector {
        self.each(v, |l| match n {
            0 => LinComb::term(l.clone(), Rational::from_int(-1)),
            n if n < 0 => LinComb::basis(PiLabel { c: merge(&l.c, &[(-n) as u32]), ..l.clone() }),
            n => match remove_one(&l.d, n as u32) {
                Some((d, k)) => LinComb::term(PiLabel { d, ..l.clone() }, Rational::from_int(2 * n * k as i64)),
                None => LinComb::zero(),
            },
        })
    }

    pub fn d_mode(&self, n: i64, v: &Vector) -> Vector {
        self.each(v, |l| match n {
            0 => LinComb::basis(PiLabel { d0: l.d0 + 1, ..l.clone() }),
            n if n < 0 => LinComb::basis(PiLabel { d: merge(&l.d, &[(-n) as u32]), ..l.clone() }),
            n => match remove_one(&l.c, n as u32) {
                Some((c, k)) => LinComb::term(PiLabel { c, ..l.clone() }, Rational::from_int(2 * n * k as i64)),
                None => LinComb::zero(),
            },
        })
    }

    pub fn alpha(&self, n: i64, v: &Vector) -> Vector {
        self.c_mode(n, v).plus(&self.d_mode(n, v)).scaled(&Rational::frac(1, 2))
    }

    pub fn beta(&self, n: i64, v: &Vector) -> Vector {
        self.c_mode(n, v).minus(&self.d_mode(n, v)).scaled(&Rational::frac(1, 2))
    }

    /// `e^{nc}` on the `d(0)` polynomial.
    fn lattice_shift(&self, n: i64, l: &PiLabel) -> Vector {
        let scale = self.lambda.pow(n as i32).expect("λ ≠ 0");
        let step = Rational::from_int(-2 * n);
        let mut out = LinComb::zero();
        for j in 0..=l.d0 {
            let c = &scale * &binomial(l.d0, j) * step.pow((l.d0 - j) as i32).expect("nonzero step");
            out.add_term(PiLabel { d0: j, ..l.clone() }, c);
        }
        out
    }

    /// Mode `Σ_p P_p Q_{p+s} e^{nc}` of the exponential field of `e^{nc}`,
    /// which changes the weight by `-s`.
    fn exp_mode(&self, n: i64, s: i64, v: &Vector) -> Vector {
        self.each(v, |l| self.inner.get_or_compute(&Inner(n, s), l, || self.exp_mode_basis(n, s, l)))
    }

    fn exp_mode_basis(&self, n: i64, s: i64, l: &PiLabel) -> Vector {
        let dw: u32 = l.d.iter().sum();
        if s > dw as i64 {
            return LinComb::zero();
        }
        let p_lo = (-s).max(0) as usize;
        let p_hi = (dw as i64 - s) as usize;
        let series = creation_series(n, p_hi);
        let shifted = self.lattice_shift(n, l);
        let mut out = LinComb::zero();
        for (p, terms) in series.iter().enumerate().skip(p_lo) {
            let q = (p as i64 + s) as u32;
            for (kept, qc) in &shift_coefficient(n, &l.d, q) {
                for (cpart, pc) in terms {
                    let c = merge(&l.c, cpart);
                    let k = qc * pc;
                    for (x, coef) in &shifted {
                        let label = PiLabel { d0: x.d0, c: c.clone(), d: kept.clone() };
                        out.add_term(label, coef * &k);
                    }
                }
            }
        }
        out
    }

    pub fn a(&self, m: i64, v: &Vector) -> Vector {
        self.exp_mode(1, m, v)
    }

    pub fn a_inv(&self, m: i64, v: &Vector) -> Vector {
        self.exp_mode(-1, m, v)
    }

    /// `e^{-c}_k` in vertex-operator indexing, `a^{-1}(k+2)`.
    fn e_minus(&self, k: i64, v: &Vector) -> Vector {
        self.a_inv(k + 2, v)
    }

    fn per_label(&self, v: &Vector, f: impl Fn(i64, &Vector) -> Vector) -> Vector {
        let mut out = LinComb::zero();
        for (l, c) in v {
            out.add_assign(&f(l.weight(), &LinComb::term(l.clone(), c.clone())));
        }
        out
    }

    /// `Σ_n coef(n) :α(n) E(total - n):` with `E(k) = e^{-c}_k`; creation
    /// modes of `α` stand left, the others right.
    fn normal_sum1(&self, total: i64, coef: impl Fn(i64) -> Rational, v: &Vector) -> Vector {
        self.per_label(v, |w, u| {
            let mut out = LinComb::zero();
            // E(k) kills weight-w vectors once k + 2 > w
            for n in (total + 2 - w)..0 {
                out.add_scaled(&self.alpha(n, &self.e_minus(total - n, u)), &coef(n));
            }
            for n in 0..=w {
                out.add_scaled(&self.e_minus(total - n, &self.alpha(n, u)), &coef(n));
            }
            out
        })
    }

    /// `Σ_{n1,n2} :α(n1) α(n2) E(total - n1 - n2):`.
    fn normal_sum2(&self, total: i64, v: &Vector) -> Vector {
        self.per_label(v, |w, u| {
            let mut out = LinComb::zero();
            let right: Vec<(i64, Vector)> =
                (0..=w).map(|n| (n, self.alpha(n, u))).filter(|(_, x)| !x.is_zero()).collect();
            for (n2, x2) in &right {
                for n1 in 0..=w {
                    let x = self.alpha(n1, x2);
                    if !x.is_zero() {
                        out.add_assign(&self.e_minus(total - n1 - n2, &x));
                    }
                }
            }
            // one creation mode, counted in both orders
            let two = Rational::from_int(2);
            for (n2, x2) in &right {
                for n1 in (total + 2 - w)..0 {
                    let y = self.e_minus(total - n1 - n2, x2);
                    if !y.is_zero() {
                        out.add_scaled(&self.alpha(n1, &y), &two);
                    }
                }
            }
            for sum in (total + 2 - w)..=-2 {
                let y = self.e_minus(total - sum, u);
                if y.is_zero() {
                    continue;
                }
                for n1 in (sum + 1)..0 {
                    out.add_assign(&self.alpha(n1, &self.alpha(sum - n1, &y)));
                }
            }
            out
        })
    }

    /// Modes of `α(-1) e^{-c}`, indexed as `Σ F(k) z^{-k-1}`.
    fn alpha_e_minus(&self, k: i64, v: &Vector) -> Vector {
        self.normal_sum1(k - 1, |_| Rational::one(), v)
    }

    /// Weyl field `a*(z) = -α(-1) e^{-c}` in the indexing `Σ a*(n) z^{-n}`.
    pub fn a_star(&self, n: i64, v: &Vector) -> Vector {
        self.alpha_e_minus(n - 1, v).scaled(&Rational::from_int(-1))
    }

    pub fn h(&self, n: i64, v: &Vector) -> Vector {
        self.d_mode(n, v).minus(&self.c_mode(n, v))
    }

    /// `f = T(-2) a^{-1} - (α(-1)² - α(-2)) a^{-1}`.
    pub fn f(&self, m: i64, v: &Vector) -> Vector {
        let mut out = LinComb::zero();
        for (n, x) in &self.chi.coeffs {
            out.add_scaled(&self.a_inv(m - n, v), x);
        }
        out.sub_assign(&self.normal_sum2(m - 2, v));
        out.add_assign(&self.normal_sum1(m - 2, |n| Rational::from_int(-n - 1), v));
        out
    }

    /// Virasoro zero mode of `½(α(-1)² - α(-2) - β(-1)² + β(-2))`.
    pub fn l0(&self, v: &Vector) -> Vector {
        let half = Rational::frac(1, 2);
        let mut out = self.c_mode(0, &self.d_mode(0, v)).plus(&self.d_mode(0, v)).scaled(&half);
        let top = v.labels().map(|l| l.weight()).max().unwrap_or(0);
        for k in 1..=top {
            out.add_scaled(&self.c_mode(-k, &self.d_mode(k, v)), &half);
            out.add_scaled(&self.d_mode(-k, &self.c_mode(k, v)), &half);
        }
        out
    }

    pub fn pi_act(&self, op: PiOp, v: &Vector) -> Vector {
        match op {
            PiOp::A(n) => self.a(n, v),
            PiOp::AInv(n) => self.a_inv(n, v),
            PiOp::AStar(n) => self.a_star(n, v),
            PiOp::Alpha(n) => self.alpha(n, v),
            PiOp::Beta(n) => self.beta(n, v),
            PiOp::C(n) => self.c_mode(n, v),
            PiOp::D(n) => self.d_mode(n, v),
        }
    }

    fn chi_top(&self) -> i64 {
        self.chi.max_mode().unwrap_or(0).max(1)
    }
}

impl Module for PiModule {
    type Label = PiLabel;

    fn level(&self) -> Rational {
        Rational::from_int(-2)
    }

    fn supports(&self, g: &GenSymbol) -> bool {
        AlgebraId::AffineSl2.contains(g) || g.family == Family::Phi
    }

    fn act_basis(&self, g: &GenSymbol, label: &PiLabel) -> Vector {
        if g.family == Family::C {
            return LinComb::term(label.clone(), Rational::from_int(-2));
        }
        self.cache.get_or_compute(g, label, || {
            let v = LinComb::basis(label.clone());
            match g.family {
                Family::E => self.a(g.mode, &v),
                Family::H | Family::Phi => self.h(g.mode, &v),
                Family::F => self.f(g.mode, &v),
                _ => panic!("{g} does not act on Π_λ"),
            }
        })
    }

    fn cyclic(&self) -> PiLabel {
        PiLabel::default()
    }

    fn weight(&self, label: &PiLabel) -> i64 {
        label.weight()
    }

    fn length(&self, label: &PiLabel) -> u32 {
        label.length()
    }

    fn box_basis(&self, b: TruncationBox) -> Vec<PiLabel> {
        let mut out = Vec::new();
        let parts = |w: u32, len: u32| -> Vec<Vec<u32>> {
            let mut all = Vec::new();
            fn rec(max_part: u32, w: u32, len: u32, cur: &mut Vec<u32>, all: &mut Vec<Vec<u32>>) {
                all.push(cur.clone());
                if len == 0 {
                    return;
                }
                for p in (1..=max_part.min(w)).rev() {
                    cur.push(p);
                    rec(p, w - p, len - 1, cur, all);
                    cur.pop();
                }
            }
            rec(w, w, len, &mut Vec::new(), &mut all);
            all
        };
        for c in parts(b.max_weight, b.max_length) {
            let wc: u32 = c.iter().sum();
            for d in parts(b.max_weight - wc, b.max_length - c.len() as u32) {
                let used = (c.len() + d.len()) as u32;
                for d0 in 0..=(b.max_length - used) {
                    out.push(PiLabel { d0, c: c.clone(), d: d.clone() });
                }
            }
        }
        out
    }

    fn annihilation_bound(&self, label: &PiLabel) -> i64 {
        label.weight() + self.chi_top() + 1
    }

    fn format_label(&self, label: &PiLabel) -> String {
        let mut s = String::new();
        match label.d0 {
            0 => {}
            1 => s.push_str("d(0)·"),
            k => s.push_str(&format!("d(0)^{k}·")),
        }
        for &p in &label.c {
            s.push_str(&format!("c({})·", -(p as i64)));
        }
        for &p in &label.d {
            s.push_str(&format!("d({})·", -(p as i64)));
        }
        s.push('w');
        s
    }
}

/// Series `χ(z) = λμ z^{-3} + c(z)` in weight-two indexing.
pub fn chi_for_whittaker(lambda: &Rational, mu: &Rational, c: &LaurentData) -> LaurentData {
    let top = LaurentData::new(Convention::Weight2, [(1, lambda * mu)]);
    c.to_convention(Convention::Weight2).plus(&top)
}

/// Comparison of `V(λ, μ, -2, c)` with `M_T(χ) ⊗ Π_λ` through `u w̄ ↦ u (1 ⊗ w_λ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizationReport {
    pub words: usize,
    /// Rank of the words applied to `1 ⊗ w_λ`.
    pub rank: usize,
    /// Generator actions compared in word coordinates.
    pub compared: usize,
    /// First action that differs, if any.
    pub mismatch: Option<String>,
    /// `T(n)` eigenvalues on the cyclic vector, computed on both sides.
    pub t_character: BTreeMap<i64, (Option<Rational>, Option<Rational>)>,
}

impl RealizationReport {
    pub fn pass(&self) -> bool {
        self.rank == self.words && self.mismatch.is_none() && self.t_character.values().all(|(a, b)| a.is_some() && a == b)
    }
}

pub fn compare_realization(
    lambda: &Rational,
    mu: &Rational,
    c: &LaurentData,
    b: TruncationBox,
    max_mode: i64,
) -> Result<RealizationReport, ModuleError> {
    let quotient = crate::whittaker::critical_quotient(lambda.clone(), mu.clone(), c)?;
    let pi = pi_module(lambda.clone(), &chi_for_whittaker(lambda, mu, c))?;
    let words = quotient.box_basis(b);
    let w = pi.cyclic_vector();
    let images: Vec<Vector> = words.iter().map(|u| pi.act_word(u, &w)).collect();
    let rank = crate::exact::rank(&images);
    let gens: Vec<GenSymbol> =
        AlgebraId::AffineSl2.generators(max_mode).into_iter().filter(|g| !g.is_central()).collect();
    let (compared, mismatch) = match crate::checks::compare_actions(&quotient, &pi, &words, &gens) {
        Ok(n) => (n, None),
        Err(e) => (0, Some(e)),
    };
    let mut t_character = BTreeMap::new();
    let (wq, wp) = (quotient.cyclic_vector(), pi.cyclic_vector());
    for n in -3..=2 {
        let tq = crate::fields::t_mode(&quotient, n, &wq)?;
        let tp = crate::fields::t_mode(&pi, n, &wp)?;
        t_character.insert(n, (scalar_of(&tq, &wq), scalar_of(&tp, &wp)));
    }
    Ok(RealizationReport { words: words.len(), rank, compared, mismatch, t_character })
}

/// `s` with `x = s v`, if `x` lies on the line of the basis vector `v`.
fn scalar_of<L: Ord + Clone>(x: &LinComb<L>, v: &LinComb<L>) -> Option<Rational> {
    let l = v.labels().next()?;
    let s = x.coeff(l);
    (*x == v.scaled(&s)).then_some(s)
}

/// `[d, x(n)] v - n x(n) v` with `d = -L(0)` on the `Π_λ` factor.
pub fn derivation_residual(m: &PiModule, g: &GenSymbol, v: &Vector) -> Vector {
    let xv = m.act(g, v);
    let d_xv = m.l0(&xv).scaled(&Rational::from_int(-1));
    let x_dv = m.act(g, &m.l0(v).scaled(&Rational::from_int(-1)));
    let mut r = d_xv.minus(&x_dv);
    r.add_scaled(&xv, &Rational::from_int(-g.mode));
    r
}

/// Largest failure of the graded-derivation identity over the box, or `None`
/// when every residual vanishes.
pub fn derivation_check(m: &PiModule, b: TruncationBox, max_mode: i64) -> Option<String> {
    for l in m.box_basis(b) {
        let v = LinComb::basis(l.clone());
        for g in AlgebraId::AffineSl2.generators(max_mode) {
            if g.is_central() {
                continue;
            }
            let r = derivation_residual(m, &g, &v);
            if !r.is_zero() {
                return Some(format!("[d, {g}] on {}: residual {}", m.format_label(&l), m.format_vector(&r)));
            }
        }
    }
    None
}
