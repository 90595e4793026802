//! Representation interface shared by every module implementation, truncation
//! boxes, and a cached action engine for modules induced from a vacuum vector.

use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;
use std::sync::RwLock;

use serde::{Deserialize, Serialize};

use crate::algebra::{GenSymbol, AlgebraError};
use crate::exact::{LinComb, Rational};
use crate::rewrite::SortKey;

/// Finite window of basis vectors: total depth (minus the sum of creation
/// modes) at most `max_weight`, and at most `max_length` creation factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TruncationBox {
    pub max_weight: u32,
    pub max_length: u32,
}

impl TruncationBox {
    pub const fn new(max_weight: u32, max_length: u32) -> Self {
        TruncationBox { max_weight, max_length }
    }

    pub fn contains(&self, weight: i64, length: u32) -> bool {
        weight >= 0 && weight <= self.max_weight as i64 && length <= self.max_length
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModuleError {
    #[error("generator {0} does not act on this module")]
    Unsupported(GenSymbol),
    #[error("{0}")]
    Domain(String),
    #[error("mode sum did not terminate inside its window at mode {0}")]
    Truncation(i64),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

pub trait Module: Sync {
    type Label: Clone + Ord + Hash + Debug + Send + Sync;

    /// Scalar by which the affine central element acts.
    fn level(&self) -> Rational;

    fn supports(&self, g: &GenSymbol) -> bool;

    /// Action on one basis vector. Callers must check [`Module::supports`].
    fn act_basis(&self, g: &GenSymbol, label: &Self::Label) -> LinComb<Self::Label>;

    fn cyclic(&self) -> Self::Label;

    /// Depth of a basis vector.
    fn weight(&self, label: &Self::Label) -> i64;

    /// Number of creation factors in a basis vector.
    fn length(&self, label: &Self::Label) -> u32;

    fn box_basis(&self, b: TruncationBox) -> Vec<Self::Label>;

    /// Every `e(m)`, `f(m)`, `h(m)` with `m` above this bound kills the vector.
    fn annihilation_bound(&self, label: &Self::Label) -> i64;

    fn format_label(&self, label: &Self::Label) -> String;

    fn act(&self, g: &GenSymbol, v: &LinComb<Self::Label>) -> LinComb<Self::Label> {
        v.flat_map(|l| self.act_basis(g, l))
    }

    fn try_act(&self, g: &GenSymbol, v: &LinComb<Self::Label>) -> Result<LinComb<Self::Label>, ModuleError> {
        if self.supports(g) {
            Ok(self.act(g, v))
        } else {
            Err(ModuleError::Unsupported(*g))
        }
    }

    /// Applies a linear combination of generators.
    fn act_lin(&self, x: &LinComb<GenSymbol>, v: &LinComb<Self::Label>) -> LinComb<Self::Label> {
        let mut out = LinComb::zero();
        for (g, c) in x {
            out.add_scaled(&self.act(g, v), c);
        }
        out
    }

    /// Applies a word; the rightmost letter acts first.
    fn act_word(&self, word: &[GenSymbol], v: &LinComb<Self::Label>) -> LinComb<Self::Label> {
        word.iter().rev().fold(v.clone(), |acc, g| self.act(g, &acc))
    }

    fn cyclic_vector(&self) -> LinComb<Self::Label> {
        LinComb::basis(self.cyclic())
    }

    fn in_box(&self, label: &Self::Label, b: TruncationBox) -> bool {
        b.contains(self.weight(label), self.length(label))
    }

    fn vector_bound(&self, v: &LinComb<Self::Label>) -> i64 {
        v.labels().map(|l| self.annihilation_bound(l)).max().unwrap_or(0)
    }

    fn format_vector(&self, v: &LinComb<Self::Label>) -> String {
        format_lincomb(v, |l| self.format_label(l))
    }
}

/// Renders `3·h(0)·w + 6·w`, dropping unit coefficients.
pub fn format_lincomb<L: Ord + Clone>(v: &LinComb<L>, label: impl Fn(&L) -> String) -> String {
    if v.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    // deepest terms first, the cyclic vector last
    for (i, (l, c)) in v.iter().rev().enumerate() {
        let (neg, mag) = if c.is_negative() { (true, -c) } else { (false, c.clone()) };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !mag.is_one() {
            out.push_str(&format!("{}·", mag));
        }
        out.push_str(&label(l));
    }
    out
}

/// All sorted multisets of creation generators fitting in the box, each
/// generator given with its weight. Generators must be listed in the order
/// in which they appear inside a monomial.
pub fn enumerate_monomials(gens: &[(GenSymbol, u32)], b: TruncationBox) -> Vec<Vec<GenSymbol>> {
    fn rec(
        gens: &[(GenSymbol, u32)],
        start: usize,
        weight_left: u32,
        len_left: u32,
        cur: &mut Vec<GenSymbol>,
        out: &mut Vec<Vec<GenSymbol>>,
    ) {
        out.push(cur.clone());
        if len_left == 0 {
            return;
        }
        for i in start..gens.len() {
            let (g, w) = gens[i];
            if w <= weight_left {
                cur.push(g);
                rec(gens, i, weight_left - w, len_left - 1, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(gens, 0, b.max_weight, b.max_length, &mut Vec::new(), &mut out);
    out
}

/// Sorted creation monomial applied to the vacuum vector.
pub type Monomial = Vec<GenSymbol>;

/// Data that determines a module spanned by ordered creation monomials on a
/// vacuum vector, over a Lie algebra with the given bracket.
pub trait PbwRules: Sync + Send + Sized {
    fn bracket(&self, x: &GenSymbol, y: &GenSymbol) -> LinComb<GenSymbol>;

    /// Sort key for creation generators, `None` for everything else.
    fn creation_key(&self, g: &GenSymbol) -> Option<SortKey>;

    /// Scalar for central generators.
    fn central(&self, g: &GenSymbol) -> Option<Rational>;

    /// Action of a non-creation, non-central generator on the vacuum.
    fn vacuum(&self, g: &GenSymbol, module: &PbwModule<Self>) -> LinComb<Monomial>;
}

/// Thread-safe memo table for operator actions on basis labels, keyed by
/// the operator (a generator unless stated otherwise) and the label.
pub struct ActionCache<L: Ord + Clone + Hash, K: Eq + Hash + Clone = GenSymbol> {
    map: RwLock<HashMap<(K, L), LinComb<L>>>,
}

impl<L: Ord + Clone + Hash, K: Eq + Hash + Clone> Default for ActionCache<L, K> {
    fn default() -> Self {
        ActionCache { map: RwLock::new(HashMap::new()) }
    }
}

impl<L: Ord + Clone + Hash, K: Eq + Hash + Clone> ActionCache<L, K> {
    pub fn get(&self, g: &K, l: &L) -> Option<LinComb<L>> {
        self.map.read().expect("cache lock").get(&(g.clone(), l.clone())).cloned()
    }

    pub fn insert(&self, g: &K, l: &L, v: &LinComb<L>) {
        self.map.write().expect("cache lock").insert((g.clone(), l.clone()), v.clone());
    }

    pub fn clear(&self) {
        self.map.write().expect("cache lock").clear();
    }

    /// Looks up `(g, l)` or computes and stores it. No lock is held while
    /// `compute` runs, so it may recurse into the same cache.
    pub fn get_or_compute(&self, g: &K, l: &L, compute: impl FnOnce() -> LinComb<L>) -> LinComb<L> {
        if let Some(v) = self.get(g, l) {
            return v;
        }
        let v = compute();
        self.insert(g, l, &v);
        v
    }
}

/// Memoizing action engine for [`PbwRules`].
pub struct PbwModule<R: PbwRules> {
    pub rules: R,
    cache: ActionCache<Monomial>,
}

impl<R: PbwRules> PbwModule<R> {
    pub fn new(rules: R) -> Self {
        PbwModule { rules, cache: ActionCache::default() }
    }

    pub fn apply_vec(&self, g: &GenSymbol, v: &LinComb<Monomial>) -> LinComb<Monomial> {
        v.flat_map(|m| self.apply(g, m))
    }

    /// `g · m · vacuum` expressed in sorted monomials.
    pub fn apply(&self, g: &GenSymbol, m: &[GenSymbol]) -> LinComb<Monomial> {
        if let Some(k) = self.rules.central(g) {
            return LinComb::term(m.to_vec(), k);
        }
        let key = self.rules.creation_key(g);
        if let Some(kg) = key {
            if m.first().is_none_or(|u| kg <= self.rules.creation_key(u).expect("monomials hold creation generators")) {
                let mut out = Vec::with_capacity(m.len() + 1);
                out.push(*g);
                out.extend_from_slice(m);
                return LinComb::basis(out);
            }
        }
        let m = m.to_vec();
        self.cache.get_or_compute(g, &m, || {
            if m.is_empty() {
                return self.rules.vacuum(g, self);
            }
            // g u rest = u (g rest) + [g, u] rest
            let (u, rest) = (&m[0], &m[1..]);
            let mut out = self.apply_vec(u, &self.apply(g, rest));
            for (z, c) in &self.rules.bracket(g, u) {
                out.add_scaled(&self.apply(z, rest), c);
            }
            out
        })
    }

    pub fn clear_cache(&self) {
        self.cache.clear();
    }
}

/// Weight of a creation monomial, `-sum of modes`.
pub fn monomial_weight(m: &[GenSymbol]) -> i64 {
    m.iter().map(|g| -g.mode).sum()
}

/// Renders a monomial on a named vacuum vector.
pub fn format_monomial(m: &[GenSymbol], vacuum: &str) -> String {
    let mut s = String::new();
    for g in m {
        s.push_str(&g.to_string());
        s.push('·');
    }
    s.push_str(vacuum);
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_enumeration_counts() {
        let gens = [(GenSymbol::e(-1), 1), (GenSymbol::h(0), 0)];
        let all = enumerate_monomials(&gens, TruncationBox::new(1, 2));
        // 1, e, h, ee (weight 2, excluded), eh, hh
        assert_eq!(all.len(), 5);
        assert!(all.contains(&vec![GenSymbol::e(-1), GenSymbol::h(0)]));
    }

    #[test]
    fn formatting_drops_unit_coefficients() {
        let v: LinComb<u8> = [(1, Rational::one()), (2, Rational::frac(-3, 2))].into_iter().collect();
        assert_eq!(format_lincomb(&v, |l| format!("x{l}")), "-3/2·x2 + x1");
    }
}
