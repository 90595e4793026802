//! PBW normal ordering of words in enveloping algebras, exponent vectors and
//! the monomial orders used for leading-term arguments.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::algebra::{bracket, AlgebraError, AlgebraId, Family, GenSymbol};
use crate::exact::{LinComb, Rational};

/// Sort key of a generator inside a PBW monomial; smaller keys go left.
pub type SortKey = (i64, i64);

pub trait PbwOrder {
    fn key(&self, g: &GenSymbol) -> SortKey;
}

/// Orders generators by a family ranking, then by increasing mode. Central
/// symbols always come first.
#[derive(Clone, Debug)]
pub struct FamilyBlockOrder {
    pub families: Vec<Family>,
}

impl FamilyBlockOrder {
    /// `e` block, then `h`, then `f`, each with the most negative mode first.
    pub fn affine() -> Self {
        FamilyBlockOrder {
            families: vec![Family::D, Family::T, Family::E, Family::H, Family::Phi, Family::L, Family::F],
        }
    }
}

impl PbwOrder for FamilyBlockOrder {
    fn key(&self, g: &GenSymbol) -> SortKey {
        if g.is_central() {
            return (-1, g.family as i64);
        }
        let pos = self
            .families
            .iter()
            .position(|&f| f == g.family)
            .unwrap_or(self.families.len());
        (pos as i64, g.mode)
    }
}

/// Order on the loop Borel plus Virasoro part: creation generators sorted by
/// decreasing slot index, the rest afterwards by family and mode.
#[derive(Clone, Copy, Debug, Default)]
pub struct SlotOrder;

/// Slot of a creation generator: `e(-n-1) -> 3n+1`, `L(-n) -> 3n+2`, `h(-n) -> 3n+3`.
pub fn borel_vir_slot(g: &GenSymbol) -> Option<u32> {
    let n = match g.family {
        Family::E if g.mode <= -1 => (-g.mode - 1, 1),
        Family::L if g.mode <= 0 => (-g.mode, 2),
        Family::H if g.mode <= 0 => (-g.mode, 3),
        _ => return None,
    };
    Some(3 * n.0 as u32 + n.1)
}

pub fn borel_vir_generator(slot: u32) -> GenSymbol {
    assert!(slot >= 1, "slots start at 1");
    let n = ((slot - 1) / 3) as i64;
    match slot % 3 {
        1 => GenSymbol::e(-n - 1),
        2 => GenSymbol::l(-n),
        _ => GenSymbol::h(-n),
    }
}

impl PbwOrder for SlotOrder {
    fn key(&self, g: &GenSymbol) -> SortKey {
        if g.is_central() {
            return (-1, g.family as i64);
        }
        match borel_vir_slot(g) {
            Some(s) => (0, -(s as i64)),
            None => (1 + g.family as i64, g.mode),
        }
    }
}

/// A PBW monomial: generators listed left to right in non-decreasing key order.
pub type NormalMonomial = Vec<GenSymbol>;

/// Rewrites a word (leftmost letter acts last) into PBW normal form.
pub fn normal_order(
    alg: AlgebraId,
    word: &[GenSymbol],
    order: &dyn PbwOrder,
) -> Result<LinComb<NormalMonomial>, AlgebraError> {
    for g in word {
        alg.check(g)?;
    }
    let mut memo = HashMap::new();
    let mut acc = LinComb::basis(Vec::new());
    for g in word.iter().rev() {
        let mut next = LinComb::zero();
        for (m, c) in &acc {
            next.add_scaled(&insert(alg, g, m, order, &mut memo), c);
        }
        acc = next;
    }
    Ok(acc)
}

/// `g * m` in normal form, for a normal monomial `m`.
fn insert(
    alg: AlgebraId,
    g: &GenSymbol,
    m: &[GenSymbol],
    order: &dyn PbwOrder,
    memo: &mut HashMap<(GenSymbol, NormalMonomial), LinComb<NormalMonomial>>,
) -> LinComb<NormalMonomial> {
    if m.is_empty() || order.key(g) <= order.key(&m[0]) {
        let mut out = Vec::with_capacity(m.len() + 1);
        out.push(*g);
        out.extend_from_slice(m);
        return LinComb::basis(out);
    }
    let memo_key = (*g, m.to_vec());
    if let Some(v) = memo.get(&memo_key) {
        return v.clone();
    }
    // g u rest = u (g rest) + [g, u] rest
    let (u, rest) = (&m[0], &m[1..]);
    let mut out = LinComb::zero();
    let inner = insert(alg, g, rest, order, memo);
    for (mm, c) in &inner {
        out.add_scaled(&insert(alg, u, mm, order, memo), c);
    }
    let br = bracket(alg, g, u).expect("letters were checked");
    for (z, c) in &br {
        out.add_scaled(&insert(alg, z, rest, order, memo), c);
    }
    memo.insert(memo_key, out.clone());
    out
}

/// Multiplies two normal-form elements and renormalizes.
pub fn multiply(
    alg: AlgebraId,
    x: &LinComb<NormalMonomial>,
    y: &LinComb<NormalMonomial>,
    order: &dyn PbwOrder,
) -> Result<LinComb<NormalMonomial>, AlgebraError> {
    let mut out = LinComb::zero();
    for (a, ca) in x {
        for (b, cb) in y {
            let word: Vec<GenSymbol> = a.iter().chain(b.iter()).copied().collect();
            out.add_scaled(&normal_order(alg, &word, order)?, &(ca * cb));
        }
    }
    Ok(out)
}

/// Finitely supported vector of nonnegative integers indexed by slots `>= 1`.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(BTreeMap<u32, u32>);

impl ExponentVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unit(slot: u32) -> Self {
        let mut v = Self::zero();
        v.add(slot, 1);
        v
    }

    pub fn from_pairs(pairs: &[(u32, u32)]) -> Self {
        let mut v = Self::zero();
        for &(s, e) in pairs {
            v.add(s, e);
        }
        v
    }

    pub fn get(&self, slot: u32) -> u32 {
        self.0.get(&slot).copied().unwrap_or(0)
    }

    pub fn add(&mut self, slot: u32, n: u32) {
        assert!(slot >= 1, "slots start at 1");
        if n > 0 {
            *self.0.entry(slot).or_insert(0) += n;
        }
    }

    /// Subtracts one at `slot`; panics if that entry is zero.
    pub fn dec(&mut self, slot: u32) {
        let e = self.0.get_mut(&slot).expect("entry is positive");
        *e -= 1;
        if *e == 0 {
            self.0.remove(&slot);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn norm(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn min_slot(&self) -> Option<u32> {
        self.0.keys().next().copied()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (u32, u32)> + '_ {
        self.0.iter().map(|(&s, &e)| (s, e))
    }

    pub fn plus(&self, other: &ExponentVector) -> ExponentVector {
        let mut v = self.clone();
        for (s, e) in other.iter() {
            v.add(s, e);
        }
        v
    }
}

impl std::fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_map().entries(self.0.iter()).finish()
    }
}

/// Degree `D(i) = sum_k k * i_{3k+j}` for `j = 1, 2, 3`.
pub fn degree_d(i: &ExponentVector) -> u64 {
    i.iter().map(|(s, e)| ((s as u64 - 1) / 3) * e as u64).sum()
}

/// Reverse lexicographic order: the vector whose smallest nonzero slot is
/// larger is the smaller one; ties recurse after removing that unit.
pub fn revlex_cmp(i: &ExponentVector, j: &ExponentVector) -> Ordering {
    let (mut a, mut b) = (i.clone(), j.clone());
    loop {
        match (a.min_slot(), b.min_slot()) {
            (None, None) => return Ordering::Equal,
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some(x), Some(y)) if x != y => return y.cmp(&x),
            (Some(x), Some(_)) => {
                a.dec(x);
                b.dec(x);
            }
        }
    }
}

/// Compare by `D`, then by length, then reverse lexicographically.
pub fn principal_cmp(i: &ExponentVector, j: &ExponentVector) -> Ordering {
    degree_d(i)
        .cmp(&degree_d(j))
        .then(i.norm().cmp(&j.norm()))
        .then_with(|| revlex_cmp(i, j))
}

/// Compare by length, then by the entry at the highest slot where they differ.
pub fn length_top_cmp(i: &ExponentVector, j: &ExponentVector) -> Ordering {
    i.norm().cmp(&j.norm()).then_with(|| {
        let top = i.0.keys().chain(j.0.keys()).copied().max().unwrap_or(0);
        for s in (1..=top).rev() {
            match i.get(s).cmp(&j.get(s)) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    })
}

/// Order on triples `(i, j, k)`: `k` first, then `j`, then `i`.
pub fn triple_cmp(
    a: (&ExponentVector, &ExponentVector, &ExponentVector),
    b: (&ExponentVector, &ExponentVector, &ExponentVector),
) -> Ordering {
    length_top_cmp(a.2, b.2)
        .then_with(|| length_top_cmp(a.1, b.1))
        .then_with(|| length_top_cmp(a.0, b.0))
}

/// Largest label of `v` under `cmp`.
pub fn leading_term<L: Ord + Clone>(v: &LinComb<L>, cmp: impl Fn(&L, &L) -> Ordering) -> Option<(L, Rational)> {
    v.iter()
        .max_by(|a, b| cmp(a.0, b.0))
        .map(|(l, c)| (l.clone(), c.clone()))
}
