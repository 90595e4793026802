use std::collections::btree_map::{self, BTreeMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::Rational;

/// Finite linear combination of labels with exact rational coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinComb<L: Ord> {
    terms: BTreeMap<L, Rational>,
}

impl<L: Ord> Default for LinComb<L> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<L: Ord + Clone> LinComb<L> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(label: L) -> Self {
        Self::term(label, Rational::one())
    }

    pub fn term(label: L, coeff: Rational) -> Self {
        let mut v = Self::zero();
        v.add_term(label, coeff);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, label: &L) -> Rational {
        self.terms.get(label).cloned().unwrap_or_default()
    }

    pub fn get(&self, label: &L) -> Option<&Rational> {
        self.terms.get(label)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, L, Rational> {
        self.terms.iter()
    }

    pub fn labels(&self) -> impl Iterator<Item = &L> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, label: L, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(label) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += scale * other`.
    pub fn add_scaled(&mut self, other: &LinComb<L>, scale: &Rational) {
        if scale.is_zero() {
            return;
        }
        for (l, c) in other.iter() {
            self.add_term(l.clone(), c * scale);
        }
    }

    pub fn add_assign(&mut self, other: &LinComb<L>) {
        for (l, c) in other.iter() {
            self.add_term(l.clone(), c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &LinComb<L>) {
        for (l, c) in other.iter() {
            self.add_term(l.clone(), -c);
        }
    }

    pub fn scaled(&self, scale: &Rational) -> Self {
        if scale.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self.terms.iter().map(|(l, c)| (l.clone(), c * scale)).collect(),
        }
    }

    pub fn plus(&self, other: &LinComb<L>) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn minus(&self, other: &LinComb<L>) -> Self {
        let mut out = self.clone();
        out.sub_assign(other);
        out
    }

    /// Apply a linear map given on basis labels.
    pub fn flat_map<M: Ord + Clone>(&self, mut f: impl FnMut(&L) -> LinComb<M>) -> LinComb<M> {
        let mut out = LinComb::zero();
        for (l, c) in self.iter() {
            out.add_scaled(&f(l), c);
        }
        out
    }

    pub fn map_labels<M: Ord + Clone>(&self, mut f: impl FnMut(&L) -> M) -> LinComb<M> {
        let mut out = LinComb::zero();
        for (l, c) in self.iter() {
            out.add_term(f(l), c.clone());
        }
        out
    }

    pub fn filter(&self, mut keep: impl FnMut(&L) -> bool) -> Self {
        LinComb {
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| keep(l))
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn into_terms(self) -> BTreeMap<L, Rational> {
        self.terms
    }
}

impl<L: Ord + Clone> FromIterator<(L, Rational)> for LinComb<L> {
    fn from_iter<I: IntoIterator<Item = (L, Rational)>>(iter: I) -> Self {
        let mut v = LinComb::zero();
        for (l, c) in iter {
            v.add_term(l, c);
        }
        v
    }
}

impl<'a, L: Ord> IntoIterator for &'a LinComb<L> {
    type Item = (&'a L, &'a Rational);
    type IntoIter = btree_map::Iter<'a, L, Rational>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<L: Ord + fmt::Debug> fmt::Debug for LinComb<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (l, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}*{:?}", c, l)?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr<L> {
    label: L,
    coeff: Rational,
}

impl<L: Ord + Clone + Serialize> Serialize for LinComb<L> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (l, c) in &self.terms {
            seq.serialize_element(&TermRepr { label: l.clone(), coeff: c.clone() })?;
        }
        seq.end()
    }
}

impl<'de, L: Ord + Clone + Deserialize<'de>> Deserialize<'de> for LinComb<L> {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let terms: Vec<TermRepr<L>> = Vec::deserialize(deserializer)?;
        Ok(terms.into_iter().map(|t| (t.label, t.coeff)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_removes_terms() {
        let mut v = LinComb::term("a", Rational::from_int(2));
        v.add_term("b", Rational::one());
        v.add_term("a", Rational::from_int(-2));
        assert_eq!(v.len(), 1);
        assert_eq!(v.coeff(&"a"), Rational::zero());
        assert_eq!(v.coeff(&"b"), Rational::one());
    }

    #[test]
    fn json_roundtrip() {
        let v: LinComb<u32> = [(3, Rational::frac(1, 2)), (1, Rational::from_int(-4))]
            .into_iter()
            .collect();
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, r#"[{"label":1,"coeff":"-4"},{"label":3,"coeff":"1/2"}]"#);
        assert_eq!(serde_json::from_str::<LinComb<u32>>(&s).unwrap(), v);
    }
}
