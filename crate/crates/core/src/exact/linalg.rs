//! Sparse exact linear algebra over labelled coordinates.

use std::collections::BTreeMap;

use super::{LinComb, Rational};

/// Row-echelon basis of a subspace. Every stored row has leading
/// coefficient one at its smallest label, and pivots are distinct.
#[derive(Clone, Debug)]
pub struct Subspace<C: Ord + Clone> {
    rows: BTreeMap<C, LinComb<C>>,
}

impl<C: Ord + Clone> Default for Subspace<C> {
    fn default() -> Self {
        Subspace { rows: BTreeMap::new() }
    }
}

impl<C: Ord + Clone> Subspace<C> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn spanned_by<'a>(vectors: impl IntoIterator<Item = &'a LinComb<C>>) -> Self
    where
        C: 'a,
    {
        let mut s = Self::new();
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &C> {
        self.rows.keys()
    }

    /// Remainder of `v` after eliminating every pivot coordinate it touches.
    pub fn reduce(&self, v: &LinComb<C>) -> LinComb<C> {
        let mut r = v.clone();
        let mut cursor: Option<C> = None;
        loop {
            let next = r
                .labels()
                .find(|l| cursor.as_ref().is_none_or(|c| *l > c) && self.rows.contains_key(*l))
                .cloned();
            let Some(p) = next else { break };
            let c = r.coeff(&p);
            r.add_scaled(&self.rows[&p], &-c);
            cursor = Some(p);
        }
        r
    }

    pub fn contains(&self, v: &LinComb<C>) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the spanning set; returns whether the dimension grew.
    pub fn insert(&mut self, v: &LinComb<C>) -> bool {
        let r = self.reduce(v);
        let Some((p, lead)) = r.iter().next().map(|(l, c)| (l.clone(), c.clone())) else {
            return false;
        };
        let r = r.scaled(&lead.recip().expect("leading coefficient is nonzero"));
        self.rows.insert(p, r);
        true
    }

    /// Fully reduced basis: each pivot coordinate appears in exactly one row.
    pub fn rref(&self) -> Vec<LinComb<C>> {
        let mut rows = self.rows.clone();
        let keys: Vec<C> = rows.keys().rev().cloned().collect();
        for p in &keys {
            let pivot_row = rows[p].clone();
            for (q, row) in rows.iter_mut() {
                if q == p {
                    continue;
                }
                let c = row.coeff(p);
                if !c.is_zero() {
                    row.add_scaled(&pivot_row, &-c);
                }
            }
        }
        rows.into_values().collect()
    }
}

/// Matrix given by sparse rows over column labels.
#[derive(Clone, Debug)]
pub struct SparseMatrix<C: Ord + Clone> {
    pub rows: Vec<LinComb<C>>,
}

impl<C: Ord + Clone> SparseMatrix<C> {
    pub fn new(rows: Vec<LinComb<C>>) -> Self {
        SparseMatrix { rows }
    }

    pub fn rank(&self) -> usize {
        Subspace::spanned_by(&self.rows).dim()
    }

    /// Basis of `{x : row . x = 0 for every row}` with `x` supported on `columns`.
    /// The result is in reduced form, one vector per free column.
    pub fn kernel(&self, columns: &[C]) -> Vec<LinComb<C>> {
        let rref = Subspace::spanned_by(&self.rows).rref();
        let pivot_rows: BTreeMap<C, &LinComb<C>> = rref
            .iter()
            .map(|r| (r.labels().next().expect("nonzero row").clone(), r))
            .collect();
        let mut out = Vec::new();
        for f in columns {
            if pivot_rows.contains_key(f) {
                continue;
            }
            let mut v = LinComb::basis(f.clone());
            for (p, row) in &pivot_rows {
                let c = row.coeff(f);
                if !c.is_zero() {
                    v.add_term(p.clone(), -c);
                }
            }
            out.push(v);
        }
        out
    }
}

/// Kernel of the linear map sending the `i`-th domain label to `images[i]`.
/// Returned vectors are in reduced form over the domain labels.
pub fn kernel_of_map<D: Ord + Clone, R: Ord + Clone>(
    domain: &[D],
    images: &[LinComb<R>],
) -> Vec<LinComb<D>> {
    assert_eq!(domain.len(), images.len(), "one image per domain label");
    // Echelon rows carry the domain combination that produced them.
    let mut rows: BTreeMap<R, (LinComb<R>, LinComb<usize>)> = BTreeMap::new();
    let mut kernel = Subspace::<D>::new();
    for (i, img) in images.iter().enumerate() {
        let mut r = img.clone();
        let mut combo = LinComb::basis(i);
        let mut cursor: Option<R> = None;
        loop {
            let next = r
                .labels()
                .find(|l| cursor.as_ref().is_none_or(|c| *l > c) && rows.contains_key(*l))
                .cloned();
            let Some(p) = next else { break };
            let c = -r.coeff(&p);
            let (prow, pcombo) = &rows[&p];
            r.add_scaled(prow, &c);
            combo.add_scaled(pcombo, &c);
            cursor = Some(p);
        }
        match r.iter().next().map(|(l, c)| (l.clone(), c.clone())) {
            None => {
                kernel.insert(&combo.map_labels(|&j| domain[j].clone()));
            }
            Some((p, lead)) => {
                let inv = lead.recip().expect("leading coefficient is nonzero");
                rows.insert(p, (r.scaled(&inv), combo.scaled(&inv)));
            }
        }
    }
    kernel.rref()
}

/// Rank of a family of vectors.
pub fn rank<C: Ord + Clone>(vectors: &[LinComb<C>]) -> usize {
    Subspace::spanned_by(vectors).dim()
}

/// Exact solution of `sum_i x_i vectors[i] = target`, if one exists.
pub fn solve<C: Ord + Clone>(vectors: &[LinComb<C>], target: &LinComb<C>) -> Option<Vec<Rational>> {
    let mut images: Vec<LinComb<C>> = vectors.to_vec();
    images.push(target.clone());
    let domain: Vec<usize> = (0..images.len()).collect();
    let last = vectors.len();
    let kernel = kernel_of_map(&domain, &images);
    let v = kernel.iter().find(|k| !k.coeff(&last).is_zero())?;
    let scale = -(v.coeff(&last).recip().ok()?);
    Some((0..last).map(|i| v.coeff(&i) * &scale).collect())
}

/// Expresses vectors in terms of a fixed list, remembering which members of
/// the list were linearly dependent on earlier ones.
#[derive(Clone, Debug)]
pub struct Coordinates<C: Ord + Clone> {
    echelon: BTreeMap<C, (LinComb<C>, LinComb<usize>)>,
    len: usize,
    dependent: Vec<usize>,
}

impl<C: Ord + Clone> Coordinates<C> {
    pub fn new(vectors: &[LinComb<C>]) -> Self {
        let mut out = Coordinates { echelon: BTreeMap::new(), len: vectors.len(), dependent: Vec::new() };
        for (i, v) in vectors.iter().enumerate() {
            let (r, combo) = out.eliminate(v, LinComb::basis(i));
            match r.iter().next().map(|(l, c)| (l.clone(), c.clone())) {
                None => out.dependent.push(i),
                Some((p, lead)) => {
                    let inv = lead.recip().expect("leading coefficient is nonzero");
                    out.echelon.insert(p, (r.scaled(&inv), combo.scaled(&inv)));
                }
            }
        }
        out
    }

    fn eliminate(&self, v: &LinComb<C>, mut combo: LinComb<usize>) -> (LinComb<C>, LinComb<usize>) {
        let mut r = v.clone();
        let mut cursor: Option<C> = None;
        loop {
            let next = r
                .labels()
                .find(|l| cursor.as_ref().is_none_or(|c| *l > c) && self.echelon.contains_key(*l))
                .cloned();
            let Some(p) = next else { break };
            let c = -r.coeff(&p);
            let (prow, pcombo) = &self.echelon[&p];
            r.add_scaled(prow, &c);
            combo.add_scaled(pcombo, &c);
            cursor = Some(p);
        }
        (r, combo)
    }

    pub fn rank(&self) -> usize {
        self.echelon.len()
    }

    /// Indices of list members lying in the span of earlier members.
    pub fn dependent(&self) -> &[usize] {
        &self.dependent
    }

    pub fn is_independent(&self) -> bool {
        self.dependent.is_empty()
    }

    /// Coefficients `x` with `sum_i x_i vectors[i] = target`; members found
    /// dependent get coefficient zero.
    pub fn express(&self, target: &LinComb<C>) -> Option<Vec<Rational>> {
        let (r, combo) = self.eliminate(target, LinComb::zero());
        if !r.is_zero() {
            return None;
        }
        Some((0..self.len).map(|i| -combo.coeff(&i)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(entries: &[(u32, i64)]) -> LinComb<u32> {
        entries.iter().map(|&(l, c)| (l, Rational::from_int(c))).collect()
    }

    #[test]
    fn coordinates_express_targets() {
        let vs = vec![row(&[(0, 1), (1, 1)]), row(&[(1, 1)]), row(&[(0, 2)])];
        let c = Coordinates::new(&vs);
        assert_eq!(c.dependent(), &[2]);
        let x = c.express(&row(&[(0, 3), (1, 5)])).unwrap();
        assert_eq!(x, vec![Rational::from_int(3), Rational::from_int(2), Rational::zero()]);
        assert!(c.express(&row(&[(2, 1)])).is_none());
    }

    #[test]
    fn kernel_of_two_rows() {
        let m = SparseMatrix::new(vec![row(&[(0, 1), (1, 1)]), row(&[(1, 1), (2, 1)])]);
        let k = m.kernel(&[0, 1, 2]);
        assert_eq!(k, vec![row(&[(0, 1), (1, -1), (2, 1)])]);
    }

    #[test]
    fn dependent_rows_have_rank_one() {
        let m = SparseMatrix::new(vec![row(&[(0, 1), (1, 2)]), row(&[(0, 2), (1, 4)])]);
        assert_eq!(m.rank(), 1);
        assert_eq!(m.kernel(&[0, 1]), vec![row(&[(0, -2), (1, 1)])]);
    }

    #[test]
    fn kernel_of_map_matches_matrix_kernel() {
        // columns of the same matrix as above
        let images = vec![row(&[(0, 1)]), row(&[(0, 1), (1, 1)]), row(&[(1, 1)])];
        let k = kernel_of_map(&["x", "y", "z"], &images);
        let expected: LinComb<&str> = [
            ("x", Rational::one()),
            ("y", Rational::from_int(-1)),
            ("z", Rational::one()),
        ]
        .into_iter()
        .collect();
        assert_eq!(k, vec![expected]);
    }

    #[test]
    fn solve_finds_coefficients() {
        let vs = vec![row(&[(0, 1), (1, 1)]), row(&[(1, 2)])];
        let x = solve(&vs, &row(&[(0, 3), (1, 7)])).unwrap();
        assert_eq!(x, vec![Rational::from_int(3), Rational::from_int(2)]);
        assert!(solve(&vs, &row(&[(2, 1)])).is_none());
    }
}
