//! Generic consistency checks shared by tests, the acceptance suite and the CLI.

use serde::{Deserialize, Serialize};

use crate::algebra::{bracket, AlgebraError, AlgebraId, GenSymbol};
use crate::exact::{Coordinates, LinComb, Subspace};
use crate::module::{enumerate_monomials, Module, TruncationBox};

/// `x(y v) - y(x v) - [x, y] v`.
pub fn bracket_residual<M: Module>(
    m: &M,
    alg: AlgebraId,
    x: &GenSymbol,
    y: &GenSymbol,
    v: &LinComb<M::Label>,
) -> Result<LinComb<M::Label>, AlgebraError> {
    let br = bracket(alg, x, y)?;
    let mut r = m.act(x, &m.act(y, v));
    r.sub_assign(&m.act(y, &m.act(x, v)));
    r.sub_assign(&m.act_lin(&br, v));
    Ok(r)
}

/// First failing triple of the representation property, scanning every pair
/// of generators with `|mode| <= max_mode` against every box basis vector.
/// Returns the number of checks performed when everything vanishes.
pub fn representation_property<M: Module>(
    m: &M,
    alg: AlgebraId,
    max_mode: i64,
    b: TruncationBox,
) -> Result<usize, String> {
    let gens: Vec<GenSymbol> = alg
        .generators(max_mode)
        .into_iter()
        .filter(|g| !g.is_central() && m.supports(g))
        .collect();
    let basis = m.box_basis(b);
    let mut count = 0;
    for l in &basis {
        let v = LinComb::basis(l.clone());
        let images: Vec<LinComb<M::Label>> = gens.iter().map(|g| m.act(g, &v)).collect();
        for (a, x) in gens.iter().enumerate() {
            for (bi, y) in gens.iter().enumerate().skip(a + 1) {
                let br = bracket(alg, x, y).map_err(|e| e.to_string())?;
                let mut r = m.act(x, &images[bi]);
                r.sub_assign(&m.act(y, &images[a]));
                r.sub_assign(&m.act_lin(&br, &v));
                if !r.is_zero() {
                    return Err(format!(
                        "[{x}, {y}] on {}: residual {}",
                        m.format_label(l),
                        m.format_vector(&r)
                    ));
                }
                count += 1;
            }
        }
    }
    Ok(count)
}

/// `x` followed by the bilinear Jacobi sum over a generator list.
pub fn jacobi_failures(alg: AlgebraId, max_mode: i64) -> Vec<(GenSymbol, GenSymbol, GenSymbol)> {
    let gens = alg.generators(max_mode);
    let br = |a: &GenSymbol, b: &GenSymbol| bracket(alg, a, b).expect("generators belong to the algebra");
    let mut failures = Vec::new();
    for (i, x) in gens.iter().enumerate() {
        for (j, y) in gens.iter().enumerate().skip(i) {
            let xy = br(x, y);
            if xy.plus(&br(y, x)) != LinComb::zero() {
                failures.push((*x, *y, *x));
            }
            for z in gens.iter().skip(j) {
                let mut sum = LinComb::zero();
                for (a, b, c) in [(x, y, z), (y, z, x), (z, x, y)] {
                    for (g, coef) in &br(b, c) {
                        sum.add_scaled(&br(a, g), coef);
                    }
                }
                if !sum.is_zero() {
                    failures.push((*x, *y, *z));
                }
            }
        }
    }
    failures
}

/// Outcome of checking that ordered monomials in some generators, applied
/// to the cyclic vector, form a basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisReport {
    /// Monomials in the independence box.
    pub monomials: usize,
    /// Rank of their images.
    pub rank: usize,
    /// Basis vectors of the module in the independence box.
    pub box_dim: usize,
    /// Box basis vectors lying in the span of the monomials of `span_box`.
    pub covered: usize,
}

impl BasisReport {
    pub fn independent(&self) -> bool {
        self.rank == self.monomials
    }

    pub fn spans(&self) -> bool {
        self.covered == self.box_dim
    }
}

/// Images of the monomials in `gens` (generator, weight) inside `b`; the
/// first generator of each monomial acts last.
pub fn monomial_images<M: Module>(
    m: &M,
    gens: &[(GenSymbol, u32)],
    b: TruncationBox,
) -> (Vec<Vec<GenSymbol>>, Vec<LinComb<M::Label>>) {
    let words = enumerate_monomials(gens, b);
    let v = m.cyclic_vector();
    let images = words.iter().map(|w| m.act_word(w, &v)).collect();
    (words, images)
}

/// Independence of the monomials in `indep_box`, and spanning of the module's
/// own box basis by the monomials of the larger `span_box`.
pub fn pbw_basis_report<M: Module>(
    m: &M,
    gens: &[(GenSymbol, u32)],
    indep_box: TruncationBox,
    span_box: TruncationBox,
) -> BasisReport {
    let (_, images) = monomial_images(m, gens, indep_box);
    let rank = Subspace::spanned_by(&images).dim();
    let (_, big) = monomial_images(m, gens, span_box);
    let span = Subspace::spanned_by(&big);
    let labels = m.box_basis(indep_box);
    let covered = labels.iter().filter(|l| span.contains(&LinComb::basis((*l).clone()))).count();
    BasisReport { monomials: images.len(), rank, box_dim: labels.len(), covered }
}

/// Compares two modules through the bijection `words[i] · cyclic` on both
/// sides: every generator must have the same matrix in these coordinates
/// wherever one side stays inside their span. Returns the number of
/// compared actions.
pub fn compare_actions<A: Module, B: Module>(
    a: &A,
    b: &B,
    words: &[Vec<GenSymbol>],
    gens: &[GenSymbol],
) -> Result<usize, String> {
    let (va, vb) = (a.cyclic_vector(), b.cyclic_vector());
    let ia: Vec<_> = words.iter().map(|w| a.act_word(w, &va)).collect();
    let ib: Vec<_> = words.iter().map(|w| b.act_word(w, &vb)).collect();
    let (ca, cb) = (Coordinates::new(&ia), Coordinates::new(&ib));
    for (c, side) in [(ca.dependent(), "first"), (cb.dependent(), "second")] {
        if let Some(&i) = c.first() {
            return Err(format!("word {} is dependent in the {side} module", format_word(&words[i])));
        }
    }
    let mut compared = 0;
    for g in gens {
        for (i, w) in words.iter().enumerate() {
            let xa = ca.express(&a.act(g, &ia[i]));
            let xb = cb.express(&b.act(g, &ib[i]));
            match (xa, xb) {
                (None, None) => {}
                (Some(x), Some(y)) if x == y => compared += 1,
                _ => return Err(format!("{g} on {} differs", format_word(w))),
            }
        }
    }
    Ok(compared)
}

fn format_word(w: &[GenSymbol]) -> String {
    crate::module::format_monomial(w, "v")
}
