//! Generators, bracket tables and automorphisms of the affine algebras in play.
//!
//! Every algebra here is spanned by mode generators `x(n)` plus central
//! symbols. Brackets of two generators are linear combinations of generators,
//! with central elements kept symbolic; a level is only substituted when a
//! module acts.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exact::{LinComb, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    E,
    F,
    H,
    /// Virasoro-type generator `L(n)`.
    L,
    /// Central field modes `T(n)`.
    T,
    /// The Cartan-like generator of the Borel subalgebra used with the Weyl algebra.
    Phi,
    D,
    /// Level of the affine part.
    C,
    /// Virasoro central charge.
    C1,
}

impl Family {
    pub fn is_central(self) -> bool {
        matches!(self, Family::C | Family::C1)
    }

    pub fn has_mode(self) -> bool {
        !matches!(self, Family::C | Family::C1 | Family::D)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenSymbol {
    pub family: Family,
    pub mode: i64,
}

impl GenSymbol {
    pub const fn new(family: Family, mode: i64) -> Self {
        GenSymbol { family, mode }
    }

    pub const fn e(n: i64) -> Self {
        Self::new(Family::E, n)
    }

    pub const fn f(n: i64) -> Self {
        Self::new(Family::F, n)
    }

    pub const fn h(n: i64) -> Self {
        Self::new(Family::H, n)
    }

    pub const fn l(n: i64) -> Self {
        Self::new(Family::L, n)
    }

    pub const fn t(n: i64) -> Self {
        Self::new(Family::T, n)
    }

    pub const fn phi(n: i64) -> Self {
        Self::new(Family::Phi, n)
    }

    pub const D: GenSymbol = GenSymbol::new(Family::D, 0);
    pub const C: GenSymbol = GenSymbol::new(Family::C, 0);
    pub const C1: GenSymbol = GenSymbol::new(Family::C1, 0);

    pub fn is_central(&self) -> bool {
        self.family.is_central()
    }
}

impl fmt::Display for GenSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.family {
            Family::E => "e",
            Family::F => "f",
            Family::H => "h",
            Family::L => "L",
            Family::T => "T",
            Family::Phi => "phi",
            Family::D => return write!(f, "d"),
            Family::C => return write!(f, "c"),
            Family::C1 => return write!(f, "c1"),
        };
        write!(f, "{}({})", name, self.mode)
    }
}

impl fmt::Debug for GenSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for GenSymbol {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        match t {
            "d" => return Ok(GenSymbol::D),
            "c" => return Ok(GenSymbol::C),
            "c1" => return Ok(GenSymbol::C1),
            _ => {}
        }
        let bad = || AlgebraError::Parse(s.to_string());
        let (name, rest) = t.split_once('(').ok_or_else(bad)?;
        let mode: i64 = rest.strip_suffix(')').ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
        let family = match name.trim() {
            "e" => Family::E,
            "f" => Family::F,
            "h" => Family::H,
            "L" => Family::L,
            "T" => Family::T,
            "phi" => Family::Phi,
            _ => return Err(bad()),
        };
        Ok(GenSymbol::new(family, mode))
    }
}

impl Serialize for GenSymbol {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GenSymbol {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("{symbol} is not a generator of {algebra:?}")]
    UnknownSymbol { symbol: GenSymbol, algebra: AlgebraId },
    #[error("cannot parse generator from {0:?}")]
    Parse(String),
    #[error("{0}")]
    Domain(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlgebraId {
    /// Affine sl2 with level `c`.
    AffineSl2,
    /// Affine sl2 extended by the degree derivation `d`.
    ExtendedSl2,
    /// Loop Borel subalgebra extended by the Virasoro positive part.
    BorelVir,
    /// Loop Borel subalgebra with `d` and the commuting modes `T(n)`.
    BorelT,
    /// `d` together with the commuting modes `T(n)`.
    Ttilde,
    /// Affinization of the two-dimensional Borel spanned by `phi` and `e`.
    Borel1,
}

impl AlgebraId {
    pub const ALL: [AlgebraId; 6] = [
        AlgebraId::AffineSl2,
        AlgebraId::ExtendedSl2,
        AlgebraId::BorelVir,
        AlgebraId::BorelT,
        AlgebraId::Ttilde,
        AlgebraId::Borel1,
    ];

    pub fn families(self) -> &'static [Family] {
        use Family::*;
        match self {
            AlgebraId::AffineSl2 => &[E, F, H, C],
            AlgebraId::ExtendedSl2 => &[E, F, H, C, D],
            AlgebraId::BorelVir => &[L, H, E, C, C1],
            AlgebraId::BorelT => &[E, H, C, D, T],
            AlgebraId::Ttilde => &[D, T],
            AlgebraId::Borel1 => &[Phi, E, C],
        }
    }

    pub fn contains(self, g: &GenSymbol) -> bool {
        self.families().contains(&g.family) && (g.family.has_mode() || g.mode == 0)
    }

    pub fn check(self, g: &GenSymbol) -> Result<(), AlgebraError> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(AlgebraError::UnknownSymbol { symbol: *g, algebra: self })
        }
    }

    /// All generators with `|mode| <= max_mode`, central symbols included.
    pub fn generators(self, max_mode: i64) -> Vec<GenSymbol> {
        let mut out = Vec::new();
        for &fam in self.families() {
            if fam.has_mode() {
                out.extend((-max_mode..=max_mode).map(|n| GenSymbol::new(fam, n)));
            } else {
                out.push(GenSymbol::new(fam, 0));
            }
        }
        out
    }
}

/// Bracket `[x, y]` in the algebra `alg`.
pub fn bracket(alg: AlgebraId, x: &GenSymbol, y: &GenSymbol) -> Result<LinComb<GenSymbol>, AlgebraError> {
    alg.check(x)?;
    alg.check(y)?;
    Ok(raw_bracket(x, y))
}

/// Bilinear extension of [`bracket`].
pub fn bracket_lin(
    alg: AlgebraId,
    x: &LinComb<GenSymbol>,
    y: &LinComb<GenSymbol>,
) -> Result<LinComb<GenSymbol>, AlgebraError> {
    let mut out = LinComb::zero();
    for (a, ca) in x {
        for (b, cb) in y {
            out.add_scaled(&bracket(alg, a, b)?, &(ca * cb));
        }
    }
    Ok(out)
}

/// Bracket on the union of all generator families. The tables agree on every
/// overlap, so membership is the only thing that distinguishes the algebras.
pub(crate) fn raw_bracket(x: &GenSymbol, y: &GenSymbol) -> LinComb<GenSymbol> {
    match ordered_bracket(x, y) {
        Some(v) => v,
        None => ordered_bracket(y, x)
            .expect("bracket table covers every pair in one orientation")
            .scaled(&Rational::from_int(-1)),
    }
}

fn loop_part(x: Family) -> Option<Family> {
    match x {
        Family::E | Family::F | Family::H => Some(x),
        Family::Phi => Some(Family::H),
        _ => None,
    }
}

fn ordered_bracket(x: &GenSymbol, y: &GenSymbol) -> Option<LinComb<GenSymbol>> {
    use Family::*;
    let zero = LinComb::zero;
    if x.is_central() || y.is_central() {
        return Some(zero());
    }
    match (x.family, y.family) {
        (D, D) => Some(zero()),
        (D, _) => Some(LinComb::term(*y, Rational::from_int(y.mode))),
        (_, D) => None,
        (T, _) | (_, T) => Some(zero()),
        (L, L) => {
            let (i, j) = (x.mode, y.mode);
            let mut v = LinComb::term(GenSymbol::l(i + j), Rational::from_int(i - j));
            if i + j == 0 {
                v.add_term(GenSymbol::C1, Rational::frac(i * i * i - i, 12));
            }
            Some(v)
        }
        (L, _) => Some(LinComb::term(GenSymbol::new(y.family, x.mode + y.mode), Rational::from_int(-y.mode))),
        (_, L) => None,
        (a, b) => {
            let (la, lb) = (loop_part(a)?, loop_part(b)?);
            let (n, m) = (x.mode, y.mode);
            // result family keeps Phi when it stands in for h
            let h_like = if a == Phi || b == Phi { Phi } else { H };
            let (fam, coeff, form) = match (la, lb) {
                (E, F) => (Some(h_like), 1, 1),
                (F, E) => (Some(h_like), -1, 1),
                (H, E) => (Some(E), 2, 0),
                (E, H) => (Some(E), -2, 0),
                (H, F) => (Some(F), -2, 0),
                (F, H) => (Some(F), 2, 0),
                (H, H) => (None, 0, 2),
                _ => (None, 0, 0),
            };
            let mut v = LinComb::zero();
            if let Some(fam) = fam {
                v.add_term(GenSymbol::new(fam, n + m), Rational::from_int(coeff));
            }
            if n + m == 0 && form != 0 {
                v.add_term(GenSymbol::C, Rational::from_int(n * form));
            }
            Some(v)
        }
    }
}

fn as_lin(pairs: &[(GenSymbol, Rational)]) -> LinComb<GenSymbol> {
    pairs.iter().cloned().collect()
}

/// The involution-like automorphism of the extended affine algebra that swaps
/// the roles of `e` and `f` with a unit mode shift.
pub fn sigma(x: &LinComb<GenSymbol>) -> Result<LinComb<GenSymbol>, AlgebraError> {
    x.iter().try_fold(LinComb::zero(), |mut acc, (g, c)| {
        acc.add_scaled(&sigma_gen(g)?, c);
        Ok(acc)
    })
}

pub fn sigma_gen(g: &GenSymbol) -> Result<LinComb<GenSymbol>, AlgebraError> {
    AlgebraId::ExtendedSl2.check(g)?;
    let one = Rational::one;
    Ok(match g.family {
        Family::E => LinComb::basis(GenSymbol::f(g.mode + 1)),
        Family::F => LinComb::basis(GenSymbol::e(g.mode - 1)),
        Family::H => {
            let mut v = LinComb::term(GenSymbol::h(g.mode), -one());
            if g.mode == 0 {
                v.add_term(GenSymbol::C, one());
            }
            v
        }
        Family::C => LinComb::basis(GenSymbol::C),
        Family::D => as_lin(&[(GenSymbol::D, one()), (GenSymbol::h(0), Rational::frac(1, 2))]),
        _ => unreachable!("checked membership"),
    })
}

/// Spectral flow `pi_s` on affine sl2.
pub fn spectral_flow(s: i64, x: &LinComb<GenSymbol>) -> Result<LinComb<GenSymbol>, AlgebraError> {
    x.iter().try_fold(LinComb::zero(), |mut acc, (g, c)| {
        acc.add_scaled(&spectral_flow_gen(s, g)?, c);
        Ok(acc)
    })
}

pub fn spectral_flow_gen(s: i64, g: &GenSymbol) -> Result<LinComb<GenSymbol>, AlgebraError> {
    AlgebraId::AffineSl2.check(g)?;
    Ok(match g.family {
        Family::E => LinComb::basis(GenSymbol::e(g.mode - s)),
        Family::F => LinComb::basis(GenSymbol::f(g.mode + s)),
        Family::H => {
            let mut v = LinComb::basis(GenSymbol::h(g.mode));
            if g.mode == 0 {
                v.add_term(GenSymbol::C, Rational::from_int(-s));
            }
            v
        }
        Family::C => LinComb::basis(GenSymbol::C),
        _ => unreachable!("checked membership"),
    })
}

/// Monomial `e^e h^h` in the enveloping algebra of the two-dimensional Borel
/// `[h, e] = 2e`, always written with the `e` power on the left.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BorelMono {
    pub e: u32,
    pub h: u32,
}

pub type BorelWord = LinComb<BorelMono>;

/// Product in the Borel enveloping algebra using `h^a e^k = e^k (h + 2k)^a`.
pub fn borel_mul(x: &BorelWord, y: &BorelWord) -> BorelWord {
    let mut out = BorelWord::zero();
    for (m1, c1) in x {
        for (m2, c2) in y {
            // (h + 2k)^a expanded binomially
            let k2 = Rational::from_int(2 * m2.e as i64);
            for j in 0..=m1.h {
                let c = crate::exact::binomial(m1.h, j) * k2.pow((m1.h - j) as i32).expect("nonneg power");
                out.add_term(BorelMono { e: m1.e + m2.e, h: j + m2.h }, c * c1 * c2);
            }
        }
    }
    out
}

pub fn borel_bracket(x: &BorelWord, y: &BorelWord) -> BorelWord {
    borel_mul(x, y).minus(&borel_mul(y, x))
}

/// The homomorphism from the `d, T(n)` algebra into the Borel enveloping
/// algebra determined by a finite set `s` of negative integers and values of
/// a character on `s` and `0`.
#[derive(Clone, Debug)]
pub struct ChiHomomorphism {
    s: Vec<i64>,
    chi: std::collections::BTreeMap<i64, Rational>,
    r: i64,
}

impl ChiHomomorphism {
    pub fn new(
        s: &[i64],
        chi: std::collections::BTreeMap<i64, Rational>,
    ) -> Result<Self, AlgebraError> {
        if s.is_empty() || s.iter().any(|&i| i >= 0) {
            return Err(AlgebraError::Domain("the index set must be nonempty and negative".into()));
        }
        for i in s.iter().chain(std::iter::once(&0)) {
            match chi.get(i) {
                Some(v) if !v.is_zero() => {}
                _ => return Err(AlgebraError::Domain(format!("character value at {i} must be nonzero"))),
            }
        }
        let r = s.iter().fold(0i64, |g, &i| num_integer::gcd(g, i.abs()));
        Ok(ChiHomomorphism { s: s.to_vec(), chi, r })
    }

    /// The gcd of the absolute values of `s`.
    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn image(&self, g: &GenSymbol) -> Result<BorelWord, AlgebraError> {
        AlgebraId::Ttilde.check(g)?;
        Ok(match g.family {
            Family::D => BorelWord::term(BorelMono { e: 0, h: 1 }, Rational::frac(-self.r, 2)),
            Family::T if g.mode == 0 || self.s.contains(&g.mode) => {
                let k = (-g.mode / self.r) as u32;
                BorelWord::term(BorelMono { e: k, h: 0 }, self.chi[&g.mode].clone())
            }
            _ => BorelWord::zero(),
        })
    }
}

/// One-dimensional module of the `d, T(n)` algebra. Only `T(0)` can act
/// nontrivially since `T(i) = [d, T(i)] / i` for `i != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TtildeCharacter {
    pub d: Rational,
    pub t0: Rational,
}

impl TtildeCharacter {
    pub fn value(&self, g: &GenSymbol) -> Result<Rational, AlgebraError> {
        AlgebraId::Ttilde.check(g)?;
        Ok(match g.family {
            Family::D => self.d.clone(),
            Family::T if g.mode == 0 => self.t0.clone(),
            _ => Rational::zero(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn affine_table_values() {
        let alg = AlgebraId::AffineSl2;
        let v = bracket(alg, &GenSymbol::e(2), &GenSymbol::f(-2)).unwrap();
        assert_eq!(v, as_lin(&[(GenSymbol::h(0), q(1)), (GenSymbol::C, q(2))]));
        let v = bracket(alg, &GenSymbol::h(1), &GenSymbol::h(-1)).unwrap();
        assert_eq!(v, as_lin(&[(GenSymbol::C, q(2))]));
        let v = bracket(alg, &GenSymbol::f(0), &GenSymbol::h(3)).unwrap();
        assert_eq!(v, as_lin(&[(GenSymbol::f(3), q(2))]));
    }

    #[test]
    fn virasoro_table_values() {
        let alg = AlgebraId::BorelVir;
        let v = bracket(alg, &GenSymbol::l(2), &GenSymbol::l(-2)).unwrap();
        assert_eq!(v, as_lin(&[(GenSymbol::l(0), q(4)), (GenSymbol::C1, Rational::frac(1, 2))]));
        let v = bracket(alg, &GenSymbol::l(1), &GenSymbol::h(-1)).unwrap();
        assert_eq!(v, as_lin(&[(GenSymbol::h(0), q(1))]));
    }

    #[test]
    fn extended_and_borel1_tables() {
        let v = bracket(AlgebraId::ExtendedSl2, &GenSymbol::D, &GenSymbol::e(-3)).unwrap();
        assert_eq!(v, as_lin(&[(GenSymbol::e(-3), q(-3))]));
        let v = bracket(AlgebraId::Borel1, &GenSymbol::phi(2), &GenSymbol::phi(-2)).unwrap();
        assert_eq!(v, as_lin(&[(GenSymbol::C, q(4))]));
        let v = bracket(AlgebraId::Borel1, &GenSymbol::phi(1), &GenSymbol::e(-3)).unwrap();
        assert_eq!(v, as_lin(&[(GenSymbol::e(-2), q(2))]));
        let v = bracket(AlgebraId::BorelT, &GenSymbol::D, &GenSymbol::t(-2)).unwrap();
        assert_eq!(v, as_lin(&[(GenSymbol::t(-2), q(-2))]));
    }

    #[test]
    fn membership_is_enforced() {
        assert!(matches!(
            bracket(AlgebraId::BorelVir, &GenSymbol::f(0), &GenSymbol::e(0)),
            Err(AlgebraError::UnknownSymbol { .. })
        ));
        assert!(spectral_flow_gen(1, &GenSymbol::D).is_err());
    }

    #[test]
    fn sigma_on_a_bracket() {
        let x = bracket(AlgebraId::ExtendedSl2, &GenSymbol::e(2), &GenSymbol::f(-2)).unwrap();
        let image = sigma(&x).unwrap();
        assert_eq!(image, as_lin(&[(GenSymbol::h(0), q(-1)), (GenSymbol::C, q(3))]));
    }

    #[test]
    fn symbols_parse_and_print() {
        for s in ["e(-3)", "f(0)", "h(2)", "L(-1)", "T(1)", "phi(0)", "d", "c", "c1"] {
            assert_eq!(s.parse::<GenSymbol>().unwrap().to_string(), s);
        }
        assert!("g(1)".parse::<GenSymbol>().is_err());
    }

    #[test]
    fn chi_homomorphism_values() {
        let chi = [(0, q(3)), (-2, q(5)), (-4, q(-1))].into_iter().collect();
        let phi = ChiHomomorphism::new(&[-2, -4], chi).unwrap();
        assert_eq!(phi.r(), 2);
        assert_eq!(phi.image(&GenSymbol::D).unwrap(), BorelWord::term(BorelMono { e: 0, h: 1 }, q(-1)));
        assert_eq!(phi.image(&GenSymbol::t(-4)).unwrap(), BorelWord::term(BorelMono { e: 2, h: 0 }, q(-1)));
        assert_eq!(phi.image(&GenSymbol::t(-3)).unwrap(), BorelWord::zero());
        let bad = [(0, q(3))].into_iter().collect();
        assert!(ChiHomomorphism::new(&[-2], bad).is_err());
    }

    #[test]
    fn borel_product_moves_h_right() {
        let h = BorelWord::basis(BorelMono { e: 0, h: 1 });
        let e = BorelWord::basis(BorelMono { e: 1, h: 0 });
        assert_eq!(borel_bracket(&h, &e), e.scaled(&q(2)));
    }
}
