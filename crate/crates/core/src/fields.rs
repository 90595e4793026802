//! Quadratic fields built from `e, f, h`: Sugawara modes away from the
//! critical level and the central modes `T(n)` at level `-2`.

use crate::algebra::GenSymbol;
use crate::exact::{LinComb, Rational};
use crate::laurent::{Convention, LaurentData};
use crate::module::{ActionCache, Module, ModuleError};

/// `:x(a) y(b):` applied to `v`; nonnegative modes of `x` act first.
fn normal_pair<M: Module>(m: &M, x: GenSymbol, y: GenSymbol, v: &LinComb<M::Label>) -> LinComb<M::Label> {
    if x.mode <= -1 {
        m.act(&x, &m.act(&y, v))
    } else {
        m.act(&y, &m.act(&x, v))
    }
}

fn slice<M: Module>(m: &M, n: i64, k: i64, v: &LinComb<M::Label>) -> LinComb<M::Label> {
    let mut out = normal_pair(m, GenSymbol::e(k), GenSymbol::f(n - k), v);
    out.add_assign(&normal_pair(m, GenSymbol::f(k), GenSymbol::e(n - k), v));
    out.add_scaled(&normal_pair(m, GenSymbol::h(k), GenSymbol::h(n - k), v), &Rational::frac(1, 2));
    out
}

/// `sum_k :e(k)f(n-k): + :f(k)e(n-k): + 1/2 :h(k)h(n-k):` applied to `v`,
/// without any normalization.
pub fn casimir_sum<M: Module>(m: &M, n: i64, v: &LinComb<M::Label>) -> Result<LinComb<M::Label>, ModuleError> {
    for g in [GenSymbol::e(0), GenSymbol::f(0), GenSymbol::h(0)] {
        if !m.supports(&g) {
            return Err(ModuleError::Unsupported(g));
        }
    }
    if v.is_zero() {
        return Ok(LinComb::zero());
    }
    let bound = m.vector_bound(v);
    let (lo, hi) = ((n - bound).min(0), bound.max(0));
    let mut out = LinComb::zero();
    for k in lo..=hi {
        out.add_assign(&slice(m, n, k, v));
    }
    // the slices just outside the window must vanish
    for k in [lo - 1, hi + 1] {
        if !slice(m, n, k, v).is_zero() {
            return Err(ModuleError::Truncation(k));
        }
    }
    Ok(out)
}

/// Sugawara mode `L(n)`; undefined at the critical level.
pub fn l_mode<M: Module>(m: &M, n: i64, v: &LinComb<M::Label>) -> Result<LinComb<M::Label>, ModuleError> {
    let shifted = m.level() + Rational::from_int(2);
    if shifted.is_zero() {
        return Err(ModuleError::Domain("Sugawara modes need a noncritical level".into()));
    }
    let scale = (Rational::from_int(2) * shifted).recip().expect("nonzero");
    Ok(casimir_sum(m, n, v)?.scaled(&scale))
}

/// Central mode `T(n)` at level `-2`, indexed so that `T(z) = sum T(n) z^{-n-2}`.
pub fn t_mode<M: Module>(m: &M, n: i64, v: &LinComb<M::Label>) -> Result<LinComb<M::Label>, ModuleError> {
    if m.level() != Rational::from_int(-2) {
        return Err(ModuleError::Domain("T(n) is only central at level -2".into()));
    }
    Ok(casimir_sum(m, n, v)?.scaled(&Rational::frac(1, 2)))
}

/// Virasoro central charge `3k/(k+2)` of the Sugawara construction.
pub fn sugawara_central_charge(level: &Rational) -> Result<Rational, ModuleError> {
    let shifted = level + Rational::from_int(2);
    (Rational::from_int(3) * level)
        .checked_div(&shifted)
        .map_err(|_| ModuleError::Domain("Sugawara modes need a noncritical level".into()))
}

/// `[L(n), x(k)] v + k x(n+k) v`, which vanishes for a correct Sugawara field.
pub fn l_commutator_residual<M: Module>(
    m: &M,
    n: i64,
    x: GenSymbol,
    v: &LinComb<M::Label>,
) -> Result<LinComb<M::Label>, ModuleError> {
    let lx = l_mode(m, n, &m.act(&x, v))?;
    let xl = m.act(&x, &l_mode(m, n, v)?);
    let shifted = GenSymbol::new(x.family, x.mode + n);
    let mut r = lx.minus(&xl);
    r.add_scaled(&m.act(&shifted, v), &Rational::from_int(x.mode));
    Ok(r)
}

/// `[T(n), x(k)] v`.
pub fn t_commutator<M: Module>(
    m: &M,
    n: i64,
    x: GenSymbol,
    v: &LinComb<M::Label>,
) -> Result<LinComb<M::Label>, ModuleError> {
    let tx = t_mode(m, n, &m.act(&x, v))?;
    let xt = m.act(&x, &t_mode(m, n, v)?);
    Ok(tx.minus(&xt))
}

/// Residual of the Virasoro relation for `L(n), L(k)` on `v`.
pub fn virasoro_residual<M: Module>(
    m: &M,
    n: i64,
    k: i64,
    v: &LinComb<M::Label>,
) -> Result<LinComb<M::Label>, ModuleError> {
    let c = sugawara_central_charge(&m.level())?;
    let lnk = l_mode(m, n, &l_mode(m, k, v)?)?;
    let lkn = l_mode(m, k, &l_mode(m, n, v)?)?;
    let mut r = lnk.minus(&lkn);
    r.add_scaled(&l_mode(m, n + k, v)?, &Rational::from_int(k - n));
    if n + k == 0 {
        r.add_scaled(v, &(-(Rational::frac(n * n * n - n, 12) * c)));
    }
    Ok(r)
}

/// `c(z) = 1/2 (chi(z)^2 - 2 chi'(z))` for a weight-one `chi`, returned in
/// weight-two indexing.
pub fn central_character_from_chi(chi: &LaurentData) -> LaurentData {
    let chi = chi.to_convention(Convention::Weight1);
    let mut c: std::collections::BTreeMap<i64, Rational> = std::collections::BTreeMap::new();
    for (a, ca) in &chi.coeffs {
        for (b, cb) in &chi.coeffs {
            *c.entry(a + b).or_default() += Rational::frac(1, 2) * ca * cb;
        }
        // -chi'(z) contributes (n+1) chi_n at z^{-n-2}
        *c.entry(*a).or_default() += Rational::from_int(a + 1) * ca;
    }
    LaurentData::new(Convention::Weight2, c)
}

/// `L(n)` or `T(n)` memoized on basis vectors of one module.
pub struct ModeCache<'a, M: Module> {
    module: &'a M,
    scale: Rational,
    memo: ActionCache<M::Label, i64>,
}

impl<'a, M: Module> ModeCache<'a, M> {
    /// Sugawara modes; fails at the critical level.
    pub fn sugawara(module: &'a M) -> Result<Self, ModuleError> {
        let shifted = module.level() + Rational::from_int(2);
        let scale = (Rational::from_int(2) * shifted)
            .recip()
            .map_err(|_| ModuleError::Domain("Sugawara modes need a noncritical level".into()))?;
        Ok(Self::with_scale(module, scale))
    }

    /// Central modes `T(n)`; fails away from level `-2`.
    pub fn central(module: &'a M) -> Result<Self, ModuleError> {
        if module.level() != Rational::from_int(-2) {
            return Err(ModuleError::Domain("T(n) is only central at level -2".into()));
        }
        Ok(Self::with_scale(module, Rational::frac(1, 2)))
    }

    fn with_scale(module: &'a M, scale: Rational) -> Self {
        ModeCache { module, scale, memo: Default::default() }
    }

    pub fn apply(&self, n: i64, v: &LinComb<M::Label>) -> Result<LinComb<M::Label>, ModuleError> {
        let mut out = LinComb::zero();
        for (l, c) in v {
            let image = match self.memo.get(&n, l) {
                Some(x) => x,
                None => {
                    let x = casimir_sum(self.module, n, &LinComb::basis(l.clone()))?.scaled(&self.scale);
                    self.memo.insert(&n, l, &x);
                    x
                }
            };
            out.add_scaled(&image, c);
        }
        Ok(out)
    }

    /// `[X(n), x] v` for the cached field `X`.
    pub fn commutator(&self, n: i64, x: GenSymbol, v: &LinComb<M::Label>) -> Result<LinComb<M::Label>, ModuleError> {
        let m = self.module;
        Ok(self.apply(n, &m.act(&x, v))?.minus(&m.act(&x, &self.apply(n, v)?)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn central_character_examples() {
        let chi = LaurentData::new(Convention::Weight1, [(0, Rational::from_int(4))]);
        let c = central_character_from_chi(&chi);
        assert_eq!(c.coeff(0), Rational::from_int(12));
        assert_eq!(c.coeffs.len(), 1);
        // chi = a/z gives c = (a^2/2 + a)/z^2 and nothing else
        let chi = LaurentData::new(Convention::Weight1, [(0, Rational::from_int(-2))]);
        assert!(central_character_from_chi(&chi).is_zero());
    }

    #[test]
    fn central_charge_values() {
        assert_eq!(sugawara_central_charge(&Rational::one()).unwrap(), Rational::one());
        assert!(sugawara_central_charge(&Rational::from_int(-2)).is_err());
    }
}
