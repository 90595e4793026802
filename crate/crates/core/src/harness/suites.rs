//! Verification suites. Each suite reads what it needs from a [`RunConfig`]
//! and returns one [`Check`] per identity or certificate.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::config::{ConfigError, Handle, ModuleSpec, RunConfig};
use super::report::{Check, Report};
use crate::algebra::{bracket, bracket_lin, sigma, sigma_gen, spectral_flow, spectral_flow_gen, AlgebraId, GenSymbol};
use crate::checks::{compare_actions, jacobi_failures, representation_property};
use crate::exact::{LinComb, Rational};
use crate::fields::{central_character_from_chi, l_mode, sugawara_central_charge, t_mode, ModeCache};
use crate::free_field::{
    cyclic_vector_identities, degenerate_whittaker_check, generalized_whittaker_check, one_dim_chi,
    realized_central_character, tensor_n1, CheckRecord,
};
use crate::lattice::{compare_realization, derivation_check, pi_module};
use crate::laurent::{Convention, LaurentData};
use crate::module::{Module, TruncationBox};
use crate::whittaker::{basis_certificate, critical_quotient, nilpotency_order, universal};
use crate::with_handle;

pub struct SuiteInfo {
    pub name: &'static str,
    pub summary: &'static str,
}

pub const SUITES: &[SuiteInfo] = &[
    SuiteInfo { name: "brackets", summary: "antisymmetry and Jacobi in every bracket table" },
    SuiteInfo { name: "representation", summary: "x(y v) - y(x v) = [x, y] v on box vectors" },
    SuiteInfo { name: "sugawara", summary: "[L(n), x(m)] = -m x(n+m), Virasoro relation, L(1) on w" },
    SuiteInfo { name: "critical-center", summary: "[T(n), x(m)] = 0 and T(1) w = λμ w at level -2" },
    SuiteInfo { name: "cyclic-identities", summary: "cyclic-vector identities of M_1(λ,μ) ⊗ N_1(χ0,χ1)" },
    SuiteInfo { name: "degenerate", summary: "μ = χ1 = 0: f(1) v = 0 and the L(0) eigenvalue" },
    SuiteInfo { name: "basis-certificate", summary: "rank and leading terms of the Sugawara-type basis" },
    SuiteInfo { name: "whittaker-kernel", summary: "dimension of the space of Whittaker vectors" },
    SuiteInfo { name: "nilpotency", summary: "local nilpotency of e(0) - λ and f(1) - μ" },
    SuiteInfo { name: "realization", summary: "critical quotient against M_T(χ) ⊗ Π_λ" },
    SuiteInfo { name: "critical-equivalence", summary: "M_1(λ,μ) ⊗ C_χ against the critical quotient" },
    SuiteInfo { name: "derivation", summary: "d = -L(0) on Π_λ is a derivation iff χ = a/z²" },
    SuiteInfo { name: "automorphisms", summary: "σ and spectral flow preserve brackets; twisted conditions" },
];

pub fn run_suite(name: &str, cfg: &RunConfig) -> Result<Report, ConfigError> {
    let checks = match name {
        "brackets" => brackets(cfg),
        "representation" => representation(cfg)?,
        "sugawara" => sugawara(cfg)?,
        "critical-center" => critical_center(cfg)?,
        "cyclic-identities" => cyclic_identities(cfg)?,
        "degenerate" => degenerate(cfg)?,
        "basis-certificate" => basis(cfg)?,
        "whittaker-kernel" => super::commands::cmd_kernel(cfg, None)?.checks,
        "nilpotency" => nilpotency(cfg)?,
        "realization" => realization(cfg)?,
        "critical-equivalence" => critical_equivalence(cfg)?,
        "derivation" => derivation(cfg)?,
        "automorphisms" => automorphisms(cfg)?,
        other => {
            let known: Vec<&str> = SUITES.iter().map(|s| s.name).collect();
            return Err(ConfigError::new(format!("unknown suite {other:?}; known suites: {}", known.join(", "))));
        }
    };
    Ok(Report { suite: name.into(), seed: cfg.seed(), checks })
}

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

fn box_name(b: TruncationBox) -> String {
    format!("box({},{})", b.max_weight, b.max_length)
}

fn from_record(params: &str, r: CheckRecord) -> Check {
    let residual = if r.pass { String::new() } else { format!("got {}, expected {}", r.actual, r.expected) };
    Check {
        description: params.to_string(),
        anchor: r.description,
        status: if r.pass { super::Status::Pass } else { super::Status::Fail },
        residual,
        wall_micros: 0,
    }
}

/// Every box vector against every generator pair: first nonzero residual.
fn scan<L>(
    basis: &[L],
    pairs: &[(i64, GenSymbol)],
    mut residual: impl FnMut(i64, GenSymbol, &L) -> Result<Option<String>, String>,
) -> (bool, String) {
    let mut count = 0usize;
    for l in basis {
        for &(n, x) in pairs {
            match residual(n, x, l) {
                Ok(None) => count += 1,
                Ok(Some(r)) => return (false, r),
                Err(e) => return (false, e),
            }
        }
    }
    (true, format!("{count} residuals vanish"))
}

fn brackets(cfg: &RunConfig) -> Vec<Check> {
    let max_mode = cfg.max_mode.unwrap_or(4);
    AlgebraId::ALL
        .iter()
        .map(|&alg| {
            Check::timed(format!("{alg:?}, |mode| <= {max_mode}"), "[x,y] = -[y,x], Jacobi identity", || {
                let failures = jacobi_failures(alg, max_mode);
                let shown: Vec<String> = failures.iter().take(3).map(|(x, y, z)| format!("({x}, {y}, {z})")).collect();
                (failures.is_empty(), if failures.is_empty() { String::new() } else { shown.join(" ") })
            })
        })
        .collect()
}

fn representation(cfg: &RunConfig) -> Result<Vec<Check>, ConfigError> {
    let spec = cfg.module()?;
    let b = cfg.truncation_or(4, 4);
    let max_mode = cfg.max_mode.unwrap_or(3);
    let handle = spec.build()?;
    let alg = handle.algebra();
    let check = with_handle!(&handle, m => Check::timed(
        format!("{} on {}, |mode| <= {max_mode}", describe(spec), box_name(b)),
        "x(y v) - y(x v) = [x, y] v",
        || match representation_property(m, alg, max_mode, b) {
            Ok(n) => (true, format!("{n} commutators checked")),
            Err(e) => (false, e),
        },
    ));
    Ok(vec![check])
}

/// Short human-readable module name.
pub fn describe(spec: &ModuleSpec) -> String {
    match spec {
        ModuleSpec::Universal { lambda, mu, kappa } => format!("V({lambda},{mu},{kappa})"),
        ModuleSpec::CriticalQuotient { lambda, mu, c } => format!("V({lambda},{mu},-2,c) with c = {}", laurent(c)),
        ModuleSpec::BorelVir { lambda, mu, kappa1, kappa } => format!("V({lambda},{mu},{kappa1},{kappa})"),
        ModuleSpec::Wakimoto { lambda, mu, kappa, chi0, chi1 } => {
            format!("M_1({lambda},{mu}) ⊗ N_1({chi0},{chi1}) at level {kappa}")
        }
        ModuleSpec::WakimotoCritical { lambda, mu, chi } => format!("M_1({lambda},{mu}) ⊗ C_χ with χ = {}", laurent(chi)),
        ModuleSpec::Lattice { lambda, chi } => format!("M_T(χ) ⊗ Π_{lambda} with χ = {}", laurent(chi)),
    }
}

/// `c_k z^k + ...` in increasing powers of `z`.
fn laurent(s: &LaurentData) -> String {
    if s.is_zero() {
        return "0".into();
    }
    let terms: Vec<String> = s
        .coeffs
        .keys()
        .rev()
        .map(|&n| {
            let c = s.coeff(n);
            match -n - s.convention.shift() {
                0 => c.to_string(),
                1 if c.is_one() => "z".into(),
                1 => format!("{c}·z"),
                k if c.is_one() => format!("z^{k}"),
                k => format!("{c}·z^{k}"),
            }
        })
        .collect();
    terms.join(" + ")
}

fn sugawara(cfg: &RunConfig) -> Result<Vec<Check>, ConfigError> {
    let spec = cfg.module()?;
    if spec.level() == q(-2) {
        return Err(ConfigError::new("the Sugawara suite needs a noncritical level κ ≠ -2"));
    }
    let b = cfg.truncation_or(4, 4);
    let max_mode = cfg.max_mode.unwrap_or(3);
    let handle = spec.build()?;
    if matches!(handle, Handle::BorelVir(_)) {
        return Err(ConfigError::new("the Sugawara suite needs an affine sl2 module"));
    }
    let name = format!("{} on {}, |n|, |m| <= {max_mode}", describe(spec), box_name(b));
    let mut checks = Vec::new();
    with_handle!(&handle, m => {
        let basis = m.box_basis(b);
        let cache = ModeCache::sugawara(m).map_err(|e| ConfigError::new(e.to_string()))?;
        let charge = sugawara_central_charge(&m.level()).map_err(|e| ConfigError::new(e.to_string()))?;
        let modes: Vec<i64> = (-max_mode..=max_mode).collect();
        let mut pairs = Vec::new();
        for &n in &modes {
            for &k in &modes {
                for x in [GenSymbol::e(k), GenSymbol::f(k), GenSymbol::h(k)] {
                    pairs.push((n, x));
                }
            }
        }
        checks.push(Check::timed(name.clone(), "[L(n), x(m)] = -m x(n+m)", || {
            scan(&basis, &pairs, |n, x, l| {
                let v = LinComb::basis(l.clone());
                let mut r = cache.commutator(n, x, &v).map_err(|e| e.to_string())?;
                r.add_scaled(&m.act(&GenSymbol::new(x.family, x.mode + n), &v), &q(x.mode));
                Ok((!r.is_zero()).then(|| format!("[L({n}), {x}] on {}: {}", m.format_label(l), m.format_vector(&r))))
            })
        }));
        let vir: Vec<(i64, GenSymbol)> = modes
            .iter()
            .flat_map(|&n| modes.iter().filter(move |&&k| k > n).map(move |&k| (n, GenSymbol::l(k))))
            .collect();
        checks.push(Check::timed(name.clone(), "[L(n), L(m)] = (n-m)L(n+m) + (n³-n)/12 · 3κ/(κ+2) δ", || {
            scan(&basis, &vir, |n, x, l| {
                let v = LinComb::basis(l.clone());
                let k = x.mode;
                let ln = |v: &LinComb<_>| cache.apply(n, v).map_err(|e| e.to_string());
                let lk = |v: &LinComb<_>| cache.apply(k, v).map_err(|e| e.to_string());
                let mut r = ln(&lk(&v)?)?.minus(&lk(&ln(&v)?)?);
                r.add_scaled(&cache.apply(n + k, &v).map_err(|e| e.to_string())?, &q(k - n));
                if n + k == 0 {
                    r.add_scaled(&v, &-(Rational::frac(n * n * n - n, 12) * &charge));
                }
                Ok((!r.is_zero()).then(|| format!("(L({n}), L({})) on {}: {}", x.mode, m.format_label(l), m.format_vector(&r))))
            })
        }));
    });
    if let (Handle::Universal(m), ModuleSpec::Universal { lambda, mu, kappa }) = (&handle, spec) {
        checks.push(Check::timed(describe(spec), "L(1)w = λμ/(κ+2) w", || {
            let w = m.cyclic_vector();
            let l1 = l_mode(m, 1, &w).expect("noncritical");
            let expected = (lambda * mu).checked_div(&(kappa + q(2))).expect("noncritical");
            let claimed = lambda * mu;
            let note = if claimed == expected {
                "coincides with the parameter λμ".to_string()
            } else {
                format!("differs from the parameter λμ = {claimed} used for the identification with V(λ, λμ, 3κ/(κ+2), κ)")
            };
            (l1 == w.scaled(&expected), format!("L(1)w = {}; {note}", m.format_vector(&l1)))
        }));
    }
    Ok(checks)
}

fn critical_center(cfg: &RunConfig) -> Result<Vec<Check>, ConfigError> {
    let spec = cfg.module()?;
    if spec.level() != q(-2) {
        return Err(ConfigError::new("the critical-center suite needs level κ = -2"));
    }
    let b = cfg.truncation_or(4, 4);
    let max_mode = cfg.max_mode.unwrap_or(3);
    let handle = spec.build()?;
    let name = format!("{} on {}, |n|, |m| <= {max_mode}", describe(spec), box_name(b));
    let t1 = match spec {
        ModuleSpec::Lattice { chi, .. } => Some(chi.to_convention(Convention::Weight2).coeff(1)),
        _ => spec.eta().map(|(l, u)| &l * &u),
    };
    let checks = with_handle!(&handle, m => {
        let basis = m.box_basis(b);
        let cache = ModeCache::central(m).map_err(|e| ConfigError::new(e.to_string()))?;
        let mut pairs = Vec::new();
        for n in -max_mode..=max_mode {
            for k in -max_mode..=max_mode {
                for x in [GenSymbol::e(k), GenSymbol::f(k), GenSymbol::h(k)] {
                    pairs.push((n, x));
                }
            }
        }
        let mut checks = vec![Check::timed(name.clone(), "[T(n), x(m)] = 0", || {
            scan(&basis, &pairs, |n, x, l| {
                let r = cache.commutator(n, x, &LinComb::basis(l.clone())).map_err(|e| e.to_string())?;
                Ok((!r.is_zero()).then(|| format!("[T({n}), {x}] on {}: {}", m.format_label(l), m.format_vector(&r))))
            })
        })];
        if let Some(t1) = &t1 {
            checks.push(Check::timed(describe(spec), "T(1)w = λμ w", || {
                let w = m.cyclic_vector();
                let v = t_mode(m, 1, &w).expect("critical level");
                (v == w.scaled(t1), format!("T(1)w = {}", m.format_vector(&v)))
            }));
        }
        checks
    });
    Ok(checks)
}

/// A small random rational with numerator in `-6..=6` and denominator in `1..=3`.
fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::frac(rng.random_range(-6..=6), rng.random_range(1..=3))
}

fn noncritical_level(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let k = small_rational(rng);
        if k != q(-2) {
            return k;
        }
    }
}

fn cyclic_identities(cfg: &RunConfig) -> Result<Vec<Check>, ConfigError> {
    let mut tuples = Vec::new();
    if let Some(spec) = &cfg.module {
        let ModuleSpec::Wakimoto { lambda, mu, kappa, chi0, chi1 } = spec else {
            return Err(ConfigError::new("the cyclic-identities suite needs a module of kind wakimoto"));
        };
        tuples.push([lambda, mu, chi0, chi1, kappa].map(Clone::clone));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed());
    for _ in 0..cfg.samples.unwrap_or(0) {
        let [l, u, c0, c1] = std::array::from_fn(|_| small_rational(&mut rng));
        tuples.push([l, u, c0, c1, noncritical_level(&mut rng)]);
    }
    if tuples.is_empty() {
        return Err(ConfigError::new("the cyclic-identities suite needs a wakimoto module or samples > 0"));
    }
    let mut checks = Vec::new();
    for [l, u, c0, c1, k] in tuples {
        let params = format!("(λ,μ,χ0,χ1,κ) = ({l},{u},{c0},{c1},{k})");
        let m = tensor_n1(l, u, k, c0, c1);
        checks.extend(cyclic_vector_identities(&m, 3).into_iter().map(|r| from_record(&params, r)));
    }
    Ok(checks)
}

fn degenerate(cfg: &RunConfig) -> Result<Vec<Check>, ConfigError> {
    let mut tuples = Vec::new();
    if let Some(spec) = &cfg.module {
        match spec {
            ModuleSpec::Wakimoto { lambda, mu, kappa, chi0, chi1 } if mu.is_zero() && chi1.is_zero() => {
                tuples.push((lambda.clone(), chi0.clone(), kappa.clone()));
            }
            _ => return Err(ConfigError::new("the degenerate suite needs a wakimoto module with μ = 0 and χ1 = 0")),
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed());
    for _ in 0..cfg.samples.unwrap_or(0) {
        let (l, c0) = (small_rational(&mut rng), small_rational(&mut rng));
        tuples.push((l, c0, noncritical_level(&mut rng)));
    }
    if tuples.is_empty() {
        return Err(ConfigError::new("the degenerate suite needs a wakimoto module or samples > 0"));
    }
    let mut checks = Vec::new();
    for (l, c0, k) in tuples {
        if k == q(-2) {
            return Err(ConfigError::new("the degenerate suite needs κ ≠ -2"));
        }
        let params = format!("(λ,χ0,κ) = ({l},{c0},{k}), μ = χ1 = 0");
        let m = tensor_n1(l, q(0), k, c0, q(0));
        let records = degenerate_whittaker_check(&m).map_err(|e| ConfigError::new(e.to_string()))?;
        checks.extend(records.into_iter().map(|r| from_record(&params, r)));
    }
    Ok(checks)
}

fn basis(cfg: &RunConfig) -> Result<Vec<Check>, ConfigError> {
    let spec = cfg.module()?;
    let ModuleSpec::Universal { lambda, mu, kappa } = spec else {
        return Err(ConfigError::new("the basis certificate needs a module of kind universal"));
    };
    if *kappa == q(-2) {
        return Err(ConfigError::new("the basis certificate needs κ ≠ -2"));
    }
    let b = cfg.truncation_or(3, 3);
    let m = universal(lambda.clone(), mu.clone(), kappa.clone());
    Ok(vec![Check::timed(
        format!("{} on {}", describe(spec), box_name(b)),
        "𝓤_{i,j,k} w independent, leading term (λ/(κ+2))^|k| u_{i,j,k} w",
        || match basis_certificate(&m, b) {
            Ok(c) => {
                let mut residual = format!("rank {} of {}", c.rank, c.labels);
                if let Some(f) = c.leading_failures.first() {
                    residual.push_str(&format!("; {} leading-term failures, first: {f}", c.leading_failures.len()));
                }
                (c.pass(), residual)
            }
            Err(e) => (false, e.to_string()),
        },
    )])
}

/// Largest nilpotency order of `e(0) - λ` and `f(1) - μ` over the box, against
/// the bound `2 · max_length + 1`.
fn nilpotency(cfg: &RunConfig) -> Result<Vec<Check>, ConfigError> {
    let spec = cfg.module()?;
    let Some((lambda, mu)) = spec.eta() else {
        return Err(ConfigError::new("the nilpotency suite needs a Whittaker-type module"));
    };
    let b = cfg.truncation_or(3, 3);
    let bound = 2 * b.max_length as usize + 1;
    let handle = spec.build()?;
    let checks = with_handle!(&handle, m => {
        [(GenSymbol::e(0), lambda.clone()), (GenSymbol::f(1), mu.clone())]
            .into_iter()
            .map(|(x, eta)| {
                Check::timed(
                    format!("{} on {}", describe(spec), box_name(b)),
                    format!("({x} - {eta})^k v = 0 for k = {bound}"),
                    || {
                        let mut worst = (0, String::new());
                        for l in m.box_basis(b) {
                            match nilpotency_order(m, &x, &eta, &LinComb::basis(l.clone()), bound) {
                                Some(k) if k > worst.0 => worst = (k, m.format_label(&l)),
                                Some(_) => {}
                                None => return (false, format!("{} needs more than {bound} steps", m.format_label(&l))),
                            }
                        }
                        (true, format!("largest order {} at {}", worst.0, worst.1))
                    },
                )
            })
            .collect()
    });
    Ok(checks)
}

fn realization(cfg: &RunConfig) -> Result<Vec<Check>, ConfigError> {
    let spec = cfg.module()?;
    let ModuleSpec::CriticalQuotient { lambda, mu, c } = spec else {
        return Err(ConfigError::new("the realization suite needs a module of kind critical_quotient"));
    };
    let b = cfg.truncation_or(3, 3);
    let max_mode = cfg.max_mode.unwrap_or(3);
    let name = format!("{} on {}, |mode| <= {max_mode}", describe(spec), box_name(b));
    let start = std::time::Instant::now();
    let report = compare_realization(lambda, mu, c, b, max_mode).map_err(|e| ConfigError::new(e.to_string()))?;
    let micros = start.elapsed().as_micros() as u64;
    let mut checks = vec![
        Check::timed(name.clone(), "u w̄ ↦ u (1 ⊗ w_λ) is injective", || {
            (report.rank == report.words, format!("rank {} of {}", report.rank, report.words))
        }),
        Check::timed(name.clone(), "generator matrices agree under u w̄ ↦ u (1 ⊗ w_λ)", || match &report.mismatch {
            None => (true, format!("{} actions compared", report.compared)),
            Some(e) => (false, e.clone()),
        }),
    ];
    for (n, (a, p)) in &report.t_character {
        let show = |x: &Option<Rational>| x.as_ref().map_or("not a scalar".to_string(), |x| x.to_string());
        checks.push(Check::timed(name.clone(), format!("T({n}) agrees on both cyclic vectors"), || {
            (a.is_some() && a == p, format!("{} vs {}", show(a), show(p)))
        }));
    }
    checks[0].wall_micros = micros;
    Ok(checks)
}

fn critical_equivalence(cfg: &RunConfig) -> Result<Vec<Check>, ConfigError> {
    let spec = cfg.module()?;
    let ModuleSpec::WakimotoCritical { lambda, mu, chi } = spec else {
        return Err(ConfigError::new("the critical-equivalence suite needs a module of kind wakimoto_critical"));
    };
    let b = cfg.truncation_or(4, 4);
    let max_mode = cfg.max_mode.unwrap_or(3);
    let wak = one_dim_chi(lambda.clone(), mu.clone(), chi);
    let gens: Vec<GenSymbol> =
        AlgebraId::AffineSl2.generators(max_mode).into_iter().filter(|g| !g.is_central()).collect();
    let candidates = [
        ("c = ½(χ² - 2∂χ)", central_character_from_chi(chi)),
        ("c = ¼(χ² - 2∂χ), the T(n) eigenvalues on the Wakimoto side", realized_central_character(chi)),
    ];
    let mut checks = Vec::new();
    for (anchor, c) in candidates {
        checks.push(Check::timed(
            format!("{} against V({lambda},{mu},-2,c) on {}, |mode| <= {max_mode}", describe(spec), box_name(b)),
            format!("action matrices agree with {anchor}"),
            || {
                let quotient = match critical_quotient(lambda.clone(), mu.clone(), &c) {
                    Ok(q) => q,
                    Err(e) => return (false, e.to_string()),
                };
                let words = quotient.box_basis(b);
                match compare_actions(&quotient, &wak, &words, &gens) {
                    Ok(n) => (true, format!("{n} actions compared, c = {}", laurent(&c))),
                    Err(e) => (false, format!("{e}; c = {}", laurent(&c))),
                }
            },
        ));
    }
    Ok(checks)
}

fn derivation(cfg: &RunConfig) -> Result<Vec<Check>, ConfigError> {
    let spec = cfg.module()?;
    let ModuleSpec::Lattice { lambda, chi } = spec else {
        return Err(ConfigError::new("the derivation suite needs a module of kind lattice"));
    };
    let b = cfg.truncation_or(2, 2);
    let max_mode = cfg.max_mode.unwrap_or(2);
    let chi = chi.to_convention(Convention::Weight2);
    let pure = chi.coeffs.keys().all(|&n| n == 0);
    let mut variants = vec![(chi.clone(), pure)];
    for extra in [-2, -1, 1, 2] {
        let bumped = chi.plus(&LaurentData::new(Convention::Weight2, [(extra, q(1))]));
        if !bumped.is_zero() {
            let pure = bumped.coeffs.keys().all(|&n| n == 0);
            variants.push((bumped, pure));
        }
    }
    let mut checks = Vec::new();
    for (chi, pure) in variants {
        let m = pi_module(lambda.clone(), &chi).map_err(|e| ConfigError::new(e.to_string()))?;
        let anchor = if pure {
            "[d, x(n)] = n x(n) for d = -L(0)"
        } else {
            "[d, x(n)] - n x(n) ≠ 0 for d = -L(0)"
        };
        checks.push(Check::timed(
            format!("M_T(χ) ⊗ Π_{lambda} with χ = {} on {}, |mode| <= {max_mode}", laurent(&chi), box_name(b)),
            anchor,
            || match derivation_check(&m, b, max_mode) {
                None => (pure, "all residuals vanish".into()),
                Some(r) => (!pure, r),
            },
        ));
    }
    Ok(checks)
}

fn automorphisms(cfg: &RunConfig) -> Result<Vec<Check>, ConfigError> {
    let max_mode = cfg.max_mode.unwrap_or(3);
    let mut checks = vec![Check::timed(
        format!("extended affine sl2, |mode| <= {max_mode}"),
        "σ([x, y]) = [σx, σy]",
        || {
            let gens = AlgebraId::ExtendedSl2.generators(max_mode);
            for x in &gens {
                for y in &gens {
                    let alg = AlgebraId::ExtendedSl2;
                    let lhs = sigma(&bracket(alg, x, y).expect("members")).expect("members");
                    let rhs = bracket_lin(alg, &sigma_gen(x).expect("member"), &sigma_gen(y).expect("member"))
                        .expect("members");
                    if lhs != rhs {
                        return (false, format!("({x}, {y})"));
                    }
                }
            }
            (true, String::new())
        },
    )];
    for s in -3..=3 {
        checks.push(Check::timed(
            format!("affine sl2, |mode| <= {max_mode}"),
            format!("π_{s}([x, y]) = [π_{s}x, π_{s}y]"),
            || {
                let alg = AlgebraId::AffineSl2;
                let gens = alg.generators(max_mode);
                for x in &gens {
                    for y in &gens {
                        let lhs = spectral_flow(s, &bracket(alg, x, y).expect("members")).expect("members");
                        let px = spectral_flow_gen(s, x).expect("member");
                        let py = spectral_flow_gen(s, y).expect("member");
                        if lhs != bracket_lin(alg, &px, &py).expect("members") {
                            return (false, format!("({x}, {y})"));
                        }
                    }
                }
                (true, String::new())
            },
        ));
    }
    let spec = cfg.module.clone().unwrap_or(ModuleSpec::WakimotoCritical {
        lambda: q(2),
        mu: q(3),
        chi: LaurentData::new(Convention::Weight1, [(2, q(5)), (1, q(1)), (0, q(3))]),
    });
    let ModuleSpec::WakimotoCritical { lambda, mu, chi } = &spec else {
        return Err(ConfigError::new("twisted conditions need a module of kind wakimoto_critical"));
    };
    let m = one_dim_chi(lambda.clone(), mu.clone(), chi);
    for s in -3..=3 {
        let params = format!("π_{s}-twist of {}", describe(&spec));
        let records = generalized_whittaker_check(&m, s, 3).map_err(|e| ConfigError::new(e.to_string()))?;
        checks.extend(records.into_iter().map(|r| from_record(&params, r)));
    }
    Ok(checks)
}
