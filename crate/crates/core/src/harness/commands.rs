use std::collections::BTreeMap;

use serde_json::{json, Value};

use super::config::{ConfigError, Handle, ModuleSpec, RunConfig};
use super::expr::{parse, Factor};
use super::report::{Check, Report};
use crate::algebra::{Family, GenSymbol};
use crate::exact::{LinComb, Rational};
use crate::fields::{l_mode, t_mode};
use crate::free_field::Wakimoto;
use crate::lattice::PiModule;
use crate::module::{Module, ModuleError, Monomial, TruncationBox};
use crate::whittaker::{central_monomial_vectors, whittaker_vectors, BorelVirModule, CriticalQuotient, UniversalWhittaker};
use crate::with_handle;

/// Failure while evaluating an expression on a module.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error(transparent)]
    Parse(#[from] super::expr::ParseError),
    #[error("token {0} is not supported by the target module")]
    Unsupported(String),
    #[error(transparent)]
    Module(#[from] ModuleError),
}

/// Operators beyond the module's own generators, and JSON labels.
pub trait Operators: Module + Sized {
    fn weyl(&self, _f: &Factor, _v: &LinComb<Self::Label>) -> Option<LinComb<Self::Label>> {
        None
    }

    /// The degree operator, where the module carries one.
    fn degree(&self, v: &LinComb<Self::Label>) -> Option<LinComb<Self::Label>> {
        if self.level() == Rational::from_int(-2) || !self.supports(&GenSymbol::e(0)) {
            return None;
        }
        l_mode(self, 0, v).ok().map(|x| x.scaled(&Rational::from_int(-1)))
    }

    fn label_json(&self, label: &Self::Label) -> Value;
}

/// `{"e": {mode: exponent}, "h": {...}, "f": {...}}`.
fn monomial_json(m: &Monomial) -> Value {
    let mut blocks: BTreeMap<&str, BTreeMap<String, u32>> = BTreeMap::new();
    for key in ["e", "h", "f"] {
        blocks.insert(key, BTreeMap::new());
    }
    for g in m {
        let key = match g.family {
            Family::E => "e",
            Family::H => "h",
            Family::F => "f",
            Family::L => "L",
            _ => "other",
        };
        *blocks.entry(key).or_default().entry(g.mode.to_string()).or_default() += 1;
    }
    json!(blocks)
}

impl Operators for UniversalWhittaker {
    fn label_json(&self, label: &Monomial) -> Value {
        monomial_json(label)
    }
}

impl Operators for CriticalQuotient {
    fn label_json(&self, label: &Monomial) -> Value {
        monomial_json(label)
    }
}

impl Operators for BorelVirModule {
    fn degree(&self, _v: &LinComb<Monomial>) -> Option<LinComb<Monomial>> {
        None
    }

    fn label_json(&self, label: &Monomial) -> Value {
        monomial_json(label)
    }
}

impl Operators for Wakimoto {
    fn weyl(&self, f: &Factor, v: &LinComb<Self::Label>) -> Option<LinComb<Self::Label>> {
        match *f {
            Factor::A(n) => Some(self.a(n, v)),
            Factor::AStar(n) => Some(self.astar(n, v)),
            _ => None,
        }
    }

    fn label_json(&self, label: &Self::Label) -> Value {
        serde_json::to_value(label).expect("labels serialize")
    }
}

impl Operators for PiModule {
    fn weyl(&self, f: &Factor, v: &LinComb<Self::Label>) -> Option<LinComb<Self::Label>> {
        match *f {
            Factor::A(n) => Some(self.a(n, v)),
            Factor::AInv(n) => Some(self.a_inv(n, v)),
            Factor::AStar(n) => Some(self.a_star(n, v)),
            _ => None,
        }
    }

    /// `d = -L(0)` on `Π_λ`.
    fn degree(&self, v: &LinComb<Self::Label>) -> Option<LinComb<Self::Label>> {
        Some(self.l0(v).scaled(&Rational::from_int(-1)))
    }

    fn label_json(&self, label: &Self::Label) -> Value {
        serde_json::to_value(label).expect("labels serialize")
    }
}

/// Applies a parsed product to `v`, rightmost factor first.
pub fn evaluate<M: Operators>(m: &M, factors: &[Factor], v: &LinComb<M::Label>) -> Result<LinComb<M::Label>, EvalError> {
    let mut v = v.clone();
    for f in factors.iter().rev() {
        let unsupported = || EvalError::Unsupported(f.to_string());
        v = match f {
            Factor::Scalar(q) => v.scaled(q),
            Factor::Gen(g) => m.try_act(g, &v).map_err(|_| unsupported())?,
            Factor::Sugawara(n) => l_mode(m, *n, &v).map_err(|e| match e {
                ModuleError::Unsupported(_) => unsupported(),
                e => e.into(),
            })?,
            Factor::Central(n) => t_mode(m, *n, &v).map_err(|e| match e {
                ModuleError::Unsupported(_) => unsupported(),
                e => e.into(),
            })?,
            Factor::Degree => m.degree(&v).ok_or_else(unsupported)?,
            Factor::A(_) | Factor::AInv(_) | Factor::AStar(_) => m.weyl(f, &v).ok_or_else(unsupported)?,
        };
    }
    Ok(v)
}

/// `[{"label": ..., "coeff": "p/q"}, ...]`.
pub fn vector_json<M: Operators>(m: &M, v: &LinComb<M::Label>) -> Value {
    Value::Array(v.iter().map(|(l, c)| json!({"label": m.label_json(l), "coeff": c.to_string()})).collect())
}

/// Result of `act`: the vector in both renderings.
#[derive(Clone, Debug, PartialEq)]
pub struct ActOutput {
    pub text: String,
    pub json: Value,
}

/// Evaluates `expr` on `target · w`, where `target` is itself an expression
/// (empty for the cyclic vector).
pub fn cmd_act(module: &ModuleSpec, expr: &str, target: &str) -> Result<ActOutput, ActError> {
    let factors = parse(expr).map_err(|e| ActError::Eval(e.into()))?;
    let target = parse(target).map_err(|e| ActError::Eval(e.into()))?;
    let handle = module.build().map_err(ActError::Config)?;
    with_handle!(&handle, m => {
        let start = evaluate(m, &target, &m.cyclic_vector()).map_err(ActError::Eval)?;
        let v = evaluate(m, &factors, &start).map_err(ActError::Eval)?;
        Ok(ActOutput { text: m.format_vector(&v), json: vector_json(m, &v) })
    })
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ActError {
    #[error(transparent)]
    Config(ConfigError),
    #[error(transparent)]
    Eval(EvalError),
}

/// Kernel dimension predicted for the cyclic module, when there is a prediction:
/// one for noncritical universal modules and critical quotients, the number
/// of central monomials for the universal critical module.
fn predicted_kernel(h: &Handle, b: TruncationBox) -> Option<usize> {
    match h {
        Handle::Universal(m) if m.level() == Rational::from_int(-2) => Some(central_monomial_vectors(m, b).len()),
        Handle::Universal(_) | Handle::Critical(_) => Some(1),
        _ => None,
    }
}

fn eta_of(spec: &ModuleSpec) -> Result<(Rational, Rational), ConfigError> {
    if let Some(eta) = spec.eta() {
        return Ok(eta);
    }
    match spec {
        // f(1) w = χ(1)/λ w on the lattice module
        ModuleSpec::Lattice { lambda, chi } => {
            let chi = chi.to_convention(crate::laurent::Convention::Weight2);
            Ok((lambda.clone(), chi.coeff(1).checked_div(lambda).map_err(|_| ConfigError::new("λ ≠ 0 required"))?))
        }
        _ => Err(ConfigError::new("the Whittaker-vector solver needs a module with e(0) and f(1)")),
    }
}

/// Whittaker vectors of the configured module inside the box. `eta`
/// overrides the module's own `(λ, μ)`.
pub fn cmd_kernel(cfg: &RunConfig, eta: Option<(Rational, Rational)>) -> Result<Report, ConfigError> {
    let spec = cfg.module()?;
    let overridden = eta.is_some();
    let (lambda, mu) = match eta {
        Some(e) => e,
        None => eta_of(spec)?,
    };
    let b = cfg.truncation_or(3, 3);
    let handle = spec.build()?;
    let predicted = if !overridden { predicted_kernel(&handle, b) } else { None };
    let check = with_handle!(&handle, m => {
        Check::timed(
            format!("Whittaker vectors of type ({lambda}, {mu}) in box({},{})", b.max_weight, b.max_length),
            "(e(0) - λ)v = (f(1) - μ)v = 0, e(n)v = f(n+1)v = h(n)v = 0",
            || {
                let kernel = whittaker_vectors(m, &lambda, &mu, b);
                let basis: Vec<String> = kernel.iter().map(|v| m.format_vector(v)).collect();
                let pass = match predicted {
                    Some(d) => kernel.len() == d,
                    None => true,
                };
                let expected = predicted.map_or(String::new(), |d| format!(", expected {d}"));
                (pass, format!("dimension {}{expected}; basis: {}", kernel.len(), basis.join(" | ")))
            },
        )
    });
    Ok(Report { suite: "kernel".into(), seed: cfg.seed(), checks: vec![check] })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn act_examples() {
        let v231 = ModuleSpec::Universal { lambda: q(2), mu: q(3), kappa: q(1) };
        let crit = ModuleSpec::Universal { lambda: q(2), mu: q(3), kappa: q(-2) };
        assert_eq!(cmd_act(&crit, "T(1)", "").unwrap().text, "6·w");
        assert_eq!(cmd_act(&v231, "e(0)", "").unwrap().text, "2·w");
        assert_eq!(cmd_act(&v231, "f(1) h(0)", "").unwrap().text, "3·h(0)·w + 6·w");
        assert_eq!(cmd_act(&v231, "f(1)", "h(0)").unwrap().text, "3·h(0)·w + 6·w");
        assert!(matches!(cmd_act(&v231, "T(0)", ""), Err(ActError::Eval(EvalError::Module(_)))));
        assert!(matches!(cmd_act(&v231, "a(0)", ""), Err(ActError::Eval(EvalError::Unsupported(_)))));
    }

    #[test]
    fn act_json_uses_mode_blocks() {
        let v231 = ModuleSpec::Universal { lambda: q(2), mu: q(3), kappa: q(1) };
        let out = cmd_act(&v231, "-1/2 e(-1) h(0) h(0)", "").unwrap();
        assert_eq!(
            out.json,
            json!([{"label": {"e": {"-1": 1}, "h": {"0": 2}, "f": {}}, "coeff": "-1/2"}])
        );
    }
}
