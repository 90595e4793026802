use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraId;
use crate::exact::Rational;
use crate::free_field::{one_dim_chi, tensor_n1, Wakimoto};
use crate::lattice::{pi_module, PiModule};
use crate::laurent::LaurentData;
use crate::module::TruncationBox;
use crate::whittaker::{
    borel_vir, critical_quotient, universal, BorelVirModule, CriticalQuotient, UniversalWhittaker,
};

/// Invalid input, reported before any computation. Maps to exit status 2.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{0}")]
pub struct ConfigError(pub String);

impl ConfigError {
    pub fn new(msg: impl Into<String>) -> Self {
        ConfigError(msg.into())
    }
}

/// A module together with its parameters, as written in a config file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ModuleSpec {
    /// `V(λ, μ, κ)`.
    Universal { lambda: Rational, mu: Rational, kappa: Rational },
    /// `V(λ, μ, -2, c)`; `c` in weight-two indexing, modes `n <= 0`.
    CriticalQuotient { lambda: Rational, mu: Rational, c: LaurentData },
    /// `V(λ, μ, κ1, κ)` over the loop Borel plus Virasoro algebra.
    BorelVir { lambda: Rational, mu: Rational, kappa1: Rational, kappa: Rational },
    /// `M_1(λ, μ) ⊗ N_1(χ0, χ1)` at level `κ`.
    Wakimoto { lambda: Rational, mu: Rational, kappa: Rational, chi0: Rational, chi1: Rational },
    /// `M_1(λ, μ) ⊗ C_χ` at the critical level.
    WakimotoCritical { lambda: Rational, mu: Rational, chi: LaurentData },
    /// `M_T(χ) ⊗ Π_λ`.
    Lattice { lambda: Rational, chi: LaurentData },
}

/// A constructed module.
pub enum Handle {
    Universal(UniversalWhittaker),
    Critical(CriticalQuotient),
    BorelVir(BorelVirModule),
    Wakimoto(Wakimoto),
    Lattice(PiModule),
}

/// Evaluates `$body` with `$m` bound to the concrete module inside a handle.
#[macro_export]
macro_rules! with_handle {
    ($h:expr, $m:ident => $body:expr) => {
        match $h {
            $crate::harness::Handle::Universal($m) => $body,
            $crate::harness::Handle::Critical($m) => $body,
            $crate::harness::Handle::BorelVir($m) => $body,
            $crate::harness::Handle::Wakimoto($m) => $body,
            $crate::harness::Handle::Lattice($m) => $body,
        }
    };
}

impl ModuleSpec {
    pub fn build(&self) -> Result<Handle, ConfigError> {
        Ok(match self {
            ModuleSpec::Universal { lambda, mu, kappa } => {
                Handle::Universal(universal(lambda.clone(), mu.clone(), kappa.clone()))
            }
            ModuleSpec::CriticalQuotient { lambda, mu, c } => Handle::Critical(
                critical_quotient(lambda.clone(), mu.clone(), c)
                    .map_err(|e| ConfigError::new(format!("critical quotient: {e}")))?,
            ),
            ModuleSpec::BorelVir { lambda, mu, kappa1, kappa } => {
                Handle::BorelVir(borel_vir(lambda.clone(), mu.clone(), kappa1.clone(), kappa.clone()))
            }
            ModuleSpec::Wakimoto { lambda, mu, kappa, chi0, chi1 } => Handle::Wakimoto(tensor_n1(
                lambda.clone(),
                mu.clone(),
                kappa.clone(),
                chi0.clone(),
                chi1.clone(),
            )),
            ModuleSpec::WakimotoCritical { lambda, mu, chi } => {
                Handle::Wakimoto(one_dim_chi(lambda.clone(), mu.clone(), chi))
            }
            ModuleSpec::Lattice { lambda, chi } => {
                Handle::Lattice(pi_module(lambda.clone(), chi).map_err(|e| ConfigError::new(format!("lattice module: {e}")))?)
            }
        })
    }

    /// `(λ, μ)` of the Whittaker function the cyclic vector is attached to,
    /// when there is one.
    pub fn eta(&self) -> Option<(Rational, Rational)> {
        match self {
            ModuleSpec::Universal { lambda, mu, .. }
            | ModuleSpec::CriticalQuotient { lambda, mu, .. }
            | ModuleSpec::Wakimoto { lambda, mu, .. }
            | ModuleSpec::WakimotoCritical { lambda, mu, .. } => Some((lambda.clone(), mu.clone())),
            ModuleSpec::BorelVir { .. } | ModuleSpec::Lattice { .. } => None,
        }
    }

    pub fn level(&self) -> Rational {
        match self {
            ModuleSpec::Universal { kappa, .. }
            | ModuleSpec::BorelVir { kappa, .. }
            | ModuleSpec::Wakimoto { kappa, .. } => kappa.clone(),
            _ => Rational::from_int(-2),
        }
    }
}

impl Handle {
    /// The algebra whose bracket table the module represents.
    pub fn algebra(&self) -> AlgebraId {
        match self {
            Handle::BorelVir(_) => AlgebraId::BorelVir,
            _ => AlgebraId::AffineSl2,
        }
    }
}

/// A single JSON run description. Command-line flags override its fields.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub module: Option<ModuleSpec>,
    #[serde(rename = "box")]
    pub truncation: Option<TruncationBox>,
    pub max_mode: Option<i64>,
    pub suite: Option<String>,
    pub seed: Option<u64>,
    /// Number of seeded random parameter tuples for sampling suites.
    pub samples: Option<usize>,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn from_json(s: &str) -> Result<RunConfig, ConfigError> {
        serde_json::from_str(s).map_err(|e| ConfigError::new(format!("config: {e}")))
    }

    pub fn with_module(module: ModuleSpec) -> RunConfig {
        RunConfig { module: Some(module), ..RunConfig::default() }
    }

    pub fn module(&self) -> Result<&ModuleSpec, ConfigError> {
        self.module.as_ref().ok_or_else(|| ConfigError::new("this command needs a module in the config"))
    }

    pub fn truncation_or(&self, w: u32, l: u32) -> TruncationBox {
        self.truncation.unwrap_or(TruncationBox::new(w, l))
    }

    pub fn seed(&self) -> u64 {
        self.seed.unwrap_or(0)
    }
}

/// Parses `W,L`.
pub fn parse_box(s: &str) -> Result<TruncationBox, ConfigError> {
    let bad = || ConfigError::new(format!("box must look like W,L with nonnegative integers, got {s:?}"));
    let (w, l) = s.split_once(',').ok_or_else(bad)?;
    let w = w.trim().parse().map_err(|_| bad())?;
    let l = l.trim().parse().map_err(|_| bad())?;
    Ok(TruncationBox::new(w, l))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_parses_rationals_and_laurent_data() {
        let cfg = RunConfig::from_json(
            r#"{"module": {"kind": "critical_quotient", "lambda": "2", "mu": "3",
                "c": {"convention": "weight2", "coeffs": {"0": "12", "-1": "3/2"}}},
                "box": {"max_weight": 2, "max_length": 2}, "seed": 7}"#,
        )
        .unwrap();
        let ModuleSpec::CriticalQuotient { c, .. } = cfg.module().unwrap() else { panic!("wrong kind") };
        assert_eq!(c.coeff(-1), Rational::frac(3, 2));
        assert_eq!(cfg.truncation, Some(TruncationBox::new(2, 2)));
        assert!(cfg.module().unwrap().build().is_ok());
    }

    #[test]
    fn preconditions_are_named() {
        let cfg = RunConfig::from_json(r#"{"module": {"kind": "lattice", "lambda": "0",
            "chi": {"convention": "weight2", "coeffs": {}}}}"#)
        .unwrap();
        let err = cfg.module().unwrap().build().err().unwrap();
        assert!(err.0.contains("λ ≠ 0"), "{err}");
        assert!(RunConfig::from_json(r#"{"modul": 1}"#).is_err());
        assert!(parse_box("4;4").is_err());
        assert_eq!(parse_box("4, 3").unwrap(), TruncationBox::new(4, 3));
    }
}
