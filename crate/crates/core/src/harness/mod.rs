//! Run configuration, operator expressions, verification suites and reports
//! behind the command-line front end.

mod commands;
mod config;
pub mod expr;
mod report;
pub mod suites;

pub use commands::{cmd_act, cmd_kernel, evaluate, vector_json, ActError, ActOutput, EvalError, Operators};
pub use config::{parse_box, ConfigError, Handle, ModuleSpec, RunConfig};
pub use report::{Check, Report, Status};
pub use suites::{run_suite, SUITES};
