use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use whittaker_core::harness::{cmd_act, cmd_kernel, parse_box, run_suite, ActError, ConfigError, Report, RunConfig, SUITES};
use whittaker_core::Rational;

/// Exact computations with Whittaker modules over affine sl2.
#[derive(Parser)]
#[command(name = "whittaker", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and emit a report.
    Verify {
        #[arg(long)]
        suite: Option<String>,
        /// JSON run configuration.
        #[arg(long)]
        params: Option<PathBuf>,
        /// Truncation box as W,L.
        #[arg(long = "box")]
        truncation: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        max_mode: Option<i64>,
        /// Also write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        pretty: bool,
    },
    /// Apply an operator expression such as "f(1) h(0)" to a vector.
    Act {
        #[arg(long)]
        expr: String,
        #[arg(long)]
        params: PathBuf,
        /// Expression applied to the cyclic vector first; selects the target.
        #[arg(long, default_value = "")]
        target: String,
        #[arg(long)]
        pretty: bool,
    },
    /// Basis of the Whittaker vectors inside a box.
    Kernel {
        #[arg(long)]
        params: PathBuf,
        #[arg(long = "box")]
        truncation: Option<String>,
        /// Whittaker type as λ,μ; defaults to the module's own.
        #[arg(long)]
        eta: Option<String>,
        #[arg(long)]
        pretty: bool,
    },
    /// List the available suites.
    Suites,
}

/// Reads a run configuration from a file, or inline when the argument is
/// itself a JSON object.
fn load(path: Option<&Path>) -> Result<RunConfig, ConfigError> {
    let Some(path) = path else { return Ok(RunConfig::default()) };
    if let Some(inline) = path.to_str().filter(|s| s.trim_start().starts_with('{')) {
        return RunConfig::from_json(inline);
    }
    let text = std::fs::read_to_string(path)
        .map_err(|e| ConfigError::new(format!("cannot read {}: {e}", path.display())))?;
    RunConfig::from_json(&text)
}

fn parse_eta(s: &str) -> Result<(Rational, Rational), ConfigError> {
    let bad = || ConfigError::new(format!("eta must look like λ,μ with rationals, got {s:?}"));
    let (l, m) = s.split_once(',').ok_or_else(bad)?;
    Ok((l.trim().parse().map_err(|_| bad())?, m.trim().parse().map_err(|_| bad())?))
}

fn emit(report: &Report, pretty: bool, out: Option<&Path>) -> Result<ExitCode, ConfigError> {
    if let Some(path) = out {
        std::fs::write(path, report.to_json() + "\n")
            .map_err(|e| ConfigError::new(format!("cannot write {}: {e}", path.display())))?;
    }
    if pretty {
        print!("{}", report.to_text());
    } else {
        println!("{}", report.to_json());
    }
    Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn run(cli: Cli) -> Result<ExitCode, ConfigError> {
    match cli.command {
        Command::Verify { suite, params, truncation, seed, samples, max_mode, out, pretty } => {
            let mut cfg = load(params.as_deref())?;
            if let Some(b) = truncation {
                cfg.truncation = Some(parse_box(&b)?);
            }
            cfg.seed = seed.or(cfg.seed);
            cfg.samples = samples.or(cfg.samples);
            cfg.max_mode = max_mode.or(cfg.max_mode);
            let out = out.or(cfg.out.clone());
            let name = suite.or(cfg.suite.clone()).ok_or_else(|| ConfigError::new("no suite given; pass --suite"))?;
            let report = run_suite(&name, &cfg)?;
            emit(&report, pretty, out.as_deref())
        }
        Command::Act { expr, params, target, pretty } => {
            let cfg = load(Some(&params))?;
            match cmd_act(cfg.module()?, &expr, &target) {
                Ok(v) => {
                    if pretty {
                        println!("{}", v.text);
                    } else {
                        println!("{}", serde_json::to_string(&v.json).expect("json"));
                    }
                    Ok(ExitCode::SUCCESS)
                }
                Err(ActError::Config(e)) => Err(e),
                Err(ActError::Eval(e)) => Err(ConfigError::new(e.to_string())),
            }
        }
        Command::Kernel { params, truncation, eta, pretty } => {
            let mut cfg = load(Some(&params))?;
            if let Some(b) = truncation {
                cfg.truncation = Some(parse_box(&b)?);
            }
            let eta = eta.as_deref().map(parse_eta).transpose()?;
            let report = cmd_kernel(&cfg, eta)?;
            emit(&report, pretty, None)
        }
        Command::Suites => {
            let width = SUITES.iter().map(|s| s.name.len()).max().unwrap_or(0);
            for s in SUITES {
                println!("{:width$}  {}", s.name, s.summary);
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
