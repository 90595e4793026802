use std::time::Instant;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One verified identity. `anchor` names the identity being checked and
/// `residual` holds the exact failing vector, rank or count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub description: String,
    pub anchor: String,
    pub status: Status,
    pub residual: String,
    pub wall_micros: u64,
}

impl Check {
    /// Runs `body`, which returns whether the check passed and its residual.
    pub fn timed(description: impl Into<String>, anchor: impl Into<String>, body: impl FnOnce() -> (bool, String)) -> Check {
        let start = Instant::now();
        let (pass, residual) = body();
        Check {
            description: description.into(),
            anchor: anchor.into(),
            status: if pass { Status::Pass } else { Status::Fail },
            residual,
            wall_micros: start.elapsed().as_micros() as u64,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    /// Copy with every timing field zeroed, for reproducibility comparisons.
    pub fn without_timing(&self) -> Report {
        let mut r = self.clone();
        for c in &mut r.checks {
            c.wall_micros = 0;
        }
        r
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Report> {
        serde_json::from_str(s)
    }

    /// Aligned plain-text rendering, one line per check.
    pub fn to_text(&self) -> String {
        let width = self.checks.iter().map(|c| c.anchor.chars().count()).max().unwrap_or(0);
        let mut out = format!("suite {} (seed {})\n", self.suite, self.seed);
        for c in &self.checks {
            let tag = if c.passed() { "PASS" } else { "FAIL" };
            let pad = width - c.anchor.chars().count();
            out.push_str(&format!("{tag}  {}{}  {}", c.anchor, " ".repeat(pad), c.description));
            if !c.residual.is_empty() {
                out.push_str(&format!("  [{}]", c.residual));
            }
            out.push('\n');
        }
        let failed = self.failures().count();
        out.push_str(&format!("{} checks, {} failed\n", self.checks.len(), failed));
        out
    }
}
