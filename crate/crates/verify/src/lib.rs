//! Verification harness for `iso3-quant`: named invariant suites, κ
//! convergence scans, and their CSV / JSON reports.

use std::fmt;
use std::str::FromStr;

pub mod config;
pub mod report;
pub mod scan;
pub mod suites;

pub use config::{ConfigError, Format, RunConfig};
pub use report::{CheckReport, ScanRow, ScanTable, Status};
use suites::Check;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Bialgebra,
    FockRosly,
    Moduli,
    Hopf,
    Qybe,
    Representations,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Bialgebra,
        Suite::FockRosly,
        Suite::Moduli,
        Suite::Hopf,
        Suite::Qybe,
        Suite::Representations,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Bialgebra => "bialgebra",
            Suite::FockRosly => "fock-rosly",
            Suite::Moduli => "moduli",
            Suite::Hopf => "hopf",
            Suite::Qybe => "qybe",
            Suite::Representations => "representations",
        }
    }

    pub fn checks(self) -> &'static [Check] {
        match self {
            Suite::Bialgebra => suites::bialgebra::CHECKS,
            Suite::FockRosly => suites::fock_rosly::CHECKS,
            Suite::Moduli => suites::moduli::CHECKS,
            Suite::Hopf => suites::hopf::CHECKS,
            Suite::Qybe => suites::qybe::CHECKS,
            Suite::Representations => suites::representations::CHECKS,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scan {
    RLimit,
    Bch,
}

impl Scan {
    pub fn name(self) -> &'static str {
        match self {
            Scan::RLimit => "r-limit",
            Scan::Bch => "bch",
        }
    }
}

impl FromStr for Scan {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "r-limit" => Ok(Scan::RLimit),
            "bch" => Ok(Scan::Bch),
            other => Err(format!("unknown scan `{other}`")),
        }
    }
}

/// Failure of a whole run, as opposed to a failing check.
#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Numeric(#[from] iso3_quant::Error),
}

/// Run every check of `suite`; reports are sorted by check name.
pub fn run_verify(suite: Suite, cfg: &RunConfig) -> Result<Vec<CheckReport>, ConfigError> {
    cfg.validate()?;
    let checks = suite.checks();
    for name in cfg.tol_overrides.keys() {
        if !checks.iter().any(|c| c.name == name) {
            let known: Vec<&str> = checks.iter().map(|c| c.name).collect();
            return Err(ConfigError::UnknownCheck {
                name: name.clone(),
                known: known.join(", "),
            });
        }
    }
    Ok(suites::run_checks(checks, cfg))
}

pub fn run_scan(scan: Scan, cfg: &RunConfig) -> Result<ScanTable, RunError> {
    cfg.validate()?;
    if !cfg.tol_overrides.is_empty() {
        return Err(ConfigError::TolOnScan.into());
    }
    Ok(match scan {
        Scan::RLimit => scan::r_limit(cfg)?,
        Scan::Bch => scan::bch(cfg)?,
    })
}
