//! Run configuration and its validation.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::str::FromStr;

use thiserror::Error;

/// Problems with the command line or the configuration it describes.
#[derive(Debug, Error, PartialEq)]
pub enum ConfigError {
    #[error("cannot parse spin `{0}`: expected an integer or half-integer such as 3, 2.5 or 5/2")]
    Spin(String),
    #[error("malformed tolerance override `{0}`: expected <check>=<value>")]
    TolSyntax(String),
    #[error("tolerance for `{name}` must be a finite number ≥ 0, got {value}")]
    TolValue { name: String, value: String },
    #[error("unknown check `{name}` in tolerance override; known checks: {known}")]
    UnknownCheck { name: String, known: String },
    #[error("tolerance overrides are not accepted by scans")]
    TolOnScan,
    #[error("at least 2 halvings are needed to estimate an order, got {0}")]
    Halvings(u32),
    #[error("κ schedule must start at a positive finite value, got {0}")]
    KappaStart(f64),
    #[error("band limit must be at least 1")]
    BandLimit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format `{other}` (csv | json)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub seed: u64,
    pub tol_overrides: BTreeMap<String, f64>,
    /// Largest spin used by the harmonic checks, doubled.
    pub two_j_max: u32,
    pub band_limit: usize,
    pub kappa_start: f64,
    pub halvings: u32,
    pub format: Format,
    pub out: Option<PathBuf>,
    /// Record wall times; off by default so reports are byte-identical.
    pub timing: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            tol_overrides: BTreeMap::new(),
            two_j_max: 12,
            band_limit: 12,
            kappa_start: 0.1,
            halvings: 7,
            format: Format::Csv,
            out: None,
            timing: false,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.band_limit == 0 {
            return Err(ConfigError::BandLimit);
        }
        if !(self.kappa_start > 0.0 && self.kappa_start.is_finite()) {
            return Err(ConfigError::KappaStart(self.kappa_start));
        }
        if self.halvings < 2 {
            return Err(ConfigError::Halvings(self.halvings));
        }
        Ok(())
    }

    /// Tolerance for `check`, honouring overrides.
    pub fn tol(&self, check: &str, default: f64) -> f64 {
        self.tol_overrides.get(check).copied().unwrap_or(default)
    }

    /// Every κ of the schedule: `start, start/2, …, start/2^halvings`.
    pub fn kappas(&self) -> Vec<f64> {
        (0..=self.halvings).map(|k| self.kappa_start / 2f64.powi(k as i32)).collect()
    }
}

/// Parse a spin written as `3`, `2.5` or `5/2` into `2j`.
pub fn parse_two_j(s: &str) -> Result<u32, ConfigError> {
    let err = || ConfigError::Spin(s.to_string());
    let t = s.trim();
    if let Some((num, den)) = t.split_once('/') {
        let num: u32 = num.trim().parse().map_err(|_| err())?;
        return match den.trim() {
            "2" => Ok(num),
            "1" => Ok(2 * num),
            _ => Err(err()),
        };
    }
    if let Ok(n) = t.parse::<u32>() {
        return Ok(2 * n);
    }
    let x: f64 = t.parse().map_err(|_| err())?;
    let doubled = 2.0 * x;
    if x >= 0.0 && doubled.fract() == 0.0 && doubled <= u32::MAX as f64 {
        Ok(doubled as u32)
    } else {
        Err(err())
    }
}

/// Parse `name=value`.
pub fn parse_tol(s: &str) -> Result<(String, f64), ConfigError> {
    let (name, value) = s.split_once('=').ok_or_else(|| ConfigError::TolSyntax(s.to_string()))?;
    let name = name.trim();
    if name.is_empty() {
        return Err(ConfigError::TolSyntax(s.to_string()));
    }
    let bad = || ConfigError::TolValue {
        name: name.to_string(),
        value: value.to_string(),
    };
    let v: f64 = value.trim().parse().map_err(|_| bad())?;
    if !(v >= 0.0 && v.is_finite()) {
        return Err(bad());
    }
    Ok((name.to_string(), v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spins() {
        assert_eq!(parse_two_j("3"), Ok(6));
        assert_eq!(parse_two_j("2.5"), Ok(5));
        assert_eq!(parse_two_j("5/2"), Ok(5));
        assert_eq!(parse_two_j("0"), Ok(0));
        for bad in ["1.25", "-1", "x", "3/4", ""] {
            assert!(parse_two_j(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn tolerances() {
        assert_eq!(parse_tol("cybe=1e-3"), Ok(("cybe".into(), 1e-3)));
        assert_eq!(parse_tol("cybe=0"), Ok(("cybe".into(), 0.0)));
        assert!(parse_tol("cybe").is_err());
        assert!(parse_tol("=1").is_err());
        assert!(parse_tol("cybe=-1").is_err());
        assert!(parse_tol("cybe=nan").is_err());
    }

    #[test]
    fn schedule() {
        let cfg = RunConfig::default();
        let k = cfg.kappas();
        assert_eq!(k.len(), 8);
        assert_eq!(k[0], 0.1);
        assert!((k[7] - 0.1 / 128.0).abs() < 1e-18);
        let bad = RunConfig {
            halvings: 1,
            ..RunConfig::default()
        };
        assert_eq!(bad.validate(), Err(ConfigError::Halvings(1)));
    }
}
