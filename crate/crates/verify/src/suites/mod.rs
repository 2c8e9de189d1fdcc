//! Verification suites: named checks with default tolerances, run under a
//! per-check RNG derived from the seed and the check name.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::config::RunConfig;
use crate::report::CheckReport;

pub mod bialgebra;
pub mod fock_rosly;
pub mod hopf;
pub mod moduli;
pub mod qybe;
pub mod representations;

pub type CheckFn = fn(&RunConfig, &mut ChaCha8Rng) -> iso3_quant::Result<f64>;

#[derive(Clone, Copy)]
pub struct Check {
    pub name: &'static str,
    pub tol: f64,
    pub run: CheckFn,
}

impl Check {
    pub const fn new(name: &'static str, tol: f64, run: CheckFn) -> Self {
        Self { name, tol, run }
    }
}

/// FNV-1a, so the stream of each check does not depend on which other
/// checks ran before it.
fn name_hash(name: &str) -> u64 {
    name.bytes()
        .fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

pub fn check_rng(seed: u64, name: &str) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ name_hash(name))
}

/// Run `checks` and return their reports sorted by name.
pub fn run_checks(checks: &[Check], cfg: &RunConfig) -> Vec<CheckReport> {
    let mut reports: Vec<CheckReport> = checks
        .iter()
        .map(|c| {
            let mut rng = check_rng(cfg.seed, c.name);
            let start = Instant::now();
            let residual = match (c.run)(cfg, &mut rng) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("{}: {e}", c.name);
                    f64::INFINITY
                }
            };
            let ms = if cfg.timing { start.elapsed().as_millis() as u64 } else { 0 };
            CheckReport::new(c.name, residual, cfg.tol(c.name, c.tol), ms)
        })
        .collect();
    reports.sort_by(|a, b| a.check.cmp(&b.check));
    reports
}

/// Largest absolute value in an iterator, `0` when empty.
pub(crate) fn max_of<I: IntoIterator<Item = f64>>(it: I) -> f64 {
    it.into_iter().fold(0.0, |m, x| if x.is_nan() || m.is_nan() { f64::NAN } else { m.max(x) })
}
