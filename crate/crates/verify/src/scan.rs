//! Convergence scans over a halving κ schedule.

use iso3_quant::double::{r_limit_residual, EuclideanIrrepLabel, WignerTensor};
use iso3_quant::group::su2::random_unit_vector;
use iso3_quant::group::{momentum_add_bch, momentum_add_exact, Kappa, Su2};
use iso3_quant::linalg;
use iso3_quant::Result;

use crate::config::RunConfig;
use crate::report::{ScanRow, ScanTable, Status};
use crate::suites::check_rng;

/// Expected convergence order and the band each estimate must fall in.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrderBand {
    pub order_range: (f64, f64),
    pub ratio_range: (f64, f64),
}

pub const R_LIMIT_BAND: OrderBand = OrderBand {
    order_range: (1.8, 2.2),
    ratio_range: (3.5, 4.5),
};

pub const BCH_BAND: OrderBand = OrderBand {
    order_range: (2.8, 3.2),
    ratio_range: (6.96, 9.19),
};

fn within(x: f64, (lo, hi): (f64, f64)) -> bool {
    x >= lo && x <= hi
}

/// Tabulate `residual(κ)` over the schedule and append the order estimate
/// `log₂(mean ratio)`.
pub fn tabulate<F: FnMut(f64) -> Result<f64>>(
    name: &str,
    kappas: &[f64],
    band: OrderBand,
    mut residual: F,
) -> Result<ScanTable> {
    let mut rows = vec![];
    let mut ratios = vec![];
    let mut prev: Option<f64> = None;
    for &k in kappas {
        let r = residual(k)?;
        let ratio = prev.map(|p| p / r);
        let status = ratio.map_or(Status::Pass, |q| Status::from_bool(within(q, band.ratio_range)));
        ratios.extend(ratio);
        rows.push(ScanRow {
            check: name.to_string(),
            kappa: Some(k),
            residual: Some(r),
            ratio,
            status,
        });
        prev = Some(r);
    }
    let mean = ratios.iter().sum::<f64>() / ratios.len() as f64;
    let order = mean.log2();
    rows.push(ScanRow {
        check: format!("{name}.order"),
        kappa: None,
        residual: None,
        ratio: Some(order),
        status: Status::from_bool(within(order, band.order_range)),
    });
    Ok(ScanTable { rows })
}

/// `max |R_κΦ − Φ − iκ rΦ|` for a fixed random state on `H_{1/2} ⊗ H_{−1/2}`.
pub fn r_limit(cfg: &RunConfig) -> Result<ScanTable> {
    let mut rng = check_rng(cfg.seed, "r-limit");
    let labels = (EuclideanIrrepLabel::new(1.0, 1)?, EuclideanIrrepLabel::new(2.0, -1)?);
    let phi = WignerTensor::random(vec![(1, 3), (-1, 3)], &mut rng)?;
    let samples: Vec<(Su2, Su2)> = (0..20).map(|_| (Su2::random(&mut rng), Su2::random(&mut rng))).collect();
    tabulate("r-limit", &cfg.kappas(), R_LIMIT_BAND, |k| {
        r_limit_residual(labels, Kappa::new(k)?, &phi, &samples)
    })
}

/// Order-3 truncation of the curved momentum addition against the exact
/// composition, maximised over random unit momenta.
pub fn bch(cfg: &RunConfig) -> Result<ScanTable> {
    let mut rng = check_rng(cfg.seed, "bch");
    let pairs: Vec<_> = (0..20).map(|_| (random_unit_vector(&mut rng), random_unit_vector(&mut rng))).collect();
    tabulate("bch", &cfg.kappas(), BCH_BAND, |k| {
        let mut worst = 0.0_f64;
        for (k1, k2) in &pairs {
            let series = momentum_add_bch(k1, k2, k, 3)?;
            let exact = momentum_add_exact(k1, k2, Kappa::new(k)?)?;
            worst = worst.max(linalg::norm(&linalg::sub(&series, &exact)));
        }
        Ok(worst)
    })
}
