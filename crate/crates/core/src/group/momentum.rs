//! κ-scaled exponential charts on momentum space and the curved momentum
//! addition they induce.

use serde::{Deserialize, Serialize};

use super::su2::Su2;
use crate::error::{Error, Result};
use crate::linalg::{self, Vec3};

/// Momentum in `(ℝ³)*`, inverse-length units.
pub type Momentum = Vec3;

/// Deformation parameter with the dimension of length.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct Kappa(f64);

impl Kappa {
    pub fn new(kappa: f64) -> Result<Self> {
        if kappa > 0.0 && kappa.is_finite() {
            Ok(Kappa(kappa))
        } else {
            Err(Error::InvalidParameter(format!("κ = {kappa} must be positive")))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// `exp_κ(k) = exp(κ k_a J_a)`.
pub fn exp_kappa(k: &Momentum, kappa: Kappa) -> Su2 {
    Su2::exp(&linalg::scale(kappa.0, k))
}

/// Inverse of [`exp_kappa`] on the open ball of radius `2π/κ`.
pub fn log_kappa(u: &Su2, kappa: Kappa) -> Result<Momentum> {
    Ok(linalg::scale(1.0 / kappa.0, &u.log()?))
}

/// `k₁ ∗_κ k₂ = log_κ(exp_κ(k₁) exp_κ(k₂))`.
pub fn momentum_add_exact(k1: &Momentum, k2: &Momentum, kappa: Kappa) -> Result<Momentum> {
    log_kappa(&exp_kappa(k1, kappa).mul(&exp_kappa(k2, kappa)), kappa)
}

/// Truncated series for `k₁ ∗_κ k₂`:
/// order 1 is `k₁ + k₂`, order 2 adds `(κ/2) k₁∧k₂`, order 3 adds
/// `(κ²/12)(k₁·k₂ (k₁+k₂) − k₁² k₂ − k₂² k₁)`.
pub fn momentum_add_bch(k1: &Momentum, k2: &Momentum, kappa: f64, order: u8) -> Result<Momentum> {
    if !(1..=3).contains(&order) {
        return Err(Error::InvalidParameter(format!("series order {order} not in 1..=3")));
    }
    let mut out = linalg::add(k1, k2);
    if order >= 2 {
        out = linalg::add(&out, &linalg::scale(0.5 * kappa, &linalg::cross(k1, k2)));
    }
    if order >= 3 {
        let d = linalg::dot(k1, k2);
        let t = linalg::sub(
            &linalg::scale(d, &linalg::add(k1, k2)),
            &linalg::add(
                &linalg::scale(linalg::dot(k1, k1), k2),
                &linalg::scale(linalg::dot(k2, k2), k1),
            ),
        );
        out = linalg::add(&out, &linalg::scale(kappa * kappa / 12.0, &t));
    }
    Ok(out)
}
