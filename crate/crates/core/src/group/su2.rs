//! SU(2) as unit quaternions.
//!
//! A quaternion `(q₀, q)` stands for the matrix `q₀·1 + i q·τ` with `τ_a` the
//! Pauli matrices. Rotation generators are `J_a = −(i/2)τ_a`, so
//! `exp(v_a J_a) = (cos(|v|/2), −sin(|v|/2) v̂)` and `[J_a, J_b] = ε_{abc} J_c`.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::linalg::{self, Mat3, Vec3};

/// Distance from −1 inside which the logarithm is refused.
pub const LOG_EXCLUSION: f64 = 1e-9;
/// Below this rotation angle the logarithm switches to a series.
const SMALL_ANGLE: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Su2 {
    /// `[q₀, q₁, q₂, q₃]`, scalar part first.
    pub q: [f64; 4],
}

pub type Mat2 = [[Complex64; 2]; 2];

impl Su2 {
    pub const IDENTITY: Su2 = Su2 {
        q: [1.0, 0.0, 0.0, 0.0],
    };
    pub const MINUS_ONE: Su2 = Su2 {
        q: [-1.0, 0.0, 0.0, 0.0],
    };

    /// Build from raw components, normalising.
    pub fn new(q0: f64, q1: f64, q2: f64, q3: f64) -> Self {
        Su2 {
            q: [q0, q1, q2, q3],
        }
        .normalized()
    }

    pub fn normalized(self) -> Self {
        let n = self.q.iter().map(|x| x * x).sum::<f64>().sqrt();
        Su2 {
            q: self.q.map(|x| x / n),
        }
    }

    pub fn vector_part(&self) -> Vec3 {
        [self.q[1], self.q[2], self.q[3]]
    }

    pub fn norm(&self) -> f64 {
        self.q.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// Group product, renormalised.
    pub fn mul(&self, other: &Su2) -> Su2 {
        let (a0, a) = (self.q[0], self.vector_part());
        let (b0, b) = (other.q[0], other.vector_part());
        let c = linalg::cross(&a, &b);
        Su2 {
            q: [
                a0 * b0 - linalg::dot(&a, &b),
                a0 * b[0] + b0 * a[0] - c[0],
                a0 * b[1] + b0 * a[1] - c[1],
                a0 * b[2] + b0 * a[2] - c[2],
            ],
        }
        .normalized()
    }

    pub fn inverse(&self) -> Su2 {
        Su2 {
            q: [self.q[0], -self.q[1], -self.q[2], -self.q[3]],
        }
    }

    /// `self · other · self⁻¹`.
    pub fn conjugate(&self, other: &Su2) -> Su2 {
        self.mul(other).mul(&self.inverse())
    }

    /// Euclidean distance between quaternions.
    pub fn distance(&self, other: &Su2) -> f64 {
        (0..4)
            .map(|i| (self.q[i] - other.q[i]).powi(2))
            .sum::<f64>()
            .sqrt()
    }

    /// `exp(v_a J_a)`.
    pub fn exp(v: &Vec3) -> Su2 {
        let theta = linalg::norm(v);
        let half = 0.5 * theta;
        // sin(θ/2)/θ, with series near zero
        let sinc = if theta < 1e-6 {
            0.5 - theta * theta / 48.0
        } else {
            half.sin() / theta
        };
        Su2 {
            q: [half.cos(), -sinc * v[0], -sinc * v[1], -sinc * v[2]],
        }
        .normalized()
    }

    /// Principal logarithm `v` with `exp(v) = self` and `|v| ∈ [0, 2π)`.
    pub fn log(&self) -> Result<Vec3> {
        if self.distance(&Su2::MINUS_ONE) < LOG_EXCLUSION {
            return Err(Error::LogUndefined);
        }
        let q0 = self.q[0];
        let w = self.vector_part();
        let s = linalg::norm(&w);
        if s == 0.0 {
            return Ok(linalg::ZERO3);
        }
        let theta = 2.0 * s.atan2(q0);
        let ratio = if q0 > 0.0 && theta < SMALL_ANGLE {
            // θ/s = 2 atan(x)/s with x = s/q₀
            let x = s / q0;
            let x2 = x * x;
            (2.0 / q0) * (1.0 - x2 / 3.0 + x2 * x2 / 5.0)
        } else {
            theta / s
        };
        Ok(linalg::scale(-ratio, &w))
    }

    /// Rotation angle `|log u| ∈ [0, 2π]`.
    pub fn angle(&self) -> f64 {
        2.0 * linalg::norm(&self.vector_part()).atan2(self.q[0])
    }

    /// The SO(3) matrix `Ad(u)` with `u J_b u⁻¹ = J_a Ad(u)_{ab}`.
    pub fn adjoint_matrix(&self) -> Mat3 {
        let q0 = self.q[0];
        let q = self.vector_part();
        let d = q0 * q0 - linalg::dot(&q, &q);
        let mut m = [[0.0; 3]; 3];
        let qx = linalg::cross_matrix(&q);
        for a in 0..3 {
            for b in 0..3 {
                m[a][b] = 2.0 * q[a] * q[b] - 2.0 * q0 * qx[a][b];
            }
            m[a][a] += d;
        }
        m
    }

    /// `Ad(u) v`.
    pub fn rotate(&self, v: &Vec3) -> Vec3 {
        linalg::mat_vec(&self.adjoint_matrix(), v)
    }

    /// The 2×2 unitary `q₀ + i q·τ`.
    pub fn to_matrix(&self) -> Mat2 {
        let [q0, q1, q2, q3] = self.q;
        let c = Complex64::new;
        [[c(q0, q3), c(q2, q1)], [c(-q2, q1), c(q0, -q3)]]
    }

    /// Inverse of [`Su2::to_matrix`] for a matrix in SU(2).
    pub fn from_matrix(m: &Mat2) -> Su2 {
        Su2::new(m[0][0].re, m[0][1].im, m[0][1].re, m[0][0].im)
    }

    /// ZYZ Euler angles with `u = exp(αJ₃) exp(βJ₂) exp(γJ₃)`,
    /// `α ∈ [0, 4π)`, `β ∈ [0, π]`, `γ ∈ [0, 2π)`.
    pub fn euler_angles(&self) -> (f64, f64, f64) {
        let m = self.to_matrix();
        // u₁₁ = e^{−i(α+γ)/2} cos(β/2), u₂₁ = e^{i(α−γ)/2} sin(β/2)
        let c = m[0][0].norm();
        let s = m[1][0].norm();
        let beta = 2.0 * s.atan2(c);
        let sum = if c > 1e-14 { -2.0 * m[0][0].arg() } else { 0.0 };
        let diff = if s > 1e-14 { 2.0 * m[1][0].arg() } else { 0.0 };
        let mut alpha = 0.5 * (sum + diff);
        let mut gamma = 0.5 * (sum - diff);
        // shifting γ by 2π and α by 2π together leaves u unchanged
        let two_pi = 2.0 * PI;
        let four_pi = 4.0 * PI;
        let k = (gamma / two_pi).floor();
        gamma -= k * two_pi;
        alpha -= k * two_pi;
        alpha = alpha.rem_euclid(four_pi);
        (alpha, beta, gamma)
    }

    pub fn from_euler(alpha: f64, beta: f64, gamma: f64) -> Su2 {
        Su2::exp(&[0.0, 0.0, alpha])
            .mul(&Su2::exp(&[0.0, beta, 0.0]))
            .mul(&Su2::exp(&[0.0, 0.0, gamma]))
    }

    /// `h_μ = exp(μ J₃)`.
    pub fn about_axis3(mu: f64) -> Su2 {
        Su2::exp(&[0.0, 0.0, mu])
    }

    /// Haar-random element.
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Su2 {
        loop {
            let q: [f64; 4] = std::array::from_fn(|_| gaussian(rng));
            let n = q.iter().map(|x| x * x).sum::<f64>().sqrt();
            if n > 1e-8 {
                return Su2 { q: q.map(|x| x / n) };
            }
        }
    }
}

pub(crate) fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    rng.sample(StandardNormal)
}

/// Uniformly distributed unit vector.
pub fn random_unit_vector<R: Rng + ?Sized>(rng: &mut R) -> Vec3 {
    loop {
        let v = [gaussian(rng), gaussian(rng), gaussian(rng)];
        let n = linalg::norm(&v);
        if n > 1e-8 {
            return linalg::scale(1.0 / n, &v);
        }
    }
}

pub fn mat2_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut out = [[Complex64::new(0.0, 0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}
