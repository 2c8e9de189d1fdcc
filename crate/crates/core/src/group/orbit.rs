//! Co-adjoint orbits of iso(3)* and their images among conjugacy classes.

use rand::Rng;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use super::iso3::Iso3;
use super::su2::{gaussian, random_unit_vector, Su2, LOG_EXCLUSION};
use crate::error::{Error, Result};
use crate::linalg::{self, Vec3};

/// `ξ* = p_a P*_a + j_a J*_a`, identified with `p_a J_a + j_a P_a ∈ iso(3)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoadjointPoint {
    pub p: Vec3,
    pub j: Vec3,
}

impl CoadjointPoint {
    pub fn new(p: Vec3, j: Vec3) -> Self {
        Self { p, j }
    }

    /// Mass-shell and spin values `(p·p, p·j)`.
    pub fn casimirs(&self) -> (f64, f64) {
        (linalg::dot(&self.p, &self.p), linalg::dot(&self.p, &self.j))
    }
}

/// The chart `p P* + j J* ↦ (a, u)` with `u = exp(p_a J_a)` and `Ad(u⁻¹) a = j`.
pub fn exp_star(point: &CoadjointPoint) -> Iso3 {
    let u = Su2::exp(&point.p);
    Iso3 {
        a: u.rotate(&point.j),
        u,
    }
}

/// Preimage of `(a, u)` under [`exp_star`] with `p` on the principal branch.
pub fn log_star(g: &Iso3) -> Result<CoadjointPoint> {
    Ok(CoadjointPoint {
        p: g.u.log()?,
        j: g.u.inverse().rotate(&g.a),
    })
}

/// Class labels `(μ, s)` of an element of ISO(3)~.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClassInvariants {
    pub mu: f64,
    pub s: f64,
    /// Set when `u = 1`: the axis, and therefore `s`, is not defined.
    pub degenerate: bool,
}

/// Rotation angles below this are treated as the identity class.
const DEGENERATE_ANGLE: f64 = 1e-12;

/// `μ = |log u|` and `s = n̂·Ad(u⁻¹) a` with `n̂` the rotation axis.
///
/// Elements with `u = −1` are rejected. For `u = 1` the spin is reported as 0
/// and the result is flagged degenerate.
pub fn conjugacy_invariants(g: &Iso3) -> Result<ClassInvariants> {
    if g.u.distance(&Su2::MINUS_ONE) < LOG_EXCLUSION {
        return Err(Error::ClassUndefined);
    }
    let v = g.u.log()?;
    let mu = linalg::norm(&v);
    if mu < DEGENERATE_ANGLE {
        return Ok(ClassInvariants {
            mu: 0.0,
            s: 0.0,
            degenerate: true,
        });
    }
    let n = linalg::scale(1.0 / mu, &v);
    let j = g.u.inverse().rotate(&g.a);
    Ok(ClassInvariants {
        mu,
        s: linalg::dot(&n, &j),
        degenerate: false,
    })
}

/// Random point on the orbit `O_{μs}`: `|p| = μ`, `p·j = μ s`.
///
/// For `μ = 0, s ≠ 0` the orbit is the sphere `|j| = |s|`; a point on it is
/// returned together with [`Error::OrbitSphere`] as a marker, through
/// [`OrbitSample`].
pub fn sample_orbit<R: Rng + ?Sized>(mu: f64, s: f64, rng: &mut R) -> Result<OrbitSample> {
    if !(mu >= 0.0) {
        return Err(Error::InvalidParameter(format!("orbit mass μ = {mu} must be ≥ 0")));
    }
    if mu == 0.0 {
        if s == 0.0 {
            return Ok(OrbitSample {
                point: CoadjointPoint::new(linalg::ZERO3, linalg::ZERO3),
                sphere: None,
            });
        }
        let j = linalg::scale(s.abs(), &random_unit_vector(rng));
        return Ok(OrbitSample {
            point: CoadjointPoint::new(linalg::ZERO3, j),
            sphere: Some(Error::OrbitSphere { s }),
        });
    }
    let n = random_unit_vector(rng);
    let (e1, e2) = linalg::orthonormal_complement(&n);
    let (t1, t2) = (3.0 * gaussian(rng), 3.0 * gaussian(rng));
    let t = linalg::add(&linalg::scale(t1, &e1), &linalg::scale(t2, &e2));
    Ok(OrbitSample {
        point: CoadjointPoint::new(linalg::scale(mu, &n), linalg::add(&linalg::scale(s, &n), &t)),
        sphere: None,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct OrbitSample {
    pub point: CoadjointPoint,
    /// `Some(Error::OrbitSphere)` when the orbit was the two-sphere `O_{0s}`.
    pub sphere: Option<Error>,
}

/// Random element of the conjugacy class `C_{μs}`, `μ ∈ [0, 2π)`.
pub fn sample_class<R: Rng + ?Sized>(mu: f64, s: f64, rng: &mut R) -> Result<Iso3> {
    if !(0.0..2.0 * PI).contains(&mu) {
        return Err(Error::InvalidParameter(format!("class angle μ = {mu} outside [0, 2π)")));
    }
    Ok(exp_star(&sample_orbit(mu, s, rng)?.point))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn exp_star_basics() {
        let id = exp_star(&CoadjointPoint::new([0.0; 3], [0.0; 3]));
        assert_eq!(id, Iso3::IDENTITY);
        let g = exp_star(&CoadjointPoint::new([0.0; 3], [1.0, -2.0, 0.5]));
        assert_eq!(g, Iso3::translation([1.0, -2.0, 0.5]));
    }

    #[test]
    fn exp_star_on_axis_has_rotation_angle_mu() {
        let mu = 2.3;
        let g = exp_star(&CoadjointPoint::new([0.0, 0.0, mu], [0.4, 0.1, 1.7]));
        let inv = conjugacy_invariants(&g).unwrap();
        assert!((inv.mu - mu).abs() < 1e-14);
        assert!((inv.s - 1.7).abs() < 1e-14);
    }

    #[test]
    fn identity_is_degenerate_class() {
        let inv = conjugacy_invariants(&Iso3::IDENTITY).unwrap();
        assert_eq!((inv.mu, inv.s, inv.degenerate), (0.0, 0.0, true));
    }

    #[test]
    fn minus_one_classes_are_rejected() {
        let g = Iso3::new([1.0, 0.0, 0.0], Su2::MINUS_ONE);
        assert_eq!(conjugacy_invariants(&g), Err(Error::ClassUndefined));
    }

    #[test]
    fn orbit_samples_satisfy_shell_conditions() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let o = sample_orbit(0.0, 0.0, &mut rng).unwrap();
        assert_eq!(o.point, CoadjointPoint::new([0.0; 3], [0.0; 3]));
        let o = sample_orbit(0.0, 1.5, &mut rng).unwrap();
        assert!((linalg::norm(&o.point.j) - 1.5).abs() < 1e-14);
        assert_eq!(o.sphere, Some(Error::OrbitSphere { s: 1.5 }));
        for _ in 0..1000 {
            let mu = rng.gen_range(0.01..6.0);
            let s = rng.gen_range(-3.0..3.0);
            let o = sample_orbit(mu, s, &mut rng).unwrap();
            let (pp, pj) = o.point.casimirs();
            assert!((pp.sqrt() - mu).abs() < 1e-12);
            assert!((pj - mu * s).abs() < 1e-10);
        }
        assert!(sample_orbit(-1.0, 0.0, &mut rng).is_err());
    }

    #[test]
    fn log_star_inverts_exp_star() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..100 {
            let g = Iso3::random(&mut rng, 2.0);
            let back = exp_star(&log_star(&g).unwrap());
            assert!(back.distance(&g) < 1e-10);
        }
    }
}
