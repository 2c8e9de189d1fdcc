//! The double cover ISO(3)~ = ℝ³ ⋊ SU(2).

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::su2::{gaussian, Su2};
use crate::linalg::{self, Vec3};

/// A pair `(a, u)` with product `(a,u)·(b,v) = (a + Ad(u) b, uv)`.
/// Serialised as the pair `(a, [q₀, q₁, q₂, q₃])`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(from = "(Vec3, [f64; 4])", into = "(Vec3, [f64; 4])")]
pub struct Iso3 {
    /// Translation (length units).
    pub a: Vec3,
    pub u: Su2,
}

impl From<(Vec3, [f64; 4])> for Iso3 {
    fn from((a, q): (Vec3, [f64; 4])) -> Self {
        Iso3 {
            a,
            u: Su2::new(q[0], q[1], q[2], q[3]),
        }
    }
}

impl From<Iso3> for (Vec3, [f64; 4]) {
    fn from(g: Iso3) -> Self {
        (g.a, g.u.q)
    }
}

impl Iso3 {
    pub const IDENTITY: Iso3 = Iso3 {
        a: linalg::ZERO3,
        u: Su2::IDENTITY,
    };

    pub fn new(a: Vec3, u: Su2) -> Self {
        Self { a, u }
    }

    pub fn translation(a: Vec3) -> Self {
        Self { a, u: Su2::IDENTITY }
    }

    pub fn rotation(u: Su2) -> Self {
        Self {
            a: linalg::ZERO3,
            u,
        }
    }

    pub fn mul(&self, other: &Iso3) -> Iso3 {
        Iso3 {
            a: linalg::add(&self.a, &self.u.rotate(&other.a)),
            u: self.u.mul(&other.u),
        }
    }

    pub fn inverse(&self) -> Iso3 {
        let ui = self.u.inverse();
        Iso3 {
            a: linalg::scale(-1.0, &ui.rotate(&self.a)),
            u: ui,
        }
    }

    /// `self · h · self⁻¹`.
    pub fn conjugate(&self, h: &Iso3) -> Iso3 {
        self.mul(h).mul(&self.inverse())
    }

    /// `[x, y] = x y x⁻¹ y⁻¹`.
    pub fn commutator(x: &Iso3, y: &Iso3) -> Iso3 {
        x.mul(y).mul(&x.inverse()).mul(&y.inverse())
    }

    /// `|a − b| + |u − v|` (quaternion chordal distance).
    pub fn distance(&self, other: &Iso3) -> f64 {
        linalg::norm(&linalg::sub(&self.a, &other.a)) + self.u.distance(&other.u)
    }

    /// Random element with Haar rotation part and Gaussian translation of the given scale.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, translation_scale: f64) -> Iso3 {
        let a = [gaussian(rng), gaussian(rng), gaussian(rng)];
        Iso3 {
            a: linalg::scale(translation_scale, &a),
            u: Su2::random(rng),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    #[test]
    fn translations_add() {
        let g = Iso3::translation([1.0, 2.0, 3.0]).mul(&Iso3::translation([-0.5, 0.0, 4.0]));
        assert_eq!(g, Iso3::translation([0.5, 2.0, 7.0]));
    }

    #[test]
    fn rotated_translation_cancels() {
        let g = Iso3::new([1.0, 0.0, 0.0], Su2::about_axis3(PI));
        let h = Iso3::translation([1.0, 0.0, 0.0]);
        let p = g.mul(&h);
        assert!(linalg::max_abs(&p.a) < 1e-15);
        assert_eq!(p.u, Su2::about_axis3(PI));
    }

    #[test]
    fn conjugating_identity_gives_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let g = Iso3::random(&mut rng, 2.0);
        assert!(g.conjugate(&Iso3::IDENTITY).distance(&Iso3::IDENTITY) < 1e-14);
    }

    #[test]
    fn group_axioms_on_random_triples() {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for _ in 0..100 {
            let (x, y, z) = (
                Iso3::random(&mut rng, 3.0),
                Iso3::random(&mut rng, 3.0),
                Iso3::random(&mut rng, 3.0),
            );
            assert!(x.mul(&y).mul(&z).distance(&x.mul(&y.mul(&z))) < 1e-12);
            assert!(x.mul(&x.inverse()).distance(&Iso3::IDENTITY) < 1e-14);
        }
    }
}
