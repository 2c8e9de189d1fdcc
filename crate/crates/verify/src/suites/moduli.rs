//! Holonomy spaces of flat ISO(3)~ connections and the class/orbit dictionary.

use std::f64::consts::PI;

use iso3_quant::group::{conjugacy_invariants, exp_star, sample_orbit, ClassInvariants, Iso3};
use iso3_quant::moduli::{random_flat_connection, FlatSample, LastClass, SurfaceData};
use iso3_quant::Result;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{max_of, Check};
use crate::config::RunConfig;

pub const CHECKS: &[Check] = &[
    Check::new("gauge_class_invariants", 1e-9, gauge_class_invariants),
    Check::new("momentum_map_equivariance", 1e-10, momentum_map_equivariance),
    Check::new("orbit_class_correspondence", 1e-10, orbit_class_correspondence),
    Check::new("relation_defect_g0_m3", 1e-10, |c, r| relation_defect(c, r, 0, 3)),
    Check::new("relation_defect_g1_m0", 1e-10, |c, r| relation_defect(c, r, 1, 0)),
    Check::new("relation_defect_g1_m1", 1e-10, |c, r| relation_defect(c, r, 1, 1)),
    Check::new("relation_defect_g2_m0", 1e-10, |c, r| relation_defect(c, r, 2, 0)),
];

const SAMPLES: usize = 100;

fn random_label(rng: &mut ChaCha8Rng) -> (f64, f64) {
    (rng.gen_range(0.2..2.0 * PI - 0.2), rng.gen_range(-3.0..3.0))
}

fn random_surface(rng: &mut ChaCha8Rng, genus: usize, marked: usize) -> Result<SurfaceData> {
    SurfaceData::new(genus, (0..marked).map(|_| random_label(rng)).collect())
}

fn sample(rng: &mut ChaCha8Rng, genus: usize, marked: usize) -> Result<FlatSample> {
    let surface = random_surface(rng, genus, marked)?;
    random_flat_connection(&surface, LastClass::Report, rng)
}

fn relation_defect(_: &RunConfig, rng: &mut ChaCha8Rng, genus: usize, marked: usize) -> Result<f64> {
    let mut worst = 0.0_f64;
    for _ in 0..SAMPLES {
        worst = worst.max(sample(rng, genus, marked)?.holonomies.relation_defect());
    }
    Ok(worst)
}

/// `μ(g·H) = g μ(H) g⁻¹` for arbitrary, not necessarily flat, holonomies.
fn momentum_map_equivariance(_: &RunConfig, rng: &mut ChaCha8Rng) -> Result<f64> {
    let mut worst = 0.0_f64;
    for &(genus, marked) in &[(0, 3), (1, 1), (2, 0), (1, 2)] {
        for _ in 0..SAMPLES / 4 {
            let mut h = sample(rng, genus, marked)?.holonomies;
            for (a, b) in &mut h.handles {
                *a = a.mul(&Iso3::random(rng, 1.0));
                *b = Iso3::random(rng, 1.0).mul(b);
            }
            let g = Iso3::random(rng, 2.0);
            let lhs = h.gauge_transform(&g).momentum_map();
            let rhs = g.conjugate(&h.momentum_map());
            worst = worst.max(lhs.distance(&rhs));
        }
    }
    Ok(worst)
}

fn invariant_distance(a: &ClassInvariants, b: &ClassInvariants) -> f64 {
    max_of([(a.mu - b.mu).abs(), (a.s - b.s).abs()])
}

/// Puncture classes are unchanged by a gauge transformation.
fn gauge_class_invariants(_: &RunConfig, rng: &mut ChaCha8Rng) -> Result<f64> {
    let mut worst = 0.0_f64;
    for _ in 0..SAMPLES {
        let h = sample(rng, 1, 3)?.holonomies;
        let g = Iso3::random(rng, 2.0);
        let before = h.puncture_invariants();
        let after = h.gauge_transform(&g).puncture_invariants();
        for (x, y) in before.into_iter().zip(after) {
            worst = worst.max(invariant_distance(&x?, &y?));
        }
    }
    Ok(worst)
}

/// `conjugacy_invariants ∘ exp_star` recovers `(μ, s)` on sampled orbits.
fn orbit_class_correspondence(_: &RunConfig, rng: &mut ChaCha8Rng) -> Result<f64> {
    let mut worst = 0.0_f64;
    for _ in 0..200 {
        let mu = rng.gen_range(1e-3..2.0 * PI - 1e-3);
        let s = rng.gen_range(-3.0..=3.0);
        let point = sample_orbit(mu, s, rng)?.point;
        let inv = conjugacy_invariants(&exp_star(&point))?;
        worst = worst.max(invariant_distance(&inv, &ClassInvariants { mu, s, degenerate: false }));
    }
    Ok(worst)
}
