//! The R-element of D(SU(2)) on tensor products of irreps.

use std::f64::consts::PI;

use iso3_quant::double::rep::SlotSpace;
use iso3_quant::double::{qybe_residual, r_apply_slots, r_element_apply, DoubleIrrepLabel, WignerTensor};
use iso3_quant::group::Su2;
use iso3_quant::harmonic::u1_character;
use iso3_quant::Result;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::Check;
use crate::config::RunConfig;

pub const CHECKS: &[Check] = &[
    Check::new("qybe", 1e-12, qybe),
    Check::new("r_equivariance", 1e-12, r_equivariance),
    Check::new("r_inverse", 1e-12, r_inverse),
];

const TRIPLES: usize = 20;
const SAMPLES: usize = 20;

/// A non-central label with `|2s| ≤ 3`, or occasionally a spin label.
fn random_label(rng: &mut ChaCha8Rng) -> DoubleIrrepLabel {
    if rng.gen_bool(0.15) {
        return DoubleIrrepLabel::spin(rng.gen_range(0..=3));
    }
    DoubleIrrepLabel {
        mu: rng.gen_range(0.05..2.0 * PI - 0.05),
        two_s: rng.gen_range(-3..=3),
    }
}

fn space(label: &DoubleIrrepLabel) -> SlotSpace {
    if label.is_central() {
        (label.two_s, label.two_s as u32)
    } else {
        (label.two_s, label.two_s.unsigned_abs() + 2)
    }
}

fn samples(rng: &mut ChaCha8Rng, slots: usize) -> Vec<Vec<Su2>> {
    (0..SAMPLES).map(|_| (0..slots).map(|_| Su2::random(rng)).collect()).collect()
}

fn qybe(_: &RunConfig, rng: &mut ChaCha8Rng) -> Result<f64> {
    let mut worst = 0.0_f64;
    for _ in 0..TRIPLES {
        let labels = [random_label(rng), random_label(rng), random_label(rng)];
        let phi = WignerTensor::random(labels.iter().map(space).collect(), rng)?.as_state();
        worst = worst.max(qybe_residual(labels, &phi, &samples(rng, 3)));
    }
    Ok(worst)
}

/// The image of `R` stays in `H_{s₁} ⊗ H_{s₂}`.
fn r_equivariance(_: &RunConfig, rng: &mut ChaCha8Rng) -> Result<f64> {
    let mut worst = 0.0_f64;
    for _ in 0..TRIPLES {
        let labels = (random_label(rng), random_label(rng));
        let phi = WignerTensor::random(vec![space(&labels.0), space(&labels.1)], rng)?.as_state();
        let image = r_element_apply(labels, &phi);
        for xs in samples(rng, 2) {
            let om = rng.gen_range(0.0..4.0 * PI);
            let h = Su2::about_axis3(om);
            let base = image.evaluate(&xs);
            let e1 = image.evaluate(&[xs[0].mul(&h), xs[1]]) - u1_character(labels.0.two_s, om).inv() * base;
            let e2 = image.evaluate(&[xs[0], xs[1].mul(&h)]) - u1_character(labels.1.two_s, om).inv() * base;
            worst = worst.max(e1.norm()).max(e2.norm());
        }
    }
    Ok(worst)
}

/// `R⁻¹` acts with `h_μ⁻¹` in place of `h_μ`.
fn r_inverse(_: &RunConfig, rng: &mut ChaCha8Rng) -> Result<f64> {
    let mut worst = 0.0_f64;
    for _ in 0..TRIPLES {
        let labels = (random_label(rng), random_label(rng));
        let phi = WignerTensor::random(vec![space(&labels.0), space(&labels.1)], rng)?.as_state();
        let back = r_apply_slots(-labels.0.mu, 0, 1, &r_element_apply(labels, &phi));
        worst = worst.max(back.max_difference(&phi, &samples(rng, 2)));
    }
    Ok(worst)
}
