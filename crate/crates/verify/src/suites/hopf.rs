//! Hopf algebra axioms of D(SU(2)) on pure-point elements.

use iso3_quant::double::{
    antipode_slot, comultiply_slot, counit_slot, dsu2_comultiply, dsu2_counit, dsu2_multiply, max_difference,
    multiply_slots, su2_compose, MultiSlotElement, PurePointElement, TermFn,
};
use iso3_quant::group::Su2;
use iso3_quant::Result;
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::Check;
use crate::config::RunConfig;

pub const CHECKS: &[Check] = &[
    Check::new("antipode_left", 1e-10, |c, r| antipode(c, r, 0)),
    Check::new("antipode_right", 1e-10, |c, r| antipode(c, r, 1)),
    Check::new("coassociativity", 1e-10, coassociativity),
    Check::new("counit_left", 1e-10, |c, r| counit(c, r, 0)),
    Check::new("counit_right", 1e-10, |c, r| counit(c, r, 1)),
    Check::new("unit_laws", 1e-10, unit_laws),
];

const ELEMENTS: usize = 5;
const SAMPLES: usize = 50;

/// Two terms, each a smooth function of `h` with a random weight in SU(2).
fn random_element(rng: &mut ChaCha8Rng) -> PurePointElement<Su2> {
    let terms = (0..2)
        .map(|_| {
            let a = Su2::random(rng);
            let c = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            let (k, phase) = (rng.gen_range(0.5..2.0), rng.gen_range(-1.0..1.0));
            let f = TermFn::function(move |h: &Su2| {
                c * Complex64::from_polar(1.0, k * a.mul(h).q[1] + phase) * (h.q[0] + a.mul(h).q[2])
            });
            (f, Su2::random(rng))
        })
        .collect();
    PurePointElement::new(terms)
}

fn samples(rng: &mut ChaCha8Rng, slots: usize) -> Vec<Vec<Su2>> {
    (0..SAMPLES).map(|_| (0..slots).map(|_| Su2::random(rng)).collect()).collect()
}

fn worst_over(rng: &mut ChaCha8Rng, mut check: impl FnMut(&mut ChaCha8Rng, &PurePointElement<Su2>) -> Result<f64>) -> Result<f64> {
    let mut worst = 0.0_f64;
    for _ in 0..ELEMENTS {
        let f = random_element(rng);
        worst = worst.max(check(rng, &f)?);
    }
    Ok(worst)
}

/// `(Δ ⊗ id)Δ = (id ⊗ Δ)Δ`.
fn coassociativity(_: &RunConfig, rng: &mut ChaCha8Rng) -> Result<f64> {
    worst_over(rng, |rng, f| {
        let delta = dsu2_comultiply(f);
        let left = comultiply_slot(&delta, 0, &su2_compose);
        let right = comultiply_slot(&delta, 1, &su2_compose);
        max_difference(&left, &right, &samples(rng, 3))
    })
}

/// `(ε ⊗ id)Δ = id` for slot 0, `(id ⊗ ε)Δ = id` for slot 1.
fn counit(_: &RunConfig, rng: &mut ChaCha8Rng, slot: usize) -> Result<f64> {
    worst_over(rng, |rng, f| {
        let back = counit_slot(&dsu2_comultiply(f), slot);
        max_difference(&back, &f.to_multi(), &samples(rng, 1))
    })
}

/// `m(S ⊗ id)Δ = ε·1` for slot 0, `m(id ⊗ S)Δ = ε·1` for slot 1.
fn antipode(_: &RunConfig, rng: &mut ChaCha8Rng, slot: usize) -> Result<f64> {
    worst_over(rng, |rng, f| {
        let eps = PurePointElement::<Su2>::unit().scale(dsu2_counit(f));
        let m = multiply_slots(&antipode_slot(&dsu2_comultiply(f), slot), 0);
        max_difference(&m, &eps.to_multi(), &samples(rng, 1))
    })
}

/// `1•F = F•1 = F`, `Δ1 = 1 ⊗ 1`, `ε(1) = 1`.
fn unit_laws(_: &RunConfig, rng: &mut ChaCha8Rng) -> Result<f64> {
    let one = PurePointElement::<Su2>::unit();
    let mut worst = (dsu2_counit(&one) - 1.0).norm();
    let tensor = MultiSlotElement::tensor(&[one.clone(), one.clone()]);
    worst = worst.max(max_difference(&dsu2_comultiply(&one), &tensor, &samples(rng, 2))?);
    let rest = worst_over(rng, |rng, f| {
        let s = samples(rng, 1);
        let l = max_difference(&dsu2_multiply(&one, f).to_multi(), &f.to_multi(), &s)?;
        let r = max_difference(&dsu2_multiply(f, &one).to_multi(), &f.to_multi(), &s)?;
        Ok(l.max(r))
    })?;
    Ok(worst.max(rest))
}
