//! The iso(3) Lie bialgebra with `r = P_a ⊗ J_a`.

use iso3_quant::lie::{iso3_r_matrix, AlgebraElement, CoboundaryBialgebra, LieAlgebraData, Tensor2};
use iso3_quant::linalg::{cross, levi_civita};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{max_of, Check};
use crate::config::RunConfig;

pub const CHECKS: &[Check] = &[
    Check::new("cocommutator_basis", 1e-15, cocommutator_basis),
    Check::new("cocycle", 1e-12, cocycle),
    Check::new("cybe", 1e-14, cybe),
    Check::new("dual_bracket", 1e-15, dual_bracket),
    Check::new("invariance", 1e-12, invariance),
    Check::new("jacobi", 1e-14, jacobi),
    Check::new("symmetric_part", 1e-15, symmetric_part),
];

fn random_element(rng: &mut ChaCha8Rng) -> AlgebraElement {
    AlgebraElement::new((0..6).map(|_| rng.gen_range(-1.0..1.0)).collect())
}

/// `δ(P_a) = ε_abc P_b ⊗ P_c`, `δ(J_a) = 0`.
fn cocommutator_basis(_: &RunConfig, _: &mut ChaCha8Rng) -> iso3_quant::Result<f64> {
    let b = CoboundaryBialgebra::iso3();
    let mut worst = 0.0_f64;
    for x in 0..6 {
        let d = b.cocommutator(&b.algebra.basis(x))?;
        let want = Tensor2::from_fn(6, |i, j| if x < 3 && i < 3 && j < 3 { levi_civita(x, i, j) } else { 0.0 });
        worst = worst.max(d.sub(&want).max_abs());
    }
    Ok(worst)
}

fn cocycle(_: &RunConfig, rng: &mut ChaCha8Rng) -> iso3_quant::Result<f64> {
    let b = CoboundaryBialgebra::iso3();
    let mut worst = 0.0_f64;
    for _ in 0..100 {
        let (x, y) = (random_element(rng), random_element(rng));
        worst = worst.max(b.cocycle_defect(&x, &y)?.max_abs());
    }
    Ok(worst)
}

fn cybe(_: &RunConfig, _: &mut ChaCha8Rng) -> iso3_quant::Result<f64> {
    Ok(LieAlgebraData::iso3().cybe_defect(&iso3_r_matrix())?.max_abs())
}

/// With `𝔤*` identified with `𝔤` by the pairing, the dual bracket is the
/// cross product of the `J` parts landing in the `J` slot.
fn dual_bracket(_: &RunConfig, rng: &mut ChaCha8Rng) -> iso3_quant::Result<f64> {
    let b = CoboundaryBialgebra::iso3();
    let mut pairs: Vec<(AlgebraElement, AlgebraElement)> = vec![];
    for x in 0..6 {
        for y in 0..6 {
            pairs.push((b.algebra.basis(x), b.algebra.basis(y)));
        }
    }
    for _ in 0..20 {
        pairs.push((random_element(rng), random_element(rng)));
    }
    let mut worst = 0.0_f64;
    for (x, y) in &pairs {
        let got = b.dual_bracket(x, y)?;
        let j = |e: &AlgebraElement| [e.coeffs[3], e.coeffs[4], e.coeffs[5]];
        let c = cross(&j(x), &j(y));
        let want = AlgebraElement::new(vec![0.0, 0.0, 0.0, c[0], c[1], c[2]]);
        worst = worst.max(got.add(&want.scale(-1.0)).max_abs());
    }
    Ok(worst)
}

/// Ad-invariance of the symmetric part of `r` and of the pairing element.
fn invariance(_: &RunConfig, _: &mut ChaCha8Rng) -> iso3_quant::Result<f64> {
    let alg = LieAlgebraData::iso3();
    Ok(max_of([
        alg.invariance_defect(&iso3_r_matrix().symmetric_part())?,
        alg.invariance_defect(&alg.pairing_tensor())?,
    ]))
}

fn jacobi(_: &RunConfig, _: &mut ChaCha8Rng) -> iso3_quant::Result<f64> {
    Ok(LieAlgebraData::iso3().jacobi_residual())
}

/// `r^s = ½(P_a ⊗ J_a + J_a ⊗ P_a)`, entrywise against the pairing element.
fn symmetric_part(_: &RunConfig, _: &mut ChaCha8Rng) -> iso3_quant::Result<f64> {
    let alg = LieAlgebraData::iso3();
    let rs = iso3_r_matrix().symmetric_part();
    let explicit = Tensor2::from_fn(6, |a, b| if a + 3 == b || b + 3 == a { 0.5 } else { 0.0 });
    Ok(max_of([rs.sub(&alg.pairing_tensor()).max_abs(), rs.sub(&explicit).max_abs()]))
}
