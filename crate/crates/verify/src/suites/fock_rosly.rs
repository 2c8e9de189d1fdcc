//! The Poisson bracket on ISO(3)~ near the identity.

use std::f64::consts::PI;

use iso3_quant::fock_rosly::{
    fr_bracket_coord, fr_bracket_vf, jacobi_residual, kk_bracket, BracketKind, FiniteDifference, Observable,
    PhasePoint, Polynomial,
};
use iso3_quant::group::su2::random_unit_vector;
use iso3_quant::group::CoadjointPoint;
use iso3_quant::linalg::{self, levi_civita};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{max_of, Check};
use crate::config::RunConfig;

pub const CHECKS: &[Check] = &[
    Check::new("casimirs", 1e-8, casimirs),
    Check::new("coordinate_brackets", 0.0, coordinate_brackets),
    Check::new("fd_gradient", 1e-6, fd_gradient),
    Check::new("jacobi", 1e-8, jacobi),
    Check::new("kk_equivalence", 1e-10, kk_equivalence),
    Check::new("vf_equivalence", 1e-8, vf_equivalence),
];

/// `|p| ∈ (0.1, 2π − 0.1)`, `j` in a box.
fn generic_point(rng: &mut ChaCha8Rng) -> PhasePoint {
    let n = random_unit_vector(rng);
    let r = rng.gen_range(0.1..2.0 * PI - 0.1);
    let j = std::array::from_fn(|_| rng.gen_range(-2.0..2.0));
    CoadjointPoint::new(linalg::scale(r, &n), j)
}

fn dot_poly(x: impl Fn(usize) -> Polynomial, y: impl Fn(usize) -> Polynomial) -> Polynomial {
    (0..3).fold(Polynomial::zero(), |acc, a| acc.add(&x(a).mul(&y(a))))
}

/// `p·p` and `p·j` commute with 20 random observables.
fn casimirs(_: &RunConfig, rng: &mut ChaCha8Rng) -> iso3_quant::Result<f64> {
    let pp = dot_poly(Polynomial::p, Polynomial::p);
    let pj = dot_poly(Polynomial::p, Polynomial::j);
    let mut worst = 0.0_f64;
    for _ in 0..20 {
        let f = Polynomial::random(3, rng);
        let z = generic_point(rng);
        worst = worst.max(fr_bracket_coord(&pp, &f, &z).abs());
        worst = worst.max(fr_bracket_coord(&pj, &f, &z).abs());
    }
    Ok(worst)
}

/// `{j_a, j_b} = ε_abc j_c`, `{j_a, p_b} = ε_abc p_c`, `{p_a, p_b} = 0`.
fn coordinate_brackets(_: &RunConfig, rng: &mut ChaCha8Rng) -> iso3_quant::Result<f64> {
    let mut worst = 0.0_f64;
    for _ in 0..10 {
        let z = generic_point(rng);
        for a in 0..3 {
            for b in 0..3 {
                let eps = |v: &[f64; 3]| (0..3).map(|c| levi_civita(a, b, c) * v[c]).sum::<f64>();
                let jj = fr_bracket_coord(&Polynomial::j(a), &Polynomial::j(b), &z) - eps(&z.j);
                let jp = fr_bracket_coord(&Polynomial::j(a), &Polynomial::p(b), &z) - eps(&z.p);
                let pj = fr_bracket_coord(&Polynomial::p(a), &Polynomial::j(b), &z) - eps(&z.p);
                let pp = fr_bracket_coord(&Polynomial::p(a), &Polynomial::p(b), &z);
                worst = worst.max(max_of([jj.abs(), jp.abs(), pj.abs(), pp.abs()]));
            }
        }
    }
    Ok(worst)
}

/// Brackets of finite-difference observables against analytic gradients.
fn fd_gradient(_: &RunConfig, rng: &mut ChaCha8Rng) -> iso3_quant::Result<f64> {
    let mut worst = 0.0_f64;
    for _ in 0..20 {
        let (f, g) = (Polynomial::random(3, rng), Polynomial::random(3, rng));
        let z = generic_point(rng);
        let ff = FiniteDifference::new(|w: &PhasePoint| f.value(w));
        let fg = FiniteDifference::new(|w: &PhasePoint| g.value(w));
        let scale = 1.0 + fr_bracket_coord(&f, &g, &z).abs();
        worst = worst.max((fr_bracket_coord(&ff, &fg, &z) - fr_bracket_coord(&f, &g, &z)).abs() / scale);
    }
    Ok(worst)
}

fn jacobi(_: &RunConfig, rng: &mut ChaCha8Rng) -> iso3_quant::Result<f64> {
    let mut worst = 0.0_f64;
    for _ in 0..100 {
        let (f1, f2, f3) = (Polynomial::random(2, rng), Polynomial::random(2, rng), Polynomial::random(2, rng));
        let z = generic_point(rng);
        worst = worst.max(jacobi_residual(&f1, &f2, &f3, &z, BracketKind::Coordinate));
    }
    Ok(worst)
}

/// The coordinate form against the Lie-Poisson bracket of iso(3)*.
fn kk_equivalence(_: &RunConfig, rng: &mut ChaCha8Rng) -> iso3_quant::Result<f64> {
    let mut worst = 0.0_f64;
    for _ in 0..100 {
        let (f, g) = (Polynomial::random(3, rng), Polynomial::random(3, rng));
        let z = generic_point(rng);
        worst = worst.max((kk_bracket(&f, &g, &z) - fr_bracket_coord(&f, &g, &z)).abs());
    }
    Ok(worst)
}

/// The vector-field assembly against the coordinate form on 200 pairs.
fn vf_equivalence(_: &RunConfig, rng: &mut ChaCha8Rng) -> iso3_quant::Result<f64> {
    let mut worst = 0.0_f64;
    for _ in 0..200 {
        let (f, g) = (Polynomial::random(2, rng), Polynomial::random(2, rng));
        let z = generic_point(rng);
        worst = worst.max((fr_bracket_vf(&f, &g, &z)? - fr_bracket_coord(&f, &g, &z)).abs());
    }
    Ok(worst)
}
