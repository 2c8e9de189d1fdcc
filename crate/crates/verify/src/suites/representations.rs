//! Wigner matrices, the carrier spaces `H_s`, irreps of D(SU(2)) and of
//! ISO(3)~, and the κ-family of R-elements.

use std::f64::consts::PI;

use iso3_quant::double::rep::SlotSpace;
use iso3_quant::double::{
    double_rep_apply, double_rep_apply_fn, dsu2_multiply, generator_apply, plane_wave_apply, r_apply_slots,
    r_kappa_apply, DoubleIrrepLabel, EuclideanIrrepLabel, Generator, PurePointElement, TermFn, WignerTensor,
};
use iso3_quant::group::{Iso3, Kappa, Su2};
use iso3_quant::harmonic::{equivariance_defect, wigner_matrix, CMatrix, CarrierState, GroupGrid, WignerIndex};
use iso3_quant::lie::LieAlgebraData;
use iso3_quant::linalg::levi_civita;
use iso3_quant::Result;
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{max_of, Check};
use crate::config::RunConfig;

pub const CHECKS: &[Check] = &[
    Check::new("angular_momentum_commutators", 1e-12, angular_momentum_commutators),
    Check::new("angular_momentum_derivative", 1e-6, angular_momentum_derivative),
    Check::new("carrier_equivariance", 1e-12, carrier_equivariance),
    Check::new("double_rep_homomorphism", 1e-10, double_rep_homomorphism),
    Check::new("iso3_generator_commutators", 1e-10, iso3_generator_commutators),
    Check::new("left_translate_composition", 1e-12, left_translate_composition),
    Check::new("plane_wave_group_law", 1e-10, plane_wave_group_law),
    Check::new("r_kappa_class_rotation", 1e-12, r_kappa_class_rotation),
    Check::new("r_kappa_rescaling", 1e-14, r_kappa_rescaling),
    Check::new("schur_orthogonality", 1e-10, schur_orthogonality),
    Check::new("wigner_homomorphism", 1e-12, wigner_homomorphism),
    Check::new("wigner_unitarity", 1e-12, wigner_unitarity),
];

/// Spins up to 3 for the matrix identities.
const TWO_J_SMALL: u32 = 6;

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn pairs(rng: &mut ChaCha8Rng, n: usize) -> Vec<(Su2, Su2)> {
    (0..n).map(|_| (Su2::random(rng), Su2::random(rng))).collect()
}

/// Largest truncation at or below `cfg.two_j_max` compatible with `2s`.
fn truncation(cfg: &RunConfig, two_s: i32) -> u32 {
    let low = two_s.unsigned_abs();
    let top = cfg.two_j_max.max(low);
    top - (top - low) % 2
}

fn wigner_homomorphism(_: &RunConfig, rng: &mut ChaCha8Rng) -> Result<f64> {
    let mut worst = 0.0_f64;
    for (u, v) in pairs(rng, 30) {
        for tj in 0..=TWO_J_SMALL {
            let prod = wigner_matrix(tj, &u) * wigner_matrix(tj, &v);
            worst = worst.max((prod - wigner_matrix(tj, &u.mul(&v))).camax());
        }
    }
    Ok(worst)
}

fn wigner_unitarity(_: &RunConfig, rng: &mut ChaCha8Rng) -> Result<f64> {
    let mut worst = 0.0_f64;
    for _ in 0..30 {
        let u = Su2::random(rng);
        for tj in 0..=TWO_J_SMALL {
            let d = wigner_matrix(tj, &u);
            let n = tj as usize + 1;
            worst = worst.max((&d * d.adjoint() - CMatrix::identity(n, n)).camax());
        }
    }
    Ok(worst)
}

/// `∫ D^j_{mn} conj(D^{j'}_{m'n'}) = δ δ δ / (2j+1)` on the configured grid:
/// the full Gram matrix for spins up to 3, the equal-spin blocks up to
/// `j_max`, and random cross-spin entries beyond 3.
fn schur_orthogonality(cfg: &RunConfig, rng: &mut ChaCha8Rng) -> Result<f64> {
    let grid = GroupGrid::new(cfg.band_limit);
    let top = cfg.two_j_max;
    // column (m,n) of block j holds sqrt(w) D^j_{mn} at every node
    let blocks: Vec<CMatrix> = (0..=top)
        .map(|tj| {
            let d = tj as usize + 1;
            let mut m = CMatrix::zeros(grid.len(), d * d);
            for (row, (u, w)) in grid.nodes().iter().enumerate() {
                let dj = wigner_matrix(tj, u);
                let sw = w.sqrt();
                for a in 0..d {
                    for b in 0..d {
                        m[(row, a * d + b)] = dj[(a, b)] * sw;
                    }
                }
            }
            m
        })
        .collect();
    let gram_defect = |tj: u32, tk: u32| -> f64 {
        let g = blocks[tj as usize].adjoint() * &blocks[tk as usize];
        let want = if tj == tk { 1.0 / (tj as f64 + 1.0) } else { 0.0 };
        let mut worst = 0.0_f64;
        for i in 0..g.nrows() {
            for k in 0..g.ncols() {
                let e = if tj == tk && i == k { want } else { 0.0 };
                worst = worst.max((g[(i, k)] - e).norm());
            }
        }
        worst
    };
    let mut worst = 0.0_f64;
    for tj in 0..=top {
        for tk in tj..=top {
            if tj.max(tk) <= TWO_J_SMALL || tj == tk {
                worst = worst.max(gram_defect(tj, tk));
            }
        }
    }
    for _ in 0..20 {
        let (tj, tk) = (rng.gen_range(0..=top), rng.gen_range(0..=top));
        let i = rng.gen_range(0..blocks[tj as usize].ncols());
        let k = rng.gen_range(0..blocks[tk as usize].ncols());
        let v = blocks[tj as usize].column(i).dotc(&blocks[tk as usize].column(k));
        let want = if tj == tk && i == k { 1.0 / (tj as f64 + 1.0) } else { 0.0 };
        worst = worst.max((v - want).norm());
    }
    Ok(worst)
}

/// `φ(x h_ω) = e^{isω} φ(x)` for every basis state, `|2s| ≤ 3`.
fn carrier_equivariance(cfg: &RunConfig, rng: &mut ChaCha8Rng) -> Result<f64> {
    let pts: Vec<(Su2, f64)> = (0..20).map(|_| (Su2::random(rng), rng.gen_range(0.0..4.0 * PI))).collect();
    let mut worst = 0.0_f64;
    for two_s in -3..=3 {
        let tjm = truncation(cfg, two_s);
        for tj in (two_s.unsigned_abs()..=tjm).step_by(2) {
            for idx in WignerIndex::all(tj).filter(|i| i.two_m == i.two_n) {
                let phi = CarrierState::basis(two_s, tjm, tj, idx.two_m)?;
                worst = worst.max(equivariance_defect(|x| phi.evaluate(x), two_s, &pts));
            }
        }
    }
    Ok(worst)
}

/// `𝒥_a φ(x) = d/dt φ(e^{tJ_a} x)` against central differences.
fn angular_momentum_derivative(_: &RunConfig, rng: &mut ChaCha8Rng) -> Result<f64> {
    let h = 1e-4;
    let mut worst = 0.0_f64;
    for two_s in -2..=2 {
        let phi = CarrierState::random(two_s, two_s.unsigned_abs() + 4, rng)?;
        for _ in 0..5 {
            let x = Su2::random(rng);
            for a in 0..3 {
                let shifted = |t: f64| {
                    let mut e = [0.0; 3];
                    e[a] = t;
                    phi.evaluate(&Su2::exp(&e).mul(&x))
                };
                let (fp, fm) = (shifted(h), shifted(-h));
                let fd = (fp - fm) / (2.0 * h);
                worst = worst.max((phi.angular_momentum_apply(a).evaluate(&x) - fd).norm());
            }
        }
    }
    Ok(worst)
}

/// `[𝒥_a, 𝒥_b] = −ε_abc 𝒥_c` on coefficients.
fn angular_momentum_commutators(cfg: &RunConfig, rng: &mut ChaCha8Rng) -> Result<f64> {
    let mut worst = 0.0_f64;
    for two_s in -3..=3 {
        let phi = CarrierState::random(two_s, truncation(cfg, two_s), rng)?;
        for a in 0..3 {
            for b in 0..3 {
                let ab = phi.angular_momentum_apply(b).angular_momentum_apply(a);
                let ba = phi.angular_momentum_apply(a).angular_momentum_apply(b);
                let mut want = phi.scale(c(0.0));
                for k in 0..3 {
                    want = want.add(&phi.angular_momentum_apply(k).scale(c(-levi_civita(a, b, k))))?;
                }
                worst = worst.max(ab.add(&ba.scale(c(-1.0)))?.max_abs_diff(&want));
            }
        }
    }
    Ok(worst)
}

/// `L(w₁)L(w₂) = L(w₁w₂)` on coefficients and `L(w)φ = φ(w⁻¹ ·)` pointwise.
fn left_translate_composition(cfg: &RunConfig, rng: &mut ChaCha8Rng) -> Result<f64> {
    let mut worst = 0.0_f64;
    for two_s in -3..=3 {
        let phi = CarrierState::random(two_s, truncation(cfg, two_s), rng)?;
        for (w1, w2) in pairs(rng, 3) {
            let seq = phi.left_translate(&w2).left_translate(&w1);
            worst = worst.max(seq.max_abs_diff(&phi.left_translate(&w1.mul(&w2))));
            let x = Su2::random(rng);
            let moved = phi.left_translate(&w1).evaluate(&x);
            worst = worst.max((moved - phi.evaluate(&w1.inverse().mul(&x))).norm());
        }
    }
    Ok(worst)
}

fn random_element(rng: &mut ChaCha8Rng, constant: bool) -> PurePointElement<Su2> {
    let terms = (0..2)
        .map(|_| {
            let k = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            let f = if constant {
                TermFn::Constant(k)
            } else {
                let a = Su2::random(rng);
                TermFn::function(move |h: &Su2| k * (h.q[0] + a.mul(h).q[3]))
            };
            (f, Su2::random(rng))
        })
        .collect();
    PurePointElement::new(terms)
}

/// `Π(F₁•F₂) = Π(F₁)Π(F₂)` pointwise for generic elements, and on
/// coefficients for constant ones and for spin labels.
fn double_rep_homomorphism(_: &RunConfig, rng: &mut ChaCha8Rng) -> Result<f64> {
    let mut worst = 0.0_f64;
    let grid = GroupGrid::new(4);
    for _ in 0..10 {
        let label = DoubleIrrepLabel::new(rng.gen_range(0.1..2.0 * PI - 0.1), rng.gen_range(-3..=3))?;
        let phi = CarrierState::random(label.two_s, label.two_s.unsigned_abs() + 2, rng)?;
        let (f1, f2) = (random_element(rng, false), random_element(rng, false));
        let lhs = double_rep_apply_fn(label, &dsu2_multiply(&f1, &f2), phi.as_function());
        let rhs = double_rep_apply_fn(label, &f1, double_rep_apply_fn(label, &f2, phi.as_function()));
        for _ in 0..10 {
            let x = Su2::random(rng);
            worst = worst.max((lhs(&x) - rhs(&x)).norm());
        }
        let (g1, g2) = (random_element(rng, true), random_element(rng, true));
        let lhs = double_rep_apply(label, &dsu2_multiply(&g1, &g2), &phi, &grid)?;
        let rhs = double_rep_apply(label, &g1, &double_rep_apply(label, &g2, &phi, &grid)?, &grid)?;
        worst = worst.max(lhs.max_abs_diff(&rhs));
    }
    for tj in 0..=4 {
        let label = DoubleIrrepLabel::spin(tj);
        let phi = CarrierState::random(tj as i32, tj, rng)?;
        let (f1, f2) = (random_element(rng, false), random_element(rng, false));
        let lhs = double_rep_apply(label, &dsu2_multiply(&f1, &f2), &phi, &grid)?;
        let rhs = double_rep_apply(label, &f1, &double_rep_apply(label, &f2, &phi, &grid)?, &grid)?;
        worst = worst.max(lhs.max_abs_diff(&rhs));
    }
    Ok(worst)
}

/// Plane waves compose as the group: `Π(g₁)Π(g₂) = Π(g₁g₂)`.
fn plane_wave_group_law(_: &RunConfig, rng: &mut ChaCha8Rng) -> Result<f64> {
    let mut worst = 0.0_f64;
    for _ in 0..10 {
        let label = EuclideanIrrepLabel::new(rng.gen_range(0.1..3.0), rng.gen_range(-3..=3))?;
        let phi = CarrierState::random(label.two_s, label.two_s.unsigned_abs() + 2, rng)?;
        let (g1, g2) = (Iso3::random(rng, 1.0), Iso3::random(rng, 1.0));
        let seq = plane_wave_apply(&g1, label, plane_wave_apply(&g2, label, phi.as_function()));
        let prod = plane_wave_apply(&g1.mul(&g2), label, phi.as_function());
        for _ in 0..10 {
            let x = Su2::random(rng);
            worst = worst.max((seq(&x) - prod(&x)).norm());
        }
    }
    Ok(worst)
}

/// The generators `P_a ↦ i k_a`, `J_a ↦ −𝒥_a` satisfy the iso(3) relations.
fn iso3_generator_commutators(_: &RunConfig, rng: &mut ChaCha8Rng) -> Result<f64> {
    let alg = LieAlgebraData::iso3();
    let mut worst = 0.0_f64;
    for &(mass, two_s) in &[(0.8, 1), (1.7, 0)] {
        let label = EuclideanIrrepLabel::new(mass, two_s)?;
        let start = two_s.unsigned_abs();
        let phi = CarrierState::random(two_s, start, rng)?;
        let top = start + 4;
        let apply = |g: Generator, s: &CarrierState| -> Result<CarrierState> { generator_apply(g, label, s)?.embed(top) };
        let single: Vec<CarrierState> =
            (0..6).map(|z| apply(Generator::from_index(z), &phi)).collect::<Result<_>>()?;
        for x in 0..6 {
            for y in 0..6 {
                let (gx, gy) = (Generator::from_index(x), Generator::from_index(y));
                let xy = apply(gx, &generator_apply(gy, label, &phi)?)?;
                let yx = apply(gy, &generator_apply(gx, label, &phi)?)?;
                let mut want = CarrierState::zeros(two_s, top)?;
                for (z, s) in single.iter().enumerate() {
                    let k = alg.c(x, y, z);
                    if k != 0.0 {
                        want = want.add(&s.scale(c(k)))?;
                    }
                }
                worst = worst.max(xy.add(&yx.scale(c(-1.0)))?.max_abs_diff(&want));
            }
        }
    }
    Ok(worst)
}

fn tensor_spaces(two_s: [i32; 2]) -> Vec<SlotSpace> {
    two_s.iter().map(|&s| (s, s.unsigned_abs() + 2)).collect()
}

/// `R_κ` for mass `M` is the D(SU(2)) R-element with class angle `κM`.
fn r_kappa_class_rotation(_: &RunConfig, rng: &mut ChaCha8Rng) -> Result<f64> {
    let mut worst = 0.0_f64;
    for _ in 0..10 {
        let spins = [rng.gen_range(-3..=3), rng.gen_range(-3..=3)];
        let phi = WignerTensor::random(tensor_spaces(spins), rng)?.as_state();
        let labels = (
            EuclideanIrrepLabel::new(rng.gen_range(0.1..4.0), spins[0])?,
            EuclideanIrrepLabel::new(rng.gen_range(0.1..4.0), spins[1])?,
        );
        let kappa = rng.gen_range(0.01..1.0);
        let rk = r_kappa_apply(labels, Kappa::new(kappa)?, &phi)?;
        let via = r_apply_slots(kappa * labels.0.mass, 0, 1, &phi);
        let s: Vec<Vec<Su2>> = pairs(rng, 10).into_iter().map(|(a, b)| vec![a, b]).collect();
        worst = worst.max(rk.max_difference(&via, &s));
    }
    Ok(worst)
}

/// `R_κ` depends on `κ` and `M₁` only through `κM₁`.
fn r_kappa_rescaling(_: &RunConfig, rng: &mut ChaCha8Rng) -> Result<f64> {
    let mut worst = 0.0_f64;
    for _ in 0..5 {
        let spins = [rng.gen_range(-3..=3), rng.gen_range(-3..=3)];
        let phi = WignerTensor::random(tensor_spaces(spins), rng)?.as_state();
        let (m, kappa) = (rng.gen_range(0.1..4.0), rng.gen_range(0.01..1.0));
        let l2 = EuclideanIrrepLabel::new(1.0, spins[1])?;
        let base = r_kappa_apply((EuclideanIrrepLabel::new(m, spins[0])?, l2), Kappa::new(kappa)?, &phi)?;
        let s: Vec<Vec<Su2>> = pairs(rng, 10).into_iter().map(|(a, b)| vec![a, b]).collect();
        for scale in [2.0, 8.0, 0.25] {
            let l1 = EuclideanIrrepLabel::new(m * scale, spins[0])?;
            let scaled = r_kappa_apply((l1, l2), Kappa::new(kappa / scale)?, &phi)?;
            worst = max_of([worst, base.max_difference(&scaled, &s)]);
        }
    }
    Ok(worst)
}
