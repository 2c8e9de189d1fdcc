//! Irreps of ISO(3)~ on the carrier spaces `H_s`, the generators, the
//! classical r-matrix action, the coproducts of `A₀` and `A_κ`, and the
//! pulled-back R-element `R_κ`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::sync::Arc;

use crate::double::element::{comultiply_slot, MultiSlotElement, PurePointElement, TermFn};
use crate::double::rep::{TensorState, WignerTensor};
use crate::error::{Error, Result};
use crate::group::{exp_kappa, momentum_add_exact, Iso3, Kappa, Momentum, Su2};
use crate::harmonic::{project_exact, CarrierState, FunctionState, GroupGrid, PROJECTION_LIMIT};
use crate::linalg::{self, Vec3};

/// Label `(M, s)`: mass shell radius `M ≥ 0` (inverse length) and helicity `s`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EuclideanIrrepLabel {
    pub mass: f64,
    pub two_s: i32,
}

impl EuclideanIrrepLabel {
    pub fn new(mass: f64, two_s: i32) -> Result<Self> {
        if !(mass >= 0.0 && mass.is_finite()) {
            return Err(Error::InvalidParameter(format!("mass {mass} must be finite and ≥ 0")));
        }
        if mass == 0.0 && two_s < 0 {
            return Err(Error::InvalidParameter("M = 0 needs a spin j ≥ 0".into()));
        }
        Ok(Self { mass, two_s })
    }

    /// `k(x, M) = Ad(x) (0, 0, M)`.
    pub fn momentum(&self, x: &Su2) -> Momentum {
        x.rotate(&[0.0, 0.0, self.mass])
    }
}

/// `(Π(f)φ)(x) = Σᵢ fᵢ(k(x, M)) φ(wᵢ⁻¹x)` pointwise.
pub fn euclidean_rep_apply(
    label: EuclideanIrrepLabel,
    f: &PurePointElement<Momentum>,
    phi: FunctionState,
) -> FunctionState {
    let terms = f.terms.clone();
    Arc::new(move |x: &Su2| {
        let k = label.momentum(x);
        terms
            .iter()
            .map(|(g, w)| g.eval(&k) * phi(&w.inverse().mul(x)))
            .sum()
    })
}

/// The `A₀` element `k ↦ e^{i a·k}` at `u`.
pub fn plane_wave(g: &Iso3) -> PurePointElement<Momentum> {
    let a = g.a;
    PurePointElement::new(vec![(
        TermFn::function(move |k: &Momentum| Complex64::from_polar(1.0, linalg::dot(&a, k))),
        g.u,
    )])
}

/// `(Π((a, u))φ)(x) = e^{i a·k(x, M)} φ(u⁻¹x)`.
pub fn plane_wave_apply(g: &Iso3, label: EuclideanIrrepLabel, phi: FunctionState) -> FunctionState {
    let g = *g;
    Arc::new(move |x: &Su2| {
        Complex64::from_polar(1.0, linalg::dot(&g.a, &label.momentum(x))) * phi(&g.u.inverse().mul(x))
    })
}

/// iso(3) basis element `P_a` or `J_a`, `a ∈ {0, 1, 2}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    P(usize),
    J(usize),
}

impl Generator {
    /// Position in the basis `(P₁, P₂, P₃, J₁, J₂, J₃)`.
    pub fn index(&self) -> usize {
        match self {
            Generator::P(a) => *a,
            Generator::J(a) => 3 + a,
        }
    }

    pub fn from_index(i: usize) -> Self {
        if i < 3 {
            Generator::P(i)
        } else {
            Generator::J(i - 3)
        }
    }
}

/// `P_a ↦ i k_a(x, M)` and `J_a ↦ −𝒥_a`.
///
/// Multiplication by `k_a` raises the spin by one, so `P_a` returns a state
/// truncated at `j_max + 1`; the product is recovered by projection on a
/// grid that resolves it, and a nonzero residual is reported as an error.
pub fn generator_apply(x: Generator, label: EuclideanIrrepLabel, phi: &CarrierState) -> Result<CarrierState> {
    match x {
        Generator::J(a) => Ok(phi.angular_momentum_apply(a).scale(Complex64::new(-1.0, 0.0))),
        Generator::P(a) => {
            let two_j_max = phi.two_j_max + 2;
            let grid = GroupGrid::for_two_j_max(two_j_max);
            let f = phi.as_function();
            project_exact(
                move |x| Complex64::new(0.0, label.momentum(x)[a]) * f(x),
                phi.two_s,
                two_j_max,
                &grid,
                PROJECTION_LIMIT,
            )
        }
    }
}

/// `(rΦ)(x₁, x₂) = −i k_a(x₁, M₁) (𝒥_a^{(2)} Φ)(x₁, x₂)`.
pub fn classical_r_apply(labels: (EuclideanIrrepLabel, EuclideanIrrepLabel), phi: &WignerTensor) -> TensorState {
    let label = labels.0;
    if label.mass == 0.0 {
        return TensorState::function(2, |_| Complex64::new(0.0, 0.0));
    }
    let derivs: Vec<WignerTensor> = (0..3).map(|a| phi.apply_slot(1, |s| s.angular_momentum_apply(a))).collect();
    TensorState::function(2, move |xs: &[Su2]| {
        let k = label.momentum(&xs[0]);
        let s: Complex64 = (0..3).map(|a| derivs[a].evaluate(xs) * k[a]).sum();
        Complex64::new(0.0, -1.0) * s
    })
}

/// `Δ₀f(k₁, u₁, k₂, u₂) = f(k₁ + k₂, u₁) δ_{u₁}(u₂)`.
pub fn a0_coproduct(f: &PurePointElement<Momentum>) -> MultiSlotElement<Momentum> {
    comultiply_slot(&f.to_multi(), 0, &|a: &Vec3, b: &Vec3| Ok(linalg::add(a, b)))
}

/// `Δ_κf(k₁, u₁, k₂, u₂) = f(k₁ ∗_κ k₂, u₁) δ_{u₁}(u₂)`; evaluating outside the
/// injectivity domain of `log_κ` reports `LogUndefined`.
pub fn coproduct_kappa(f: &PurePointElement<Momentum>, kappa: Kappa) -> MultiSlotElement<Momentum> {
    comultiply_slot(&f.to_multi(), 0, &move |a: &Vec3, b: &Vec3| momentum_add_exact(a, b, kappa))
}

/// `(R_κΦ)(x₁, x₂) = Φ(x₁, exp_κ(k(x₁, M₁)) x₂)`; requires `κM₁ < 2π`.
pub fn r_kappa_apply(
    labels: (EuclideanIrrepLabel, EuclideanIrrepLabel),
    kappa: Kappa,
    phi: &TensorState,
) -> Result<TensorState> {
    let label = labels.0;
    let product = kappa.value() * label.mass;
    if product >= 2.0 * PI {
        return Err(Error::KappaDomain { product });
    }
    if label.mass == 0.0 {
        return Ok(phi.clone());
    }
    let phi = phi.clone();
    Ok(TensorState::function(2, move |xs: &[Su2]| {
        let u = exp_kappa(&label.momentum(&xs[0]), kappa);
        phi.evaluate(&[xs[0], u.mul(&xs[1])])
    }))
}

/// `max |R_κΦ − Φ − iκ rΦ|` over the sample pairs.
pub fn r_limit_residual(
    labels: (EuclideanIrrepLabel, EuclideanIrrepLabel),
    kappa: Kappa,
    phi: &WignerTensor,
    samples: &[(Su2, Su2)],
) -> Result<f64> {
    let state = phi.as_state();
    let rk = r_kappa_apply(labels, kappa, &state)?;
    let r = classical_r_apply(labels, phi);
    let ik = Complex64::new(0.0, kappa.value());
    Ok(samples
        .iter()
        .map(|(x1, x2)| {
            let xs = [*x1, *x2];
            (rk.evaluate(&xs) - state.evaluate(&xs) - ik * r.evaluate(&xs)).norm()
        })
        .fold(0.0, f64::max))
}
