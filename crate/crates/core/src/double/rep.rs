//! Irreducible representations of D(SU(2)) on carrier spaces and the action
//! of the universal R-element on tensor products.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::sync::Arc;

use crate::double::element::{PurePointElement, TermFn};
use crate::error::{Error, Result};
use crate::group::Su2;
use crate::harmonic::carrier::basis_values;
use crate::harmonic::{project_exact, CarrierState, FunctionState, GroupGrid, PROJECTION_LIMIT};

/// Label `(μ, s)` of an irrep. For `μ ∈ (0, 2π)` the carrier space is `H_s`;
/// for the central classes `μ ∈ {0, 2π}` the label carries a spin `j = s ≥ 0`
/// and the carrier space is the span of `x ↦ D^j_{jm}(x⁻¹)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DoubleIrrepLabel {
    pub mu: f64,
    pub two_s: i32,
}

impl DoubleIrrepLabel {
    pub fn new(mu: f64, two_s: i32) -> Result<Self> {
        if !(0.0..=2.0 * PI).contains(&mu) {
            return Err(Error::InvalidParameter(format!("class angle {mu} outside [0, 2π]")));
        }
        let label = Self { mu, two_s };
        if label.is_central() && two_s < 0 {
            return Err(Error::InvalidParameter("central classes need a spin j ≥ 0".into()));
        }
        Ok(label)
    }

    /// The spin-j irrep `(0, j)`.
    pub fn spin(two_j: u32) -> Self {
        Self {
            mu: 0.0,
            two_s: two_j as i32,
        }
    }

    pub fn is_central(&self) -> bool {
        self.mu == 0.0 || self.mu == 2.0 * PI
    }

    /// `h_μ = exp(μJ₃)`.
    pub fn h(&self) -> Su2 {
        Su2::about_axis3(self.mu)
    }

    /// `x h_μ x⁻¹`.
    pub fn class_point(&self, x: &Su2) -> Su2 {
        x.mul(&self.h()).mul(&x.inverse())
    }

    /// Empty state in the carrier space truncated at `two_j_max`.
    pub fn carrier(&self, two_j_max: u32) -> Result<CarrierState> {
        if self.is_central() {
            CarrierState::zeros(self.two_s, self.two_s as u32)
        } else {
            CarrierState::zeros(self.two_s, two_j_max)
        }
    }
}

/// `(Π(F)φ)(x) = Σᵢ fᵢ(x h_μ x⁻¹) φ(wᵢ⁻¹x)` pointwise.
pub fn double_rep_apply_fn(label: DoubleIrrepLabel, f: &PurePointElement<Su2>, phi: FunctionState) -> FunctionState {
    let terms = f.terms.clone();
    Arc::new(move |x: &Su2| {
        let c = label.class_point(x);
        terms
            .iter()
            .map(|(g, w)| g.eval(&c) * phi(&w.inverse().mul(x)))
            .sum()
    })
}

/// Action on a truncated Wigner-basis state.
///
/// Constant coefficient functions (and every element in a central sector)
/// act exactly by block translations. Other elements are applied pointwise
/// and projected back on `grid`; a residual above `1e-10` is an error.
pub fn double_rep_apply(
    label: DoubleIrrepLabel,
    f: &PurePointElement<Su2>,
    phi: &CarrierState,
    grid: &GroupGrid,
) -> Result<CarrierState> {
    if phi.two_s != label.two_s {
        return Err(Error::InvalidParameter(format!(
            "state with 2s = {} in sector 2s = {}",
            phi.two_s, label.two_s
        )));
    }
    if f.is_constant() || label.is_central() {
        let h = label.h();
        let mut out = phi.scale(Complex64::new(0.0, 0.0));
        for (g, w) in &f.terms {
            let c = match g {
                TermFn::Constant(c) => *c,
                TermFn::Function(g) => g(&h),
            };
            out = out.add(&phi.left_translate(w).scale(c))?;
        }
        return Ok(out);
    }
    let image = double_rep_apply_fn(label, f, phi.as_function());
    project_exact(|x| image(x), phi.two_s, phi.two_j_max, grid, PROJECTION_LIMIT)
}

/// Slot layout `(2s, 2j_max)` of a Wigner tensor.
pub type SlotSpace = (i32, u32);

/// Element of `H_{s₁} ⊗ ⋯ ⊗ H_{s_n}` in the product Wigner basis.
///
/// Coefficients are stored row-major: the last slot varies fastest.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WignerTensor {
    pub spaces: Vec<SlotSpace>,
    pub coeffs: Vec<Complex64>,
}

impl WignerTensor {
    fn dims(spaces: &[SlotSpace]) -> Result<Vec<usize>> {
        spaces
            .iter()
            .map(|&(s, j)| CarrierState::zeros(s, j).map(|c| c.coeffs.len()))
            .collect()
    }

    pub fn zeros(spaces: Vec<SlotSpace>) -> Result<Self> {
        let n = Self::dims(&spaces)?.iter().product();
        Ok(Self {
            spaces,
            coeffs: vec![Complex64::new(0.0, 0.0); n],
        })
    }

    pub fn product(factors: &[CarrierState]) -> Self {
        let spaces = factors.iter().map(|f| (f.two_s, f.two_j_max)).collect();
        let mut coeffs = vec![Complex64::new(1.0, 0.0)];
        for f in factors {
            coeffs = coeffs.iter().flat_map(|a| f.coeffs.iter().map(move |b| a * b)).collect();
        }
        Self { spaces, coeffs }
    }

    /// Random tensor with unit coefficient norm.
    pub fn random<R: rand::Rng + ?Sized>(spaces: Vec<SlotSpace>, rng: &mut R) -> Result<Self> {
        let mut t = Self::zeros(spaces)?;
        let mut norm = 0.0;
        for c in &mut t.coeffs {
            *c = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            norm += c.norm_sqr();
        }
        let norm = norm.sqrt();
        t.coeffs.iter_mut().for_each(|c| *c /= norm);
        Ok(t)
    }

    pub fn slots(&self) -> usize {
        self.spaces.len()
    }

    pub fn norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Value at `(x₁, …, x_n)`.
    pub fn evaluate(&self, xs: &[Su2]) -> Complex64 {
        // contract one slot at a time against its basis values
        let mut current = self.coeffs.clone();
        let dims = Self::dims(&self.spaces).expect("validated spaces");
        for (k, (&(s, j), x)) in self.spaces.iter().zip(xs).enumerate() {
            let basis = basis_values(s, j, x);
            let rest: usize = dims[k + 1..].iter().product();
            current = (0..rest)
                .map(|r| (0..dims[k]).map(|a| basis[a] * current[a * rest + r]).sum())
                .collect();
        }
        current[0]
    }

    /// Applies a linear map of single-slot states in slot `slot`.
    pub fn apply_slot<F: Fn(&CarrierState) -> CarrierState>(&self, slot: usize, op: F) -> Self {
        let dims = Self::dims(&self.spaces).expect("validated spaces");
        let outer: usize = dims[..slot].iter().product();
        let inner: usize = dims[slot + 1..].iter().product();
        let (s, j) = self.spaces[slot];
        let mut out = self.clone();
        for o in 0..outer {
            for i in 0..inner {
                let idx = |a: usize| (o * dims[slot] + a) * inner + i;
                let v = (0..dims[slot]).map(|a| self.coeffs[idx(a)]).collect();
                let mapped = op(&CarrierState {
                    two_s: s,
                    two_j_max: j,
                    coeffs: v,
                });
                for a in 0..dims[slot] {
                    out.coeffs[idx(a)] = mapped.coeffs[a];
                }
            }
        }
        out
    }

    pub fn as_state(&self) -> TensorState {
        TensorState::Coefficients(self.clone())
    }
}

/// A state on `n` copies of SU(2), given by its coefficients or pointwise.
#[derive(Clone)]
pub enum TensorState {
    Coefficients(WignerTensor),
    Function {
        slots: usize,
        f: Arc<dyn Fn(&[Su2]) -> Complex64 + Send + Sync>,
    },
}

impl std::fmt::Debug for TensorState {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TensorState::Coefficients(t) => f.debug_tuple("Coefficients").field(t).finish(),
            TensorState::Function { slots, .. } => write!(f, "Function {{ slots: {slots} }}"),
        }
    }
}

impl TensorState {
    pub fn function<F: Fn(&[Su2]) -> Complex64 + Send + Sync + 'static>(slots: usize, f: F) -> Self {
        TensorState::Function { slots, f: Arc::new(f) }
    }

    pub fn slots(&self) -> usize {
        match self {
            TensorState::Coefficients(t) => t.slots(),
            TensorState::Function { slots, .. } => *slots,
        }
    }

    pub fn evaluate(&self, xs: &[Su2]) -> Complex64 {
        match self {
            TensorState::Coefficients(t) => t.evaluate(xs),
            TensorState::Function { f, .. } => f(xs),
        }
    }

    fn shared(&self) -> Arc<dyn Fn(&[Su2]) -> Complex64 + Send + Sync> {
        match self {
            TensorState::Coefficients(t) => {
                let t = t.clone();
                Arc::new(move |xs: &[Su2]| t.evaluate(xs))
            }
            TensorState::Function { f, .. } => f.clone(),
        }
    }

    /// `max |Φ − Ψ|` over the samples.
    pub fn max_difference(&self, other: &TensorState, samples: &[Vec<Su2>]) -> f64 {
        samples
            .iter()
            .map(|xs| (self.evaluate(xs) - other.evaluate(xs)).norm())
            .fold(0.0, f64::max)
    }
}

/// R-element action in slots `(i, j)` with class angle `μ` in slot `i`:
/// `Φ(…, x_i, …, x_j, …) ↦ Φ(…, x_i, …, x_i h_μ x_i⁻¹ x_j, …)`.
pub fn r_apply_slots(mu: f64, i: usize, j: usize, phi: &TensorState) -> TensorState {
    if mu == 0.0 {
        return phi.clone();
    }
    let f = phi.shared();
    let h = Su2::about_axis3(mu);
    TensorState::function(phi.slots(), move |xs: &[Su2]| {
        let mut args = xs.to_vec();
        args[j] = xs[i].mul(&h).mul(&xs[i].inverse()).mul(&xs[j]);
        f(&args)
    })
}

/// `(RΦ)(x₁, x₂) = Φ(x₁, x₁ h_{μ₁} x₁⁻¹ x₂)`.
pub fn r_element_apply(labels: (DoubleIrrepLabel, DoubleIrrepLabel), phi: &TensorState) -> TensorState {
    r_apply_slots(labels.0.mu, 0, 1, phi)
}

/// `max |R₁₂R₁₃R₂₃Φ − R₂₃R₁₃R₁₂Φ|` over the samples.
pub fn qybe_residual(labels: [DoubleIrrepLabel; 3], phi: &TensorState, samples: &[Vec<Su2>]) -> f64 {
    let r = |i: usize, j: usize, s: &TensorState| r_apply_slots(labels[i].mu, i, j, s);
    let lhs = r(0, 1, &r(0, 2, &r(1, 2, phi)));
    let rhs = r(1, 2, &r(0, 2, &r(0, 1, phi)));
    lhs.max_difference(&rhs, samples)
}

/// The same three factors composed in the order `R₁₂R₂₃R₁₃` against `R₂₃R₁₃R₁₂`.
pub fn qybe_scrambled_residual(labels: [DoubleIrrepLabel; 3], phi: &TensorState, samples: &[Vec<Su2>]) -> f64 {
    let r = |i: usize, j: usize, s: &TensorState| r_apply_slots(labels[i].mu, i, j, s);
    let lhs = r(0, 1, &r(1, 2, &r(0, 2, phi)));
    let rhs = r(1, 2, &r(0, 2, &r(0, 1, phi)));
    lhs.max_difference(&rhs, samples)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::double::element::dsu2_multiply;
    use crate::harmonic::equivariance_defect;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_element<R: Rng>(rng: &mut R, constant: bool) -> PurePointElement<Su2> {
        let terms = (0..2)
            .map(|_| {
                let c = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                let f = if constant {
                    TermFn::Constant(c)
                } else {
                    let a = Su2::random(rng);
                    TermFn::function(move |h: &Su2| c * (h.q[0] + a.mul(h).q[3]))
                };
                (f, Su2::random(rng))
            })
            .collect();
        PurePointElement::new(terms)
    }

    fn samples<R: Rng>(rng: &mut R, slots: usize, n: usize) -> Vec<Vec<Su2>> {
        (0..n).map(|_| (0..slots).map(|_| Su2::random(rng)).collect()).collect()
    }

    #[test]
    fn labels() {
        assert!(DoubleIrrepLabel::new(-0.1, 0).is_err());
        assert!(DoubleIrrepLabel::new(0.0, -1).is_err());
        assert!(DoubleIrrepLabel::new(1.0, -3).is_ok());
        let spin = DoubleIrrepLabel::spin(2);
        assert!(spin.is_central());
        assert_eq!(spin.carrier(8).unwrap().coeffs.len(), 3);
        assert_eq!(DoubleIrrepLabel::new(1.0, 1).unwrap().carrier(3).unwrap().coeffs.len(), 6);
    }

    #[test]
    fn unit_acts_trivially() {
        let mut rng = ChaCha8Rng::seed_from_u64(61);
        let label = DoubleIrrepLabel::new(1.3, 1).unwrap();
        let phi = CarrierState::random(1, 3, &mut rng).unwrap();
        let out = double_rep_apply(label, &PurePointElement::unit(), &phi, &GroupGrid::new(6)).unwrap();
        assert!(out.max_abs_diff(&phi) < 1e-15);
    }

    #[test]
    fn representation_property_pointwise() {
        let mut rng = ChaCha8Rng::seed_from_u64(62);
        let label = DoubleIrrepLabel::new(2.1, -1).unwrap();
        let phi = CarrierState::random(-1, 3, &mut rng).unwrap();
        let (f1, f2) = (random_element(&mut rng, false), random_element(&mut rng, false));
        let lhs = double_rep_apply_fn(label, &dsu2_multiply(&f1, &f2), phi.as_function());
        let rhs = double_rep_apply_fn(label, &f1, double_rep_apply_fn(label, &f2, phi.as_function()));
        for _ in 0..20 {
            let x = Su2::random(&mut rng);
            assert!((lhs(&x) - rhs(&x)).norm() < 1e-10);
        }
        // the image stays in H_s
        let pts: Vec<(Su2, f64)> = (0..10).map(|_| (Su2::random(&mut rng), rng.gen_range(0.0..6.0))).collect();
        assert!(equivariance_defect(|x| lhs(x), -1, &pts) < 1e-12);
    }

    #[test]
    fn constant_elements_act_exactly() {
        let mut rng = ChaCha8Rng::seed_from_u64(63);
        let label = DoubleIrrepLabel::new(0.7, 2).unwrap();
        let phi = CarrierState::random(2, 4, &mut rng).unwrap();
        let f = random_element(&mut rng, true);
        let out = double_rep_apply(label, &f, &phi, &GroupGrid::new(8)).unwrap();
        let pointwise = double_rep_apply_fn(label, &f, phi.as_function());
        for _ in 0..10 {
            let x = Su2::random(&mut rng);
            assert!((out.evaluate(&x) - pointwise(&x)).norm() < 1e-12);
        }
    }

    #[test]
    fn spin_sector_is_the_group_algebra_action() {
        let mut rng = ChaCha8Rng::seed_from_u64(64);
        let label = DoubleIrrepLabel::spin(3);
        let phi = CarrierState::random(3, 3, &mut rng).unwrap();
        let f = random_element(&mut rng, false);
        let out = double_rep_apply(label, &f, &phi, &GroupGrid::new(6)).unwrap();
        let mut want = phi.scale(Complex64::new(0.0, 0.0));
        for (g, w) in &f.terms {
            want = want.add(&phi.left_translate(w).scale(g.eval(&Su2::IDENTITY))).unwrap();
        }
        assert!(out.max_abs_diff(&want) < 1e-15);
    }

    #[test]
    fn non_constant_elements_leave_the_truncated_span() {
        let mut rng = ChaCha8Rng::seed_from_u64(65);
        let label = DoubleIrrepLabel::new(1.0, 0).unwrap();
        let phi = CarrierState::basis(0, 0, 0, 0).unwrap();
        let f = random_element(&mut rng, false);
        let r = double_rep_apply(label, &f, &phi, &GroupGrid::new(6));
        assert!(matches!(r, Err(Error::TruncationLoss { .. })));
    }

    #[test]
    fn tensor_evaluation_and_slot_maps() {
        let mut rng = ChaCha8Rng::seed_from_u64(66);
        let a = CarrierState::random(1, 3, &mut rng).unwrap();
        let b = CarrierState::random(0, 2, &mut rng).unwrap();
        let t = WignerTensor::product(&[a.clone(), b.clone()]);
        let (x, y) = (Su2::random(&mut rng), Su2::random(&mut rng));
        assert!((t.evaluate(&[x, y]) - a.evaluate(&x) * b.evaluate(&y)).norm() < 1e-13);
        let w = Su2::random(&mut rng);
        let moved = t.apply_slot(1, |s| s.left_translate(&w));
        assert!((moved.evaluate(&[x, y]) - a.evaluate(&x) * b.evaluate(&w.inverse().mul(&y))).norm() < 1e-13);
        let text = serde_json::to_string(&t).unwrap();
        assert_eq!(serde_json::from_str::<WignerTensor>(&text).unwrap(), t);
    }

    #[test]
    fn r_element_identities() {
        let mut rng = ChaCha8Rng::seed_from_u64(67);
        let t = WignerTensor::random(vec![(1, 1), (0, 2)], &mut rng).unwrap().as_state();
        let s = samples(&mut rng, 2, 20);
        let l0 = DoubleIrrepLabel::spin(1);
        let l1 = DoubleIrrepLabel::new(1.2, 1).unwrap();
        let l2 = DoubleIrrepLabel::new(0.5, 0).unwrap();
        assert_eq!(r_element_apply((l0, l2), &t).max_difference(&t, &s), 0.0);
        let there = r_element_apply((l1, l2), &t);
        let back = r_apply_slots(-l1.mu, 0, 1, &there);
        assert!(back.max_difference(&t, &s) < 1e-12);
        assert!(there.max_difference(&t, &s) > 1e-3);
        // equivariance in both slots survives
        for (x1, x2) in s.iter().map(|v| (v[0], v[1])).take(5) {
            let om = rng.gen_range(0.0..6.0);
            let h = Su2::about_axis3(om);
            let base = there.evaluate(&[x1, x2]);
            let e1 = there.evaluate(&[x1.mul(&h), x2]) - crate::harmonic::u1_character(1, om).inv() * base;
            let e2 = there.evaluate(&[x1, x2.mul(&h)]) - crate::harmonic::u1_character(0, om).inv() * base;
            assert!(e1.norm() < 1e-12 && e2.norm() < 1e-12);
        }
    }

    #[test]
    fn quantum_yang_baxter() {
        let mut rng = ChaCha8Rng::seed_from_u64(68);
        let phi = WignerTensor::random(vec![(1, 1), (0, 2), (-1, 1)], &mut rng).unwrap().as_state();
        let s = samples(&mut rng, 3, 10);
        for _ in 0..5 {
            let labels = [
                DoubleIrrepLabel::new(rng.gen_range(0.1..6.0), 1).unwrap(),
                DoubleIrrepLabel::new(rng.gen_range(0.1..6.0), 0).unwrap(),
                DoubleIrrepLabel::new(rng.gen_range(0.1..6.0), -1).unwrap(),
            ];
            assert!(qybe_residual(labels, &phi, &s) < 1e-12);
            assert!(qybe_scrambled_residual(labels, &phi, &s) > 1e-6);
        }
        for k in 0..3 {
            let mut labels = [DoubleIrrepLabel::new(1.1, 1).unwrap(), DoubleIrrepLabel::new(2.3, 0).unwrap(), DoubleIrrepLabel::new(0.4, -1).unwrap()];
            labels[k] = DoubleIrrepLabel::spin(0);
            if k < 2 {
                assert_eq!(qybe_residual(labels, &phi, &s), 0.0);
            }
        }
    }
}
