//! Truncated carrier spaces `H_s` of functions on SU(2) with
//! `φ(x h_ω) = e^{isω} φ(x)`, `h_ω = exp(ωJ₃)`.
//!
//! The basis function for `(j, m)` is `φ_{jm}(x) = D^j_{sm}(x⁻¹)`, so the
//! U(1) character is `π_s(h_ω) = e^{−isω}` and `φ(x h_ω) = π_s(h_ω⁻¹) φ(x)`.

use nalgebra::DVector;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::Su2;
use crate::harmonic::quadrature::GroupGrid;
use crate::harmonic::wigner::{dimension, index_of, spin_matrices, two_m_at, wigner_matrix, CMatrix};

/// Residual above which a projection back into a truncated span is refused.
pub const PROJECTION_LIMIT: f64 = 1e-10;

/// A state given by a pointwise evaluation function on SU(2).
pub type FunctionState = Arc<dyn Fn(&Su2) -> Complex64 + Send + Sync>;

/// Element of `H_s` truncated at spin `j_max`; all spins are doubled.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CarrierState {
    pub two_s: i32,
    pub two_j_max: u32,
    /// Blocks `j = |s|, …, j_max`, each ordered `m = j, …, −j`.
    pub coeffs: Vec<Complex64>,
}

/// `U(1)` character `π_s(h_ω) = e^{−isω}`.
pub fn u1_character(two_s: i32, omega: f64) -> Complex64 {
    Complex64::from_polar(1.0, -omega * two_s as f64 / 2.0)
}

impl CarrierState {
    pub fn zeros(two_s: i32, two_j_max: u32) -> Result<Self> {
        let low = two_s.unsigned_abs();
        if two_j_max < low || (two_j_max - low) % 2 != 0 {
            return Err(Error::InvalidParameter(format!(
                "2j_max = {two_j_max} incompatible with 2s = {two_s}"
            )));
        }
        let len = (low..=two_j_max).step_by(2).map(|tj| dimension(tj)).sum();
        Ok(Self {
            two_s,
            two_j_max,
            coeffs: vec![Complex64::new(0.0, 0.0); len],
        })
    }

    pub fn from_coeffs(two_s: i32, two_j_max: u32, coeffs: Vec<Complex64>) -> Result<Self> {
        let mut st = Self::zeros(two_s, two_j_max)?;
        if coeffs.len() != st.coeffs.len() {
            return Err(Error::DimensionMismatch {
                expected: st.coeffs.len(),
                got: coeffs.len(),
            });
        }
        if coeffs.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::InvalidParameter("non-finite coefficient".into()));
        }
        st.coeffs = coeffs;
        Ok(st)
    }

    /// The basis state `φ_{jm}`.
    pub fn basis(two_s: i32, two_j_max: u32, two_j: u32, two_m: i32) -> Result<Self> {
        let mut st = Self::zeros(two_s, two_j_max)?;
        let pos = st
            .blocks()
            .find(|&(tj, _)| tj == two_j)
            .map(|(_, start)| start)
            .filter(|_| two_m.unsigned_abs() <= two_j && (two_j as i32 - two_m) % 2 == 0)
            .ok_or_else(|| Error::InvalidParameter(format!("no basis state 2j={two_j}, 2m={two_m}")))?;
        st.coeffs[pos + index_of(two_j, two_m)] = Complex64::new(1.0, 0.0);
        Ok(st)
    }

    /// Random state with unit coefficient norm.
    pub fn random<R: rand::Rng + ?Sized>(two_s: i32, two_j_max: u32, rng: &mut R) -> Result<Self> {
        let mut st = Self::zeros(two_s, two_j_max)?;
        for c in &mut st.coeffs {
            *c = Complex64::new(crate::group::su2::gaussian(rng), crate::group::su2::gaussian(rng));
        }
        let n = st.norm();
        st.coeffs.iter_mut().for_each(|c| *c /= n);
        Ok(st)
    }

    /// `(2j, offset)` of each spin block.
    pub fn blocks(&self) -> impl Iterator<Item = (u32, usize)> {
        let low = self.two_s.unsigned_abs();
        let mut offset = 0;
        (low..=self.two_j_max).step_by(2).map(move |tj| {
            let start = offset;
            offset += dimension(tj);
            (tj, start)
        })
    }

    /// The same function in a larger truncation.
    pub fn embed(&self, two_j_max: u32) -> Result<Self> {
        let mut out = Self::zeros(self.two_s, two_j_max)?;
        if two_j_max < self.two_j_max {
            return Err(Error::InvalidParameter("embedding must not lower j_max".into()));
        }
        out.coeffs[..self.coeffs.len()].copy_from_slice(&self.coeffs);
        Ok(out)
    }

    pub fn norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn scale(&self, k: Complex64) -> Self {
        let mut out = self.clone();
        out.coeffs.iter_mut().for_each(|c| *c *= k);
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if (self.two_s, self.two_j_max) != (other.two_s, other.two_j_max) {
            return Err(Error::DimensionMismatch {
                expected: self.coeffs.len(),
                got: other.coeffs.len(),
            });
        }
        let mut out = self.clone();
        out.coeffs.iter_mut().zip(&other.coeffs).for_each(|(a, b)| *a += b);
        Ok(out)
    }

    fn map_blocks<F: Fn(u32) -> CMatrix>(&self, op: F) -> Self {
        let mut out = self.clone();
        for (tj, start) in self.blocks() {
            let n = dimension(tj);
            let v = DVector::from_column_slice(&self.coeffs[start..start + n]);
            let w = op(tj) * v;
            out.coeffs[start..start + n].copy_from_slice(w.as_slice());
        }
        out
    }

    /// Value at `x`.
    pub fn evaluate(&self, x: &Su2) -> Complex64 {
        basis_values(self.two_s, self.two_j_max, x)
            .iter()
            .zip(&self.coeffs)
            .map(|(b, c)| b * c)
            .sum()
    }

    /// `φ ↦ φ(w⁻¹ ·)`: each block is multiplied by `D^j(w)`.
    pub fn left_translate(&self, w: &Su2) -> Self {
        self.map_blocks(|tj| wigner_matrix(tj, w))
    }

    /// `(𝒥_a φ)(x) = d/dt φ(e^{tJ_a} x)`: each block is multiplied by `i S_a`.
    pub fn angular_momentum_apply(&self, a: usize) -> Self {
        self.map_blocks(|tj| spin_matrices(tj)[a].clone() * Complex64::new(0.0, 1.0))
    }

    pub fn as_function(&self) -> FunctionState {
        let st = self.clone();
        Arc::new(move |x: &Su2| st.evaluate(x))
    }
}

pub fn evaluate_state(phi: &CarrierState, x: &Su2) -> Complex64 {
    phi.evaluate(x)
}

pub fn left_translate(phi: &CarrierState, w: &Su2) -> CarrierState {
    phi.left_translate(w)
}

/// `a ∈ {0, 1, 2}` selects `𝒥₁, 𝒥₂, 𝒥₃`.
pub fn angular_momentum_apply(a: usize, phi: &CarrierState) -> CarrierState {
    phi.angular_momentum_apply(a)
}

/// Orthogonal projection of `f` onto the truncated span, with the `L²`
/// norm of what was discarded.
#[derive(Debug, Clone)]
pub struct Projection {
    pub state: CarrierState,
    pub residual: f64,
}

/// Projects `f` onto `H_s` truncated at `two_j_max` using Schur
/// orthogonality on `grid`: `c_{jm} = (2j+1) ∫ f(x) conj(D^j_{sm}(x⁻¹)) dx`.
pub fn project<F: Fn(&Su2) -> Complex64>(
    f: F,
    two_s: i32,
    two_j_max: u32,
    grid: &GroupGrid,
) -> Result<Projection> {
    let mut st = CarrierState::zeros(two_s, two_j_max)?;
    let blocks: Vec<(u32, usize)> = st.blocks().collect();
    let mut samples = Vec::with_capacity(grid.len());
    for (x, w) in grid.nodes() {
        let fx = f(x);
        let basis = basis_values(two_s, two_j_max, x);
        for &(tj, start) in &blocks {
            let weight = (tj as f64 + 1.0) * w;
            for k in start..start + dimension(tj) {
                st.coeffs[k] += fx * basis[k].conj() * weight;
            }
        }
        samples.push((fx, basis, *w));
    }
    let residual = samples
        .iter()
        .map(|(fx, basis, w)| {
            let px: Complex64 = basis.iter().zip(&st.coeffs).map(|(b, c)| b * c).sum();
            w * (fx - px).norm_sqr()
        })
        .sum::<f64>()
        .sqrt();
    Ok(Projection { state: st, residual })
}

/// Values `φ_{jm}(x) = D^j_{sm}(x⁻¹)` of all basis functions, in coefficient order.
pub fn basis_values(two_s: i32, two_j_max: u32, x: &Su2) -> Vec<Complex64> {
    let xi = x.inverse();
    let low = two_s.unsigned_abs();
    let mut out = Vec::new();
    for tj in (low..=two_j_max).step_by(2) {
        let d = wigner_matrix(tj, &xi);
        let r = index_of(tj, two_s);
        out.extend((0..dimension(tj)).map(|k| d[(r, k)]));
    }
    out
}

/// Projects and fails with `TruncationLoss` if the residual exceeds `limit`.
pub fn project_exact<F: Fn(&Su2) -> Complex64>(
    f: F,
    two_s: i32,
    two_j_max: u32,
    grid: &GroupGrid,
    limit: f64,
) -> Result<CarrierState> {
    let p = project(f, two_s, two_j_max, grid)?;
    if p.residual > limit {
        return Err(Error::TruncationLoss {
            residual: p.residual,
            limit,
        });
    }
    Ok(p.state)
}

/// `max |f(x h_ω) − e^{isω} f(x)|` over the given sample pairs.
pub fn equivariance_defect<F: Fn(&Su2) -> Complex64>(f: F, two_s: i32, samples: &[(Su2, f64)]) -> f64 {
    samples
        .iter()
        .map(|(x, omega)| {
            let lhs = f(&x.mul(&Su2::about_axis3(*omega)));
            let rhs = u1_character(two_s, *omega).inv() * f(x);
            (lhs - rhs).norm()
        })
        .fold(0.0, f64::max)
}

/// Weight `m` of basis index `k` in block `two_j`, as a real number.
pub fn weight_at(two_j: u32, k: usize) -> f64 {
    two_m_at(two_j, k) as f64 / 2.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::levi_civita;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn sizes_and_validation() {
        assert!(CarrierState::zeros(1, 2).is_err());
        assert!(CarrierState::zeros(-3, 1).is_err());
        let st = CarrierState::zeros(-1, 5).unwrap();
        assert_eq!(st.coeffs.len(), 2 + 4 + 6);
        assert_eq!(st.blocks().collect::<Vec<_>>(), vec![(1, 0), (3, 2), (5, 6)]);
        assert!(CarrierState::basis(0, 4, 2, 1).is_err());
        assert!(CarrierState::from_coeffs(0, 0, vec![]).is_err());
    }

    #[test]
    fn basis_states_are_equivariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let samples: Vec<(Su2, f64)> = (0..10)
            .map(|_| (Su2::random(&mut rng), rng.gen_range(0.0..4.0 * std::f64::consts::PI)))
            .collect();
        for two_s in -3i32..=3 {
            let two_j_max = two_s.unsigned_abs() + 4;
            let st = CarrierState::zeros(two_s, two_j_max).unwrap();
            for (tj, _) in st.blocks() {
                for k in 0..dimension(tj) {
                    let b = CarrierState::basis(two_s, two_j_max, tj, two_m_at(tj, k)).unwrap();
                    assert!(equivariance_defect(|x| b.evaluate(x), two_s, &samples) < 1e-12);
                }
            }
        }
    }

    #[test]
    fn left_translation_is_a_representation() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let phi = CarrierState::random(1, 5, &mut rng).unwrap();
        assert!(phi.left_translate(&Su2::IDENTITY).max_abs_diff(&phi) < 1e-15);
        let (v, w) = (Su2::random(&mut rng), Su2::random(&mut rng));
        let seq = phi.left_translate(&w).left_translate(&v);
        assert!(seq.max_abs_diff(&phi.left_translate(&v.mul(&w))) < 1e-12);
        let x = Su2::random(&mut rng);
        let moved = phi.left_translate(&w).evaluate(&x);
        assert!((moved - phi.evaluate(&w.inverse().mul(&x))).norm() < 1e-12);
    }

    #[test]
    fn angular_momentum_matches_finite_differences() {
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        let phi = CarrierState::random(2, 4, &mut rng).unwrap();
        let h = 1e-4;
        for _ in 0..5 {
            let x = Su2::random(&mut rng);
            for a in 0..3 {
                let mut e = [0.0; 3];
                e[a] = h;
                let plus = phi.evaluate(&Su2::exp(&e).mul(&x));
                e[a] = -h;
                let minus = phi.evaluate(&Su2::exp(&e).mul(&x));
                let fd = (plus - minus) / (2.0 * h);
                let exact = phi.angular_momentum_apply(a).evaluate(&x);
                assert!((fd - exact).norm() < 1e-6);
            }
        }
    }

    #[test]
    fn angular_momentum_commutators() {
        let mut rng = ChaCha8Rng::seed_from_u64(44);
        let phi = CarrierState::random(-1, 5, &mut rng).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                let ab = phi.angular_momentum_apply(b).angular_momentum_apply(a);
                let ba = phi.angular_momentum_apply(a).angular_momentum_apply(b);
                let comm = ab.add(&ba.scale(Complex64::new(-1.0, 0.0))).unwrap();
                let mut want = CarrierState::zeros(-1, 5).unwrap();
                for c in 0..3 {
                    let e = levi_civita(a, b, c);
                    if e != 0.0 {
                        want = want.add(&phi.angular_momentum_apply(c).scale(Complex64::new(-e, 0.0))).unwrap();
                    }
                }
                assert!(comm.max_abs_diff(&want) < 1e-12);
            }
        }
    }

    #[test]
    fn projection_recovers_states() {
        let mut rng = ChaCha8Rng::seed_from_u64(45);
        let phi = CarrierState::random(1, 3, &mut rng).unwrap();
        let grid = GroupGrid::for_two_j_max(3);
        let p = project(|x| phi.evaluate(x), 1, 3, &grid).unwrap();
        assert!(p.state.max_abs_diff(&phi) < 1e-12);
        assert!(p.residual < 1e-7);
        // a higher spin component is reported, not silently dropped
        let wider = CarrierState::random(1, 5, &mut rng).unwrap();
        let grid = GroupGrid::for_two_j_max(5);
        let p = project(|x| wider.evaluate(x), 1, 3, &grid).unwrap();
        assert!(p.residual > 1e-3);
        assert!(matches!(
            project_exact(|x| wider.evaluate(x), 1, 3, &grid, PROJECTION_LIMIT),
            Err(Error::TruncationLoss { .. })
        ));
    }

    #[test]
    fn state_serialisation_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(46);
        let phi = CarrierState::random(0, 2, &mut rng).unwrap();
        let text = serde_json::to_string(&phi).unwrap();
        let back: CarrierState = serde_json::from_str(&text).unwrap();
        assert_eq!(back, phi);
    }
}
