//! Product quadrature for the normalised Haar measure on SU(2).

use gauss_quad::legendre::GaussLegendre;
use num_complex::Complex64;
use std::f64::consts::PI;
use std::num::NonZeroUsize;

use crate::group::Su2;
use crate::harmonic::wigner::DEFAULT_TWO_J_CAP;

/// Euler-angle product grid `(α, β, γ) ∈ [0,4π) × [0,π] × [0,2π)`.
///
/// Trapezoid in α and γ, Gauss-Legendre in `cos β`. With orders
/// `(2L+2, L+1, 2L+2)` the rule integrates every matrix coefficient of
/// spin ≤ L exactly, and hence every product `D^j · conj(D^{j'})` with `j + j' ≤ L`.
#[derive(Debug, Clone)]
pub struct GroupGrid {
    pub band_limit: usize,
    pub orders: (usize, usize, usize),
    nodes: Vec<(Su2, f64)>,
}

impl GroupGrid {
    /// Grid exact up to spin `band_limit`.
    pub fn new(band_limit: usize) -> Self {
        let n = 2 * band_limit + 2;
        Self::with_orders(band_limit, (n, band_limit + 1, n))
    }

    /// Grid sized for carrier spaces truncated at `two_j_max`: `L = two_j_max`.
    pub fn for_two_j_max(two_j_max: u32) -> Self {
        Self::new(two_j_max as usize)
    }

    pub fn with_orders(band_limit: usize, orders: (usize, usize, usize)) -> Self {
        let (na, nb, ng) = orders;
        let gl = GaussLegendre::new(NonZeroUsize::new(nb.max(1)).expect("nonzero order"));
        let cos_nodes = gl.into_node_weight_pairs();
        let mut nodes = Vec::with_capacity(na * nb * ng);
        let mut total = 0.0;
        for ia in 0..na {
            let alpha = 4.0 * PI * ia as f64 / na as f64;
            for &(x, w) in cos_nodes.iter() {
                let beta = x.clamp(-1.0, 1.0).acos();
                for ig in 0..ng {
                    let gamma = 2.0 * PI * ig as f64 / ng as f64;
                    nodes.push((Su2::from_euler(alpha, beta, gamma), w));
                    total += w;
                }
            }
        }
        for node in &mut nodes {
            node.1 /= total;
        }
        Self {
            band_limit,
            orders,
            nodes,
        }
    }

    pub fn nodes(&self) -> &[(Su2, f64)] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

impl Default for GroupGrid {
    fn default() -> Self {
        Self::new(DEFAULT_TWO_J_CAP as usize)
    }
}

/// Normalised Haar integral of `f` on `grid`.
pub fn haar_integrate<F: Fn(&Su2) -> Complex64>(f: F, grid: &GroupGrid) -> Complex64 {
    grid.nodes.iter().map(|(u, w)| f(u) * *w).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harmonic::wigner::{wigner_entry, WignerIndex};

    #[test]
    fn weights_normalised() {
        let grid = GroupGrid::new(4);
        assert_eq!(grid.len(), 10 * 5 * 10);
        let one = haar_integrate(|_| Complex64::new(1.0, 0.0), &grid);
        assert!((one.re - 1.0).abs() < 1e-14 && one.im == 0.0);
    }

    #[test]
    fn schur_orthogonality_small() {
        let grid = GroupGrid::new(4);
        let d100 = WignerIndex::new(2, 0, 0).unwrap();
        assert!(haar_integrate(|u| wigner_entry(d100, u), &grid).norm() < 1e-14);
        for idx in WignerIndex::all(3) {
            let v = haar_integrate(|u| Complex64::new(wigner_entry(idx, u).norm_sqr(), 0.0), &grid);
            assert!((v.re - 0.25).abs() < 1e-13, "{idx:?}");
        }
    }

    #[test]
    fn half_integer_coefficients_integrate_to_zero() {
        let grid = GroupGrid::new(2);
        for idx in WignerIndex::all(1) {
            assert!(haar_integrate(|u| wigner_entry(idx, u), &grid).norm() < 1e-15);
        }
    }
}
