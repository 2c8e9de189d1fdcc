//! Spin-j representation matrices of SU(2).
//!
//! Half-integers are stored doubled: `two_j = 2j`. Basis vectors of the
//! spin-j space are ordered `m = j, j−1, …, −j`, so index `k` carries `m = j − k`.

use nalgebra::{DMatrix, SymmetricEigen};
use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::group::Su2;

pub type CMatrix = DMatrix<Complex64>;

/// Default largest spin kept in truncated carrier spaces, doubled.
pub const DEFAULT_TWO_J_CAP: u32 = 12;

/// Matrix entry label `D^j_{mn}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WignerIndex {
    pub two_j: u32,
    pub two_m: i32,
    pub two_n: i32,
}

impl WignerIndex {
    pub fn new(two_j: u32, two_m: i32, two_n: i32) -> Result<Self> {
        let j = two_j as i32;
        for x in [two_m, two_n] {
            if x.abs() > j || (j - x) % 2 != 0 {
                return Err(Error::InvalidParameter(format!(
                    "index 2m = {x} not admissible for 2j = {two_j}"
                )));
            }
        }
        Ok(Self { two_j, two_m, two_n })
    }

    pub fn j(&self) -> f64 {
        self.two_j as f64 / 2.0
    }

    /// Row and column positions in the spin-j matrix.
    pub fn position(&self) -> (usize, usize) {
        (index_of(self.two_j, self.two_m), index_of(self.two_j, self.two_n))
    }

    /// All admissible indices with the given spin.
    pub fn all(two_j: u32) -> impl Iterator<Item = WignerIndex> {
        let dim = two_j as usize + 1;
        (0..dim).flat_map(move |a| {
            (0..dim).map(move |b| WignerIndex {
                two_j,
                two_m: two_m_at(two_j, a),
                two_n: two_m_at(two_j, b),
            })
        })
    }
}

pub fn dimension(two_j: u32) -> usize {
    two_j as usize + 1
}

/// Position of weight `m` in the spin-j basis.
pub fn index_of(two_j: u32, two_m: i32) -> usize {
    ((two_j as i32 - two_m) / 2) as usize
}

/// Doubled weight at basis position `k`.
pub fn two_m_at(two_j: u32, k: usize) -> i32 {
    two_j as i32 - 2 * k as i32
}

/// Hermitian spin matrices `(S₁, S₂, S₃)` with `[S_a, S_b] = i ε_abc S_c`.
///
/// The group generators `J_a` are represented by `−i S_a`.
pub fn spin_matrices(two_j: u32) -> [CMatrix; 3] {
    let dim = dimension(two_j);
    let j = two_j as f64 / 2.0;
    let mut plus = CMatrix::zeros(dim, dim);
    for k in 1..dim {
        // S₊|m⟩ = √((j−m)(j+m+1)) |m+1⟩, column k holds m = j − k
        let m = j - k as f64;
        plus[(k - 1, k)] = Complex64::new(((j - m) * (j + m + 1.0)).sqrt(), 0.0);
    }
    let minus = plus.adjoint();
    let s1 = (&plus + &minus).scale(0.5);
    let s2 = (&plus - &minus) * Complex64::new(0.0, -0.5);
    let s3 = CMatrix::from_fn(dim, dim, |a, b| {
        if a == b {
            Complex64::new(two_m_at(two_j, a) as f64 / 2.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    [s1, s2, s3]
}

/// Eigenvectors of `S₂` (columns) and their eigenvalues.
struct Spectral {
    vectors: CMatrix,
    values: Vec<f64>,
}

thread_local! {
    static SPECTRA: RefCell<HashMap<u32, Rc<Spectral>>> = RefCell::new(HashMap::new());
}

fn spectral(two_j: u32) -> Rc<Spectral> {
    SPECTRA.with(|cache| {
        cache
            .borrow_mut()
            .entry(two_j)
            .or_insert_with(|| {
                let [_, s2, _] = spin_matrices(two_j);
                let eig = SymmetricEigen::new(s2);
                Rc::new(Spectral {
                    vectors: eig.eigenvectors,
                    values: eig.eigenvalues.iter().copied().collect(),
                })
            })
            .clone()
    })
}

/// `d^j(β) = exp(−iβS₂)`, a real orthogonal matrix.
pub fn small_d(two_j: u32, beta: f64) -> DMatrix<f64> {
    let sp = spectral(two_j);
    let n = dimension(two_j);
    let scaled = CMatrix::from_fn(n, n, |a, k| sp.vectors[(a, k)] * Complex64::from_polar(1.0, -beta * sp.values[k]));
    let full = scaled * sp.vectors.adjoint();
    DMatrix::from_fn(n, n, |a, b| full[(a, b)].re)
}

fn phases(two_j: u32, angle: f64) -> Vec<Complex64> {
    (0..dimension(two_j))
        .map(|k| Complex64::from_polar(1.0, -angle * two_m_at(two_j, k) as f64 / 2.0))
        .collect()
}

/// `D^j(u)` from the Euler factorisation
/// `D^j(u) = e^{−iαS₃} d^j(β) e^{−iγS₃}` for `u = exp(αJ₃) exp(βJ₂) exp(γJ₃)`.
pub fn wigner_matrix(two_j: u32, u: &Su2) -> CMatrix {
    let (alpha, beta, gamma) = u.euler_angles();
    let d = small_d(two_j, beta);
    let left = phases(two_j, alpha);
    let right = phases(two_j, gamma);
    let dim = dimension(two_j);
    CMatrix::from_fn(dim, dim, |a, b| left[a] * d[(a, b)] * right[b])
}

/// Single entry `D^j_{mn}(u)`.
pub fn wigner_entry(index: WignerIndex, u: &Su2) -> Complex64 {
    let (a, b) = index.position();
    wigner_matrix(index.two_j, u)[(a, b)]
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn factorial(n: i64) -> f64 {
        (1..=n).map(|k| k as f64).product()
    }

    /// Explicit sum formula for `d^j_{mn}(β)`.
    fn small_d_formula(two_j: u32, two_m: i32, two_n: i32, beta: f64) -> f64 {
        let j = two_j as i64;
        let (m, n) = (two_m as i64, two_n as i64);
        let (jpm, jmm, jpn, jmn) = ((j + m) / 2, (j - m) / 2, (j + n) / 2, (j - n) / 2);
        let pref = (factorial(jpm) * factorial(jmm) * factorial(jpn) * factorial(jmn)).sqrt();
        let (c, s) = ((beta / 2.0).cos(), (beta / 2.0).sin());
        let mut total = 0.0;
        for k in 0..=(2 * j) {
            let a = jpn - k;
            let b = jmm - k;
            let e = k + (m - n) / 2;
            if a < 0 || b < 0 || e < 0 {
                continue;
            }
            let sign = if (e % 2) == 0 { 1.0 } else { -1.0 };
            let cos_pow = (a + b) as i32;
            let sin_pow = (e + k) as i32;
            total += sign * c.powi(cos_pow) * s.powi(sin_pow)
                / (factorial(a) * factorial(k) * factorial(b) * factorial(e));
        }
        pref * total
    }

    #[test]
    fn spin_matrices_close_su2() {
        for two_j in 0..=6 {
            let [s1, s2, s3] = spin_matrices(two_j);
            let comm = &s1 * &s2 - &s2 * &s1;
            let want = &s3 * Complex64::new(0.0, 1.0);
            assert!((comm - want).camax() < 1e-13);
            let casimir = &s1 * &s1 + &s2 * &s2 + &s3 * &s3;
            let j = two_j as f64 / 2.0;
            let id = CMatrix::identity(dimension(two_j), dimension(two_j)) * Complex64::new(j * (j + 1.0), 0.0);
            assert!((casimir - id).camax() < 1e-12);
        }
    }

    #[test]
    fn small_d_matches_sum_formula() {
        for two_j in 0..=6 {
            for &beta in &[0.0, 0.3, 1.7, 3.0, std::f64::consts::PI] {
                let d = small_d(two_j, beta);
                for idx in WignerIndex::all(two_j) {
                    let (a, b) = idx.position();
                    let want = small_d_formula(two_j, idx.two_m, idx.two_n, beta);
                    assert!((d[(a, b)] - want).abs() < 1e-13, "2j={two_j} {idx:?} β={beta}");
                }
            }
        }
    }

    #[test]
    fn fundamental_and_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..20 {
            let u = Su2::random(&mut rng);
            let d = wigner_matrix(1, &u);
            let m = u.to_matrix();
            for a in 0..2 {
                for b in 0..2 {
                    assert!((d[(a, b)] - m[a][b]).norm() < 1e-14);
                }
            }
        }
        for two_j in 0..=6 {
            let d = wigner_matrix(two_j, &Su2::IDENTITY);
            assert!((d - CMatrix::identity(two_j as usize + 1, two_j as usize + 1)).camax() < 1e-15);
        }
    }

    #[test]
    fn homomorphism_and_unitarity() {
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        for _ in 0..30 {
            let (u, v) = (Su2::random(&mut rng), Su2::random(&mut rng));
            for two_j in 0..=6 {
                let du = wigner_matrix(two_j, &u);
                let dv = wigner_matrix(two_j, &v);
                let duv = wigner_matrix(two_j, &u.mul(&v));
                assert!((&du * &dv - duv).camax() < 1e-12);
                let n = dimension(two_j);
                assert!((&du * du.adjoint() - CMatrix::identity(n, n)).camax() < 1e-12);
            }
        }
    }

    #[test]
    fn generator_exponentiates_to_representation() {
        let [_, _, s3] = spin_matrices(3);
        let t = 0.7;
        let want = (s3 * Complex64::new(0.0, -t)).exp();
        let got = wigner_matrix(3, &Su2::about_axis3(t));
        assert!((want - got).camax() < 1e-13);
    }

    #[test]
    fn index_validation() {
        assert!(WignerIndex::new(2, 1, 0).is_err());
        assert!(WignerIndex::new(1, 3, 1).is_err());
        let i = WignerIndex::new(3, -1, 3).unwrap();
        assert_eq!(i.position(), (2, 0));
        assert_eq!(WignerIndex::all(4).count(), 25);
    }
}
