//! Structure constants and tensor calculus for su(2), iso(3) and the
//! λ-deformed family, together with the co-boundary bialgebra built from a
//! classical r-matrix.
//!
//! The iso(3) basis is ordered `(P₁, P₂, P₃, J₁, J₂, J₃)` and every tensor
//! in this module is indexed in that order.

use crate::error::{Error, Result};
use crate::linalg::levi_civita;

/// Metric used to raise indices in the structure constants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Signature {
    Euclidean,
    Lorentzian,
}

impl Signature {
    fn eta(self, a: usize) -> f64 {
        match (self, a) {
            (Signature::Euclidean, _) | (Signature::Lorentzian, 0) => 1.0,
            (Signature::Lorentzian, _) => -1.0,
        }
    }
}

/// A finite-dimensional real Lie algebra in a fixed basis.
#[derive(Debug, Clone, PartialEq)]
pub struct LieAlgebraData {
    dim: usize,
    /// `c[(α·dim + β)·dim + γ]`: `[X_α, X_β] = c^γ_{αβ} X_γ`.
    structure_constants: Vec<f64>,
    basis_labels: Vec<String>,
    /// Symmetric bilinear form `⟨X_α, X_β⟩`, row-major.
    pairing: Vec<f64>,
}

impl LieAlgebraData {
    /// su(2) with `[J_a, J_b] = ε_{abc} J_c` and pairing `δ_{ab}`.
    pub fn su2() -> Self {
        let mut c = vec![0.0; 27];
        for a in 0..3 {
            for b in 0..3 {
                for g in 0..3 {
                    c[(a * 3 + b) * 3 + g] = levi_civita(a, b, g);
                }
            }
        }
        let mut pairing = vec![0.0; 9];
        for a in 0..3 {
            pairing[a * 3 + a] = 1.0;
        }
        Self {
            dim: 3,
            structure_constants: c,
            basis_labels: vec!["J1".into(), "J2".into(), "J3".into()],
            pairing,
        }
    }

    /// iso(3): `[J_a,J_b] = ε J_c`, `[J_a,P_b] = ε P_c`, `[P_a,P_b] = 0`.
    pub fn iso3() -> Self {
        Self::cosmological(0.0, Signature::Euclidean)
    }

    /// The algebras `[J_a,J_b] = ε_{abc}J^c`, `[J_a,P_b] = ε_{abc}P^c`,
    /// `[P_a,P_b] = λ ε_{abc}J^c` with indices raised by `η`.
    ///
    /// The pairing is `⟨J_a, P_b⟩ = η_{ab}`, the other blocks vanish.
    pub fn cosmological(lambda: f64, signature: Signature) -> Self {
        let dim = 6;
        let mut c = vec![0.0; dim * dim * dim];
        let mut set = |x: usize, y: usize, z: usize, v: f64| {
            c[(x * dim + y) * dim + z] += v;
        };
        for a in 0..3 {
            for b in 0..3 {
                for k in 0..3 {
                    let e = levi_civita(a, b, k) * signature.eta(k);
                    if e == 0.0 {
                        continue;
                    }
                    // [J_a, J_b] = e J_k
                    set(3 + a, 3 + b, 3 + k, e);
                    // [J_a, P_b] = e P_k and [P_b, J_a] = -e P_k
                    set(3 + a, b, k, e);
                    set(b, 3 + a, k, -e);
                    // [P_a, P_b] = λ e J_k
                    if lambda != 0.0 {
                        set(a, b, 3 + k, lambda * e);
                    }
                }
            }
        }
        let mut pairing = vec![0.0; dim * dim];
        for a in 0..3 {
            pairing[a * dim + 3 + a] = signature.eta(a);
            pairing[(3 + a) * dim + a] = signature.eta(a);
        }
        let basis_labels = ["P1", "P2", "P3", "J1", "J2", "J3"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        Self {
            dim,
            structure_constants: c,
            basis_labels,
            pairing,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    /// Structure constant `c^γ_{αβ}`.
    #[inline]
    pub fn c(&self, alpha: usize, beta: usize, gamma: usize) -> f64 {
        self.structure_constants[(alpha * self.dim + beta) * self.dim + gamma]
    }

    pub fn pairing(&self, alpha: usize, beta: usize) -> f64 {
        self.pairing[alpha * self.dim + beta]
    }

    /// The basis vector `X_α`.
    pub fn basis(&self, alpha: usize) -> AlgebraElement {
        let mut coeffs = vec![0.0; self.dim];
        coeffs[alpha] = 1.0;
        AlgebraElement { coeffs }
    }

    fn check_dim(&self, got: usize) -> Result<()> {
        if got != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got,
            });
        }
        Ok(())
    }

    pub fn bracket(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_dim(x.dim())?;
        self.check_dim(y.dim())?;
        let n = self.dim;
        let mut out = vec![0.0; n];
        for a in 0..n {
            if x.coeffs[a] == 0.0 {
                continue;
            }
            for b in 0..n {
                if y.coeffs[b] == 0.0 {
                    continue;
                }
                let w = x.coeffs[a] * y.coeffs[b];
                for (g, o) in out.iter_mut().enumerate() {
                    *o += w * self.c(a, b, g);
                }
            }
        }
        Ok(AlgebraElement { coeffs: out })
    }

    /// Matrix of `ad_X`, row-major with `(ad_X)[γ][β] = x^α c^γ_{αβ}`.
    pub fn ad_matrix(&self, x: &AlgebraElement) -> Result<Vec<f64>> {
        self.check_dim(x.dim())?;
        let n = self.dim;
        let mut m = vec![0.0; n * n];
        for a in 0..n {
            if x.coeffs[a] == 0.0 {
                continue;
            }
            for b in 0..n {
                for g in 0..n {
                    m[g * n + b] += x.coeffs[a] * self.c(a, b, g);
                }
            }
        }
        Ok(m)
    }

    /// Largest violation of antisymmetry or of the Jacobi identity over all
    /// basis triples.
    pub fn jacobi_residual(&self) -> f64 {
        let n = self.dim;
        let mut worst = 0.0_f64;
        for a in 0..n {
            for b in 0..n {
                for g in 0..n {
                    worst = worst.max((self.c(a, b, g) + self.c(b, a, g)).abs());
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for g in 0..n {
                    for e in 0..n {
                        // [X_a,[X_b,X_g]] + [X_b,[X_g,X_a]] + [X_g,[X_a,X_b]]
                        let mut s = 0.0;
                        for d in 0..n {
                            s += self.c(b, g, d) * self.c(a, d, e)
                                + self.c(g, a, d) * self.c(b, d, e)
                                + self.c(a, b, d) * self.c(g, d, e);
                        }
                        worst = worst.max(s.abs());
                    }
                }
            }
        }
        worst
    }

    /// Largest entry of `⟨[X_α,X_β],X_γ⟩ + ⟨X_β,[X_α,X_γ]⟩` together with the
    /// determinant test for non-degeneracy. Returns `(invariance, |det|)`.
    pub fn pairing_diagnostics(&self) -> (f64, f64) {
        let n = self.dim;
        let mut worst = 0.0_f64;
        for a in 0..n {
            for b in 0..n {
                for g in 0..n {
                    let mut s = 0.0;
                    for d in 0..n {
                        s += self.c(a, b, d) * self.pairing(d, g)
                            + self.c(a, g, d) * self.pairing(b, d);
                    }
                    worst = worst.max(s.abs());
                }
            }
        }
        (worst, determinant(&self.pairing, n).abs())
    }

    /// `[[r,r]] = [r₁₂,r₁₃] + [r₁₂,r₂₃] + [r₁₃,r₂₃]`.
    pub fn cybe_defect(&self, r: &Tensor2) -> Result<Tensor3> {
        self.check_dim(r.dim)?;
        let n = self.dim;
        let mut out = Tensor3::zeros(n);
        for a in 0..n {
            for b in 0..n {
                let rab = r.get(a, b);
                if rab == 0.0 {
                    continue;
                }
                for g in 0..n {
                    for d in 0..n {
                        let rgd = r.get(g, d);
                        if rgd == 0.0 {
                            continue;
                        }
                        let w = rab * rgd;
                        for e in 0..n {
                            // [r12, r13]: [X_a, X_g] ⊗ X_b ⊗ X_d
                            *out.get_mut(e, b, d) += w * self.c(a, g, e);
                            // [r12, r23]: X_a ⊗ [X_b, X_g] ⊗ X_d
                            *out.get_mut(a, e, d) += w * self.c(b, g, e);
                            // [r13, r23]: X_a ⊗ X_g ⊗ [X_b, X_d]
                            *out.get_mut(a, g, e) += w * self.c(b, d, e);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Largest entry of `(ad_{X_α} ⊗ 1 ⊗ … + …) T` over the basis; zero iff
    /// `T` is ad-invariant.
    pub fn invariance_defect<T: AdTensor>(&self, t: &T) -> Result<f64> {
        self.check_dim(t.dim())?;
        let mut worst = 0.0_f64;
        for a in 0..self.dim {
            let ad = self.ad_matrix(&self.basis(a))?;
            worst = worst.max(t.ad_act(&ad).max_abs());
        }
        Ok(worst)
    }

    /// The symmetric element determined by the pairing, `½ g^{αβ} X_α ⊗ X_β`
    /// with `g^{αβ}` the inverse of the pairing matrix. For iso(3) this is
    /// `½(P_a ⊗ J_a + J_a ⊗ P_a)`, the symmetric part of `P_a ⊗ J_a`.
    pub fn pairing_tensor(&self) -> Tensor2 {
        let inv = invert(&self.pairing, self.dim).expect("pairing is non-degenerate");
        Tensor2 {
            dim: self.dim,
            data: inv.into_iter().map(|x| 0.5 * x).collect(),
        }
    }

    /// Lower an index with the pairing: coefficients of `⟨x, ·⟩` in the dual basis.
    pub fn lower(&self, x: &AlgebraElement) -> Result<Vec<f64>> {
        self.check_dim(x.dim())?;
        let n = self.dim;
        Ok((0..n)
            .map(|a| (0..n).map(|b| self.pairing(a, b) * x.coeffs[b]).sum())
            .collect())
    }

    /// Inverse of [`LieAlgebraData::lower`].
    pub fn raise(&self, xi: &[f64]) -> Result<AlgebraElement> {
        self.check_dim(xi.len())?;
        let n = self.dim;
        let inv = invert(&self.pairing, n).expect("pairing is non-degenerate");
        Ok(AlgebraElement {
            coeffs: (0..n)
                .map(|a| (0..n).map(|b| inv[a * n + b] * xi[b]).sum())
                .collect(),
        })
    }
}

/// Tensors on which the adjoint action can be evaluated.
pub trait AdTensor: Sized {
    fn dim(&self) -> usize;
    /// Apply `ad ⊗ 1 ⊗ … + 1 ⊗ ad ⊗ … + …` for the given ad matrix.
    fn ad_act(&self, ad: &[f64]) -> Self;
    fn max_abs(&self) -> f64;
}

/// Element `x^α X_α`.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct AlgebraElement {
    pub coeffs: Vec<f64>,
}

impl AlgebraElement {
    pub fn new(coeffs: Vec<f64>) -> Self {
        Self { coeffs }
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            coeffs: vec![0.0; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: f64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| c * x).collect(),
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().fold(0.0_f64, |m, x| m.max(x.abs()))
    }
}

/// Element of `𝔤 ⊗ 𝔤`, `t^{αβ} X_α ⊗ X_β`.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor2 {
    dim: usize,
    data: Vec<f64>,
}

impl Tensor2 {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![0.0; dim * dim],
        }
    }

    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> f64) -> Self {
        let mut t = Self::zeros(dim);
        for a in 0..dim {
            for b in 0..dim {
                t.data[a * dim + b] = f(a, b);
            }
        }
        t
    }

    /// `x ⊗ y`.
    pub fn outer(x: &AlgebraElement, y: &AlgebraElement) -> Self {
        let dim = x.dim();
        Self::from_fn(dim, |a, b| x.coeffs[a] * y.coeffs[b])
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> f64 {
        self.data[a * self.dim + b]
    }

    #[inline]
    pub fn get_mut(&mut self, a: usize, b: usize) -> &mut f64 {
        &mut self.data[a * self.dim + b]
    }

    /// `σ(t)`, the flip of tensor factors.
    pub fn flip(&self) -> Self {
        Self::from_fn(self.dim, |a, b| self.get(b, a))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_fn(self.dim, |a, b| self.get(a, b) + other.get(a, b))
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::from_fn(self.dim, |a, b| self.get(a, b) - other.get(a, b))
    }

    pub fn scale(&self, c: f64) -> Self {
        Self::from_fn(self.dim, |a, b| c * self.get(a, b))
    }

    /// `r^s = ½(r + σ(r))`.
    pub fn symmetric_part(&self) -> Self {
        Self::from_fn(self.dim, |a, b| 0.5 * (self.get(a, b) + self.get(b, a)))
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0_f64, |m, x| m.max(x.abs()))
    }
}

impl AdTensor for Tensor2 {
    fn dim(&self) -> usize {
        self.dim
    }

    fn ad_act(&self, ad: &[f64]) -> Self {
        let n = self.dim;
        Self::from_fn(n, |g, d| {
            let mut s = 0.0;
            for b in 0..n {
                s += ad[g * n + b] * self.get(b, d) + ad[d * n + b] * self.get(g, b);
            }
            s
        })
    }

    fn max_abs(&self) -> f64 {
        Tensor2::max_abs(self)
    }
}

/// Element of `𝔤 ⊗ 𝔤 ⊗ 𝔤`.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor3 {
    dim: usize,
    data: Vec<f64>,
}

impl Tensor3 {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![0.0; dim * dim * dim],
        }
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize, c: usize) -> f64 {
        self.data[(a * self.dim + b) * self.dim + c]
    }

    #[inline]
    pub fn get_mut(&mut self, a: usize, b: usize, c: usize) -> &mut f64 {
        &mut self.data[(a * self.dim + b) * self.dim + c]
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0_f64, |m, x| m.max(x.abs()))
    }
}

impl AdTensor for Tensor3 {
    fn dim(&self) -> usize {
        self.dim
    }

    fn ad_act(&self, ad: &[f64]) -> Self {
        let n = self.dim;
        let mut out = Tensor3::zeros(n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let mut s = 0.0;
                    for k in 0..n {
                        s += ad[a * n + k] * self.get(k, b, c)
                            + ad[b * n + k] * self.get(a, k, c)
                            + ad[c * n + k] * self.get(a, b, k);
                    }
                    *out.get_mut(a, b, c) = s;
                }
            }
        }
        out
    }

    fn max_abs(&self) -> f64 {
        Tensor3::max_abs(self)
    }
}

/// The classical r-matrix `r = P_a ⊗ J_a` of iso(3).
pub fn iso3_r_matrix() -> Tensor2 {
    Tensor2::from_fn(6, |a, b| if a < 3 && b == a + 3 { 1.0 } else { 0.0 })
}

/// A co-boundary Lie bialgebra `(𝔤, δ)` with `δ(X) = (ad_X ⊗ 1 + 1 ⊗ ad_X) r`.
#[derive(Debug, Clone)]
pub struct CoboundaryBialgebra {
    pub algebra: LieAlgebraData,
    pub r: Tensor2,
}

impl CoboundaryBialgebra {
    pub fn new(algebra: LieAlgebraData, r: Tensor2) -> Result<Self> {
        algebra.check_dim(r.dim)?;
        Ok(Self { algebra, r })
    }

    /// iso(3) with `r = P_a ⊗ J_a`.
    pub fn iso3() -> Self {
        Self {
            algebra: LieAlgebraData::iso3(),
            r: iso3_r_matrix(),
        }
    }

    /// `δ(X) = (ad_X ⊗ 1 + 1 ⊗ ad_X) r`.
    pub fn cocommutator(&self, x: &AlgebraElement) -> Result<Tensor2> {
        let ad = self.algebra.ad_matrix(x)?;
        Ok(self.r.ad_act(&ad))
    }

    /// `(ad_X ⊗ 1 + 1 ⊗ ad_X) t` for an arbitrary two-tensor.
    fn ad2(&self, x: &AlgebraElement, t: &Tensor2) -> Result<Tensor2> {
        let ad = self.algebra.ad_matrix(x)?;
        Ok(t.ad_act(&ad))
    }

    /// `δ([X,Y]) − (ad_X ⊗ 1 + 1 ⊗ ad_X) δ(Y) + (ad_Y ⊗ 1 + 1 ⊗ ad_Y) δ(X)`.
    pub fn cocycle_defect(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<Tensor2> {
        let lhs = self.cocommutator(&self.algebra.bracket(x, y)?)?;
        let rhs = self
            .ad2(x, &self.cocommutator(y)?)?
            .sub(&self.ad2(y, &self.cocommutator(x)?)?);
        Ok(lhs.sub(&rhs))
    }

    /// The bracket on `𝔤*` dual to `δ`, in dual-basis coefficients:
    /// `δ*(ξ, η)_γ = ξ_α η_β δ(X_γ)^{αβ}`.
    pub fn dual_bracket_coeffs(&self, xi: &[f64], eta: &[f64]) -> Result<Vec<f64>> {
        let n = self.algebra.dim;
        self.algebra.check_dim(xi.len())?;
        self.algebra.check_dim(eta.len())?;
        let mut out = vec![0.0; n];
        for (g, o) in out.iter_mut().enumerate() {
            let d = self.cocommutator(&self.algebra.basis(g))?;
            let mut s = 0.0;
            for a in 0..n {
                for b in 0..n {
                    s += xi[a] * eta[b] * d.get(a, b);
                }
            }
            *o = s;
        }
        Ok(out)
    }

    /// The dual bracket with `𝔤*` identified with `𝔤` through the pairing:
    /// `X ∈ 𝔤` stands for `⟨X, ·⟩`. With this identification
    /// `δ*(J_a, J_b) = ε_{abc} J_c` and the brackets involving `P` vanish.
    pub fn dual_bracket(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        let xi = self.algebra.lower(x)?;
        let eta = self.algebra.lower(y)?;
        let out = self.dual_bracket_coeffs(&xi, &eta)?;
        self.algebra.raise(&out)
    }
}

fn determinant(m: &[f64], n: usize) -> f64 {
    let mut a = m.to_vec();
    let mut det = 1.0;
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&i, &j| a[i * n + col].abs().total_cmp(&a[j * n + col].abs()))
            .unwrap();
        if a[piv * n + col] == 0.0 {
            return 0.0;
        }
        if piv != col {
            for k in 0..n {
                a.swap(piv * n + k, col * n + k);
            }
            det = -det;
        }
        det *= a[col * n + col];
        for row in col + 1..n {
            let f = a[row * n + col] / a[col * n + col];
            for k in col..n {
                a[row * n + k] -= f * a[col * n + k];
            }
        }
    }
    det
}

fn invert(m: &[f64], n: usize) -> Option<Vec<f64>> {
    let mut a = m.to_vec();
    let mut inv = vec![0.0; n * n];
    for i in 0..n {
        inv[i * n + i] = 1.0;
    }
    for col in 0..n {
        let piv = (col..n).max_by(|&i, &j| a[i * n + col].abs().total_cmp(&a[j * n + col].abs()))?;
        if a[piv * n + col].abs() < 1e-300 {
            return None;
        }
        for k in 0..n {
            a.swap(piv * n + k, col * n + k);
            inv.swap(piv * n + k, col * n + k);
        }
        let p = a[col * n + col];
        for k in 0..n {
            a[col * n + k] /= p;
            inv[col * n + k] /= p;
        }
        for row in 0..n {
            if row == col {
                continue;
            }
            let f = a[row * n + col];
            if f == 0.0 {
                continue;
            }
            for k in 0..n {
                a[row * n + k] -= f * a[col * n + k];
                inv[row * n + k] -= f * inv[col * n + k];
            }
        }
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    const P1: usize = 0;
    const P2: usize = 1;
    const P3: usize = 2;
    const J1: usize = 3;
    const J2: usize = 4;
    const J3: usize = 5;

    #[test]
    fn basis_brackets() {
        let g = LieAlgebraData::iso3();
        let b = |x, y| g.bracket(&g.basis(x), &g.basis(y)).unwrap();
        assert_eq!(b(J1, J2), g.basis(J3));
        assert_eq!(b(P1, P2), AlgebraElement::zeros(6));
        assert_eq!(b(J1, P2), g.basis(P3));
        assert_eq!(b(P2, J1), g.basis(P3).scale(-1.0));
    }

    #[test]
    fn bracket_rejects_wrong_dimension() {
        let g = LieAlgebraData::iso3();
        let err = g
            .bracket(&AlgebraElement::zeros(3), &g.basis(0))
            .unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { expected: 6, got: 3 });
    }

    #[test]
    fn jacobi_for_every_family_member() {
        assert!(LieAlgebraData::su2().jacobi_residual() <= 1e-12);
        for sig in [Signature::Euclidean, Signature::Lorentzian] {
            for lambda in [-1.0, 0.0, 1.0] {
                let g = LieAlgebraData::cosmological(lambda, sig);
                assert!(g.jacobi_residual() <= 1e-12, "λ={lambda} {sig:?}");
            }
        }
    }

    #[test]
    fn iso3_pairing_is_invariant_and_nondegenerate() {
        let (inv, det) = LieAlgebraData::iso3().pairing_diagnostics();
        assert!(inv <= 1e-12);
        assert!(det > 0.5);
    }

    #[test]
    fn zero_r_has_zero_defect() {
        let g = LieAlgebraData::iso3();
        assert_eq!(g.cybe_defect(&Tensor2::zeros(6)).unwrap().max_abs(), 0.0);
    }

    #[test]
    fn symmetric_tensor_is_its_own_symmetric_part() {
        let t = Tensor2::from_fn(6, |a, b| (a + b) as f64 * 0.25);
        assert_eq!(t.symmetric_part(), t);
    }

    #[test]
    fn j1_j1_is_not_invariant() {
        // (ad_{J2} ⊗ 1 + 1 ⊗ ad_{J2})(J1⊗J1) = −J3⊗J1 − J1⊗J3
        let g = LieAlgebraData::iso3();
        let t = Tensor2::outer(&g.basis(J1), &g.basis(J1));
        assert_eq!(g.invariance_defect(&t).unwrap(), 1.0);
    }

    #[test]
    fn cocommutator_of_zero_r_vanishes() {
        let bi = CoboundaryBialgebra::new(LieAlgebraData::iso3(), Tensor2::zeros(6)).unwrap();
        assert_eq!(bi.cocommutator(&bi.algebra.basis(P1)).unwrap().max_abs(), 0.0);
    }

    #[test]
    fn cocycle_defect_vanishes_on_the_diagonal() {
        let bi = CoboundaryBialgebra::iso3();
        let x = AlgebraElement::new(vec![0.3, -1.2, 0.7, 2.0, 0.1, -0.4]);
        assert!(bi.cocycle_defect(&x, &x).unwrap().max_abs() <= 1e-14);
    }

    #[test]
    fn lower_and_raise_are_inverse() {
        let g = LieAlgebraData::iso3();
        let x = AlgebraElement::new(vec![1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);
        // ⟨J_a, P_b⟩ = δ: P-coefficients land on J*-slots and vice versa
        assert_eq!(g.lower(&x).unwrap(), vec![4.0, 5.0, 6.0, 1.0, 2.0, 3.0]);
        assert_eq!(g.raise(&g.lower(&x).unwrap()).unwrap(), x);
    }
}
