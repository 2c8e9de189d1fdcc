//! The Fock-Rosly Poisson bracket on ISO(3)~ for a single marked point,
//! evaluated in the exponential chart `(p, j) ↦ exp(j_a P_a + p_a J_a)`.
//!
//! Two routes are provided: the combination of left/right invariant vector
//! fields weighted by `r = P_a ⊗ J_a`, and the closed coordinate form
//!
//! ```text
//! {f₁,f₂} = ε_abc (∂f₁/∂p_a ∂f₂/∂j_b p_c + ∂f₁/∂j_a ∂f₂/∂p_b p_c
//!                  + ∂f₁/∂j_a ∂f₂/∂j_b j_c).
//! ```
//!
//! Gradients are laid out as `[∂/∂p₁, ∂/∂p₂, ∂/∂p₃, ∂/∂j₁, ∂/∂j₂, ∂/∂j₃]`,
//! matching the iso(3) basis order `(P₁, P₂, P₃, J₁, J₂, J₃)`.

use rand::Rng;
use std::collections::BTreeMap;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::group::{CoadjointPoint, Su2};
use crate::lie::LieAlgebraData;
use crate::linalg::{self, levi_civita, Mat3};

/// Evaluation site `(p, j)`.
pub type PhasePoint = CoadjointPoint;

/// Distance from `|p| ∈ {0, 2π}` below which the rotation vector fields are refused.
pub const CHART_TOL: f64 = 1e-6;

pub type Gradient = [f64; 6];

/// A smooth function of `(p, j)` with its gradient.
pub trait Observable {
    fn value(&self, z: &PhasePoint) -> f64;
    fn gradient(&self, z: &PhasePoint) -> Gradient;
}

/// Central finite differences around any evaluation function.
pub struct FiniteDifference<F> {
    pub f: F,
    pub step: f64,
}

impl<F: Fn(&PhasePoint) -> f64> FiniteDifference<F> {
    pub fn new(f: F) -> Self {
        Self { f, step: 1e-5 }
    }
}

impl<F: Fn(&PhasePoint) -> f64> Observable for FiniteDifference<F> {
    fn value(&self, z: &PhasePoint) -> f64 {
        (self.f)(z)
    }

    fn gradient(&self, z: &PhasePoint) -> Gradient {
        let h = self.step;
        std::array::from_fn(|i| {
            let shift = |d: f64| {
                let mut w = *z;
                if i < 3 {
                    w.p[i] += d;
                } else {
                    w.j[i - 3] += d;
                }
                (self.f)(&w)
            };
            (shift(h) - shift(-h)) / (2.0 * h)
        })
    }
}

/// Real polynomial in `(p₁, p₂, p₃, j₁, j₂, j₃)`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Polynomial {
    terms: BTreeMap<[u8; 6], f64>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: f64) -> Self {
        let mut p = Self::zero();
        p.push([0; 6], c);
        p
    }

    /// The coordinate function `z_i` (0..3 for `p`, 3..6 for `j`).
    pub fn coordinate(i: usize) -> Self {
        let mut e = [0; 6];
        e[i] = 1;
        let mut p = Self::zero();
        p.push(e, 1.0);
        p
    }

    pub fn p(a: usize) -> Self {
        Self::coordinate(a)
    }

    pub fn j(a: usize) -> Self {
        Self::coordinate(3 + a)
    }

    fn push(&mut self, e: [u8; 6], c: f64) {
        if c == 0.0 {
            return;
        }
        let slot = self.terms.entry(e).or_insert(0.0);
        *slot += c;
        if *slot == 0.0 {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.push(*e, *c);
        }
        out
    }

    pub fn scale(&self, k: f64) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            out.push(*e, k * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = std::array::from_fn(|i| e1[i] + e2[i]);
                out.push(e, c1 * c2);
            }
        }
        out
    }

    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut d = *e;
                d[i] -= 1;
                out.push(d, c * e[i] as f64);
            }
        }
        out
    }

    pub fn degree(&self) -> usize {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&k| k as usize).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest coefficient magnitude.
    pub fn max_coeff(&self) -> f64 {
        self.terms.values().fold(0.0_f64, |m, c| m.max(c.abs()))
    }

    pub fn eval_coords(&self, z: &[f64; 6]) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut t = *c;
                for (x, &k) in z.iter().zip(e) {
                    t *= x.powi(k as i32);
                }
                t
            })
            .sum()
    }

    /// Random polynomial of total degree ≤ `max_degree` with coefficients in `[−1, 1]`.
    pub fn random<R: Rng + ?Sized>(max_degree: u8, rng: &mut R) -> Self {
        let mut out = Self::zero();
        for e in monomials(max_degree) {
            out.push(e, rng.gen_range(-1.0..1.0));
        }
        out
    }
}

fn coords(z: &PhasePoint) -> [f64; 6] {
    [z.p[0], z.p[1], z.p[2], z.j[0], z.j[1], z.j[2]]
}

fn monomials(max_degree: u8) -> Vec<[u8; 6]> {
    let mut out = vec![];
    let mut e = [0u8; 6];
    fn rec(i: usize, left: u8, e: &mut [u8; 6], out: &mut Vec<[u8; 6]>) {
        if i == 6 {
            out.push(*e);
            return;
        }
        for k in 0..=left {
            e[i] = k;
            rec(i + 1, left - k, e, out);
        }
        e[i] = 0;
    }
    rec(0, max_degree, &mut e, &mut out);
    out
}

impl Observable for Polynomial {
    fn value(&self, z: &PhasePoint) -> f64 {
        self.eval_coords(&coords(z))
    }

    fn gradient(&self, z: &PhasePoint) -> Gradient {
        let c = coords(z);
        std::array::from_fn(|i| self.derivative(i).eval_coords(&c))
    }
}

/// The left/right invariant vector fields on ISO(3)~.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VectorField {
    /// `J^L_a f(g) = d/dt f(e^{−tJ_a} g)`
    JLeft,
    /// `P^L_a f(g) = d/dt f(e^{−tP_a} g)`
    PLeft,
    /// `J^R_a f(g) = d/dt f(g e^{tJ_a})`
    JRight,
    /// `P^R_a f(g) = d/dt f(g e^{tP_a})`
    PRight,
}

/// Row `a` holds the coefficients of `∂/∂p₁..₃, ∂/∂j₁..₃` in the field with index `a`.
pub type FieldMatrix = [[f64; 6]; 3];

/// Planar `(1 − Ad(u))⁻¹` for `u = exp(p_a J_a)`.
fn planar_resolvent(p: &linalg::Vec3) -> Result<(Mat3, Mat3)> {
    let norm = linalg::norm(p);
    if norm < CHART_TOL || (norm - 2.0 * PI).abs() < CHART_TOL {
        return Err(Error::ChartSingular {
            norm,
            tol: CHART_TOL,
        });
    }
    let ad = Su2::exp(p).adjoint_matrix();
    let mut one_minus = linalg::identity3();
    for i in 0..3 {
        for j in 0..3 {
            one_minus[i][j] -= ad[i][j];
        }
    }
    let inv = linalg::planar_inverse(&one_minus, p, 1e-12).ok_or(Error::ChartSingular {
        norm,
        tol: CHART_TOL,
    })?;
    Ok((ad, inv))
}

/// Coefficient matrix of the chosen vector field at `point`.
///
/// `J^L` uses `Ad(u)/(1 − Ad(u))` and `J^R` uses `1/(Ad(u) − 1)`, both
/// inverted on the plane orthogonal to `p`, applied to `ε_{bcd} p_c ∂/∂p_d`.
/// These carry only the part of the flow orthogonal to `p`; the radial parts
/// cancel in the bracket.
pub fn vector_field_matrix(point: &PhasePoint, which: VectorField) -> Result<FieldMatrix> {
    let mut out = [[0.0; 6]; 3];
    match which {
        VectorField::PRight => {
            for (a, row) in out.iter_mut().enumerate() {
                row[3 + a] = 1.0;
            }
        }
        VectorField::PLeft => {
            let ad = Su2::exp(&point.p).adjoint_matrix();
            for a in 0..3 {
                for b in 0..3 {
                    out[a][3 + b] = -ad[a][b];
                }
            }
        }
        VectorField::JLeft | VectorField::JRight => {
            let (ad, resolvent) = planar_resolvent(&point.p)?;
            let op = if which == VectorField::JLeft {
                linalg::mat_mul(&ad, &resolvent)
            } else {
                resolvent.map(|row| row.map(|x| -x))
            };
            let px = linalg::cross_matrix(&point.p);
            let pcoef = linalg::mat_mul(&op, &px);
            for a in 0..3 {
                out[a][..3].copy_from_slice(&pcoef[a]);
            }
            if which == VectorField::JRight {
                // −ε_{abc} j_b ∂/∂j_c
                let jx = linalg::cross_matrix(&point.j);
                for a in 0..3 {
                    for c in 0..3 {
                        out[a][3 + c] = -jx[a][c];
                    }
                }
            }
        }
    }
    Ok(out)
}

fn apply(field: &FieldMatrix, grad: &Gradient) -> [f64; 3] {
    std::array::from_fn(|a| (0..6).map(|i| field[a][i] * grad[i]).sum())
}

/// The bracket assembled from the vector fields:
/// `½(P^R f₁·J^R f₂ + P^L f₁·J^L f₂ − J^R f₁·P^R f₂ − J^L f₁·P^L f₂)
///  + P^R f₁·J^L f₂ − J^L f₁·P^R f₂`.
pub fn fr_bracket_vf(f1: &dyn Observable, f2: &dyn Observable, point: &PhasePoint) -> Result<f64> {
    let jl = vector_field_matrix(point, VectorField::JLeft)?;
    let jr = vector_field_matrix(point, VectorField::JRight)?;
    let pl = vector_field_matrix(point, VectorField::PLeft)?;
    let pr = vector_field_matrix(point, VectorField::PRight)?;
    let (g1, g2) = (f1.gradient(point), f2.gradient(point));
    let d = |x: [f64; 3], y: [f64; 3]| linalg::dot(&x, &y);
    let half = d(apply(&pr, &g1), apply(&jr, &g2)) + d(apply(&pl, &g1), apply(&jl, &g2))
        - d(apply(&jr, &g1), apply(&pr, &g2))
        - d(apply(&jl, &g1), apply(&pl, &g2));
    Ok(0.5 * half + d(apply(&pr, &g1), apply(&jl, &g2)) - d(apply(&jl, &g1), apply(&pr, &g2)))
}

fn coord_form(g1: &Gradient, g2: &Gradient, z: &PhasePoint) -> f64 {
    let mut s = 0.0;
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                let e = levi_civita(a, b, c);
                if e == 0.0 {
                    continue;
                }
                s += e
                    * (g1[a] * g2[3 + b] * z.p[c]
                        + g1[3 + a] * g2[b] * z.p[c]
                        + g1[3 + a] * g2[3 + b] * z.j[c]);
            }
        }
    }
    s
}

/// Closed coordinate form of the bracket.
pub fn fr_bracket_coord(f1: &dyn Observable, f2: &dyn Observable, point: &PhasePoint) -> f64 {
    coord_form(&f1.gradient(point), &f2.gradient(point), point)
}

/// Lie-Poisson (Kostant-Kirillov) bracket on iso(3)*:
/// `{f₁,f₂}(ξ) = ⟨ξ, [df₁, df₂]⟩`, computed from the iso(3) structure constants.
pub fn kk_bracket(f1: &dyn Observable, f2: &dyn Observable, point: &PhasePoint) -> f64 {
    kk_from_gradients(&LieAlgebraData::iso3(), &f1.gradient(point), &f2.gradient(point), point)
}

fn kk_from_gradients(alg: &LieAlgebraData, g1: &Gradient, g2: &Gradient, z: &PhasePoint) -> f64 {
    // the linear function X_γ evaluates to p_γ on P_γ and j_γ on J_γ
    let zc = coords(z);
    let mut s = 0.0;
    for a in 0..6 {
        if g1[a] == 0.0 {
            continue;
        }
        for b in 0..6 {
            if g2[b] == 0.0 {
                continue;
            }
            let pab: f64 = (0..6).map(|g| alg.c(a, b, g) * zc[g]).sum();
            s += g1[a] * g2[b] * pab;
        }
    }
    s
}

/// Which polynomial bracket to use for nested evaluations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BracketKind {
    Coordinate,
    KostantKirillov,
}

/// The bracket of two polynomials as a polynomial.
pub fn poly_bracket(f1: &Polynomial, f2: &Polynomial, kind: BracketKind) -> Polynomial {
    let d1: Vec<Polynomial> = (0..6).map(|i| f1.derivative(i)).collect();
    let d2: Vec<Polynomial> = (0..6).map(|i| f2.derivative(i)).collect();
    // Poisson tensor entries {z_α, z_β} as linear polynomials
    let pi = poisson_tensor(kind);
    let mut out = Polynomial::zero();
    for a in 0..6 {
        if d1[a].is_zero() {
            continue;
        }
        for b in 0..6 {
            if d2[b].is_zero() || pi[a][b].is_zero() {
                continue;
            }
            out = out.add(&d1[a].mul(&d2[b]).mul(&pi[a][b]));
        }
    }
    out
}

fn poisson_tensor(kind: BracketKind) -> Vec<Vec<Polynomial>> {
    let mut pi = vec![vec![Polynomial::zero(); 6]; 6];
    match kind {
        BracketKind::Coordinate => {
            // read the entries off the coordinate form with unit gradients
            for a in 0..6 {
                for b in 0..6 {
                    let mut entry = Polynomial::zero();
                    for g in 0..6 {
                        let mut z = CoadjointPoint::new([0.0; 3], [0.0; 3]);
                        if g < 3 {
                            z.p[g] = 1.0;
                        } else {
                            z.j[g - 3] = 1.0;
                        }
                        let mut e1 = [0.0; 6];
                        let mut e2 = [0.0; 6];
                        e1[a] = 1.0;
                        e2[b] = 1.0;
                        let c = coord_form(&e1, &e2, &z);
                        entry = entry.add(&Polynomial::coordinate(g).scale(c));
                    }
                    pi[a][b] = entry;
                }
            }
        }
        BracketKind::KostantKirillov => {
            let alg = LieAlgebraData::iso3();
            for (a, row) in pi.iter_mut().enumerate() {
                for (b, entry) in row.iter_mut().enumerate() {
                    for g in 0..6 {
                        *entry = entry.add(&Polynomial::coordinate(g).scale(alg.c(a, b, g)));
                    }
                }
            }
        }
    }
    pi
}

/// `|{f₁,{f₂,f₃}} + {f₂,{f₃,f₁}} + {f₃,{f₁,f₂}}|` at `point`, with the
/// inner brackets formed symbolically.
pub fn jacobi_residual(
    f1: &Polynomial,
    f2: &Polynomial,
    f3: &Polynomial,
    point: &PhasePoint,
    kind: BracketKind,
) -> f64 {
    let b = |x: &Polynomial, y: &Polynomial| poly_bracket(x, y, kind);
    let total = b(f1, &b(f2, f3)).add(&b(f2, &b(f3, f1))).add(&b(f3, &b(f1, f2)));
    total.value(point).abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{exp_star, log_star, Iso3};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_point<R: Rng>(rng: &mut R) -> PhasePoint {
        let n = crate::group::su2::random_unit_vector(rng);
        let r = rng.gen_range(0.1..2.0 * PI - 0.1);
        let j = std::array::from_fn(|_| rng.gen_range(-2.0..2.0));
        CoadjointPoint::new(linalg::scale(r, &n), j)
    }

    #[test]
    fn right_translations_are_j_derivatives() {
        let z = CoadjointPoint::new([0.3, 1.0, -0.2], [1.0, 2.0, 3.0]);
        let m = vector_field_matrix(&z, VectorField::PRight).unwrap();
        for a in 0..3 {
            for i in 0..6 {
                assert_eq!(m[a][i], if i == 3 + a { 1.0 } else { 0.0 });
            }
        }
    }

    #[test]
    fn left_translation_at_small_p() {
        let z = CoadjointPoint::new([1e-9, 0.0, 0.0], [1.0, 2.0, 3.0]);
        let m = vector_field_matrix(&z, VectorField::PLeft).unwrap();
        for a in 0..3 {
            assert!((m[a][3 + a] + 1.0).abs() < 1e-15);
        }
        assert!(matches!(
            vector_field_matrix(&z, VectorField::JLeft),
            Err(Error::ChartSingular { .. })
        ));
        let z = CoadjointPoint::new([0.0, 2.0 * PI, 0.0], [0.0; 3]);
        assert!(vector_field_matrix(&z, VectorField::JRight).is_err());
    }

    #[test]
    fn jl_planar_operator_is_rotation_resolvent() {
        // at p = (0,0,μ): R(1−R)⁻¹ on span(e₁,e₂) is −½ + ½cot(μ/2)·(rotation by π/2)
        let mu = 1.1;
        let (ad, res) = planar_resolvent(&[0.0, 0.0, mu]).unwrap();
        let op = linalg::mat_mul(&ad, &res);
        let cot = 1.0 / (0.5 * mu).tan();
        let want = [[-0.5, -0.5 * cot, 0.0], [0.5 * cot, -0.5, 0.0], [0.0, 0.0, 0.0]];
        assert!(linalg::mat_max_abs_diff(&op, &want) < 1e-14);
    }

    /// Derivatives of `f ∘ log_star` along the actual group translations.
    fn group_derivative(f: &Polynomial, z: &PhasePoint, which: VectorField, a: usize) -> f64 {
        let g = exp_star(z);
        let h = 1e-5;
        let eval = |t: f64| {
            let mut e = [0.0; 3];
            e[a] = t;
            let moved = match which {
                VectorField::JLeft => Iso3::rotation(Su2::exp(&linalg::scale(-1.0, &e))).mul(&g),
                VectorField::PLeft => Iso3::translation(linalg::scale(-1.0, &e)).mul(&g),
                VectorField::JRight => g.mul(&Iso3::rotation(Su2::exp(&e))),
                VectorField::PRight => g.mul(&Iso3::translation(e)),
            };
            f.value(&log_star(&moved).unwrap())
        };
        (eval(h) - eval(-h)) / (2.0 * h)
    }

    #[test]
    fn vector_fields_match_group_translations_up_to_radial_part() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..20 {
            let z = random_point(&mut rng);
            let f = Polynomial::random(2, &mut rng);
            let grad = f.gradient(&z);
            let n = linalg::scale(1.0 / linalg::norm(&z.p), &z.p);
            let radial = linalg::dot(&n, &[grad[0], grad[1], grad[2]]);
            for which in [VectorField::JLeft, VectorField::PLeft, VectorField::JRight, VectorField::PRight] {
                let m = vector_field_matrix(&z, which).unwrap();
                let formula = apply(&m, &grad);
                for a in 0..3 {
                    let sign = match which {
                        VectorField::JLeft => -1.0,
                        VectorField::JRight => 1.0,
                        _ => 0.0,
                    };
                    let want = group_derivative(&f, &z, which, a) - sign * n[a] * radial;
                    assert!((formula[a] - want).abs() < 1e-6, "{which:?} a={a}: {} vs {want}", formula[a]);
                }
            }
        }
    }

    #[test]
    fn coordinate_brackets() {
        let z = CoadjointPoint::new([0.4, -1.0, 0.9], [2.0, 0.5, -1.5]);
        let b = |x: &Polynomial, y: &Polynomial| fr_bracket_coord(x, y, &z);
        for a in 0..3 {
            for c in 0..3 {
                let want_jj: f64 = (0..3).map(|k| levi_civita(a, c, k) * z.j[k]).sum();
                let want_jp: f64 = (0..3).map(|k| levi_civita(a, c, k) * z.p[k]).sum();
                assert_eq!(b(&Polynomial::j(a), &Polynomial::j(c)), want_jj);
                assert_eq!(b(&Polynomial::j(a), &Polynomial::p(c)), want_jp);
                assert_eq!(b(&Polynomial::p(a), &Polynomial::p(c)), 0.0);
            }
        }
    }

    #[test]
    fn vf_form_reproduces_angular_momentum_algebra() {
        let z = CoadjointPoint::new([0.4, -1.0, 0.9], [2.0, 0.5, -1.5]);
        let v = fr_bracket_vf(&Polynomial::j(0), &Polynomial::j(1), &z).unwrap();
        assert!((v - z.j[2]).abs() < 1e-12);
        let f = Polynomial::random(2, &mut ChaCha8Rng::seed_from_u64(3));
        assert!(fr_bracket_vf(&f, &f, &z).unwrap().abs() < 1e-12);
    }

    #[test]
    fn kk_matches_coordinate_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for _ in 0..50 {
            let z = random_point(&mut rng);
            let (f, g) = (Polynomial::random(3, &mut rng), Polynomial::random(3, &mut rng));
            assert!((kk_bracket(&f, &g, &z) - fr_bracket_coord(&f, &g, &z)).abs() < 1e-10);
            assert_eq!(kk_bracket(&f, &Polynomial::constant(2.0), &z), 0.0);
        }
    }

    #[test]
    fn finite_difference_adapter_agrees_with_analytic() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..20 {
            let f = Polynomial::random(3, &mut rng);
            let z = random_point(&mut rng);
            let fd = FiniteDifference::new(|w: &PhasePoint| f.value(w));
            let (a, b) = (fd.gradient(&z), f.gradient(&z));
            for i in 0..6 {
                assert!((a[i] - b[i]).abs() < 1e-6);
            }
        }
    }

    #[test]
    fn jacobi_for_coordinate_triples() {
        let z = CoadjointPoint::new([0.4, -1.0, 0.9], [2.0, 0.5, -1.5]);
        for kind in [BracketKind::Coordinate, BracketKind::KostantKirillov] {
            let r = jacobi_residual(&Polynomial::j(0), &Polynomial::j(1), &Polynomial::j(2), &z, kind);
            assert!(r <= 1e-8);
            let r = jacobi_residual(&Polynomial::p(0), &Polynomial::p(1), &Polynomial::j(2), &z, kind);
            assert!(r <= 1e-8);
            let r = jacobi_residual(&Polynomial::constant(3.0), &Polynomial::p(1), &Polynomial::j(2), &z, kind);
            assert_eq!(r, 0.0);
        }
    }

    #[test]
    fn polynomial_bracket_matches_pointwise_bracket() {
        let mut rng = ChaCha8Rng::seed_from_u64(24);
        let f = Polynomial::random(2, &mut rng);
        let g = Polynomial::random(3, &mut rng);
        let z = random_point(&mut rng);
        let sym = poly_bracket(&f, &g, BracketKind::Coordinate).value(&z);
        assert!((sym - fr_bracket_coord(&f, &g, &z)).abs() < 1e-12);
        assert_eq!(poly_bracket(&f, &g, BracketKind::Coordinate), poly_bracket(&f, &g, BracketKind::KostantKirillov));
    }

    #[test]
    fn polynomial_algebra() {
        let x = Polynomial::p(0);
        let y = Polynomial::j(1);
        let f = x.mul(&x).mul(&y).add(&Polynomial::constant(-1.0));
        assert_eq!(f.degree(), 3);
        let z = CoadjointPoint::new([2.0, 0.0, 0.0], [0.0, 3.0, 0.0]);
        assert_eq!(f.value(&z), 11.0);
        assert_eq!(f.gradient(&z), [12.0, 0.0, 0.0, 0.0, 4.0, 0.0]);
        assert!(f.add(&f.scale(-1.0)).is_zero());
        assert_eq!(monomials(2).len(), 28);
    }
}
