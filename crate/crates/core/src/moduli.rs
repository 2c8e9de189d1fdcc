//! Holonomies of flat ISO(3)~ connections on a surface of genus `g` with `m`
//! marked points.
//!
//! The fundamental group has generators `a₁, b₁, …, a_g, b_g, l₁, …, l_m`
//! and the single relation `[b_g,a_g⁻¹]···[b₁,a₁⁻¹] l_m···l₁ = 1`.
//! Representatives are manipulated directly; no quotient is formed.

use rand::Rng;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::group::{conjugacy_invariants, sample_class, ClassInvariants, Iso3, Su2};
use crate::linalg;

/// Genus, marked points and the class label `(μᵢ, sᵢ)` of each marked point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurfaceData {
    pub genus: usize,
    pub labels: Vec<(f64, f64)>,
}

impl SurfaceData {
    pub fn new(genus: usize, labels: Vec<(f64, f64)>) -> Result<Self> {
        if 2 * genus + labels.len() < 1 {
            return Err(Error::InvalidParameter("surface needs 2g + m ≥ 1".into()));
        }
        for &(mu, _) in &labels {
            if !(0.0..2.0 * PI).contains(&mu) {
                return Err(Error::InvalidParameter(format!("class angle μ = {mu} outside [0, 2π)")));
            }
        }
        Ok(Self { genus, labels })
    }

    pub fn marked_points(&self) -> usize {
        self.labels.len()
    }
}

/// `(A₁, B₁, …, A_g, B_g; L₁, …, L_m)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HolonomySet {
    /// `(Aᵢ, Bᵢ)` for each handle.
    pub handles: Vec<(Iso3, Iso3)>,
    pub punctures: Vec<Iso3>,
}

impl HolonomySet {
    pub fn trivial(genus: usize, marked: usize) -> Self {
        Self {
            handles: vec![(Iso3::IDENTITY, Iso3::IDENTITY); genus],
            punctures: vec![Iso3::IDENTITY; marked],
        }
    }

    /// `[B_g,A_g⁻¹]···[B₁,A₁⁻¹]·L_m···L₁`.
    pub fn momentum_map(&self) -> Iso3 {
        let mut out = Iso3::IDENTITY;
        for (a, b) in self.handles.iter().rev() {
            out = out.mul(&Iso3::commutator(b, &a.inverse()));
        }
        for l in self.punctures.iter().rev() {
            out = out.mul(l);
        }
        out
    }

    /// Distance of the momentum map from the identity: `|a| + |u − 1|`.
    pub fn relation_defect(&self) -> f64 {
        self.momentum_map().distance(&Iso3::IDENTITY)
    }

    /// Conjugate every generator by `g`.
    pub fn gauge_transform(&self, g: &Iso3) -> HolonomySet {
        HolonomySet {
            handles: self
                .handles
                .iter()
                .map(|(a, b)| (g.conjugate(a), g.conjugate(b)))
                .collect(),
            punctures: self.punctures.iter().map(|l| g.conjugate(l)).collect(),
        }
    }

    /// Class labels of the puncture holonomies.
    pub fn puncture_invariants(&self) -> Vec<Result<ClassInvariants>> {
        self.punctures.iter().map(conjugacy_invariants).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("holonomies serialise")
    }

    pub fn from_json(s: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

/// Whether the solved puncture holonomy must land in its labelled class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LastClass {
    /// Report whatever class the solved `L_m` falls in.
    #[default]
    Report,
    /// Fail with [`Error::ClassMismatch`] unless it matches within `1e-9`.
    Demand,
}

/// A sampled flat connection together with the class of the solved generator.
#[derive(Debug, Clone, PartialEq)]
pub struct FlatSample {
    pub holonomies: HolonomySet,
    /// Invariants of `L_m` when `m ≥ 1`; `None` if `m = 0` or `L_m` has `u = −1`.
    pub solved_class: Option<ClassInvariants>,
}

const CLASS_TOL: f64 = 1e-9;

/// Random point of `μ⁻¹(1)`.
///
/// Handles and `L₁…L_{m−1}` are sampled (the latter on their labelled
/// classes) and `L_m` is solved from the relation. Without punctures the
/// handles are sampled in pairs whose commutators cancel, plus one commuting
/// pair when `g` is odd; the sampler is not uniform on the flat locus.
pub fn random_flat_connection<R: Rng + ?Sized>(
    surface: &SurfaceData,
    policy: LastClass,
    rng: &mut R,
) -> Result<FlatSample> {
    let g = surface.genus;
    let m = surface.marked_points();
    if m == 0 {
        let handles = flat_handles(g, rng);
        return Ok(FlatSample {
            holonomies: HolonomySet {
                handles,
                punctures: vec![],
            },
            solved_class: None,
        });
    }
    let handles: Vec<(Iso3, Iso3)> = (0..g)
        .map(|_| (Iso3::random(rng, 1.0), Iso3::random(rng, 1.0)))
        .collect();
    let mut punctures = Vec::with_capacity(m);
    for &(mu, s) in &surface.labels[..m - 1] {
        punctures.push(sample_class(mu, s, rng)?);
    }
    // C · L_m · R = 1  with C the commutator block and R = L_{m−1}···L₁
    let partial = HolonomySet {
        handles: handles.clone(),
        punctures: vec![],
    };
    let c = partial.momentum_map();
    let mut r = Iso3::IDENTITY;
    for l in punctures.iter().rev() {
        r = r.mul(l);
    }
    let last = c.inverse().mul(&r.inverse());
    punctures.push(last);
    let solved_class = conjugacy_invariants(&last).ok();
    if policy == LastClass::Demand {
        let (want_mu, want_s) = surface.labels[m - 1];
        let ok = solved_class
            .map(|c| (c.mu - want_mu).abs() <= CLASS_TOL && (c.s - want_s).abs() <= CLASS_TOL)
            .unwrap_or(false);
        if !ok {
            let got = solved_class.unwrap_or(ClassInvariants {
                mu: f64::NAN,
                s: f64::NAN,
                degenerate: true,
            });
            return Err(Error::ClassMismatch {
                mu: got.mu,
                s: got.s,
                want_mu,
                want_s,
            });
        }
    }
    Ok(FlatSample {
        holonomies: HolonomySet { handles, punctures },
        solved_class,
    })
}

/// Handles with `[B_g,A_g⁻¹]···[B₁,A₁⁻¹] = 1`.
fn flat_handles<R: Rng + ?Sized>(genus: usize, rng: &mut R) -> Vec<(Iso3, Iso3)> {
    let mut handles = Vec::with_capacity(genus);
    if genus % 2 == 1 {
        let a = Iso3::random(rng, 1.0);
        let b = random_commuting(&a, rng);
        handles.push((a, b));
    }
    while handles.len() < genus {
        // [B',A'⁻¹] = [B,A⁻¹]⁻¹ = [A⁻¹,B] for B' = hA⁻¹h⁻¹, A' = hB⁻¹h⁻¹
        // with h in the centraliser of [B,A⁻¹]
        let a = Iso3::random(rng, 1.0);
        let b = Iso3::random(rng, 1.0);
        let c = Iso3::commutator(&b, &a.inverse());
        let h = random_commuting(&c, rng);
        let a2 = h.conjugate(&b.inverse());
        let b2 = h.conjugate(&a.inverse());
        handles.push((a, b));
        handles.push((a2, b2));
    }
    handles
}

/// A random element commuting with `x`.
pub fn random_commuting<R: Rng + ?Sized>(x: &Iso3, rng: &mut R) -> Iso3 {
    let v = match x.u.log() {
        Ok(v) => v,
        // −1 is central in SU(2); the translation part still has to commute
        Err(_) => return Iso3::rotation(Su2::MINUS_ONE),
    };
    let theta = linalg::norm(&v);
    if theta < 1e-12 {
        // pure translation: commutant is rotations about a and all translations
        let t = rng.gen_range(-2.0..2.0);
        let n = if linalg::norm(&x.a) > 0.0 { x.a } else { [0.0, 0.0, 1.0] };
        let n = linalg::scale(1.0 / linalg::norm(&n), &n);
        return Iso3::new(
            linalg::scale(rng.gen_range(-2.0..2.0), &x.a),
            Su2::exp(&linalg::scale(t, &n)),
        );
    }
    let n = linalg::scale(1.0 / theta, &v);
    let w = Su2::exp(&linalg::scale(rng.gen_range(0.1..6.0), &n));
    // (1 − Ad(u)) b = (1 − Ad(w)) a on the plane ⟂ n; b along n is free
    let one_minus = |r: linalg::Mat3| {
        let mut m = linalg::identity3();
        for i in 0..3 {
            for j in 0..3 {
                m[i][j] -= r[i][j];
            }
        }
        m
    };
    let lhs = one_minus(x.u.adjoint_matrix());
    let rhs = one_minus(w.adjoint_matrix());
    let b = match linalg::planar_inverse(&lhs, &n, 1e-12) {
        Some(inv) => linalg::mat_vec(&inv, &linalg::mat_vec(&rhs, &x.a)),
        None => linalg::ZERO3,
    };
    let b = linalg::add(&b, &linalg::scale(rng.gen_range(-2.0..2.0), &n));
    Iso3::new(b, w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rng() -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(11)
    }

    #[test]
    fn surface_validation() {
        assert!(SurfaceData::new(0, vec![]).is_err());
        assert!(SurfaceData::new(0, vec![(7.0, 0.0)]).is_err());
        assert!(SurfaceData::new(1, vec![]).is_ok());
    }

    #[test]
    fn commuting_rotations_give_trivial_momentum() {
        let a = Iso3::rotation(Su2::about_axis3(0.7));
        let b = Iso3::rotation(Su2::about_axis3(-1.9));
        let h = HolonomySet {
            handles: vec![(a, b)],
            punctures: vec![],
        };
        assert!(h.relation_defect() < 1e-15);
    }

    #[test]
    fn single_puncture_momentum_is_the_puncture() {
        let mut r = rng();
        let l = Iso3::random(&mut r, 1.0);
        let h = HolonomySet {
            handles: vec![],
            punctures: vec![l],
        };
        assert_eq!(h.momentum_map(), l);
        let h2 = HolonomySet {
            handles: vec![],
            punctures: vec![l, l.inverse()],
        };
        assert!(h2.relation_defect() < 1e-14);
    }

    #[test]
    fn trivial_and_random_defects() {
        assert_eq!(HolonomySet::trivial(2, 3).relation_defect(), 0.0);
        let mut r = rng();
        let h = HolonomySet {
            handles: vec![(Iso3::random(&mut r, 1.0), Iso3::random(&mut r, 1.0))],
            punctures: vec![Iso3::random(&mut r, 1.0)],
        };
        assert!(h.relation_defect() > 1e-3);
    }

    #[test]
    fn gauge_by_identity_is_noop() {
        let mut r = rng();
        let h = HolonomySet {
            handles: vec![(Iso3::random(&mut r, 1.0), Iso3::random(&mut r, 1.0))],
            punctures: vec![Iso3::random(&mut r, 1.0)],
        };
        let t = h.gauge_transform(&Iso3::IDENTITY);
        for (x, y) in t.punctures.iter().zip(&h.punctures) {
            assert!(x.distance(y) < 1e-15);
        }
    }

    #[test]
    fn two_punctures_solve_to_the_inverse() {
        let mut r = rng();
        let s = SurfaceData::new(0, vec![(1.3, 0.4), (0.0, 0.0)]).unwrap();
        let out = random_flat_connection(&s, LastClass::Report, &mut r).unwrap();
        let l1 = out.holonomies.punctures[0];
        assert!(out.holonomies.punctures[1].distance(&l1.inverse()) < 1e-14);
        let c = out.solved_class.unwrap();
        assert!((c.mu - 1.3).abs() < 1e-10 && (c.s - 0.4).abs() < 1e-10);
    }

    #[test]
    fn torus_with_puncture_solves_commutator() {
        let mut r = rng();
        let s = SurfaceData::new(1, vec![(0.5, 0.0)]).unwrap();
        let out = random_flat_connection(&s, LastClass::Report, &mut r).unwrap();
        let (a, b) = out.holonomies.handles[0];
        let want = Iso3::commutator(&b, &a.inverse()).inverse();
        assert!(out.holonomies.punctures[0].distance(&want) < 1e-14);
    }

    #[test]
    fn demanded_class_mismatch_is_reported() {
        let mut r = rng();
        let s = SurfaceData::new(1, vec![(0.5, 0.0)]).unwrap();
        let err = random_flat_connection(&s, LastClass::Demand, &mut r).unwrap_err();
        assert!(matches!(err, Error::ClassMismatch { .. }));
    }

    #[test]
    fn closed_surfaces_are_flat() {
        let mut r = rng();
        for g in 1..=4 {
            let s = SurfaceData::new(g, vec![]).unwrap();
            for _ in 0..20 {
                let out = random_flat_connection(&s, LastClass::Report, &mut r).unwrap();
                assert!(out.holonomies.relation_defect() <= 1e-10, "g = {g}");
            }
        }
    }

    #[test]
    fn json_roundtrip() {
        let mut r = rng();
        let s = SurfaceData::new(1, vec![(1.0, 0.5), (2.0, -1.0)]).unwrap();
        let h = random_flat_connection(&s, LastClass::Report, &mut r).unwrap().holonomies;
        let json = h.to_json();
        assert!(json.starts_with("{\"handles\":[[[["));
        let back = HolonomySet::from_json(&json).unwrap();
        for (x, y) in back.punctures.iter().zip(&h.punctures) {
            assert!(x.distance(y) < 1e-15);
        }
    }
}
