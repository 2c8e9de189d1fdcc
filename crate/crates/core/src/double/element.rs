//! Pure-point elements `F(h, v) = Σᵢ fᵢ(h) δ_{wᵢ}(v)` of the quantum double
//! and of its momentum-space pull-backs, with the Hopf operations.

use num_complex::Complex64;
use std::fmt;
use std::sync::Arc;

use crate::error::Result;
use crate::group::{Momentum, Su2};
use crate::linalg;

/// Two group elements closer than this are treated as the same delta location.
pub const WEIGHT_TOL: f64 = 1e-9;

/// First argument of an element: SU(2) itself, or momentum space via a pull-back.
pub trait FirstArgument: Clone + Send + Sync + 'static {
    fn identity() -> Self;
    /// The image of `h` under `h ↦ w⁻¹ h w`.
    fn conjugate_inverse(&self, w: &Su2) -> Self;
}

impl FirstArgument for Su2 {
    fn identity() -> Self {
        Su2::IDENTITY
    }

    fn conjugate_inverse(&self, w: &Su2) -> Self {
        w.inverse().mul(self).mul(w)
    }
}

impl FirstArgument for Momentum {
    fn identity() -> Self {
        linalg::ZERO3
    }

    fn conjugate_inverse(&self, w: &Su2) -> Self {
        w.inverse().rotate(self)
    }
}

/// Coefficient function of one term.
#[derive(Clone)]
pub enum TermFn<D> {
    Constant(Complex64),
    Function(Arc<dyn Fn(&D) -> Complex64 + Send + Sync>),
}

impl<D: FirstArgument> TermFn<D> {
    pub fn function<F: Fn(&D) -> Complex64 + Send + Sync + 'static>(f: F) -> Self {
        TermFn::Function(Arc::new(f))
    }

    pub fn eval(&self, h: &D) -> Complex64 {
        match self {
            TermFn::Constant(c) => *c,
            TermFn::Function(f) => f(h),
        }
    }

    pub fn is_constant(&self) -> bool {
        matches!(self, TermFn::Constant(_))
    }

    fn arc(&self) -> Arc<dyn Fn(&D) -> Complex64 + Send + Sync> {
        match self {
            TermFn::Constant(c) => {
                let c = *c;
                Arc::new(move |_: &D| c)
            }
            TermFn::Function(f) => f.clone(),
        }
    }
}

impl<D> fmt::Debug for TermFn<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermFn::Constant(c) => write!(f, "Constant({c})"),
            TermFn::Function(_) => write!(f, "Function(..)"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct PurePointElement<D> {
    pub terms: Vec<(TermFn<D>, Su2)>,
}

impl<D: FirstArgument> PurePointElement<D> {
    pub fn new(terms: Vec<(TermFn<D>, Su2)>) -> Self {
        Self { terms }
    }

    /// `(h ↦ 1) δ_e`.
    pub fn unit() -> Self {
        Self::delta(Su2::IDENTITY)
    }

    /// The group-algebra element `(h ↦ 1) δ_w`.
    pub fn delta(w: Su2) -> Self {
        Self::new(vec![(TermFn::Constant(Complex64::new(1.0, 0.0)), w)])
    }

    pub fn scale(&self, k: Complex64) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(f, w)| {
                let g = match f {
                    TermFn::Constant(c) => TermFn::Constant(c * k),
                    TermFn::Function(f) => {
                        let f = f.clone();
                        TermFn::function(move |h: &D| k * f(h))
                    }
                };
                (g, *w)
            })
            .collect();
        Self::new(terms)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Self::new(terms)
    }

    /// Coefficient of `δ_w` at first argument `h`.
    pub fn density(&self, h: &D, w: &Su2) -> Complex64 {
        self.terms
            .iter()
            .filter(|(_, wi)| wi.distance(w) < WEIGHT_TOL)
            .map(|(f, _)| f.eval(h))
            .sum()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(f, _)| f.is_constant())
    }

    /// `Σᵢ sup_h |fᵢ(h)|` over the given samples.
    pub fn norm_one_estimate(&self, samples: &[D]) -> f64 {
        self.terms
            .iter()
            .map(|(f, _)| samples.iter().map(|h| f.eval(h).norm()).fold(0.0, f64::max))
            .sum()
    }

    pub fn to_multi(&self) -> MultiSlotElement<D> {
        let terms = self
            .terms
            .iter()
            .map(|(f, w)| {
                let f = f.arc();
                let g: SlotFn<D> = Arc::new(move |hs: &[D]| Ok(f(&hs[0])));
                (g, vec![*w])
            })
            .collect();
        MultiSlotElement { slots: 1, terms }
    }
}

/// Product with the delta integration done exactly:
/// `(f, w) • (g, u) = (h ↦ f(h) g(w⁻¹ h w), w u)`.
pub fn dsu2_multiply<D: FirstArgument>(a: &PurePointElement<D>, b: &PurePointElement<D>) -> PurePointElement<D> {
    let mut terms = Vec::with_capacity(a.terms.len() * b.terms.len());
    for (f, w) in &a.terms {
        for (g, u) in &b.terms {
            let prod = match (f, g) {
                (TermFn::Constant(x), TermFn::Constant(y)) => TermFn::Constant(x * y),
                _ => {
                    let (f, g, w) = (f.clone(), g.clone(), *w);
                    TermFn::function(move |h: &D| f.eval(h) * g.eval(&h.conjugate_inverse(&w)))
                }
            };
            terms.push((prod, w.mul(u)));
        }
    }
    PurePointElement::new(terms)
}

/// `ε(F) = Σᵢ fᵢ(e)`.
pub fn dsu2_counit<D: FirstArgument>(f: &PurePointElement<D>) -> Complex64 {
    let e = D::identity();
    f.terms.iter().map(|(g, _)| g.eval(&e)).sum()
}

/// `SF(h, u) = F(u⁻¹h⁻¹u, u⁻¹)`, term-wise `(f, w) ↦ (h ↦ f(w h⁻¹ w⁻¹), w⁻¹)`.
pub fn dsu2_antipode(f: &PurePointElement<Su2>) -> PurePointElement<Su2> {
    let terms = f
        .terms
        .iter()
        .map(|(g, w)| {
            let wi = w.inverse();
            let t = match g {
                TermFn::Constant(c) => TermFn::Constant(*c),
                TermFn::Function(g) => {
                    let (g, w) = (g.clone(), *w);
                    TermFn::function(move |h: &Su2| g(&w.mul(&h.inverse()).mul(&wi)))
                }
            };
            (t, wi)
        })
        .collect();
    PurePointElement::new(terms)
}

/// `ΔF(h₁, u₁, h₂, u₂) = F(h₁h₂, u₁) δ_{u₁}(u₂)`.
pub fn dsu2_comultiply(f: &PurePointElement<Su2>) -> MultiSlotElement<Su2> {
    comultiply_slot(&f.to_multi(), 0, &su2_compose)
}

pub fn su2_compose(a: &Su2, b: &Su2) -> Result<Su2> {
    Ok(a.mul(b))
}

pub type SlotFn<D> = Arc<dyn Fn(&[D]) -> Result<Complex64> + Send + Sync>;

/// Composition law of the first argument used by a coproduct.
pub type Compose<D> = dyn Fn(&D, &D) -> Result<D> + Send + Sync;

/// Element of a tensor power: terms `φ(h₁, …, h_n) δ_{w₁}(v₁)⋯δ_{w_n}(v_n)`.
#[derive(Clone)]
pub struct MultiSlotElement<D> {
    pub slots: usize,
    pub terms: Vec<(SlotFn<D>, Vec<Su2>)>,
}

impl<D> fmt::Debug for MultiSlotElement<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MultiSlotElement")
            .field("slots", &self.slots)
            .field("weights", &self.terms.iter().map(|t| &t.1).collect::<Vec<_>>())
            .finish()
    }
}

impl<D: FirstArgument> MultiSlotElement<D> {
    /// Tensor product of single-slot elements.
    pub fn tensor(factors: &[PurePointElement<D>]) -> Self {
        let mut out = MultiSlotElement {
            slots: 0,
            terms: vec![(Arc::new(|_: &[D]| Ok(Complex64::new(1.0, 0.0))) as SlotFn<D>, vec![])],
        };
        for factor in factors {
            let slot = out.slots;
            let mut terms = vec![];
            for (phi, ws) in &out.terms {
                for (f, w) in &factor.terms {
                    let (phi, f) = (phi.clone(), f.arc());
                    let g: SlotFn<D> = Arc::new(move |hs: &[D]| Ok(phi(&hs[..slot])? * f(&hs[slot])));
                    let mut ws = ws.clone();
                    ws.push(*w);
                    terms.push((g, ws));
                }
            }
            out = MultiSlotElement { slots: slot + 1, terms };
        }
        out
    }

    /// Coefficient of `δ_{w₁}⋯δ_{w_n}` at `hs`.
    pub fn density(&self, hs: &[D], ws: &[Su2]) -> Result<Complex64> {
        let mut total = Complex64::new(0.0, 0.0);
        for (phi, wt) in &self.terms {
            if same_weights(wt, ws) {
                total += phi(hs)?;
            }
        }
        Ok(total)
    }

    /// Distinct delta locations, merged within `WEIGHT_TOL`.
    pub fn weight_clusters(&self) -> Vec<Vec<Su2>> {
        let mut out: Vec<Vec<Su2>> = vec![];
        for (_, ws) in &self.terms {
            if !out.iter().any(|c| same_weights(c, ws)) {
                out.push(ws.clone());
            }
        }
        out
    }
}

fn same_weights(a: &[Su2], b: &[Su2]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.distance(y) < WEIGHT_TOL)
}

/// `max |A − B|` over all delta locations of either element and the given argument samples.
pub fn max_difference<D: FirstArgument>(
    a: &MultiSlotElement<D>,
    b: &MultiSlotElement<D>,
    samples: &[Vec<D>],
) -> Result<f64> {
    let mut clusters = a.weight_clusters();
    for c in b.weight_clusters() {
        if !clusters.iter().any(|x| same_weights(x, &c)) {
            clusters.push(c);
        }
    }
    let mut worst = 0.0_f64;
    for ws in &clusters {
        for hs in samples {
            worst = worst.max((a.density(hs, ws)? - b.density(hs, ws)?).norm());
        }
    }
    Ok(worst)
}

/// Applies a coproduct to slot `slot`, producing `slots + 1` slots:
/// `φ(…, h, …) δ_w ↦ φ(…, h ∘ h', …) δ_w δ_w`.
pub fn comultiply_slot<D: FirstArgument>(
    f: &MultiSlotElement<D>,
    slot: usize,
    compose: &(impl Fn(&D, &D) -> Result<D> + Clone + Send + Sync + 'static),
) -> MultiSlotElement<D> {
    let terms = f
        .terms
        .iter()
        .map(|(phi, ws)| {
            let (phi, compose) = (phi.clone(), compose.clone());
            let g: SlotFn<D> = Arc::new(move |hs: &[D]| {
                let mut args: Vec<D> = Vec::with_capacity(hs.len() - 1);
                args.extend_from_slice(&hs[..slot]);
                args.push(compose(&hs[slot], &hs[slot + 1])?);
                args.extend_from_slice(&hs[slot + 2..]);
                phi(&args)
            });
            let mut ws = ws.clone();
            ws.insert(slot, ws[slot]);
            (g, ws)
        })
        .collect();
    MultiSlotElement {
        slots: f.slots + 1,
        terms,
    }
}

/// Applies the counit to slot `slot`: `φ(…, h, …) ↦ φ(…, e, …)` and drops that delta.
pub fn counit_slot<D: FirstArgument>(f: &MultiSlotElement<D>, slot: usize) -> MultiSlotElement<D> {
    let terms = f
        .terms
        .iter()
        .map(|(phi, ws)| {
            let phi = phi.clone();
            let g: SlotFn<D> = Arc::new(move |hs: &[D]| {
                let mut args = hs.to_vec();
                args.insert(slot, D::identity());
                phi(&args)
            });
            let mut ws = ws.clone();
            ws.remove(slot);
            (g, ws)
        })
        .collect();
    MultiSlotElement {
        slots: f.slots - 1,
        terms,
    }
}

/// Antipode in slot `slot` of an SU(2) element.
pub fn antipode_slot(f: &MultiSlotElement<Su2>, slot: usize) -> MultiSlotElement<Su2> {
    let terms = f
        .terms
        .iter()
        .map(|(phi, ws)| {
            let phi = phi.clone();
            let w = ws[slot];
            let wi = w.inverse();
            let g: SlotFn<Su2> = Arc::new(move |hs: &[Su2]| {
                let mut args = hs.to_vec();
                args[slot] = w.mul(&hs[slot].inverse()).mul(&wi);
                phi(&args)
            });
            let mut ws = ws.clone();
            ws[slot] = wi;
            (g, ws)
        })
        .collect();
    MultiSlotElement { slots: f.slots, terms }
}

/// Multiplies slots `slot` and `slot + 1` together:
/// `φ(…, h₁, h₂, …) δ_a δ_b ↦ φ(…, h, a⁻¹ h a, …) δ_{ab}`.
pub fn multiply_slots<D: FirstArgument>(f: &MultiSlotElement<D>, slot: usize) -> MultiSlotElement<D> {
    let terms = f
        .terms
        .iter()
        .map(|(phi, ws)| {
            let phi = phi.clone();
            let a = ws[slot];
            let g: SlotFn<D> = Arc::new(move |hs: &[D]| {
                let mut args = hs.to_vec();
                args.insert(slot + 1, hs[slot].conjugate_inverse(&a));
                phi(&args)
            });
            let mut ws = ws.clone();
            ws[slot] = a.mul(&ws[slot + 1]);
            ws.remove(slot + 1);
            (g, ws)
        })
        .collect();
    MultiSlotElement {
        slots: f.slots - 1,
        terms,
    }
}
