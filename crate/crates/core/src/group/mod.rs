//! Group calculus on SU(2) and ISO(3)~.

pub mod iso3;
pub mod momentum;
pub mod orbit;
pub mod su2;

pub use iso3::Iso3;
pub use momentum::{exp_kappa, log_kappa, momentum_add_bch, momentum_add_exact, Kappa, Momentum};
pub use orbit::{
    conjugacy_invariants, exp_star, log_star, sample_class, sample_orbit, ClassInvariants,
    CoadjointPoint, OrbitSample,
};
pub use su2::Su2;
