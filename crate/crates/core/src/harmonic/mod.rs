//! Harmonic analysis on SU(2): Wigner matrices, Haar quadrature and the
//! truncated carrier spaces `H_s`.

pub mod carrier;
pub mod quadrature;
pub mod wigner;

pub use carrier::{
    angular_momentum_apply, equivariance_defect, evaluate_state, left_translate, project, project_exact,
    u1_character, CarrierState, FunctionState, Projection, PROJECTION_LIMIT,
};
pub use quadrature::{haar_integrate, GroupGrid};
pub use wigner::{spin_matrices, wigner_entry, wigner_matrix, CMatrix, WignerIndex, DEFAULT_TWO_J_CAP};
