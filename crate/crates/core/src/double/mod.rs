//! The pure-point part of the quantum double D(SU(2)), its representations,
//! R-element, and the momentum-space family `A_κ`.

pub mod element;
pub mod euclid;
pub mod rep;

pub use element::{
    antipode_slot, comultiply_slot, counit_slot, dsu2_antipode, dsu2_comultiply, dsu2_counit, dsu2_multiply,
    max_difference, multiply_slots, su2_compose, FirstArgument, MultiSlotElement, PurePointElement, TermFn,
};
pub use rep::{
    double_rep_apply, double_rep_apply_fn, qybe_residual, r_apply_slots, r_element_apply, DoubleIrrepLabel,
    TensorState, WignerTensor,
};
pub use euclid::{
    a0_coproduct, classical_r_apply, coproduct_kappa, euclidean_rep_apply, generator_apply, plane_wave,
    plane_wave_apply, r_kappa_apply, r_limit_residual, EuclideanIrrepLabel, Generator,
};
