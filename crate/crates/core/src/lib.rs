//! Classical and quantum structures of ISO(3) gauge theory on surfaces,
//! with numerical certificates for each identity.
//!
//! - [`lie`]: iso(3) and relatives, the classical r-matrix `P_a ⊗ J_a`,
//!   CYBE and bialgebra checks.
//! - [`group`]: SU(2) and ISO(3)~, exponential charts, conjugacy classes and
//!   the κ-deformed momentum addition.
//! - [`moduli`]: holonomies of flat connections on a punctured surface.
//! - [`fock_rosly`]: the Poisson bracket on ISO(3)~ in vector-field and
//!   coordinate form.
//! - [`harmonic`]: Wigner matrices, Haar quadrature and the carrier spaces `H_s`.
//! - [`double`]: the quantum double D(SU(2)) on pure-point elements, its
//!   representations and R-element, and the κ-family tending to `1 + iκr`.

pub mod double;
pub mod error;
pub mod fock_rosly;
pub mod group;
pub mod harmonic;
pub mod lie;
pub mod linalg;
pub mod moduli;

pub use error::{Error, Result};
