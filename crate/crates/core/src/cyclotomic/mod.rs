//! Exact cyclotomic arithmetic, roots of unity, 2-cocycles with their
//! transgressions and trivializations, and traces of cyclic representations.

mod cocycle;
mod number;
mod rep;
mod root;

use thiserror::Error;

pub use cocycle::{Cocycle2, CyclicTrivialization};
pub use number::{cyclotomic_polynomial, euler_phi, CyclotomicNumber};
pub use rep::{trace_at, twisted_invariants_rank, CyclicRepresentation};
pub use root::RootOfUnity;

use crate::group::GroupError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycloError {
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("cannot move from conductor {from} to conductor {to}")]
    ConductorMismatch { from: u32, to: u32 },
    #[error("representation of Z/{found} evaluated on an element of order {expected}")]
    OrderMismatch { expected: u32, found: u32 },
    #[error("cocycle identity fails at ({g}; {h}; {k})")]
    NotACocycle { g: String, h: String, k: String },
    #[error("cocycle is not normalized")]
    NotNormalized,
    #[error("transgression is not a homomorphism")]
    NotMultiplicative,
    #[error(transparent)]
    Group(#[from] GroupError),
}
