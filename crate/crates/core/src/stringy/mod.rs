//! Obstruction-bundle bookkeeping and the stringy product on decomposed
//! sector elements.

mod eigen;
mod element;
mod product;

use thiserror::Error;

use crate::cyclotomic::CycloError;
use crate::group::GroupError;
use crate::sector::SectorError;

pub use eigen::{EigenSummand, LocalEigenData, ObstructionSelection};
pub use element::SectorElement;
pub use product::StringyRing;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StringyError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Sector(#[from] SectorError),
    #[error(transparent)]
    Cyclo(#[from] CycloError),
    #[error("invalid eigen data: {0}")]
    EigenData(String),
    #[error("sector {sector}, component {h}: {reason}")]
    Unsupported { sector: String, h: String, reason: String },
    #[error("the obstruction bundle for ({g}, {h}) is nonzero; only trivial obstructions are handled")]
    Obstruction { g: String, h: String },
    #[error("invalid sector element: {0}")]
    Json(String),
}
