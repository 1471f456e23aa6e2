//! Exact rational arithmetic, simplex, span tests and V/H conversion.

pub mod convert;
pub mod dd;
pub mod fm;
pub mod hrep;
pub mod linalg;
pub mod lp;
pub mod rational;

use thiserror::Error;

pub use convert::{hrep_to_vrep, vrep_to_hrep};
pub use fm::project;
pub use hrep::{canonicalize, canonicalize_vrep, HRep, Row, VRep};
pub use linalg::{span_membership, SpanMembership};
pub use lp::{lp_solve, LpOutcome, LpStatus, Sense};
pub use rational::{ExtRat, Int, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("polyhedron is empty")]
    Empty,
    #[error("polyhedron contains a line")]
    NonPointed,
    #[error("V-representation has no vertices")]
    NoVertices,
}
