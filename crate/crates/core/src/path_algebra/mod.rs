//! Truncated arithmetic in complete path algebras: elements, potentials in
//! cyclic normal form, substitutions and the 2-cycle reduction.

mod elem;
mod map;
mod potential;
mod two_cycle;

pub use elem::{AlgElem, PathWord};
pub use map::AlgebraMap;
pub use potential::Potential;
pub use two_cycle::{two_cycle_reduce, TwoCycleReduction};

use crate::quiver::{QuiverError, VertexId};

/// Default truncation for X7 family work.
pub const DEFAULT_TRUNC: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("empty word where a path of positive length is required")]
    EmptyWord,
    #[error("arrows do not compose: {0}")]
    NotComposable(String),
    #[error("not a cycle: {0}")]
    NotACycle(String),
    #[error("cycle {0} cannot be rotated away from vertex {1}")]
    CycleAtVertex(String, VertexId),
    #[error("image of {0} is not parallel to it")]
    NotParallel(String),
    #[error("rule for {0} has a constant term")]
    RuleHasConstantTerm(String),
    #[error("elements live over different quivers")]
    QuiverMismatch,
    #[error("no image given for arrow {0}")]
    UnmappedArrow(String),
    #[error("no image given for vertex {0}")]
    UnmappedVertex(VertexId),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
}

#[cfg(test)]
mod tests;
