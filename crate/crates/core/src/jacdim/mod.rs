//! Dimensions of Jacobian-type algebras `K<<x_1..x_n>> / I` through the
//! filtration by powers of the maximal ideal.

mod graded;
mod macaulay;
mod presentation;
mod profile;

pub use graded::{
    graded_class_dimension, graded_infinite_check, CommutativityRelation, GradedQP, GradedVerdict,
};
pub use macaulay::{build_mr, col_count, column_of, row_count, word_at};
pub use presentation::{free_cyclic_derivative, jacobi_generators, IdealPresentation};
pub use profile::{
    conclude_dimension, dimension_profile, profile_matrix, transfer_to_primes, DimConclusion,
    DimProfile, PrimeTransfer,
};

use crate::coeff::Ring;
use crate::linalg::LinalgError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum JacdimError {
    #[error("series has a constant term")]
    ConstantTerm,
    #[error("series uses y-letters; Jacobian generators need a series in x only")]
    UsesY,
    #[error("bad generator: {0}")]
    BadGenerator(String),
    #[error("unsupported ring {0}")]
    UnsupportedRing(Ring),
    #[error("r = {r} is below the valuation e = {e}")]
    RTooSmall { r: usize, e: usize },
    #[error("profile invariant violated: {0}")]
    ProfileInvariant(String),
    #[error("d_{0} is not zero over the rationals")]
    NotZeroOverRationals(usize),
    #[error("bad augmentation: {0}")]
    BadAugmentation(String),
    #[error("augmented lattice is not of full rank")]
    AugmentationNotFullRank,
    #[error("relation is not a homogeneous commutativity relation: {0}")]
    InhomogeneousRelation(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
