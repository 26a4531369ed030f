//! Exact linear algebra over the integers, the rationals and prime fields.

mod hnf;
mod matrix;
pub mod primes;
mod rank;

pub use hnf::{as_integer, bad_primes, hnf, integer_matrix, lattice_index, Hnf, LatticeIndex};
pub use matrix::ExactMatrix;
pub use rank::{bareiss, determinant, pivot_columns, rank, rank_mod_p, rank_rational};

use crate::coeff::Ring;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("rank over the integers is not defined; use Rationals or a prime field")]
    IntegerRingUnsupported,
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(Ring, Ring),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("entry is not an integer")]
    NonIntegral,
    #[error("a denominator is divisible by {0}")]
    DenominatorDivisibleBy(u64),
    #[error("lattice is rank deficient")]
    RankDeficient,
    #[error("matrix text: {0}")]
    Parse(String),
}
