use std::collections::BTreeSet;

use num_bigint::BigUint;

use crate::coeff::Ring;
use crate::linalg::{self, ExactMatrix, LatticeIndex};

use super::macaulay::{build_mr, col_count, column_of, row_count};
use super::{IdealPresentation, JacdimError};

/// `d_s = dim (I + m^s) / (I + m^{s+1})` for `s = 0..=r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimProfile {
    pub ring: Ring,
    pub d: Vec<usize>,
}

/// What a profile proves about `dim A / I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DimConclusion {
    /// Some `d_s` vanished, so the quotient has exactly this dimension.
    Finite(usize),
    /// No `d_s` vanished yet; the quotient has at least this dimension.
    Unknown(usize),
}

/// Ranks of the nested blocks `M_s` for `s` in `e+1..=r+1`, indexed by `s`.
fn block_ranks(p: &IdealPresentation, m: &ExactMatrix, r: usize) -> Vec<Option<usize>> {
    let mut ranks = vec![None; r + 2];
    for (s, slot) in ranks.iter_mut().enumerate().skip(p.e() + 1) {
        let b = m.block(row_count(p, s), col_count(p, s));
        *slot = Some(linalg::rank(&b).expect("rationals or prime field"));
    }
    ranks
}

fn profile_from_ranks(p: &IdealPresentation, r: usize, ranks: &[Option<usize>]) -> Vec<usize> {
    let n = p.n();
    let e = p.e();
    (0..=r)
        .map(|s| {
            let ns = n.pow(s as u32);
            if s < e {
                ns
            } else if s == e {
                ns - ranks[e + 1].expect("computed")
            } else {
                ns + ranks[s].expect("computed") - ranks[s + 1].expect("computed")
            }
        })
        .collect()
}

fn matrix_over(p: &IdealPresentation, r: usize, ring: Ring) -> Result<ExactMatrix, JacdimError> {
    let m = build_mr(p, r + 1);
    match ring {
        Ring::Rationals => Ok(m),
        Ring::PrimeField(_) => Ok(m.over(ring)?),
        Ring::Integers => Err(JacdimError::UnsupportedRing(ring)),
    }
}

/// The profile `d_0..d_r` over the given field.
pub fn dimension_profile(
    p: &IdealPresentation,
    r: usize,
    ring: Ring,
) -> Result<DimProfile, JacdimError> {
    if r < p.e() {
        return Err(JacdimError::RTooSmall { r, e: p.e() });
    }
    let m = matrix_over(p, r, ring)?;
    let ranks = block_ranks(p, &m, r);
    let d = profile_from_ranks(p, r, &ranks);
    check_profile(p.n(), &d)?;
    Ok(DimProfile { ring, d })
}

/// The matrix `M_{r+1}` that [`dimension_profile`] reduces, for inspection.
pub fn profile_matrix(
    p: &IdealPresentation,
    r: usize,
    ring: Ring,
) -> Result<ExactMatrix, JacdimError> {
    matrix_over(p, r, ring)
}

fn check_profile(n: usize, d: &[usize]) -> Result<(), JacdimError> {
    for (s, &ds) in d.iter().enumerate() {
        if ds > n.pow(s as u32) {
            return Err(JacdimError::ProfileInvariant(format!(
                "d_{s} = {ds} exceeds n^{s}"
            )));
        }
        if s > 0 && d[s - 1] == 0 && ds != 0 {
            return Err(JacdimError::ProfileInvariant(format!(
                "d_{s} = {ds} after a zero"
            )));
        }
    }
    Ok(())
}

/// Finite with the total when some entry vanished, otherwise the partial sum.
pub fn conclude_dimension(d: &[usize]) -> DimConclusion {
    let total = d.iter().sum();
    if d.contains(&0) {
        DimConclusion::Finite(total)
    } else {
        DimConclusion::Unknown(total)
    }
}

/// Certificate that `d_r = 0` over `F_p` for every prime outside
/// `bad_primes`, given `d_r = 0` over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeTransfer {
    /// `rank_Q M_{r+1}`.
    pub rank: usize,
    pub index: BigUint,
    pub bad_primes: BTreeSet<BigUint>,
    /// Columns of the unit vectors used to complete the lattice.
    pub aug_columns: Vec<usize>,
    pub rational_profile: DimProfile,
}

/// Completes the row lattice of `M_{r+1}` with unit vectors at `aug_words`
/// (or, when absent, at the non-pivot columns of an echelon form) and
/// returns its index and the primes dividing it. Requires integral
/// generators and `d_r = 0` over the rationals.
pub fn transfer_to_primes(
    p: &IdealPresentation,
    r: usize,
    aug_words: Option<&[Vec<u16>]>,
) -> Result<PrimeTransfer, JacdimError> {
    let rational_profile = dimension_profile(p, r, Ring::Rationals)?;
    if rational_profile.d[r] != 0 {
        return Err(JacdimError::NotZeroOverRationals(r));
    }
    let m = build_mr(p, r + 1);
    let rank = linalg::rank_rational(&m);
    let cols = m.ncols();
    let aug_columns: Vec<usize> = match aug_words {
        Some(words) => {
            let mut out = Vec::new();
            for w in words {
                if w.len() < p.e() || w.len() > r || w.iter().any(|&l| l as usize >= p.n()) {
                    return Err(JacdimError::BadAugmentation(format!(
                        "{w:?} is not a column of M_{}",
                        r + 1
                    )));
                }
                out.push(column_of(p, w));
            }
            out
        }
        None => non_pivot_columns(&m),
    };
    let mut aug = ExactMatrix::zeros(Ring::Rationals, 0, cols);
    for &c in &aug_columns {
        aug.push_row(vec![(c, num_rational::BigRational::from_integer(1.into()))]);
    }
    let full = m.vstack(&aug)?;
    if linalg::rank_rational(&full) != cols {
        return Err(JacdimError::AugmentationNotFullRank);
    }
    let integral = full.over(Ring::Integers)?;
    let index = match linalg::lattice_index(&integral)? {
        LatticeIndex::Finite(i) => i,
        LatticeIndex::Infinite => return Err(JacdimError::AugmentationNotFullRank),
    };
    let bad_primes = linalg::primes::prime_factors(&index).into_keys().collect();
    Ok(PrimeTransfer {
        rank,
        index,
        bad_primes,
        aug_columns,
        rational_profile,
    })
}

/// Columns without a pivot in the rational echelon form, which is where
/// unit vectors complete the row space.
fn non_pivot_columns(m: &ExactMatrix) -> Vec<usize> {
    let mut is_pivot = vec![false; m.ncols()];
    for c in linalg::pivot_columns(m) {
        is_pivot[c] = true;
    }
    (0..m.ncols()).filter(|&c| !is_pivot[c]).collect()
}
