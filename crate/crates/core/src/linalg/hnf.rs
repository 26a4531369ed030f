//! Hermite normal form and lattice indices over the integers.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::primes::prime_factors;
use super::{ExactMatrix, LinalgError};
use crate::coeff::Ring;

/// Row-style Hermite normal form: `u * m == h`, with `u` unimodular and `h`
/// in echelon form with positive pivots and entries above each pivot
/// reduced into `0..pivot`. Zero rows sit at the bottom of `h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hnf {
    pub h: Vec<Vec<BigInt>>,
    pub u: Vec<Vec<BigInt>>,
    /// Column of each nonzero row's pivot.
    pub pivots: Vec<usize>,
}

/// Index of a row lattice in `Z^cols`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeIndex {
    Finite(BigUint),
    Infinite,
}

fn integer_dense(m: &ExactMatrix) -> Result<Vec<Vec<BigInt>>, LinalgError> {
    if m.ring() != Ring::Integers {
        return Err(LinalgError::RingMismatch(m.ring(), Ring::Integers));
    }
    let mut a = vec![vec![BigInt::zero(); m.ncols()]; m.nrows()];
    for (i, row) in a.iter_mut().enumerate() {
        for (j, v) in m.row(i) {
            if !v.is_integer() {
                return Err(LinalgError::NonIntegral);
            }
            row[*j] = v.to_integer();
        }
    }
    Ok(a)
}

fn axpy(dst: &mut [BigInt], q: &BigInt, src: &[BigInt]) {
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d -= q * s;
        }
    }
}

/// Hermite normal form of an integer matrix, with transform.
pub fn hnf(m: &ExactMatrix) -> Result<Hnf, LinalgError> {
    let mut a = integer_dense(m)?;
    let nr = a.len();
    let nc = m.ncols();
    let mut u: Vec<Vec<BigInt>> = (0..nr)
        .map(|i| {
            (0..nr)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut pr = 0;
    for c in 0..nc {
        if pr == nr {
            break;
        }
        loop {
            let nz: Vec<usize> = (pr..nr).filter(|&i| !a[i][c].is_zero()).collect();
            if nz.is_empty() {
                break;
            }
            let best = *nz.iter().min_by_key(|&&i| a[i][c].abs()).expect("nonempty");
            a.swap(pr, best);
            u.swap(pr, best);
            if nz.len() == 1 {
                break;
            }
            let (head, tail) = a.split_at_mut(pr + 1);
            let (uh, ut) = u.split_at_mut(pr + 1);
            for (ri, ui) in tail.iter_mut().zip(ut.iter_mut()) {
                if ri[c].is_zero() {
                    continue;
                }
                let q = ri[c].div_floor(&head[pr][c]);
                axpy(ri, &q, &head[pr]);
                axpy(ui, &q, &uh[pr]);
            }
        }
        if a[pr][c].is_zero() {
            continue;
        }
        if a[pr][c].is_negative() {
            a[pr].iter_mut().for_each(|v| *v = -v.clone());
            u[pr].iter_mut().for_each(|v| *v = -v.clone());
        }
        let (above, rest) = a.split_at_mut(pr);
        let (uabove, urest) = u.split_at_mut(pr);
        for (ri, ui) in above.iter_mut().zip(uabove.iter_mut()) {
            let q = ri[c].div_floor(&rest[0][c]);
            if !q.is_zero() {
                axpy(ri, &q, &rest[0]);
                axpy(ui, &q, &urest[0]);
            }
        }
        pivots.push(c);
        pr += 1;
    }
    Ok(Hnf { h: a, u, pivots })
}

/// Index of the lattice spanned by the rows of an integer matrix inside
/// `Z^cols`: the product of the pivots of a triangular basis, or `Infinite`
/// when the rows do not span a full-rank lattice.
pub fn lattice_index(m: &ExactMatrix) -> Result<LatticeIndex, LinalgError> {
    let basis = triangular_basis(m)?;
    if basis.iter().any(Option::is_none) {
        return Ok(LatticeIndex::Infinite);
    }
    let mut idx = BigInt::one();
    for row in basis.into_iter().flatten() {
        idx *= row[0].1.abs();
    }
    Ok(LatticeIndex::Finite(idx.to_biguint().expect("positive")))
}

/// Primes dividing the index of a full-rank row lattice.
pub fn bad_primes(m: &ExactMatrix) -> Result<BTreeSet<BigUint>, LinalgError> {
    match lattice_index(m)? {
        LatticeIndex::Finite(i) => Ok(prime_factors(&i).into_keys().collect()),
        LatticeIndex::Infinite => Err(LinalgError::RankDeficient),
    }
}

type Row = Vec<(u32, BigInt)>;

/// Triangular basis of the row lattice built by inserting rows one at a time
/// with extended-gcd steps (unimodular, so the lattice is unchanged). Slot `c`
/// holds the basis row whose leading column is `c`.
fn triangular_basis(m: &ExactMatrix) -> Result<Vec<Option<Row>>, LinalgError> {
    if m.ring() != Ring::Integers {
        return Err(LinalgError::RingMismatch(m.ring(), Ring::Integers));
    }
    let mut basis: Vec<Option<Row>> = vec![None; m.ncols()];
    for i in 0..m.nrows() {
        let mut r: Row = Vec::with_capacity(m.row(i).len());
        for (j, v) in m.row(i) {
            if !v.is_integer() {
                return Err(LinalgError::NonIntegral);
            }
            r.push((*j as u32, v.to_integer()));
        }
        while !r.is_empty() {
            let c = r[0].0 as usize;
            let Some(b) = basis[c].take() else {
                if r[0].1.sign() == Sign::Minus {
                    r.iter_mut().for_each(|e| e.1 = -e.1.clone());
                }
                basis[c] = Some(r);
                break;
            };
            let (x, y) = (&b[0].1, &r[0].1);
            if y.is_multiple_of(x) {
                let q = y / x;
                r = lin(&BigInt::one(), &r, &q, &b, true);
                basis[c] = Some(b);
                continue;
            }
            let e = x.extended_gcd(y);
            // [s t; -y/g x/g] has determinant 1.
            let new_b = lin(&e.x, &b, &-e.y.clone(), &r, false);
            let new_r = lin(&(x / &e.gcd), &r, &(y / &e.gcd), &b, true);
            basis[c] = Some(new_b);
            r = new_r;
        }
    }
    reduce_above(&mut basis);
    Ok(basis)
}

/// `a*r - b*s`. With `drop_lead`, the shared leading column is known to
/// cancel and is dropped.
fn lin(a: &BigInt, r: &Row, b: &BigInt, s: &Row, drop_lead: bool) -> Row {
    if drop_lead {
        return super::rank::combine_big(a, r, b, s);
    }
    let mut out = Vec::with_capacity(r.len() + s.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < s.len() {
        let ci = r.get(i).map_or(u32::MAX, |e| e.0);
        let cj = s.get(j).map_or(u32::MAX, |e| e.0);
        let v = if ci < cj {
            i += 1;
            (ci, a * &r[i - 1].1)
        } else if cj < ci {
            j += 1;
            (cj, -(b * &s[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (ci, a * &r[i - 1].1 - b * &s[j - 1].1)
        };
        if !v.1.is_zero() {
            out.push(v);
        }
    }
    if out.first().is_some_and(|e| e.1.is_negative()) {
        out.iter_mut().for_each(|e| e.1 = -e.1.clone());
    }
    out
}

/// Reduces entries above pivots to keep the basis small; the lattice and
/// the pivots are unchanged.
fn reduce_above(basis: &mut [Option<Row>]) {
    let cols: Vec<usize> = (0..basis.len()).filter(|&c| basis[c].is_some()).collect();
    for (k, &c) in cols.iter().enumerate() {
        let pivot_row = basis[c].clone().expect("present");
        let p = pivot_row[0].1.clone();
        for &c2 in &cols[..k] {
            let row = basis[c2].as_mut().expect("present");
            if let Ok(pos) = row.binary_search_by_key(&(c as u32), |e| e.0) {
                let q = row[pos].1.div_floor(&p);
                if !q.is_zero() {
                    *row = lin(&BigInt::one(), row, &q, &pivot_row, false);
                }
            }
        }
    }
}

/// Dense rows as an `Integers` matrix, for tests and callers that build
/// lattices by hand.
pub fn integer_matrix(rows: &[Vec<i64>], cols: usize) -> ExactMatrix {
    ExactMatrix::from_i64_rows(Ring::Integers, cols, rows)
}

/// Converts a matrix over the rationals with integral entries to `Integers`.
pub fn as_integer(m: &ExactMatrix) -> Result<ExactMatrix, LinalgError> {
    m.over(Ring::Integers)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mul(u: &[Vec<BigInt>], m: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
        u.iter()
            .map(|row| {
                (0..m[0].len())
                    .map(|j| row.iter().zip(m).map(|(a, r)| a * &r[j]).sum())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn hnf_transform_identity() {
        let rows = vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]];
        let m = integer_matrix(&rows, 3);
        let out = hnf(&m).unwrap();
        let dense: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        assert_eq!(mul(&out.u, &dense), out.h);
        let expect: Vec<Vec<i64>> = vec![vec![2, 4, 4], vec![0, 6, 0], vec![0, 0, 12]];
        let expect: Vec<Vec<BigInt>> = expect
            .iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        assert_eq!(out.h, expect);
        assert_eq!(
            lattice_index(&m).unwrap(),
            LatticeIndex::Finite(BigUint::from(144u32))
        );
    }

    #[test]
    fn index_of_rank_deficient_lattice() {
        let m = integer_matrix(&[vec![1, 2], vec![2, 4]], 2);
        assert_eq!(lattice_index(&m).unwrap(), LatticeIndex::Infinite);
        assert_eq!(bad_primes(&m), Err(LinalgError::RankDeficient));
        let m = integer_matrix(&[vec![2, 0], vec![0, 3], vec![4, 3]], 2);
        assert_eq!(
            lattice_index(&m).unwrap(),
            LatticeIndex::Finite(BigUint::from(6u32))
        );
        let primes: Vec<BigUint> = bad_primes(&m).unwrap().into_iter().collect();
        assert_eq!(primes, vec![BigUint::from(2u32), BigUint::from(3u32)]);
    }

    #[test]
    fn rejects_non_integer_ring() {
        let m = ExactMatrix::from_i64_rows(Ring::Rationals, 1, &[vec![1]]);
        assert!(matches!(hnf(&m), Err(LinalgError::RingMismatch(_, _))));
    }
}
