//! Rank and determinant.
//!
//! Rank over the rationals is computed by fraction-free row reduction on
//! integer rows: each incoming row is reduced against the current echelon
//! basis by `r <- a*r - b*pivot` and then divided by its content. Pivots are
//! the leading (lowest) column of each reduced row, so the result is
//! deterministic. A 128-bit fast path falls back to big integers on overflow.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{ExactMatrix, LinalgError};
use crate::coeff::{inv_mod, mul_mod, reduce_bigint, Rational, Ring};

/// Rank over the matrix's ring (`Rationals` or `PrimeField(p)`).
pub fn rank(m: &ExactMatrix) -> Result<usize, LinalgError> {
    match m.ring() {
        Ring::Rationals => Ok(rank_rational(m)),
        Ring::PrimeField(p) => Ok(rank_mod_p(m, p)),
        Ring::Integers => Err(LinalgError::IntegerRingUnsupported),
    }
}

/// Rank over the rationals of a matrix with rational or integer entries.
pub fn rank_rational(m: &ExactMatrix) -> usize {
    pivot_columns(m).len()
}

/// Leading columns of the rows of an echelon basis of the row space over
/// the rationals, in increasing order. The unit vectors at the remaining
/// columns complete the row space to everything.
pub fn pivot_columns(m: &ExactMatrix) -> Vec<usize> {
    let rows = m.integer_rows();
    let mut piv = match echelon_i128(&rows, m.ncols()) {
        Some(p) => p,
        None => echelon_bigint(&rows, m.ncols()),
    };
    piv.sort_unstable();
    piv
}

type Row128 = Vec<(u32, i128)>;

fn content_normalize_i128(r: &mut Row128) {
    let mut g: i128 = 0;
    for (_, v) in r.iter() {
        g = g.gcd(v);
        if g == 1 {
            break;
        }
    }
    if r[0].1 < 0 {
        g = -g;
    }
    if g != 1 {
        for e in r.iter_mut() {
            e.1 /= g;
        }
    }
}

/// `a*r - b*s`, dropping the shared leading column. `None` on overflow.
fn combine_i128(a: i128, r: &Row128, b: i128, s: &Row128) -> Option<Row128> {
    let mut out = Vec::with_capacity(r.len() + s.len());
    let (mut i, mut j) = (1, 1);
    while i < r.len() || j < s.len() {
        let ci = r.get(i).map_or(u32::MAX, |e| e.0);
        let cj = s.get(j).map_or(u32::MAX, |e| e.0);
        if ci < cj {
            out.push((ci, a.checked_mul(r[i].1)?));
            i += 1;
        } else if cj < ci {
            out.push((cj, b.checked_mul(s[j].1)?.checked_neg()?));
            j += 1;
        } else {
            let v = a.checked_mul(r[i].1)?.checked_sub(b.checked_mul(s[j].1)?)?;
            if v != 0 {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    Some(out)
}

fn echelon_i128(rows: &[Vec<(usize, BigInt)>], cols: usize) -> Option<Vec<usize>> {
    let mut basis: Vec<Option<Row128>> = vec![None; cols];
    let mut pivots = Vec::new();
    for row in rows {
        let mut r: Row128 = Vec::with_capacity(row.len());
        for (j, v) in row {
            r.push((*j as u32, i128::try_from(v).ok()?));
        }
        while !r.is_empty() {
            content_normalize_i128(&mut r);
            let c = r[0].0 as usize;
            match &basis[c] {
                None => {
                    basis[c] = Some(r);
                    pivots.push(c);
                    break;
                }
                Some(b) => {
                    let g = b[0].1.gcd(&r[0].1);
                    r = combine_i128(b[0].1 / g, &r, r[0].1 / g, b)?;
                }
            }
        }
    }
    Some(pivots)
}

type RowBig = Vec<(u32, BigInt)>;

fn echelon_bigint(rows: &[Vec<(usize, BigInt)>], cols: usize) -> Vec<usize> {
    let mut basis: Vec<Option<RowBig>> = vec![None; cols];
    let mut pivots = Vec::new();
    for row in rows {
        let mut r: RowBig = row.iter().map(|(j, v)| (*j as u32, v.clone())).collect();
        while !r.is_empty() {
            let mut g = r.iter().fold(BigInt::zero(), |g, e| g.gcd(&e.1));
            if r[0].1.is_negative() {
                g = -g;
            }
            if !g.is_one() {
                for e in r.iter_mut() {
                    e.1 = &e.1 / &g;
                }
            }
            let c = r[0].0 as usize;
            match &basis[c] {
                None => {
                    basis[c] = Some(r);
                    pivots.push(c);
                    break;
                }
                Some(b) => {
                    let g = b[0].1.gcd(&r[0].1);
                    let a = &b[0].1 / &g;
                    let x = &r[0].1 / &g;
                    r = combine_big(&a, &r, &x, b);
                }
            }
        }
    }
    pivots
}

pub(crate) fn combine_big(a: &BigInt, r: &RowBig, b: &BigInt, s: &RowBig) -> RowBig {
    let mut out = Vec::with_capacity(r.len() + s.len());
    let (mut i, mut j) = (1, 1);
    while i < r.len() || j < s.len() {
        let ci = r.get(i).map_or(u32::MAX, |e| e.0);
        let cj = s.get(j).map_or(u32::MAX, |e| e.0);
        if ci < cj {
            out.push((ci, a * &r[i].1));
            i += 1;
        } else if cj < ci {
            out.push((cj, -(b * &s[j].1)));
            j += 1;
        } else {
            let v = a * &r[i].1 - b * &s[j].1;
            if !v.is_zero() {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank over `F_p` of the matrix's entries reduced mod `p`.
pub fn rank_mod_p(m: &ExactMatrix, p: u64) -> usize {
    let mut basis: Vec<Option<Vec<(u32, u64)>>> = vec![None; m.ncols()];
    let mut rank = 0;
    for i in 0..m.nrows() {
        let mut r: Vec<(u32, u64)> = Vec::with_capacity(m.row(i).len());
        for (j, v) in m.row(i) {
            let d = reduce_bigint(v.denom(), p);
            let inv = inv_mod(d, p).expect("denominator invertible mod p");
            let x = mul_mod(reduce_bigint(v.numer(), p), inv, p);
            if x != 0 {
                r.push((*j as u32, x));
            }
        }
        while !r.is_empty() {
            let c = r[0].0 as usize;
            match &basis[c] {
                None => {
                    let inv = inv_mod(r[0].1, p).expect("nonzero mod prime");
                    for e in r.iter_mut() {
                        e.1 = mul_mod(e.1, inv, p);
                    }
                    basis[c] = Some(r);
                    rank += 1;
                    break;
                }
                Some(b) => {
                    let x = r[0].1;
                    let mut out = Vec::with_capacity(r.len() + b.len());
                    let (mut i, mut j) = (1, 1);
                    while i < r.len() || j < b.len() {
                        let ci = r.get(i).map_or(u32::MAX, |e| e.0);
                        let cj = b.get(j).map_or(u32::MAX, |e| e.0);
                        if ci < cj {
                            out.push(r[i]);
                            i += 1;
                        } else if cj < ci {
                            out.push((cj, (p - mul_mod(x, b[j].1, p)) % p));
                            j += 1;
                        } else {
                            let v = (r[i].1 + p - mul_mod(x, b[j].1, p)) % p;
                            if v != 0 {
                                out.push((ci, v));
                            }
                            i += 1;
                            j += 1;
                        }
                    }
                    r = out;
                }
            }
        }
    }
    rank
}

/// Dense Bareiss elimination. Returns the rank and, for square input, the
/// determinant. Used as an independent cross-check of [`rank_rational`] and
/// by [`determinant`].
pub fn bareiss(m: &ExactMatrix) -> (usize, Option<Rational>) {
    let rows = m.integer_rows();
    // Row scaling by denominators changes the determinant; track the factor.
    let mut scale = Rational::one();
    for i in 0..m.nrows() {
        let l = m.row(i).iter().fold(BigInt::one(), |acc, (_, v)| {
            num_integer::lcm(acc, v.denom().clone())
        });
        scale *= Rational::from_integer(l);
    }
    let (nr, nc) = (m.nrows(), m.ncols());
    let mut a = vec![vec![BigInt::zero(); nc]; nr];
    for (i, r) in rows.iter().enumerate() {
        for (j, v) in r {
            a[i][*j] = v.clone();
        }
    }
    let mut prev = BigInt::one();
    let mut sign = 1i32;
    let mut rank = 0;
    let mut col = 0;
    while rank < nr && col < nc {
        let piv = (rank..nr).find(|&i| !a[i][col].is_zero());
        let Some(piv) = piv else {
            col += 1;
            continue;
        };
        if piv != rank {
            a.swap(piv, rank);
            sign = -sign;
        }
        for i in rank + 1..nr {
            for j in col + 1..nc {
                let v = &a[rank][col] * &a[i][j] - &a[i][col] * &a[rank][j];
                a[i][j] = v / &prev;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
        col += 1;
    }
    let det = (nr == nc).then(|| {
        if rank < nr {
            Rational::zero()
        } else {
            let d = Rational::from_integer(a[nr - 1][nc - 1].clone() * BigInt::from(sign));
            d / scale
        }
    });
    (rank, det)
}

/// Determinant of a square matrix over the rationals or integers.
pub fn determinant(m: &ExactMatrix) -> Result<Rational, LinalgError> {
    if m.nrows() != m.ncols() {
        return Err(LinalgError::ShapeMismatch(format!(
            "{}x{} is not square",
            m.nrows(),
            m.ncols()
        )));
    }
    if m.nrows() == 0 {
        return Ok(Rational::one());
    }
    if let Ring::PrimeField(_) = m.ring() {
        return Err(LinalgError::RingMismatch(m.ring(), Ring::Rationals));
    }
    Ok(bareiss(m).1.expect("square"))
}
