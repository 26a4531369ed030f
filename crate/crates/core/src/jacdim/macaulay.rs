//! The truncation matrices `M_r`.
//!
//! Rows are indexed by `(u, v, i)` with `l(u) + l(v) < r - e`, columns by
//! words `w` with `e <= l(w) < r`; the entry is the coefficient of `w` in
//! `u * tau_{r - l(u) - l(v)}(rho_i) * v`. Words are ordered by length, then
//! lexicographically. Rows are ordered by `l(u) + l(v)`, then `l(u)`, `u`,
//! `v`, `i`. With these orders `M_s` is the upper-left `p_s x q_s` block of
//! `M_r` for `s <= r`.

use crate::coeff::{Rational, Ring};
use crate::linalg::ExactMatrix;

use super::IdealPresentation;

fn pow(n: usize, k: usize) -> usize {
    n.checked_pow(k as u32).expect("word count overflows usize")
}

/// Number of words of length `< l`.
fn offset(n: usize, l: usize) -> usize {
    (0..l).map(|j| pow(n, j)).sum()
}

/// `p_r = t * sum_{j=0}^{r-e-1} (j+1) n^j`.
pub fn row_count(p: &IdealPresentation, r: usize) -> usize {
    let top = r.saturating_sub(p.e());
    p.t() * (0..top).map(|j| (j + 1) * pow(p.n(), j)).sum::<usize>()
}

/// `q_r = sum_{j=e}^{r-1} n^j`.
pub fn col_count(p: &IdealPresentation, r: usize) -> usize {
    (p.e()..r).map(|j| pow(p.n(), j)).sum()
}

/// Base-`n` value of a word.
fn word_value(n: usize, w: &[u16]) -> usize {
    w.iter().fold(0, |acc, &l| acc * n + l as usize)
}

/// Column of a word of length `>= e` in `M_r`.
pub fn column_of(p: &IdealPresentation, w: &[u16]) -> usize {
    offset(p.n(), w.len()) - offset(p.n(), p.e()) + word_value(p.n(), w)
}

/// The word at a given column, inverse of [`column_of`].
pub fn word_at(p: &IdealPresentation, col: usize) -> Vec<u16> {
    let n = p.n();
    let mut idx = col + offset(n, p.e());
    let mut len = 0;
    while idx >= pow(n, len) {
        idx -= pow(n, len);
        len += 1;
    }
    let mut w = vec![0u16; len];
    for slot in w.iter_mut().rev() {
        *slot = (idx % n) as u16;
        idx /= n;
    }
    w
}

/// Builds `M_r` over the rationals. Reduce with [`ExactMatrix::over`] to work
/// over a prime field; the integer matrix is the same.
pub fn build_mr(p: &IdealPresentation, r: usize) -> ExactMatrix {
    let n = p.n();
    let e = p.e();
    let cols = col_count(p, r);
    let mut m = ExactMatrix::zeros(Ring::Rationals, 0, cols);
    let base = offset(n, e);
    let gens: Vec<Vec<(Vec<u16>, Rational)>> = p
        .gens()
        .iter()
        .map(|g| {
            g.terms()
                .iter()
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect()
        })
        .collect();
    for j in 0..r.saturating_sub(e) {
        for lu in 0..=j {
            let lv = j - lu;
            for uval in 0..pow(n, lu) {
                for vval in 0..pow(n, lv) {
                    for g in &gens {
                        let mut row = Vec::with_capacity(g.len());
                        for (w0, c) in g {
                            if w0.len() + j >= r {
                                continue;
                            }
                            let len = lu + w0.len() + lv;
                            let val =
                                (uval * pow(n, w0.len()) + word_value(n, w0)) * pow(n, lv) + vval;
                            row.push((offset(n, len) - base + val, c.clone()));
                        }
                        m.push_row(row);
                    }
                }
            }
        }
    }
    debug_assert_eq!(m.nrows(), row_count(p, r));
    m
}
