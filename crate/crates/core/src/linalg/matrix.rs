use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::LinalgError;
use crate::coeff::{rational_string, reduce_bigint, Rational, Ring};

/// A matrix with exact entries over a declared [`Ring`].
///
/// Rows are stored sparsely as `(column, value)` pairs sorted by column.
/// Entries over `Integers` are integral rationals; over `PrimeField(p)` they
/// are integers in `0..p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    ring: Ring,
    cols: usize,
    rows: Vec<Vec<(usize, Rational)>>,
}

impl ExactMatrix {
    pub fn zeros(ring: Ring, rows: usize, cols: usize) -> Self {
        ExactMatrix {
            ring,
            cols,
            rows: vec![Vec::new(); rows],
        }
    }

    /// Builds a matrix from dense integer rows.
    pub fn from_i64_rows(ring: Ring, cols: usize, data: &[Vec<i64>]) -> Self {
        let mut m = ExactMatrix::zeros(ring, 0, cols);
        for r in data {
            assert_eq!(r.len(), cols, "ragged row");
            let row = r
                .iter()
                .enumerate()
                .filter(|(_, v)| **v != 0)
                .map(|(j, v)| (j, Rational::from_integer(BigInt::from(*v))));
            m.push_row(row.collect());
        }
        m
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }
    pub fn ncols(&self) -> usize {
        self.cols
    }

    /// Appends a row given as `(column, value)` pairs in any order; zero
    /// values and repeated columns are merged.
    pub fn push_row(&mut self, mut entries: Vec<(usize, Rational)>) {
        entries.sort_by_key(|e| e.0);
        let mut row: Vec<(usize, Rational)> = Vec::with_capacity(entries.len());
        for (j, v) in entries {
            assert!(j < self.cols, "column {j} out of range");
            match row.last_mut() {
                Some(last) if last.0 == j => last.1 = &last.1 + v,
                _ => row.push((j, v)),
            }
        }
        row.retain(|e| !e.1.is_zero());
        if let Ring::PrimeField(p) = self.ring {
            for e in row.iter_mut() {
                e.1 = Rational::from_integer(BigInt::from(reduce_bigint(&e.1.to_integer(), p)));
            }
            row.retain(|e| !e.1.is_zero());
        }
        self.rows.push(row);
    }

    pub fn row(&self, i: usize) -> &[(usize, Rational)] {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        match self.rows[i].binary_search_by_key(&j, |e| e.0) {
            Ok(pos) => self.rows[i][pos].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Upper-left `p x q` block.
    pub fn block(&self, p: usize, q: usize) -> ExactMatrix {
        let rows = self.rows[..p.min(self.rows.len())]
            .iter()
            .map(|r| r.iter().filter(|e| e.0 < q).cloned().collect())
            .collect();
        ExactMatrix {
            ring: self.ring,
            cols: q.min(self.cols),
            rows,
        }
    }

    /// Stacks `other` below `self`; both must share ring and width.
    pub fn vstack(&self, other: &ExactMatrix) -> Result<ExactMatrix, LinalgError> {
        if self.ring != other.ring {
            return Err(LinalgError::RingMismatch(self.ring, other.ring));
        }
        if self.cols != other.cols {
            return Err(LinalgError::ShapeMismatch(format!(
                "{} vs {} columns",
                self.cols, other.cols
            )));
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(ExactMatrix {
            ring: self.ring,
            cols: self.cols,
            rows,
        })
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut cols: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); self.cols];
        for (i, r) in self.rows.iter().enumerate() {
            for (j, v) in r {
                cols[*j].push((i, v.clone()));
            }
        }
        ExactMatrix {
            ring: self.ring,
            cols: self.rows.len(),
            rows: cols,
        }
    }

    /// Reinterprets the same entries over another ring. Reduction into a
    /// prime field fails when a denominator is divisible by `p`.
    pub fn over(&self, ring: Ring) -> Result<ExactMatrix, LinalgError> {
        let mut out = ExactMatrix::zeros(ring, 0, self.cols);
        for r in &self.rows {
            let mut row = Vec::with_capacity(r.len());
            for (j, v) in r {
                let v = match ring {
                    Ring::Integers if !v.is_integer() => return Err(LinalgError::NonIntegral),
                    Ring::PrimeField(p) => {
                        let d = reduce_bigint(v.denom(), p);
                        let inv = crate::coeff::inv_mod(d, p)
                            .ok_or(LinalgError::DenominatorDivisibleBy(p))?;
                        let n = reduce_bigint(v.numer(), p);
                        Rational::from_integer(BigInt::from(crate::coeff::mul_mod(n, inv, p)))
                    }
                    _ => v.clone(),
                };
                row.push((*j, v));
            }
            out.push_row(row);
        }
        Ok(out)
    }

    /// Dense copy, row-major.
    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut out = vec![vec![Rational::zero(); self.cols]; self.rows.len()];
        for (i, r) in self.rows.iter().enumerate() {
            for (j, v) in r {
                out[i][*j] = v.clone();
            }
        }
        out
    }

    /// Integer rows obtained by clearing each row's denominators. Row spans
    /// over the rationals are unchanged.
    pub fn integer_rows(&self) -> Vec<Vec<(usize, BigInt)>> {
        self.rows
            .iter()
            .map(|r| {
                let l = r.iter().fold(BigInt::one(), |acc, (_, v)| {
                    num_integer::lcm(acc, v.denom().clone())
                });
                r.iter()
                    .map(|(j, v)| (*j, (v * Rational::from_integer(l.clone())).to_integer()))
                    .collect()
            })
            .collect()
    }

    /// Plain-text exchange format: a `rows cols` header line followed by one
    /// line of space-separated entries per row.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.rows.len(), self.cols);
        let zero = "0".to_string();
        for r in &self.rows {
            let mut dense = vec![None; self.cols];
            for (j, v) in r {
                dense[*j] = Some(rational_string(v));
            }
            let line: Vec<&str> = dense
                .iter()
                .map(|e| e.as_ref().unwrap_or(&zero).as_str())
                .collect();
            let _ = writeln!(s, "{}", line.join(" "));
        }
        s
    }

    pub fn from_text(ring: Ring, text: &str) -> Result<ExactMatrix, LinalgError> {
        let mut tokens = text.split_whitespace();
        let bad = |m: &str| LinalgError::Parse(m.to_string());
        let rows: usize = tokens
            .next()
            .ok_or_else(|| bad("missing header"))?
            .parse()
            .map_err(|_| bad("bad row count"))?;
        let cols: usize = tokens
            .next()
            .ok_or_else(|| bad("missing header"))?
            .parse()
            .map_err(|_| bad("bad column count"))?;
        let mut m = ExactMatrix::zeros(ring, 0, cols);
        for _ in 0..rows {
            let mut row = Vec::new();
            for j in 0..cols {
                let t = tokens.next().ok_or_else(|| bad("too few entries"))?;
                let v = <Rational as crate::coeff::Coeff>::parse_coeff(t)
                    .map_err(|e| bad(&e.to_string()))?;
                if !v.is_zero() {
                    row.push((j, v));
                }
            }
            m.push_row(row);
        }
        if tokens.next().is_some() {
            return Err(bad("trailing entries"));
        }
        Ok(m)
    }
}
