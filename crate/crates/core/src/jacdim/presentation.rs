use crate::coeff::{Coeff, Rational};
use crate::free_series::{FreeSeries, Letter};

use super::JacdimError;

/// Generators of a two-sided ideal in the completed free algebra on `n`
/// letters. Every generator has minimal degree at least `e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealPresentation {
    n: usize,
    e: usize,
    gens: Vec<FreeSeries<Rational>>,
}

impl IdealPresentation {
    /// Zero generators are dropped. `e` is the least degree occurring in any
    /// generator (0 when there are none).
    pub fn new(n: usize, gens: Vec<FreeSeries<Rational>>) -> Result<Self, JacdimError> {
        let mut kept = Vec::new();
        for g in gens {
            if g.uses_y() || g.n() != n {
                return Err(JacdimError::BadGenerator(
                    "generators must be series in x_1..x_n".into(),
                ));
            }
            if !g.is_zero() {
                kept.push(g);
            }
        }
        let e = kept
            .iter()
            .filter_map(FreeSeries::min_degree)
            .min()
            .unwrap_or(0);
        Ok(IdealPresentation { n, e, gens: kept })
    }

    pub fn n(&self) -> usize {
        self.n
    }
    pub fn e(&self) -> usize {
        self.e
    }
    pub fn gens(&self) -> &[FreeSeries<Rational>] {
        &self.gens
    }
    pub fn t(&self) -> usize {
        self.gens.len()
    }
}

/// Free cyclic derivative `d f / d x_i` (1-based `i`).
pub fn free_cyclic_derivative<C: Coeff>(f: &FreeSeries<C>, i: usize) -> FreeSeries<C> {
    f.cyclic_derivative((i - 1) as Letter)
}

/// Generators `x_i^2` and `[x_i, d f/d x_i]` presenting `e_0 Lambda e_0` for
/// the potential `sum B_i + Phi(f)`. With `drop_one`, the last commutator is
/// omitted: the commutators sum to zero, so it is redundant.
pub fn jacobi_generators(
    f: &FreeSeries<Rational>,
    drop_one: bool,
) -> Result<IdealPresentation, JacdimError> {
    if f.uses_y() && f.terms().keys().flatten().any(|&l| l as usize >= f.n()) {
        return Err(JacdimError::UsesY);
    }
    if f.has_constant_term() {
        return Err(JacdimError::ConstantTerm);
    }
    let n = f.n();
    let f = f.with_cap(f.degree_cap()).pi();
    let cap = f.degree_cap() + 1;
    let mut gens = Vec::new();
    for i in 1..=n {
        let x = FreeSeries::<Rational>::x(n, false, cap, i);
        gens.push(x.mul(&x).expect("same alphabet"));
    }
    let last = if drop_one { n.saturating_sub(1) } else { n };
    for i in 1..=last {
        let x = FreeSeries::<Rational>::x(n, false, cap, i);
        let d = free_cyclic_derivative(&f, i).with_cap(cap);
        gens.push(x.commutator(&d).expect("same alphabet"));
    }
    IdealPresentation::new(n, gens)
}
