//! Deformations `β_i <- T_i` of `B_1 + ... + B_n + S` on `Q_n`.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::coeff::Coeff;
use crate::free_series::{FreeSeries, Letter};
use crate::path_algebra::{AlgElem, Potential};
use crate::quiver::{ArrowIdx, Quiver};

use super::{arrow, phi_elem, phi_inverse, qn_rank, sum_b, X7Error};

/// Data for one block `i`, with
/// `T_i = λ β + λ' δ + β γ S' α β + δ γ S'' α β + β γ S''' α δ + δ γ S'''' α δ`
/// where the `S` are cycles at `0` (lazy paths allowed).
#[derive(Clone)]
pub struct DeformBlock<C> {
    pub index: usize,
    pub lambda: C,
    pub lambda_prime: C,
    pub s: [AlgElem<C>; 4],
}

impl<C: Coeff> DeformBlock<C> {
    /// `λ = 1`, `λ' = 0` and all four `S` zero: the identity.
    pub fn trivial(q: &Arc<Quiver>, trunc: usize, index: usize) -> Self {
        let z = AlgElem::zero(q, trunc);
        DeformBlock {
            index,
            lambda: C::one(),
            lambda_prime: C::zero(),
            s: [z.clone(), z.clone(), z.clone(), z],
        }
    }
}

/// The deformed potential together with the substitution producing it.
#[derive(Clone)]
pub struct Deformation<C> {
    pub potential: Potential<C>,
    pub rules: Vec<(ArrowIdx, AlgElem<C>)>,
}

impl<C: Coeff> Deformation<C> {
    /// Applies the recorded substitution to `w` again.
    pub fn replay(&self, w: &Potential<C>) -> Result<Potential<C>, X7Error> {
        Ok(w.substitute(&self.rules)?)
    }
}

/// Applies `sub_{β_i <- T_i}` for every block to `w = ΣB + S`.
///
/// Requires distinct block indices, `λ_i ≠ 0`, cycles at `0` for the `S`
/// data, and no `β_i` (for a deformed block) in `w - ΣB`.
pub fn apply_deformation<C: Coeff>(
    w: &Potential<C>,
    blocks: &[DeformBlock<C>],
) -> Result<Deformation<C>, X7Error> {
    let q = w.quiver().clone();
    let n = qn_rank(&q)?;
    let trunc = w.trunc();
    let rest = w.sub(&sum_b(&q, trunc)?);
    let mut seen = BTreeSet::new();
    let mut rules = Vec::new();
    for blk in blocks {
        let i = blk.index;
        let bad = |m: String| Err(X7Error::HypothesisViolated(m));
        if i == 0 || i > n || !seen.insert(i) {
            return bad(format!("block index {i} is out of range or repeated"));
        }
        if blk.lambda.is_zero() {
            return bad(format!("lambda_{i} is zero"));
        }
        if blk.s.iter().any(|s| !s.is_from_to(0, 0)) {
            return bad(format!("S data for block {i} are not cycles at 0"));
        }
        let [a, b, g, d] = ["a", "b", "g", "d"].map(|x| arrow(&q, &format!("{x}{i}")));
        let (a, b, g, d) = (a?, b?, g?, d?);
        if rest.appears(b) {
            return bad(format!("b{i} appears outside B_{i}"));
        }
        let el = |x: ArrowIdx| AlgElem::arrow(&q, trunc, x);
        let (ea, eb, eg, ed) = (el(a), el(b), el(g), el(d));
        let mut t = &eb.scale(&blk.lambda) + &ed.scale(&blk.lambda_prime);
        let ends = [(&eb, &eb), (&ed, &eb), (&eb, &ed), (&ed, &ed)];
        for (s, (first, last)) in blk.s.iter().zip(ends) {
            if s.is_zero() {
                continue;
            }
            let s = s.with_trunc(trunc);
            t = &t + &(&(&(&(first * &eg) * &s) * &ea) * last);
        }
        rules.push((b, t));
    }
    let potential = w.substitute(&rules)?;
    Ok(Deformation { potential, rules })
}

/// The deformation turning `ΣB + f(Δ)` into `ΣB + f̄(Δ)` for an `x`-only
/// series `f`: block `i` uses `λ' = -[x_i]f` and `S'''' = -S_i`, where
/// `Δ_i^2 S_i` collects the terms with a `Δ_iΔ_i` and no `Δ_jΔ_j` for `j < i`.
pub fn reduction_deformation<C: Coeff>(
    q: &Arc<Quiver>,
    f: &FreeSeries<C>,
    trunc: usize,
) -> Result<Deformation<C>, X7Error> {
    let n = qn_rank(q)?;
    if f.uses_y() && f.terms().keys().any(|w| w.iter().any(|&l| l as usize >= n)) {
        return Err(X7Error::HypothesisViolated("f uses y-letters".into()));
    }
    let w = super::w_of(q, f, trunc)?;
    let doubled =
        |w: &[Letter], i: Letter| (0..w.len()).any(|s| w[s] == i && w[(s + 1) % w.len()] == i);
    let mut s: Vec<FreeSeries<C>> = (0..n)
        .map(|_| FreeSeries::zero(n, false, f.degree_cap()))
        .collect();
    let cyc = phi_inverse(&super::phi(q, f, trunc)?)?;
    for (word, c) in cyc.terms() {
        if word.len() < 2 {
            continue;
        }
        let Some(i) = (0..n as Letter).find(|&i| doubled(word, i)) else {
            continue;
        };
        let r = word.len();
        let start = (0..r)
            .find(|&p| word[p] == i && word[(p + 1) % r] == i)
            .expect("doubled");
        let rest: Vec<Letter> = (2..r).map(|t| word[(start + t) % r]).collect();
        s[i as usize].add_term(rest, c.clone());
    }
    let mut blocks = Vec::new();
    for i in 1..=n {
        let mut blk = DeformBlock::trivial(q, trunc, i);
        blk.lambda_prime = -f.coeff(&[(i - 1) as Letter]);
        blk.s[3] = phi_elem(q, &s[i - 1], trunc)?.scale(&-C::one());
        blocks.push(blk);
    }
    apply_deformation(&w, &blocks)
}
