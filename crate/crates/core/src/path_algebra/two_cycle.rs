use std::sync::Arc;

use crate::coeff::Coeff;
use crate::quiver::{ArrowIdx, Quiver};

use super::{AlgElem, AlgebraError, PathWord, Potential};

/// Result of removing the 2-cycles `γ_i δ_i` from
/// `Σ γ_i δ_i + Σ T_i δ_i + S`.
#[derive(Clone)]
pub struct TwoCycleReduction<C> {
    /// `Σ γ_i δ_i + sub_{γ_i ← -T_i}(S)`.
    pub reduced: Potential<C>,
    /// The input `Σ γ_i δ_i + Σ T_i δ_i + S`.
    pub original: Potential<C>,
    /// Single-arrow unitriangular substitutions, in application order,
    /// carrying `original` to a potential cyclically equivalent to `reduced`.
    pub steps: Vec<(ArrowIdx, AlgElem<C>)>,
}

impl<C: Coeff> std::fmt::Debug for TwoCycleReduction<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TwoCycleReduction")
            .field("reduced", &self.reduced)
            .field("steps", &self.steps.len())
            .finish()
    }
}

impl<C: Coeff> TwoCycleReduction<C> {
    /// Applies the witness substitutions to `w` in order.
    pub fn replay(&self, w: &Potential<C>) -> Result<Potential<C>, AlgebraError> {
        let mut cur = w.clone();
        for (a, t) in &self.steps {
            cur = cur.substitute(&[(*a, t.clone())])?;
        }
        Ok(cur)
    }
}

fn check_hypotheses<C: Coeff>(
    q: &Quiver,
    gammas: &[ArrowIdx],
    deltas: &[ArrowIdx],
    ts: &[AlgElem<C>],
    s: &Potential<C>,
) -> Result<(), AlgebraError> {
    let bad = |m: String| Err(AlgebraError::Hypothesis(m));
    if gammas.len() != deltas.len() || gammas.len() != ts.len() {
        return bad("need as many deltas and T's as gammas".into());
    }
    let mut all: Vec<ArrowIdx> = gammas.iter().chain(deltas).copied().collect();
    all.sort_unstable();
    if all.windows(2).any(|w| w[0] == w[1]) {
        return bad("the arrows gamma_i, delta_i must be distinct".into());
    }
    for ((&g, &d), t) in gammas.iter().zip(deltas).zip(ts) {
        if !t.is_parallel_to(g) || !t.in_arrow_ideal() {
            return bad(format!(
                "T for {} is not a parallel element of the arrow ideal",
                q.name(g)
            ));
        }
        if q.src(d) != q.tgt(g) || q.tgt(d) != q.src(g) {
            return bad(format!(
                "{} is not anti-parallel to {}",
                q.name(d),
                q.name(g)
            ));
        }
    }
    for t in ts {
        if let Some(&a) = all.iter().find(|&&a| t.appears(a)) {
            return bad(format!("{} appears in some T", q.name(a)));
        }
    }
    if let Some(&d) = deltas.iter().find(|&&d| s.appears(d)) {
        return bad(format!("{} appears in S", q.name(d)));
    }
    Ok(())
}

fn two_cycle<C: Coeff>(q: &Arc<Quiver>, trunc: usize, g: ArrowIdx, d: ArrowIdx) -> AlgElem<C> {
    AlgElem::from_word(
        q,
        trunc,
        PathWord::from_parts(vec![g, d], q.src(g)),
        C::one(),
    )
}

/// Reduces `Σ γ_i δ_i + Σ T_i δ_i + S` to `Σ γ_i δ_i + sub_{γ_i ← -T_i}(S)`.
///
/// The witness handles the last pair first: `γ ← γ - T`, then the
/// cyclic leftover `γ T'` is absorbed by `δ ← δ - T'`, and so on down to
/// the first pair.
pub fn two_cycle_reduce<C: Coeff>(
    gammas: &[ArrowIdx],
    deltas: &[ArrowIdx],
    ts: &[AlgElem<C>],
    s: &Potential<C>,
) -> Result<TwoCycleReduction<C>, AlgebraError> {
    let q = s.quiver().clone();
    let trunc = s.trunc();
    check_hypotheses(&q, gammas, deltas, ts, s)?;

    let mut cycles = AlgElem::zero(&q, trunc);
    let mut original = s.elem().clone();
    for ((&g, &d), t) in gammas.iter().zip(deltas).zip(ts) {
        let gd = two_cycle::<C>(&q, trunc, g, d);
        cycles = &cycles + &gd;
        original = &original + &gd;
        let td = t.with_trunc(trunc) * AlgElem::arrow(&q, trunc, d);
        original = &original + &td;
    }
    let original = Potential::new(&original)?;

    let rules: Vec<(ArrowIdx, AlgElem<C>)> = gammas.iter().zip(ts).map(|(&g, t)| (g, -t)).collect();
    let reduced = Potential::new(&cycles)?.add(&s.substitute(&rules)?);

    let mut steps = Vec::new();
    let mut cur = original.clone();
    for ((&g, &d), t) in gammas.iter().zip(deltas).zip(ts).rev() {
        let step = (g, &AlgElem::arrow(&q, trunc, g) - t);
        cur = cur.substitute(std::slice::from_ref(&step))?;
        steps.push(step);
        let (tail, _) = cur.split_off_arrow(g);
        let tprime = &tail - &AlgElem::arrow(&q, tail.trunc(), d);
        if !tprime.is_zero() {
            let step = (d, &AlgElem::arrow(&q, trunc, d) - &tprime);
            cur = cur.substitute(std::slice::from_ref(&step))?;
            steps.push(step);
        }
    }
    debug_assert!(
        cur == reduced,
        "2-cycle witness does not reach the reduced potential"
    );
    Ok(TwoCycleReduction {
        reduced,
        original,
        steps,
    })
}
