//! One round of the non-degeneracy argument for `W_P` on `X7`, run at a
//! finite truncation.

use std::sync::Arc;

use serde::Serialize;

use crate::coeff::Coeff;
use crate::free_series::{FreeSeries, Letter};
use crate::path_algebra::{AlgElem, Potential};
use crate::qp_mutation::count_mutation_two_cycles;
use crate::quiver::{ArrowIdx, Quiver, VertexId};

use super::{
    apply_deformation, arrow, build_h_witness, eval_p, f0, mutate_center, mutate_side,
    mutate_x7_prime_at_2, phi_elem, phi_inverse, theta2, w_of, w_prime_of, wp_series, x7, x7_prime,
    DeformBlock, X7Error,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub family: String,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoCycleRecord {
    pub quiver: String,
    pub vertex: VertexId,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    /// Every verdict holds modulo paths longer than this.
    pub trunc: usize,
    /// Coefficients of `P`, lowest degree first.
    pub p: Vec<String>,
    pub checks: Vec<CheckResult>,
    pub two_cycles: Vec<TwoCycleRecord>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed) && self.two_cycles.iter().all(|t| t.count == 0)
    }

    pub fn failures(&self) -> Vec<&CheckResult> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }
}

/// A chain of substitutions carrying `start` to `end`.
#[derive(Clone)]
pub struct RightEquivalenceWitness<C> {
    pub start: Potential<C>,
    pub steps: Vec<Vec<(ArrowIdx, AlgElem<C>)>>,
    pub end: Potential<C>,
}

impl<C: Coeff> RightEquivalenceWitness<C> {
    pub fn replay(&self) -> Result<Potential<C>, X7Error> {
        let mut w = self.start.clone();
        for step in &self.steps {
            w = w.substitute(step)?;
        }
        Ok(w)
    }
}

fn mono<C: Coeff>(letters: &[Letter], c: C, cap: usize) -> FreeSeries<C> {
    FreeSeries::monomial(3, true, cap, letters.to_vec(), c)
}

/// Explicit substitutions carrying `W~ = ΣB + ΣΔΔ + P(-B_j Δ_k)` to
/// `W_P(i,j,k) = ΣB + ΣΔΔ + P(Δ_i Δ_j Δ_k)` on `X7` (indices 1-based,
/// pairwise distinct).
///
/// First `g_j <- g_j + g_j Δ_k h(-B_j Δ_k, Δ_i Δ_j Δ_k)`; what remains
/// beyond `W_P` is `Δ_k Δ_k Φ(X)`, absorbed by `b_k <- b_k - d_k g_k Φ(X) a_k d_k`.
pub fn p_bd_witness<C: Coeff>(
    p: &[C],
    ijk: (usize, usize, usize),
    trunc: usize,
) -> Result<RightEquivalenceWitness<C>, X7Error> {
    let (i, j, k) = ijk;
    if [i, j, k].iter().any(|&t| !(1..=3).contains(&t)) || i == j || j == k || i == k {
        return Err(X7Error::HypothesisViolated(format!(
            "indices {i},{j},{k} must be a permutation of 1,2,3"
        )));
    }
    let q = x7();
    let cap = trunc / 3 + 1;
    let (xi, xj, xk, yj) = (
        (i - 1) as Letter,
        (j - 1) as Letter,
        (k - 1) as Letter,
        (3 + j - 1) as Letter,
    );
    let bd = mono(&[yj, xk], -C::one(), cap);
    let ddd = mono(&[xi, xj, xk], C::one(), cap);
    let quad = f0::<C>(cap).with_cap(cap);
    let quad = FreeSeries::zero(3, true, cap).add(&quad)?;
    let start = w_of(&q, &quad.add(&eval_p(p, &bd))?, trunc)?;
    let target = w_of(&q, &quad.add(&eval_p(p, &ddd))?, trunc)?;

    let h = build_h_witness(p);
    let hh = h.compose(&[bd, ddd])?;
    let e = mono(&[xk], C::one(), cap).mul(&hh)?;
    let gj = arrow(&q, &format!("g{j}"))?;
    let eg = AlgElem::arrow(&q, trunc, gj);
    let step1 = vec![(gj, &eg + &(&eg * &phi_elem(&q, &e, trunc)?))];
    let after = start.substitute(&step1)?;

    let defect = phi_inverse(&after.sub(&target))?;
    let mut x = FreeSeries::zero(3, true, cap);
    for (w, c) in defect.terms() {
        let r = w.len();
        let at = (0..r)
            .find(|&s| r >= 2 && w[s] == xk && w[(s + 1) % r] == xk)
            .ok_or_else(|| {
                X7Error::HypothesisViolated(format!(
                    "leftover term {} has no Δ{k}Δ{k}",
                    defect.word_string(w)
                ))
            })?;
        x.add_term((2..r).map(|t| w[(at + t) % r]).collect(), c.clone());
    }
    let mut blk = DeformBlock::trivial(&q, trunc, k);
    blk.s[3] = phi_elem(&q, &x, trunc)?.scale(&-C::one());
    let step2 = apply_deformation(&after, &[blk])?;
    Ok(RightEquivalenceWitness {
        start,
        steps: vec![step1, step2.rules],
        end: step2.potential,
    })
}

fn check(family: &str, name: &str, passed: bool, detail: String) -> CheckResult {
    CheckResult {
        family: family.into(),
        name: name.into(),
        passed,
        detail,
    }
}

fn verdict<C: Coeff>(a: &Potential<C>, b: &Potential<C>, n: usize) -> (bool, String) {
    let (a, b) = (a.with_trunc(n), b.with_trunc(n));
    if a == b {
        (true, format!("{} terms agree", a.len()))
    } else {
        (false, format!("difference {}", a.sub(&b)))
    }
}

fn outcome<C: Coeff>(r: Result<(Potential<C>, Potential<C>), X7Error>, n: usize) -> (bool, String) {
    match r {
        Ok((a, b)) => verdict(&a, &b, n),
        Err(e) => (false, e.to_string()),
    }
}

fn two_cycle_records<C: Coeff>(
    label: &str,
    q: &Arc<Quiver>,
    w: &Potential<C>,
) -> Result<Vec<TwoCycleRecord>, X7Error> {
    q.vertices()
        .iter()
        .map(|&v| {
            Ok(TwoCycleRecord {
                quiver: label.into(),
                vertex: v,
                count: count_mutation_two_cycles(q, w, v)?,
            })
        })
        .collect()
}

/// Runs the three families of checks for `W_P` at truncation `trunc`:
/// (i) `μ_k(X7, W_P) = (X7, W_P)` for `k = 1..6`; (ii) `μ_0(X7, W_P) =
/// (X7', W')`; (iii) `μ_2(X7', W') = μ_0(X7, W~)` through `θ₂`, and `W~`
/// right equivalent to `W_P` by explicit substitutions. Also counts the
/// 2-cycles a mutation would leave at every vertex of both quivers.
///
/// Intermediate work runs at twice the truncation so that every
/// comparison at `trunc` sees all contributing terms.
pub fn verify_nondegeneracy_round<C: Coeff>(p: &[C], trunc: usize) -> Result<Report, X7Error> {
    if trunc < 12 {
        return Err(X7Error::TruncationTooSmall(trunc));
    }
    let work = 2 * trunc;
    let (qx, qp) = (x7(), x7_prime());
    let cap = work / 2 + 1;
    let f = wp_series(p, cap);
    let wp = w_of(&qx, &f, work)?;
    let w_prime = w_prime_of(&qp, &f, work)?;
    let mut checks = Vec::new();

    for k in 1..=6 {
        let (ok, detail) = outcome(mutate_side(&qx, &wp, k).map(|m| (m, wp.clone())), trunc);
        checks.push(check(
            "side-X7",
            &format!("mu_{k}(X7, W_P) = (X7, W_P)"),
            ok,
            detail,
        ));
    }

    let (ok, detail) = outcome(mutate_center(&qx, &wp).map(|m| (m, w_prime.clone())), trunc);
    checks.push(check(
        "central",
        "mu_0(X7, W_P) = (X7', sum abc + Psi(f))",
        ok,
        detail,
    ));

    // f = x1x2 + x3x1 + G with G = x2x3 + P(x1x2x3); F' replaces G by θ₂(G)
    let x1x2_x3x1 = {
        let mut s = FreeSeries::zero(3, true, cap);
        s.add_term(vec![0, 1], C::one());
        s.add_term(vec![2, 0], C::one());
        s
    };
    let g = FreeSeries::zero(3, true, cap).add(&f)?.sub(&x1x2_x3x1)?;
    let f_new = x1x2_x3x1.add(&theta2(&g)?.with_cap(cap))?;
    let w_new = w_prime_of(&qp, &f_new, work)?;
    let (ok, detail) = outcome(
        mutate_x7_prime_at_2(&qp, &w_prime).map(|m| (m, w_new.clone())),
        trunc,
    );
    checks.push(check(
        "side-X7'",
        "mu_2(X7', W') = (X7', W_F') with F' = x1x2 + x3x1 + theta2(G)",
        ok,
        detail,
    ));

    let w_tilde = w_of(&qx, &f_new, work)?;
    let (ok, detail) = outcome(
        mutate_center(&qx, &w_tilde).map(|m| (m, w_new.clone())),
        trunc,
    );
    checks.push(check("side-X7'", "mu_0(X7, W~) = (X7', W_F')", ok, detail));

    let witness = p_bd_witness(p, (1, 2, 3), work);
    let (ok, detail) = outcome(
        witness.and_then(|wit| {
            let same_start = wit.start == w_tilde;
            let replayed = wit.replay()?;
            if !same_start || replayed != wit.end {
                return Err(X7Error::HypothesisViolated(
                    "witness does not replay from W~".into(),
                ));
            }
            Ok((wit.end, wp.clone()))
        }),
        trunc,
    );
    checks.push(check(
        "side-X7'",
        "W~ right equivalent to W_P by explicit substitutions",
        ok,
        detail,
    ));

    let mut two_cycles = two_cycle_records("X7", &qx, &wp.with_trunc(trunc))?;
    two_cycles.extend(two_cycle_records("X7'", &qp, &w_prime.with_trunc(trunc))?);
    Ok(Report {
        trunc,
        p: p.iter().map(Coeff::to_coeff_string).collect(),
        checks,
        two_cycles,
    })
}

/// The potential `B_1 + B_2 + B_3` alone, pushed through `μ_0` then `μ_2`:
/// the result on `X7'` loses two triangles, so mutating it again leaves
/// 2-cycles.
#[derive(Debug, Clone, Serialize)]
pub struct NegativeControl {
    pub after_mu0: String,
    pub after_mu2: String,
    pub two_cycles: Vec<TwoCycleRecord>,
}

impl NegativeControl {
    pub fn detected(&self) -> bool {
        self.two_cycles.iter().any(|t| t.count > 0)
    }
}

pub fn negative_control<C: Coeff>(trunc: usize) -> Result<NegativeControl, X7Error> {
    let (qx, qp) = (x7(), x7_prime());
    let w = super::sum_b::<C>(&qx, trunc)?;
    let w1 = mutate_center(&qx, &w)?;
    let w2 = mutate_x7_prime_at_2(&qp, &w1)?;
    Ok(NegativeControl {
        after_mu0: w1.to_string(),
        after_mu2: w2.to_string(),
        two_cycles: two_cycle_records("X7'", &qp, &w2)?,
    })
}
