//! The quivers `Q_n` and `Q'_n` (with `X7 = Q_3`, `X7' = Q'_3`), the
//! dictionaries `Φ`, `Ψ`, `θ₂` between noncommutative series and potentials,
//! the `W_P` family, and the mutation and right-equivalence statements about
//! them as executable checks.
//!
//! Arrow names on `Q_n`: `a{i}: 0 -> 2i-1`, `b{i}, d{i}: 2i-1 -> 2i`,
//! `g{i}: 2i -> 0`, so `B_i = a_i b_i g_i` and `Δ_i = a_i d_i g_i`.
//! On `Q'_n`: `a{i}: 0 -> 2i`, `b{i}{j}: 2i -> 2j-1`, `c{i}: 2i-1 -> 0`,
//! `d{i}: 2i-1 -> 2i`.

mod deform;
mod verify;


use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use crate::coeff::Coeff;
use crate::free_series::{FreeSeries, Letter, SeriesError};
use crate::path_algebra::{AlgElem, AlgebraError, AlgebraMap, PathWord, Potential};
use crate::qp_mutation::{
    composite_name, find_star_decomposition, mutate_qp, reversed_name, sign_eliminate, Matching,
    MutationError,
};
use crate::quiver::{ArrowIdx, Quiver, QuiverError, VertexId};

pub use deform::{apply_deformation, reduction_deformation, DeformBlock, Deformation};
pub use verify::{
    negative_control, p_bd_witness, verify_nondegeneracy_round, CheckResult, NegativeControl,
    Report, RightEquivalenceWitness, TwoCycleRecord,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum X7Error {
    #[error("truncation {0} is below the minimum of 12")]
    TruncationTooSmall(usize),
    #[error("series has a constant term")]
    ConstantTerm,
    #[error("monomial {0} is not admissible")]
    NotAdmissible(String),
    #[error("monomial {0} contains y1")]
    ContainsY1(String),
    #[error("monomial {0} does not avoid i1i")]
    ViolatesAvoidance(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("quiver is not of the expected shape: {0}")]
    WrongQuiver(String),
    #[error("cycle {0} is not a word in the B and Δ cycles")]
    NotAPhiImage(String),
    #[error("renaming is not an isomorphism: {0}")]
    NotIsomorphic(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Mutation(#[from] MutationError),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
}

/// `Q_n` on vertices `0..=2n` with `4n` arrows, declared `a*, b*, g*, d*`.
pub fn make_qn(n: usize) -> Quiver {
    assert!(n >= 1, "n must be positive");
    let mut arrows: Vec<(String, VertexId, VertexId)> = Vec::new();
    for i in 1..=n {
        arrows.push((format!("a{i}"), 0, odd(i)));
    }
    for i in 1..=n {
        arrows.push((format!("b{i}"), odd(i), even(i)));
    }
    for i in 1..=n {
        arrows.push((format!("g{i}"), even(i), 0));
    }
    for i in 1..=n {
        arrows.push((format!("d{i}"), odd(i), even(i)));
    }
    build(n, &arrows)
}

/// `Q'_n` on vertices `0..=2n` with `n(n+2)` arrows, declared `a*, b**, c*, d*`.
pub fn make_qn_prime(n: usize) -> Quiver {
    assert!(n >= 1, "n must be positive");
    let mut arrows: Vec<(String, VertexId, VertexId)> = Vec::new();
    for i in 1..=n {
        arrows.push((format!("a{i}"), 0, even(i)));
    }
    for i in 1..=n {
        for j in (1..=n).filter(|&j| j != i) {
            arrows.push((b_name(i, j), even(i), odd(j)));
        }
    }
    for i in 1..=n {
        arrows.push((format!("c{i}"), odd(i), 0));
    }
    for i in 1..=n {
        arrows.push((format!("d{i}"), odd(i), even(i)));
    }
    build(n, &arrows)
}

pub fn x7() -> Arc<Quiver> {
    Arc::new(make_qn(3))
}

pub fn x7_prime() -> Arc<Quiver> {
    Arc::new(make_qn_prime(3))
}

fn odd(i: usize) -> VertexId {
    (2 * i - 1) as VertexId
}

fn even(i: usize) -> VertexId {
    (2 * i) as VertexId
}

fn b_name(i: usize, j: usize) -> String {
    format!("b{i}{j}")
}

fn build(n: usize, arrows: &[(String, VertexId, VertexId)]) -> Quiver {
    let refs: Vec<(&str, VertexId, VertexId)> = arrows
        .iter()
        .map(|(s, u, v)| (s.as_str(), *u, *v))
        .collect();
    Quiver::from_arrows(0..=(2 * n) as VertexId, &refs).expect("well-formed")
}

/// `n` such that `q` is `Q_n` as built by [`make_qn`].
pub fn qn_rank(q: &Quiver) -> Result<usize, X7Error> {
    let n = q.num_arrows() / 4;
    if n == 0 || *q != make_qn(n) {
        return Err(X7Error::WrongQuiver("expected Q_n".into()));
    }
    Ok(n)
}

/// `n` such that `q` is `Q'_n` as built by [`make_qn_prime`].
pub fn qn_prime_rank(q: &Quiver) -> Result<usize, X7Error> {
    let n = (q.vertices().len().max(1) - 1) / 2;
    if n == 0 || *q != make_qn_prime(n) {
        return Err(X7Error::WrongQuiver("expected Q'_n".into()));
    }
    Ok(n)
}

fn arrow(q: &Quiver, name: &str) -> Result<ArrowIdx, X7Error> {
    Ok(q.arrow_by_name(name)?)
}

/// 1-based index of a letter and whether it is a `y`.
fn letter_index(n: usize, l: Letter) -> (usize, bool) {
    let l = l as usize;
    if l < n {
        (l + 1, false)
    } else {
        (l - n + 1, true)
    }
}

/// The cycle `Δ_i` (for `x_i`) or `B_i` (for `y_i`) as arrows.
fn letter_cycle(q: &Quiver, n: usize, l: Letter) -> Result<[ArrowIdx; 3], X7Error> {
    let (i, is_y) = letter_index(n, l);
    let mid = if is_y {
        format!("b{i}")
    } else {
        format!("d{i}")
    };
    Ok([
        arrow(q, &format!("a{i}"))?,
        arrow(q, &mid)?,
        arrow(q, &format!("g{i}"))?,
    ])
}

/// `Φ(f)` as an element of `e_0 KQ_n e_0`; a constant term becomes a
/// multiple of the lazy path at `0`.
pub fn phi_elem<C: Coeff>(
    q: &Arc<Quiver>,
    f: &FreeSeries<C>,
    trunc: usize,
) -> Result<AlgElem<C>, X7Error> {
    let n = qn_rank(q)?;
    if f.n() != n {
        return Err(X7Error::WrongQuiver(format!(
            "series in {} variables on Q_{n}",
            f.n()
        )));
    }
    let mut e = AlgElem::zero(q, trunc);
    for (w, c) in f.terms() {
        if 3 * w.len() > trunc {
            continue;
        }
        if w.is_empty() {
            e.add_term(PathWord::lazy(0), c.clone());
            continue;
        }
        let mut arrows = Vec::with_capacity(3 * w.len());
        for &l in w {
            arrows.extend(letter_cycle(q, n, l)?);
        }
        e.add_term(PathWord::new(q, arrows)?, c.clone());
    }
    Ok(e)
}

/// `Φ(f) = f(Δ_1, ..., Δ_n, B_1, ..., B_n)` as a potential on `Q_n`.
pub fn phi<C: Coeff>(
    q: &Arc<Quiver>,
    f: &FreeSeries<C>,
    trunc: usize,
) -> Result<Potential<C>, X7Error> {
    if f.has_constant_term() {
        return Err(X7Error::ConstantTerm);
    }
    Ok(Potential::new(&phi_elem(q, f, trunc)?)?)
}

/// Reads each cycle of a potential on `Q_n` as a word in the `Δ_i, B_i`
/// (rotated to start at `0`), giving a series `F` with `Φ(F) = w` up to
/// cyclic equivalence.
pub fn phi_inverse<C: Coeff>(w: &Potential<C>) -> Result<FreeSeries<C>, X7Error> {
    let q = w.quiver();
    let n = qn_rank(q)?;
    let mut decode: BTreeMap<[ArrowIdx; 3], Letter> = BTreeMap::new();
    for l in 0..2 * n {
        decode.insert(letter_cycle(q, n, l as Letter)?, l as Letter);
    }
    let cap = w.trunc() / 3 + 1;
    let mut f = FreeSeries::zero(n, true, cap);
    for (word, c) in w.terms() {
        let bad = || X7Error::NotAPhiImage(word.display(q));
        let r = word
            .rotations(q)
            .into_iter()
            .filter(|r| r.start() == 0)
            .min()
            .ok_or_else(bad)?;
        if r.len() % 3 != 0 {
            return Err(bad());
        }
        let letters = r
            .arrows()
            .chunks(3)
            .map(|ch| decode.get(&[ch[0], ch[1], ch[2]]).copied().ok_or_else(bad))
            .collect::<Result<Vec<_>, _>>()?;
        f.add_term(letters, c.clone());
    }
    Ok(f)
}

/// `Ψ(w) = p_1 b_{i1 i2} p_2 ... p_r b_{ir i1}` with `p_s = d_i` for `x_i`
/// and `p_s = -c_i a_i` for `y_i`, extended linearly to admissible series.
pub fn psi<C: Coeff>(
    q: &Arc<Quiver>,
    f: &FreeSeries<C>,
    trunc: usize,
) -> Result<Potential<C>, X7Error> {
    let n = qn_prime_rank(q)?;
    if f.n() != n {
        return Err(X7Error::WrongQuiver(format!(
            "series in {} variables on Q'_{n}",
            f.n()
        )));
    }
    let mut e = AlgElem::zero(q, trunc);
    for (w, c) in f.terms() {
        if !f.is_admissible_monomial(w) {
            return Err(X7Error::NotAdmissible(f.word_string(w)));
        }
        let mut arrows = Vec::new();
        let mut c = c.clone();
        for s in 0..w.len() {
            let (i, is_y) = letter_index(n, w[s]);
            let (j, _) = letter_index(n, w[(s + 1) % w.len()]);
            if is_y {
                arrows.push(arrow(q, &format!("c{i}"))?);
                arrows.push(arrow(q, &format!("a{i}"))?);
                c = -c;
            } else {
                arrows.push(arrow(q, &format!("d{i}"))?);
            }
            arrows.push(arrow(q, &b_name(i, j))?);
        }
        if arrows.len() <= trunc {
            e.add_term(PathWord::new(q, arrows)?, c);
        }
    }
    Ok(Potential::new(&e)?)
}

/// Whether the cyclic index sequence of `w` contains some `i, 1, i`.
pub fn contains_i1i<C: Coeff>(f: &FreeSeries<C>, w: &[Letter]) -> bool {
    let r = w.len();
    let idx = |s: usize| f.pi_letter(w[s % r]);
    r >= 2 && (0..r).any(|s| idx(s + 1) == 0 && idx(s) != 0 && idx(s) == idx(s + 2))
}

/// The letter rewriting `θ₂` attached to mutation of `X7'` at vertex 2.
///
/// Walks the places `s` whose index is not 1. When the previous such place
/// is adjacent, `x_i -> x_i` and `y_i -> -x_i x_1`; when an `x_1` sits in
/// between, `x_1 x_i -> -y_i` and `x_1 y_i -> y_i x_1`.
pub fn theta2<C: Coeff>(f: &FreeSeries<C>) -> Result<FreeSeries<C>, X7Error> {
    let n = f.n();
    let y1 = n as Letter;
    let x1: Letter = 0;
    let mut out = FreeSeries::zero(n, true, 2 * f.degree_cap());
    for (w, c) in f.terms() {
        let name = || f.word_string(w);
        if !f.is_admissible_monomial(w) {
            return Err(X7Error::NotAdmissible(name()));
        }
        if w.contains(&y1) {
            return Err(X7Error::ContainsY1(name()));
        }
        if contains_i1i(f, w) {
            return Err(X7Error::ViolatesAvoidance(name()));
        }
        let r = w.len();
        let places: Vec<usize> = (0..r).filter(|&s| f.pi_letter(w[s]) != x1).collect();
        let mut word = Vec::new();
        let mut c = c.clone();
        for (t, &s) in places.iter().enumerate() {
            let prev = places[(t + places.len() - 1) % places.len()];
            let gap = match (s + r - prev) % r {
                0 => r,
                g => g,
            };
            let (i, is_y) = letter_index(n, w[s]);
            let (xi, yi) = ((i - 1) as Letter, (n + i - 1) as Letter);
            match (gap, is_y) {
                (1, false) => word.push(xi),
                (1, true) => {
                    word.extend([xi, x1]);
                    c = -c;
                }
                (2, false) => {
                    word.push(yi);
                    c = -c;
                }
                (2, true) => word.extend([yi, x1]),
                _ => unreachable!("admissible words have gaps 1 or 2"),
            }
        }
        out.add_term(word, c);
    }
    Ok(out)
}

/// `Σ_k p[k] * arg^(k+1)`, i.e. `P(arg)` for `P(x) = Σ c_n x^n`, `c_n = p[n-1]`.
pub fn eval_p<C: Coeff>(p: &[C], arg: &FreeSeries<C>) -> FreeSeries<C> {
    let mut out = FreeSeries::zero(arg.n(), arg.uses_y(), arg.degree_cap());
    let mut pow = arg.clone();
    for c in p {
        out = out.add(&pow.scale(c)).expect("same alphabet");
        pow = pow.mul(arg).expect("same alphabet");
    }
    out
}

fn word<C: Coeff>(n: usize, uses_y: bool, cap: usize, letters: &[Letter], c: C) -> FreeSeries<C> {
    FreeSeries::monomial(n, uses_y, cap, letters.to_vec(), c)
}

/// `x_1 x_2 + x_2 x_3 + x_3 x_1`.
pub fn f0<C: Coeff>(cap: usize) -> FreeSeries<C> {
    let mut f = FreeSeries::zero(3, false, cap);
    for w in [[0, 1], [1, 2], [2, 0]] {
        f.add_term(w.to_vec(), C::one());
    }
    f
}

/// `f = x_1 x_2 + x_2 x_3 + x_3 x_1 + P(x_1 x_2 x_3)`, so `W_P = ΣB + Φ(f)`.
pub fn wp_series<C: Coeff>(p: &[C], cap: usize) -> FreeSeries<C> {
    let cyc = word(3, false, cap, &[0, 1, 2], C::one());
    f0(cap).add(&eval_p(p, &cyc)).expect("same alphabet")
}

/// `B_1 + ... + B_n` on `Q_n`.
pub fn sum_b<C: Coeff>(q: &Arc<Quiver>, trunc: usize) -> Result<Potential<C>, X7Error> {
    let n = qn_rank(q)?;
    let mut f = FreeSeries::zero(n, true, trunc / 3);
    for i in 0..n {
        f.add_term(vec![(n + i) as Letter], C::one());
    }
    phi(q, &f, trunc)
}

/// `B_1 + ... + B_n + Φ(f)` on `Q_n`.
pub fn w_of<C: Coeff>(
    q: &Arc<Quiver>,
    f: &FreeSeries<C>,
    trunc: usize,
) -> Result<Potential<C>, X7Error> {
    Ok(sum_b(q, trunc)?.add(&phi(q, f, trunc)?))
}

/// `W_P = B_1+B_2+B_3 + Δ_1Δ_2+Δ_2Δ_3+Δ_3Δ_1 + P(Δ_1Δ_2Δ_3)` on `X7`, with
/// `p[k]` the coefficient of `x^(k+1)` in `P`.
pub fn make_wp<C: Coeff>(p: &[C], trunc: usize) -> Potential<C> {
    w_of(&x7(), &wp_series(p, trunc / 3), trunc).expect("X7 shape")
}

/// `Σ_{i≠j} a_i b_ij c_j` on `Q'_n`.
pub fn triangles<C: Coeff>(q: &Arc<Quiver>, trunc: usize) -> Result<Potential<C>, X7Error> {
    let n = qn_prime_rank(q)?;
    let mut e = AlgElem::zero(q, trunc);
    for i in 1..=n {
        for j in (1..=n).filter(|&j| j != i) {
            let names = [format!("a{i}"), b_name(i, j), format!("c{j}")];
            let names: Vec<&str> = names.iter().map(String::as_str).collect();
            e.add_term(PathWord::from_names(q, &names)?, C::one());
        }
    }
    Ok(Potential::new(&e)?)
}

/// `W_F = Σ_{i≠j} a_i b_ij c_j + Ψ(F)` on `Q'_n`.
pub fn w_prime_of<C: Coeff>(
    q: &Arc<Quiver>,
    f: &FreeSeries<C>,
    trunc: usize,
) -> Result<Potential<C>, X7Error> {
    Ok(triangles(q, trunc)?.add(&psi(q, f, trunc)?))
}

/// `h(x, y) = Σ_n c_n Σ_{i=1}^n y^(n-i) x^(i-1)` with `x = x1`, `y = y1`,
/// so that `P(y) - P(x) - (y - x) h` is a sum of commutators.
pub fn build_h_witness<C: Coeff>(p: &[C]) -> FreeSeries<C> {
    let cap = p.len().max(1);
    let mut h = FreeSeries::zero(1, true, cap);
    for (k, c) in p.iter().enumerate() {
        let m = k + 1;
        for i in 1..=m {
            let mut w = vec![1 as Letter; m - i];
            w.extend(std::iter::repeat(0).take(i - 1));
            h.add_term(w, c.clone());
        }
    }
    h
}

/// `P(y) - P(x) - (y - x) h(x, y)` in cyclic normal form.
pub fn h_defect<C: Coeff>(p: &[C], h: &FreeSeries<C>) -> FreeSeries<C> {
    let cap = p.len() + 1;
    let x = FreeSeries::x(1, true, cap, 1);
    let y = FreeSeries::y(1, cap, 1);
    let h = h.with_cap(cap);
    let yx = y.sub(&x).expect("same alphabet");
    eval_p(p, &y)
        .sub(&eval_p(p, &x))
        .and_then(|d| d.sub(&yx.mul(&h)?))
        .expect("same alphabet")
        .cyclic_normal_form()
}

/// The matching at `0` of `Q_n` pairing `(g_i, a_i)` with `b_i`.
pub fn central_matching(n: usize) -> Matching {
    let names: Vec<[String; 3]> = (1..=n)
        .map(|i| [format!("g{i}"), format!("a{i}"), format!("b{i}")])
        .collect();
    let refs: Vec<(&str, &str, &str)> = names
        .iter()
        .map(|[a, b, c]| (a.as_str(), b.as_str(), c.as_str()))
        .collect();
    Matching::new(0, &refs)
}

/// Renaming of the dual quiver at `0` onto `Q'_n`:
/// `a_i* -> c_i`, `g_i* -> a_i`, `d_i -> d_i`, `[g_i·a_j] -> b_ij`.
pub fn central_renaming(n: usize) -> Vec<(String, String)> {
    let mut pairs = Vec::new();
    for i in 1..=n {
        pairs.push((reversed_name(&format!("a{i}")), format!("c{i}")));
        pairs.push((reversed_name(&format!("g{i}")), format!("a{i}")));
        pairs.push((format!("d{i}"), format!("d{i}")));
        for j in (1..=n).filter(|&j| j != i) {
            pairs.push((
                composite_name(&format!("g{i}"), &format!("a{j}")),
                b_name(i, j),
            ));
        }
    }
    pairs
}

/// The matching at a side vertex `k` of `Q_n`: `(a_i, b_i) -> g_i` at
/// `k = 2i-1` and `(b_i, g_i) -> a_i` at `k = 2i`.
pub fn side_matching(k: VertexId) -> Matching {
    let i = (k as usize + 1) / 2;
    let (a, b, g) = (format!("a{i}"), format!("b{i}"), format!("g{i}"));
    if k % 2 == 1 {
        Matching::new(k, &[(&a, &b, &g)])
    } else {
        Matching::new(k, &[(&b, &g, &a)])
    }
}

/// The isomorphism `Q_n -> μ_k(Q_n)` at a side vertex, swapping `2i-1` and
/// `2i` and fixing the other blocks.
pub fn side_renaming(n: usize, k: VertexId) -> Vec<(String, String)> {
    let i = (k as usize + 1) / 2;
    let (a, b, g, d) = (
        format!("a{i}"),
        format!("b{i}"),
        format!("g{i}"),
        format!("d{i}"),
    );
    let mut pairs = if k % 2 == 1 {
        vec![
            (a.clone(), composite_name(&a, &d)),
            (b.clone(), reversed_name(&d)),
            (g.clone(), reversed_name(&a)),
            (d.clone(), reversed_name(&b)),
        ]
    } else {
        vec![
            (a.clone(), reversed_name(&g)),
            (b.clone(), reversed_name(&d)),
            (g.clone(), composite_name(&d, &g)),
            (d.clone(), reversed_name(&b)),
        ]
    };
    for j in (1..=n).filter(|&j| j != i) {
        for x in ["a", "b", "g", "d"] {
            pairs.push((format!("{x}{j}"), format!("{x}{j}")));
        }
    }
    pairs
}

/// The matching at vertex 2 of `X7'`: `(a1, b12) -> c2`, `(a1, b13) -> c3`.
pub fn x7_prime_matching() -> Matching {
    Matching::new(2, &[("a1", "b12", "c2"), ("a1", "b13", "c3")])
}

/// The isomorphism `θ̄: (X7')* -> X7'` for mutation at vertex 2.
pub const THETA_BAR: [(&str, &str); 15] = [
    ("a2", "b13"),
    ("a3", "b12"),
    ("b21", "c3"),
    ("b23", "d3"),
    ("b31", "c2"),
    ("b32", "d2"),
    ("c1", "a1"),
    ("[d1·b12]", "a2"),
    ("[d1·b13]", "a3"),
    ("d2", "b23"),
    ("d3", "b32"),
    ("a1*", "d1"),
    ("d1*", "c1"),
    ("b12*", "b21"),
    ("b13*", "b31"),
];

/// Renaming by name pairs, checked to be a bijection on arrows.
pub fn renaming_iso<C: Coeff, S: AsRef<str>>(
    source: &Arc<Quiver>,
    target: &Arc<Quiver>,
    pairs: &[(S, S)],
) -> Result<AlgebraMap<C>, X7Error> {
    let from: BTreeSet<&str> = pairs.iter().map(|p| p.0.as_ref()).collect();
    let to: BTreeSet<&str> = pairs.iter().map(|p| p.1.as_ref()).collect();
    if from.len() != source.num_arrows()
        || to.len() != target.num_arrows()
        || from.len() != pairs.len()
    {
        return Err(X7Error::NotIsomorphic(format!(
            "{} pairs for {} and {} arrows",
            pairs.len(),
            source.num_arrows(),
            target.num_arrows()
        )));
    }
    let refs: Vec<(&str, &str)> = pairs
        .iter()
        .map(|(a, b)| (a.as_ref(), b.as_ref()))
        .collect();
    Ok(AlgebraMap::renaming(source, target, &refs)?)
}

/// `μ_0(Q_n, w)` through the matching `(g_i, a_i) -> b_i`, renamed onto `Q'_n`.
pub fn mutate_center<C: Coeff>(q: &Arc<Quiver>, w: &Potential<C>) -> Result<Potential<C>, X7Error> {
    let n = qn_rank(q)?;
    let target = Arc::new(make_qn_prime(n));
    let r = mutate_qp(q, w, &central_matching(n))?;
    let map = renaming_iso(&r.quiver, &target, &central_renaming(n))?;
    Ok(r.potential.map(&map)?)
}

/// `μ_k(Q_n, w)` at a side vertex, with signs removed through the first
/// star decomposition of the matching, pulled back to `Q_n` along the
/// block swap. Equal to `w` exactly when the side mutation fixes it.
pub fn mutate_side<C: Coeff>(
    q: &Arc<Quiver>,
    w: &Potential<C>,
    k: VertexId,
) -> Result<Potential<C>, X7Error> {
    let n = qn_rank(q)?;
    if k == 0 || k as usize > 2 * n {
        return Err(X7Error::WrongQuiver(format!("{k} is not a side vertex")));
    }
    let m = side_matching(k);
    let r = mutate_qp(q, w, &m)?;
    let (ap, bp) =
        find_star_decomposition(q, &m)?.ok_or(MutationError::StarDecompositionInvalid)?;
    let plus = sign_eliminate(&r.potential, &r.dual, &ap, &bp)?;
    let swap = renaming_iso::<C, _>(&r.quiver, q, &invert(&side_renaming(n, k)))?;
    Ok(plus.map(&swap)?)
}

fn invert(pairs: &[(String, String)]) -> Vec<(String, String)> {
    pairs.iter().map(|(a, b)| (b.clone(), a.clone())).collect()
}

/// `μ_2(X7', w)` through `(a1, b12) -> c2, (a1, b13) -> c3`, signs removed
/// with `A' = {a1}, B' = ∅`, renamed onto `X7'` by `θ̄`.
pub fn mutate_x7_prime_at_2<C: Coeff>(
    q: &Arc<Quiver>,
    w: &Potential<C>,
) -> Result<Potential<C>, X7Error> {
    if qn_prime_rank(q)? != 3 {
        return Err(X7Error::WrongQuiver("expected X7'".into()));
    }
    let m = x7_prime_matching();
    let r = mutate_qp(q, w, &m)?;
    let plus = sign_eliminate(&r.potential, &r.dual, &[arrow(q, "a1")?], &[])?;
    let map = renaming_iso(&r.quiver, q, &THETA_BAR)?;
    Ok(plus.map(&map)?)
}
