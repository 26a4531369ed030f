//! Mutation of quivers with potentials through matchings and dual quivers.
//!
//! A matching at `k` pairs some compositions `α β` through `k` with arrows
//! `γ` closing them to 3-cycles. The mutation of `W_ρ + S` with `S`
//! admissible is read off the dual quiver without any reduction step.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::coeff::Coeff;
use crate::path_algebra::{AlgElem, AlgebraError, PathWord, Potential};
use crate::quiver::{Arrow, ArrowIdx, Quiver, QuiverError, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MutationError {
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
    #[error("matching is not maximal")]
    NotMaximal,
    #[error("potential is not admissible: {0}")]
    NotAdmissible(String),
    #[error("w - W_rho is not admissible: {0}")]
    DecompositionFails(String),
    #[error("C' is not of the form A' * B' for the given sets")]
    StarDecompositionInvalid,
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// One matched composition `alpha beta` and the arrow `gamma` closing it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MatchedPair {
    pub alpha: String,
    pub beta: String,
    pub gamma: String,
}

/// A matching at a vertex, recorded by arrow names so it can be carried
/// between quivers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matching {
    pub vertex: VertexId,
    pub pairs: Vec<MatchedPair>,
}

/// A matching resolved against a quiver.
#[derive(Clone, Debug)]
struct Resolved {
    k: VertexId,
    /// `(alpha, beta, gamma)` in the order given.
    pairs: Vec<(ArrowIdx, ArrowIdx, ArrowIdx)>,
    into: Vec<ArrowIdx>,
    out: Vec<ArrowIdx>,
}

impl Resolved {
    fn matched(&self) -> BTreeSet<(ArrowIdx, ArrowIdx)> {
        self.pairs.iter().map(|&(a, b, _)| (a, b)).collect()
    }
    /// All compositions through `k`, ordered by `(alpha, beta)`.
    fn compositions(&self) -> Vec<(ArrowIdx, ArrowIdx)> {
        self.into
            .iter()
            .flat_map(|&a| self.out.iter().map(move |&b| (a, b)))
            .collect()
    }
}

impl Matching {
    pub fn new(vertex: VertexId, pairs: &[(&str, &str, &str)]) -> Self {
        let pairs = pairs
            .iter()
            .map(|(a, b, g)| MatchedPair {
                alpha: a.to_string(),
                beta: b.to_string(),
                gamma: g.to_string(),
            })
            .collect();
        Matching { vertex, pairs }
    }

    pub fn empty(vertex: VertexId) -> Self {
        Matching {
            vertex,
            pairs: Vec::new(),
        }
    }

    fn resolve(&self, q: &Quiver) -> Result<Resolved, MutationError> {
        let k = self.vertex;
        if !q.has_vertex(k) {
            return Err(QuiverError::UnknownVertex(k).into());
        }
        if q.has_loop_at(k) {
            return Err(QuiverError::LoopAtVertex(k).into());
        }
        if q.has_two_cycle_through(k) {
            return Err(QuiverError::TwoCycleThroughVertex(k).into());
        }
        let bad = |m: String| Err(MutationError::InvalidMatching(m));
        let mut pairs = Vec::new();
        for p in &self.pairs {
            let (a, b, g) = (
                q.arrow_by_name(&p.alpha)?,
                q.arrow_by_name(&p.beta)?,
                q.arrow_by_name(&p.gamma)?,
            );
            if q.tgt(a) != k || q.src(b) != k {
                return bad(format!("{}·{} is not a path through {k}", p.alpha, p.beta));
            }
            if q.src(g) != q.tgt(b) || q.tgt(g) != q.src(a) {
                return bad(format!(
                    "{} does not close {}·{} to a 3-cycle",
                    p.gamma, p.alpha, p.beta
                ));
            }
            pairs.push((a, b, g));
        }
        let gs: BTreeSet<_> = pairs.iter().map(|p| p.2).collect();
        let abs: BTreeSet<_> = pairs.iter().map(|p| (p.0, p.1)).collect();
        if gs.len() != pairs.len() || abs.len() != pairs.len() {
            return bad("repeated gamma or repeated composition".into());
        }
        Ok(Resolved {
            k,
            pairs,
            into: q.arrows_into(k),
            out: q.arrows_out_of(k),
        })
    }

    /// The potential `W_ρ = Σ α β γ` encoding the matching.
    pub fn encoding<C: Coeff>(
        &self,
        q: &Arc<Quiver>,
        trunc: usize,
    ) -> Result<Potential<C>, MutationError> {
        let r = self.resolve(q)?;
        let mut e = AlgElem::zero(q, trunc);
        for &(a, b, g) in &r.pairs {
            e.add_term(PathWord::new(q, vec![a, b, g])?, C::one());
        }
        Ok(Potential::new(&e)?)
    }
}

/// `|C'_ij| = min(|C_ij|, |Γ_ij|)` for all `i, j ≠ k`.
pub fn is_maximal(q: &Quiver, m: &Matching) -> Result<bool, MutationError> {
    let r = m.resolve(q)?;
    let mut c: BTreeMap<(VertexId, VertexId), usize> = BTreeMap::new();
    for (a, b) in r.compositions() {
        *c.entry((q.src(a), q.tgt(b))).or_default() += 1;
    }
    let mut matched: BTreeMap<(VertexId, VertexId), usize> = BTreeMap::new();
    for &(a, b, _) in &r.pairs {
        *matched.entry((q.src(a), q.tgt(b))).or_default() += 1;
    }
    Ok(c.iter()
        .all(|(&(i, j), &n)| matched.get(&(i, j)).copied().unwrap_or(0) == n.min(q.count(j, i))))
}

/// Where an arrow of a dual quiver came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Kept,
    /// `α*` for an arrow `α` at `k`.
    Reversed(String),
    /// `[α·β]` for an unmatched composition.
    Composite(String, String),
}

/// The dual quiver and dual matching of a matching.
#[derive(Clone, Debug)]
pub struct DualData {
    pub original: Arc<Quiver>,
    pub matching: Matching,
    pub quiver: Arc<Quiver>,
    pub dual_matching: Matching,
    pub provenance: BTreeMap<String, Provenance>,
}

pub fn reversed_name(name: &str) -> String {
    format!("{name}*")
}

pub fn composite_name(a: &str, b: &str) -> String {
    format!("[{a}·{b}]")
}

/// Arrows at `k` reversed in place, then `[α·β]` appended for the listed
/// compositions. Arrows in `drop` are removed.
fn build_mutated(
    q: &Quiver,
    k: VertexId,
    drop: &BTreeSet<ArrowIdx>,
    composites: &[(ArrowIdx, ArrowIdx)],
) -> Result<(Quiver, BTreeMap<String, Provenance>), MutationError> {
    let mut arrows = Vec::new();
    let mut prov = BTreeMap::new();
    for (i, a) in q.arrows().iter().enumerate() {
        if drop.contains(&(i as ArrowIdx)) {
            continue;
        }
        if a.src == k || a.tgt == k {
            let n = reversed_name(&a.name);
            prov.insert(n.clone(), Provenance::Reversed(a.name.clone()));
            arrows.push(Arrow::new(n, a.tgt, a.src));
        } else {
            prov.insert(a.name.clone(), Provenance::Kept);
            arrows.push(a.clone());
        }
    }
    for &(a, b) in composites {
        let n = composite_name(q.name(a), q.name(b));
        prov.insert(
            n.clone(),
            Provenance::Composite(q.name(a).to_string(), q.name(b).to_string()),
        );
        arrows.push(Arrow::new(n, q.src(a), q.tgt(b)));
    }
    let out = Quiver::new(q.vertices().to_vec(), q.frozen().clone(), arrows)?;
    Ok((out, prov))
}

/// The dual quiver `Q*` and dual matching `ρ*`.
pub fn dualize(q: &Arc<Quiver>, m: &Matching) -> Result<DualData, MutationError> {
    let r = m.resolve(q)?;
    let matched = r.matched();
    let unmatched: Vec<_> = r
        .compositions()
        .into_iter()
        .filter(|p| !matched.contains(p))
        .collect();
    let drop: BTreeSet<ArrowIdx> = r.pairs.iter().map(|p| p.2).collect();
    let (dual, provenance) = build_mutated(q, r.k, &drop, &unmatched)?;
    let pairs = unmatched
        .iter()
        .map(|&(a, b)| MatchedPair {
            alpha: reversed_name(q.name(b)),
            beta: reversed_name(q.name(a)),
            gamma: composite_name(q.name(a), q.name(b)),
        })
        .collect();
    Ok(DualData {
        original: q.clone(),
        matching: m.clone(),
        quiver: Arc::new(dual),
        dual_matching: Matching { vertex: r.k, pairs },
        provenance,
    })
}

/// Representatives of `s` as stored must not start at `k`, and no matched
/// composition may occur inside a term.
pub fn is_admissible<C: Coeff>(s: &Potential<C>, m: &Matching) -> bool {
    admissibility_violation(s, m).is_none()
}

fn admissibility_violation<C: Coeff>(s: &Potential<C>, m: &Matching) -> Option<String> {
    let q = s.quiver();
    let r = match m.resolve(q) {
        Ok(r) => r,
        Err(e) => return Some(e.to_string()),
    };
    let matched = r.matched();
    for w in s.terms().keys() {
        if w.start() == r.k {
            return Some(format!("{} starts at {}", w.display(q), r.k));
        }
        if w.arrows()
            .windows(2)
            .any(|p| matched.contains(&(p[0], p[1])))
        {
            return Some(format!("{} contains a matched composition", w.display(q)));
        }
    }
    None
}

/// `[W]`: each composition `α β` through `k` replaced by the arrow named
/// `[α·β]` of `target`, every other arrow mapped by name. Gamma arrows listed
/// in `subst` are replaced by the given words with a sign flip.
fn bracket<C: Coeff>(
    w: &Potential<C>,
    k: VertexId,
    target: &Arc<Quiver>,
    forbidden: &BTreeSet<(ArrowIdx, ArrowIdx)>,
    subst: &BTreeMap<ArrowIdx, [String; 2]>,
) -> Result<Potential<C>, MutationError> {
    let q = w.quiver();
    let mut out = AlgElem::zero(target, w.trunc());
    for (word, c) in w.terms() {
        let arr = word.arrows();
        let mut names: Vec<String> = Vec::with_capacity(arr.len() + 2);
        let mut negate = false;
        let mut i = 0;
        while i < arr.len() {
            let a = arr[i];
            if let Some(rep) = subst.get(&a) {
                names.extend(rep.iter().cloned());
                negate = !negate;
                i += 1;
                continue;
            }
            if q.tgt(a) == k && i + 1 < arr.len() {
                let b = arr[i + 1];
                if forbidden.contains(&(a, b)) {
                    return Err(MutationError::NotAdmissible(format!(
                        "{} contains {}·{}",
                        word.display(q),
                        q.name(a),
                        q.name(b)
                    )));
                }
                names.push(composite_name(q.name(a), q.name(b)));
                i += 2;
            } else {
                names.push(q.name(a).to_string());
                i += 1;
            }
        }
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let nw = PathWord::from_names(target, &refs)?;
        out.add_term(nw, if negate { -c.clone() } else { c.clone() });
    }
    Ok(Potential::new(&out)?)
}

/// `S* = sub_{γ ← -β*_γ α*_γ}([S])` on the dual quiver.
pub fn star_potential<C: Coeff>(
    s: &Potential<C>,
    d: &DualData,
) -> Result<Potential<C>, MutationError> {
    let q = &d.original;
    let r = d.matching.resolve(q)?;
    if let Some(msg) = admissibility_violation(s, &d.matching) {
        return Err(MutationError::NotAdmissible(msg));
    }
    let subst = r
        .pairs
        .iter()
        .map(|&(a, b, g)| (g, [reversed_name(q.name(b)), reversed_name(q.name(a))]))
        .collect();
    bracket(s, r.k, &d.quiver, &r.matched(), &subst)
}

/// `W_{ρ*} = Σ_{C \ C'} [α·β] β* α*` on the dual quiver.
fn dual_encoding<C: Coeff>(d: &DualData, trunc: usize) -> Result<Potential<C>, MutationError> {
    let dq = &d.quiver;
    let mut e = AlgElem::zero(dq, trunc);
    for p in &d.dual_matching.pairs {
        e.add_term(
            PathWord::from_names(dq, &[&p.gamma, &p.alpha, &p.beta])?,
            C::one(),
        );
    }
    Ok(Potential::new(&e)?)
}

/// The pre-mutation: arrows at `k` reversed in place, `[α·β]` appended for
/// every composition, and `W̃ = Σ [α·β] β* α* + [W]`.
pub fn premutate_qp<C: Coeff>(
    q: &Arc<Quiver>,
    w: &Potential<C>,
    k: VertexId,
) -> Result<(Arc<Quiver>, Potential<C>), MutationError> {
    let r = Matching::empty(k).resolve(q)?;
    let all = r.compositions();
    let (pq, _) = build_mutated(q, k, &BTreeSet::new(), &all)?;
    let pq = Arc::new(pq);
    let w = w.rotate_away_from(k)?;
    let mut e = bracket(&w, k, &pq, &BTreeSet::new(), &BTreeMap::new())?
        .elem()
        .clone();
    for &(a, b) in &all {
        let names = [
            composite_name(q.name(a), q.name(b)),
            reversed_name(q.name(b)),
            reversed_name(q.name(a)),
        ];
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        e.add_term(PathWord::from_names(&pq, &refs)?, C::one());
    }
    Ok((pq, Potential::new(&e)?))
}

/// Mutation of `(Q, W)` at the matching's vertex.
#[derive(Clone)]
pub struct QpMutation<C> {
    pub quiver: Arc<Quiver>,
    pub potential: Potential<C>,
    pub dual: DualData,
}

impl<C: Coeff> std::fmt::Debug for QpMutation<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("QpMutation")
            .field("quiver", &self.quiver)
            .field("potential", &self.potential)
            .finish()
    }
}

/// `μ_k(Q, W) ≃ (Q*, W_{ρ*} + S*)` for `W = W_ρ + S` with `ρ` maximal and
/// `S` admissible.
pub fn mutate_qp<C: Coeff>(
    q: &Arc<Quiver>,
    w: &Potential<C>,
    m: &Matching,
) -> Result<QpMutation<C>, MutationError> {
    let k = m.vertex;
    if let Some(a) = q.arrows().iter().find(|a| a.src == a.tgt) {
        return Err(QuiverError::LoopAtVertex(a.src).into());
    }
    if let Some(a) = q.arrows().iter().find(|a| q.count(a.tgt, a.src) > 0) {
        return Err(QuiverError::TwoCycleThroughVertex(a.src).into());
    }
    if !is_maximal(q, m)? {
        return Err(MutationError::NotMaximal);
    }
    let trunc = w.trunc();
    let s = w.sub(&m.encoding(q, trunc)?).rotate_away_from(k)?;
    if let Some(msg) = admissibility_violation(&s, m) {
        return Err(MutationError::DecompositionFails(msg));
    }
    let dual = dualize(q, m)?;
    let potential = dual_encoding(&dual, trunc)?.add(&star_potential(&s, &dual)?);
    Ok(QpMutation {
        quiver: dual.quiver.clone(),
        potential,
        dual,
    })
}

/// `A' ⋆ B' = A' × (B \ B') ∪ (A \ A') × B'`.
fn star_set(
    r: &Resolved,
    aprime: &BTreeSet<ArrowIdx>,
    bprime: &BTreeSet<ArrowIdx>,
) -> BTreeSet<(ArrowIdx, ArrowIdx)> {
    r.compositions()
        .into_iter()
        .filter(|(a, b)| aprime.contains(a) != bprime.contains(b))
        .collect()
}

/// Applies the sign change `ε_{A',B'}` (`α* ↦ -α*` for `α ∈ A'`, `β* ↦ -β*`
/// for `β ∈ B'`, `[α·β] ↦ -[α·β]` on `A' ⋆ B'`) to a potential on the dual
/// quiver. When `C' = A' ⋆ B'` this turns `W*` into the sign-free `W*_+`.
/// `aprime` and `bprime` index arrows of the original quiver.
pub fn sign_eliminate<C: Coeff>(
    wstar: &Potential<C>,
    d: &DualData,
    aprime: &[ArrowIdx],
    bprime: &[ArrowIdx],
) -> Result<Potential<C>, MutationError> {
    let q = &d.original;
    let r = d.matching.resolve(q)?;
    let aset: BTreeSet<_> = aprime.iter().copied().collect();
    let bset: BTreeSet<_> = bprime.iter().copied().collect();
    if !aset.iter().all(|a| r.into.contains(a)) || !bset.iter().all(|b| r.out.contains(b)) {
        return Err(MutationError::StarDecompositionInvalid);
    }
    let star = star_set(&r, &aset, &bset);
    if star != r.matched() {
        return Err(MutationError::StarDecompositionInvalid);
    }
    let dq = wstar.quiver();
    let mut flip = vec![false; dq.num_arrows()];
    let names = aset
        .iter()
        .chain(&bset)
        .map(|&a| reversed_name(q.name(a)))
        .chain(
            star.iter()
                .map(|&(a, b)| composite_name(q.name(a), q.name(b))),
        );
    for n in names {
        if let Some(i) = dq.arrow_index(&n) {
            flip[i as usize] = true;
        }
    }
    let mut e = AlgElem::zero(dq, wstar.trunc());
    for (w, c) in wstar.terms() {
        let odd = w.arrows().iter().filter(|&&a| flip[a as usize]).count() % 2 == 1;
        e.add_term(w.clone(), if odd { -c.clone() } else { c.clone() });
    }
    Ok(Potential::new(&e)?)
}

/// First `(A', B')` with `C' = A' ⋆ B'`, subsets taken in binary counting
/// order over the declared arrow order (A' outermost).
pub fn find_star_decomposition(
    q: &Quiver,
    m: &Matching,
) -> Result<Option<(Vec<ArrowIdx>, Vec<ArrowIdx>)>, MutationError> {
    let r = m.resolve(q)?;
    let matched = r.matched();
    let subset = |all: &[ArrowIdx], mask: u64| -> BTreeSet<ArrowIdx> {
        all.iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &a)| a)
            .collect()
    };
    if r.into.len() > 20 || r.out.len() > 20 {
        return Err(MutationError::InvalidMatching(
            "too many arrows at the vertex for subset search".into(),
        ));
    }
    for ma in 0..1u64 << r.into.len() {
        let aset = subset(&r.into, ma);
        for mb in 0..1u64 << r.out.len() {
            let bset = subset(&r.out, mb);
            if star_set(&r, &aset, &bset) == matched {
                return Ok(Some((
                    aset.into_iter().collect(),
                    bset.into_iter().collect(),
                )));
            }
        }
    }
    Ok(None)
}

/// Searches the unit-coefficient 3-cycles of `w` through `k` for a maximal
/// matching whose remainder `w - W_ρ` is admissible. Candidates are sorted
/// by `(γ, α, β)` and tried include-first, so the result is the least such
/// matching in that order.
pub fn find_matching_for<C: Coeff>(
    q: &Arc<Quiver>,
    w: &Potential<C>,
    k: VertexId,
) -> Option<Matching> {
    let r = Matching::empty(k).resolve(q).ok()?;
    let mut cands = Vec::new();
    for (a, b) in r.compositions() {
        for g in q.arrows_between(q.tgt(b), q.src(a)) {
            let cyc = PathWord::new(q, vec![a, b, g]).ok()?;
            if w.coeff_of_cycle(&cyc) == C::one() {
                cands.push((g, a, b));
            }
        }
    }
    cands.sort_unstable();
    // per (i, j) the number of pairs a maximal matching needs
    let mut need: BTreeMap<(VertexId, VertexId), usize> = BTreeMap::new();
    for (a, b) in r.compositions() {
        *need.entry((q.src(a), q.tgt(b))).or_default() += 1;
    }
    for ((i, j), n) in need.iter_mut() {
        *n = (*n).min(q.count(*j, *i));
    }
    let mut chosen = Vec::new();
    search_matching(q, w, k, &cands, 0, &need, &mut chosen)
}

fn search_matching<C: Coeff>(
    q: &Arc<Quiver>,
    w: &Potential<C>,
    k: VertexId,
    cands: &[(ArrowIdx, ArrowIdx, ArrowIdx)],
    pos: usize,
    need: &BTreeMap<(VertexId, VertexId), usize>,
    chosen: &mut Vec<(ArrowIdx, ArrowIdx, ArrowIdx)>,
) -> Option<Matching> {
    let group = |&(_, a, b): &(ArrowIdx, ArrowIdx, ArrowIdx)| (q.src(a), q.tgt(b));
    // prune: every group must still be able to reach its quota
    for (g, &n) in need {
        let have = chosen.iter().filter(|c| group(c) == *g).count();
        let left = cands[pos..].iter().filter(|c| group(c) == *g).count();
        if have + left < n {
            return None;
        }
    }
    if pos == cands.len() {
        let pairs = chosen
            .iter()
            .map(|&(g, a, b)| MatchedPair {
                alpha: q.name(a).into(),
                beta: q.name(b).into(),
                gamma: q.name(g).into(),
            })
            .collect();
        let m = Matching { vertex: k, pairs };
        let s = w
            .sub(&m.encoding(q, w.trunc()).ok()?)
            .rotate_away_from(k)
            .ok()?;
        return is_admissible(&s, &m).then_some(m);
    }
    let c = cands[pos];
    let free = chosen
        .iter()
        .all(|&(g, a, b)| g != c.0 && (a, b) != (c.1, c.2));
    let full = chosen.iter().filter(|x| group(x) == group(&c)).count() >= need[&group(&c)];
    if free && !full {
        chosen.push(c);
        if let Some(m) = search_matching(q, w, k, cands, pos + 1, need, chosen) {
            return Some(m);
        }
        chosen.pop();
    }
    search_matching(q, w, k, cands, pos + 1, need, chosen)
}

/// Rank of a small matrix over a coefficient field.
fn small_rank<C: Coeff>(mut rows: Vec<Vec<C>>) -> usize {
    let mut rank = 0;
    let ncols = rows.first().map_or(0, Vec::len);
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].inv().expect("field");
        for i in rank + 1..rows.len() {
            if rows[i][col].is_zero() {
                continue;
            }
            let f = rows[i][col].clone() * inv.clone();
            for j in col..ncols {
                let v = rows[i][j].clone() - f.clone() * rows[rank][j].clone();
                rows[i][j] = v;
            }
        }
        rank += 1;
    }
    rank
}

/// Number of 2-cycles left in the reduced mutation of `(Q, W)` at `k`:
/// `Σ_{i,j} min(|C_ij|, |Γ_ij|) - rank M_ij` with `M_ij[(α,β)][γ]` the
/// coefficient of `α β γ` in `W`. Assumes `Q` is 2-acyclic.
pub fn count_mutation_two_cycles<C: Coeff>(
    q: &Arc<Quiver>,
    w: &Potential<C>,
    k: VertexId,
) -> Result<usize, MutationError> {
    let r = Matching::empty(k).resolve(q)?;
    let mut groups: BTreeMap<(VertexId, VertexId), Vec<(ArrowIdx, ArrowIdx)>> = BTreeMap::new();
    for (a, b) in r.compositions() {
        groups.entry((q.src(a), q.tgt(b))).or_default().push((a, b));
    }
    let mut total = 0;
    for ((i, j), comps) in groups {
        let gammas = q.arrows_between(j, i);
        if gammas.is_empty() {
            continue;
        }
        let mut rows = Vec::new();
        for &(a, b) in &comps {
            let mut row = Vec::new();
            for &g in &gammas {
                row.push(w.coeff_of_cycle(&PathWord::new(q, vec![a, b, g])?));
            }
            rows.push(row);
        }
        total += comps.len().min(gammas.len()) - small_rank(rows);
    }
    Ok(total)
}
