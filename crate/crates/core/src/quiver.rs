//! Finite quivers, exchange matrices and quiver mutation.

use std::collections::{BTreeMap, BTreeSet, HashMap};

/// Vertex identifier.
pub type VertexId = u32;
/// Index of an arrow in its quiver's declared order. The declared order is
/// the order used to compare words.
pub type ArrowIdx = u32;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub src: VertexId,
    pub tgt: VertexId,
}

impl Arrow {
    pub fn new(name: impl Into<String>, src: VertexId, tgt: VertexId) -> Self {
        Arrow {
            name: name.into(),
            src,
            tgt,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuiverError {
    #[error("vertex {0} is listed twice")]
    DuplicateVertex(VertexId),
    #[error("arrow `{0}` is listed twice")]
    DuplicateArrow(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("loop at vertex {0}")]
    LoopAtVertex(VertexId),
    #[error("2-cycle through vertex {0}")]
    TwoCycleThroughVertex(VertexId),
    #[error("vertex {0} is frozen")]
    FrozenVertex(VertexId),
    #[error("quiver already has frozen vertices")]
    AlreadyFramed,
    #[error("vertex {0} is neither green nor red")]
    SignCoherenceViolation(VertexId),
}

/// A finite quiver with named arrows and an optional set of frozen vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<VertexId>,
    frozen: BTreeSet<VertexId>,
    arrows: Vec<Arrow>,
    by_name: HashMap<String, ArrowIdx>,
    position: HashMap<VertexId, usize>,
}

impl Quiver {
    pub fn new(
        vertices: Vec<VertexId>,
        frozen: BTreeSet<VertexId>,
        arrows: Vec<Arrow>,
    ) -> Result<Self, QuiverError> {
        let mut position = HashMap::new();
        for (i, &v) in vertices.iter().enumerate() {
            if position.insert(v, i).is_some() {
                return Err(QuiverError::DuplicateVertex(v));
            }
        }
        if let Some(&v) = frozen.iter().find(|v| !position.contains_key(v)) {
            return Err(QuiverError::UnknownVertex(v));
        }
        let mut by_name = HashMap::new();
        for (i, a) in arrows.iter().enumerate() {
            for v in [a.src, a.tgt] {
                if !position.contains_key(&v) {
                    return Err(QuiverError::UnknownVertex(v));
                }
            }
            if by_name.insert(a.name.clone(), i as ArrowIdx).is_some() {
                return Err(QuiverError::DuplicateArrow(a.name.clone()));
            }
        }
        Ok(Quiver {
            vertices,
            frozen,
            arrows,
            by_name,
            position,
        })
    }

    /// Quiver without frozen vertices from `(name, src, tgt)` triples.
    pub fn from_arrows(
        vertices: impl IntoIterator<Item = VertexId>,
        arrows: &[(&str, VertexId, VertexId)],
    ) -> Result<Self, QuiverError> {
        Quiver::new(
            vertices.into_iter().collect(),
            BTreeSet::new(),
            arrows
                .iter()
                .map(|(n, s, t)| Arrow::new(*n, *s, *t))
                .collect(),
        )
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }
    pub fn frozen(&self) -> &BTreeSet<VertexId> {
        &self.frozen
    }
    pub fn is_frozen(&self, v: VertexId) -> bool {
        self.frozen.contains(&v)
    }
    pub fn mutable_vertices(&self) -> Vec<VertexId> {
        self.vertices
            .iter()
            .copied()
            .filter(|v| !self.is_frozen(*v))
            .collect()
    }
    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.position.contains_key(&v)
    }
    /// Position of a vertex in the declared vertex list.
    pub fn position(&self, v: VertexId) -> Option<usize> {
        self.position.get(&v).copied()
    }
    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }
    pub fn arrow(&self, a: ArrowIdx) -> &Arrow {
        &self.arrows[a as usize]
    }
    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }
    pub fn arrow_index(&self, name: &str) -> Option<ArrowIdx> {
        self.by_name.get(name).copied()
    }
    pub fn arrow_by_name(&self, name: &str) -> Result<ArrowIdx, QuiverError> {
        self.arrow_index(name)
            .ok_or_else(|| QuiverError::UnknownArrow(name.to_string()))
    }
    pub fn src(&self, a: ArrowIdx) -> VertexId {
        self.arrows[a as usize].src
    }
    pub fn tgt(&self, a: ArrowIdx) -> VertexId {
        self.arrows[a as usize].tgt
    }
    pub fn name(&self, a: ArrowIdx) -> &str {
        &self.arrows[a as usize].name
    }

    /// Arrows ending at `k`, in declared order.
    pub fn arrows_into(&self, k: VertexId) -> Vec<ArrowIdx> {
        (0..self.arrows.len() as ArrowIdx)
            .filter(|&a| self.tgt(a) == k)
            .collect()
    }
    /// Arrows starting at `k`, in declared order.
    pub fn arrows_out_of(&self, k: VertexId) -> Vec<ArrowIdx> {
        (0..self.arrows.len() as ArrowIdx)
            .filter(|&a| self.src(a) == k)
            .collect()
    }
    /// Arrows `i -> j`, in declared order.
    pub fn arrows_between(&self, i: VertexId, j: VertexId) -> Vec<ArrowIdx> {
        (0..self.arrows.len() as ArrowIdx)
            .filter(|&a| self.src(a) == i && self.tgt(a) == j)
            .collect()
    }
    pub fn count(&self, i: VertexId, j: VertexId) -> usize {
        self.arrows
            .iter()
            .filter(|a| a.src == i && a.tgt == j)
            .count()
    }

    pub fn has_loop_at(&self, k: VertexId) -> bool {
        self.count(k, k) > 0
    }
    pub fn has_loops(&self) -> bool {
        self.arrows.iter().any(|a| a.src == a.tgt)
    }
    pub fn has_two_cycle_through(&self, k: VertexId) -> bool {
        self.arrows
            .iter()
            .any(|a| a.src == k && a.tgt != k && self.count(a.tgt, k) > 0)
    }
    pub fn has_two_cycles(&self) -> bool {
        self.arrows
            .iter()
            .any(|a| a.src != a.tgt && self.count(a.tgt, a.src) > 0)
    }

    /// True when there is no oriented cycle (loops count as cycles).
    pub fn is_acyclic(&self) -> bool {
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[self.position[&a.tgt]] += 1;
        }
        let mut stack: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        let mut seen = 0;
        while let Some(i) = stack.pop() {
            seen += 1;
            for a in self.arrows.iter().filter(|a| self.position[&a.src] == i) {
                let t = self.position[&a.tgt];
                indeg[t] -= 1;
                if indeg[t] == 0 {
                    stack.push(t);
                }
            }
        }
        seen == n
    }

    /// The opposite quiver: every arrow reversed, names kept.
    pub fn opposite(&self) -> Quiver {
        let arrows = self
            .arrows
            .iter()
            .map(|a| Arrow::new(a.name.clone(), a.tgt, a.src))
            .collect();
        Quiver::new(self.vertices.clone(), self.frozen.clone(), arrows).expect("valid")
    }

    /// Skew-symmetric exchange matrix over all vertices (frozen included),
    /// in declared vertex order.
    pub fn exchange_matrix(&self) -> ExchangeMatrix {
        let n = self.vertices.len();
        let mut b = vec![vec![0i64; n]; n];
        for a in &self.arrows {
            let (s, t) = (self.position[&a.src], self.position[&a.tgt]);
            if s != t {
                b[t][s] += 1;
                b[s][t] -= 1;
            }
        }
        let frozen = self.vertices.iter().map(|v| self.is_frozen(*v)).collect();
        ExchangeMatrix {
            vertices: self.vertices.clone(),
            frozen,
            b,
        }
    }
}

/// `b[i][j] = #(j -> i) - #(i -> j)`, indexed by vertex position.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExchangeMatrix {
    pub vertices: Vec<VertexId>,
    pub frozen: Vec<bool>,
    pub b: Vec<Vec<i64>>,
}

impl ExchangeMatrix {
    /// Matrix mutation at position `k`:
    /// `b'_ij = -b_ij` if `k` is `i` or `j`, else
    /// `b_ij + (|b_ik| b_kj + b_ik |b_kj|) / 2`.
    /// Entries between two frozen vertices are cleared.
    pub fn mutate(&self, k: usize) -> ExchangeMatrix {
        let b = mutate_matrix(&self.b, k, &self.frozen);
        ExchangeMatrix {
            vertices: self.vertices.clone(),
            frozen: self.frozen.clone(),
            b,
        }
    }

    /// Materialises arrows with fresh names `e{src}_{tgt}_{idx}`, sorted by
    /// `(src, tgt, idx)` in vertex-position order.
    pub fn to_quiver(&self) -> Quiver {
        let n = self.vertices.len();
        let mut arrows = Vec::new();
        for s in 0..n {
            for t in 0..n {
                if self.frozen[s] && self.frozen[t] {
                    continue;
                }
                let m = self.b[t][s].max(0);
                for idx in 0..m {
                    let (vs, vt) = (self.vertices[s], self.vertices[t]);
                    arrows.push(Arrow::new(format!("e{vs}_{vt}_{idx}"), vs, vt));
                }
            }
        }
        let frozen = (0..n)
            .filter(|&i| self.frozen[i])
            .map(|i| self.vertices[i])
            .collect();
        Quiver::new(self.vertices.clone(), frozen, arrows).expect("valid")
    }
}

pub(crate) fn mutate_matrix(b: &[Vec<i64>], k: usize, frozen: &[bool]) -> Vec<Vec<i64>> {
    let n = b.len();
    let mut out = b.to_vec();
    for i in 0..n {
        for j in 0..n {
            out[i][j] = if i == k || j == k {
                -b[i][j]
            } else if frozen[i] && frozen[j] {
                0
            } else {
                b[i][j] + (b[i][k].abs() * b[k][j] + b[i][k] * b[k][j].abs()) / 2
            };
        }
    }
    out
}

/// Quiver mutation at a non-frozen vertex. Other 2-cycles cancel in the
/// exchange matrix; loops anywhere are rejected because the matrix cannot
/// record them.
pub fn mutate_quiver(q: &Quiver, k: VertexId) -> Result<Quiver, QuiverError> {
    let pos = q.position(k).ok_or(QuiverError::UnknownVertex(k))?;
    if q.is_frozen(k) {
        return Err(QuiverError::FrozenVertex(k));
    }
    if let Some(a) = q.arrows().iter().find(|a| a.src == a.tgt) {
        return Err(QuiverError::LoopAtVertex(a.src));
    }
    if q.has_two_cycle_through(k) {
        return Err(QuiverError::TwoCycleThroughVertex(k));
    }
    Ok(q.exchange_matrix().mutate(pos).to_quiver())
}

/// A vertex bijection preserving arrow multiplicities and frozen vertices,
/// if one exists.
pub fn quiver_isomorphic(a: &Quiver, b: &Quiver) -> Option<BTreeMap<VertexId, VertexId>> {
    let n = a.vertices().len();
    if n != b.vertices().len()
        || a.num_arrows() != b.num_arrows()
        || a.frozen().len() != b.frozen().len()
    {
        return None;
    }
    let counts = |q: &Quiver| {
        let mut c = vec![vec![0usize; n]; n];
        for ar in q.arrows() {
            c[q.position(ar.src).expect("vertex")][q.position(ar.tgt).expect("vertex")] += 1;
        }
        c
    };
    let (ca, cb) = (counts(a), counts(b));
    let signature = |q: &Quiver, c: &[Vec<usize>], i: usize| {
        let mut outs: Vec<usize> = c[i].iter().copied().filter(|&x| x > 0).collect();
        let mut ins: Vec<usize> = (0..n).map(|j| c[j][i]).filter(|&x| x > 0).collect();
        outs.sort_unstable();
        ins.sort_unstable();
        (q.is_frozen(q.vertices()[i]), c[i][i], outs, ins)
    };
    let sa: Vec<_> = (0..n).map(|i| signature(a, &ca, i)).collect();
    let sb: Vec<_> = (0..n).map(|i| signature(b, &cb, i)).collect();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn extend(
        i: usize,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        ok: &dyn Fn(usize, usize, &[usize]) -> bool,
        n: usize,
    ) -> bool {
        if i == n {
            return true;
        }
        for j in 0..n {
            if !used[j] && ok(i, j, image) {
                image[i] = j;
                used[j] = true;
                if extend(i + 1, image, used, ok, n) {
                    return true;
                }
                used[j] = false;
                image[i] = usize::MAX;
            }
        }
        false
    }

    let ok = |i: usize, j: usize, image: &[usize]| {
        sa[i] == sb[j] && (0..i).all(|p| ca[i][p] == cb[j][image[p]] && ca[p][i] == cb[image[p]][j])
    };
    if !extend(0, &mut image, &mut used, &ok, n) {
        return None;
    }
    Some(
        (0..n)
            .map(|i| (a.vertices()[i], b.vertices()[image[i]]))
            .collect(),
    )
}

/// Adds a frozen vertex `v'` and an arrow `v -> v'` (named `fr{v}`) for every
/// vertex `v`. The new vertices are numbered after the largest existing one.
pub fn frame(q: &Quiver) -> Result<Quiver, QuiverError> {
    if !q.frozen().is_empty() {
        return Err(QuiverError::AlreadyFramed);
    }
    let base = q.vertices().iter().max().map_or(0, |m| m + 1);
    let mut vertices = q.vertices().to_vec();
    let mut arrows = q.arrows().to_vec();
    let mut frozen = BTreeSet::new();
    for (i, &v) in q.vertices().iter().enumerate() {
        let f = base + i as VertexId;
        vertices.push(f);
        frozen.insert(f);
        arrows.push(Arrow::new(format!("fr{v}"), v, f));
    }
    Quiver::new(vertices, frozen, arrows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t3() -> Quiver {
        Quiver::from_arrows(0..3, &[("a", 0, 1), ("b", 1, 2), ("d", 1, 2), ("g", 2, 0)]).unwrap()
    }

    #[test]
    fn mutation_of_t3_is_affine_a2() {
        let q = mutate_quiver(&t3(), 0).unwrap();
        assert_eq!(q.num_arrows(), 3);
        assert_eq!(q.count(1, 0), 1);
        assert_eq!(q.count(0, 2), 1);
        assert_eq!(q.count(1, 2), 1);
        assert!(q.is_acyclic());
    }

    #[test]
    fn mutation_rejects_bad_vertices() {
        let q = Quiver::from_arrows(0..2, &[("a", 0, 1), ("b", 1, 0)]).unwrap();
        assert_eq!(
            mutate_quiver(&q, 0),
            Err(QuiverError::TwoCycleThroughVertex(0))
        );
        let q = Quiver::from_arrows(0..2, &[("l", 0, 0), ("b", 1, 0)]).unwrap();
        assert_eq!(mutate_quiver(&q, 0), Err(QuiverError::LoopAtVertex(0)));
        let f = frame(&t3()).unwrap();
        assert_eq!(mutate_quiver(&f, 3), Err(QuiverError::FrozenVertex(3)));
        assert_eq!(frame(&f), Err(QuiverError::AlreadyFramed));
    }

    #[test]
    fn isomorphism_finds_relabelling() {
        let a = Quiver::from_arrows([5, 6, 7], &[("x", 5, 6), ("y", 6, 7), ("z", 6, 7)]).unwrap();
        let b = Quiver::from_arrows([1, 2, 3], &[("p", 3, 1), ("q", 3, 1), ("r", 2, 3)]).unwrap();
        let m = quiver_isomorphic(&a, &b).unwrap();
        assert_eq!(m[&5], 2);
        assert_eq!(m[&6], 3);
        assert_eq!(m[&7], 1);
        assert!(quiver_isomorphic(&a, &a.opposite()).is_none());
        assert!(quiver_isomorphic(&t3(), &mutate_quiver(&t3(), 0).unwrap()).is_none());
    }
}
