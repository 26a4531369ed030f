//! Green and red vertices of framed quivers, and the search for reddening
//! sequences.

use std::collections::{BTreeMap, HashSet, VecDeque};

use crate::quiver::{frame, mutate_matrix, Quiver, QuiverError, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    /// No arrows from frozen vertices into the vertex.
    Green,
    /// No arrows from the vertex to frozen vertices.
    Red,
}

/// Colours of the mutable vertices of a framed quiver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreenRedState {
    pub colors: BTreeMap<VertexId, Color>,
}

impl GreenRedState {
    pub fn all_red(&self) -> bool {
        self.colors.values().all(|c| *c == Color::Red)
    }
}

/// Classifies each mutable vertex. A vertex with arrows both to and from
/// frozen vertices, or with none at all, violates sign coherence.
pub fn classify_vertices(q: &Quiver) -> Result<GreenRedState, QuiverError> {
    let mut colors = BTreeMap::new();
    for v in q.mutable_vertices() {
        let out = q.arrows().iter().any(|a| a.src == v && q.is_frozen(a.tgt));
        let inc = q.arrows().iter().any(|a| a.tgt == v && q.is_frozen(a.src));
        let c = match (out, inc) {
            (true, false) => Color::Green,
            (false, true) => Color::Red,
            _ => return Err(QuiverError::SignCoherenceViolation(v)),
        };
        colors.insert(v, c);
    }
    Ok(GreenRedState { colors })
}

/// Outcome of a breadth-first reddening search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReddeningSearch {
    /// Lexicographically least among the shortest sequences found, as
    /// vertices mutated left to right.
    pub sequence: Option<Vec<VertexId>>,
    /// Whether every step of `sequence` mutates a green vertex.
    pub maximal_green: bool,
    pub explored_depth: usize,
    pub states_visited: usize,
}

/// Framed exchange-matrix state: mutable block plus the c-vector rows.
#[derive(Clone)]
struct State {
    b: Vec<Vec<i64>>,
}

struct Layout {
    mutable: Vec<usize>,
    frozen_pos: Vec<usize>,
    flags: Vec<bool>,
    ids: Vec<VertexId>,
}

impl Layout {
    /// `Some(Green)` / `Some(Red)` / `None` for a sign-incoherent vertex.
    fn color(&self, s: &State, i: usize) -> Option<Color> {
        let col: Vec<i64> = self.frozen_pos.iter().map(|&f| s.b[f][i]).collect();
        let pos = col.iter().any(|&x| x > 0);
        let neg = col.iter().any(|&x| x < 0);
        match (pos, neg) {
            (true, false) => Some(Color::Green),
            (false, true) => Some(Color::Red),
            _ => None,
        }
    }

    /// Canonical key up to permuting mutable vertices (frozen fixed). The
    /// c-vector of each mutable vertex is its sort key; ties, which cannot
    /// occur for sign-coherent framed quivers, are broken by trying every
    /// order inside a tie group.
    fn canonical(&self, s: &State) -> Vec<i64> {
        let key = |i: usize| -> Vec<i64> { self.frozen_pos.iter().map(|&f| s.b[f][i]).collect() };
        let mut order = self.mutable.clone();
        order.sort_by_key(|&i| key(i));
        let mut groups: Vec<(usize, usize)> = Vec::new();
        let mut start = 0;
        for i in 1..=order.len() {
            if i == order.len() || key(order[i]) != key(order[start]) {
                groups.push((start, i));
                start = i;
            }
        }
        let encode = |order: &[usize]| -> Vec<i64> {
            let mut out = Vec::new();
            for &i in order {
                out.extend(self.frozen_pos.iter().map(|&f| s.b[f][i]));
                out.extend(order.iter().map(|&j| s.b[i][j]));
            }
            out
        };
        if groups.iter().all(|(a, b)| b - a == 1) {
            return encode(&order);
        }
        let mut best: Option<Vec<i64>> = None;
        permute_groups(&mut order, &groups, 0, &mut |o| {
            let e = encode(o);
            if best.as_ref().map_or(true, |b| e < *b) {
                best = Some(e);
            }
        });
        best.expect("at least one ordering")
    }
}

fn permute_groups(
    order: &mut Vec<usize>,
    groups: &[(usize, usize)],
    g: usize,
    f: &mut dyn FnMut(&[usize]),
) {
    if g == groups.len() {
        f(order);
        return;
    }
    let (a, b) = groups[g];
    heap_permute(order, a, b - a, &mut |o| {
        permute_groups(&mut o.to_vec(), groups, g + 1, f)
    });
}

fn heap_permute(v: &mut Vec<usize>, a: usize, k: usize, f: &mut dyn FnMut(&mut Vec<usize>)) {
    if k <= 1 {
        f(v);
        return;
    }
    for i in 0..k - 1 {
        heap_permute(v, a, k - 1, f);
        if k % 2 == 0 {
            v.swap(a + i, a + k - 1);
        } else {
            v.swap(a, a + k - 1);
        }
    }
    heap_permute(v, a, k - 1, f);
}

/// Breadth-first search over mutation sequences of `frame(q)` for one that
/// turns every mutable vertex red. States are deduplicated up to
/// permutation of mutable vertices; sequences are explored in
/// lexicographic order, so the first hit is the lexicographically least
/// among the shortest.
pub fn search_reddening(q: &Quiver, max_depth: usize) -> Result<ReddeningSearch, QuiverError> {
    search(q, max_depth, false)
}

/// Like [`search_reddening`] but only mutates green vertices, so any
/// sequence found is a maximal green sequence.
pub fn search_maximal_green(q: &Quiver, max_depth: usize) -> Result<ReddeningSearch, QuiverError> {
    search(q, max_depth, true)
}

fn search(q: &Quiver, max_depth: usize, green_only: bool) -> Result<ReddeningSearch, QuiverError> {
    if let Some(a) = q.arrows().iter().find(|a| a.src == a.tgt) {
        return Err(QuiverError::LoopAtVertex(a.src));
    }
    let framed = frame(q)?;
    let em = framed.exchange_matrix();
    let layout = Layout {
        mutable: (0..em.vertices.len()).filter(|&i| !em.frozen[i]).collect(),
        frozen_pos: (0..em.vertices.len()).filter(|&i| em.frozen[i]).collect(),
        flags: em.frozen.clone(),
        ids: em.vertices.clone(),
    };
    let start = State { b: em.b };
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    seen.insert(layout.canonical(&start));
    // Each entry carries whether every step so far mutated a green vertex.
    let mut frontier: VecDeque<(State, Vec<usize>, bool)> =
        VecDeque::from([(start, Vec::new(), true)]);
    let mut depth = 0;
    let mut visited = 1;
    loop {
        for (s, seq, green) in &frontier {
            if layout
                .mutable
                .iter()
                .all(|&i| layout.color(s, i) == Some(Color::Red))
            {
                let ids: Vec<VertexId> = seq.iter().map(|&i| layout.ids[i]).collect();
                let green = *green;
                return Ok(ReddeningSearch {
                    sequence: Some(ids),
                    maximal_green: green,
                    explored_depth: depth,
                    states_visited: visited,
                });
            }
        }
        if depth == max_depth || frontier.is_empty() {
            return Ok(ReddeningSearch {
                sequence: None,
                maximal_green: false,
                explored_depth: depth,
                states_visited: visited,
            });
        }
        let mut next = VecDeque::new();
        for (s, seq, green) in frontier {
            for &k in &layout.mutable {
                let step_green = layout.color(&s, k) == Some(Color::Green);
                if green_only && !step_green {
                    continue;
                }
                let child = State {
                    b: mutate_matrix(&s.b, k, &layout.flags),
                };
                if layout
                    .mutable
                    .iter()
                    .any(|&i| layout.color(&child, i).is_none())
                {
                    let v = layout.ids[*layout
                        .mutable
                        .iter()
                        .find(|&&i| layout.color(&child, i).is_none())
                        .expect("found")];
                    return Err(QuiverError::SignCoherenceViolation(v));
                }
                if seen.insert(layout.canonical(&child)) {
                    visited += 1;
                    let mut sq = seq.clone();
                    sq.push(k);
                    next.push_back((child, sq, green && step_green));
                }
            }
        }
        frontier = next;
        depth += 1;
    }
}

/// Replays a sequence on `frame(q)` and reports whether each step mutates a
/// green vertex and whether the end state is all red.
pub fn replay_sequence(q: &Quiver, seq: &[VertexId]) -> Result<(bool, bool), QuiverError> {
    let mut f = frame(q)?;
    let mut green = true;
    for &k in seq {
        let st = classify_vertices(&f)?;
        if st.colors.get(&k) != Some(&Color::Green) {
            green = false;
        }
        f = crate::quiver::mutate_quiver(&f, k)?;
    }
    Ok((green, classify_vertices(&f)?.all_red()))
}
