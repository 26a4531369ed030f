use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::coeff::Coeff;
use crate::quiver::{ArrowIdx, Quiver, VertexId};

use super::AlgebraError;

/// A path: a composable sequence of arrows, or the lazy path at a vertex.
/// Arrows compose left to right, `a b` meaning `a` then `b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathWord {
    arrows: Vec<ArrowIdx>,
    start: VertexId,
}

impl PathWord {
    pub fn lazy(v: VertexId) -> Self {
        PathWord {
            arrows: Vec::new(),
            start: v,
        }
    }

    pub fn new(q: &Quiver, arrows: Vec<ArrowIdx>) -> Result<Self, AlgebraError> {
        let Some(&first) = arrows.first() else {
            return Err(AlgebraError::EmptyWord);
        };
        for w in arrows.windows(2) {
            if q.tgt(w[0]) != q.src(w[1]) {
                return Err(AlgebraError::NotComposable(format!(
                    "{} then {}",
                    q.name(w[0]),
                    q.name(w[1])
                )));
            }
        }
        Ok(PathWord {
            start: q.src(first),
            arrows,
        })
    }

    pub fn from_names(q: &Quiver, names: &[&str]) -> Result<Self, AlgebraError> {
        let idx = names
            .iter()
            .map(|n| q.arrow_by_name(n))
            .collect::<Result<Vec<_>, _>>()?;
        PathWord::new(q, idx)
    }

    /// Trusted constructor for words already known to compose.
    pub(crate) fn from_parts(arrows: Vec<ArrowIdx>, start: VertexId) -> Self {
        PathWord { arrows, start }
    }

    pub fn arrows(&self) -> &[ArrowIdx] {
        &self.arrows
    }
    pub fn len(&self) -> usize {
        self.arrows.len()
    }
    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }
    pub fn start(&self) -> VertexId {
        self.start
    }
    pub fn end(&self, q: &Quiver) -> VertexId {
        self.arrows.last().map_or(self.start, |&a| q.tgt(a))
    }
    pub fn is_cycle(&self, q: &Quiver) -> bool {
        self.start == self.end(q)
    }
    pub fn contains(&self, a: ArrowIdx) -> bool {
        self.arrows.contains(&a)
    }

    /// Rotation moving the first `k` arrows to the end. Only meaningful for
    /// cycles.
    pub fn rotate(&self, q: &Quiver, k: usize) -> PathWord {
        if self.arrows.is_empty() {
            return self.clone();
        }
        let k = k % self.arrows.len();
        let mut arrows = self.arrows[k..].to_vec();
        arrows.extend_from_slice(&self.arrows[..k]);
        let start = q.src(arrows[0]);
        PathWord { arrows, start }
    }

    /// All rotations of a cycle, in order of the shift.
    pub fn rotations(&self, q: &Quiver) -> Vec<PathWord> {
        (0..self.arrows.len().max(1))
            .map(|k| self.rotate(q, k))
            .collect()
    }

    /// Least rotation in the declared arrow order.
    pub fn least_rotation(&self, q: &Quiver) -> PathWord {
        self.rotations(q)
            .into_iter()
            .min()
            .expect("at least one rotation")
    }

    /// Concatenation when composable.
    pub fn concat(&self, q: &Quiver, o: &PathWord) -> Option<PathWord> {
        if self.end(q) != o.start {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&o.arrows);
        Some(PathWord {
            arrows,
            start: self.start,
        })
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            return format!("e{}", self.start);
        }
        self.arrows
            .iter()
            .map(|&a| q.name(a))
            .collect::<Vec<_>>()
            .join("·")
    }

    pub fn names(&self, q: &Quiver) -> Vec<String> {
        self.arrows.iter().map(|&a| q.name(a).to_string()).collect()
    }
}

/// An element of the complete path algebra, known modulo paths of length
/// greater than `trunc`.
#[derive(Clone)]
pub struct AlgElem<C> {
    quiver: Arc<Quiver>,
    trunc: usize,
    terms: BTreeMap<PathWord, C>,
}

impl<C: Coeff> AlgElem<C> {
    pub fn zero(q: &Arc<Quiver>, trunc: usize) -> Self {
        AlgElem {
            quiver: q.clone(),
            trunc,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_word(q: &Arc<Quiver>, trunc: usize, w: PathWord, c: C) -> Self {
        let mut e = Self::zero(q, trunc);
        e.add_term(w, c);
        e
    }

    pub fn arrow(q: &Arc<Quiver>, trunc: usize, a: ArrowIdx) -> Self {
        Self::from_word(q, trunc, PathWord::from_parts(vec![a], q.src(a)), C::one())
    }

    pub fn arrow_named(q: &Arc<Quiver>, trunc: usize, name: &str) -> Result<Self, AlgebraError> {
        Ok(Self::arrow(q, trunc, q.arrow_by_name(name)?))
    }

    /// `c` times the path spelled by `names`.
    pub fn path(q: &Arc<Quiver>, trunc: usize, names: &[&str], c: C) -> Result<Self, AlgebraError> {
        Ok(Self::from_word(
            q,
            trunc,
            PathWord::from_names(q, names)?,
            c,
        ))
    }

    pub fn lazy(q: &Arc<Quiver>, trunc: usize, v: VertexId) -> Self {
        Self::from_word(q, trunc, PathWord::lazy(v), C::one())
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }
    pub fn trunc(&self) -> usize {
        self.trunc
    }
    pub fn terms(&self) -> &BTreeMap<PathWord, C> {
        &self.terms
    }
    pub fn len(&self) -> usize {
        self.terms.len()
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn coeff(&self, w: &PathWord) -> C {
        self.terms.get(w).cloned().unwrap_or_else(C::zero)
    }

    /// Adds `c * w`; words longer than the truncation are dropped.
    pub fn add_term(&mut self, w: PathWord, c: C) {
        if w.len() > self.trunc || c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let v = e.get().clone() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn same_quiver(&self, o: &Self) -> bool {
        Arc::ptr_eq(&self.quiver, &o.quiver) || *self.quiver == *o.quiver
    }

    fn assert_same_quiver(&self, o: &Self) {
        assert!(self.same_quiver(o), "elements live over different quivers");
    }

    pub fn with_trunc(&self, trunc: usize) -> Self {
        let mut e = Self::zero(&self.quiver, trunc);
        for (w, c) in &self.terms {
            e.add_term(w.clone(), c.clone());
        }
        e
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut e = Self::zero(&self.quiver, self.trunc);
        for (w, d) in &self.terms {
            e.add_term(w.clone(), d.clone() * c.clone());
        }
        e
    }

    /// Whether arrow `a` occurs in any term.
    pub fn appears(&self, a: ArrowIdx) -> bool {
        self.terms.keys().any(|w| w.contains(a))
    }

    /// Every term is a path of positive length from `s(a)` to `t(a)`.
    pub fn is_parallel_to(&self, a: ArrowIdx) -> bool {
        let q = &self.quiver;
        self.terms
            .keys()
            .all(|w| !w.is_empty() && w.start() == q.src(a) && w.end(q) == q.tgt(a))
    }

    /// Every term runs from `u` to `v`.
    pub fn is_from_to(&self, u: VertexId, v: VertexId) -> bool {
        self.terms
            .keys()
            .all(|w| w.start() == u && w.end(&self.quiver) == v)
    }

    /// No lazy paths, i.e. the element lies in the arrow ideal.
    pub fn in_arrow_ideal(&self) -> bool {
        self.terms.keys().all(|w| !w.is_empty())
    }

    pub fn min_length(&self) -> Option<usize> {
        self.terms.keys().map(PathWord::len).min()
    }

    /// Terms of length exactly `d`.
    pub fn homogeneous(&self, d: usize) -> Self {
        let mut e = Self::zero(&self.quiver, self.trunc);
        for (w, c) in self.terms.iter().filter(|(w, _)| w.len() == d) {
            e.add_term(w.clone(), c.clone());
        }
        e
    }

    /// Rebuilds the element over another quiver, mapping arrows by name.
    pub fn transport(&self, target: &Arc<Quiver>) -> Result<Self, AlgebraError> {
        let mut e = Self::zero(target, self.trunc);
        for (w, c) in &self.terms {
            let names = w.names(&self.quiver);
            let names: Vec<&str> = names.iter().map(String::as_str).collect();
            let nw = if names.is_empty() {
                PathWord::lazy(w.start())
            } else {
                PathWord::from_names(target, &names)?
            };
            e.add_term(nw, c.clone());
        }
        Ok(e)
    }
}

impl<C: Coeff> PartialEq for AlgElem<C> {
    fn eq(&self, o: &Self) -> bool {
        self.same_quiver(o) && self.trunc == o.trunc && self.terms == o.terms
    }
}

impl<C: Coeff> Eq for AlgElem<C> {}

impl<C: Coeff> fmt::Debug for AlgElem<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (mod len > {})", self.trunc)
    }
}

impl<C: Coeff> fmt::Display for AlgElem<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let word = w.display(&self.quiver);
                if c.is_one() {
                    word
                } else {
                    format!("({c})·{word}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl<C: Coeff> Add for &AlgElem<C> {
    type Output = AlgElem<C>;
    fn add(self, o: &AlgElem<C>) -> AlgElem<C> {
        self.assert_same_quiver(o);
        let mut e = AlgElem::zero(&self.quiver, self.trunc.min(o.trunc));
        for (w, c) in self.terms.iter().chain(&o.terms) {
            e.add_term(w.clone(), c.clone());
        }
        e
    }
}

impl<C: Coeff> Sub for &AlgElem<C> {
    type Output = AlgElem<C>;
    fn sub(self, o: &AlgElem<C>) -> AlgElem<C> {
        self + &(-o)
    }
}

impl<C: Coeff> Neg for &AlgElem<C> {
    type Output = AlgElem<C>;
    fn neg(self) -> AlgElem<C> {
        self.scale(&-C::one())
    }
}

impl<C: Coeff> Mul for &AlgElem<C> {
    type Output = AlgElem<C>;
    /// Concatenation; non-composable pairs multiply to zero.
    fn mul(self, o: &AlgElem<C>) -> AlgElem<C> {
        self.assert_same_quiver(o);
        let q = &self.quiver;
        let mut e = AlgElem::zero(q, self.trunc.min(o.trunc));
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                if a.len() + b.len() > e.trunc {
                    continue;
                }
                if let Some(w) = a.concat(q, b) {
                    e.add_term(w, ca.clone() * cb.clone());
                }
            }
        }
        e
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<C: Coeff> $tr for AlgElem<C> {
            type Output = AlgElem<C>;
            fn $m(self, o: AlgElem<C>) -> AlgElem<C> {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
