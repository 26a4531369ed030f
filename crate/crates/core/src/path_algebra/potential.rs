use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::coeff::Coeff;
use crate::quiver::{ArrowIdx, Quiver, VertexId};

use super::{AlgElem, AlgebraError, AlgebraMap, PathWord};

/// A potential: a linear combination of cycles up to cyclic equivalence.
///
/// Each stored term is one representative of its rotation class and no two
/// terms are rotations of each other. Constructors store the least rotation
/// (the normal form); [`Potential::rotate_away_from`] picks other
/// representatives. Equality compares normal forms.
#[derive(Clone)]
pub struct Potential<C> {
    elem: AlgElem<C>,
}

impl<C: Coeff> Potential<C> {
    pub fn zero(q: &Arc<Quiver>, trunc: usize) -> Self {
        Potential {
            elem: AlgElem::zero(q, trunc),
        }
    }

    /// Normal form of an element whose terms are cycles of positive length.
    pub fn new(elem: &AlgElem<C>) -> Result<Self, AlgebraError> {
        let q = elem.quiver().clone();
        let mut out = AlgElem::zero(&q, elem.trunc());
        for (w, c) in elem.terms() {
            if w.is_empty() {
                return Err(AlgebraError::EmptyWord);
            }
            if !w.is_cycle(&q) {
                return Err(AlgebraError::NotACycle(w.display(&q)));
            }
            out.add_term(w.least_rotation(&q), c.clone());
        }
        Ok(Potential { elem: out })
    }

    /// Builds from `(coefficient, arrow names)` pairs.
    pub fn from_terms(
        q: &Arc<Quiver>,
        trunc: usize,
        terms: &[(C, &[&str])],
    ) -> Result<Self, AlgebraError> {
        let mut e = AlgElem::zero(q, trunc);
        for (c, names) in terms {
            e.add_term(PathWord::from_names(q, names)?, c.clone());
        }
        Potential::new(&e)
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        self.elem.quiver()
    }
    pub fn trunc(&self) -> usize {
        self.elem.trunc()
    }
    /// Stored representatives.
    pub fn elem(&self) -> &AlgElem<C> {
        &self.elem
    }
    pub fn terms(&self) -> &BTreeMap<PathWord, C> {
        self.elem.terms()
    }
    pub fn is_zero(&self) -> bool {
        self.elem.is_zero()
    }
    pub fn len(&self) -> usize {
        self.elem.len()
    }

    /// Same class, every term stored as its least rotation.
    pub fn normal_form(&self) -> Self {
        Potential::new(&self.elem).expect("terms are cycles")
    }

    pub fn with_trunc(&self, trunc: usize) -> Self {
        Potential::new(&self.elem.with_trunc(trunc)).expect("terms are cycles")
    }

    /// Terms in normal form, one per rotation class.
    pub fn normal_form_terms(&self) -> Vec<(&PathWord, &C)> {
        self.terms().iter().collect()
    }

    /// Coefficient of the class of `w`.
    pub fn coeff_of_cycle(&self, w: &PathWord) -> C {
        let q = self.quiver();
        let key = w.least_rotation(q);
        self.elem
            .terms()
            .iter()
            .find(|(t, _)| t.least_rotation(q) == key)
            .map_or_else(C::zero, |(_, c)| c.clone())
    }

    /// Every cycle of length at least 2.
    pub fn is_potential(&self) -> bool {
        self.terms().keys().all(|w| w.len() >= 2)
    }

    /// Every cycle of length at least 3.
    pub fn is_reduced(&self) -> bool {
        self.terms().keys().all(|w| w.len() >= 3)
    }

    /// Terms rotated so no representative starts at `k`: the least rotation
    /// among those not starting at `k`.
    pub fn rotate_away_from(&self, k: VertexId) -> Result<Self, AlgebraError> {
        let q = self.quiver().clone();
        let mut out = AlgElem::zero(&q, self.trunc());
        for (w, c) in self.terms() {
            let r = w
                .rotations(&q)
                .into_iter()
                .filter(|r| r.start() != k)
                .min()
                .ok_or_else(|| AlgebraError::CycleAtVertex(w.display(&q), k))?;
            out.add_term(r, c.clone());
        }
        Ok(Potential { elem: out })
    }

    pub fn add(&self, o: &Self) -> Self {
        Potential::new(&(&self.elem + &o.elem)).expect("cycles")
    }

    pub fn sub(&self, o: &Self) -> Self {
        Potential::new(&(&self.elem - &o.elem)).expect("cycles")
    }

    pub fn scale(&self, c: &C) -> Self {
        Potential::new(&self.elem.scale(c)).expect("cycles")
    }

    pub fn cyclically_equivalent(&self, o: &Self) -> bool {
        self == o
    }

    /// Cyclic derivative: for each occurrence of `a` in a cycle, the path
    /// read cyclically from just after it. Known modulo length `> trunc-1`.
    pub fn cyclic_derivative(&self, a: ArrowIdx) -> AlgElem<C> {
        let q = self.quiver().clone();
        let mut out = AlgElem::zero(&q, self.trunc().saturating_sub(1));
        for (w, c) in self.terms() {
            let arr = w.arrows();
            for (i, &x) in arr.iter().enumerate() {
                if x != a {
                    continue;
                }
                let mut rest: Vec<ArrowIdx> = arr[i + 1..].to_vec();
                rest.extend_from_slice(&arr[..i]);
                let word = if rest.is_empty() {
                    PathWord::lazy(q.tgt(a))
                } else {
                    PathWord::from_parts(rest.clone(), q.src(rest[0]))
                };
                out.add_term(word, c.clone());
            }
        }
        out
    }

    /// Image under an algebra map, as a potential on the map's target.
    pub fn map(&self, f: &AlgebraMap<C>) -> Result<Self, AlgebraError> {
        Potential::new(&f.apply(&self.elem)?)
    }

    /// Image under a substitution of arrows by parallel elements.
    pub fn substitute(&self, rules: &[(ArrowIdx, AlgElem<C>)]) -> Result<Self, AlgebraError> {
        self.map(&AlgebraMap::substitution(self.quiver(), rules)?)
    }

    /// Whether arrow `a` occurs in some term.
    pub fn appears(&self, a: ArrowIdx) -> bool {
        self.elem.appears(a)
    }

    /// Rebuilds over another quiver, mapping arrows by name.
    pub fn transport(&self, target: &Arc<Quiver>) -> Result<Self, AlgebraError> {
        Potential::new(&self.elem.transport(target)?)
    }

    /// Splits `w = a * t + rest` up to cyclic equivalence, where no term of
    /// `rest` contains `a`. Each term containing `a` is rotated to start at
    /// its least such rotation.
    pub fn split_off_arrow(&self, a: ArrowIdx) -> (AlgElem<C>, Potential<C>) {
        let q = self.quiver().clone();
        let mut t = AlgElem::zero(&q, self.trunc().saturating_sub(1));
        let mut rest = AlgElem::zero(&q, self.trunc());
        for (w, c) in self.terms() {
            if !w.contains(a) {
                rest.add_term(w.clone(), c.clone());
                continue;
            }
            let r = w
                .rotations(&q)
                .into_iter()
                .filter(|r| r.arrows()[0] == a)
                .min()
                .expect("contains a");
            let tail = r.arrows()[1..].to_vec();
            let word = if tail.is_empty() {
                PathWord::lazy(q.tgt(a))
            } else {
                PathWord::from_parts(tail.clone(), q.src(tail[0]))
            };
            t.add_term(word, c.clone());
        }
        (t, Potential { elem: rest })
    }
}

impl<C: Coeff> PartialEq for Potential<C> {
    fn eq(&self, o: &Self) -> bool {
        let (a, b) = (self.normal_form(), o.normal_form());
        a.elem.same_quiver(&b.elem) && a.elem.terms() == b.elem.terms()
    }
}

impl<C: Coeff> fmt::Debug for Potential<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Potential[{}]", self.elem)
    }
}

impl<C: Coeff> fmt::Display for Potential<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.elem)
    }
}
