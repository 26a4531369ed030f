use std::collections::BTreeMap;
use std::sync::Arc;

use crate::coeff::Coeff;
use crate::quiver::{ArrowIdx, Quiver, VertexId};

use super::{AlgElem, AlgebraError, PathWord};

/// A continuous algebra map between complete path algebras, given by the
/// images of arrows (and of vertices, for lazy paths). Images lie in the
/// arrow ideal, so applying the map respects truncation. Images are taken
/// as exact polynomials; the result carries the input's truncation.
#[derive(Clone)]
pub struct AlgebraMap<C> {
    source: Arc<Quiver>,
    target: Arc<Quiver>,
    images: Vec<Option<AlgElem<C>>>,
    vertices: BTreeMap<VertexId, VertexId>,
}

impl<C: Coeff> std::fmt::Debug for AlgebraMap<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut m = f.debug_map();
        for (a, img) in self.images.iter().enumerate() {
            if let Some(img) = img {
                m.entry(&self.source.name(a as ArrowIdx), &format_args!("{img}"));
            }
        }
        m.finish()
    }
}

impl<C: Coeff> AlgebraMap<C> {
    /// A map with no images yet; vertices map identically where present.
    pub fn new(source: &Arc<Quiver>, target: &Arc<Quiver>) -> Self {
        let vertices = source
            .vertices()
            .iter()
            .filter(|v| target.has_vertex(**v))
            .map(|&v| (v, v))
            .collect();
        AlgebraMap {
            source: source.clone(),
            target: target.clone(),
            images: vec![None; source.num_arrows()],
            vertices,
        }
    }

    /// The identity of a complete path algebra.
    pub fn identity(q: &Arc<Quiver>) -> Self {
        let mut m = Self::new(q, q);
        for a in 0..q.num_arrows() as ArrowIdx {
            m.images[a as usize] = Some(AlgElem::arrow(q, usize::MAX, a));
        }
        m
    }

    /// The substitution sending each listed arrow to a parallel element of
    /// the arrow ideal and fixing the rest.
    pub fn substitution(
        q: &Arc<Quiver>,
        rules: &[(ArrowIdx, AlgElem<C>)],
    ) -> Result<Self, AlgebraError> {
        let mut m = Self::identity(q);
        for (a, img) in rules {
            if !img.in_arrow_ideal() {
                return Err(AlgebraError::RuleHasConstantTerm(q.name(*a).to_string()));
            }
            if !img.is_parallel_to(*a) {
                return Err(AlgebraError::NotParallel(q.name(*a).to_string()));
            }
            m.images[*a as usize] = Some(img.clone());
        }
        Ok(m)
    }

    /// Sets the image of a source arrow. The image must run between the
    /// images of its endpoints when those are recorded.
    pub fn set_image(&mut self, a: ArrowIdx, img: AlgElem<C>) -> Result<(), AlgebraError> {
        if !img.in_arrow_ideal() {
            return Err(AlgebraError::RuleHasConstantTerm(
                self.source.name(a).to_string(),
            ));
        }
        if !Arc::ptr_eq(img.quiver(), &self.target) && **img.quiver() != *self.target {
            return Err(AlgebraError::QuiverMismatch);
        }
        self.images[a as usize] = Some(img);
        Ok(())
    }

    pub fn set_vertex(&mut self, v: VertexId, w: VertexId) {
        self.vertices.insert(v, w);
    }

    /// Arrow renaming `source -> target` given by name pairs. The endpoint
    /// correspondence must be consistent; it becomes the vertex map.
    pub fn renaming(
        source: &Arc<Quiver>,
        target: &Arc<Quiver>,
        pairs: &[(&str, &str)],
    ) -> Result<Self, AlgebraError> {
        let mut m = Self::new(source, target);
        m.vertices.clear();
        for (from, to) in pairs {
            let a = source.arrow_by_name(from)?;
            let b = target.arrow_by_name(to)?;
            for (v, w) in [
                (source.src(a), target.src(b)),
                (source.tgt(a), target.tgt(b)),
            ] {
                match m.vertices.insert(v, w) {
                    Some(old) if old != w => {
                        return Err(AlgebraError::NotParallel(format!(
                            "{from} -> {to} sends vertex {v} to both {old} and {w}"
                        )))
                    }
                    _ => {}
                }
            }
            m.images[a as usize] = Some(AlgElem::arrow(target, usize::MAX, b));
        }
        Ok(m)
    }

    pub fn source(&self) -> &Arc<Quiver> {
        &self.source
    }
    pub fn target(&self) -> &Arc<Quiver> {
        &self.target
    }

    /// Applies the map; the result is truncated like the input.
    pub fn apply(&self, x: &AlgElem<C>) -> Result<AlgElem<C>, AlgebraError> {
        if !Arc::ptr_eq(x.quiver(), &self.source) && **x.quiver() != *self.source {
            return Err(AlgebraError::QuiverMismatch);
        }
        let trunc = x.trunc();
        let mut out = AlgElem::zero(&self.target, trunc);
        for (w, c) in x.terms() {
            if w.is_empty() {
                let v = *self
                    .vertices
                    .get(&w.start())
                    .ok_or(AlgebraError::UnmappedVertex(w.start()))?;
                out.add_term(PathWord::lazy(v), c.clone());
                continue;
            }
            let mut acc: Option<AlgElem<C>> = None;
            for &a in w.arrows() {
                let img = self.images[a as usize]
                    .as_ref()
                    .ok_or_else(|| AlgebraError::UnmappedArrow(self.source.name(a).to_string()))?;
                let img = img.with_trunc(trunc);
                acc = Some(match acc {
                    None => img,
                    Some(p) => &p * &img,
                });
                if acc.as_ref().is_some_and(AlgElem::is_zero) {
                    break;
                }
            }
            let acc = acc.expect("nonempty word");
            for (pw, pc) in acc.terms() {
                out.add_term(pw.clone(), pc.clone() * c.clone());
            }
        }
        Ok(out)
    }
}
