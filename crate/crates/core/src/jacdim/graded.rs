//! Positively graded quivers: infinite-dimensionality certificates for
//! potentials built from cycles of equal degree, and exact dimensions of
//! graded pieces of quotients by commutativity relations.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::coeff::Coeff;
use crate::path_algebra::{PathWord, Potential};
use crate::quiver::{ArrowIdx, Quiver};

use super::JacdimError;

/// A quiver with positive arrow degrees and a potential `Σ ε(c) c`; the
/// coefficient of each stored cycle is its `ε`.
#[derive(Clone, Debug)]
pub struct GradedQP<C: Coeff> {
    pub quiver: Arc<Quiver>,
    /// Degree of each arrow, in declared order.
    pub degrees: Vec<u32>,
    pub potential: Potential<C>,
}

impl<C: Coeff> GradedQP<C> {
    pub fn new(
        quiver: Arc<Quiver>,
        degrees: Vec<u32>,
        potential: Potential<C>,
    ) -> Result<Self, JacdimError> {
        if degrees.len() != quiver.num_arrows() {
            return Err(JacdimError::BadGenerator(format!(
                "{} degrees for {} arrows",
                degrees.len(),
                quiver.num_arrows()
            )));
        }
        Ok(GradedQP {
            quiver,
            degrees,
            potential,
        })
    }

    pub fn degree(&self, w: &PathWord) -> u32 {
        w.arrows().iter().map(|&a| self.degrees[a as usize]).sum()
    }
}

/// `∂_α W = ε(c) (p - p')` for the two cycles through `α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutativityRelation {
    pub arrow: String,
    pub p: PathWord,
    pub p_prime: PathWord,
    pub degree: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GradedVerdict {
    /// All hypotheses hold; the Jacobian ideal is generated by these
    /// homogeneous commutativity relations, so the algebra is infinite.
    InfiniteCertificate {
        cycle_degree: u32,
        relations: Vec<CommutativityRelation>,
    },
    /// The first hypothesis that failed.
    Inconclusive(String),
}

impl GradedVerdict {
    pub fn is_certificate(&self) -> bool {
        matches!(self, GradedVerdict::InfiniteCertificate { .. })
    }
}

/// Checks, in order: positive grading, a cycle in the quiver, simple
/// cycles of one common positive degree, and that every arrow used lies in
/// exactly two cycles whose coefficients sum to zero.
pub fn graded_infinite_check<C: Coeff>(g: &GradedQP<C>) -> GradedVerdict {
    let q = &g.quiver;
    let no = |s: String| GradedVerdict::Inconclusive(s);
    if let Some(a) = g.degrees.iter().position(|&d| d == 0) {
        return no(format!("arrow {} has degree 0", q.name(a as ArrowIdx)));
    }
    if q.is_acyclic() {
        return no("quiver is acyclic".into());
    }
    let cycles: Vec<(&PathWord, &C)> = g.potential.normal_form_terms();
    if cycles.is_empty() {
        return no("potential is zero".into());
    }
    let mut cycle_degree = None;
    for (c, _) in &cycles {
        let mut seen = vec![false; q.num_arrows()];
        for &a in c.arrows() {
            if std::mem::replace(&mut seen[a as usize], true) {
                return no(format!("cycle {} is not simple", c.display(q)));
            }
        }
        let d = g.degree(c);
        match cycle_degree {
            None => cycle_degree = Some(d),
            Some(e) if e != d => {
                return no(format!(
                    "cycle {} has degree {d}, expected {e}",
                    c.display(q)
                ))
            }
            _ => {}
        }
    }
    let mut through: BTreeMap<ArrowIdx, Vec<usize>> = BTreeMap::new();
    for (i, (c, _)) in cycles.iter().enumerate() {
        for &a in c.arrows() {
            through.entry(a).or_default().push(i);
        }
    }
    let mut relations = Vec::new();
    for (&a, cs) in &through {
        if cs.len() != 2 {
            return no(format!("arrow {} lies in {} cycles", q.name(a), cs.len()));
        }
        let (e1, e2) = (cycles[cs[0]].1.clone(), cycles[cs[1]].1.clone());
        if !(e1 + e2).is_zero() {
            return no(format!(
                "coefficients of the two cycles through {} do not cancel",
                q.name(a)
            ));
        }
        let tail = |c: &PathWord| {
            let r = c
                .rotations(q)
                .into_iter()
                .find(|r| r.arrows()[0] == a)
                .expect("a in c");
            PathWord::new(q, r.arrows()[1..].to_vec()).unwrap_or_else(|_| PathWord::lazy(q.tgt(a)))
        };
        let (p, p_prime) = (tail(cycles[cs[0]].0), tail(cycles[cs[1]].0));
        relations.push(CommutativityRelation {
            arrow: q.name(a).to_string(),
            degree: g.degree(&p),
            p,
            p_prime,
        });
    }
    GradedVerdict::InfiniteCertificate {
        cycle_degree: cycle_degree.expect("nonempty"),
        relations,
    }
}

/// `dim KQ_d / I_d` for `I` generated by homogeneous relations `p - q`:
/// the number of classes of degree-`d` paths under `u p v ~ u q v`.
pub fn graded_class_dimension(
    q: &Quiver,
    degrees: &[u32],
    relations: &[(PathWord, PathWord)],
    d: u32,
) -> Result<usize, JacdimError> {
    if degrees.len() != q.num_arrows() || degrees.contains(&0) {
        return Err(JacdimError::BadGenerator(
            "degrees must be positive, one per arrow".into(),
        ));
    }
    let deg = |w: &[ArrowIdx]| w.iter().map(|&a| degrees[a as usize]).sum::<u32>();
    for (p, r) in relations {
        let parallel = p.start() == r.start() && p.end(q) == r.end(q);
        if p.is_empty() || r.is_empty() || !parallel || deg(p.arrows()) != deg(r.arrows()) {
            return Err(JacdimError::InhomogeneousRelation(format!(
                "{} ~ {}",
                p.display(q),
                r.display(q)
            )));
        }
    }
    if d == 0 {
        return Ok(q.vertices().len());
    }
    let paths = paths_of_degree(q, degrees, d);
    let index: HashMap<&[ArrowIdx], usize> = paths
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_slice(), i))
        .collect();
    let mut uf = UnionFind::new(paths.len());
    for (i, w) in paths.iter().enumerate() {
        for (p, r) in relations {
            let (p, r) = (p.arrows(), r.arrows());
            for s in 0..=w.len().saturating_sub(p.len()) {
                if w.len() >= p.len() && &w[s..s + p.len()] == p {
                    let mut v = w[..s].to_vec();
                    v.extend_from_slice(r);
                    v.extend_from_slice(&w[s + p.len()..]);
                    uf.union(i, index[v.as_slice()]);
                }
            }
        }
    }
    Ok(uf.classes())
}

/// All paths of positive length and total degree exactly `d`.
fn paths_of_degree(q: &Quiver, degrees: &[u32], d: u32) -> Vec<Vec<ArrowIdx>> {
    let mut out = Vec::new();
    let mut stack: Vec<(Vec<ArrowIdx>, u32)> = (0..q.num_arrows() as ArrowIdx)
        .map(|a| (vec![a], degrees[a as usize]))
        .collect();
    while let Some((w, dw)) = stack.pop() {
        if dw == d {
            out.push(w);
            continue;
        }
        let end = q.tgt(*w.last().expect("nonempty"));
        for b in q.arrows_out_of(end) {
            let db = dw + degrees[b as usize];
            if db <= d {
                let mut v = w.clone();
                v.push(b);
                stack.push((v, db));
            }
        }
    }
    out.sort();
    out
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            y = std::mem::replace(&mut self.parent[y], r);
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.parent[a.max(b)] = a.min(b);
        }
    }
    fn classes(&mut self) -> usize {
        (0..self.parent.len())
            .filter(|&i| self.find(i) == i)
            .count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{Rational, F2};
    use crate::x7::{f0, w_prime_of, x7_prime};

    /// `a, b, c` of degree 2 and `d` of degree 1 on `X7'`.
    fn x7_prime_degrees(q: &Quiver) -> Vec<u32> {
        q.arrows()
            .iter()
            .map(|a| if a.name.starts_with('d') { 1 } else { 2 })
            .collect()
    }

    fn w0_prime<C: Coeff>() -> GradedQP<C> {
        let q = x7_prime();
        let w = w_prime_of(&q, &f0::<C>(6), 12).unwrap();
        GradedQP::new(q.clone(), x7_prime_degrees(&q), w).unwrap()
    }

    #[test]
    fn w0_prime_certificate_in_characteristic_two() {
        let v = graded_infinite_check(&w0_prime::<F2>());
        let GradedVerdict::InfiniteCertificate {
            cycle_degree,
            relations,
        } = v
        else {
            panic!("{v:?}")
        };
        assert_eq!(cycle_degree, 6);
        assert_eq!(relations.len(), 15);
        assert!(matches!(
            graded_infinite_check(&w0_prime::<Rational>()),
            GradedVerdict::Inconclusive(_)
        ));
    }

    #[test]
    fn acyclic_quiver_is_inconclusive() {
        let q = Arc::new(Quiver::from_arrows([0, 1], &[("x", 0, 1)]).unwrap());
        let g = GradedQP::new(q.clone(), vec![1], Potential::<F2>::zero(&q, 4)).unwrap();
        assert_eq!(
            graded_infinite_check(&g),
            GradedVerdict::Inconclusive("quiver is acyclic".into())
        );
    }

    #[test]
    fn commuting_loops_give_commutative_monomials() {
        let q = Quiver::from_arrows([0], &[("x", 0, 0), ("y", 0, 0)]).unwrap();
        let xy = PathWord::from_names(&q, &["x", "y"]).unwrap();
        let yx = PathWord::from_names(&q, &["y", "x"]).unwrap();
        assert_eq!(
            graded_class_dimension(&q, &[1, 1], &[(xy.clone(), yx.clone())], 3).unwrap(),
            4
        );
        assert_eq!(graded_class_dimension(&q, &[1, 1], &[], 3).unwrap(), 8);
        let x = PathWord::from_names(&q, &["x"]).unwrap();
        assert!(matches!(
            graded_class_dimension(&q, &[1, 1], &[(x, yx)], 3),
            Err(JacdimError::InhomogeneousRelation(_))
        ));
    }

    #[test]
    fn x7_prime_pieces_stay_nonzero() {
        let g = w0_prime::<F2>();
        let GradedVerdict::InfiniteCertificate { relations, .. } = graded_infinite_check(&g) else {
            panic!()
        };
        let rels: Vec<_> = relations.into_iter().map(|r| (r.p, r.p_prime)).collect();
        for d in [6, 12] {
            assert!(graded_class_dimension(&g.quiver, &g.degrees, &rels, d).unwrap() > 0);
        }
    }
}
