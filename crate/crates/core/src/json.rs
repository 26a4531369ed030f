//! Serde shapes for the JSON exchanged with the command line. Each `*Json`
//! type mirrors one domain type and converts to and from it; coefficients
//! travel as strings.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::coeff::{Coeff, CoeffParseError, Rational};
use crate::free_series::{FreeSeries, Letter, SeriesError};
use crate::jacdim::{
    conclude_dimension, DimConclusion, DimProfile, GradedQP, IdealPresentation, JacdimError,
};
use crate::path_algebra::{AlgElem, AlgebraError, PathWord, Potential};
use crate::quiver::{Arrow, Quiver, QuiverError, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum JsonError {
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Coeff(#[from] CoeffParseError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Jacdim(#[from] JacdimError),
    #[error("{0}")]
    Invalid(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowJson {
    pub id: String,
    pub src: VertexId,
    pub tgt: VertexId,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverJson {
    pub vertices: Vec<VertexId>,
    #[serde(default)]
    pub frozen: Vec<VertexId>,
    pub arrows: Vec<ArrowJson>,
}

impl QuiverJson {
    pub fn from_quiver(q: &Quiver) -> Self {
        QuiverJson {
            vertices: q.vertices().to_vec(),
            frozen: q.frozen().iter().copied().collect(),
            arrows: q
                .arrows()
                .iter()
                .map(|a| ArrowJson {
                    id: a.name.clone(),
                    src: a.src,
                    tgt: a.tgt,
                })
                .collect(),
        }
    }

    pub fn to_quiver(&self) -> Result<Quiver, JsonError> {
        let frozen: BTreeSet<VertexId> = self.frozen.iter().copied().collect();
        let arrows = self
            .arrows
            .iter()
            .map(|a| Arrow::new(a.id.clone(), a.src, a.tgt))
            .collect();
        Ok(Quiver::new(self.vertices.clone(), frozen, arrows)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub coeff: String,
    pub word: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PotentialJson {
    pub trunc: usize,
    pub terms: Vec<TermJson>,
}

impl PotentialJson {
    pub fn from_potential<C: Coeff>(w: &Potential<C>) -> Self {
        let q = w.quiver();
        let terms = w
            .terms()
            .iter()
            .map(|(p, c)| TermJson {
                coeff: c.to_coeff_string(),
                word: p.names(q),
            })
            .collect();
        PotentialJson {
            trunc: w.trunc(),
            terms,
        }
    }

    /// Terms need not be in normal form; rotations are merged.
    pub fn to_potential<C: Coeff>(&self, q: &Arc<Quiver>) -> Result<Potential<C>, JsonError> {
        let mut e = AlgElem::zero(q, self.trunc);
        for t in &self.terms {
            let names: Vec<&str> = t.word.iter().map(String::as_str).collect();
            let w = PathWord::from_names(q, &names)?;
            if w.len() > self.trunc {
                return Err(JsonError::Invalid(format!(
                    "term {} is longer than trunc {}",
                    t.word.join(" "),
                    self.trunc
                )));
            }
            e.add_term(w, C::parse_coeff(&t.coeff)?);
        }
        Ok(Potential::new(&e)?)
    }
}

/// A quiver together with a potential on it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QpJson {
    pub quiver: QuiverJson,
    pub potential: PotentialJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeriesJson {
    pub n: usize,
    #[serde(default)]
    pub uses_y: bool,
    pub degree_cap: usize,
    pub terms: Vec<TermJson>,
}

impl SeriesJson {
    pub fn from_series<C: Coeff>(f: &FreeSeries<C>) -> Self {
        let terms = f
            .terms()
            .iter()
            .map(|(w, c)| TermJson {
                coeff: c.to_coeff_string(),
                word: w.iter().map(|&l| f.letter_name(l)).collect(),
            })
            .collect();
        SeriesJson {
            n: f.n(),
            uses_y: f.uses_y(),
            degree_cap: f.degree_cap(),
            terms,
        }
    }

    pub fn to_series<C: Coeff>(&self) -> Result<FreeSeries<C>, JsonError> {
        let mut f = FreeSeries::zero(self.n, self.uses_y, self.degree_cap);
        for t in &self.terms {
            let w = t
                .word
                .iter()
                .map(|s| f.parse_letter(s))
                .collect::<Result<Vec<_>, _>>()?;
            if w.len() > self.degree_cap {
                return Err(JsonError::Invalid(format!(
                    "term {} exceeds degree_cap {}",
                    t.word.join(" "),
                    self.degree_cap
                )));
            }
            f.add_term(w, C::parse_coeff(&t.coeff)?);
        }
        Ok(f)
    }
}

/// Generators of an ideal in `x_1..x_n`, each shaped like a series.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealJson {
    pub n: usize,
    pub gens: Vec<SeriesJson>,
}

impl IdealJson {
    pub fn from_presentation(p: &IdealPresentation) -> Self {
        IdealJson {
            n: p.n(),
            gens: p.gens().iter().map(SeriesJson::from_series).collect(),
        }
    }

    pub fn to_presentation(&self) -> Result<IdealPresentation, JsonError> {
        let gens = self
            .gens
            .iter()
            .map(SeriesJson::to_series::<Rational>)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IdealPresentation::new(self.n, gens)?)
    }
}

/// Words such as `["x1","x2"]` in `n` x-letters.
pub fn parse_words(n: usize, words: &[Vec<String>]) -> Result<Vec<Vec<Letter>>, JsonError> {
    let alphabet = FreeSeries::<Rational>::zero(n, false, 0);
    let parse = |w: &Vec<String>| {
        w.iter()
            .map(|s| alphabet.parse_letter(s))
            .collect::<Result<Vec<_>, _>>()
    };
    Ok(words.iter().map(parse).collect::<Result<Vec<_>, _>>()?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConclusionJson {
    pub finite: bool,
    /// The dimension when finite, otherwise the lower bound reached so far.
    pub dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProfileJson {
    pub ring: String,
    pub d: Vec<usize>,
    pub conclusion: ConclusionJson,
    /// Set when the ideal came from the Jacobi generators of a series `f`
    /// and the profile vanished: the Jacobian algebra of `(Q_n, ΣB + Φ(f))`
    /// is then finite-dimensional too.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub jacobian_finite: Option<bool>,
}

impl ProfileJson {
    pub fn from_profile(p: &DimProfile) -> Self {
        let conclusion = match conclude_dimension(&p.d) {
            DimConclusion::Finite(dim) => ConclusionJson { finite: true, dim },
            DimConclusion::Unknown(dim) => ConclusionJson { finite: false, dim },
        };
        ProfileJson {
            ring: p.ring.label(),
            d: p.d.clone(),
            conclusion,
            jacobian_finite: None,
        }
    }
}

/// Arrow degrees by name; the coefficient of each cycle of the potential
/// is its sign `ε`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GradedQpJson {
    pub ring: String,
    pub quiver: QuiverJson,
    pub degrees: BTreeMap<String, u32>,
    pub potential: PotentialJson,
}

impl GradedQpJson {
    pub fn from_graded<C: Coeff>(g: &GradedQP<C>) -> Self {
        let degrees = g
            .quiver
            .arrows()
            .iter()
            .zip(&g.degrees)
            .map(|(a, &d)| (a.name.clone(), d))
            .collect();
        GradedQpJson {
            ring: C::ring().label(),
            quiver: QuiverJson::from_quiver(&g.quiver),
            degrees,
            potential: PotentialJson::from_potential(&g.potential),
        }
    }

    /// Coefficients are parsed in `C`, whatever `ring` says; callers pick
    /// `C` from `ring`.
    pub fn to_graded<C: Coeff>(&self) -> Result<GradedQP<C>, JsonError> {
        let q = Arc::new(self.quiver.to_quiver()?);
        let mut degrees = Vec::with_capacity(q.num_arrows());
        for a in q.arrows() {
            match self.degrees.get(&a.name) {
                Some(&d) if d > 0 => degrees.push(d),
                Some(_) => {
                    return Err(JsonError::Invalid(format!("arrow {} has degree 0", a.name)))
                }
                None => {
                    return Err(JsonError::Invalid(format!(
                        "no degree for arrow {}",
                        a.name
                    )))
                }
            }
        }
        if let Some(extra) = self.degrees.keys().find(|k| q.arrow_index(k).is_none()) {
            return Err(JsonError::Invalid(format!(
                "degree given for unknown arrow {extra}"
            )));
        }
        let w = self.potential.to_potential(&q)?;
        Ok(GradedQP::new(q, degrees, w)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{Ring, F2};
    use crate::x7::{f0, w_of, w_prime_of, x7, x7_prime};

    #[test]
    fn quiver_round_trip() {
        let q = x7();
        let j = QuiverJson::from_quiver(&q);
        let s = serde_json::to_string(&j).unwrap();
        let back: QuiverJson = serde_json::from_str(&s).unwrap();
        assert_eq!(back.to_quiver().unwrap(), *q);
    }

    #[test]
    fn potential_round_trip_and_shape() {
        let q = x7();
        let w = w_of::<Rational>(&q, &f0(4), 12).unwrap();
        let j = PotentialJson::from_potential(&w);
        let s = serde_json::to_string(&j).unwrap();
        assert!(s.starts_with(r#"{"trunc":12,"terms":[{"coeff":"1","word":["#));
        let back: PotentialJson = serde_json::from_str(&s).unwrap();
        assert_eq!(back.to_potential::<Rational>(&q).unwrap(), w);
    }

    #[test]
    fn rotated_input_is_merged() {
        let q = x7();
        let j = PotentialJson {
            trunc: 6,
            terms: vec![
                TermJson {
                    coeff: "1/2".into(),
                    word: vec!["a1".into(), "b1".into(), "g1".into()],
                },
                TermJson {
                    coeff: "1/2".into(),
                    word: vec!["g1".into(), "a1".into(), "b1".into()],
                },
            ],
        };
        let w = j.to_potential::<Rational>(&q).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(PotentialJson::from_potential(&w).terms[0].coeff, "1");
    }

    #[test]
    fn series_round_trip() {
        let s = r#"{"n":3,"uses_y":true,"degree_cap":6,"terms":[{"coeff":"1","word":["x1","x2","x3"]},{"coeff":"-2","word":["y2","x1"]}]}"#;
        let j: SeriesJson = serde_json::from_str(s).unwrap();
        let f = j.to_series::<Rational>().unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(
            serde_json::to_string(&SeriesJson::from_series(&f))
                .unwrap()
                .len(),
            s.len()
        );
        assert_eq!(
            SeriesJson::from_series(&f).to_series::<Rational>().unwrap(),
            f
        );
    }

    #[test]
    fn ideal_round_trip() {
        let s = r#"{"n":2,"gens":[{"n":2,"uses_y":false,"degree_cap":2,"terms":[{"coeff":"1","word":["x1","x1"]}]}]}"#;
        let j: IdealJson = serde_json::from_str(s).unwrap();
        let p = j.to_presentation().unwrap();
        assert_eq!((p.n(), p.e(), p.t()), (2, 2, 1));
        assert_eq!(IdealJson::from_presentation(&p), j);
        assert_eq!(
            parse_words(3, &[vec!["x1".into(), "x3".into()]]).unwrap(),
            vec![vec![0, 2]]
        );
        assert!(parse_words(2, &[vec!["x3".into()]]).is_err());
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let s = r#"{"vertices":[0],"arrows":[],"colour":1}"#;
        assert!(serde_json::from_str::<QuiverJson>(s).is_err());
    }

    #[test]
    fn profile_shape() {
        let p = DimProfile {
            ring: Ring::Rationals,
            d: vec![1, 3, 4, 3, 1, 0, 0],
        };
        let s = serde_json::to_string(&ProfileJson::from_profile(&p)).unwrap();
        assert_eq!(
            s,
            r#"{"ring":"Q","d":[1,3,4,3,1,0,0],"conclusion":{"finite":true,"dim":12}}"#
        );
    }

    #[test]
    fn graded_round_trip() {
        let q = x7_prime();
        let w = w_prime_of::<F2>(&q, &f0(6), 12).unwrap();
        let degrees = q
            .arrows()
            .iter()
            .map(|a| if a.name.starts_with('d') { 1 } else { 2 })
            .collect();
        let g = GradedQP::new(q, degrees, w).unwrap();
        let j = GradedQpJson::from_graded(&g);
        assert_eq!(j.ring, "F2");
        let back: GradedQpJson = serde_json::from_str(&serde_json::to_string(&j).unwrap()).unwrap();
        let h = back.to_graded::<F2>().unwrap();
        assert_eq!((h.degrees, h.potential), (g.degrees, g.potential));
    }
}
