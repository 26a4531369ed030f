use std::fs;
use std::path::Path;
use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;

use qpmut::coeff::{Coeff, Fp, Rational, Ring};
use qpmut::free_series::FreeSeries;
use qpmut::jacdim::{
    dimension_profile, graded_class_dimension, graded_infinite_check, jacobi_generators,
    profile_matrix, transfer_to_primes, GradedVerdict, IdealPresentation, JacdimError,
};
use qpmut::json::{
    parse_words, GradedQpJson, IdealJson, PotentialJson, ProfileJson, QpJson, QuiverJson,
    SeriesJson,
};
use qpmut::qp_mutation::{find_matching_for, mutate_qp, Matching};
use qpmut::quiver::{mutate_quiver, Quiver, VertexId};
use qpmut::reddening::{search_maximal_green, search_reddening};
use qpmut::x7::{self, verify_nondegeneracy_round, X7Error};

use crate::poly::parse_p;
use crate::Command;

pub enum Failure {
    /// Unreadable or ill-formed input: exit 2.
    Input(String),
    /// A mathematical check did not hold: exit 1.
    Check(String),
}

fn input<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Input(e.to_string())
}

pub struct Output {
    compact: String,
    pretty: String,
    /// Set when the output is a report whose verdict is negative.
    pub failure: Option<String>,
}

impl Output {
    fn json<T: Serialize>(v: &T) -> Self {
        Output {
            compact: serde_json::to_string(v).expect("serializable"),
            pretty: serde_json::to_string_pretty(v).expect("serializable"),
            failure: None,
        }
    }

    fn text(s: String) -> Self {
        Output {
            compact: s.clone(),
            pretty: s,
            failure: None,
        }
    }

    fn failing(mut self, failure: Option<String>) -> Self {
        self.failure = failure;
        self
    }

    pub fn render(&self, pretty: bool) -> &str {
        if pretty {
            &self.pretty
        } else {
            &self.compact
        }
    }
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn parse_ring(ring: &str, p: Option<u64>) -> Result<Ring, Failure> {
    let label = match (ring, p) {
        ("Fp", Some(p)) => format!("F{p}"),
        ("Fp", None) => return Err(Failure::Input("--ring Fp needs --p".into())),
        (r, None) => r.to_string(),
        (_, Some(_)) => return Err(Failure::Input("--p only goes with --ring Fp".into())),
    };
    match Ring::parse_label(&label) {
        Some(Ring::Integers) | None => Err(Failure::Input(format!(
            "unknown ring `{label}`; use Q, Fp with --p, or F<prime>"
        ))),
        Some(r) => Ok(r),
    }
}

/// Runs `$body` with `$C` bound to the coefficient type of `$ring`. Prime
/// fields need a compile-time modulus, so only small primes are offered.
macro_rules! with_coeff {
    ($ring:expr, $C:ident => $body:expr) => {
        match $ring {
            Ring::Rationals => {
                type $C = Rational;
                $body
            }
            Ring::PrimeField(2) => {
                type $C = Fp<2>;
                $body
            }
            Ring::PrimeField(3) => {
                type $C = Fp<3>;
                $body
            }
            Ring::PrimeField(5) => {
                type $C = Fp<5>;
                $body
            }
            Ring::PrimeField(7) => {
                type $C = Fp<7>;
                $body
            }
            r => Err(Failure::Input(format!(
                "ring {r} is not supported here; use Q, F2, F3, F5 or F7"
            ))),
        }
    };
}

pub fn run(cmd: Command) -> Result<Output, Failure> {
    match cmd {
        Command::QuiverMutate { input: path, k } => quiver_mutate(&path, k),
        Command::QpMutate {
            input: path,
            k,
            matching,
            ring,
            p,
        } => {
            with_coeff!(parse_ring(&ring, p)?, C => qp_mutate::<C>(&path, k, matching.as_deref()))
        }
        Command::Jacdim {
            file,
            ring,
            p,
            r,
            all_commutators,
            dump_matrix,
        } => jacdim(
            &file,
            parse_ring(&ring, p)?,
            r,
            !all_commutators,
            dump_matrix.as_deref(),
        ),
        Command::X7Table { json } => x7_table(json),
        Command::X7Verify {
            poly,
            trunc,
            ring,
            p,
        } => {
            with_coeff!(parse_ring(&ring, p)?, C => x7_verify::<C>(&poly, trunc))
        }
        Command::LatticeCheck {
            file,
            r,
            aug,
            all_commutators,
        } => lattice_check(&file, r, aug.as_deref(), !all_commutators),
        Command::GreenSearch {
            input: path,
            depth,
            green_only,
        } => green_search(&path, depth, green_only),
        Command::GradedCheck {
            input: path,
            class_dims,
        } => {
            let g: GradedQpJson = read_json(&path)?;
            let ring = Ring::parse_label(&g.ring)
                .ok_or_else(|| Failure::Input(format!("unknown ring `{}`", g.ring)))?;
            with_coeff!(ring, C => graded_check::<C>(&g, &class_dims))
        }
    }
}

fn quiver_mutate(path: &Path, k: VertexId) -> Result<Output, Failure> {
    let q = read_json::<QuiverJson>(path)?.to_quiver().map_err(input)?;
    let m = mutate_quiver(&q, k).map_err(input)?;
    Ok(Output::json(&QuiverJson::from_quiver(&m)))
}

#[derive(Serialize)]
struct QpMutationOut {
    ring: String,
    quiver: QuiverJson,
    potential: PotentialJson,
    matching: Matching,
    dual_matching: Matching,
}

fn qp_mutate<C: Coeff>(
    path: &Path,
    k: VertexId,
    matching: Option<&Path>,
) -> Result<Output, Failure> {
    let qp: QpJson = read_json(path)?;
    let q = Arc::new(qp.quiver.to_quiver().map_err(input)?);
    let w = qp.potential.to_potential::<C>(&q).map_err(input)?;
    let m = match matching {
        Some(mp) => {
            let m: Matching = read_json(mp)?;
            if m.vertex != k {
                return Err(Failure::Input(format!(
                    "matching is at vertex {}, not {k}",
                    m.vertex
                )));
            }
            m
        }
        None => find_matching_for(&q, &w, k).ok_or_else(|| {
            Failure::Check(format!(
                "no maximal matching at {k} makes the potential admissible"
            ))
        })?,
    };
    let mu = mutate_qp(&q, &w, &m).map_err(|e| Failure::Check(e.to_string()))?;
    Ok(Output::json(&QpMutationOut {
        ring: C::ring().label(),
        quiver: QuiverJson::from_quiver(&mu.quiver),
        potential: PotentialJson::from_potential(&mu.potential),
        matching: m,
        dual_matching: mu.dual.dual_matching.clone(),
    }))
}

/// Reads either an ideal `{"n","gens"}` or a series `f`, in which case the
/// ideal is generated by `x_i^2` and `[x_i, ∂_i f]`.
fn read_presentation(path: &Path, drop_one: bool) -> Result<(IdealPresentation, bool), Failure> {
    let v: Value = read_json(path)?;
    let bad = |e: serde_json::Error| Failure::Input(format!("{}: {e}", path.display()));
    if v.get("gens").is_some() {
        let j: IdealJson = serde_json::from_value(v).map_err(bad)?;
        Ok((j.to_presentation().map_err(input)?, false))
    } else {
        let j: SeriesJson = serde_json::from_value(v).map_err(bad)?;
        let f = j.to_series::<Rational>().map_err(input)?;
        Ok((jacobi_generators(&f, drop_one).map_err(input)?, true))
    }
}

fn profile_json(
    p: &IdealPresentation,
    r: usize,
    ring: Ring,
    from_series: bool,
) -> Result<ProfileJson, JacdimError> {
    let prof = dimension_profile(p, r, ring)?;
    let mut j = ProfileJson::from_profile(&prof);
    if from_series && j.conclusion.finite {
        j.jacobian_finite = Some(true);
    }
    Ok(j)
}

fn jacdim(
    path: &Path,
    ring: Ring,
    r: usize,
    drop_one: bool,
    dump: Option<&Path>,
) -> Result<Output, Failure> {
    let (p, from_series) = read_presentation(path, drop_one)?;
    let j = profile_json(&p, r, ring, from_series).map_err(input)?;
    if let Some(out) = dump {
        let m = profile_matrix(&p, r, ring).map_err(input)?;
        fs::write(out, m.to_text())
            .map_err(|e| Failure::Input(format!("{}: {e}", out.display())))?;
    }
    Ok(Output::json(&j))
}

/// `x_1 x_2 + x_2 x_3 + x_3 x_1`, plus `x_1 x_2 x_3` for `f_1`.
fn table_series(cubic: bool) -> FreeSeries<Rational> {
    let mut f = x7::f0::<Rational>(3);
    if cubic {
        f.add_term(vec![0, 1, 2], Rational::from_i64(1));
    }
    f
}

/// The expected rows, in the order `(Q,f0), (Q,f1), (F2,f0), (F2,f1)`.
const TABLE: [(&str, &str, [usize; 7]); 4] = [
    ("Q", "f0", [1, 3, 4, 3, 1, 0, 0]),
    ("Q", "f1", [1, 3, 4, 3, 1, 0, 0]),
    ("F2", "f0", [1, 3, 4, 4, 4, 4, 4]),
    ("F2", "f1", [1, 3, 4, 4, 3, 1, 0]),
];

#[derive(Serialize)]
struct TableRow {
    f: String,
    profile: ProfileJson,
}

fn x7_table(json: bool) -> Result<Output, Failure> {
    let mut rows = Vec::new();
    let mut mismatches = Vec::new();
    for (ring, f, expected) in TABLE {
        let ring_v = Ring::parse_label(ring).expect("fixed label");
        let p = jacobi_generators(&table_series(f == "f1"), true).map_err(input)?;
        let prof = profile_json(&p, 6, ring_v, true).map_err(input)?;
        if prof.d != expected {
            mismatches.push(format!(
                "{ring} {f}: got {:?}, expected {:?}",
                prof.d, expected
            ));
        }
        rows.push(TableRow {
            f: f.into(),
            profile: prof,
        });
    }
    let failure = (!mismatches.is_empty()).then(|| mismatches.join("; "));
    if json {
        return Ok(Output::json(&rows).failing(failure));
    }
    let mut s = String::from("K   f   d0 d1 d2 d3 d4 d5 d6");
    for r in &rows {
        let ds: Vec<String> = r.profile.d.iter().map(|d| format!("{d:>2}")).collect();
        s.push_str(&format!(
            "\n{:<3} {:<3} {}",
            r.profile.ring,
            r.f,
            ds.join(" ")
        ));
    }
    Ok(Output::text(s).failing(failure))
}

fn x7_verify<C: Coeff>(poly: &str, trunc: usize) -> Result<Output, Failure> {
    let p: Vec<C> = parse_p(poly)
        .map_err(Failure::Input)?
        .iter()
        .map(|c| {
            C::from_rational(c).ok_or_else(|| {
                Failure::Input(format!("coefficient {c} is not defined in {}", C::ring()))
            })
        })
        .collect::<Result<_, _>>()?;
    let report = verify_nondegeneracy_round(&p, trunc).map_err(|e| match e {
        X7Error::TruncationTooSmall(_) => input(e),
        e => Failure::Check(e.to_string()),
    })?;
    let failure = (!report.passed()).then(|| {
        let mut why: Vec<String> = report
            .failures()
            .iter()
            .map(|c| format!("{}: {}", c.name, c.detail))
            .collect();
        why.extend(
            report
                .two_cycles
                .iter()
                .filter(|t| t.count > 0)
                .map(|t| format!("{} 2-cycles at {} of {}", t.count, t.vertex, t.quiver)),
        );
        why.join("; ")
    });
    Ok(Output::json(&report).failing(failure))
}

fn big_number(s: String) -> Value {
    s.parse::<u64>()
        .map(Value::from)
        .unwrap_or(Value::String(s))
}

#[derive(Serialize)]
struct LatticeOut {
    index: Value,
    bad_primes: Vec<Value>,
    rank: usize,
}

fn lattice_check(
    path: &Path,
    r: usize,
    aug: Option<&Path>,
    drop_one: bool,
) -> Result<Output, Failure> {
    let (p, _) = read_presentation(path, drop_one)?;
    let words = match aug {
        Some(a) => Some(parse_words(p.n(), &read_json::<Vec<Vec<String>>>(a)?).map_err(input)?),
        None => None,
    };
    let t = transfer_to_primes(&p, r, words.as_deref()).map_err(|e| match e {
        JacdimError::NotZeroOverRationals(_) | JacdimError::AugmentationNotFullRank => {
            Failure::Check(e.to_string())
        }
        e => input(e),
    })?;
    Ok(Output::json(&LatticeOut {
        index: big_number(t.index.to_string()),
        bad_primes: t
            .bad_primes
            .iter()
            .map(|q| big_number(q.to_string()))
            .collect(),
        rank: t.rank,
    }))
}

#[derive(Serialize)]
struct GreenOut {
    found: bool,
    sequence: Option<Vec<VertexId>>,
    length: Option<usize>,
    maximal_green: bool,
    explored_depth: usize,
}

fn green_search(path: &Path, depth: usize, green_only: bool) -> Result<Output, Failure> {
    let q: Quiver = read_json::<QuiverJson>(path)?.to_quiver().map_err(input)?;
    let s = if green_only {
        search_maximal_green(&q, depth)
    } else {
        search_reddening(&q, depth)
    }
    .map_err(input)?;
    Ok(Output::json(&GreenOut {
        found: s.sequence.is_some(),
        length: s.sequence.as_ref().map(Vec::len),
        sequence: s.sequence,
        maximal_green: s.maximal_green,
        explored_depth: s.explored_depth,
    }))
}

#[derive(Serialize)]
struct RelationOut {
    arrow: String,
    p: Vec<String>,
    p_prime: Vec<String>,
    degree: u32,
}

#[derive(Serialize)]
struct ClassDim {
    degree: u32,
    dim: usize,
}

#[derive(Serialize)]
struct GradedOut {
    ring: String,
    certificate: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cycle_degree: Option<u32>,
    relations: Vec<RelationOut>,
    class_dims: Vec<ClassDim>,
}

fn graded_check<C: Coeff>(g: &GradedQpJson, class_dims: &[u32]) -> Result<Output, Failure> {
    let g = g.to_graded::<C>().map_err(input)?;
    let q = &g.quiver;
    let mut out = GradedOut {
        ring: C::ring().label(),
        certificate: false,
        reason: None,
        cycle_degree: None,
        relations: vec![],
        class_dims: vec![],
    };
    match graded_infinite_check(&g) {
        GradedVerdict::Inconclusive(why) => out.reason = Some(why),
        GradedVerdict::InfiniteCertificate {
            cycle_degree,
            relations,
        } => {
            out.certificate = true;
            out.cycle_degree = Some(cycle_degree);
            let pairs: Vec<_> = relations
                .iter()
                .map(|r| (r.p.clone(), r.p_prime.clone()))
                .collect();
            for &d in class_dims {
                let dim = graded_class_dimension(q, &g.degrees, &pairs, d).map_err(input)?;
                out.class_dims.push(ClassDim { degree: d, dim });
            }
            out.relations = relations
                .into_iter()
                .map(|r| RelationOut {
                    p: r.p.names(q),
                    p_prime: r.p_prime.names(q),
                    arrow: r.arrow,
                    degree: r.degree,
                })
                .collect();
        }
    }
    Ok(Output::json(&out))
}
