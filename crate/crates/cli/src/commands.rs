use minpoly_core::arith::{parse_rat, ser};
use minpoly_core::howe::{
    check_conv_powers, check_divisibility_instance, check_resolvent_transfer, ConvPowersReport, DivisibilityReport,
    TransferReport,
};
use minpoly_core::oracle::{build_catalog_rep, build_irrep_gl, oracle_minpoly, CatalogRep};
use minpoly_core::shuffle::{root_multiplicities, shuffle_gl, shuffle_mirror, Parity};
use minpoly_core::verify::{default_order, divisibility_poset, ParityClass, Route, Verdict};
use minpoly_core::{
    predict, AlgebraSpec, Certificate, Certifier, DiagnosticReport, Erratum, Family, Mode, Prediction, Rat, ShuffleDecomposition, UniPoly,
    Weight,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::Value;

use crate::{Failure, FamilyArg, Job, ShuffleJob};

pub struct Output {
    pub document: Value,
    /// Exit with status 2 even though a document was produced.
    pub failed: bool,
}

type Outcome = Result<Output, Failure>;

fn emit<T: Serialize>(doc: &T, failed: bool) -> Outcome {
    Ok(Output {
        document: serde_json::to_value(doc).expect("serializable output"),
        failed,
    })
}

fn algebra(family: FamilyArg, rank: usize, odd: bool) -> Result<AlgebraSpec, Failure> {
    let family = match (family, odd) {
        (FamilyArg::Gl, false) => Family::Gl,
        (FamilyArg::Sp, false) => Family::Sp,
        (FamilyArg::O, false) => Family::OEven,
        (FamilyArg::O, true) => Family::OOdd,
        (_, true) => return Err(Failure::Usage("--odd applies to the orthogonal family only".into())),
    };
    Ok(AlgebraSpec::new(family, rank)?)
}

fn rationals(text: &str, what: &str) -> Result<Vec<Rat>, Failure> {
    text.split(',')
        .map(|s| parse_rat(s).ok_or_else(|| Failure::Usage(format!("malformed {what} entry {s:?} in {text:?}"))))
        .collect()
}

fn weight(spec: &AlgebraSpec, text: Option<&str>) -> Result<Weight, Failure> {
    let w = match text {
        None => Weight::zero(spec.rank()),
        Some(t) => Weight::new(rationals(t, "weight")?),
    };
    w.check_rank(spec)?;
    Ok(w)
}

fn setup(job: &Job) -> Result<(AlgebraSpec, Weight), Failure> {
    let spec = algebra(job.family, job.rank, job.options.odd)?;
    let w = weight(&spec, job.weight.as_deref())?;
    Ok((spec, w))
}

fn order(job: &Job, spec: &AlgebraSpec) -> usize {
    job.options.truncation.unwrap_or_else(|| default_order(spec))
}

fn poly_option(job: &Job) -> Result<Option<UniPoly>, Failure> {
    job.options
        .poly
        .as_deref()
        .map(|t| {
            let p = UniPoly::new(rationals(t, "polynomial")?);
            if p.is_zero() {
                return Err(Failure::Usage("--poly must be non-zero".into()));
            }
            Ok(p.monic())
        })
        .transpose()
}

#[derive(Serialize)]
struct Roots(#[serde(serialize_with = "ser::roots")] Vec<(Rat, usize)>);

fn roots(p: &UniPoly) -> Roots {
    Roots(root_multiplicities(p))
}

#[derive(Serialize)]
struct MinpolyOut {
    command: &'static str,
    algebra: String,
    weight: Weight,
    #[serde(serialize_with = "ser::rats")]
    l: Vec<Rat>,
    roots: Roots,
    polynomial: UniPoly,
    mode: Mode,
    certified: bool,
    errata: Vec<Erratum>,
    route: Option<Route>,
}

pub fn minpoly(job: &Job) -> Outcome {
    let (spec, w) = setup(job)?;
    let mode: Mode = job.options.mode.into();
    let prediction = predict(&spec, &w)?;
    let (polynomial, route) = match mode {
        Mode::Fast => (prediction.polynomial.clone(), None),
        Mode::Certified => {
            let outcome = Certifier::new(&spec).certified_minpoly(&w, job.options.truncation)?;
            (outcome.polynomial, Some(outcome.route))
        }
    };
    emit(
        &MinpolyOut {
            command: "minpoly",
            algebra: spec.name(),
            weight: w,
            l: prediction.l,
            roots: roots(&polynomial),
            polynomial,
            mode,
            certified: mode == Mode::Certified,
            errata: prediction.errata,
            route,
        },
        false,
    )
}

#[derive(Serialize)]
struct ShuffleOut {
    command: &'static str,
    algebra: Option<String>,
    weight: Option<Weight>,
    #[serde(serialize_with = "ser::rats")]
    l: Vec<Rat>,
    #[serde(serialize_with = "ser::rat")]
    epsilon: Rat,
    parts: Vec<Vec<String>>,
    decomposition: ShuffleDecomposition,
    parity: Parity,
}

pub fn shuffle(job: &ShuffleJob) -> Outcome {
    let odd = job.options.odd;
    let (algebra_name, w, l, spec) = match (&job.first, &job.weight) {
        (seq, None) => {
            // without a rank the family only fixes ε
            let spec = algebra(job.family, 1, odd)?;
            (None, None, rationals(seq, "sequence")?, spec)
        }
        (rank, Some(text)) => {
            let rank: usize = rank
                .parse()
                .map_err(|_| Failure::Usage(format!("rank must be a positive integer, got {rank:?}")))?;
            let spec = algebra(job.family, rank, odd)?;
            let w = weight(&spec, Some(text))?;
            (Some(spec.name()), Some(w.clone()), w.shifted(&spec), spec)
        }
    };
    let decomposition = if spec.family().is_gl() {
        shuffle_gl(&l)
    } else {
        shuffle_mirror(&l, spec.epsilon())
    };
    let parts = decomposition
        .parts
        .iter()
        .map(|p| p.terms.iter().map(ToString::to_string).collect())
        .collect();
    emit(
        &ShuffleOut {
            command: "shuffle",
            algebra: algebra_name,
            weight: w,
            l,
            epsilon: spec.epsilon().clone(),
            parts,
            parity: decomposition.parity,
            decomposition,
        },
        false,
    )
}

#[derive(Serialize)]
struct CertifyOut {
    command: &'static str,
    algebra: String,
    weight: Weight,
    roots: Roots,
    polynomial: UniPoly,
    route: Option<Route>,
    agrees_with_prediction: Option<bool>,
    prediction: Option<Prediction>,
    certificate: Certificate,
}

pub fn certify(job: &Job) -> Outcome {
    let (spec, w) = setup(job)?;
    let mut cert = Certifier::new(&spec);
    let out = match poly_option(job)? {
        Some(q) => CertifyOut {
            command: "certify",
            algebra: spec.name(),
            certificate: cert.certify_minimal(&q, &w)?,
            weight: w,
            roots: roots(&q),
            polynomial: q,
            route: None,
            agrees_with_prediction: None,
            prediction: None,
        },
        None => {
            let outcome = cert.certified_minpoly(&w, job.options.truncation)?;
            CertifyOut {
                command: "certify",
                algebra: spec.name(),
                weight: w,
                roots: roots(&outcome.polynomial),
                agrees_with_prediction: Some(outcome.agrees_with_prediction()),
                polynomial: outcome.polynomial,
                route: Some(outcome.route),
                prediction: Some(outcome.prediction),
                certificate: outcome.certificate,
            }
        }
    };
    emit(&out, false)
}

#[derive(Serialize)]
struct ResolventOut {
    command: &'static str,
    algebra: String,
    weight: Weight,
    order: usize,
    denominator: UniPoly,
    roots: Roots,
    resolvent: minpoly_core::verify::ProjectedResolvent,
}

pub fn resolvent(job: &Job) -> Outcome {
    let (spec, w) = setup(job)?;
    let k = order(job, &spec);
    let resolvent = Certifier::new(&spec).projected_resolvent(&w, k)?;
    emit(
        &ResolventOut {
            command: "resolvent",
            algebra: spec.name(),
            weight: w,
            order: k,
            denominator: resolvent.denominator.clone(),
            roots: roots(&resolvent.denominator),
            resolvent,
        },
        false,
    )
}

#[derive(Serialize)]
struct DiagnosticsOut {
    command: &'static str,
    algebra: String,
    weight: Weight,
    order: usize,
    all_asserted_match: bool,
    reports: Vec<DiagnosticReport>,
}

pub fn relcheck(job: &Job) -> Outcome {
    let (spec, w) = setup(job)?;
    let k = order(job, &spec);
    let reports = Certifier::new(&spec).check_relative_formulas(&w, k)?;
    let ok = reports.iter().filter(|r| r.asserted).all(|r| r.verdict == Verdict::Match);
    emit(
        &DiagnosticsOut {
            command: "relcheck",
            algebra: spec.name(),
            weight: w,
            order: k,
            all_asserted_match: ok,
            reports,
        },
        !ok,
    )
}

pub fn ppdiag(job: &Job) -> Outcome {
    let (spec, w) = setup(job)?;
    let k = order(job, &spec);
    let report = Certifier::new(&spec).pp_diagnostic(&w, k)?;
    emit(
        &DiagnosticsOut {
            command: "ppdiag",
            algebra: spec.name(),
            weight: w,
            order: k,
            all_asserted_match: true,
            reports: vec![report],
        },
        false,
    )
}

#[derive(Serialize)]
struct ParityOut {
    command: &'static str,
    algebra: String,
    weight: Weight,
    polynomial: UniPoly,
    class: ParityClass,
    shuffle_parity: Parity,
}

pub fn parity(job: &Job) -> Outcome {
    let (spec, w) = setup(job)?;
    let prediction = predict(&spec, &w)?;
    let q = poly_option(job)?.unwrap_or_else(|| prediction.polynomial.clone());
    let class = Certifier::new(&spec).parity_classify(&q, &w)?;
    emit(
        &ParityOut {
            command: "parity",
            algebra: spec.name(),
            weight: w,
            polynomial: q,
            class,
            shuffle_parity: prediction.decomposition.parity,
        },
        false,
    )
}

#[derive(Serialize)]
struct OracleOut {
    command: &'static str,
    algebra: String,
    weight: Weight,
    representation: &'static str,
    dim: usize,
    brackets_hold: bool,
    roots: Roots,
    polynomial: UniPoly,
}

pub fn oracle(job: &Job) -> Outcome {
    let (spec, w) = setup(job)?;
    let (representation, rep) = if spec.family().is_gl() {
        ("schur-weyl", build_irrep_gl(&spec, &w, job.options.depth.unwrap_or(6))?)
    } else if w == Weight::zero(spec.rank()) {
        ("trivial", build_catalog_rep(&spec, CatalogRep::Trivial))
    } else {
        let mut defining = vec![0; spec.rank()];
        defining[0] = 1;
        if w != Weight::from_ints(&defining) {
            return Err(Failure::Usage(format!(
                "the {} oracle covers the trivial and defining modules only",
                spec.name()
            )));
        }
        ("defining", build_catalog_rep(&spec, CatalogRep::Defining))
    };
    let polynomial = oracle_minpoly(&spec, &rep);
    emit(
        &OracleOut {
            command: "oracle",
            algebra: spec.name(),
            weight: w,
            representation,
            dim: rep.dim,
            brackets_hold: rep.bracket_failures(&spec).is_empty(),
            roots: roots(&polynomial),
            polynomial,
        },
        false,
    )
}

#[derive(Serialize)]
struct HoweOut {
    command: &'static str,
    n: usize,
    k: usize,
    all_pass: bool,
    conv_powers: ConvPowersReport,
    transfer: TransferReport,
    divisibility: Vec<DivisibilityReport>,
}

pub fn howe(job: &Job) -> Outcome {
    if job.family != FamilyArg::Gl || job.options.odd {
        return Err(Failure::Usage("howe covers the pair (gl_n, gl_k) only".into()));
    }
    let n = job.rank;
    let k: usize = job
        .weight
        .as_deref()
        .ok_or_else(|| Failure::Usage("howe needs k: `howe gl <n> <k>`".into()))?
        .parse()
        .map_err(|_| Failure::Usage("k must be a positive integer".into()))?;
    let depth = job.options.depth.unwrap_or(4);
    let conv_powers = check_conv_powers(n, k, depth)?;
    let transfer = check_resolvent_transfer(n, k, job.options.truncation.unwrap_or(4))?;
    let divisibility = if n == 1 {
        (0..=depth)
            .map(|d| check_divisibility_instance(1, k, d))
            .collect::<Result<Vec<_>, _>>()?
    } else {
        Vec::new()
    };
    let all_pass = conv_powers.all_pass && transfer.all_pass && divisibility.iter().all(|r| r.pass);
    emit(
        &HoweOut {
            command: "howe",
            n,
            k,
            all_pass,
            conv_powers,
            transfer,
            divisibility,
        },
        !all_pass,
    )
}

#[derive(Serialize)]
struct PosetNodeOut {
    weight: Weight,
    roots: Roots,
    polynomial: UniPoly,
}

#[derive(Serialize)]
struct PosetOut {
    command: &'static str,
    algebra: String,
    seed: Option<u64>,
    nodes: Vec<PosetNodeOut>,
    /// `[a, b]`: the polynomial of node `a` properly divides that of `b`.
    edges: Vec<(usize, usize)>,
}

pub fn poset(job: &Job) -> Outcome {
    let spec = algebra(job.family, job.rank, job.options.odd)?;
    let (weights, seed) = match job.weight.as_deref() {
        Some(list) => (
            list.split(';')
                .map(|t| weight(&spec, Some(t)))
                .collect::<Result<Vec<_>, _>>()?,
            None,
        ),
        None => {
            let mut rng = ChaCha8Rng::seed_from_u64(job.options.seed);
            let ws = (0..job.options.samples)
                .map(|_| Weight::from_ints(&(0..spec.rank()).map(|_| rng.random_range(-2..=2)).collect::<Vec<_>>()))
                .collect();
            (ws, Some(job.options.seed))
        }
    };
    let poset = divisibility_poset(&spec, &weights)?;
    emit(
        &PosetOut {
            command: "poset",
            algebra: spec.name(),
            seed,
            nodes: poset
                .nodes
                .into_iter()
                .map(|n| PosetNodeOut {
                    roots: roots(&n.polynomial),
                    weight: n.weight,
                    polynomial: n.polynomial,
                })
                .collect(),
            edges: poset.edges,
        },
        false,
    )
}
