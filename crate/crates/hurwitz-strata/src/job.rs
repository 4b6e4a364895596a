//! Job documents: a small JSON surface over the library.
//!
//! A job is a single JSON object selecting a `mode` and supplying the data
//! that mode needs. Marked points are listed in `marking` (leg `i` of every
//! stratum key is `marking[i]`); a branched-cover datum adds `degree`, the
//! target map `F`, local multiplicities `rm` (defaulting to 1), and branch
//! profiles `br`. Branch points are indexed alphabetically by label.
//! Weights are written as `"p/q"` strings and echoed the same way.
//!
//! Reports are JSON with alphabetically sorted keys, so a job produces
//! byte-identical output across runs and worker counts. Every report embeds
//! a provenance block with the tool version and the SHA-256 of the job text.
//!
//! The verdict maps to the process exit code: `pass` exits 0, a serialized
//! theorem-check counterexample exits 1, and malformed input exits 2.

use std::collections::{BTreeMap, BTreeSet};
use std::thread;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Deserialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::covers::{enumerate_types_over, CoverError, WeightedType};
use crate::homology::{
    pushforward_matrix, stability_report, Component, HomologyError, PushforwardMatrix,
};
use crate::hurwitz::{DescentError, FullyMarked, HurwitzDatum, HurwitzError};
use crate::linalg::{spectral_radius, Matrix, RadiusEstimate, RadiusMethod};
use crate::monodromy::{braid_orbits, degree_pi_b, labeling_count, MonodromyError};
use crate::tree::{enumerate_stable_trees, CanonicalKey, TreeError};
use crate::weights::{kernel_strata, stabilize, tower_weight_datum, WeightDatum, WeightError};

#[derive(Debug, Error)]
pub enum JobError {
    #[error("cannot read job file: {0}")]
    Io(#[from] std::io::Error),
    #[error("cannot parse job document: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("mode {mode} requires field {field:?}")]
    MissingField { mode: Mode, field: &'static str },
    #[error("field {field:?} does not apply to mode {mode}")]
    ForeignField { mode: Mode, field: &'static str },
    #[error("give either \"heavy\" or \"weights\", not both")]
    AmbiguousWeights,
    #[error("label {0:?} is not in the marking")]
    UnknownLabel(String),
    #[error("label {0:?} appears twice in the marking")]
    DuplicateLabel(String),
    #[error("point {0:?} has no target in F")]
    PointWithoutTarget(String),
    #[error("malformed weight {0:?}: expected an integer or \"p/q\"")]
    BadFraction(String),
    #[error("component must be \"all\" or an orbit index, got {0:?}")]
    BadComponent(String),
    #[error("--orbit applies only to push jobs")]
    OrbitScope,
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Weight(#[from] WeightError),
    #[error(transparent)]
    Hurwitz(#[from] HurwitzError),
    #[error(transparent)]
    Descent(#[from] DescentError),
    #[error(transparent)]
    Monodromy(#[from] MonodromyError),
    #[error(transparent)]
    Cover(#[from] CoverError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Strata,
    Reduce,
    Covers,
    Push,
    Stability,
    Degree,
    Orbits,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Strata => "strata",
            Mode::Reduce => "reduce",
            Mode::Covers => "covers",
            Mode::Push => "push",
            Mode::Stability => "stability",
            Mode::Degree => "degree",
            Mode::Orbits => "orbits",
        }
    }
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Either the full pushforward or a single braid orbit.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum ComponentSpec {
    Orbit(usize),
    Name(String),
}

/// A parsed job document. Fields not used by the selected mode must be
/// absent; unknown keys are rejected outright.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub mode: Mode,
    #[serde(default)]
    pub marking: Option<Vec<String>>,
    #[serde(default)]
    pub degree: Option<usize>,
    #[serde(default, rename = "F")]
    pub targets: Option<BTreeMap<String, String>>,
    #[serde(default)]
    pub rm: Option<BTreeMap<String, usize>>,
    #[serde(default)]
    pub br: Option<BTreeMap<String, Vec<usize>>>,
    #[serde(default)]
    pub heavy: Option<Vec<String>>,
    #[serde(default)]
    pub weights: Option<BTreeMap<String, String>>,
    #[serde(default)]
    pub k: Option<usize>,
    #[serde(default)]
    pub component: Option<ComponentSpec>,
    #[serde(default)]
    pub ell: Option<usize>,
    #[serde(default)]
    pub out: Option<String>,
}

/// Command-line overrides applied on top of the job document.
#[derive(Clone, Copy, Debug, Default)]
pub struct RunOptions {
    /// Worker threads for per-stratum cover tables; 0 or 1 is sequential.
    pub threads: usize,
    /// Abort instead of enumerating more than this many monodromy tuples.
    pub max_tuples: Option<u64>,
    /// Restrict a push job to a single braid orbit.
    pub orbit: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Counterexample,
}

impl Verdict {
    pub fn exit_code(self) -> u8 {
        match self {
            Verdict::Pass => 0,
            Verdict::Counterexample => 1,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Counterexample => "counterexample",
        }
    }
}

/// A finished job: the report document, the verdict it encodes, and the
/// output path requested inside the job, if any.
#[derive(Clone, Debug)]
pub struct RunOutcome {
    pub report: Value,
    pub verdict: Verdict,
    pub out_path: Option<String>,
}

/// Parses and runs a job given as raw JSON text.
pub fn run_job(raw: &str, opts: &RunOptions) -> Result<RunOutcome, JobError> {
    let spec: JobSpec = serde_json::from_str(raw)?;
    check_fields(&spec)?;
    if opts.orbit.is_some() && spec.mode != Mode::Push {
        return Err(JobError::OrbitScope);
    }
    let (mut report, verdict) = match spec.mode {
        Mode::Strata => run_strata(&spec)?,
        Mode::Reduce => run_reduce(&spec)?,
        Mode::Degree => run_degree(&spec, opts)?,
        Mode::Orbits => run_orbits(&spec, opts)?,
        Mode::Covers => run_covers(&spec, opts)?,
        Mode::Push => run_push(&spec, opts)?,
        Mode::Stability => run_stability(&spec, opts)?,
    };
    let map = report
        .as_object_mut()
        .expect("reports are JSON objects");
    map.insert("mode".to_string(), json!(spec.mode.name()));
    map.insert("verdict".to_string(), json!(verdict.label()));
    map.insert(
        "provenance".to_string(),
        json!({
            "tool": "hurwitz-strata",
            "version": env!("CARGO_PKG_VERSION"),
            "job_sha256": hex_sha256(raw.as_bytes()),
        }),
    );
    Ok(RunOutcome {
        report,
        verdict,
        out_path: spec.out.clone(),
    })
}

fn hex_sha256(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let digest = hasher.finalize();
    let mut out = String::with_capacity(64);
    for byte in digest {
        out.push_str(&format!("{byte:02x}"));
    }
    out
}

fn check_fields(spec: &JobSpec) -> Result<(), JobError> {
    let mode = spec.mode;
    let datum_modes = matches!(
        mode,
        Mode::Degree | Mode::Orbits | Mode::Covers | Mode::Push | Mode::Stability
    );
    let present: [(&'static str, bool, bool); 9] = [
        ("degree", spec.degree.is_some(), datum_modes),
        ("F", spec.targets.is_some(), datum_modes),
        ("rm", spec.rm.is_some(), datum_modes),
        ("br", spec.br.is_some(), datum_modes),
        ("heavy", spec.heavy.is_some(), mode == Mode::Reduce),
        ("weights", spec.weights.is_some(), mode == Mode::Reduce),
        ("k", spec.k.is_some(), mode == Mode::Push),
        ("component", spec.component.is_some(), mode == Mode::Push),
        ("ell", spec.ell.is_some(), mode == Mode::Stability),
    ];
    for (field, given, allowed) in present {
        if given && !allowed {
            return Err(JobError::ForeignField { mode, field });
        }
    }
    Ok(())
}

fn require<T>(value: Option<T>, mode: Mode, field: &'static str) -> Result<T, JobError> {
    value.ok_or(JobError::MissingField { mode, field })
}

fn marking_of(spec: &JobSpec) -> Result<&[String], JobError> {
    let marking = require(spec.marking.as_deref(), spec.mode, "marking")?;
    let mut seen = BTreeSet::new();
    for label in marking {
        if !seen.insert(label) {
            return Err(JobError::DuplicateLabel(label.clone()));
        }
    }
    Ok(marking)
}

fn index_of(marking: &[String], label: &str) -> Result<usize, JobError> {
    marking
        .iter()
        .position(|m| m == label)
        .ok_or_else(|| JobError::UnknownLabel(label.to_string()))
}

/// Parses `"p/q"` or a bare integer string into an exact rational.
pub fn parse_fraction(text: &str) -> Result<BigRational, JobError> {
    let int = |s: &str| s.trim().parse::<BigInt>().ok();
    let value = match text.split_once('/') {
        Some((numer, denom)) => match (int(numer), int(denom)) {
            (Some(n), Some(d)) if !d.is_zero() => Some(BigRational::new(n, d)),
            _ => None,
        },
        None => int(text).map(BigRational::from_integer),
    };
    value.ok_or_else(|| JobError::BadFraction(text.to_string()))
}

/// Formats an exact rational as `"p/q"`, or just `"p"` for integers.
pub fn fraction_string(value: &BigRational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

fn build_datum(spec: &JobSpec) -> Result<HurwitzDatum, JobError> {
    let mode = spec.mode;
    let marking = marking_of(spec)?;
    let degree = require(spec.degree, mode, "degree")?;
    let targets = require(spec.targets.as_ref(), mode, "F")?;
    let profiles = require(spec.br.as_ref(), mode, "br")?;
    let empty = BTreeMap::new();
    let rm = spec.rm.as_ref().unwrap_or(&empty);
    for label in targets.keys().chain(rm.keys()) {
        index_of(marking, label)?;
    }
    let points: Vec<(&str, &str, usize)> = marking
        .iter()
        .map(|p| {
            let target = targets
                .get(p)
                .ok_or_else(|| JobError::PointWithoutTarget(p.clone()))?;
            Ok((p.as_str(), target.as_str(), rm.get(p).copied().unwrap_or(1)))
        })
        .collect::<Result<_, JobError>>()?;
    let branch_defs: Vec<(&str, &[usize])> = profiles
        .iter()
        .map(|(b, parts)| (b.as_str(), parts.as_slice()))
        .collect();
    Ok(HurwitzDatum::new(degree, &points, &branch_defs)?)
}

fn splits_value(key: &CanonicalKey, labels: &[String]) -> Value {
    json!(key.to_labels(labels))
}

fn matrix_value(matrix: &Matrix) -> Value {
    let rows: Vec<Vec<String>> = (0..matrix.rows())
        .map(|i| {
            (0..matrix.cols())
                .map(|j| fraction_string(matrix.get(i, j)))
                .collect()
        })
        .collect();
    json!(rows)
}

fn radius_value(estimate: &RadiusEstimate) -> Value {
    let method = match &estimate.method {
        RadiusMethod::ExactRationalRoot => "exact-rational-root".to_string(),
        RadiusMethod::SturmBisection { refinements } => {
            format!("bisection(refinements={refinements})")
        }
        RadiusMethod::NormBound => "norm-bound".to_string(),
        RadiusMethod::PowerIteration {
            iterations,
            residual,
        } => format!("power-iteration(iterations={iterations}, residual={residual:e})"),
    };
    json!({
        "value": fraction_string(&estimate.value),
        "bound": fraction_string(&estimate.bound),
        "approx": estimate.value.to_f64(),
        "exact": estimate.is_exact(),
        "method": method,
    })
}

fn pushforward_value(pm: &PushforwardMatrix, datum: &HurwitzDatum, originals: usize) -> Value {
    let branch_labels = datum.branch_labels().to_vec();
    let point_labels = datum.point_labels()[..originals].to_vec();
    let domain: Vec<Value> = pm
        .domain
        .keys()
        .iter()
        .map(|k| splits_value(k, &branch_labels))
        .collect();
    let codomain: Vec<Value> = pm
        .codomain
        .keys()
        .iter()
        .map(|k| splits_value(k, &point_labels))
        .collect();
    let sums: Vec<String> = (0..pm.matrix.cols())
        .map(|j| fraction_string(&pm.column_sum(j)))
        .collect();
    let anomalies: Vec<Value> = pm
        .anomalies
        .iter()
        .map(|a| {
            json!({
                "column": splits_value(&a.column, &branch_labels),
                "class": splits_value(&a.class_key, &point_labels),
                "class_dimension": a.class_dimension,
                "weight": fraction_string(&a.weight),
            })
        })
        .collect();
    let component = match pm.component {
        Component::All => json!("all"),
        Component::Orbit(id) => json!(id),
    };
    let mut value = json!({
        "component": component,
        "domain": domain,
        "codomain": codomain,
        "matrix": matrix_value(&pm.matrix),
        "column_sums": sums,
        "collapsed": fraction_string(&pm.collapsed),
        "anomalies": anomalies,
        "square": pm.is_square(),
    });
    if pm.is_square() {
        let radius = spectral_radius(&pm.matrix);
        value
            .as_object_mut()
            .expect("object literal")
            .insert("radius".to_string(), radius_value(&radius));
    }
    value
}

fn run_strata(spec: &JobSpec) -> Result<(Value, Verdict), JobError> {
    let marking = marking_of(spec)?;
    let n = marking.len();
    let keys = enumerate_stable_trees(n, None)?;
    let mut by_dimension: BTreeMap<String, usize> = BTreeMap::new();
    let strata: Vec<Value> = keys
        .iter()
        .map(|key| {
            *by_dimension.entry(key.dimension().to_string()).or_insert(0) += 1;
            json!({
                "dimension": key.dimension(),
                "splits": splits_value(key, marking),
            })
        })
        .collect();
    let report = json!({
        "marking": marking,
        "stratum_count": keys.len(),
        "by_dimension": by_dimension,
        "strata": strata,
    });
    Ok((report, Verdict::Pass))
}

fn weight_datum_of(spec: &JobSpec, marking: &[String]) -> Result<WeightDatum, JobError> {
    match (&spec.heavy, &spec.weights) {
        (Some(_), Some(_)) => Err(JobError::AmbiguousWeights),
        (Some(heavy), None) => {
            let mut set = BTreeSet::new();
            for label in heavy {
                set.insert(index_of(marking, label)?);
            }
            Ok(tower_weight_datum(marking.len(), &set, None)?)
        }
        (None, Some(weights)) => {
            for label in weights.keys() {
                index_of(marking, label)?;
            }
            let values: Vec<BigRational> = marking
                .iter()
                .map(|p| {
                    let text = weights
                        .get(p)
                        .ok_or_else(|| JobError::UnknownLabel(p.clone()))?;
                    parse_fraction(text)
                })
                .collect::<Result<_, JobError>>()?;
            Ok(WeightDatum::new(values)?)
        }
        (None, None) => Err(JobError::MissingField {
            mode: spec.mode,
            field: "heavy or weights",
        }),
    }
}

fn run_reduce(spec: &JobSpec) -> Result<(Value, Verdict), JobError> {
    let marking = marking_of(spec)?;
    let n = marking.len();
    let datum = weight_datum_of(spec, marking)?;
    let keys = enumerate_stable_trees(n, None)?;
    let strata: Vec<Value> = keys
        .iter()
        .map(|key| {
            let tree = key.to_tree();
            let reduced = stabilize(&tree, &datum)?;
            let clusters: Vec<Vec<Vec<&String>>> = reduced
                .clusters
                .iter()
                .map(|per_vertex| {
                    per_vertex
                        .iter()
                        .map(|cluster| cluster.iter().map(|&p| &marking[p]).collect())
                        .collect()
                })
                .collect();
            Ok(json!({
                "splits": splits_value(key, marking),
                "dimension": key.dimension(),
                "reduced_splits": splits_value(&reduced.quotient_key(), marking),
                "clusters": clusters,
                "image_dimension": reduced.image_dimension,
            }))
        })
        .collect::<Result<_, JobError>>()?;
    let mut kernel = BTreeMap::new();
    for k in 0..=n.saturating_sub(3) {
        let kernel_keys = kernel_strata(n, &datum, k)?;
        let rendered: Vec<Value> = kernel_keys
            .iter()
            .map(|key| splits_value(key, marking))
            .collect();
        kernel.insert(k.to_string(), rendered);
    }
    let weights: Vec<String> = datum.weights().iter().map(fraction_string).collect();
    let report = json!({
        "marking": marking,
        "weights": weights,
        "strata": strata,
        "kernel": kernel,
    });
    Ok((report, Verdict::Pass))
}

fn run_degree(spec: &JobSpec, opts: &RunOptions) -> Result<(Value, Verdict), JobError> {
    let datum = build_datum(spec)?;
    let fm = datum.full_marking();
    let covers = degree_pi_b(&fm, opts.max_tuples)?;
    let synthetic: Vec<String> = fm
        .datum
        .point_labels()
        .iter()
        .skip(fm.original_count)
        .cloned()
        .collect();
    let report = json!({
        "degree": datum.degree(),
        "marking": datum.point_labels(),
        "branches": datum.branch_labels(),
        "degree_pi_b": covers,
        "labelings": labeling_count(&fm).to_string(),
        "forget_degree": fm.forget_degree().to_string(),
        "synthetic_points": synthetic,
        "fully_ramified_target": datum
            .fully_ramified_target()
            .map(|b| datum.branch_label(b).to_string()),
        "total_critical": datum.total_critical(),
    });
    Ok((report, Verdict::Pass))
}

fn run_orbits(spec: &JobSpec, opts: &RunOptions) -> Result<(Value, Verdict), JobError> {
    let datum = build_datum(spec)?;
    let fm = datum.full_marking();
    let orbits = braid_orbits(&fm, opts.max_tuples)?;
    let rendered: Vec<Value> = orbits
        .orbits
        .iter()
        .enumerate()
        .map(|(id, orbit)| {
            let slots: Vec<Value> = (0..fm.datum.branch_count())
                .map(|b| {
                    json!({
                        "branch": fm.datum.branch_label(b),
                        "monodromy": orbit.representative.perms[b].cycle_string(),
                        "labels": orbit.representative.labels[b],
                    })
                })
                .collect();
            json!({
                "id": id,
                "size": orbit.classes.len(),
                "representative": slots,
            })
        })
        .collect();
    let report = json!({
        "degree": datum.degree(),
        "marking": datum.point_labels(),
        "branches": datum.branch_labels(),
        "class_count": orbits.classes.len(),
        "orbit_count": orbits.orbits.len(),
        "orbits": rendered,
    });
    Ok((report, Verdict::Pass))
}

fn type_value(wt: &WeightedType, point_labels: &[String]) -> Result<Value, JobError> {
    let ty = &wt.ty;
    let dims = ty.dimension_report()?;
    let edges: Vec<Value> = ty
        .sigma
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &(a, b))| {
            json!({
                "ends": [a, b],
                "image": ty.f_edges[i],
                "rm": ty.rm_edges[i],
            })
        })
        .collect();
    Ok(json!({
        "source_splits": splits_value(&ty.sigma.canonical_key(), point_labels),
        "weight": wt.weight,
        "vertex_degrees": ty.d_verts,
        "vertex_images": ty.f_verts,
        "edges": edges,
        "dimensions": {
            "source": dims.source,
            "target": dims.target,
            "image": dims.image,
        },
    }))
}

fn stratum_table(
    fm: &FullyMarked,
    key: &CanonicalKey,
    branch_labels: &[String],
    point_labels: &[String],
    expected: u64,
) -> Result<(Value, bool), JobError> {
    let tau = key.to_tree();
    let types = enumerate_types_over(&tau, fm)?;
    let total: u64 = types.iter().map(|wt| wt.weight).sum();
    let rendered: Vec<Value> = types
        .iter()
        .map(|wt| type_value(wt, point_labels))
        .collect::<Result<_, JobError>>()?;
    let flat = total == expected;
    let table = json!({
        "target_splits": splits_value(key, branch_labels),
        "target_dimension": key.dimension(),
        "types": rendered,
        "total_weight": total,
        "flat": flat,
    });
    Ok((table, flat))
}

fn run_covers(spec: &JobSpec, opts: &RunOptions) -> Result<(Value, Verdict), JobError> {
    let datum = build_datum(spec)?;
    let fm = datum.full_marking();
    let expected = degree_pi_b(&fm, opts.max_tuples)?;
    let n = datum.branch_count();
    let keys = if n >= 4 {
        enumerate_stable_trees(n, Some(n - 4))?
    } else {
        Vec::new()
    };
    let branch_labels = datum.branch_labels().to_vec();
    let point_labels = fm.datum.point_labels().to_vec();
    let workers = opts.threads.max(1).min(keys.len().max(1));
    let tables: Vec<Result<(Value, bool), JobError>> = if workers <= 1 {
        keys.iter()
            .map(|key| stratum_table(&fm, key, &branch_labels, &point_labels, expected))
            .collect()
    } else {
        let mut slots: Vec<Option<Result<(Value, bool), JobError>>> =
            (0..keys.len()).map(|_| None).collect();
        let keys_ref = keys.as_slice();
        let fm_ref = &fm;
        let branch_ref = branch_labels.as_slice();
        let point_ref = point_labels.as_slice();
        let chunks = thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    scope.spawn(move || {
                        let mut out = Vec::new();
                        let mut i = w;
                        while i < keys_ref.len() {
                            out.push((
                                i,
                                stratum_table(
                                    fm_ref,
                                    &keys_ref[i],
                                    branch_ref,
                                    point_ref,
                                    expected,
                                ),
                            ));
                            i += workers;
                        }
                        out
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("cover worker panicked"))
                .collect::<Vec<_>>()
        });
        for chunk in chunks {
            for (i, table) in chunk {
                slots[i] = Some(table);
            }
        }
        slots
            .into_iter()
            .map(|slot| slot.expect("every stratum assigned"))
            .collect()
    };
    let mut strata = Vec::with_capacity(tables.len());
    let mut all_flat = true;
    let mut failures = Vec::new();
    for (key, table) in keys.iter().zip(tables) {
        let (value, flat) = table?;
        if !flat {
            all_flat = false;
            failures.push(splits_value(key, &branch_labels));
        }
        strata.push(value);
    }
    let report = json!({
        "degree": datum.degree(),
        "marking": datum.point_labels(),
        "branches": branch_labels,
        "degree_pi_b": expected,
        "strata": strata,
        "flat": all_flat,
        "counterexamples": failures,
    });
    let verdict = if all_flat {
        Verdict::Pass
    } else {
        Verdict::Counterexample
    };
    Ok((report, verdict))
}

fn run_push(spec: &JobSpec, opts: &RunOptions) -> Result<(Value, Verdict), JobError> {
    let datum = build_datum(spec)?;
    let k = require(spec.k, spec.mode, "k")?;
    let component = match (opts.orbit, &spec.component) {
        (Some(id), _) => Component::Orbit(id),
        (None, Some(ComponentSpec::Orbit(id))) => Component::Orbit(*id),
        (None, Some(ComponentSpec::Name(name))) if name == "all" => Component::All,
        (None, Some(ComponentSpec::Name(name))) => {
            return Err(JobError::BadComponent(name.clone()))
        }
        (None, None) => Component::All,
    };
    let fm = datum.full_marking();
    if let Some(budget) = opts.max_tuples {
        degree_pi_b(&fm, Some(budget))?;
    }
    let pm = pushforward_matrix(&fm, k, component)?;
    let mut report = pushforward_value(&pm, &fm.datum, fm.original_count);
    let map = report.as_object_mut().expect("object literal");
    map.insert("degree".to_string(), json!(datum.degree()));
    map.insert("marking".to_string(), json!(datum.point_labels()));
    map.insert("branches".to_string(), json!(datum.branch_labels()));
    map.insert("k".to_string(), json!(k));
    Ok((report, Verdict::Pass))
}

fn run_stability(spec: &JobSpec, opts: &RunOptions) -> Result<(Value, Verdict), JobError> {
    let datum = build_datum(spec)?;
    let fm = datum.full_marking();
    if let Some(budget) = opts.max_tuples {
        degree_pi_b(&fm, Some(budget))?;
    }
    let rep = stability_report(&datum, spec.ell)?;
    let point = |i: &usize| datum.point_label(*i).to_string();
    let blocks: Vec<Value> = rep
        .blocks
        .iter()
        .map(|block| {
            let branch_labels = datum.branch_labels();
            let kernel: Vec<Value> = block
                .kernel
                .iter()
                .map(|key| splits_value(key, branch_labels))
                .collect();
            let quotient_keys: Vec<Value> = block
                .quotient_keys
                .iter()
                .map(|key| splits_value(key, branch_labels))
                .collect();
            let counterexample = block.counterexample.as_ref().map(|ce| {
                json!({
                    "column": splits_value(&ce.column, branch_labels),
                    "escaping_row": ce
                        .escaping_row
                        .as_ref()
                        .map(|key| splits_value(key, branch_labels)),
                    "anomalous_weight": ce.anomalous_weight.as_ref().map(fraction_string),
                })
            });
            json!({
                "k": block.k,
                "kernel": kernel,
                "pushforward": pushforward_value(&block.matrix, &fm.datum, fm.original_count),
                "counterexample": counterexample,
                "quotient_keys": quotient_keys,
                "quotient": matrix_value(&block.quotient),
                "radius": radius_value(&block.radius),
                "quotient_radius": radius_value(&block.quotient_radius),
            })
        })
        .collect();
    let report = json!({
        "degree": datum.degree(),
        "marking": datum.point_labels(),
        "branches": datum.branch_labels(),
        "descent": {
            "p_infinity": point(&rep.descent.p_infinity),
            "cycle": rep.descent.cycle.iter().map(point).collect::<Vec<_>>(),
            "cycle_length": rep.descent.cycle_length,
            "total_critical": rep.descent.total_critical,
            "marked_critical": rep.descent.marked_critical,
            "single_other_critical": rep.descent.single_other_critical,
        },
        "ell": rep.ell,
        "heavy": rep.heavy.iter().map(point).collect::<Vec<_>>(),
        "projective_note": rep.projective_note,
        "notes": rep.notes,
        "blocks": blocks,
    });
    let verdict = if rep.passed() {
        Verdict::Pass
    } else {
        Verdict::Counterexample
    };
    Ok((report, verdict))
}
