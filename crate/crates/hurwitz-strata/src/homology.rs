//! Pushforward matrices on strata-generated homology, Keel relations for
//! divisor classes, kernel-invariance checks, and stability reports.
//!
//! Matrices act on the free module spanned by the canonical keys of the
//! `k`-dimensional boundary strata. A combinatorial type over a target
//! stratum contributes its weight on the class of its forgotten source
//! stratum; contributions whose image collapses below dimension `k` are
//! dropped, a zero-dimensional image inside a larger stratum is moved to
//! a point stratum of its closure, and a positive-dimensional image
//! strictly inside a larger stratum is reported as an anomaly rather
//! than resolved, since relations among higher strata are out of scope.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::covers::{degeneration_census, enumerate_types_over, forgotten_class, CoverError};
use crate::hurwitz::{DescentError, DescentReport, FullyMarked, HurwitzDatum};
use crate::linalg::{spectral_radius, Matrix, RadiusEstimate};
use crate::monodromy::{braid_orbits, MonodromyError};
use crate::tree::{enumerate_stable_trees, CanonicalKey, TreeError};
use crate::weights::{kernel_strata, tower_weight_datum, WeightError};

#[derive(Debug, Error)]
pub enum HomologyError {
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Weight(#[from] WeightError),
    #[error(transparent)]
    Cover(#[from] CoverError),
    #[error(transparent)]
    Monodromy(#[from] MonodromyError),
    #[error(transparent)]
    Descent(#[from] DescentError),
    #[error("k = {k} exceeds the stratum dimension range 0..={max}")]
    KOutOfRange { k: usize, max: usize },
    #[error("need at least {need} legs, found {found}")]
    TooFewPoints { need: usize, found: usize },
    #[error("indices {quad:?} must be distinct and below {n}")]
    BadQuadruple { quad: [usize; 4], n: usize },
    #[error("bases do not match: {detail}")]
    BasisMismatch { detail: String },
    #[error("kernel key {key:?} is not a basis element")]
    KernelKeyNotInBasis { key: CanonicalKey },
    #[error("orbit {id} does not exist; {count} orbits found")]
    UnknownOrbit { id: usize, count: usize },
    #[error("cycle-length override {ell} is out of range 1..={max}")]
    BadEllOverride { ell: usize, max: usize },
}

/// The ordered canonical keys of all `k`-dimensional stable trees on `n`
/// legs; the labels of a free homology module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrataBasis {
    n: usize,
    k: usize,
    keys: Vec<CanonicalKey>,
}

impl StrataBasis {
    pub fn new(n: usize, k: usize) -> Result<Self, HomologyError> {
        if n < 3 {
            return Err(HomologyError::TooFewPoints { need: 3, found: n });
        }
        if k > n - 3 {
            return Err(HomologyError::KOutOfRange { k, max: n - 3 });
        }
        Ok(StrataBasis {
            n,
            k,
            keys: enumerate_stable_trees(n, Some(k))?,
        })
    }

    fn empty(n: usize, k: usize) -> Self {
        StrataBasis {
            n,
            k,
            keys: Vec::new(),
        }
    }

    pub fn leg_count(&self) -> usize {
        self.n
    }

    pub fn grade(&self) -> usize {
        self.k
    }

    pub fn keys(&self) -> &[CanonicalKey] {
        &self.keys
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn index_of(&self, key: &CanonicalKey) -> Option<usize> {
        self.keys.binary_search(key).ok()
    }
}

/// Which part of the cover space pushes forward: everything, or a single
/// braid orbit (one irreducible component), the latter scaled by the
/// reciprocal of the synthetic-marking degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Component {
    All,
    Orbit(usize),
}

/// A contribution whose forgotten source class is a `k`-cycle strictly
/// inside a stratum of larger dimension; it cannot be written in the
/// free strata basis without relations, so it is carried separately.
#[derive(Clone, Debug, PartialEq)]
pub struct Anomaly {
    pub column: CanonicalKey,
    pub class_key: CanonicalKey,
    pub class_dimension: usize,
    pub weight: BigRational,
}

/// The pushforward on grade-`k` strata classes: columns are target
/// strata, rows forgotten source strata, plus the mass that collapsed
/// below grade and any unresolved anomalies.
#[derive(Clone, Debug, PartialEq)]
pub struct PushforwardMatrix {
    pub domain: StrataBasis,
    pub codomain: StrataBasis,
    pub matrix: Matrix,
    pub anomalies: Vec<Anomaly>,
    pub collapsed: BigRational,
    pub component: Component,
}

impl PushforwardMatrix {
    pub fn is_square(&self) -> bool {
        self.domain == self.codomain
    }

    pub fn column_sum(&self, j: usize) -> BigRational {
        (0..self.matrix.rows())
            .map(|i| self.matrix.get(i, j).clone())
            .sum()
    }
}

/// Assembles the grade-`k` pushforward matrix of a fully marked datum.
/// Columns run over the `k`-strata of the branch-point space; every
/// admissible type over a column pushes its weight onto the class of its
/// source stratum with the synthetic points forgotten.
pub fn pushforward_matrix(
    fm: &FullyMarked,
    k: usize,
    component: Component,
) -> Result<PushforwardMatrix, HomologyError> {
    let n = fm.datum.branch_count();
    let m = fm.original_count;
    if m < 3 {
        return Err(HomologyError::TooFewPoints { need: 3, found: m });
    }
    let domain = StrataBasis::new(n, k)?;
    let codomain = if k + 3 <= m {
        StrataBasis::new(m, k)?
    } else {
        StrataBasis::empty(m, k)
    };
    let keep: BTreeSet<usize> = (0..m).collect();
    let orbits = match component {
        Component::All => None,
        Component::Orbit(id) => {
            let bo = braid_orbits(fm, None)?;
            if id >= bo.orbits.len() {
                return Err(HomologyError::UnknownOrbit {
                    id,
                    count: bo.orbits.len(),
                });
            }
            Some((bo, id))
        }
    };
    let inverse_marking_degree =
        BigRational::new(BigInt::from(1u32), BigInt::from(fm.forget_degree()));
    let mut matrix = Matrix::zero(codomain.len(), domain.len());
    let mut anomalies = Vec::new();
    let mut collapsed = BigRational::zero();
    for (j, tkey) in domain.keys().iter().enumerate() {
        let tau = tkey.to_tree();
        let mut contributions: Vec<(crate::covers::CombinatorialType, BigRational)> = Vec::new();
        match &orbits {
            None => {
                for wt in enumerate_types_over(&tau, fm)? {
                    let w = BigRational::from_integer(BigInt::from(wt.weight));
                    contributions.push((wt.ty, w));
                }
            }
            Some((bo, id)) => {
                let members: BTreeSet<usize> = bo.orbits[*id].classes.iter().copied().collect();
                for (ty, landed) in degeneration_census(&bo.classes, &tau, fm)? {
                    let count = landed.iter().filter(|c| members.contains(c)).count();
                    if count > 0 {
                        let w = BigRational::from_integer(BigInt::from(count))
                            * &inverse_marking_degree;
                        contributions.push((ty, w));
                    }
                }
            }
        }
        for (ty, weight) in contributions {
            let fc = forgotten_class(&ty, &keep)?;
            if fc.image_dimension < k {
                collapsed += weight;
                continue;
            }
            debug_assert_eq!(fc.image_dimension, k);
            if fc.dimension == k {
                let row = codomain
                    .index_of(&fc.key)
                    .expect("a k-dimensional key is a basis element");
                *matrix.get_mut(row, j) += weight;
            } else if k == 0 {
                let row = codomain
                    .keys()
                    .iter()
                    .position(|point| fc.key.refines_into(point))
                    .expect("every stratum closure contains a point stratum");
                *matrix.get_mut(row, j) += weight;
            } else {
                anomalies.push(Anomaly {
                    column: tkey.clone(),
                    class_key: fc.key,
                    class_dimension: fc.dimension,
                    weight,
                });
            }
        }
    }
    Ok(PushforwardMatrix {
        domain,
        codomain,
        matrix,
        anomalies,
        collapsed,
        component,
    })
}

/// Why a kernel column fails invariance: either an on-grade entry escapes
/// the kernel span, or the column carries anomalous mass that cannot be
/// placed in the basis at all.
#[derive(Clone, Debug, PartialEq)]
pub struct InvarianceCounterexample {
    pub column: CanonicalKey,
    pub escaping_row: Option<CanonicalKey>,
    pub anomalous_weight: Option<BigRational>,
}

/// Verifies that the image of every kernel column lies in the coordinate
/// span of the kernel keys. Returns the first violating column, or
/// `None` when the span is invariant.
pub fn kernel_invariance_check(
    m: &PushforwardMatrix,
    kernel: &[CanonicalKey],
) -> Result<Option<InvarianceCounterexample>, HomologyError> {
    if !m.is_square() {
        return Err(HomologyError::BasisMismatch {
            detail: format!(
                "domain has {} legs, codomain {}",
                m.domain.leg_count(),
                m.codomain.leg_count()
            ),
        });
    }
    let mut indices = BTreeSet::new();
    for key in kernel {
        let idx = m
            .domain
            .index_of(key)
            .ok_or_else(|| HomologyError::KernelKeyNotInBasis { key: key.clone() })?;
        indices.insert(idx);
    }
    for &j in &indices {
        let column = m.domain.keys()[j].clone();
        if let Some(a) = m.anomalies.iter().find(|a| a.column == column) {
            return Ok(Some(InvarianceCounterexample {
                column,
                escaping_row: None,
                anomalous_weight: Some(a.weight.clone()),
            }));
        }
        for i in 0..m.matrix.rows() {
            if !m.matrix.get(i, j).is_zero() && !indices.contains(&i) {
                return Ok(Some(InvarianceCounterexample {
                    column,
                    escaping_row: Some(m.codomain.keys()[i].clone()),
                    anomalous_weight: None,
                }));
            }
        }
    }
    Ok(None)
}

/// The Keel relation `(ij|kl) - (ik|jl)` on the divisor basis: each term
/// sums the boundary divisors separating the first pair from the second.
pub fn keel_relation(n: usize, quad: [usize; 4]) -> Result<Vec<BigRational>, HomologyError> {
    if n < 4 {
        return Err(HomologyError::TooFewPoints { need: 4, found: n });
    }
    let distinct: BTreeSet<usize> = quad.iter().copied().collect();
    if distinct.len() != 4 || quad.iter().any(|&i| i >= n) {
        return Err(HomologyError::BadQuadruple { quad, n });
    }
    let basis = StrataBasis::new(n, n - 4)?;
    let [i, j, k, l] = quad;
    Ok(basis
        .keys()
        .iter()
        .map(|key| {
            let mut coeff = BigRational::zero();
            if separates(key, i, j, k, l) {
                coeff += BigRational::from_integer(BigInt::from(1u32));
            }
            if separates(key, i, k, j, l) {
                coeff -= BigRational::from_integer(BigInt::from(1u32));
            }
            coeff
        })
        .collect())
}

/// True when the divisor key puts `a, b` on one side and `c, d` on the
/// other.
fn separates(key: &CanonicalKey, a: usize, b: usize, c: usize, d: usize) -> bool {
    let split = key.splits().iter().next().expect("divisor keys have one split");
    let side = |p: usize| split.contains(&p);
    side(a) == side(b) && side(c) == side(d) && side(a) != side(c)
}

/// The full system of Keel relations on the divisor basis, with its rank
/// and the rank of the quotient the divisor classes actually span.
#[derive(Clone, Debug)]
pub struct KeelRelations {
    pub basis: StrataBasis,
    pub relations: Matrix,
    pub relation_rank: usize,
    pub quotient_rank: usize,
}

pub fn keel_divisor_relations(n: usize) -> Result<KeelRelations, HomologyError> {
    let basis = StrataBasis::new(n, n.checked_sub(4).ok_or(HomologyError::TooFewPoints {
        need: 4,
        found: n,
    })?)?;
    let mut rows = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    rows.push(keel_relation(n, [a, b, c, d])?);
                    rows.push(keel_relation(n, [a, b, d, c])?);
                }
            }
        }
    }
    let relations = Matrix::from_rows(rows);
    let relation_rank = relations.rank();
    let quotient_rank = basis.len() - relation_rank;
    Ok(KeelRelations {
        basis,
        relations,
        relation_rank,
        quotient_rank,
    })
}

/// One homology grade of a stability report.
#[derive(Clone, Debug)]
pub struct StabilityBlock {
    pub k: usize,
    pub kernel: Vec<CanonicalKey>,
    pub matrix: PushforwardMatrix,
    pub counterexample: Option<InvarianceCounterexample>,
    pub quotient_keys: Vec<CanonicalKey>,
    pub quotient: Matrix,
    pub radius: RadiusEstimate,
    pub quotient_radius: RadiusEstimate,
}

/// The stability verdict for a portrait: per grade, the pushforward
/// matrix, the kernel strata of the tower reduction, the invariance
/// check, the induced quotient matrix, and dynamical-degree estimates.
#[derive(Clone, Debug)]
pub struct StabilityReport {
    pub descent: DescentReport,
    pub ell: usize,
    pub heavy: BTreeSet<usize>,
    pub blocks: Vec<StabilityBlock>,
    pub projective_note: Option<String>,
    pub notes: Vec<String>,
}

impl StabilityReport {
    pub fn passed(&self) -> bool {
        self.blocks.iter().all(|b| b.counterexample.is_none())
    }
}

/// Runs the full stability pipeline for a portrait datum: descent
/// criteria, the tower weights on the infinity cycle (or its first
/// `ell_override` points), pushforward matrices and kernel-invariance
/// checks for every grade, quotient matrices, and spectral radii. A
/// one-point cycle is routed to a note instead of matrices: the tower
/// collapses to projective space, the classical holomorphic case.
pub fn stability_report(
    datum: &HurwitzDatum,
    ell_override: Option<usize>,
) -> Result<StabilityReport, HomologyError> {
    let descent = datum.check_descent()?;
    let ell = ell_override.unwrap_or(descent.cycle_length);
    if ell < 1 || ell > descent.cycle_length {
        return Err(HomologyError::BadEllOverride {
            ell,
            max: descent.cycle_length,
        });
    }
    let notes = vec![
        "Kernel invariance is checked exactly; stability on the weighted reduction follows by a descent lemma that is assumed, not re-proven.".to_string(),
        "Matrices act on the free module over strata keys; quotient ranks away from divisor degree are free-module upper bounds.".to_string(),
        "Iterates compose on the unreduced space by a cited identity; only the single-step matrix is computed.".to_string(),
    ];
    if ell == 1 {
        return Ok(StabilityReport {
            descent,
            ell,
            heavy: BTreeSet::new(),
            blocks: Vec::new(),
            projective_note: Some(
                "The infinity cycle is a single point; its tower is projective space and stability is the classical holomorphic case."
                    .to_string(),
            ),
            notes,
        });
    }
    let n = datum.branch_count();
    for i in 0..n {
        if datum.point_label(i) != datum.branch_label(i) {
            return Err(HomologyError::BasisMismatch {
                detail: format!(
                    "point {} is labeled {:?} but branch {} is labeled {:?}",
                    i,
                    datum.point_label(i),
                    i,
                    datum.branch_label(i)
                ),
            });
        }
    }
    let heavy: BTreeSet<usize> = descent.cycle.iter().take(ell).copied().collect();
    let wb = tower_weight_datum(n, &heavy, None)?;
    let fm = datum.full_marking();
    let mut blocks = Vec::new();
    for k in 0..=n - 3 {
        let matrix = pushforward_matrix(&fm, k, Component::All)?;
        let kernel = kernel_strata(n, &wb, k)?;
        let counterexample = kernel_invariance_check(&matrix, &kernel)?;
        let kernel_indices: BTreeSet<usize> = kernel
            .iter()
            .filter_map(|key| matrix.domain.index_of(key))
            .collect();
        let keep_indices: Vec<usize> = (0..matrix.domain.len())
            .filter(|i| !kernel_indices.contains(i))
            .collect();
        let quotient = matrix.matrix.submatrix(&keep_indices, &keep_indices);
        let quotient_keys: Vec<CanonicalKey> = keep_indices
            .iter()
            .map(|&i| matrix.domain.keys()[i].clone())
            .collect();
        let radius = spectral_radius(&matrix.matrix);
        let quotient_radius = spectral_radius(&quotient);
        blocks.push(StabilityBlock {
            k,
            kernel,
            matrix,
            counterexample,
            quotient_keys,
            quotient,
            radius,
            quotient_radius,
        });
    }
    Ok(StabilityReport {
        descent,
        ell,
        heavy,
        blocks,
        projective_note: None,
        notes,
    })
}
