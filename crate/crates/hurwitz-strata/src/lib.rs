//! Exact combinatorics of boundary strata on genus-zero moduli spaces.
//!
//! The crate models stable marked trees (dual graphs of genus-zero nodal
//! curves), weighted stabilization in the sense of Hassett, Hurwitz data and
//! their admissible-cover degenerations, and the pushforward matrices these
//! induce on strata-generated homology. All arithmetic is exact (`BigInt` /
//! `BigRational`); nothing is sampled or approximated unless an operation
//! says so in its name.
//!
//! Start with [`tree::MarkedTree`] and [`tree::enumerate_stable_trees`], then
//! see the `examples/` directory for one runnable walkthrough per capability.

pub mod covers;
pub mod homology;
pub mod hurwitz;
pub mod job;
pub mod linalg;
pub mod monodromy;
pub mod tree;
pub mod weights;

pub use covers::{
    check_instability_transfer, check_polynomial_components, degenerate_class,
    degeneration_census, enumerate_types_over, forgotten_class, infinity_vertices, validate_type,
    CombinatorialType, CoverError, DimensionReport, ForgottenClass, InfinityVertices, WeightedType,
};
pub use homology::{
    keel_divisor_relations, keel_relation, kernel_invariance_check, pushforward_matrix,
    stability_report, Anomaly, Component, HomologyError, InvarianceCounterexample, KeelRelations,
    PushforwardMatrix, StabilityBlock, StabilityReport, StrataBasis,
};
pub use hurwitz::{DescentError, DescentReport, FullyMarked, HurwitzDatum, HurwitzError};
pub use job::{run_job, JobError, JobSpec, RunOptions, RunOutcome, Verdict};
pub use linalg::{spectral_radius, Matrix, RadiusEstimate, RadiusMethod};
pub use monodromy::{
    braid_orbits, degree_pi_b, enumerate_tuples, local_cover_count, BraidOrbits, LabeledTuple,
    MonodromyError, Orbit, Perm,
};
pub use tree::{enumerate_stable_trees, CanonicalKey, End, Flag, MarkedTree, TreeError};
pub use weights::{
    compose_reductions, is_very_stable, kernel_strata, stabilize, tower_weight_datum,
    ReducedType, WeightDatum, WeightError,
};
