//! Combinatorial types of admissible covers: degenerations of a fully
//! marked cover over a boundary stratum of the target space.
//!
//! A type records a stable source tree on the marked points, a stable
//! target tree on the branch points, the vertex and edge maps between
//! them, local degrees, and edge ramifications. Types are enumerated
//! either directly from local cover data (`enumerate_types_over`) or by
//! degenerating a monodromy class toward the stratum
//! (`degenerate_class`); the two routes agree multiset-by-multiset, with
//! the class count of a type equal to its enumeration weight.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

use crate::hurwitz::FullyMarked;
use crate::monodromy::{cycle_index_map, local_cover_count, LabeledTuple, MonodromyError, Perm};
use crate::tree::{CanonicalKey, End, Flag, MarkedTree, TreeError};
use crate::weights::{is_very_stable, tower_weight_datum, WeightError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoverError {
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Weight(#[from] WeightError),
    #[error(transparent)]
    Monodromy(#[from] MonodromyError),
    #[error("tree has {found} legs but the datum needs {expected}")]
    LegCountMismatch { found: usize, expected: usize },
    #[error("field `{field}` has the wrong length for its tree")]
    ShapeMismatch { field: &'static str },
    #[error("source edge {edge} does not lie over its assigned target edge")]
    EdgeOverWrongEdge { edge: usize },
    #[error("point {point} does not lie over the vertex of its branch point")]
    LegOverWrongVertex { point: usize },
    #[error("source vertex {vertex} has degree zero")]
    DegreeZero { vertex: usize },
    #[error("degrees over target vertex {target_vertex} sum to {total}, expected {expected}")]
    UnbalancedDegree {
        target_vertex: usize,
        total: usize,
        expected: usize,
    },
    #[error("source edge {edge} has ramification zero")]
    RamificationZero { edge: usize },
    #[error(
        "vertex {vertex} pulls back target flag {flag} with total degree {total}, expected {expected}"
    )]
    FiberDegree {
        vertex: usize,
        flag: String,
        total: usize,
        expected: usize,
    },
    #[error("vertex {vertex} violates the local ramification count")]
    LocalRamification { vertex: usize },
    #[error("vertex {vertex} has no local cover realizing its profiles")]
    EmptyLocalCover { vertex: usize },
    #[error("the datum has no fully ramified branch point")]
    NoFullyRamifiedBranch,
    #[error("vertex {vertex} also lies over the infinity vertex")]
    ExtraVertexOverInfinity { vertex: usize },
    #[error("vertex {vertex} has {count} flags toward infinity, expected exactly one edge")]
    InfinityFlagCount { vertex: usize, count: usize },
    #[error(
        "the infinity edge at vertex {vertex} has ramification {ramification}, expected the full degree {degree}"
    )]
    InfinityEdgeNotFull {
        vertex: usize,
        ramification: usize,
        degree: usize,
    },
    #[error("the flag of vertex {vertex} toward infinity does not lead to the infinity vertex")]
    InfinityEdgeWrongWay { vertex: usize },
    #[error(
        "vertex {stray} maps into the infinity side of vertex {vertex} but lies outside its infinity component"
    )]
    ComponentEscapes { vertex: usize, stray: usize },
    #[error("the fully ramified branch point {branch} is not in the heavy set")]
    HeavyMissingInfinity { branch: usize },
    #[error("the {side} heavy set has {size} members, need at least 2")]
    HeavyTooSmall { side: &'static str, size: usize },
    #[error(
        "target vertex {target_vertex} is unstable but source vertex {source_vertex} above it is very stable"
    )]
    StabilityNotTransferred {
        target_vertex: usize,
        source_vertex: usize,
    },
    #[error("canonical ordering is ambiguous beyond the supported scale")]
    AmbiguousCanonicalForm,
}

/// One combinatorial type: a map of marked trees with local degrees and
/// edge ramifications. Vertex `v` of `sigma` lies over `f_verts[v]`, edge
/// `e` over `f_edges[e]` with ramification `rm_edges[e]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombinatorialType {
    pub sigma: MarkedTree,
    pub tau: MarkedTree,
    pub d_verts: Vec<usize>,
    pub f_verts: Vec<usize>,
    pub f_edges: Vec<usize>,
    pub rm_edges: Vec<usize>,
}

/// A type with its enumeration weight: the product of its local cover
/// counts and edge ramifications, which equals the number of monodromy
/// classes degenerating to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedType {
    pub ty: CombinatorialType,
    pub weight: u64,
}

/// Dimensions attached to a type: its source stratum, its target stratum,
/// and the dimension of the actual image locus inside the source stratum.
/// A source stratum can exceed the target dimension; this is reported, not
/// assumed away.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DimensionReport {
    pub source: usize,
    pub target: usize,
    pub image: usize,
}

/// The marked points at `v` lying over branch point `b`, in marking order.
fn points_over(ty: &CombinatorialType, fm: &FullyMarked, v: usize, b: usize) -> Vec<usize> {
    fm.datum
        .fiber(b)
        .into_iter()
        .filter(|&p| ty.sigma.leg_vertex(p) == v)
        .collect()
}

/// The source edges at `v` lying over target edge `te`.
fn edges_over_at(ty: &CombinatorialType, v: usize, te: usize) -> Vec<usize> {
    ty.sigma
        .edges()
        .iter()
        .enumerate()
        .filter(|&(e, &(a, b))| (a == v || b == v) && ty.f_edges[e] == te)
        .map(|(e, _)| e)
        .collect()
}

impl CombinatorialType {
    pub fn vertices_over(&self, w: usize) -> Vec<usize> {
        (0..self.sigma.vertex_count())
            .filter(|&v| self.f_verts[v] == w)
            .collect()
    }

    /// Ramification profile of `v` over one flag of its target vertex:
    /// point multiplicities over a leg, edge ramifications over an edge,
    /// both descending.
    pub fn local_profile(&self, fm: &FullyMarked, v: usize, flag: Flag) -> Vec<usize> {
        let mut parts: Vec<usize> = match flag {
            Flag::Leg(b) => points_over(self, fm, v, b)
                .into_iter()
                .map(|p| fm.datum.multiplicity(p))
                .collect(),
            Flag::Edge(te) => edges_over_at(self, v, te)
                .into_iter()
                .map(|e| self.rm_edges[e])
                .collect(),
        };
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts
    }

    /// All flag profiles of `v`, in the flag order of its target vertex.
    pub fn local_profiles(&self, fm: &FullyMarked, v: usize) -> Vec<(Flag, Vec<usize>)> {
        self.tau
            .flags(self.f_verts[v])
            .into_iter()
            .map(|flag| (flag, self.local_profile(fm, v, flag)))
            .collect()
    }

    /// Fully labeled local cover count of `v` over its target vertex.
    pub fn local_count(&self, fm: &FullyMarked, v: usize) -> u64 {
        let profiles: Vec<Vec<usize>> = self
            .local_profiles(fm, v)
            .into_iter()
            .map(|(_, p)| p)
            .collect();
        local_cover_count(self.d_verts[v], &profiles)
    }

    /// Product of all local cover counts and edge ramifications.
    pub fn weight(&self, fm: &FullyMarked) -> u64 {
        let mut w = 1u64;
        for v in 0..self.sigma.vertex_count() {
            w *= self.local_count(fm, v);
        }
        for &rm in &self.rm_edges {
            w *= rm as u64;
        }
        w
    }

    /// Source, target, and image dimensions with every leg kept.
    pub fn dimension_report(&self) -> Result<DimensionReport, CoverError> {
        let keep: BTreeSet<usize> = (0..self.sigma.leg_count()).collect();
        Ok(DimensionReport {
            source: self.sigma.stratum_dimension()?,
            target: self.tau.stratum_dimension()?,
            image: self.image_dimension(&keep)?,
        })
    }

    /// Dimension of the image of this type's locus after forgetting the
    /// legs outside `keep`. Per target vertex, the base directions that
    /// remain visible are capped both by the target vertex moduli and by
    /// the surviving moduli of the source vertices over it.
    pub fn image_dimension(&self, keep: &BTreeSet<usize>) -> Result<usize, CoverError> {
        let mut total = 0usize;
        for w in 0..self.tau.vertex_count() {
            let md_w = self.tau.moduli_dimension(w)?.max(0) as usize;
            let mut surviving = 0usize;
            for v in self.vertices_over(w) {
                let mut directions = BTreeSet::new();
                for &p in keep {
                    directions.insert(self.sigma.delta(v, End::Leg(p))?);
                }
                if directions.len() >= 3 {
                    surviving += directions.len() - 3;
                }
            }
            total += md_w.min(surviving);
        }
        Ok(total)
    }

    /// A vertex-numbering-independent fingerprint; equal forms mean equal
    /// types over identically numbered targets. Vertices carrying legs are
    /// pinned by them; legless vertices are ordered by iterated neighbor
    /// refinement, with residual ties broken by minimizing over their
    /// permutations.
    pub fn canonical_form(&self) -> Result<String, CoverError> {
        let n = self.sigma.vertex_count();
        let legs: Vec<Vec<usize>> = (0..n)
            .map(|v| {
                (0..self.sigma.leg_count())
                    .filter(|&p| self.sigma.leg_vertex(p) == v)
                    .collect()
            })
            .collect();
        let mut key: Vec<String> = (0..n)
            .map(|v| format!("{}|{:?}|{}", self.f_verts[v], legs[v], self.d_verts[v]))
            .collect();
        let mut distinct = 0usize;
        for _ in 0..=n {
            let ranks = string_ranks(&key);
            if ranks.len() == distinct {
                break;
            }
            distinct = ranks.len();
            key = (0..n)
                .map(|v| {
                    let mut nbrs: Vec<(usize, usize, usize)> = self
                        .sigma
                        .edges()
                        .iter()
                        .enumerate()
                        .filter(|&(_, &(a, b))| a == v || b == v)
                        .map(|(e, &(a, b))| {
                            let far = if a == v { b } else { a };
                            (self.rm_edges[e], self.f_edges[e], ranks[&key[far]])
                        })
                        .collect();
                    nbrs.sort_unstable();
                    format!("{}#{:?}", ranks[&key[v]], nbrs)
                })
                .collect();
        }
        let ranks = string_ranks(&key);
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 0..n {
            groups.entry(ranks[&key[v]]).or_default().push(v);
        }
        let group_lists: Vec<Vec<usize>> = groups.into_values().collect();
        let cost: u64 = group_lists
            .iter()
            .map(|g| (1..=g.len() as u64).product::<u64>())
            .product();
        if cost > 720 {
            return Err(CoverError::AmbiguousCanonicalForm);
        }
        let mut best: Option<String> = None;
        let mut order = Vec::with_capacity(n);
        minimize_over_group_orders(self, &legs, &group_lists, 0, &mut order, &mut best);
        Ok(best.expect("at least one vertex order"))
    }

    fn serialize_with(&self, legs: &[Vec<usize>], order: &[usize]) -> String {
        let mut pos = vec![0usize; order.len()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut s = String::new();
        for &v in order {
            s.push_str(&format!(
                "v{}:{}:{:?};",
                self.f_verts[v], self.d_verts[v], legs[v]
            ));
        }
        let mut es: Vec<(usize, usize, usize, usize)> = self
            .sigma
            .edges()
            .iter()
            .enumerate()
            .map(|(e, &(a, b))| {
                let (x, y) = (pos[a].min(pos[b]), pos[a].max(pos[b]));
                (x, y, self.rm_edges[e], self.f_edges[e])
            })
            .collect();
        es.sort_unstable();
        s.push_str(&format!("{:?}", es));
        s
    }
}

fn string_ranks(keys: &[String]) -> BTreeMap<&String, usize> {
    let sorted: BTreeSet<&String> = keys.iter().collect();
    sorted.into_iter().enumerate().map(|(i, k)| (k, i)).collect()
}

fn minimize_over_group_orders(
    ty: &CombinatorialType,
    legs: &[Vec<usize>],
    groups: &[Vec<usize>],
    i: usize,
    order: &mut Vec<usize>,
    best: &mut Option<String>,
) {
    if i == groups.len() {
        let s = ty.serialize_with(legs, order);
        if best.as_ref().map_or(true, |b| s < *b) {
            *best = Some(s);
        }
        return;
    }
    for perm in permutations(&groups[i]) {
        let len = order.len();
        order.extend(perm);
        minimize_over_group_orders(ty, legs, groups, i + 1, order, best);
        order.truncate(len);
    }
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let first = rest.remove(i);
        for mut tail in permutations(&rest) {
            let mut v = vec![first];
            v.append(&mut tail);
            out.push(v);
        }
    }
    out
}

/// Checks every structural invariant of a type against its datum:
/// adjacency and leg compatibility, degree balance, fiber profile degrees
/// over every target flag, the local ramification count, and
/// realizability of every local cover.
pub fn validate_type(ty: &CombinatorialType, fm: &FullyMarked) -> Result<(), CoverError> {
    let datum = &fm.datum;
    let s = &ty.sigma;
    let t = &ty.tau;
    if t.leg_count() != datum.branch_count() {
        return Err(CoverError::LegCountMismatch {
            found: t.leg_count(),
            expected: datum.branch_count(),
        });
    }
    if s.leg_count() != datum.point_count() {
        return Err(CoverError::LegCountMismatch {
            found: s.leg_count(),
            expected: datum.point_count(),
        });
    }
    for (len, field) in [
        (ty.f_verts.len() == s.vertex_count(), "f_verts"),
        (ty.d_verts.len() == s.vertex_count(), "d_verts"),
        (ty.f_edges.len() == s.edge_count(), "f_edges"),
        (ty.rm_edges.len() == s.edge_count(), "rm_edges"),
        (
            ty.f_verts.iter().all(|&w| w < t.vertex_count()),
            "f_verts range",
        ),
        (
            ty.f_edges.iter().all(|&e| e < t.edge_count()),
            "f_edges range",
        ),
    ] {
        if !len {
            return Err(CoverError::ShapeMismatch { field });
        }
    }
    t.stratum_dimension()?;
    for (v, &d) in ty.d_verts.iter().enumerate() {
        if d == 0 {
            return Err(CoverError::DegreeZero { vertex: v });
        }
    }
    for w in 0..t.vertex_count() {
        let total: usize = ty.vertices_over(w).iter().map(|&v| ty.d_verts[v]).sum();
        if total != datum.degree() {
            return Err(CoverError::UnbalancedDegree {
                target_vertex: w,
                total,
                expected: datum.degree(),
            });
        }
    }
    for (e, &(a, b)) in s.edges().iter().enumerate() {
        if ty.rm_edges[e] == 0 {
            return Err(CoverError::RamificationZero { edge: e });
        }
        let te = ty.f_edges[e];
        let (ta, tb) = t.edges()[te];
        let image = (
            ty.f_verts[a].min(ty.f_verts[b]),
            ty.f_verts[a].max(ty.f_verts[b]),
        );
        if image != (ta.min(tb), ta.max(tb)) {
            return Err(CoverError::EdgeOverWrongEdge { edge: e });
        }
    }
    for p in 0..s.leg_count() {
        if ty.f_verts[s.leg_vertex(p)] != t.leg_vertex(datum.target(p)) {
            return Err(CoverError::LegOverWrongVertex { point: p });
        }
    }
    for v in 0..s.vertex_count() {
        let profiles = ty.local_profiles(fm, v);
        let mut defect = 0i64;
        for (flag, parts) in &profiles {
            let total: usize = parts.iter().sum();
            if total != ty.d_verts[v] {
                return Err(CoverError::FiberDegree {
                    vertex: v,
                    flag: format!("{:?}", flag),
                    total,
                    expected: ty.d_verts[v],
                });
            }
            defect += ty.d_verts[v] as i64 - parts.len() as i64;
        }
        if defect != 2 * ty.d_verts[v] as i64 - 2 {
            return Err(CoverError::LocalRamification { vertex: v });
        }
        if ty.local_count(fm, v) == 0 {
            return Err(CoverError::EmptyLocalCover { vertex: v });
        }
    }
    Ok(())
}

/// One candidate source vertex over a target vertex during enumeration.
#[derive(Clone, Debug)]
struct LocalVertex {
    points: Vec<usize>,
    edge_parts: BTreeMap<usize, Vec<usize>>,
    degree: usize,
    count: u64,
}

#[derive(Clone, Debug)]
struct BareBlock {
    points: Vec<usize>,
    degree: usize,
}

fn set_partitions(items: &[usize]) -> Vec<Vec<Vec<usize>>> {
    fn rec(
        items: &[usize],
        i: usize,
        used: usize,
        assign: &mut Vec<usize>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if i == items.len() {
            let mut blocks = vec![Vec::new(); used];
            for (j, &a) in assign.iter().enumerate() {
                blocks[a].push(items[j]);
            }
            out.push(blocks);
            return;
        }
        for b in 0..=used {
            assign[i] = b;
            rec(items, i + 1, used.max(b + 1), assign, out);
        }
    }
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    rec(items, 0, 0, &mut vec![0; items.len()], &mut out);
    out
}

fn assign_fiber(
    fm: &FullyMarked,
    fiber: &[usize],
    i: usize,
    caps: &mut Vec<usize>,
    cur: &mut Vec<BareBlock>,
    out: &mut Vec<Vec<BareBlock>>,
) {
    if i == fiber.len() {
        if caps.iter().all(|&c| c == 0) {
            out.push(cur.clone());
        }
        return;
    }
    let p = fiber[i];
    let rm = fm.datum.multiplicity(p);
    for j in 0..cur.len() {
        if caps[j] >= rm {
            caps[j] -= rm;
            cur[j].points.push(p);
            assign_fiber(fm, fiber, i + 1, caps, cur, out);
            cur[j].points.pop();
            caps[j] += rm;
        }
    }
}

type CountCache = BTreeMap<(usize, Vec<Vec<usize>>), u64>;

fn cached_count(cache: &mut CountCache, degree: usize, profiles: &[Vec<usize>]) -> u64 {
    let mut key = profiles.to_vec();
    key.sort_unstable();
    *cache
        .entry((degree, key))
        .or_insert_with(|| local_cover_count(degree, profiles))
}

/// Dresses a bare block with ramification partitions over each incident
/// target edge, keeping only choices with the right ramification count
/// and a realizable local cover.
fn dress_block(
    fm: &FullyMarked,
    block: &BareBlock,
    legs_w: &[usize],
    tedges_w: &[usize],
    cache: &mut CountCache,
) -> Vec<LocalVertex> {
    let mut leg_profiles: Vec<Vec<usize>> = Vec::new();
    let mut leg_defect = 0i64;
    for &b in legs_w {
        let mut parts: Vec<usize> = block
            .points
            .iter()
            .filter(|&&p| fm.datum.target(p) == b)
            .map(|&p| fm.datum.multiplicity(p))
            .collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        leg_defect += block.degree as i64 - parts.len() as i64;
        leg_profiles.push(parts);
    }
    let menus: Vec<Vec<Vec<usize>>> = tedges_w
        .iter()
        .map(|_| crate::hurwitz::partitions(block.degree))
        .collect();
    let mut out = Vec::new();
    let mut choice: Vec<usize> = vec![0; tedges_w.len()];
    loop {
        let parts: Vec<&Vec<usize>> = choice
            .iter()
            .enumerate()
            .map(|(i, &c)| &menus[i][c])
            .collect();
        let defect: i64 = leg_defect
            + parts
                .iter()
                .map(|p| block.degree as i64 - p.len() as i64)
                .sum::<i64>();
        if defect == 2 * block.degree as i64 - 2 {
            let mut profiles = leg_profiles.clone();
            profiles.extend(parts.iter().map(|p| (*p).clone()));
            let count = cached_count(cache, block.degree, &profiles);
            if count > 0 {
                let mut points = block.points.clone();
                points.sort_unstable();
                out.push(LocalVertex {
                    points,
                    edge_parts: tedges_w
                        .iter()
                        .zip(&parts)
                        .map(|(&te, p)| (te, (*p).clone()))
                        .collect(),
                    degree: block.degree,
                    count,
                });
            }
        }
        if !advance_mixed_radix(&mut choice, &menus) {
            break;
        }
    }
    out
}

fn advance_mixed_radix<T>(choice: &mut [usize], menus: &[Vec<T>]) -> bool {
    for i in 0..choice.len() {
        choice[i] += 1;
        if choice[i] < menus[i].len() {
            return true;
        }
        choice[i] = 0;
    }
    false
}

/// All local configurations over target vertex `w`: partitions of its leg
/// fibers into source vertices, dressed with edge ramifications.
fn vertex_configs(
    tau: &MarkedTree,
    fm: &FullyMarked,
    w: usize,
    cache: &mut CountCache,
) -> Vec<Vec<LocalVertex>> {
    let legs_w: Vec<usize> = (0..tau.leg_count())
        .filter(|&b| tau.leg_vertex(b) == w)
        .collect();
    let tedges_w: Vec<usize> = tau
        .edges()
        .iter()
        .enumerate()
        .filter(|&(_, &(a, b))| a == w || b == w)
        .map(|(e, _)| e)
        .collect();
    let d = fm.datum.degree();
    let mut bare: Vec<Vec<BareBlock>> = Vec::new();
    if let Some(&b0) = legs_w.first() {
        let fiber0 = fm.datum.fiber(b0);
        for blocks in set_partitions(&fiber0) {
            let seed: Vec<BareBlock> = blocks
                .into_iter()
                .map(|points| {
                    let degree = points.iter().map(|&p| fm.datum.multiplicity(p)).sum();
                    BareBlock { points, degree }
                })
                .collect();
            let mut states = vec![seed];
            for &b in &legs_w[1..] {
                let fiber = fm.datum.fiber(b);
                let mut next = Vec::new();
                for state in &states {
                    let mut caps: Vec<usize> = state.iter().map(|bl| bl.degree).collect();
                    let mut cur = state.clone();
                    assign_fiber(fm, &fiber, 0, &mut caps, &mut cur, &mut next);
                }
                states = next;
            }
            bare.extend(states);
        }
    } else {
        for degs in crate::hurwitz::partitions(d) {
            bare.push(
                degs.into_iter()
                    .map(|degree| BareBlock {
                        points: Vec::new(),
                        degree,
                    })
                    .collect(),
            );
        }
    }
    let mut out = Vec::new();
    for blocks in bare {
        let menus: Vec<Vec<LocalVertex>> = blocks
            .iter()
            .map(|bl| dress_block(fm, bl, &legs_w, &tedges_w, cache))
            .collect();
        if menus.iter().any(|m| m.is_empty()) {
            continue;
        }
        let mut choice = vec![0usize; menus.len()];
        loop {
            out.push(
                choice
                    .iter()
                    .enumerate()
                    .map(|(i, &c)| menus[i][c].clone())
                    .collect(),
            );
            if !advance_mixed_radix(&mut choice, &menus) {
                break;
            }
        }
    }
    out
}

/// All bijections between the two sides of one target edge that preserve
/// ramification, as lists of `(source vertex, source vertex, rm)`.
fn edge_matchings(
    side_a: &[(usize, usize)],
    side_b: &[(usize, usize)],
) -> Vec<Vec<(usize, usize, usize)>> {
    let mut by_value: BTreeMap<usize, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
    for &(v, rm) in side_a {
        by_value.entry(rm).or_default().0.push(v);
    }
    for &(v, rm) in side_b {
        by_value.entry(rm).or_default().1.push(v);
    }
    let mut menus: Vec<(usize, Vec<usize>, Vec<Vec<usize>>)> = Vec::new();
    for (rm, (a, b)) in by_value {
        if a.len() != b.len() {
            return Vec::new();
        }
        menus.push((rm, a.clone(), permutations(&b)));
    }
    let mut out = vec![Vec::new()];
    for (rm, a, perms) in menus {
        let mut next = Vec::new();
        for partial in &out {
            for perm in &perms {
                let mut extended = partial.clone();
                for (&va, &vb) in a.iter().zip(perm) {
                    extended.push((va, vb, rm));
                }
                next.push(extended);
            }
        }
        out = next;
    }
    out
}

/// Every combinatorial type over the stable target tree `tau`, each with
/// its weight, in a deterministic order. Local configurations are built
/// per target vertex from the leg fibers and glued along target edges by
/// ramification-preserving matchings; disconnected or cyclic gluings are
/// discarded and isomorphic results deduplicated.
pub fn enumerate_types_over(
    tau: &MarkedTree,
    fm: &FullyMarked,
) -> Result<Vec<WeightedType>, CoverError> {
    let datum = &fm.datum;
    if tau.leg_count() != datum.branch_count() {
        return Err(CoverError::LegCountMismatch {
            found: tau.leg_count(),
            expected: datum.branch_count(),
        });
    }
    tau.stratum_dimension()?;
    let mut cache = CountCache::new();
    let mut per_vertex: Vec<Vec<Vec<LocalVertex>>> = Vec::new();
    for w in 0..tau.vertex_count() {
        let configs = vertex_configs(tau, fm, w, &mut cache);
        if configs.is_empty() {
            return Ok(Vec::new());
        }
        per_vertex.push(configs);
    }
    let mut out: Vec<WeightedType> = Vec::new();
    let mut seen: BTreeSet<String> = BTreeSet::new();
    let mut choice = vec![0usize; per_vertex.len()];
    loop {
        let chosen: Vec<&Vec<LocalVertex>> = choice
            .iter()
            .enumerate()
            .map(|(w, &c)| &per_vertex[w][c])
            .collect();
        glue_configs(tau, fm, &chosen, &mut seen, &mut out)?;
        if !advance_mixed_radix(&mut choice, &per_vertex) {
            break;
        }
    }
    Ok(out)
}

fn glue_configs(
    tau: &MarkedTree,
    fm: &FullyMarked,
    chosen: &[&Vec<LocalVertex>],
    seen: &mut BTreeSet<String>,
    out: &mut Vec<WeightedType>,
) -> Result<(), CoverError> {
    let mut offset = vec![0usize; chosen.len()];
    let mut total = 0usize;
    for (w, config) in chosen.iter().enumerate() {
        offset[w] = total;
        total += config.len();
    }
    let mut edge_menus: Vec<Vec<Vec<(usize, usize, usize)>>> = Vec::new();
    for (te, &(wa, wb)) in tau.edges().iter().enumerate() {
        let side = |w: usize| -> Vec<(usize, usize)> {
            let mut side = Vec::new();
            for (li, lv) in chosen[w].iter().enumerate() {
                for &rm in &lv.edge_parts[&te] {
                    side.push((offset[w] + li, rm));
                }
            }
            side
        };
        let matchings = edge_matchings(&side(wa), &side(wb));
        if matchings.is_empty() {
            return Ok(());
        }
        edge_menus.push(matchings);
    }
    let mut leg_at = vec![usize::MAX; fm.datum.point_count()];
    for (w, config) in chosen.iter().enumerate() {
        for (li, lv) in config.iter().enumerate() {
            for &p in &lv.points {
                leg_at[p] = offset[w] + li;
            }
        }
    }
    debug_assert!(leg_at.iter().all(|&v| v != usize::MAX));
    let mut base_weight = 1u64;
    for config in chosen {
        for lv in config.iter() {
            base_weight *= lv.count;
        }
    }
    let d_verts: Vec<usize> = chosen
        .iter()
        .flat_map(|config| config.iter().map(|lv| lv.degree))
        .collect();
    let f_verts: Vec<usize> = chosen
        .iter()
        .enumerate()
        .flat_map(|(w, config)| config.iter().map(move |_| w))
        .collect();
    let mut choice = vec![0usize; edge_menus.len()];
    loop {
        let mut edges = Vec::new();
        let mut f_edges = Vec::new();
        let mut rm_edges = Vec::new();
        let mut rm_product = 1u64;
        for (te, &c) in choice.iter().enumerate() {
            for &(va, vb, rm) in &edge_menus[te][c] {
                edges.push((va, vb));
                f_edges.push(te);
                rm_edges.push(rm);
                rm_product *= rm as u64;
            }
        }
        if let Ok(sigma) = MarkedTree::build(total, &edges, &leg_at) {
            let ty = CombinatorialType {
                sigma,
                tau: tau.clone(),
                d_verts: d_verts.clone(),
                f_verts: f_verts.clone(),
                f_edges,
                rm_edges,
            };
            let form = ty.canonical_form()?;
            if seen.insert(form) {
                let weight = base_weight * rm_product;
                out.push(WeightedType { ty, weight });
            }
        }
        if edge_menus.is_empty() || !advance_mixed_radix(&mut choice, &edge_menus) {
            break;
        }
    }
    Ok(())
}

/// The distinguished points of a static-polynomial type: the fully
/// ramified marked point, the unique source vertex carrying it, and the
/// target vertex of its branch point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InfinityVertices {
    pub a_inf: usize,
    pub v_inf: usize,
    pub w_inf: usize,
}

/// Locates the infinity data of a type, requiring a fully ramified branch
/// point and a single source vertex over its target vertex.
pub fn infinity_vertices(
    ty: &CombinatorialType,
    fm: &FullyMarked,
) -> Result<InfinityVertices, CoverError> {
    let datum = &fm.datum;
    let b_inf = datum
        .fully_ramified_target()
        .ok_or(CoverError::NoFullyRamifiedBranch)?;
    let w_inf = ty.tau.leg_vertex(b_inf);
    let fiber = datum.fiber(b_inf);
    debug_assert_eq!(fiber.len(), 1);
    let a_inf = fiber[0];
    let v_inf = ty.sigma.leg_vertex(a_inf);
    for v in ty.vertices_over(w_inf) {
        if v != v_inf {
            return Err(CoverError::ExtraVertexOverInfinity { vertex: v });
        }
    }
    Ok(InfinityVertices {
        a_inf,
        v_inf,
        w_inf,
    })
}

/// Checks, for every source vertex away from infinity, that exactly one
/// of its flags points toward the fully ramified point, that it is an
/// edge of full local degree leading toward the infinity vertex, and that
/// everything mapping into the infinity side of the target lies in the
/// component across that edge.
pub fn check_polynomial_components(
    ty: &CombinatorialType,
    fm: &FullyMarked,
) -> Result<(), CoverError> {
    let inf = infinity_vertices(ty, fm)?;
    for v in 0..ty.sigma.vertex_count() {
        if v == inf.v_inf {
            continue;
        }
        let w = ty.f_verts[v];
        let theta0 = ty.tau.delta(w, End::Vertex(inf.w_inf))?;
        let te = match theta0 {
            Flag::Edge(te) => te,
            Flag::Leg(_) => unreachable!("a vertex target is reached through edges"),
        };
        let over = edges_over_at(ty, v, te);
        if over.len() != 1 {
            return Err(CoverError::InfinityFlagCount {
                vertex: v,
                count: over.len(),
            });
        }
        let e = over[0];
        if ty.rm_edges[e] != ty.d_verts[v] {
            return Err(CoverError::InfinityEdgeNotFull {
                vertex: v,
                ramification: ty.rm_edges[e],
                degree: ty.d_verts[v],
            });
        }
        if ty.sigma.delta(v, End::Leg(inf.a_inf))? != Flag::Edge(e) {
            return Err(CoverError::InfinityEdgeWrongWay { vertex: v });
        }
        for u in 0..ty.sigma.vertex_count() {
            let separated_from_inf =
                ty.sigma
                    .edge_connects(e, End::Vertex(u), End::Vertex(inf.v_inf))?;
            let maps_into_inf_side =
                !ty.tau
                    .edge_connects(te, End::Vertex(ty.f_verts[u]), End::Vertex(inf.w_inf))?;
            if separated_from_inf && maps_into_inf_side {
                return Err(CoverError::ComponentEscapes { vertex: v, stray: u });
            }
        }
    }
    Ok(())
}

/// Checks that target-side instability transfers to the source: under the
/// tower weights determined by `heavy_b` on the branch points and its
/// original-point preimage on the marked points, every source vertex over
/// a non-very-stable target vertex must itself fail very stability.
pub fn check_instability_transfer(
    ty: &CombinatorialType,
    fm: &FullyMarked,
    heavy_b: &BTreeSet<usize>,
) -> Result<(), CoverError> {
    let datum = &fm.datum;
    let b_inf = datum
        .fully_ramified_target()
        .ok_or(CoverError::NoFullyRamifiedBranch)?;
    if !heavy_b.contains(&b_inf) {
        return Err(CoverError::HeavyMissingInfinity { branch: b_inf });
    }
    if heavy_b.len() < 2 {
        return Err(CoverError::HeavyTooSmall {
            side: "target",
            size: heavy_b.len(),
        });
    }
    let heavy_a: BTreeSet<usize> = (0..fm.original_count)
        .filter(|&p| heavy_b.contains(&datum.target(p)))
        .collect();
    if heavy_a.len() < 2 {
        return Err(CoverError::HeavyTooSmall {
            side: "source",
            size: heavy_a.len(),
        });
    }
    let wb = tower_weight_datum(datum.branch_count(), heavy_b, None)?;
    let wa = tower_weight_datum(datum.point_count(), &heavy_a, None)?;
    for w in 0..ty.tau.vertex_count() {
        if is_very_stable(&ty.tau, &wb, w)? {
            continue;
        }
        for v in ty.vertices_over(w) {
            if is_very_stable(&ty.sigma, &wa, v)? {
                return Err(CoverError::StabilityNotTransferred {
                    target_vertex: w,
                    source_vertex: v,
                });
            }
        }
    }
    Ok(())
}

/// The class of a type's source stratum after forgetting the legs outside
/// `keep`: the canonical key and dimension of the stabilized tree, plus
/// the dimension of the actual image locus inside it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForgottenClass {
    pub key: CanonicalKey,
    pub dimension: usize,
    pub image_dimension: usize,
}

pub fn forgotten_class(
    ty: &CombinatorialType,
    keep: &BTreeSet<usize>,
) -> Result<ForgottenClass, CoverError> {
    let reduced = ty.sigma.forget_legs(keep)?;
    Ok(ForgottenClass {
        key: reduced.canonical_key(),
        dimension: reduced.stratum_dimension()?,
        image_dimension: ty.image_dimension(keep)?,
    })
}

/// A slot in the degeneration word: the target vertex it currently hangs
/// from, its permutation, and either a branch labeling or the registry
/// tags of the source edges its cycles created.
#[derive(Clone, Debug)]
struct DegSlot {
    target: usize,
    perm: Perm,
    payload: Payload,
}

#[derive(Clone, Debug)]
enum Payload {
    Branch { branch: usize, labels: Vec<usize> },
    Node { tags: Vec<usize> },
}

#[derive(Clone, Debug)]
struct EdgeReg {
    tau_edge: usize,
    rm: usize,
    outer: usize,
    inner: Option<usize>,
}

fn deg_twist(slots: &mut [DegSlot], k: usize) {
    let a = slots[k].clone();
    let b = slots[k + 1].clone();
    let conj = b.perm.conjugate_by(&a.perm);
    let map = cycle_index_map(&b.perm, &conj, &a.perm);
    let payload = match b.payload {
        Payload::Branch { branch, labels } => Payload::Branch {
            branch,
            labels: labels.iter().map(|&c| map[c]).collect(),
        },
        Payload::Node { tags } => {
            let mut moved = vec![usize::MAX; tags.len()];
            for (ci, &tag) in tags.iter().enumerate() {
                moved[map[ci]] = tag;
            }
            Payload::Node { tags: moved }
        }
    };
    slots[k] = DegSlot {
        target: b.target,
        perm: conj,
        payload,
    };
    slots[k + 1] = a;
}

fn peel(
    slots: &mut Vec<DegSlot>,
    w: usize,
    out_edge: Option<(usize, usize)>,
    fm: &FullyMarked,
    verts: &mut Vec<(usize, usize)>,
    leg_at: &mut [usize],
    registry: &mut Vec<EdgeReg>,
) {
    let mut t = 0usize;
    loop {
        let next = (t..slots.len()).find(|&i| slots[i].target == w);
        match next {
            None => break,
            Some(i) => {
                for k in (t..i).rev() {
                    deg_twist(slots, k);
                }
                t += 1;
            }
        }
    }
    let block: Vec<DegSlot> = slots.drain(0..t).collect();
    let d = fm.datum.degree();
    let mut orbit_of = vec![usize::MAX; d];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for s in 0..d {
        if orbit_of[s] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        orbit_of[s] = id;
        let mut members = vec![s];
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for slot in &block {
                let y = slot.perm.apply(x);
                if orbit_of[y] == usize::MAX {
                    orbit_of[y] = id;
                    members.push(y);
                    queue.push_back(y);
                }
            }
        }
        members.sort_unstable();
        orbits.push(members);
    }
    let base = verts.len();
    for orbit in &orbits {
        verts.push((w, orbit.len()));
    }
    for slot in &block {
        let cycles = slot.perm.cycles();
        match &slot.payload {
            Payload::Branch { branch, labels } => {
                for (i, &p) in fm.datum.fiber(*branch).iter().enumerate() {
                    let sheet = cycles[labels[i]][0];
                    leg_at[p] = base + orbit_of[sheet];
                }
            }
            Payload::Node { tags } => {
                for (ci, &tag) in tags.iter().enumerate() {
                    let sheet = cycles[ci][0];
                    registry[tag].inner = Some(base + orbit_of[sheet]);
                }
            }
        }
    }
    if let Some((te, neighbor)) = out_edge {
        let mut h = Perm::identity(d);
        for slot in &block {
            h = h.compose(&slot.perm);
        }
        let mut tags = Vec::new();
        for cycle in h.cycles() {
            let tag = registry.len();
            registry.push(EdgeReg {
                tau_edge: te,
                rm: cycle.len(),
                outer: base + orbit_of[cycle[0]],
                inner: None,
            });
            tags.push(tag);
        }
        slots.insert(
            0,
            DegSlot {
                target: neighbor,
                perm: h,
                payload: Payload::Node { tags },
            },
        );
    } else {
        debug_assert!(slots.is_empty());
    }
}

/// Degenerates one monodromy class over the stable target tree `tau` by
/// peeling leaf vertices: the slots of a leaf are braided together in
/// order, their subgroup orbits become the source vertices over it, and
/// the block is replaced by a single node slot carrying its product.
pub fn degenerate_class(
    lt: &LabeledTuple,
    tau: &MarkedTree,
    fm: &FullyMarked,
) -> Result<CombinatorialType, CoverError> {
    let datum = &fm.datum;
    if tau.leg_count() != datum.branch_count() {
        return Err(CoverError::LegCountMismatch {
            found: tau.leg_count(),
            expected: datum.branch_count(),
        });
    }
    tau.stratum_dimension()?;
    if lt.perms.len() != datum.branch_count() || lt.labels.len() != datum.branch_count() {
        return Err(CoverError::ShapeMismatch { field: "class" });
    }
    let mut slots: Vec<DegSlot> = (0..datum.branch_count())
        .map(|b| DegSlot {
            target: tau.leg_vertex(b),
            perm: lt.perms[b].clone(),
            payload: Payload::Branch {
                branch: b,
                labels: lt.labels[b].clone(),
            },
        })
        .collect();
    let mut remaining: BTreeSet<usize> = (0..tau.vertex_count()).collect();
    let mut verts: Vec<(usize, usize)> = Vec::new();
    let mut leg_at = vec![usize::MAX; datum.point_count()];
    let mut registry: Vec<EdgeReg> = Vec::new();
    while remaining.len() > 1 {
        let mut leaf = None;
        for &cand in &remaining {
            let incident: Vec<(usize, usize)> = tau
                .edges()
                .iter()
                .enumerate()
                .filter_map(|(e, &(a, b))| {
                    if a == cand && remaining.contains(&b) {
                        Some((e, b))
                    } else if b == cand && remaining.contains(&a) {
                        Some((e, a))
                    } else {
                        None
                    }
                })
                .collect();
            if incident.len() == 1 {
                leaf = Some((cand, incident[0].0, incident[0].1));
                break;
            }
        }
        let (w, te, neighbor) = leaf.expect("a tree with two or more vertices has a leaf");
        peel(
            &mut slots,
            w,
            Some((te, neighbor)),
            fm,
            &mut verts,
            &mut leg_at,
            &mut registry,
        );
        remaining.remove(&w);
    }
    let last = *remaining.iter().next().expect("one vertex remains");
    peel(&mut slots, last, None, fm, &mut verts, &mut leg_at, &mut registry);
    let edges: Vec<(usize, usize)> = registry
        .iter()
        .map(|r| (r.outer, r.inner.expect("both endpoints resolved")))
        .collect();
    let sigma = MarkedTree::build(verts.len(), &edges, &leg_at)?;
    Ok(CombinatorialType {
        sigma,
        tau: tau.clone(),
        d_verts: verts.iter().map(|&(_, deg)| deg).collect(),
        f_verts: verts.iter().map(|&(wv, _)| wv).collect(),
        f_edges: registry.iter().map(|r| r.tau_edge).collect(),
        rm_edges: registry.iter().map(|r| r.rm).collect(),
    })
}

/// Degenerates every class over `tau` and groups the results by type,
/// returning each type with the sorted indices of the classes landing on
/// it. The count for each type equals its enumeration weight.
pub fn degeneration_census(
    classes: &[LabeledTuple],
    tau: &MarkedTree,
    fm: &FullyMarked,
) -> Result<Vec<(CombinatorialType, Vec<usize>)>, CoverError> {
    let mut by_form: BTreeMap<String, (CombinatorialType, Vec<usize>)> = BTreeMap::new();
    for (i, class) in classes.iter().enumerate() {
        let ty = degenerate_class(class, tau, fm)?;
        let form = ty.canonical_form()?;
        by_form
            .entry(form)
            .or_insert_with(|| (ty, Vec::new()))
            .1
            .push(i);
    }
    Ok(by_form.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hurwitz::{
        cubic_portrait, eleven_point_datum, quadratic_portrait, HurwitzDatum,
    };
    use crate::monodromy::{classes, degree_pi_b};
    use crate::tree::enumerate_stable_trees;

    fn four_branch_quadratic() -> FullyMarked {
        HurwitzDatum::new(
            2,
            &[
                ("x", "b1", 2),
                ("y", "b2", 2),
                ("s", "b3", 1),
                ("t", "b3", 1),
                ("u", "b4", 1),
                ("v", "b4", 1),
            ],
            &[
                ("b1", &[2]),
                ("b2", &[2]),
                ("b3", &[1, 1]),
                ("b4", &[1, 1]),
            ],
        )
        .unwrap()
        .full_marking()
    }

    fn divisor_tree(n: usize, split: &[usize]) -> MarkedTree {
        CanonicalKey::new(n, BTreeSet::from([split.to_vec()])).to_tree()
    }

    #[test]
    fn separated_critical_pair_gives_one_double_type() {
        let fm = four_branch_quadratic();
        let tau = divisor_tree(4, &[1, 3]);
        let types = enumerate_types_over(&tau, &fm).unwrap();
        assert_eq!(types.len(), 1);
        let wt = &types[0];
        assert_eq!(wt.weight, 2);
        assert_eq!(wt.ty.sigma.vertex_count(), 2);
        assert_eq!(wt.ty.rm_edges, vec![2]);
        validate_type(&wt.ty, &fm).unwrap();
        let report = wt.ty.dimension_report().unwrap();
        assert_eq!(
            report,
            DimensionReport {
                source: 2,
                target: 0,
                image: 0
            }
        );
    }

    #[test]
    fn adjacent_critical_pair_gives_two_simple_types() {
        let fm = four_branch_quadratic();
        let tau = divisor_tree(4, &[2, 3]);
        let types = enumerate_types_over(&tau, &fm).unwrap();
        assert_eq!(types.len(), 2);
        for wt in &types {
            assert_eq!(wt.weight, 1);
            assert_eq!(wt.ty.sigma.vertex_count(), 3);
            assert_eq!(wt.ty.rm_edges, vec![1, 1]);
            validate_type(&wt.ty, &fm).unwrap();
        }
    }

    #[test]
    fn flatness_over_every_stratum_of_the_four_branch_datum() {
        let fm = four_branch_quadratic();
        let degree = degree_pi_b(&fm, None).unwrap();
        assert_eq!(degree, 2);
        for key in enumerate_stable_trees(4, None).unwrap() {
            let tau = key.to_tree();
            let total: u64 = enumerate_types_over(&tau, &fm)
                .unwrap()
                .iter()
                .map(|wt| wt.weight)
                .sum();
            assert_eq!(total, degree);
        }
    }

    #[test]
    fn degree_zero_datum_has_no_admissible_types() {
        // Two double transpositions multiply into the Klein four-group,
        // which contains no 3-cycle, so this datum has no covers at all;
        // flatness then demands no admissible types over any stratum.
        let fm = HurwitzDatum::new(
            4,
            &[
                ("x1", "b1", 2),
                ("x2", "b1", 2),
                ("y1", "b2", 2),
                ("y2", "b2", 2),
                ("z3", "b3", 3),
                ("z1", "b3", 1),
                ("w1", "b4", 1),
                ("w2", "b4", 1),
                ("w3", "b4", 1),
                ("w4", "b4", 1),
            ],
            &[
                ("b1", &[2, 2]),
                ("b2", &[2, 2]),
                ("b3", &[3, 1]),
                ("b4", &[1, 1, 1, 1]),
            ],
        )
        .unwrap()
        .full_marking();
        assert_eq!(degree_pi_b(&fm, None).unwrap(), 0);
        for key in enumerate_stable_trees(4, None).unwrap() {
            let types = enumerate_types_over(&key.to_tree(), &fm).unwrap();
            assert!(types.is_empty());
        }
    }

    #[test]
    fn quadratic_portrait_types_freeze_the_pushforward_inputs() {
        let fm = quadratic_portrait().full_marking();
        let originals: BTreeSet<usize> = (0..fm.original_count).collect();

        let tau = divisor_tree(4, &[1, 2]);
        let types = enumerate_types_over(&tau, &fm).unwrap();
        assert_eq!(types.len(), 2);
        let mut keys = Vec::new();
        for wt in &types {
            assert_eq!(wt.weight, 1);
            validate_type(&wt.ty, &fm).unwrap();
            let fc = forgotten_class(&wt.ty, &originals).unwrap();
            assert_eq!(fc.dimension, 0);
            assert_eq!(fc.image_dimension, 0);
            keys.push(fc.key);
        }
        keys.sort();
        assert_eq!(
            keys,
            vec![
                CanonicalKey::new(4, BTreeSet::from([vec![1, 2]])),
                CanonicalKey::new(4, BTreeSet::from([vec![2, 3]])),
            ]
        );

        let tau = divisor_tree(4, &[1, 3]);
        let types = enumerate_types_over(&tau, &fm).unwrap();
        assert_eq!(types.len(), 1);
        assert_eq!(types[0].weight, 2);
        let fc = forgotten_class(&types[0].ty, &originals).unwrap();
        assert_eq!(fc.key, CanonicalKey::new(4, BTreeSet::from([vec![1, 3]])));
        assert_eq!(fc.dimension, 0);
        assert_eq!(fc.image_dimension, 0);

        let tau = divisor_tree(4, &[2, 3]);
        let types = enumerate_types_over(&tau, &fm).unwrap();
        assert_eq!(types.len(), 1);
        assert_eq!(types[0].weight, 2);
        let fc = forgotten_class(&types[0].ty, &originals).unwrap();
        assert_eq!(fc.key, CanonicalKey::new(4, BTreeSet::new()));
        assert_eq!(fc.dimension, 1);
        assert_eq!(fc.image_dimension, 0);
    }

    #[test]
    fn cubic_portrait_kernel_stratum_collapses() {
        let fm = cubic_portrait().full_marking();
        let originals: BTreeSet<usize> = (0..fm.original_count).collect();
        let tau = divisor_tree(5, &[2, 3, 4]);
        let types = enumerate_types_over(&tau, &fm).unwrap();
        assert_eq!(types.len(), 1);
        let wt = &types[0];
        assert_eq!(wt.weight, 72);
        assert_eq!(wt.ty.rm_edges, vec![3]);
        validate_type(&wt.ty, &fm).unwrap();
        let fc = forgotten_class(&wt.ty, &originals).unwrap();
        assert_eq!(fc.key, CanonicalKey::new(5, BTreeSet::new()));
        assert_eq!(fc.dimension, 2);
        assert_eq!(fc.image_dimension, 0);

        let tau = divisor_tree(5, &[3, 4]);
        let types = enumerate_types_over(&tau, &fm).unwrap();
        assert_eq!(types.len(), 6);
        for wt in &types {
            assert_eq!(wt.weight, 12);
            let fc = forgotten_class(&wt.ty, &originals).unwrap();
            assert_eq!(fc.key, CanonicalKey::new(5, BTreeSet::new()));
            assert_eq!(fc.dimension, 2);
            assert_eq!(fc.image_dimension, 1);
        }
    }

    #[test]
    fn flatness_over_every_stratum_of_the_running_portraits() {
        for (fm, expected) in [
            (quadratic_portrait().full_marking(), 2),
            (cubic_portrait().full_marking(), 72),
            (eleven_point_datum().full_marking(), 24),
        ] {
            let n = fm.datum.branch_count();
            for key in enumerate_stable_trees(n, None).unwrap() {
                let tau = key.to_tree();
                let types = enumerate_types_over(&tau, &fm).unwrap();
                let total: u64 = types.iter().map(|wt| wt.weight).sum();
                assert_eq!(total, expected, "stratum {:?}", key.splits());
                for wt in &types {
                    validate_type(&wt.ty, &fm).unwrap();
                }
            }
        }
    }

    #[test]
    fn degeneration_census_matches_type_weights() {
        for fm in [
            four_branch_quadratic(),
            quadratic_portrait().full_marking(),
            cubic_portrait().full_marking(),
            eleven_point_datum().full_marking(),
        ] {
            let class_list = classes(&fm, None).unwrap();
            let n = fm.datum.branch_count();
            for key in enumerate_stable_trees(n, None).unwrap() {
                let tau = key.to_tree();
                let census = degeneration_census(&class_list, &tau, &fm).unwrap();
                let types = enumerate_types_over(&tau, &fm).unwrap();
                let mut weights: BTreeMap<String, u64> = BTreeMap::new();
                for wt in &types {
                    weights.insert(wt.ty.canonical_form().unwrap(), wt.weight);
                }
                let mut counted = 0usize;
                for (ty, members) in &census {
                    let form = ty.canonical_form().unwrap();
                    assert_eq!(
                        weights.get(&form).copied(),
                        Some(members.len() as u64),
                        "stratum {:?}",
                        key.splits()
                    );
                    counted += members.len();
                }
                assert_eq!(counted, class_list.len());
                assert_eq!(census.len(), types.len());
            }
        }
    }

    #[test]
    fn polynomial_components_hold_for_the_running_portraits() {
        for fm in [
            quadratic_portrait().full_marking(),
            cubic_portrait().full_marking(),
        ] {
            let n = fm.datum.branch_count();
            for key in enumerate_stable_trees(n, None).unwrap() {
                for wt in enumerate_types_over(&key.to_tree(), &fm).unwrap() {
                    check_polynomial_components(&wt.ty, &fm).unwrap();
                }
            }
        }
    }

    #[test]
    fn polynomial_checks_need_a_fully_ramified_branch() {
        let fm = eleven_point_datum().full_marking();
        let tau = divisor_tree(5, &[1, 2]);
        let types = enumerate_types_over(&tau, &fm).unwrap();
        assert_eq!(
            check_polynomial_components(&types[0].ty, &fm),
            Err(CoverError::NoFullyRamifiedBranch)
        );
    }

    #[test]
    fn tampered_infinity_edge_is_reported() {
        let fm = cubic_portrait().full_marking();
        let tau = divisor_tree(5, &[2, 3, 4]);
        let mut ty = enumerate_types_over(&tau, &fm).unwrap().remove(0).ty;
        let inf = infinity_vertices(&ty, &fm).unwrap();
        ty.rm_edges[0] = 2;
        let v = (0..ty.sigma.vertex_count()).find(|&v| v != inf.v_inf).unwrap();
        assert_eq!(
            check_polynomial_components(&ty, &fm),
            Err(CoverError::InfinityEdgeNotFull {
                vertex: v,
                ramification: 2,
                degree: 3
            })
        );
    }

    #[test]
    fn escaped_component_is_reported() {
        // An artificial three-vertex chain where a middle-layer vertex
        // hangs off the far side of the infinity edge.
        let fm = HurwitzDatum::new(
            2,
            &[
                ("x", "b1", 2),
                ("y", "b2", 2),
                ("s", "b3", 1),
                ("t", "b3", 1),
                ("q1", "b4", 1),
                ("q2", "b4", 1),
                ("r1", "b5", 1),
                ("r2", "b5", 1),
            ],
            &[
                ("b1", &[2]),
                ("b2", &[2]),
                ("b3", &[1, 1]),
                ("b4", &[1, 1]),
                ("b5", &[1, 1]),
            ],
        )
        .unwrap()
        .full_marking();
        let tau = MarkedTree::build(3, &[(0, 1), (1, 2)], &[0, 2, 0, 1, 1, 2, 2]).unwrap();
        assert!(tau.is_stable());
        let sigma = MarkedTree::build(
            3,
            &[(0, 1), (1, 2)],
            &[0, 1, 0, 2, 2, 1, 1],
        )
        .unwrap();
        let ty = CombinatorialType {
            sigma,
            tau,
            d_verts: vec![2, 2, 2],
            f_verts: vec![0, 2, 1],
            f_edges: vec![1, 0],
            rm_edges: vec![2, 2],
        };
        assert_eq!(
            check_polynomial_components(&ty, &fm),
            Err(CoverError::ComponentEscapes { vertex: 1, stray: 2 })
        );
    }

    #[test]
    fn instability_transfer_holds_for_the_quadratic_portrait() {
        let fm = quadratic_portrait().full_marking();
        let heavy = BTreeSet::from([0usize, 1]);
        for key in enumerate_stable_trees(4, None).unwrap() {
            for wt in enumerate_types_over(&key.to_tree(), &fm).unwrap() {
                check_instability_transfer(&wt.ty, &fm, &heavy).unwrap();
            }
        }
    }

    #[test]
    fn instability_transfer_validates_the_heavy_sets() {
        let fm = quadratic_portrait().full_marking();
        let tau = divisor_tree(4, &[2, 3]);
        let ty = enumerate_types_over(&tau, &fm).unwrap().remove(0).ty;
        assert_eq!(
            check_instability_transfer(&ty, &fm, &BTreeSet::from([0, 2])),
            Err(CoverError::HeavyMissingInfinity { branch: 1 })
        );
        assert_eq!(
            check_instability_transfer(&ty, &fm, &BTreeSet::from([1])),
            Err(CoverError::HeavyTooSmall {
                side: "target",
                size: 1
            })
        );
        assert_eq!(
            check_instability_transfer(&ty, &fm, &BTreeSet::from([1, 2])),
            Err(CoverError::HeavyTooSmall {
                side: "source",
                size: 1
            })
        );
    }

    #[test]
    fn validation_catches_a_tampered_ramification() {
        let fm = four_branch_quadratic();
        let tau = divisor_tree(4, &[1, 3]);
        let mut ty = enumerate_types_over(&tau, &fm).unwrap().remove(0).ty;
        validate_type(&ty, &fm).unwrap();
        ty.rm_edges[0] = 1;
        let err = validate_type(&ty, &fm).unwrap_err();
        assert!(matches!(err, CoverError::FiberDegree { .. }));
    }
}
