//! Marked trees: dual graphs of genus-zero marked nodal curves.
//!
//! A `MarkedTree` has opaque vertex ids `0..vertex_count`, undirected edges,
//! and legs labeled by the marking set `0..leg_count`. Strata identity is
//! carried by [`CanonicalKey`]: the set of leg bipartitions induced by the
//! edges. Two stable trees are isomorphic over the identity on the marking
//! iff their keys are equal, so keys — never vertex ids — cross module
//! boundaries.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use thiserror::Error;

/// A flag at a vertex: an incident edge or an attached leg.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Flag {
    /// Index into the tree's edge list.
    Edge(usize),
    /// Leg label.
    Leg(usize),
}

/// A location in a tree that a path can aim for: a vertex or a leg.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum End {
    Vertex(usize),
    Leg(usize),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TreeError {
    #[error("edge ({0}, {1}) mentions an unknown vertex")]
    UnknownEdgeVertex(usize, usize),
    #[error("edge ({0}, {0}) is a self-loop")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("leg {0} is attached to unknown vertex {1}")]
    UnknownLegVertex(usize, usize),
    #[error("leg {0} appears more than once")]
    DuplicateLeg(usize),
    #[error("leg {0} is missing")]
    MissingLeg(usize),
    #[error("graph is disconnected or contains a cycle ({vertices} vertices, {edges} edges)")]
    NotATree { vertices: usize, edges: usize },
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("unknown leg {0}")]
    UnknownLeg(usize),
    #[error("unknown edge {0}")]
    UnknownEdge(usize),
    #[error("path target equals the start vertex")]
    SelfTarget,
    #[error("tree is not stable")]
    NotStable,
    #[error("marking has {0} legs; at least 3 are required")]
    MarkingTooSmall(usize),
    #[error("keep set has {0} legs; at least 3 are required")]
    KeepTooSmall(usize),
}

/// A tree with legs labeled by `0..leg_count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedTree {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    leg_at: Vec<usize>,
}

impl MarkedTree {
    /// Builds and validates a tree. `leg_at[p]` is the vertex carrying leg `p`.
    pub fn build(
        vertex_count: usize,
        edges: &[(usize, usize)],
        leg_at: &[usize],
    ) -> Result<Self, TreeError> {
        let t = MarkedTree {
            vertex_count,
            edges: edges.to_vec(),
            leg_at: leg_at.to_vec(),
        };
        t.validate()?;
        Ok(t)
    }

    /// Builds from an explicit (leg, vertex) list so that missing or
    /// duplicated legs surface as named errors.
    pub fn from_leg_map(
        vertex_count: usize,
        edges: &[(usize, usize)],
        leg_count: usize,
        legs: &[(usize, usize)],
    ) -> Result<Self, TreeError> {
        let mut leg_at = vec![usize::MAX; leg_count];
        for &(p, v) in legs {
            if p >= leg_count {
                return Err(TreeError::UnknownLeg(p));
            }
            if leg_at[p] != usize::MAX {
                return Err(TreeError::DuplicateLeg(p));
            }
            leg_at[p] = v;
        }
        if let Some(p) = leg_at.iter().position(|&v| v == usize::MAX) {
            return Err(TreeError::MissingLeg(p));
        }
        Self::build(vertex_count, edges, &leg_at)
    }

    /// The one-vertex tree on `n` legs.
    pub fn one_vertex(n: usize) -> Self {
        MarkedTree {
            vertex_count: 1,
            edges: Vec::new(),
            leg_at: vec![0; n],
        }
    }

    /// Checks connectivity, acyclicity, and leg attachment.
    pub fn validate(&self) -> Result<(), TreeError> {
        for &(a, b) in &self.edges {
            if a >= self.vertex_count || b >= self.vertex_count {
                return Err(TreeError::UnknownEdgeVertex(a, b));
            }
            if a == b {
                return Err(TreeError::SelfLoop(a));
            }
        }
        let mut seen = BTreeSet::new();
        for &(a, b) in &self.edges {
            let key = (a.min(b), a.max(b));
            if !seen.insert(key) {
                return Err(TreeError::DuplicateEdge(key.0, key.1));
            }
        }
        for (p, &v) in self.leg_at.iter().enumerate() {
            if v >= self.vertex_count {
                return Err(TreeError::UnknownLegVertex(p, v));
            }
        }
        if self.vertex_count == 0 || self.edges.len() + 1 != self.vertex_count {
            return Err(TreeError::NotATree {
                vertices: self.vertex_count,
                edges: self.edges.len(),
            });
        }
        let mut reached = vec![false; self.vertex_count];
        let mut queue = VecDeque::from([0usize]);
        reached[0] = true;
        while let Some(v) = queue.pop_front() {
            for &(a, b) in &self.edges {
                for (x, y) in [(a, b), (b, a)] {
                    if x == v && !reached[y] {
                        reached[y] = true;
                        queue.push_back(y);
                    }
                }
            }
        }
        if reached.iter().any(|r| !r) {
            return Err(TreeError::NotATree {
                vertices: self.vertex_count,
                edges: self.edges.len(),
            });
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn leg_count(&self) -> usize {
        self.leg_at.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Vertex carrying leg `p`.
    pub fn leg_vertex(&self, p: usize) -> usize {
        self.leg_at[p]
    }

    /// All flags at `v`, edges first, in index order.
    pub fn flags(&self, v: usize) -> Vec<Flag> {
        let mut out = Vec::new();
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if a == v || b == v {
                out.push(Flag::Edge(i));
            }
        }
        for (p, &w) in self.leg_at.iter().enumerate() {
            if w == v {
                out.push(Flag::Leg(p));
            }
        }
        out
    }

    pub fn valence(&self, v: usize) -> usize {
        self.flags(v).len()
    }

    /// `|v| - 3`: the dimension of the moduli factor attached to `v`.
    pub fn moduli_dimension(&self, v: usize) -> Result<i64, TreeError> {
        if v >= self.vertex_count {
            return Err(TreeError::UnknownVertex(v));
        }
        Ok(self.valence(v) as i64 - 3)
    }

    /// True iff every vertex has valence at least 3.
    pub fn is_stable(&self) -> bool {
        (0..self.vertex_count).all(|v| self.valence(v) >= 3)
    }

    /// Sum of vertex moduli dimensions; requires stability.
    pub fn stratum_dimension(&self) -> Result<usize, TreeError> {
        if !self.is_stable() {
            return Err(TreeError::NotStable);
        }
        Ok(self.leg_count() - 3 - self.edge_count())
    }

    fn far_endpoint(&self, e: usize, near: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == near {
            b
        } else {
            a
        }
    }

    /// Vertices in the component of `root` after deleting edge `e`.
    fn side_of(&self, e: usize, root: usize) -> Vec<bool> {
        let mut inside = vec![false; self.vertex_count];
        inside[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for (i, &(a, b)) in self.edges.iter().enumerate() {
                if i == e {
                    continue;
                }
                for (x, y) in [(a, b), (b, a)] {
                    if x == v && !inside[y] {
                        inside[y] = true;
                        queue.push_back(y);
                    }
                }
            }
        }
        inside
    }

    /// First flag on the non-repeating path from `v` to `target`.
    pub fn delta(&self, v: usize, target: End) -> Result<Flag, TreeError> {
        if v >= self.vertex_count {
            return Err(TreeError::UnknownVertex(v));
        }
        match target {
            End::Leg(p) if p >= self.leg_count() => return Err(TreeError::UnknownLeg(p)),
            End::Vertex(w) if w >= self.vertex_count => return Err(TreeError::UnknownVertex(w)),
            End::Vertex(w) if w == v => return Err(TreeError::SelfTarget),
            End::Leg(p) if self.leg_at[p] == v => return Ok(Flag::Leg(p)),
            _ => {}
        }
        let goal = match target {
            End::Vertex(w) => w,
            End::Leg(p) => self.leg_at[p],
        };
        for flag in self.flags(v) {
            if let Flag::Edge(e) = flag {
                let far = self.far_endpoint(e, v);
                if self.side_of(e, far)[goal] {
                    return Ok(flag);
                }
            }
        }
        unreachable!("tree is connected");
    }

    /// True iff deleting edge `e` separates `x` from `y`.
    pub fn edge_connects(&self, e: usize, x: End, y: End) -> Result<bool, TreeError> {
        if e >= self.edges.len() {
            return Err(TreeError::UnknownEdge(e));
        }
        let vertex_of = |end: End| -> Result<usize, TreeError> {
            match end {
                End::Vertex(v) if v < self.vertex_count => Ok(v),
                End::Vertex(v) => Err(TreeError::UnknownVertex(v)),
                End::Leg(p) if p < self.leg_count() => Ok(self.leg_at[p]),
                End::Leg(p) => Err(TreeError::UnknownLeg(p)),
            }
        };
        let side = self.side_of(e, self.edges[e].0);
        Ok(side[vertex_of(x)?] != side[vertex_of(y)?])
    }

    /// Legs grouped by the flag of `v` that starts the path toward them.
    /// Legs at `v` itself form singleton groups.
    pub fn flag_partition(&self, v: usize) -> Vec<(Flag, Vec<usize>)> {
        let mut out = Vec::new();
        for flag in self.flags(v) {
            match flag {
                Flag::Leg(p) => out.push((flag, vec![p])),
                Flag::Edge(e) => {
                    let far = self.far_endpoint(e, v);
                    let side = self.side_of(e, far);
                    let legs: Vec<usize> = (0..self.leg_count())
                        .filter(|&p| side[self.leg_at[p]])
                        .collect();
                    out.push((flag, legs));
                }
            }
        }
        out
    }

    /// The leg bipartition induced by edge `e`, as the side avoiding leg 0.
    pub fn split_of_edge(&self, e: usize) -> Vec<usize> {
        let side = self.side_of(e, self.edges[e].0);
        let zero_in_side = side[self.leg_at[0]];
        (0..self.leg_count())
            .filter(|&p| side[self.leg_at[p]] != zero_in_side)
            .collect()
    }

    /// Isomorphism-class key: the set of edge-induced leg splits.
    pub fn canonical_key(&self) -> CanonicalKey {
        CanonicalKey {
            leg_count: self.leg_count(),
            splits: (0..self.edges.len())
                .map(|e| self.split_of_edge(e))
                .collect(),
        }
    }

    /// Contracts the given edges; legs follow their vertices.
    pub fn contract_edges(&self, contract: &BTreeSet<usize>) -> Result<MarkedTree, TreeError> {
        for &e in contract {
            if e >= self.edges.len() {
                return Err(TreeError::UnknownEdge(e));
            }
        }
        let mut repr: Vec<usize> = (0..self.vertex_count).collect();
        fn find(repr: &mut Vec<usize>, v: usize) -> usize {
            if repr[v] != v {
                let r = find(repr, repr[v]);
                repr[v] = r;
                r
            } else {
                v
            }
        }
        for &e in contract {
            let (a, b) = self.edges[e];
            let (ra, rb) = (find(&mut repr, a), find(&mut repr, b));
            if ra != rb {
                repr[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut new_id = BTreeMap::new();
        for v in 0..self.vertex_count {
            let r = find(&mut repr, v);
            let next = new_id.len();
            new_id.entry(r).or_insert(next);
        }
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| !contract.contains(i))
            .map(|(_, &(a, b))| {
                (new_id[&find(&mut repr, a)], new_id[&find(&mut repr, b)])
            })
            .collect();
        let leg_at: Vec<usize> = self
            .leg_at
            .iter()
            .map(|&v| new_id[&find(&mut repr, v)])
            .collect();
        MarkedTree::build(new_id.len(), &edges, &leg_at)
    }

    /// Forgets the legs outside `keep` and stabilizes. Leg `i` of the result
    /// is the `i`-th smallest element of `keep`.
    pub fn forget_legs(&self, keep: &BTreeSet<usize>) -> Result<MarkedTree, TreeError> {
        if keep.len() < 3 {
            return Err(TreeError::KeepTooSmall(keep.len()));
        }
        for &p in keep {
            if p >= self.leg_count() {
                return Err(TreeError::UnknownLeg(p));
            }
        }
        let order: Vec<usize> = keep.iter().copied().collect();
        let rank: BTreeMap<usize, usize> =
            order.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let mut splits = BTreeSet::new();
        for e in 0..self.edges.len() {
            let side = self.side_of(e, self.edges[e].0);
            let zero_side = side[self.leg_at[order[0]]];
            let restricted: Vec<usize> = order
                .iter()
                .filter(|&&p| side[self.leg_at[p]] != zero_side)
                .map(|&p| rank[&p])
                .collect();
            if restricted.len() >= 2 && restricted.len() <= keep.len() - 2 {
                splits.insert(restricted);
            }
        }
        Ok(CanonicalKey {
            leg_count: keep.len(),
            splits,
        }
        .to_tree())
    }
}

/// The split-set identity of a stratum. Splits are stored as the side not
/// containing leg 0, sorted; equality of keys is isomorphism of stable trees
/// over the identity on the marking.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CanonicalKey {
    leg_count: usize,
    splits: BTreeSet<Vec<usize>>,
}

impl CanonicalKey {
    pub fn new(leg_count: usize, splits: BTreeSet<Vec<usize>>) -> Self {
        CanonicalKey { leg_count, splits }
    }

    pub fn leg_count(&self) -> usize {
        self.leg_count
    }

    pub fn splits(&self) -> &BTreeSet<Vec<usize>> {
        &self.splits
    }

    /// Stratum dimension: `n - 3 - #edges`.
    pub fn dimension(&self) -> usize {
        self.leg_count - 3 - self.splits.len()
    }

    /// True iff every split of `self` is a split of `other`.
    pub fn refines_into(&self, other: &CanonicalKey) -> bool {
        self.leg_count == other.leg_count && self.splits.is_subset(&other.splits)
    }

    /// Splits rendered through a label table, each side sorted, outer sorted.
    pub fn to_labels(&self, labels: &[String]) -> Vec<Vec<String>> {
        let mut out: Vec<Vec<String>> = self
            .splits
            .iter()
            .map(|s| s.iter().map(|&p| labels[p].clone()).collect())
            .collect();
        for side in &mut out {
            side.sort();
        }
        out.sort();
        out
    }

    /// Rebuilds the unique stable tree with these splits.
    pub fn to_tree(&self) -> MarkedTree {
        let mut tree = MarkedTree::one_vertex(self.leg_count);
        let mut by_size: Vec<&Vec<usize>> = self.splits.iter().collect();
        by_size.sort_by_key(|s| std::cmp::Reverse(s.len()));
        for split in by_size {
            let want: BTreeSet<usize> = split.iter().copied().collect();
            tree = insert_split(&tree, &want);
        }
        tree
    }
}

/// Splits one vertex of `tree` along `want` (a set of legs, compatible with
/// all existing splits and not yet an edge).
fn insert_split(tree: &MarkedTree, want: &BTreeSet<usize>) -> MarkedTree {
    for v in 0..tree.vertex_count() {
        let groups = tree.flag_partition(v);
        let mut inside = Vec::new();
        let mut covered = 0usize;
        let mut ok = true;
        for (flag, legs) in &groups {
            let hits = legs.iter().filter(|p| want.contains(p)).count();
            if hits == legs.len() {
                inside.push(*flag);
                covered += hits;
            } else if hits > 0 {
                ok = false;
                break;
            }
        }
        if !ok || covered != want.len() || inside.len() == groups.len() {
            continue;
        }
        // Split v: `inside` flags move to a fresh vertex joined to v.
        let fresh = tree.vertex_count();
        let mut edges = tree.edges().to_vec();
        let mut leg_at: Vec<usize> = (0..tree.leg_count()).map(|p| tree.leg_vertex(p)).collect();
        for flag in &inside {
            match *flag {
                Flag::Edge(e) => {
                    let (a, b) = edges[e];
                    edges[e] = if a == v { (fresh, b) } else { (a, fresh) };
                }
                Flag::Leg(p) => leg_at[p] = fresh,
            }
        }
        edges.push((v, fresh));
        return MarkedTree::build(fresh + 1, &edges, &leg_at)
            .expect("splitting a vertex preserves treeness");
    }
    panic!("split is incompatible with the tree");
}

/// Enumerates canonical keys of all stable trees on `n` legs, optionally
/// restricted to one stratum dimension, in key order.
pub fn enumerate_stable_trees(
    n: usize,
    dimension: Option<usize>,
) -> Result<Vec<CanonicalKey>, TreeError> {
    if n < 3 {
        return Err(TreeError::MarkingTooSmall(n));
    }
    if let Some(k) = dimension {
        if k > n - 3 {
            return Ok(Vec::new());
        }
    }
    // Candidate splits: subsets of {1..n-1} with both sides of size >= 2,
    // i.e. 2 <= |S| <= n-2. Stable trees correspond to laminar families.
    let mut candidates: Vec<Vec<usize>> = Vec::new();
    for mask in 0u64..(1 << (n - 1)) {
        let set: Vec<usize> = (1..n).filter(|&p| mask >> (p - 1) & 1 == 1).collect();
        if set.len() >= 2 && set.len() <= n - 2 {
            candidates.push(set);
        }
    }
    candidates.sort();
    let want_edges = dimension.map(|k| n - 3 - k);
    let mut family: Vec<usize> = Vec::new();
    let mut out: Vec<CanonicalKey> = Vec::new();
    fn compatible(a: &[usize], b: &[usize]) -> bool {
        let sa: BTreeSet<usize> = a.iter().copied().collect();
        let sb: BTreeSet<usize> = b.iter().copied().collect();
        sa.is_subset(&sb) || sb.is_subset(&sa) || sa.is_disjoint(&sb)
    }
    fn extend(
        candidates: &[Vec<usize>],
        start: usize,
        family: &mut Vec<usize>,
        want_edges: Option<usize>,
        n: usize,
        out: &mut Vec<CanonicalKey>,
    ) {
        if want_edges.map_or(true, |m| family.len() == m) {
            out.push(CanonicalKey {
                leg_count: n,
                splits: family.iter().map(|&i| candidates[i].clone()).collect(),
            });
        }
        if let Some(m) = want_edges {
            if family.len() == m {
                return;
            }
        }
        for i in start..candidates.len() {
            if family.iter().all(|&j| compatible(&candidates[i], &candidates[j])) {
                family.push(i);
                extend(candidates, i + 1, family, want_edges, n, out);
                family.pop();
            }
        }
    }
    extend(&candidates, 0, &mut family, want_edges, n, &mut out);
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The four-vertex running example: legs 0-2 at v0, 3-5 at v2, 6-7 at v3;
    /// edges (v0,v1), (v1,v2), (v1,v3).
    pub(crate) fn caterpillar() -> MarkedTree {
        MarkedTree::build(
            4,
            &[(0, 1), (1, 2), (1, 3)],
            &[0, 0, 0, 2, 2, 2, 3, 3],
        )
        .unwrap()
    }

    #[test]
    fn moduli_dimensions_of_caterpillar() {
        let t = caterpillar();
        assert_eq!(t.moduli_dimension(0).unwrap(), 1);
        assert_eq!(t.moduli_dimension(1).unwrap(), 0);
        assert_eq!(t.moduli_dimension(2).unwrap(), 1);
        assert_eq!(t.moduli_dimension(3).unwrap(), 0);
        assert!(t.is_stable());
        assert_eq!(t.stratum_dimension().unwrap(), 2);
    }

    #[test]
    fn valence_two_vertex_is_semistable_only() {
        // Replace the two legs at v3 with a valence-2 vertex: still a valid
        // tree, but not stable.
        let t = MarkedTree::build(4, &[(0, 1), (1, 2), (1, 3)], &[0, 0, 0, 2, 2, 2, 3]).unwrap();
        assert!(t.validate().is_ok());
        assert!(!t.is_stable());
        assert_eq!(t.stratum_dimension(), Err(TreeError::NotStable));
    }

    #[test]
    fn delta_examples() {
        let t = caterpillar();
        assert_eq!(t.delta(0, End::Leg(0)).unwrap(), Flag::Leg(0));
        assert_eq!(t.delta(1, End::Leg(5)).unwrap(), Flag::Edge(1));
        assert_eq!(t.delta(3, End::Vertex(0)).unwrap(), Flag::Edge(2));
        assert_eq!(t.delta(0, End::Leg(6)).unwrap(), Flag::Edge(0));
        assert_eq!(t.delta(0, End::Vertex(0)), Err(TreeError::SelfTarget));
        assert_eq!(t.delta(0, End::Leg(99)), Err(TreeError::UnknownLeg(99)));
    }

    #[test]
    fn edge_connects_matches_path_membership() {
        let t = MarkedTree::build(3, &[(0, 1), (1, 2)], &[0, 2, 2]).unwrap();
        assert!(t.edge_connects(0, End::Vertex(0), End::Vertex(2)).unwrap());
        assert!(!t.edge_connects(0, End::Vertex(1), End::Vertex(2)).unwrap());
        assert!(t.edge_connects(1, End::Leg(0), End::Leg(1)).unwrap());
    }

    #[test]
    fn structural_validation_errors() {
        assert_eq!(
            MarkedTree::build(2, &[], &[0, 1, 1]).unwrap_err(),
            TreeError::NotATree {
                vertices: 2,
                edges: 0
            }
        );
        assert_eq!(
            MarkedTree::build(2, &[(0, 0)], &[0, 0, 1]).unwrap_err(),
            TreeError::SelfLoop(0)
        );
        assert_eq!(
            MarkedTree::from_leg_map(1, &[], 3, &[(0, 0), (0, 0), (1, 0)]).unwrap_err(),
            TreeError::DuplicateLeg(0)
        );
        assert_eq!(
            MarkedTree::from_leg_map(1, &[], 3, &[(0, 0), (1, 0)]).unwrap_err(),
            TreeError::MissingLeg(2)
        );
    }

    #[test]
    fn two_vertex_tree_on_five_legs_has_dimension_one() {
        let t = MarkedTree::build(2, &[(0, 1)], &[0, 0, 1, 1, 1]).unwrap();
        assert_eq!(t.stratum_dimension().unwrap(), 1);
    }

    #[test]
    fn contract_middle_edge_of_caterpillar() {
        let t = caterpillar();
        let c = t.contract_edges(&BTreeSet::from([2])).unwrap();
        assert_eq!(c.vertex_count(), 3);
        assert_eq!(c.edge_count(), 2);
        // Legs 6 and 7 now live on the middle vertex.
        let mid = c.leg_vertex(6);
        assert_eq!(c.leg_vertex(7), mid);
        assert_eq!(c.valence(mid), 4);
        assert!(c.is_stable());
    }

    #[test]
    fn forgetting_last_two_legs_collapses_to_divisor() {
        let t = caterpillar();
        let keep: BTreeSet<usize> = (0..6).collect();
        let f = t.forget_legs(&keep).unwrap();
        assert_eq!(f.vertex_count(), 2);
        let key = f.canonical_key();
        assert_eq!(key.splits().len(), 1);
        assert_eq!(key.splits().iter().next().unwrap(), &vec![3, 4, 5]);
    }

    #[test]
    fn key_round_trips_through_tree() {
        for n in 3..=6 {
            for key in enumerate_stable_trees(n, None).unwrap() {
                let t = key.to_tree();
                assert!(t.is_stable());
                assert_eq!(t.canonical_key(), key);
                assert_eq!(t.stratum_dimension().unwrap(), key.dimension());
            }
        }
    }

    #[test]
    fn census_counts() {
        assert_eq!(enumerate_stable_trees(3, None).unwrap().len(), 1);
        let n4 = enumerate_stable_trees(4, None).unwrap();
        assert_eq!(n4.len(), 4);
        assert_eq!(n4.iter().filter(|k| k.dimension() == 1).count(), 1);
        assert_eq!(n4.iter().filter(|k| k.dimension() == 0).count(), 3);
        let n5 = enumerate_stable_trees(5, None).unwrap();
        assert_eq!(n5.len(), 26);
        let by_dim = |d| n5.iter().filter(|k| k.dimension() == d).count();
        assert_eq!((by_dim(2), by_dim(1), by_dim(0)), (1, 10, 15));
        assert_eq!(
            enumerate_stable_trees(5, Some(1)).unwrap().len(),
            10
        );
        assert_eq!(enumerate_stable_trees(2, None).unwrap_err(), TreeError::MarkingTooSmall(2));
    }

    #[test]
    fn edge_count_tracks_dimension() {
        for key in enumerate_stable_trees(6, None).unwrap() {
            assert_eq!(key.dimension(), 6 - 3 - key.splits().len());
        }
    }
}
