//! Weighted stability and reduction of stable marked trees.
//!
//! A [`WeightDatum`] assigns each leg a rational weight in `(0, 1]` with
//! total above 2. A vertex of a stable tree is *very stable* for the datum
//! when the capped weights of its flag directions sum to more than 2;
//! reduction contracts everything else. All arithmetic is exact.

use crate::tree::{CanonicalKey, End, Flag, MarkedTree, TreeError};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WeightError {
    #[error("expected {expected} weights, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("weight of leg {0} is outside (0, 1]")]
    OutOfRange(usize),
    #[error("total weight {0} does not exceed 2")]
    TotalTooSmall(String),
    #[error("weight data are not pointwise comparable at leg {0}")]
    NotComparable(usize),
    #[error("epsilon {epsilon} is outside the open window ({lower}, {upper})")]
    EpsilonOutsideWindow {
        epsilon: String,
        lower: String,
        upper: String,
    },
    #[error("heavy set is empty")]
    HeavyEmpty,
    #[error("heavy set mentions unknown leg {0}")]
    UnknownHeavyLeg(usize),
    #[error("tree is not stable")]
    UnstableTree,
    #[error("no vertex is very stable for this weight datum")]
    NoVeryStableVertex,
    #[error(transparent)]
    Tree(#[from] TreeError),
}

/// Per-leg rational weights in `(0, 1]` with total greater than 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDatum {
    weights: Vec<BigRational>,
}

impl WeightDatum {
    pub fn new(weights: Vec<BigRational>) -> Result<Self, WeightError> {
        let one = BigRational::one();
        let mut total = BigRational::zero();
        for (p, w) in weights.iter().enumerate() {
            if *w <= BigRational::zero() || *w > one {
                return Err(WeightError::OutOfRange(p));
            }
            total += w;
        }
        if total <= BigRational::from_integer(BigInt::from(2)) {
            return Err(WeightError::TotalTooSmall(total.to_string()));
        }
        Ok(WeightDatum { weights })
    }

    /// The classical datum: every leg has weight 1.
    pub fn uniform_one(n: usize) -> Self {
        WeightDatum {
            weights: vec![BigRational::one(); n],
        }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn get(&self, p: usize) -> &BigRational {
        &self.weights[p]
    }

    pub fn weights(&self) -> &[BigRational] {
        &self.weights
    }

    /// True iff `self[p] >= other[p]` for every leg.
    pub fn dominates(&self, other: &WeightDatum) -> bool {
        self.weights.len() == other.weights.len()
            && self
                .weights
                .iter()
                .zip(&other.weights)
                .all(|(a, b)| a >= b)
    }
}

/// Weight 1 on `heavy`, `epsilon` elsewhere, with `epsilon` required to lie
/// in the open window `(1/(n-1), 1/(n-2))`. With no `epsilon` given, the
/// mediant `2/(2n-3)` of the window is used.
pub fn tower_weight_datum(
    n: usize,
    heavy: &BTreeSet<usize>,
    epsilon: Option<BigRational>,
) -> Result<WeightDatum, WeightError> {
    if n < 3 {
        return Err(TreeError::MarkingTooSmall(n).into());
    }
    if heavy.is_empty() {
        return Err(WeightError::HeavyEmpty);
    }
    for &p in heavy {
        if p >= n {
            return Err(WeightError::UnknownHeavyLeg(p));
        }
    }
    let lower = BigRational::new(BigInt::one(), BigInt::from(n as i64 - 1));
    let upper = BigRational::new(BigInt::one(), BigInt::from(n as i64 - 2));
    let eps = epsilon
        .unwrap_or_else(|| BigRational::new(BigInt::from(2), BigInt::from(2 * n as i64 - 3)));
    if eps <= lower || eps >= upper {
        return Err(WeightError::EpsilonOutsideWindow {
            epsilon: eps.to_string(),
            lower: lower.to_string(),
            upper: upper.to_string(),
        });
    }
    let weights = (0..n)
        .map(|p| {
            if heavy.contains(&p) {
                BigRational::one()
            } else {
                eps.clone()
            }
        })
        .collect();
    WeightDatum::new(weights)
}

/// Evaluates very-stability from a precomputed flag partition: the capped
/// direction weights must sum to more than 2.
pub fn very_stable_from_groups(groups: &[(Flag, Vec<usize>)], w: &WeightDatum) -> bool {
    let one = BigRational::one();
    let two = BigRational::from_integer(BigInt::from(2));
    let mut sum = BigRational::zero();
    for (_, legs) in groups {
        let mut wt = BigRational::zero();
        for &p in legs {
            wt += w.get(p);
        }
        sum += if wt > one { one.clone() } else { wt };
        if sum > two {
            return true;
        }
    }
    false
}

/// True iff vertex `v` of `t` is very stable for `w`.
pub fn is_very_stable(t: &MarkedTree, w: &WeightDatum, v: usize) -> Result<bool, WeightError> {
    check_len(t, w)?;
    Ok(very_stable_from_groups(&t.flag_partition(v), w))
}

/// Number of flags of `v` whose direction contains a heavy leg. For tower
/// data with at least two heavy legs, `v` is very stable iff this is at
/// least 2.
pub fn heavy_direction_count(t: &MarkedTree, heavy: &BTreeSet<usize>, v: usize) -> usize {
    t.flag_partition(v)
        .iter()
        .filter(|(_, legs)| legs.iter().any(|p| heavy.contains(p)))
        .count()
}

fn check_len(t: &MarkedTree, w: &WeightDatum) -> Result<(), WeightError> {
    if t.leg_count() != w.len() {
        return Err(WeightError::WrongLength {
            expected: t.leg_count(),
            got: w.len(),
        });
    }
    Ok(())
}

/// The result of reducing a stable tree by a weight datum.
///
/// `kept[i]` is the original id of the `i`-th very stable vertex (ascending);
/// vertex `i` of `tree` is that vertex in the quotient. `clusters[i]`
/// partitions the legs now sitting at vertex `i`: one singleton per leg the
/// vertex owned already, one cluster per contracted neighboring component.
/// `kept_moduli[i]` is the moduli dimension of `kept[i]` in the original
/// tree, and `image_dimension` is their sum: the dimension of the image of
/// the stratum under the reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedType {
    pub kept: Vec<usize>,
    pub tree: MarkedTree,
    pub clusters: Vec<Vec<Vec<usize>>>,
    pub kept_moduli: Vec<usize>,
    pub image_dimension: usize,
}

impl ReducedType {
    pub fn quotient_key(&self) -> CanonicalKey {
        self.tree.canonical_key()
    }
}

/// Contracts every non-very-stable vertex of `t` into its unique very stable
/// neighbor-through-the-tree and reports the quotient with its leg clusters.
pub fn stabilize(t: &MarkedTree, w: &WeightDatum) -> Result<ReducedType, WeightError> {
    check_len(t, w)?;
    if !t.is_stable() {
        return Err(WeightError::UnstableTree);
    }
    let vs: Vec<bool> = (0..t.vertex_count())
        .map(|v| very_stable_from_groups(&t.flag_partition(v), w))
        .collect();
    if !vs.iter().any(|&b| b) {
        return Err(WeightError::NoVeryStableVertex);
    }
    // Anchor every vertex at the very stable vertex absorbing it. Each
    // non-very-stable component hangs off exactly one very stable vertex;
    // walking toward any very stable vertex finds it.
    let kept: Vec<usize> = (0..t.vertex_count()).filter(|&v| vs[v]).collect();
    let mut anchor: Vec<usize> = (0..t.vertex_count()).collect();
    for v in 0..t.vertex_count() {
        if vs[v] {
            continue;
        }
        let mut cur = v;
        loop {
            match t.delta(cur, End::Vertex(kept[0])).ok() {
                _ if vs[cur] => break,
                Some(Flag::Edge(e)) => {
                    let (a, b) = t.edges()[e];
                    cur = if a == cur { b } else { a };
                }
                _ => unreachable!("path to a very stable vertex exists"),
            }
        }
        anchor[v] = cur;
    }
    // The walk above goes toward kept[0]; a component on the far side of
    // kept[0] from v would be crossed into another component. Verify each
    // non-very-stable component touches exactly one very stable vertex and
    // anchor by that vertex instead.
    let mut comp: Vec<usize> = (0..t.vertex_count()).collect();
    fn find(comp: &mut Vec<usize>, v: usize) -> usize {
        if comp[v] != v {
            let r = find(comp, comp[v]);
            comp[v] = r;
            r
        } else {
            v
        }
    }
    for &(a, b) in t.edges() {
        if !vs[a] && !vs[b] {
            let (ra, rb) = (find(&mut comp, a), find(&mut comp, b));
            if ra != rb {
                comp[ra.max(rb)] = ra.min(rb);
            }
        }
    }
    let mut touched: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); t.vertex_count()];
    for &(a, b) in t.edges() {
        if !vs[a] && vs[b] {
            let r = find(&mut comp, a);
            touched[r].insert(b);
        } else if vs[a] && !vs[b] {
            let r = find(&mut comp, b);
            touched[r].insert(a);
        }
    }
    for v in 0..t.vertex_count() {
        if !vs[v] {
            let r = find(&mut comp, v);
            assert_eq!(
                touched[r].len(),
                1,
                "a contracted component must border exactly one very stable vertex"
            );
            anchor[v] = *touched[r].iter().next().unwrap();
        }
    }
    let index_of = |v: usize| kept.binary_search(&v).expect("anchor is kept");
    let edges_q: Vec<(usize, usize)> = t
        .edges()
        .iter()
        .filter(|&&(a, b)| vs[a] && vs[b])
        .map(|&(a, b)| (index_of(a), index_of(b)))
        .collect();
    let leg_at_q: Vec<usize> = (0..t.leg_count())
        .map(|p| index_of(anchor[t.leg_vertex(p)]))
        .collect();
    let tree = MarkedTree::build(kept.len(), &edges_q, &leg_at_q)?;

    let one = BigRational::one();
    let mut clusters: Vec<Vec<Vec<usize>>> = vec![Vec::new(); kept.len()];
    for (i, &v) in kept.iter().enumerate() {
        for p in 0..t.leg_count() {
            if t.leg_vertex(p) == v {
                clusters[i].push(vec![p]);
            }
        }
    }
    let mut comp_legs: Vec<Vec<usize>> = vec![Vec::new(); t.vertex_count()];
    for p in 0..t.leg_count() {
        let v = t.leg_vertex(p);
        if !vs[v] {
            comp_legs[find(&mut comp, v)].push(p);
        }
    }
    for r in 0..t.vertex_count() {
        if comp_legs[r].is_empty() {
            continue;
        }
        let mut wt = BigRational::zero();
        for &p in &comp_legs[r] {
            wt += w.get(p);
        }
        assert!(
            wt <= one,
            "legs of a contracted component must have total weight at most 1"
        );
        let i = index_of(anchor[r]);
        clusters[i].push(comp_legs[r].clone());
    }
    for c in &mut clusters {
        c.sort();
    }
    let kept_moduli: Vec<usize> = kept
        .iter()
        .map(|&v| t.moduli_dimension(v).expect("kept vertex exists") as usize)
        .collect();
    let image_dimension = kept_moduli.iter().sum();
    Ok(ReducedType {
        kept,
        tree,
        clusters,
        kept_moduli,
        image_dimension,
    })
}

/// Reduces by `w1`, then reduces the quotient by `w2 <= w1`, merging cluster
/// structures; the result is expressed in terms of the original tree and
/// must agree with reducing by `w2` directly.
pub fn compose_reductions(
    t: &MarkedTree,
    w1: &WeightDatum,
    w2: &WeightDatum,
) -> Result<ReducedType, WeightError> {
    if w1.len() != w2.len() {
        return Err(WeightError::WrongLength {
            expected: w1.len(),
            got: w2.len(),
        });
    }
    if let Some(p) = (0..w1.len()).find(|&p| w2.get(p) > w1.get(p)) {
        return Err(WeightError::NotComparable(p));
    }
    let r1 = stabilize(t, w1)?;
    // Clusters of r1 are unions of legs of total w1-weight at most 1, hence
    // w2-weight at most 1: capping never splits them, so the quotient tree
    // with its individual legs evaluates very-stability faithfully.
    let r2 = stabilize(&r1.tree, w2)?;
    let kept: Vec<usize> = r2.kept.iter().map(|&q| r1.kept[q]).collect();
    let kept_moduli: Vec<usize> = r2.kept.iter().map(|&q| r1.kept_moduli[q]).collect();
    let image_dimension = kept_moduli.iter().sum();
    let mut clusters: Vec<Vec<Vec<usize>>> = Vec::with_capacity(r2.kept.len());
    for (j, &q) in r2.kept.iter().enumerate() {
        let own: BTreeSet<usize> = (0..r1.tree.leg_count())
            .filter(|&p| r1.tree.leg_vertex(p) == q)
            .collect();
        let mut merged: Vec<Vec<usize>> = r1.clusters[q].clone();
        for c in &r2.clusters[j] {
            if c.len() == 1 && own.contains(&c[0]) {
                continue;
            }
            merged.push(c.clone());
        }
        merged.sort();
        clusters.push(merged);
    }
    Ok(ReducedType {
        kept,
        tree: r2.tree,
        clusters,
        kept_moduli,
        image_dimension,
    })
}

/// Canonical keys of the `k`-dimensional strata whose classes die under the
/// reduction attached to `w`: those with a positive-dimension vertex that is
/// not very stable.
pub fn kernel_strata(
    n: usize,
    w: &WeightDatum,
    k: usize,
) -> Result<Vec<CanonicalKey>, WeightError> {
    if w.len() != n {
        return Err(WeightError::WrongLength {
            expected: n,
            got: w.len(),
        });
    }
    let mut out = Vec::new();
    for key in crate::tree::enumerate_stable_trees(n, Some(k))? {
        let t = key.to_tree();
        let dies = (0..t.vertex_count()).any(|v| {
            t.valence(v) > 3 && !very_stable_from_groups(&t.flag_partition(v), w)
        });
        if dies {
            out.push(key);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::enumerate_stable_trees;

    fn caterpillar() -> MarkedTree {
        MarkedTree::build(4, &[(0, 1), (1, 2), (1, 3)], &[0, 0, 0, 2, 2, 2, 3, 3]).unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn uniform_weights_keep_everything() {
        let t = MarkedTree::build(2, &[(0, 1)], &[0, 0, 1, 1, 1]).unwrap();
        let r = stabilize(&t, &WeightDatum::uniform_one(5)).unwrap();
        assert_eq!(r.kept, vec![0, 1]);
        assert_eq!(r.tree, t);
        assert_eq!(r.image_dimension, 1);
        assert!(r.clusters.iter().flatten().all(|c| c.len() == 1));
    }

    #[test]
    fn tower_datum_collapses_light_tail_of_caterpillar() {
        let t = caterpillar();
        let heavy: BTreeSet<usize> = [0, 1, 2].into();
        let w = tower_weight_datum(8, &heavy, None).unwrap();
        assert_eq!(w.get(3), &rat(2, 13));
        let r = stabilize(&t, &w).unwrap();
        assert_eq!(r.kept, vec![0]);
        assert_eq!(r.tree.vertex_count(), 1);
        assert_eq!(r.image_dimension, 1);
        assert_eq!(
            r.clusters,
            vec![vec![vec![0], vec![1], vec![2], vec![3, 4, 5, 6, 7]]]
        );
    }

    #[test]
    fn epsilon_window_is_strict() {
        let heavy: BTreeSet<usize> = [0, 1].into();
        assert!(tower_weight_datum(5, &heavy, Some(rat(1, 4))).is_err());
        assert!(tower_weight_datum(5, &heavy, Some(rat(1, 3))).is_err());
        assert!(tower_weight_datum(5, &heavy, Some(rat(2, 7))).is_ok());
    }

    #[test]
    fn heavy_shortcut_matches_exact_definition() {
        for n in 4..=6 {
            let heavy: BTreeSet<usize> = [1, 2].into();
            let w = tower_weight_datum(n, &heavy, None).unwrap();
            for key in enumerate_stable_trees(n, None).unwrap() {
                let t = key.to_tree();
                for v in 0..t.vertex_count() {
                    assert_eq!(
                        is_very_stable(&t, &w, v).unwrap(),
                        heavy_direction_count(&t, &heavy, v) >= 2
                    );
                }
            }
        }
    }

    #[test]
    fn composing_through_uniform_is_the_identity_route() {
        let t = caterpillar();
        let w1 = WeightDatum::uniform_one(8);
        let heavy: BTreeSet<usize> = [0, 1, 2].into();
        let w2 = tower_weight_datum(8, &heavy, None).unwrap();
        assert_eq!(
            compose_reductions(&t, &w1, &w2).unwrap(),
            stabilize(&t, &w2).unwrap()
        );
    }

    #[test]
    fn composing_nested_tower_data() {
        let t = caterpillar();
        let h1: BTreeSet<usize> = [0, 1, 2, 6].into();
        let h2: BTreeSet<usize> = [0, 1].into();
        let w1 = tower_weight_datum(8, &h1, None).unwrap();
        let w2 = tower_weight_datum(8, &h2, None).unwrap();
        assert!(w1.dominates(&w2));
        assert_eq!(
            compose_reductions(&t, &w1, &w2).unwrap(),
            stabilize(&t, &w2).unwrap()
        );
    }

    #[test]
    fn incomparable_weights_are_rejected() {
        let h1: BTreeSet<usize> = [0, 1].into();
        let h2: BTreeSet<usize> = [3, 4].into();
        let w1 = tower_weight_datum(5, &h1, None).unwrap();
        let w2 = tower_weight_datum(5, &h2, None).unwrap();
        let t = MarkedTree::one_vertex(5);
        assert_eq!(
            compose_reductions(&t, &w1, &w2).unwrap_err(),
            WeightError::NotComparable(3)
        );
    }

    #[test]
    fn kernel_strata_for_a_small_tower() {
        let heavy: BTreeSet<usize> = [1, 2].into();
        let w = tower_weight_datum(5, &heavy, None).unwrap();
        let k1 = kernel_strata(5, &w, 1).unwrap();
        assert_eq!(k1.len(), 1);
        assert_eq!(k1[0].splits().iter().next().unwrap(), &vec![1, 2]);
        assert!(kernel_strata(5, &w, 0).unwrap().is_empty());
    }

    #[test]
    fn weight_validation() {
        assert_eq!(
            WeightDatum::new(vec![rat(1, 2); 4]).unwrap_err(),
            WeightError::TotalTooSmall("2".into())
        );
        assert_eq!(
            WeightDatum::new(vec![rat(3, 2), rat(1, 1), rat(1, 1)]).unwrap_err(),
            WeightError::OutOfRange(0)
        );
    }
}
