//! Hurwitz data: marked branched-cover combinatorics of degree `d`.
//!
//! A [`HurwitzDatum`] records marked source points `A` with their images in
//! a branch set `B` and local ramification multiplicities, together with a
//! full branching profile (a partition of `d`) over every point of `B`. Two
//! conditions are enforced at construction: the global ramification count
//! (the profile defects must sum to `2d - 2`, so the source is a sphere) and
//! fiberwise consistency (the marked multiplicities over each branch point
//! must embed into its profile). A datum is *fully marked* when the
//! embedding is onto; [`HurwitzDatum::full_marking`] completes any datum by
//! appending synthetic points.

use num_bigint::BigUint;
use num_traits::One;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HurwitzError {
    #[error("degree must be at least 1")]
    DegreeZero,
    #[error("marked point label {0:?} appears more than once")]
    DuplicatePointLabel(String),
    #[error("branch label {0:?} appears more than once")]
    DuplicateBranchLabel(String),
    #[error("need at least 3 marked points, got {0}")]
    TooFewPoints(usize),
    #[error("need at least 3 branch points, got {0}")]
    TooFewBranchPoints(usize),
    #[error("point {point:?} maps to {target:?}, which has no branching profile")]
    UnknownTarget { point: String, target: String },
    #[error("profile over {branch:?} is not a partition of the degree")]
    NotAPartition { branch: String },
    #[error("multiplicity of point {0:?} is not in 1..=degree")]
    MultiplicityOutOfRange(String),
    #[error("profile defects sum to {total}, expected {expected}")]
    GlobalRamificationCount { total: usize, expected: usize },
    #[error(
        "marked multiplicities over {branch:?} use value {value} more often than its profile"
    )]
    ProfileOverflow { branch: String, value: usize },
}

/// A degree-`d` cover datum: marked points with targets and multiplicities,
/// plus a branching profile over every branch point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HurwitzDatum {
    degree: usize,
    a_labels: Vec<String>,
    b_labels: Vec<String>,
    target: Vec<usize>,
    rm: Vec<usize>,
    profiles: Vec<Vec<usize>>,
}

impl HurwitzDatum {
    /// Builds a datum. `points` lists `(label, target label, multiplicity)`
    /// in marking order; `profiles` gives the partition of the degree over
    /// each branch label. Branch points are ordered by label.
    pub fn new(
        degree: usize,
        points: &[(&str, &str, usize)],
        profiles: &[(&str, &[usize])],
    ) -> Result<Self, HurwitzError> {
        if degree == 0 {
            return Err(HurwitzError::DegreeZero);
        }
        let mut b_labels: Vec<String> = profiles.iter().map(|(b, _)| b.to_string()).collect();
        b_labels.sort();
        for pair in b_labels.windows(2) {
            if pair[0] == pair[1] {
                return Err(HurwitzError::DuplicateBranchLabel(pair[0].clone()));
            }
        }
        if b_labels.len() < 3 {
            return Err(HurwitzError::TooFewBranchPoints(b_labels.len()));
        }
        let b_index: BTreeMap<&str, usize> = b_labels
            .iter()
            .enumerate()
            .map(|(i, b)| (b.as_str(), i))
            .collect();
        let mut sorted_profiles = vec![Vec::new(); b_labels.len()];
        for (b, parts) in profiles {
            let mut p: Vec<usize> = parts.to_vec();
            p.sort_unstable_by(|x, y| y.cmp(x));
            if p.iter().any(|&x| x == 0) || p.iter().sum::<usize>() != degree {
                return Err(HurwitzError::NotAPartition { branch: b.to_string() });
            }
            sorted_profiles[b_index[b]] = p;
        }
        let defect: usize = sorted_profiles.iter().map(|p| degree - p.len()).sum();
        if defect != 2 * degree - 2 {
            return Err(HurwitzError::GlobalRamificationCount {
                total: defect,
                expected: 2 * degree - 2,
            });
        }
        if points.len() < 3 {
            return Err(HurwitzError::TooFewPoints(points.len()));
        }
        let mut seen = BTreeSet::new();
        let mut a_labels = Vec::new();
        let mut target = Vec::new();
        let mut rm = Vec::new();
        for &(a, b, m) in points {
            if !seen.insert(a.to_string()) {
                return Err(HurwitzError::DuplicatePointLabel(a.to_string()));
            }
            let bi = *b_index
                .get(b)
                .ok_or_else(|| HurwitzError::UnknownTarget {
                    point: a.to_string(),
                    target: b.to_string(),
                })?;
            if m == 0 || m > degree {
                return Err(HurwitzError::MultiplicityOutOfRange(a.to_string()));
            }
            a_labels.push(a.to_string());
            target.push(bi);
            rm.push(m);
        }
        let datum = HurwitzDatum {
            degree,
            a_labels,
            b_labels,
            target,
            rm,
            profiles: sorted_profiles,
        };
        for b in 0..datum.b_labels.len() {
            datum.check_fiber(b)?;
        }
        Ok(datum)
    }

    fn check_fiber(&self, b: usize) -> Result<(), HurwitzError> {
        let counts = value_counts(&self.profiles[b]);
        let marked = value_counts(&self.fiber_multiplicities(b));
        for (&value, &m) in &marked {
            if counts.get(&value).copied().unwrap_or(0) < m {
                return Err(HurwitzError::ProfileOverflow {
                    branch: self.b_labels[b].clone(),
                    value,
                });
            }
        }
        Ok(())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn point_count(&self) -> usize {
        self.a_labels.len()
    }

    pub fn branch_count(&self) -> usize {
        self.b_labels.len()
    }

    pub fn point_label(&self, a: usize) -> &str {
        &self.a_labels[a]
    }

    pub fn point_labels(&self) -> &[String] {
        &self.a_labels
    }

    pub fn branch_label(&self, b: usize) -> &str {
        &self.b_labels[b]
    }

    pub fn branch_labels(&self) -> &[String] {
        &self.b_labels
    }

    /// Branch index the `a`-th marked point maps to.
    pub fn target(&self, a: usize) -> usize {
        self.target[a]
    }

    pub fn multiplicity(&self, a: usize) -> usize {
        self.rm[a]
    }

    /// Profile over branch point `b`, parts descending.
    pub fn profile(&self, b: usize) -> &[usize] {
        &self.profiles[b]
    }

    /// Marked points over `b`, ascending.
    pub fn fiber(&self, b: usize) -> Vec<usize> {
        (0..self.target.len()).filter(|&a| self.target[a] == b).collect()
    }

    fn fiber_multiplicities(&self, b: usize) -> Vec<usize> {
        self.fiber(b).into_iter().map(|a| self.rm[a]).collect()
    }

    /// True iff the marked multiplicities over every branch point exhaust
    /// its profile.
    pub fn is_fully_marked(&self) -> bool {
        (0..self.b_labels.len())
            .all(|b| value_counts(&self.profiles[b]) == value_counts(&self.fiber_multiplicities(b)))
    }

    /// True iff the marked points and the branch points carry the same
    /// label set, so the datum describes a self-map portrait.
    pub fn is_portrait(&self) -> bool {
        let a: BTreeSet<&str> = self.a_labels.iter().map(String::as_str).collect();
        let b: BTreeSet<&str> = self.b_labels.iter().map(String::as_str).collect();
        a == b
    }

    /// For a portrait, the self-map as indices into the marking.
    pub fn portrait_map(&self) -> Option<Vec<usize>> {
        if !self.is_portrait() {
            return None;
        }
        let index: BTreeMap<&str, usize> = self
            .a_labels
            .iter()
            .enumerate()
            .map(|(i, a)| (a.as_str(), i))
            .collect();
        Some(
            (0..self.a_labels.len())
                .map(|a| index[self.b_labels[self.target[a]].as_str()])
                .collect(),
        )
    }

    /// Completes the datum by appending one synthetic point for every
    /// unmarked profile part, in branch-label order and descending part
    /// order. The original points keep their positions at the front.
    pub fn full_marking(&self) -> FullyMarked {
        let mut existing: BTreeSet<String> = self.a_labels.iter().cloned().collect();
        let mut datum = self.clone();
        for b in 0..self.b_labels.len() {
            let mut counts = value_counts(&self.profiles[b]);
            for &m in &self.fiber_multiplicities(b) {
                *counts.get_mut(&m).expect("fiber embeds") -= 1;
            }
            let mut j = 0usize;
            let mut missing: Vec<usize> = Vec::new();
            for (&value, &c) in counts.iter().rev() {
                for _ in 0..c {
                    missing.push(value);
                }
            }
            for value in missing {
                let label = loop {
                    j += 1;
                    let candidate = format!("{}~{}", self.b_labels[b], j);
                    if !existing.contains(&candidate) {
                        break candidate;
                    }
                };
                existing.insert(label.clone());
                datum.a_labels.push(label);
                datum.target.push(b);
                datum.rm.push(value);
            }
        }
        FullyMarked {
            original_count: self.a_labels.len(),
            datum,
        }
    }

    /// First branch point (in label order) whose whole fiber is a single
    /// point of full multiplicity, if any.
    pub fn fully_ramified_target(&self) -> Option<usize> {
        (0..self.b_labels.len()).find(|&b| self.profiles[b] == vec![self.degree])
    }

    /// Total number of critical points across all fibers, marked or not:
    /// profile parts of size at least 2.
    pub fn total_critical(&self) -> usize {
        self.profiles
            .iter()
            .map(|p| p.iter().filter(|&&x| x >= 2).count())
            .sum()
    }

    /// Checks the descent conditions for a portrait: a fully ramified
    /// periodic point must exist, and branching must be confined to either
    /// one further critical point or to marked periodic points only.
    pub fn check_descent(&self) -> Result<DescentReport, DescentError> {
        let map = self.portrait_map().ok_or(DescentError::NotAPortrait)?;
        if self.degree < 2 {
            return Err(DescentError::DegreeTooSmall);
        }
        let periodic = periodic_points(&map);
        let mut candidates: Vec<usize> = (0..map.len())
            .filter(|&a| self.rm[a] == self.degree && periodic[a])
            .collect();
        candidates.sort_by(|&x, &y| self.a_labels[x].cmp(&self.a_labels[y]));
        let p_infinity = *candidates
            .first()
            .ok_or(DescentError::NoFullyRamifiedPeriodic)?;
        let mut cycle = vec![p_infinity];
        let mut cur = map[p_infinity];
        while cur != p_infinity {
            cycle.push(cur);
            cur = map[cur];
        }
        let total_critical = self.total_critical();
        let marked_critical = (0..map.len()).filter(|&a| self.rm[a] >= 2).count();
        let single_other_critical = total_critical == 2;
        if !single_other_critical {
            if total_critical != marked_critical {
                return Err(DescentError::UnmarkedCriticals {
                    total: total_critical,
                    marked: marked_critical,
                });
            }
            let mut critical: Vec<usize> = (0..map.len()).filter(|&a| self.rm[a] >= 2).collect();
            critical.sort_by(|&x, &y| self.a_labels[x].cmp(&self.a_labels[y]));
            if let Some(&a) = critical.iter().find(|&&a| !periodic[a]) {
                return Err(DescentError::NonPeriodicCritical {
                    point: self.a_labels[a].clone(),
                });
            }
        }
        Ok(DescentReport {
            cycle_length: cycle.len(),
            p_infinity,
            cycle,
            total_critical,
            marked_critical,
            single_other_critical,
        })
    }
}

/// Partitions of `n` with parts descending, in reverse-lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn fill(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            fill(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    fill(n, n, &mut Vec::new(), &mut out);
    out
}

/// Every fully marked datum with degree at most `d_max` and between 3 and
/// `b_max` branch points: all profile assignments meeting the global
/// ramification count, with one marked point per profile part. Branch
/// points are labeled `b1, b2, ..`; the point for the `j`-th part over
/// `bi` is `bi.j`.
pub fn sweep_fully_marked_data(d_max: usize, b_max: usize) -> Vec<HurwitzDatum> {
    let mut out = Vec::new();
    for degree in 1..=d_max {
        let parts_menu = partitions(degree);
        for branches in 3..=b_max {
            let mut choice = vec![0usize; branches];
            loop {
                let defect: usize = choice
                    .iter()
                    .map(|&c| degree - parts_menu[c].len())
                    .sum();
                if defect == 2 * degree - 2 {
                    let b_labels: Vec<String> =
                        (1..=branches).map(|i| format!("b{}", i)).collect();
                    let mut points: Vec<(String, String, usize)> = Vec::new();
                    for (i, &c) in choice.iter().enumerate() {
                        for (j, &part) in parts_menu[c].iter().enumerate() {
                            points.push((
                                format!("{}.{}", b_labels[i], j + 1),
                                b_labels[i].clone(),
                                part,
                            ));
                        }
                    }
                    let point_refs: Vec<(&str, &str, usize)> = points
                        .iter()
                        .map(|(a, b, m)| (a.as_str(), b.as_str(), *m))
                        .collect();
                    let profile_refs: Vec<(&str, &[usize])> = choice
                        .iter()
                        .enumerate()
                        .map(|(i, &c)| (b_labels[i].as_str(), parts_menu[c].as_slice()))
                        .collect();
                    let datum = HurwitzDatum::new(degree, &point_refs, &profile_refs)
                        .expect("sweep data are valid by construction");
                    debug_assert!(datum.is_fully_marked());
                    out.push(datum);
                }
                // Advance the mixed-radix profile choice.
                let mut pos = 0;
                while pos < branches {
                    choice[pos] += 1;
                    if choice[pos] < parts_menu.len() {
                        break;
                    }
                    choice[pos] = 0;
                    pos += 1;
                }
                if pos == branches {
                    break;
                }
            }
        }
    }
    out
}

fn value_counts(values: &[usize]) -> BTreeMap<usize, usize> {
    let mut counts = BTreeMap::new();
    for &v in values {
        *counts.entry(v).or_insert(0usize) += 1;
    }
    counts
}

fn periodic_points(map: &[usize]) -> Vec<bool> {
    let n = map.len();
    let mut periodic = vec![false; n];
    for start in 0..n {
        // After n steps every walk has entered its terminal cycle.
        let mut cur = start;
        for _ in 0..n {
            cur = map[cur];
        }
        let entry = cur;
        loop {
            periodic[cur] = true;
            cur = map[cur];
            if cur == entry {
                break;
            }
        }
    }
    periodic
}

/// A datum completed by synthetic points, remembering how many of the
/// points are original.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FullyMarked {
    pub datum: HurwitzDatum,
    pub original_count: usize,
}

impl FullyMarked {
    /// Synthetic points over `b` with multiplicity `m` are interchangeable;
    /// the degree of the marking-forgetful map is the product of the
    /// factorials of their counts.
    pub fn forget_degree(&self) -> BigUint {
        let mut counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for a in self.original_count..self.datum.point_count() {
            *counts
                .entry((self.datum.target(a), self.datum.multiplicity(a)))
                .or_insert(0) += 1;
        }
        let mut deg = BigUint::one();
        for &c in counts.values() {
            for f in 2..=c {
                deg *= BigUint::from(f);
            }
        }
        deg
    }

    /// Indices of the original points in the completed datum.
    pub fn kept(&self) -> Vec<usize> {
        (0..self.original_count).collect()
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DescentError {
    #[error("datum is not a portrait: marked points and branch points differ")]
    NotAPortrait,
    #[error("descent needs degree at least 2")]
    DegreeTooSmall,
    #[error("no fully ramified periodic point")]
    NoFullyRamifiedPeriodic,
    #[error("{total} critical points but only {marked} are marked")]
    UnmarkedCriticals { total: usize, marked: usize },
    #[error("marked critical point {point:?} is not periodic")]
    NonPeriodicCritical { point: String },
}

/// The outcome of a successful descent check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentReport {
    /// Index of the fully ramified periodic point, first by label.
    pub p_infinity: usize,
    /// Its orbit, in iteration order.
    pub cycle: Vec<usize>,
    pub cycle_length: usize,
    pub total_critical: usize,
    pub marked_critical: usize,
    /// True when branching consists of the fully ramified cycle point plus
    /// exactly one further critical point.
    pub single_other_critical: bool,
}

/// The degree-3 self-map portrait used throughout the examples and tests: a
/// noncritical 2-cycle `h0 <-> h1` and a 3-cycle `t0 -> t1 -> t2 -> t0`
/// containing both fully ramified points (`t2` over `t0` and `t0` over
/// `t1`).
pub fn cycle_portrait() -> HurwitzDatum {
    HurwitzDatum::new(
        3,
        &[
            ("h0", "h1", 1),
            ("h1", "h0", 1),
            ("t0", "t1", 3),
            ("t1", "t2", 1),
            ("t2", "t0", 3),
        ],
        &[
            ("h0", &[1, 1, 1]),
            ("h1", &[1, 1, 1]),
            ("t0", &[3]),
            ("t1", &[3]),
            ("t2", &[1, 1, 1]),
        ],
    )
    .expect("portrait datum is valid")
}

/// The degree-2 self-map portrait with fixed fully ramified points `pinf`
/// and `q` and a marked 2-cycle `u <-> v`.
pub fn square_portrait() -> HurwitzDatum {
    HurwitzDatum::new(
        2,
        &[
            ("pinf", "pinf", 2),
            ("q", "q", 2),
            ("u", "v", 1),
            ("v", "u", 1),
        ],
        &[
            ("pinf", &[2]),
            ("q", &[2]),
            ("u", &[1, 1]),
            ("v", &[1, 1]),
        ],
    )
    .expect("portrait datum is valid")
}

/// The degree-2 running-example portrait: `pinf` is fully ramified over `q`
/// on the 2-cycle `pinf <-> q`, `v` is the second point over `pinf`, and the
/// remaining critical point (over `u`) is unmarked.
pub fn quadratic_portrait() -> HurwitzDatum {
    HurwitzDatum::new(
        2,
        &[
            ("pinf", "q", 2),
            ("q", "pinf", 1),
            ("u", "v", 1),
            ("v", "pinf", 1),
        ],
        &[
            ("pinf", &[1, 1]),
            ("q", &[2]),
            ("u", &[2]),
            ("v", &[1, 1]),
        ],
    )
    .expect("portrait datum is valid")
}

/// The degree-3 running-example portrait on five points: `pinf` is fully
/// ramified over `q` on the 2-cycle `pinf <-> q`, the fiber over `pinf` is
/// exhausted by `q`, `u`, `v`, the point `w` is fixed, and the second
/// critical point (over `u`) is unmarked.
pub fn cubic_portrait() -> HurwitzDatum {
    HurwitzDatum::new(
        3,
        &[
            ("pinf", "q", 3),
            ("q", "pinf", 1),
            ("u", "pinf", 1),
            ("v", "pinf", 1),
            ("w", "w", 1),
        ],
        &[
            ("pinf", &[1, 1, 1]),
            ("q", &[3]),
            ("u", &[3]),
            ("v", &[1, 1, 1]),
            ("w", &[1, 1, 1]),
        ],
    )
    .expect("portrait datum is valid")
}

/// The degree-3 self-map portrait with a fully ramified 2-cycle
/// `h0 <-> h1` and a noncritical marked 3-cycle.
pub fn inverse_cube_portrait() -> HurwitzDatum {
    HurwitzDatum::new(
        3,
        &[
            ("h0", "h1", 3),
            ("h1", "h0", 3),
            ("t0", "t1", 1),
            ("t1", "t2", 1),
            ("t2", "t0", 1),
        ],
        &[
            ("h0", &[3]),
            ("h1", &[3]),
            ("t0", &[1, 1, 1]),
            ("t1", &[1, 1, 1]),
            ("t2", &[1, 1, 1]),
        ],
    )
    .expect("portrait datum is valid")
}

/// A degree-3 abstract datum on eleven marked points: four simply critical
/// branch points and one unramified one. Fully marked from the start, with
/// no fully ramified branch point.
pub fn eleven_point_datum() -> HurwitzDatum {
    let points: Vec<(String, String, usize)> = (1..=11)
        .map(|i| {
            let (b, m) = match i {
                1..=8 => (format!("b{}", (i + 1) / 2), if i % 2 == 1 { 2 } else { 1 }),
                _ => ("b5".to_string(), 1),
            };
            (format!("a{:02}", i), b, m)
        })
        .collect();
    let refs: Vec<(&str, &str, usize)> = points
        .iter()
        .map(|(a, b, m)| (a.as_str(), b.as_str(), *m))
        .collect();
    HurwitzDatum::new(
        3,
        &refs,
        &[
            ("b1", &[2, 1]),
            ("b2", &[2, 1]),
            ("b3", &[2, 1]),
            ("b4", &[2, 1]),
            ("b5", &[1, 1, 1]),
        ],
    )
    .expect("datum is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eleven_point_datum_is_fully_marked() {
        let d = eleven_point_datum();
        assert!(d.is_fully_marked());
        assert!(!d.is_portrait());
        assert_eq!(d.fully_ramified_target(), None);
        assert_eq!(d.total_critical(), 4);
        let full = d.full_marking();
        assert_eq!(full.datum, d);
        assert_eq!(full.forget_degree(), BigUint::from(1u32));
    }

    #[test]
    fn sweep_counts_match_hand_enumeration() {
        // Per-branch ramification defects sum to 2d - 2.  d = 1: one datum per
        // branch count (3).  d = 2: choose the two critical branches
        // (3 + 6 + 10 = 19).  d = 3: defect vectors over {0, 1, 2} summing to
        // 4 give 6 + 19 + 45 = 70.
        let data = sweep_fully_marked_data(3, 5);
        assert_eq!(data.len(), 92);
        assert!(data.iter().all(|h| h.is_fully_marked()));
        let static_poly = data
            .iter()
            .filter(|h| h.fully_ramified_target().is_some())
            .count();
        // Only the d = 3 data with every profile (2, 1) lack a fully
        // ramified branch: one at four branch points, five at five.
        assert_eq!(static_poly, 86);
        let d2_single: Vec<_> = data
            .iter()
            .filter(|h| h.degree() == 2 && h.branch_count() == 3)
            .collect();
        assert_eq!(d2_single.len(), 3);
        for h in d2_single {
            assert_eq!(h.point_count(), 4);
        }
    }

    #[test]
    fn partitions_are_complete_and_descending() {
        assert_eq!(partitions(1), vec![vec![1]]);
        assert_eq!(
            partitions(4),
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
        assert_eq!(partitions(7).len(), 15);
    }

    #[test]
    fn ramification_count_is_enforced() {
        let err = HurwitzDatum::new(
            2,
            &[("a", "x", 2), ("b", "y", 1), ("c", "z", 1)],
            &[("x", &[2]), ("y", &[1, 1]), ("z", &[1, 1])],
        )
        .unwrap_err();
        assert_eq!(
            err,
            HurwitzError::GlobalRamificationCount {
                total: 1,
                expected: 2
            }
        );
    }

    #[test]
    fn fiber_overflow_is_enforced() {
        let err = HurwitzDatum::new(
            2,
            &[("a", "x", 2), ("b", "x", 1), ("c", "y", 2), ("d", "z", 1)],
            &[("x", &[2]), ("y", &[2]), ("z", &[1, 1])],
        )
        .unwrap_err();
        assert_eq!(
            err,
            HurwitzError::ProfileOverflow {
                branch: "x".into(),
                value: 1
            }
        );
    }

    #[test]
    fn full_marking_of_the_cycle_portrait() {
        let full = cycle_portrait().full_marking();
        assert_eq!(full.original_count, 5);
        assert_eq!(full.datum.point_count(), 11);
        assert_eq!(full.forget_degree(), BigUint::from(8u32));
        assert_eq!(full.datum.point_label(5), "h0~1");
        assert_eq!(full.datum.point_label(6), "h0~2");
        assert!(full.datum.is_fully_marked());
        assert!(!full.datum.is_portrait());
    }

    #[test]
    fn full_marking_of_the_square_portrait() {
        let full = square_portrait().full_marking();
        assert_eq!(full.datum.point_count(), 6);
        assert_eq!(full.forget_degree(), BigUint::from(1u32));
        assert_eq!(full.datum.point_label(4), "u~1");
        assert_eq!(full.datum.point_label(5), "v~1");
    }

    #[test]
    fn cycle_portrait_descends() {
        let d = cycle_portrait();
        assert_eq!(d.fully_ramified_target(), Some(2));
        let report = d.check_descent().unwrap();
        assert_eq!(d.point_label(report.p_infinity), "t0");
        let labels: Vec<&str> = report.cycle.iter().map(|&a| d.point_label(a)).collect();
        assert_eq!(labels, vec!["t0", "t1", "t2"]);
        assert_eq!(report.cycle_length, 3);
        assert!(report.single_other_critical);
    }

    #[test]
    fn square_portrait_descends_to_a_fixed_point() {
        let report = square_portrait().check_descent().unwrap();
        assert_eq!(report.p_infinity, 0);
        assert_eq!(report.cycle_length, 1);
        assert!(report.single_other_critical);
    }

    #[test]
    fn inverse_cube_portrait_descends_through_its_two_cycle() {
        let d = inverse_cube_portrait();
        let report = d.check_descent().unwrap();
        assert_eq!(d.point_label(report.p_infinity), "h0");
        assert_eq!(report.cycle_length, 2);
        assert_eq!(report.total_critical, 2);
    }

    #[test]
    fn quadratic_portrait_descends_with_an_unmarked_critical_point() {
        let d = quadratic_portrait();
        assert_eq!(d.fully_ramified_target(), Some(1));
        assert_eq!(d.branch_label(1), "q");
        let report = d.check_descent().unwrap();
        assert_eq!(d.point_label(report.p_infinity), "pinf");
        let labels: Vec<&str> = report.cycle.iter().map(|&a| d.point_label(a)).collect();
        assert_eq!(labels, vec!["pinf", "q"]);
        assert_eq!(report.total_critical, 2);
        assert_eq!(report.marked_critical, 1);
        assert!(report.single_other_critical);
        let full = d.full_marking();
        assert_eq!(full.datum.point_count(), 6);
        assert_eq!(full.datum.point_label(4), "u~1");
        assert_eq!(full.datum.multiplicity(4), 2);
        assert_eq!(full.datum.point_label(5), "v~1");
        assert_eq!(full.forget_degree(), BigUint::from(1u32));
    }

    #[test]
    fn cubic_portrait_descends_with_an_unmarked_critical_point() {
        let d = cubic_portrait();
        assert_eq!(d.fully_ramified_target(), Some(1));
        let report = d.check_descent().unwrap();
        assert_eq!(d.point_label(report.p_infinity), "pinf");
        assert_eq!(report.cycle_length, 2);
        assert_eq!(report.total_critical, 2);
        assert!(report.single_other_critical);
        let full = d.full_marking();
        assert_eq!(full.datum.point_count(), 11);
        assert_eq!(full.datum.point_label(5), "u~1");
        assert_eq!(full.datum.multiplicity(5), 3);
        assert_eq!(full.forget_degree(), BigUint::from(12u32));
    }

    #[test]
    fn unramified_cycle_fails_descent() {
        let d = HurwitzDatum::new(
            3,
            &[
                ("c0", "c1", 1),
                ("c1", "c2", 1),
                ("c2", "c3", 1),
                ("c3", "c4", 1),
                ("c4", "c0", 1),
            ],
            &[
                ("c0", &[2, 1]),
                ("c1", &[2, 1]),
                ("c2", &[2, 1]),
                ("c3", &[2, 1]),
                ("c4", &[1, 1, 1]),
            ],
        )
        .unwrap();
        assert_eq!(
            d.check_descent().unwrap_err(),
            DescentError::NoFullyRamifiedPeriodic
        );
    }

    #[test]
    fn unmarked_criticals_fail_descent() {
        let d = HurwitzDatum::new(
            3,
            &[
                ("h0", "h1", 1),
                ("h1", "h0", 1),
                ("t0", "t1", 2),
                ("t1", "t2", 1),
                ("t2", "t0", 3),
            ],
            &[
                ("h0", &[1, 1, 1]),
                ("h1", &[1, 1, 1]),
                ("t0", &[3]),
                ("t1", &[2, 1]),
                ("t2", &[2, 1]),
            ],
        )
        .unwrap();
        assert_eq!(
            d.check_descent().unwrap_err(),
            DescentError::UnmarkedCriticals { total: 3, marked: 2 }
        );
    }

    #[test]
    fn preperiodic_critical_fails_descent() {
        let d = HurwitzDatum::new(
            3,
            &[("p", "p", 3), ("q", "y", 1), ("x", "q", 2), ("y", "y", 2)],
            &[
                ("p", &[3]),
                ("q", &[2, 1]),
                ("x", &[1, 1, 1]),
                ("y", &[2, 1]),
            ],
        )
        .unwrap();
        assert_eq!(
            d.check_descent().unwrap_err(),
            DescentError::NonPeriodicCritical { point: "x".into() }
        );
    }

    #[test]
    fn zero_cover_datum_is_still_a_datum() {
        let d = HurwitzDatum::new(
            4,
            &[("a1", "x", 2), ("a2", "y", 2), ("a3", "z", 3)],
            &[("x", &[2, 2]), ("y", &[2, 2]), ("z", &[3, 1])],
        )
        .unwrap();
        assert!(!d.is_fully_marked());
        assert_eq!(d.full_marking().datum.point_count(), 3 + 1 + 1 + 1);
    }

    #[test]
    fn synthetic_labels_avoid_collisions() {
        let d = HurwitzDatum::new(
            2,
            &[("x~1", "x", 2), ("q", "q", 2), ("u", "x", 1)],
            &[("x", &[2]), ("q", &[2]), ("u", &[1, 1])],
        )
        .unwrap_err();
        // x's profile (2) is already exhausted by the first point; the
        // second point over x overflows.
        assert_eq!(
            d,
            HurwitzError::ProfileOverflow {
                branch: "x".into(),
                value: 1
            }
        );
        let d = HurwitzDatum::new(
            2,
            &[("u~1", "q", 2), ("q", "q", 2), ("u", "u", 1)],
            &[("q", &[2]), ("p", &[2]), ("u", &[1, 1])],
        );
        // q's fiber would hold two points of multiplicity 2.
        assert!(d.is_err());
        let d = HurwitzDatum::new(
            2,
            &[("u~1", "p", 2), ("q", "q", 2), ("u", "u", 1)],
            &[("q", &[2]), ("p", &[2]), ("u", &[1, 1])],
        )
        .unwrap();
        let full = d.full_marking();
        let labels: Vec<&str> = (3..full.datum.point_count())
            .map(|a| full.datum.point_label(a))
            .collect();
        assert_eq!(labels, vec!["u~2"]);
    }
}
