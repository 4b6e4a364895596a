//! Monodromy bookkeeping for branched covers: permutation tuples with
//! prescribed cycle types, fully labeled cover counts, conjugation classes,
//! and pure braid orbits.
//!
//! A degree-`d` cover branched over `B` is encoded by one permutation per
//! branch point (in label order) whose product is the identity and whose
//! generated group is transitive. Cycle labelings attach the marked fiber
//! points to cycles of matching length; because fully marked covers are
//! rigid, the number of (tuple, labeling) pairs is `d!` times the cover
//! count, and simultaneous conjugation acts freely on the pairs.

use crate::hurwitz::FullyMarked;
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MonodromyError {
    #[error("tuple enumeration exceeded the budget of {budget}")]
    TupleBudget { budget: u64 },
    #[error("counted {pairs} labeled tuples, not divisible by {order}")]
    NonIntegralCount { pairs: u128, order: u128 },
    #[error("cover counts require a fully marked datum")]
    NotFullyMarked,
}

/// A permutation of `{0, .., d-1}` stored as its image table.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(d: usize) -> Self {
        Perm((0..d).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Self {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            assert!(i < images.len() && !seen[i], "not a permutation");
            seen[i] = true;
        }
        Perm(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// Function composition: `(self . other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Perm(inv)
    }

    /// `g . self . g^{-1}`.
    pub fn conjugate_by(&self, g: &Perm) -> Perm {
        g.compose(self).compose(&g.inverse())
    }

    /// Cycles, each rotated to start at its smallest element, sorted by
    /// that element. Fixed points appear as singleton cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut cycles = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut cur = self.0[start];
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.0[cur];
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Cycle lengths, descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    /// Cycle notation on `1..=d` with fixed points omitted; the identity
    /// prints as `"id"`.
    pub fn cycle_string(&self) -> String {
        let mut out = String::new();
        for cycle in self.cycles() {
            if cycle.len() < 2 {
                continue;
            }
            out.push('(');
            for (i, &x) in cycle.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                out.push_str(&(x + 1).to_string());
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("id");
        }
        out
    }
}

fn all_perms(d: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..d).collect();
    permute(&mut items, 0, &mut out);
    out.sort();
    out
}

fn permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Perm>) {
    if k == items.len() {
        out.push(Perm(items.clone()));
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, out);
        items.swap(k, i);
    }
}

/// All permutations of `{0..d-1}` with the given cycle type, in image-table
/// order.
pub fn perms_of_type(d: usize, cycle_type: &[usize]) -> Vec<Perm> {
    let mut wanted: Vec<usize> = cycle_type.to_vec();
    wanted.sort_unstable_by(|a, b| b.cmp(a));
    all_perms(d)
        .into_iter()
        .filter(|p| p.cycle_type() == wanted)
        .collect()
}

fn transitive(perms: &[&Perm], d: usize) -> bool {
    if d == 0 {
        return false;
    }
    let mut seen = vec![false; d];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    let mut count = 1;
    while let Some(x) = queue.pop_front() {
        for p in perms {
            for y in [p.apply(x), p.inverse().apply(x)] {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    queue.push_back(y);
                }
            }
        }
    }
    count == d
}

/// All tuples with the prescribed cycle types, identity product, and
/// transitive action; the last position is forced as the inverse of the
/// prefix product. `budget` caps the number of accepted tuples.
pub fn enumerate_tuples(
    d: usize,
    types: &[Vec<usize>],
    budget: Option<u64>,
) -> Result<Vec<Vec<Perm>>, MonodromyError> {
    assert!(!types.is_empty());
    let mut candidates: BTreeMap<Vec<usize>, Vec<Perm>> = BTreeMap::new();
    for t in types {
        let mut key = t.clone();
        key.sort_unstable_by(|a, b| b.cmp(a));
        candidates
            .entry(key.clone())
            .or_insert_with(|| perms_of_type(d, &key));
    }
    let mut out = Vec::new();
    let mut stack: Vec<Perm> = Vec::new();
    search_tuples(d, types, &candidates, &mut stack, &Perm::identity(d), budget, &mut out)?;
    Ok(out)
}

fn search_tuples(
    d: usize,
    types: &[Vec<usize>],
    candidates: &BTreeMap<Vec<usize>, Vec<Perm>>,
    stack: &mut Vec<Perm>,
    prefix: &Perm,
    budget: Option<u64>,
    out: &mut Vec<Vec<Perm>>,
) -> Result<(), MonodromyError> {
    if stack.len() == types.len() - 1 {
        let last = prefix.inverse();
        let mut wanted = types[types.len() - 1].clone();
        wanted.sort_unstable_by(|a, b| b.cmp(a));
        if last.cycle_type() == wanted {
            stack.push(last);
            let refs: Vec<&Perm> = stack.iter().collect();
            if transitive(&refs, d) {
                if let Some(b) = budget {
                    if out.len() as u64 >= b {
                        return Err(MonodromyError::TupleBudget { budget: b });
                    }
                }
                out.push(stack.clone());
            }
            stack.pop();
        }
        return Ok(());
    }
    let mut key = types[stack.len()].clone();
    key.sort_unstable_by(|a, b| b.cmp(a));
    for p in &candidates[&key] {
        let next = prefix.compose(p);
        stack.push(p.clone());
        search_tuples(d, types, candidates, stack, &next, budget, out)?;
        stack.pop();
    }
    Ok(())
}

fn factorial(n: usize) -> u128 {
    (2..=n as u128).product::<u128>().max(1)
}

/// Number of cycle labelings per tuple: points of multiplicity `r` over a
/// branch point are assigned bijectively to its `r`-cycles.
pub fn labeling_count(fm: &FullyMarked) -> u128 {
    let d = &fm.datum;
    let mut count = 1u128;
    for b in 0..d.branch_count() {
        let mut by_rm: BTreeMap<usize, usize> = BTreeMap::new();
        for a in d.fiber(b) {
            *by_rm.entry(d.multiplicity(a)).or_insert(0) += 1;
        }
        for &c in by_rm.values() {
            count *= factorial(c);
        }
    }
    count
}

/// Covering degree of the finite flat map from the fully marked cover space
/// to the configuration space of `B`: labeled-tuple pairs divided by `d!`.
pub fn degree_pi_b(fm: &FullyMarked, budget: Option<u64>) -> Result<u64, MonodromyError> {
    if !fm.datum.is_fully_marked() {
        return Err(MonodromyError::NotFullyMarked);
    }
    let d = fm.datum.degree();
    let types: Vec<Vec<usize>> = (0..fm.datum.branch_count())
        .map(|b| fm.datum.profile(b).to_vec())
        .collect();
    let tuples = enumerate_tuples(d, &types, budget)?;
    let pairs = tuples.len() as u128 * labeling_count(fm);
    let order = factorial(d);
    if pairs % order != 0 {
        return Err(MonodromyError::NonIntegralCount { pairs, order });
    }
    Ok((pairs / order) as u64)
}

/// A monodromy tuple together with a cycle labeling: `labels[b][i]` is the
/// index (into `perms[b].cycles()`) of the cycle carrying the `i`-th marked
/// point over branch point `b`, fibers listed in marking order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct LabeledTuple {
    pub perms: Vec<Perm>,
    pub labels: Vec<Vec<usize>>,
}

pub(crate) fn cycle_index_map(old: &Perm, new: &Perm, g: &Perm) -> Vec<usize> {
    let new_cycles = new.cycles();
    let mut position = vec![0usize; old.degree()];
    for (i, c) in new_cycles.iter().enumerate() {
        for &x in c {
            position[x] = i;
        }
    }
    old.cycles().iter().map(|c| position[g.apply(c[0])]).collect()
}

impl LabeledTuple {
    pub fn conjugate_by(&self, g: &Perm) -> LabeledTuple {
        let perms: Vec<Perm> = self.perms.iter().map(|p| p.conjugate_by(g)).collect();
        let labels = self
            .labels
            .iter()
            .zip(self.perms.iter().zip(&perms))
            .map(|(label, (old, new))| {
                let map = cycle_index_map(old, new, g);
                label.iter().map(|&c| map[c]).collect()
            })
            .collect();
        LabeledTuple { perms, labels }
    }

    /// Minimum over all simultaneous conjugations; the class representative.
    pub fn canonical(&self) -> LabeledTuple {
        let d = self.perms[0].degree();
        all_perms(d)
            .iter()
            .map(|g| self.conjugate_by(g))
            .min()
            .expect("at least the identity conjugation")
    }
}

fn labelings_for(fm: &FullyMarked, perm: &Perm, b: usize) -> Vec<Vec<usize>> {
    let datum = &fm.datum;
    let fiber = datum.fiber(b);
    let cycles = perm.cycles();
    let mut by_len: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, c) in cycles.iter().enumerate() {
        by_len.entry(c.len()).or_default().push(i);
    }
    // Assign, point by point, an unused cycle of matching length.
    let mut used = vec![false; cycles.len()];
    let mut current = vec![0usize; fiber.len()];
    let mut out = Vec::new();
    assign_points(datum, &fiber, 0, &by_len, &mut used, &mut current, &mut out);
    out
}

fn assign_points(
    datum: &crate::hurwitz::HurwitzDatum,
    fiber: &[usize],
    i: usize,
    by_len: &BTreeMap<usize, Vec<usize>>,
    used: &mut Vec<bool>,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if i == fiber.len() {
        out.push(current.clone());
        return;
    }
    let r = datum.multiplicity(fiber[i]);
    for &c in by_len.get(&r).into_iter().flatten() {
        if used[c] {
            continue;
        }
        used[c] = true;
        current[i] = c;
        assign_points(datum, fiber, i + 1, by_len, used, current, out);
        used[c] = false;
    }
}

/// All conjugation classes of (tuple, labeling) pairs, canonically
/// represented and sorted. Rigidity of fully marked covers makes the
/// conjugation action free, so the class count equals `degree_pi_b`; this
/// is asserted.
pub fn classes(fm: &FullyMarked, budget: Option<u64>) -> Result<Vec<LabeledTuple>, MonodromyError> {
    if !fm.datum.is_fully_marked() {
        return Err(MonodromyError::NotFullyMarked);
    }
    let d = fm.datum.degree();
    let types: Vec<Vec<usize>> = (0..fm.datum.branch_count())
        .map(|b| fm.datum.profile(b).to_vec())
        .collect();
    let tuples = enumerate_tuples(d, &types, budget)?;
    let mut pairs = 0u128;
    let mut set = BTreeSet::new();
    for tuple in &tuples {
        let mut labelings: Vec<Vec<Vec<usize>>> = vec![Vec::new(); tuple.len()];
        for (b, perm) in tuple.iter().enumerate() {
            labelings[b] = labelings_for(fm, perm, b);
        }
        let mut stack: Vec<Vec<usize>> = Vec::new();
        collect_labelings(tuple, &labelings, &mut stack, &mut set, &mut pairs);
    }
    let order = factorial(d);
    if pairs % order != 0 || set.len() as u128 != pairs / order {
        return Err(MonodromyError::NonIntegralCount { pairs, order });
    }
    Ok(set.into_iter().collect())
}

fn collect_labelings(
    tuple: &[Perm],
    labelings: &[Vec<Vec<usize>>],
    stack: &mut Vec<Vec<usize>>,
    set: &mut BTreeSet<LabeledTuple>,
    pairs: &mut u128,
) {
    if stack.len() == tuple.len() {
        *pairs += 1;
        set.insert(
            LabeledTuple {
                perms: tuple.to_vec(),
                labels: stack.clone(),
            }
            .canonical(),
        );
        return;
    }
    for label in &labelings[stack.len()] {
        stack.push(label.clone());
        collect_labelings(tuple, labelings, stack, set, pairs);
        stack.pop();
    }
}

/// A movable slot during braid twisting: the branch position it currently
/// holds, its permutation, and its cycle labeling.
#[derive(Clone, Debug)]
struct Slot {
    branch: usize,
    perm: Perm,
    label: Vec<usize>,
}

fn twist(slots: &mut [Slot], k: usize) {
    let a = slots[k].clone();
    let b = slots[k + 1].clone();
    let conj = b.perm.conjugate_by(&a.perm);
    let map = cycle_index_map(&b.perm, &conj, &a.perm);
    slots[k] = Slot {
        branch: b.branch,
        label: b.label.iter().map(|&c| map[c]).collect(),
        perm: conj,
    };
    slots[k + 1] = a;
}

fn untwist(slots: &mut [Slot], k: usize) {
    let a = slots[k].clone();
    let b = slots[k + 1].clone();
    let conj = a.perm.conjugate_by(&b.perm.inverse());
    let map = cycle_index_map(&a.perm, &conj, &b.perm.inverse());
    slots[k] = b;
    slots[k + 1] = Slot {
        branch: a.branch,
        label: a.label.iter().map(|&c| map[c]).collect(),
        perm: conj,
    };
}

/// The pure braid generator moving strand `j` next to strand `i`, squaring
/// the adjacent twist there, and returning; positions and cycle types are
/// restored.
pub fn pure_move(lt: &LabeledTuple, i: usize, j: usize) -> LabeledTuple {
    assert!(i < j && j < lt.perms.len());
    let mut slots: Vec<Slot> = lt
        .perms
        .iter()
        .zip(&lt.labels)
        .enumerate()
        .map(|(b, (perm, label))| Slot {
            branch: b,
            perm: perm.clone(),
            label: label.clone(),
        })
        .collect();
    for k in (i + 1..j).rev() {
        twist(&mut slots, k);
    }
    twist(&mut slots, i);
    twist(&mut slots, i);
    for k in i + 1..j {
        untwist(&mut slots, k);
    }
    let mut perms = vec![Perm::identity(0); slots.len()];
    let mut labels = vec![Vec::new(); slots.len()];
    for slot in slots {
        perms[slot.branch] = slot.perm;
        labels[slot.branch] = slot.label;
    }
    LabeledTuple { perms, labels }
}

/// One orbit of conjugation classes under the pure braid moves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    /// Indices into the sorted class list.
    pub classes: Vec<usize>,
    pub representative: LabeledTuple,
}

/// All conjugation classes together with their pure-braid orbits.
#[derive(Clone, Debug)]
pub struct BraidOrbits {
    pub classes: Vec<LabeledTuple>,
    pub orbits: Vec<Orbit>,
}

impl BraidOrbits {
    /// Orbit index containing the given class index.
    pub fn orbit_of(&self, class: usize) -> usize {
        self.orbits
            .iter()
            .position(|o| o.classes.binary_search(&class).is_ok())
            .expect("orbits partition the classes")
    }
}

/// Partitions the conjugation classes into orbits under all pure braid
/// generators; orbits are ordered by their smallest class index.
pub fn braid_orbits(fm: &FullyMarked, budget: Option<u64>) -> Result<BraidOrbits, MonodromyError> {
    let class_list = classes(fm, budget)?;
    let index: BTreeMap<&LabeledTuple, usize> =
        class_list.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let m = fm.datum.branch_count();
    let mut seen = vec![false; class_list.len()];
    let mut orbits = Vec::new();
    for start in 0..class_list.len() {
        if seen[start] {
            continue;
        }
        let mut members = vec![start];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(c) = queue.pop_front() {
            for i in 0..m {
                for j in i + 1..m {
                    let moved = pure_move(&class_list[c], i, j).canonical();
                    let t = index[&moved];
                    if !seen[t] {
                        seen[t] = true;
                        members.push(t);
                        queue.push_back(t);
                    }
                }
            }
        }
        members.sort_unstable();
        orbits.push(Orbit {
            representative: class_list[members[0]].clone(),
            classes: members,
        });
    }
    Ok(BraidOrbits {
        classes: class_list,
        orbits,
    })
}

/// Fully labeled transitive cover count for a single vertex: tuples with
/// the given flag profiles and identity product, weighted by cycle
/// labelings of every flag and divided by `d!`. Zero means the local shape
/// is unrealizable.
pub fn local_cover_count(d: usize, profiles: &[Vec<usize>]) -> u64 {
    let tuples = match enumerate_tuples(d, &profiles.to_vec(), None) {
        Ok(t) => t,
        Err(_) => unreachable!("no budget supplied"),
    };
    let mut labelings = 1u128;
    for p in profiles {
        let mut by_len: BTreeMap<usize, usize> = BTreeMap::new();
        for &part in p {
            *by_len.entry(part).or_insert(0) += 1;
        }
        for &c in by_len.values() {
            labelings *= factorial(c);
        }
    }
    let pairs = tuples.len() as u128 * labelings;
    let order = factorial(d);
    assert!(pairs % order == 0, "labeled local count must divide by d!");
    (pairs / order) as u64
}
