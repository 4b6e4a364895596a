//! The acceptance gate: one test per criterion, each printing a single
//! pass line (visible with `--nocapture`) once its exact checks hold.

use std::collections::BTreeSet;
use std::path::Path;
use std::process::Command;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use hurwitz_strata::hurwitz::{cubic_portrait, quadratic_portrait, sweep_fully_marked_data};
use hurwitz_strata::weights::{heavy_direction_count, very_stable_from_groups};
use hurwitz_strata::{
    compose_reductions, degree_pi_b, enumerate_stable_trees, enumerate_types_over,
    check_polynomial_components, keel_divisor_relations, pushforward_matrix, spectral_radius,
    stabilize, stability_report, tower_weight_datum, Component, HurwitzDatum, MarkedTree,
    WeightDatum,
};

#[test]
fn criterion_1_strata_census() {
    let start = Instant::now();
    let four = enumerate_stable_trees(4, None).unwrap();
    assert_eq!(four.len(), 4);
    let five = enumerate_stable_trees(5, None).unwrap();
    assert_eq!(five.len(), 26);
    let mut by_dim = [0usize; 3];
    for key in &five {
        by_dim[key.dimension()] += 1;
    }
    assert_eq!(by_dim, [15, 10, 1]);
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 1, "took {elapsed:?}");
    println!("criterion 1 (strata census): pass — 4 and 26 (15/10/1) in {elapsed:?}");
}

#[test]
fn criterion_2_heavy_light_equivalence() {
    let start = Instant::now();
    let mut checked = 0u64;
    for n in 4..=7 {
        let trees: Vec<MarkedTree> = enumerate_stable_trees(n, None)
            .unwrap()
            .iter()
            .map(|key| key.to_tree())
            .collect();
        let groups: Vec<Vec<_>> = trees
            .iter()
            .map(|t| (0..t.vertex_count()).map(|v| t.flag_partition(v)).collect())
            .collect();
        for mask in 0u32..(1 << n) {
            if mask.count_ones() < 2 {
                continue;
            }
            let heavy: BTreeSet<usize> = (0..n).filter(|p| mask & (1 << p) != 0).collect();
            let w = tower_weight_datum(n, &heavy, None).unwrap();
            let light_total: BigRational = (0..n)
                .filter(|p| !heavy.contains(p))
                .map(|p| w.get(p).clone())
                .sum();
            assert!(light_total < BigRational::one());
            for (t, per_vertex) in trees.iter().zip(&groups) {
                for (v, group) in per_vertex.iter().enumerate() {
                    let shortcut = heavy_direction_count(t, &heavy, v) >= 2;
                    let general = very_stable_from_groups(group, &w);
                    assert_eq!(
                        shortcut, general,
                        "mismatch at n={n}, heavy={heavy:?}, tree={:?}, vertex={v}",
                        t.canonical_key()
                    );
                    checked += 1;
                }
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 60, "took {elapsed:?}");
    println!(
        "criterion 2 (heavy/light equivalence): pass — {checked} vertex verdicts agree in {elapsed:?}"
    );
}

struct XorShift(u64);

impl XorShift {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }
}

#[test]
fn criterion_3_reduction_laws() {
    let mut rng = XorShift(0x5eed_cafe_f00d_beef);
    let frac = |numer: u64| BigRational::new(BigInt::from(numer), BigInt::from(64u32));
    let mut chains = 0;
    for chain in 0..100u32 {
        let n = 4 + (chain as usize % 3);
        let w1: Vec<BigRational> = (0..n).map(|_| frac(48 + rng.next() % 17)).collect();
        let w2: Vec<BigRational> = w1
            .iter()
            .map(|v| v - frac(rng.next() % 8))
            .collect();
        let w1 = WeightDatum::new(w1).unwrap();
        let w2 = WeightDatum::new(w2).unwrap();
        assert!(w1.dominates(&w2));
        for key in enumerate_stable_trees(n, None).unwrap() {
            let t = key.to_tree();
            for w in [&w1, &w2] {
                let once = stabilize(&t, w).unwrap();
                let twice = stabilize(&once.tree, w).unwrap();
                assert_eq!(twice.quotient_key(), once.quotient_key());
                assert_eq!(twice.kept.len(), once.tree.vertex_count());
                assert_eq!(twice.image_dimension, once.image_dimension);
            }
            assert_eq!(
                compose_reductions(&t, &w1, &w2).unwrap(),
                stabilize(&t, &w2).unwrap(),
            );
        }
        chains += 1;
    }
    println!("criterion 3 (reduction laws): pass — idempotence and composition on {chains} chains");
}

#[test]
fn criterion_4_flatness_consistency() {
    let start = Instant::now();
    let four_branch = HurwitzDatum::new(
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
    .unwrap();
    let eleven = hurwitz_strata::hurwitz::eleven_point_datum();
    for (datum, strata_expected) in [(four_branch, 3), (eleven, 10)] {
        let fm = datum.full_marking();
        let expected = degree_pi_b(&fm, None).unwrap();
        let n = datum.branch_count();
        let keys = enumerate_stable_trees(n, Some(n - 4)).unwrap();
        assert_eq!(keys.len(), strata_expected);
        for key in keys {
            let total: u64 = enumerate_types_over(&key.to_tree(), &fm)
                .unwrap()
                .iter()
                .map(|wt| wt.weight)
                .sum();
            assert_eq!(total, expected, "not flat over {key:?}");
        }
        if datum.branch_count() == 4 {
            assert_eq!(expected, 2);
        } else {
            assert_eq!(expected, 24);
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 300, "took {elapsed:?}");
    println!(
        "criterion 4 (flatness consistency): pass — weights sum to the cover degree over every divisor in {elapsed:?}"
    );
}

#[test]
fn criterion_5_keel_quotient_ranks() {
    let start = Instant::now();
    assert_eq!(keel_divisor_relations(4).unwrap().quotient_rank, 1);
    assert_eq!(keel_divisor_relations(5).unwrap().quotient_rank, 5);
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 1, "took {elapsed:?}");
    println!("criterion 5 (Keel quotient ranks): pass — ranks 1 and 5 in {elapsed:?}");
}

#[test]
fn criterion_6_polynomial_components() {
    let start = Instant::now();
    let data = sweep_fully_marked_data(3, 5);
    let mut data_checked = 0;
    let mut types_checked = 0u64;
    for datum in &data {
        if datum.fully_ramified_target().is_none() {
            continue;
        }
        let fm = datum.full_marking();
        let n = datum.branch_count();
        for key in enumerate_stable_trees(n, None).unwrap() {
            for wt in enumerate_types_over(&key.to_tree(), &fm).unwrap() {
                check_polynomial_components(&wt.ty, &fm).unwrap_or_else(|err| {
                    panic!("counterexample for {datum:?} over {key:?}: {err}")
                });
                types_checked += 1;
            }
        }
        data_checked += 1;
    }
    assert_eq!(data_checked, 86);
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 600, "took {elapsed:?}");
    println!(
        "criterion 6 (polynomial components): pass — {types_checked} types over {data_checked} data in {elapsed:?}"
    );
}

#[test]
fn criterion_7_kernel_invariance_and_stability_job() {
    let start = Instant::now();
    for (name, datum) in [
        ("quadratic", quadratic_portrait()),
        ("cubic", cubic_portrait()),
    ] {
        let rep = stability_report(&datum, None).unwrap();
        assert_eq!(rep.ell, 2, "{name} portrait has a 2-cycle");
        assert_eq!(rep.blocks.len(), datum.branch_count() - 2);
        for block in &rep.blocks {
            assert!(
                block.counterexample.is_none(),
                "{name} portrait fails invariance at k = {}",
                block.k
            );
        }
        assert!(rep.passed());
    }
    for job in ["quadratic_stability.json", "cubic_stability.json"] {
        let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("jobs").join(job);
        let output = Command::new(env!("CARGO_BIN_EXE_hurwitz-strata"))
            .arg("--job")
            .arg(&path)
            .output()
            .expect("stability job binary runs");
        assert_eq!(
            output.status.code(),
            Some(0),
            "stability job {job} exited nonzero: {}",
            String::from_utf8_lossy(&output.stderr)
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 600, "took {elapsed:?}");
    println!(
        "criterion 7 (kernel invariance): pass — both portraits invariant at every grade, jobs exit 0, in {elapsed:?}"
    );
}

#[test]
fn criterion_8_sanity_scalars() {
    let identity = HurwitzDatum::new(
        1,
        &[
            ("a", "a", 1),
            ("b", "b", 1),
            ("c", "c", 1),
            ("d", "d", 1),
            ("e", "e", 1),
        ],
        &[
            ("a", &[1]),
            ("b", &[1]),
            ("c", &[1]),
            ("d", &[1]),
            ("e", &[1]),
        ],
    )
    .unwrap()
    .full_marking();
    for k in 0..=2 {
        let pm = pushforward_matrix(&identity, k, Component::All).unwrap();
        assert!(pm.is_square());
        assert!(pm.anomalies.is_empty());
        for i in 0..pm.matrix.rows() {
            for j in 0..pm.matrix.cols() {
                let expected = if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                };
                assert_eq!(*pm.matrix.get(i, j), expected);
            }
        }
        let radius = spectral_radius(&pm.matrix);
        assert!(radius.is_exact());
        assert_eq!(radius.value, BigRational::one());
    }

    let mut data_checked = 0;
    for datum in sweep_fully_marked_data(3, 5) {
        let fm = datum.full_marking();
        let n = datum.branch_count();
        let m = fm.datum.point_count();
        let expected = degree_pi_b(&fm, None).unwrap();

        // The fundamental-class entry pairs the one-vertex target with the
        // one-vertex source. Every type over the interior is irreducible and
        // fully marked, so nothing dimension-drops and the entry is the
        // total type weight.
        let interior = MarkedTree::build(1, &[], &vec![0; n]).unwrap();
        let mut entry = 0u128;
        for wt in &enumerate_types_over(&interior, &fm).unwrap() {
            assert_eq!(wt.ty.sigma.vertex_count(), 1, "irreducible over interior");
            assert!(wt.weight > 0);
            entry += u128::from(wt.weight);
        }
        assert!(entry > 0, "zero mass for {datum:?}");
        assert_eq!(entry, u128::from(expected));

        // Where the source census stays small, the full matrix at the top
        // target grade must route the same mass through its entries and
        // recorded anomalies.
        if m <= 8 {
            let k = n - 3;
            let pm = pushforward_matrix(&fm, k, Component::All).unwrap();
            assert_eq!(pm.matrix.cols(), 1, "one fundamental-class column");
            assert!(pm.collapsed.is_zero());
            let mut total = pm.column_sum(0);
            for anomaly in &pm.anomalies {
                assert!(anomaly.weight.is_positive());
                assert!(anomaly.weight.denom().is_one());
                total += &anomaly.weight;
            }
            for i in 0..pm.matrix.rows() {
                let cell = pm.matrix.get(i, 0);
                assert!(!cell.is_negative());
                assert!(cell.denom().is_one());
            }
            assert_eq!(total, BigRational::from_integer(BigInt::from(entry)));
        }
        data_checked += 1;
    }
    assert_eq!(data_checked, 92);
    println!(
        "criterion 8 (sanity scalars): pass — identity datum is the identity matrix at radius 1; fundamental-class mass is a positive integer for all {data_checked} sweep data"
    );
}
