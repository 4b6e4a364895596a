//! Reduces every five-point boundary stratum under the two-heavy-point
//! weight datum and lists the kernel of the reduction in each grade.

use std::collections::BTreeSet;

use hurwitz_strata::{enumerate_stable_trees, kernel_strata, stabilize, tower_weight_datum};

fn main() {
    let n = 5;
    let labels: Vec<String> = ["a", "b", "c", "d", "e"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let heavy: BTreeSet<usize> = [0, 1].into_iter().collect();
    let datum = tower_weight_datum(n, &heavy, None).expect("weight datum is admissible");
    println!(
        "weights: {}",
        datum
            .weights()
            .iter()
            .map(|w| w.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    );

    println!();
    println!("stratum -> reduced stratum (image dimension):");
    for key in enumerate_stable_trees(n, None).expect("marking is large enough") {
        let reduced = stabilize(&key.to_tree(), &datum).expect("reduction exists");
        let show = |splits: Vec<Vec<String>>| {
            let sides: Vec<String> = splits.iter().map(|side| side.concat()).collect();
            if sides.is_empty() {
                "interior".to_string()
            } else {
                sides.join(" | ")
            }
        };
        println!(
            "  {:<16} -> {:<16} ({})",
            show(key.to_labels(&labels)),
            show(reduced.quotient_key().to_labels(&labels)),
            reduced.image_dimension,
        );
    }

    println!();
    for k in 0..=n - 3 {
        let kernel = kernel_strata(n, &datum, k).expect("weights match marking");
        let shown: Vec<String> = kernel
            .iter()
            .map(|key| {
                key.to_labels(&labels)
                    .iter()
                    .map(|side| side.concat())
                    .collect::<Vec<_>>()
                    .join(" | ")
            })
            .collect();
        println!("kernel in grade {k}: [{}]", shown.join(", "));
    }
}
