//! Counts the boundary strata of the genus-zero moduli space by dimension,
//! then spells out the five-point census stratum by stratum.

use hurwitz_strata::enumerate_stable_trees;

fn main() {
    for n in 4..=7 {
        let keys = enumerate_stable_trees(n, None).expect("marking is large enough");
        let mut by_dim = vec![0usize; n - 2];
        for key in &keys {
            by_dim[key.dimension()] += 1;
        }
        let parts: Vec<String> = by_dim
            .iter()
            .enumerate()
            .map(|(d, c)| format!("dim {d}: {c}"))
            .collect();
        println!("n = {n}: {} strata ({})", keys.len(), parts.join(", "));
    }

    println!();
    println!("all 26 strata on five points:");
    let labels: Vec<String> = ["a", "b", "c", "d", "e"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    for key in enumerate_stable_trees(5, None).expect("marking is large enough") {
        let sides: Vec<String> = key
            .to_labels(&labels)
            .iter()
            .map(|side| side.concat())
            .collect();
        if sides.is_empty() {
            println!("  dim {}  (interior)", key.dimension());
        } else {
            println!("  dim {}  {}", key.dimension(), sides.join(" | "));
        }
    }
}
