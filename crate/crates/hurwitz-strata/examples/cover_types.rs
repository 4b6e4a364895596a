//! Enumerates the combinatorial types of admissible covers degenerating
//! over each boundary divisor of the target space, and checks that their
//! weights always sum to the covering degree (flatness of the census).

use hurwitz_strata::{degree_pi_b, enumerate_stable_trees, enumerate_types_over, HurwitzDatum};

fn main() {
    let datum = HurwitzDatum::new(
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
    .expect("datum satisfies the global ramification count");
    let fm = datum.full_marking();
    let expected = degree_pi_b(&fm, None).expect("census fits in memory");
    println!("degree over branch configurations: {expected}");

    let n = datum.branch_count();
    let branch_labels = datum.branch_labels().to_vec();
    let point_labels = fm.datum.point_labels().to_vec();
    for key in enumerate_stable_trees(n, Some(n - 4)).expect("marking is large enough") {
        let tau = key.to_tree();
        let sides: Vec<String> = key
            .to_labels(&branch_labels)
            .iter()
            .map(|side| side.join(","))
            .collect();
        println!();
        println!("over divisor {}:", sides.join(" | "));
        let types = enumerate_types_over(&tau, &fm).expect("divisor tree matches the datum");
        let mut total = 0;
        for wt in &types {
            total += wt.weight;
            let source: Vec<String> = wt
                .ty
                .sigma
                .canonical_key()
                .to_labels(&point_labels)
                .iter()
                .map(|side| side.join(","))
                .collect();
            let dims = wt.ty.dimension_report().expect("type was validated");
            println!(
                "  weight {}  degrees {:?}  source {}  (dims: source {}, image {})",
                wt.weight,
                wt.ty.d_verts,
                if source.is_empty() {
                    "irreducible".to_string()
                } else {
                    source.join(" | ")
                },
                dims.source,
                dims.image,
            );
        }
        println!(
            "  total {total} -> {}",
            if total == expected { "flat" } else { "NOT FLAT" }
        );
    }
}
