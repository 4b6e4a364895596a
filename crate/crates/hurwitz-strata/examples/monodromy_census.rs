//! Counts monodromy: the degree of the forgetful map from the space of
//! marked covers to the configuration of branch points, and its pure-braid
//! orbit decomposition, for two bundled data.

use hurwitz_strata::hurwitz::{cubic_portrait, eleven_point_datum};
use hurwitz_strata::{braid_orbits, degree_pi_b, FullyMarked};

fn census(name: &str, fm: &FullyMarked) {
    let degree = degree_pi_b(fm, None).expect("census fits in memory");
    let orbits = braid_orbits(fm, None).expect("census fits in memory");
    println!("{name}:");
    println!(
        "  degree over branch configurations: {degree} ({} conjugation classes)",
        orbits.classes.len()
    );
    for (id, orbit) in orbits.orbits.iter().enumerate() {
        let tuple: Vec<String> = orbit
            .representative
            .perms
            .iter()
            .enumerate()
            .map(|(b, perm)| {
                let labels = &orbit.representative.labels[b];
                // Orbits with equal permutation tuples still differ in which
                // sheet carries each marked point.
                if labels.is_empty() {
                    format!("{}: {}", fm.datum.branch_label(b), perm.cycle_string())
                } else {
                    format!(
                        "{}: {} @ {:?}",
                        fm.datum.branch_label(b),
                        perm.cycle_string(),
                        labels
                    )
                }
            })
            .collect();
        println!(
            "  orbit {id}: {} classes, representative [{}]",
            orbit.classes.len(),
            tuple.join(", ")
        );
    }
    println!();
}

fn main() {
    census("cubic portrait", &cubic_portrait().full_marking());
    census("eleven-point datum", &eleven_point_datum().full_marking());
}
