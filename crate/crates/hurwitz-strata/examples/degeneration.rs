//! Degenerates every monodromy class of the cubic portrait over one
//! boundary divisor and tallies which combinatorial type each class hits.
//! The tallies reproduce the enumeration weights of the types.

use hurwitz_strata::hurwitz::cubic_portrait;
use hurwitz_strata::{
    braid_orbits, degeneration_census, enumerate_stable_trees, enumerate_types_over,
};

fn main() {
    let fm = cubic_portrait().full_marking();
    let n = fm.datum.branch_count();
    let branch_labels = fm.datum.branch_labels().to_vec();
    let point_labels = fm.datum.point_labels().to_vec();

    let key = enumerate_stable_trees(n, Some(n - 4))
        .expect("marking is large enough")
        .into_iter()
        .next()
        .expect("five branch points have divisor strata");
    let tau = key.to_tree();
    let sides: Vec<String> = key
        .to_labels(&branch_labels)
        .iter()
        .map(|side| side.join(","))
        .collect();
    println!("divisor {}:", sides.join(" | "));

    let orbits = braid_orbits(&fm, None).expect("census fits in memory");
    println!("{} monodromy classes degenerate as:", orbits.classes.len());
    let census =
        degeneration_census(&orbits.classes, &tau, &fm).expect("classes match the divisor");
    for (ty, members) in &census {
        let source: Vec<String> = ty
            .sigma
            .canonical_key()
            .to_labels(&point_labels)
            .iter()
            .map(|side| side.join(","))
            .collect();
        println!(
            "  {} classes -> type with degrees {:?}, source {}",
            members.len(),
            ty.d_verts,
            source.join(" | "),
        );
    }

    let types = enumerate_types_over(&tau, &fm).expect("divisor tree matches the datum");
    println!();
    println!("direct enumeration of the same divisor:");
    for wt in &types {
        println!("  weight {} for type with degrees {:?}", wt.weight, wt.ty.d_verts);
    }
}
