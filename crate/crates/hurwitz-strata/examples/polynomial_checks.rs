//! For data with a fully ramified branch point, every degenerate cover has
//! a distinguished vertex chain over infinity, and each remaining component
//! meets it the way a polynomial component must. This sweeps the small
//! fully marked data and checks that structure on one of them in detail.

use hurwitz_strata::hurwitz::{cubic_portrait, sweep_fully_marked_data};
use hurwitz_strata::{
    check_polynomial_components, enumerate_stable_trees, enumerate_types_over, infinity_vertices,
};

fn main() {
    let data = sweep_fully_marked_data(3, 5);
    let with_target = data
        .iter()
        .filter(|d| d.fully_ramified_target().is_some())
        .count();
    println!(
        "sweep of degree <= 3, branch count <= 5: {} data, {} with a fully ramified branch point",
        data.len(),
        with_target
    );

    let datum = cubic_portrait();
    let fm = datum.full_marking();
    let b_inf = datum
        .fully_ramified_target()
        .expect("the cubic portrait is fully ramified over one branch point");
    println!();
    println!(
        "cubic portrait: fully ramified over {}",
        datum.branch_label(b_inf)
    );

    let n = datum.branch_count();
    let branch_labels = datum.branch_labels().to_vec();
    let mut checked = 0;
    for key in enumerate_stable_trees(n, Some(n - 4)).expect("marking is large enough") {
        let tau = key.to_tree();
        let types = enumerate_types_over(&tau, &fm).expect("divisor tree matches the datum");
        for wt in &types {
            let inf = infinity_vertices(&wt.ty, &fm).expect("some vertex lies over infinity");
            check_polynomial_components(&wt.ty, &fm)
                .expect("every component is a polynomial component");
            checked += 1;
            if checked <= 3 {
                let sides: Vec<String> = key
                    .to_labels(&branch_labels)
                    .iter()
                    .map(|side| side.join(","))
                    .collect();
                println!(
                    "  over {}: point a_inf on source vertex {}, target vertex chain ends at {}",
                    sides.join(" | "),
                    inf.v_inf,
                    inf.w_inf,
                );
            }
        }
    }
    println!("checked {checked} types over every divisor: all polynomial components");
}
