//! Runs the descent criteria on the bundled portraits: a portrait passes
//! when some marked fully ramified point is periodic and all remaining
//! branching is accounted for.

use hurwitz_strata::hurwitz::{
    cubic_portrait, cycle_portrait, inverse_cube_portrait, quadratic_portrait, square_portrait,
};
use hurwitz_strata::HurwitzDatum;

fn report(name: &str, datum: &HurwitzDatum) {
    print!("{name:<14} ");
    match datum.check_descent() {
        Ok(rep) => {
            let cycle: Vec<&str> = rep.cycle.iter().map(|&p| datum.point_label(p)).collect();
            println!(
                "passes: p_infinity = {}, cycle {} (length {}), {} critical / {} marked{}",
                datum.point_label(rep.p_infinity),
                cycle.join(" -> "),
                rep.cycle_length,
                rep.total_critical,
                rep.marked_critical,
                if rep.single_other_critical {
                    ", single further critical point"
                } else {
                    ""
                },
            );
        }
        Err(err) => println!("fails: {err}"),
    }
}

fn main() {
    report("quadratic", &quadratic_portrait());
    report("cubic", &cubic_portrait());
    report("inverse cube", &inverse_cube_portrait());
    report("cycle", &cycle_portrait());
    report("square", &square_portrait());
}
