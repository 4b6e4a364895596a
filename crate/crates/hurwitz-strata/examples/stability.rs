//! Runs the full algebraic-stability verdict for two portraits: per grade,
//! the kernel of the tower reduction must be invariant under the
//! pushforward, and the quotient action carries a well-defined spectral
//! radius.

use hurwitz_strata::hurwitz::{inverse_cube_portrait, quadratic_portrait};
use hurwitz_strata::{stability_report, HurwitzDatum};

fn show(name: &str, datum: &HurwitzDatum) {
    let rep = stability_report(datum, None).expect("portrait admits the descent route");
    let cycle: Vec<&str> = rep
        .descent
        .cycle
        .iter()
        .map(|&p| datum.point_label(p))
        .collect();
    println!(
        "{name}: cycle {} (ell = {}), heavy {{{}}}",
        cycle.join(" -> "),
        rep.ell,
        rep.heavy
            .iter()
            .map(|&p| datum.point_label(p))
            .collect::<Vec<_>>()
            .join(", "),
    );
    if let Some(note) = &rep.projective_note {
        println!("  {note}");
    }
    for block in &rep.blocks {
        let verdict = match &block.counterexample {
            None => "kernel invariant".to_string(),
            Some(ce) => format!("counterexample at column {:?}", ce.column),
        };
        println!(
            "  grade {}: {} kernel strata, {}; radius {} -> quotient radius {}",
            block.k,
            block.kernel.len(),
            verdict,
            block.radius.value,
            block.quotient_radius.value,
        );
    }
    println!(
        "  overall: {}",
        if rep.passed() { "PASS" } else { "FAIL" }
    );
    println!();
}

fn main() {
    show("quadratic portrait", &quadratic_portrait());
    show("inverse cube portrait", &inverse_cube_portrait());
}
