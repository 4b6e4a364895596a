//! Computes pushforward matrices on strata classes: the quadratic portrait
//! in grade zero and the cubic portrait in grade one, with exact spectral
//! radii of the resulting integer matrices.

use hurwitz_strata::hurwitz::{cubic_portrait, quadratic_portrait};
use hurwitz_strata::{pushforward_matrix, spectral_radius, Component, FullyMarked};

fn show(name: &str, fm: &FullyMarked, k: usize) {
    let pm = pushforward_matrix(fm, k, Component::All).expect("grade is in range");
    let branch_labels = fm.datum.branch_labels().to_vec();
    let point_labels = fm.datum.point_labels()[..fm.original_count].to_vec();
    println!("{name}, grade {k}:");
    let render = |key: &hurwitz_strata::CanonicalKey, labels: &[String]| {
        let sides: Vec<String> = key
            .to_labels(labels)
            .iter()
            .map(|side| side.concat())
            .collect();
        sides.join("|")
    };
    let row_names: Vec<String> = pm
        .codomain
        .keys()
        .iter()
        .map(|key| render(key, &point_labels))
        .collect();
    let col_names: Vec<String> = pm
        .domain
        .keys()
        .iter()
        .map(|key| render(key, &branch_labels))
        .collect();
    println!("  columns: {}", col_names.join("  "));
    for (i, name) in row_names.iter().enumerate() {
        let row: Vec<String> = (0..pm.matrix.cols())
            .map(|j| pm.matrix.get(i, j).to_string())
            .collect();
        println!("  {:<12} [{}]", name, row.join(", "));
    }
    println!("  collapsed into lower strata: {}", pm.collapsed);
    println!("  anomalies: {}", pm.anomalies.len());
    if pm.is_square() {
        let radius = spectral_radius(&pm.matrix);
        println!(
            "  spectral radius: {} (bound {}, exact: {})",
            radius.value,
            radius.bound,
            radius.is_exact()
        );
    }
    println!();
}

fn main() {
    show("quadratic portrait", &quadratic_portrait().full_marking(), 0);
    show("cubic portrait", &cubic_portrait().full_marking(), 1);
}
