//! Computes the classical relations among boundary divisor classes and the
//! rank of the divisor class group they cut out.

use hurwitz_strata::keel_divisor_relations;

fn main() {
    for n in 4..=7 {
        let rel = keel_divisor_relations(n).expect("four or more marked points");
        println!(
            "n = {n}: {} boundary divisors, relation rank {}, quotient rank {}",
            rel.basis.len(),
            rel.relation_rank,
            rel.quotient_rank,
        );
    }
}
