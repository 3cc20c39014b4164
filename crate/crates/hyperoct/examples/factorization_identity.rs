//! The group-algebra identity behind the signed reflection function: summing
//! `phi(s) s` over the whole group equals the ordered product of jump factors
//! `(1 + q+ J_i^+ + q- J_i^-)`.
//!
//! Run with `cargo run --example factorization_identity`.

use hyperoct::group::SignedPermutation;
use hyperoct::group_algebra::{factorization_sides, j_minus, j_plus};

fn main() {
    for n in 1..=4 {
        let (lhs, rhs) = factorization_sides(n);
        println!(
            "rank {n}: support {} vs {}, equal: {}",
            lhs.support_size(),
            rhs.support_size(),
            lhs.equals(&rhs)
        );
    }

    // a closer look at rank 2
    let (lhs, _) = factorization_sides(2);
    println!("\ncoefficients over B(2):");
    for g in hyperoct::group::elements(2) {
        println!("  {:?} -> {}", g.word(), lhs.coeff(&g));
    }

    // the jump operators themselves
    println!("\nJ_2^+ has {} terms, J_2^- has {} term", j_plus(2, 2).support_size(), j_minus(2, 2).support_size());
    let id = SignedPermutation::identity(2);
    assert!(lhs.coeff(&id).to_string() == "1");
}
