//! Irreducible characters of the hyperoctahedral group and the expansion of
//! the signed reflection function: phi is the character combination whose
//! weights are content products over the labelling diagrams.
//!
//! Run with `cargo run --example character_expansion`.

use hyperoct::chars::{char_b, coefficient_b, verify_rozklad};
use hyperoct::group::CycleType;
use hyperoct::partition::partition_pairs_of_total;

fn main() {
    let n = 2;
    let classes = CycleType::all_padded(n);
    let irreps = partition_pairs_of_total(n);

    println!("character table of B({n}):");
    print!("{:24}", "");
    for rho in &classes {
        print!("{:>14}", rho.to_string());
    }
    println!();
    for (lp, lm) in &irreps {
        print!("{:24}", format!("({lp}, {lm})"));
        for rho in &classes {
            print!("{:>14}", char_b((lp, lm), rho).unwrap());
        }
        println!();
    }

    println!("\nexpansion weights of phi:");
    for (lp, lm) in &irreps {
        println!("  ({lp}, {lm}): {}", coefficient_b(lp, lm));
    }

    for rank in 1..=4 {
        println!("expansion identity at rank {rank}: {}", verify_rozklad(rank));
    }
}
