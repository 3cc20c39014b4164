//! The index-two subgroup of even sign changes: class splitting and the
//! classification of the restricted reflection function.
//!
//! Run with `cargo run --example type_d`.

use hyperoct::scalar::{format_rational, rat};
use hyperoct::type_d::{classes_d, classify_d, elements_d, ClassificationD};

fn main() {
    for n in 2..=4 {
        let classes = classes_d(n);
        let split = classes.iter().filter(|c| c.split.is_some()).count();
        println!(
            "rank {n}: {} elements, {} classes ({} from split ambient classes)",
            elements_d(n).len(),
            classes.len(),
            split
        );
        for c in classes.iter().filter(|c| c.split.is_some()) {
            println!("  split class {} tag {:?}, size {}", c.label, c.split, c.size);
        }
    }

    println!("\nclassification of the restricted reflection function:");
    for q in [
        rat(0, 1),
        rat(1, 1),
        rat(1, 3),
        rat(-1, 3),
        rat(1, 5),
        rat(1, 2),
        rat(1, 4),
        rat(2, 3),
    ] {
        let verdict = classify_d(&q);
        let desc = match &verdict {
            ClassificationD::Pd { odd_inverse } => match odd_inverse {
                Some(v) => format!("positive definite (1/q = {v})"),
                None => "positive definite (q = 0)".to_string(),
            },
            ClassificationD::NotPd { witness } => match witness {
                Some((l, m)) => format!("not positive definite, witness ({l}, {m})"),
                None => "not positive definite".to_string(),
            },
        };
        println!("  q = {:>4}: {desc}", format_rational(&q));
    }
}
