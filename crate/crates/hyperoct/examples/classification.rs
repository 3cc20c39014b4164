//! The positive-definiteness classification: extreme points live on the
//! discrete grid `q+ = eps/(M+N)`, `q- = (M-N)/(M+N)` plus the degenerate
//! segment `q+ = 0`, `|q-| <= 1`. Verdicts are cross-checked against exact
//! Gram matrices and negative witnesses.
//!
//! Run with `cargo run --example classification`.

use hyperoct::chars::{classify, gram_psd, hirai_matches_phi, Classification};
use hyperoct::scalar::{format_rational, rat};

fn main() {
    let grid = [
        (rat(1, 3), rat(1, 3)),
        (rat(1, 2), rat(0, 1)),
        (rat(-1, 4), rat(0, 1)),
        (rat(0, 1), rat(1, 2)),
        (rat(0, 1), rat(3, 2)),
        (rat(1, 3), rat(0, 1)),
        (rat(2, 5), rat(0, 1)),
    ];
    for (qp, qm) in &grid {
        let verdict = classify(qp, qm);
        let gram3 = gram_psd(3, qp, qm);
        let desc = match &verdict {
            Classification::Extreme { m, n, eps } => {
                format!("extreme character, M={m} N={n} eps={eps:+}")
            }
            Classification::Degenerate { .. } => "degenerate family (q+ = 0)".to_string(),
            Classification::NotPd { witness } => match witness {
                Some((lp, lm)) => format!("not positive definite, witness ({lp}, {lm})"),
                None => "not positive definite".to_string(),
            },
        };
        println!(
            "q+ = {:>5}, q- = {:>4}: {desc}; Gram on B(3) psd: {gram3}",
            format_rational(qp),
            format_rational(qm),
        );
    }

    // the extreme points coincide with the known extreme characters of the
    // infinite group
    println!();
    for (m, n, eps) in [(2u64, 1u64, 1i8), (2, 1, -1), (1, 1, 1)] {
        println!(
            "flat parameter family M={m} N={n} eps={eps:+} matches phi on B(4): {}",
            hirai_matches_phi(m, n, eps, 4)
        );
    }
}
