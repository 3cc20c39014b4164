//! The tensor representation realizing the signed reflection function as a
//! normalized character: signed permutation matrices on `(C^{M+N})^{tensor n}`.
//!
//! Run with `cargo run --example schur_weyl`.

use hyperoct::group::{cycle_type, elements, Convention, Reflection};
use hyperoct::schur_weyl::{expected_trace, rep_matrix, verify_character, verify_homomorphism, RepConfig};

fn main() {
    let cfg = RepConfig::new(2, 1, 1, 2);
    println!(
        "V has dimension {} (M = {}, N = {}), W has dimension {}",
        cfg.dim_v(),
        cfg.m,
        cfg.n_minus,
        cfg.dim()
    );
    println!(
        "induced parameters: q+ = {}, q- = {}",
        cfg.q_plus(),
        cfg.q_minus()
    );

    let long = Reflection::Long(1, 2).to_perm(2);
    let m = rep_matrix(&long, &cfg).unwrap();
    println!(
        "\nlong reflection: trace {} over dimension {} gives normalized trace {}/{}",
        m.trace(),
        cfg.dim(),
        m.trace(),
        cfg.dim()
    );
    assert_eq!(m.trace(), expected_trace(&long, &cfg));

    let short = Reflection::Short(1).to_perm(2);
    let m = rep_matrix(&short, &cfg).unwrap();
    println!("short reflection: trace {}", m.trace());

    println!("\nwhole-group checks for small configurations:");
    for (m, n_minus, eps) in [(1, 1, 1i8), (2, 1, 1), (2, 1, -1), (2, 2, -1)] {
        let cfg = RepConfig::new(m, n_minus, eps, 2);
        let hom = verify_homomorphism(&cfg, 50, 0).unwrap();
        let chr = verify_character(&cfg).unwrap();
        println!("  M={m} N={n_minus} eps={eps:+}: homomorphism {hom}, character formula {chr}");
    }

    // traces are constant on conjugacy classes
    let cfg = RepConfig::new(2, 1, -1, 2);
    let mut traces = std::collections::BTreeMap::new();
    for g in elements(2) {
        let t = cycle_type(&g, Convention::Padded);
        traces.insert(t, rep_matrix(&g, &cfg).unwrap().trace());
    }
    println!("\ntraces by class (M=2, N=1, eps=-1):");
    for (t, tr) in traces {
        println!("  {t}: {tr}");
    }
}
