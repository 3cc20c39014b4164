//! Moments of the deformed Gaussian distribution along five independent
//! routes, classical specializations, and the discrete-support certificate.
//!
//! Run with `cargo run --example moments`.

use hyperoct::moments::{
    cross_check, drake_equidistribution, hankel_atom_check, jacobi_moment, specializations,
};

fn main() {
    println!("even moments as bivariate polynomials:");
    for k in 1..=3 {
        println!("  m_{} = {}", 2 * k, jacobi_moment(2 * k));
    }

    println!("\nfive-route cross-check up to order 8:");
    for row in cross_check(8) {
        println!(
            "  order {}: {}",
            row.order,
            if row.all_equal() { "all routes agree" } else { "MISMATCH" }
        );
    }

    println!("\nclassical specializations:");
    for row in specializations(5) {
        println!(
            "  n = {}: catalan-dilation {}, (2n)!/n! = {}, 2^n C_n = {}, count = {}",
            row.n, row.catalan_dilation_ok, row.at_x2_y2, row.at_x2_y0, row.total_count
        );
    }

    println!("\nequidistribution of the three matching statistics:");
    for n in 1..=5 {
        println!("  n = {n}: {}", drake_equidistribution(n));
    }

    println!("\ndiscrete support at the negative extreme points:");
    for (m, n) in [(1u64, 1u64), (2, 1), (3, 2)] {
        let (s1, s2, ok) = hankel_atom_check(m, n);
        println!(
            "  M={m} N={n}: Hankel sign of order {} is {s1}, of order {} is {s2} -> {} atoms: {ok}",
            m + 1,
            m + 2,
            m + 1
        );
    }
}
