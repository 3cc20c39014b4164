//! The cyclic Fock space of type B: deformed inner products, the commutation
//! relation, the exclusion principle, and the word formula connecting the
//! operators with pair-partition combinatorics.
//!
//! Run with `cargo run --example fock_space`.

use hyperoct::fock::{
    adjoint_check, apply_word, combinatorial_word, commutation_check, create, deformed_inner,
    exclusion_norms, generic_vectors, symmetrizer_decomposition_check, FockVector,
};
use hyperoct::pairpart::Eps;
use hyperoct::poly::BivarPoly;
use hyperoct::scalar::format_rational;
use num::rational::BigRational;
use num::One;

fn main() {
    let qp = BivarPoly::qp();
    let qm = BivarPoly::qm();

    // norms of the identical-particle chain as polynomials
    println!("squared norms of the n-particle chain states:");
    for n in 1..=3usize {
        let e: FockVector<BivarPoly> = FockVector::basis(1, vec![0; 2 * n]);
        println!("  n = {n}: {}", deformed_inner(&e, &e, &qp, &qm));
    }

    println!("\ncommutation relation on all basis vectors (d=2, levels <= 2): {}",
        commutation_check(2, 2));
    println!("adjoint identity: {}", adjoint_check(2, 2));
    println!(
        "symmetrizer decomposition at levels 1..3: {}",
        (1..=3).all(|n| symmetrizer_decomposition_check(2, n))
    );

    // exclusion principle: at q+ = -1/(M+N) at most M identical particles fit
    for (m, n) in [(1u64, 1u64), (2, 1), (3, 1)] {
        let norms: Vec<String> = exclusion_norms(m, n).iter().map(format_rational).collect();
        println!("exclusion M={m} N={n}: norms^2 = [{}]", norms.join(", "));
    }

    // a creation/annihilation word evaluated by operators and by the
    // combinatorial formula
    let d = 2;
    let [a, b, c, _] = generic_vectors(d);
    let pairs = vec![(a, b.clone()), (b, c.clone()), (c.clone(), c)];
    let eps = [Eps::Star, Eps::Star, Eps::One];
    let lhs: FockVector<BivarPoly> = apply_word(&eps, &pairs, d, &qp, &qm);
    let rhs = combinatorial_word(&eps, &pairs, d, &qp, &qm);
    println!("\nword b b* b* on the vacuum: operator route == combinatorial route: {}", lhs == rhs);

    // one explicit creation
    let x = vec![BigRational::one(), BigRational::one()];
    let v: FockVector<BivarPoly> = create(&x, &x, &FockVector::vacuum(d));
    println!("b*(x,x) vacuum has {} basis terms at level 1", v.levels().map(|(_, t)| t.len()).sum::<usize>());
}
