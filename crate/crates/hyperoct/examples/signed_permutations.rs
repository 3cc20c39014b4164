//! Group arithmetic in the permutation and signed models, cycle types,
//! reflection lengths, and minimal non-mixing factorizations.
//!
//! Run with `cargo run --example signed_permutations`.

use hyperoct::group::{
    cycle_type, minimal_nonmixing_factorization, reflection_lengths, Convention, Reflection,
    SignedPermutation,
};
use hyperoct::poly::BivarPoly;

fn main() {
    // the element with word (-2, -4, -5, 1, 3, 6), i.e. signed model
    // (1,-1,1,-1,-1,1; (124)(35)(6))
    let s = SignedPermutation::from_word(vec![-2, -4, -5, 1, 3, 6]).unwrap();
    let (signs, sigma) = s.to_signed_model();
    println!("word            : {:?}", s.word());
    println!("signed model    : signs {signs:?}, unsigned one-line {sigma:?}");

    let reduced = cycle_type(&s, Convention::Reduced);
    let padded = cycle_type(&s, Convention::Padded);
    println!("cycle type      : reduced {reduced}, padded {padded}");

    let (long, short) = reflection_lengths(&s);
    println!("reflection length: {long} long + {short} short = {}", long + short);
    println!(
        "phi             : {}",
        reduced.phi(&BivarPoly::qp(), &BivarPoly::qm())
    );

    println!("\nminimal non-mixing factorization:");
    let refls = minimal_nonmixing_factorization(&s);
    let mut product = SignedPermutation::identity(6);
    for r in &refls {
        match r {
            Reflection::Long(a, b) => println!("  long  ({a} {b})(-{a} -{b})"),
            Reflection::Short(i) => println!("  short ({i} -{i})"),
        }
        product = product.compose(&r.to_perm(6)).unwrap();
    }
    assert_eq!(product, s);
    println!("product of the {} reflections recovers the element", refls.len());

    // class sizes by the centraliser formula
    println!("\nconjugacy classes of B(3):");
    for t in hyperoct::group::CycleType::all_padded(3) {
        println!("  {t}: size {}", t.class_size(3));
    }
}
