//! Property tests over randomly drawn group elements, partitions and
//! polynomials, plus cross-module invariants that do not belong to any single
//! unit-test suite.

use hyperoct::chars;
use hyperoct::fock;
use hyperoct::group::{
    cycle_type, elements, phi_of, reflection_lengths, Convention, SignedPermutation,
};
use hyperoct::pairpart;
use hyperoct::poly::BivarPoly;
use hyperoct::scalar::{rat, Scalar};
use num::rational::BigRational;
use num::{One, Signed, Zero};
use proptest::prelude::*;

fn arb_rank() -> impl Strategy<Value = usize> {
    1usize..=4
}

fn arb_element() -> impl Strategy<Value = SignedPermutation> {
    arb_rank().prop_flat_map(|n| {
        let size = elements(n).len();
        (Just(n), 0..size).prop_map(|(n, i)| elements(n).swap_remove(i))
    })
}

fn arb_element_pair() -> impl Strategy<Value = (SignedPermutation, SignedPermutation)> {
    arb_rank().prop_flat_map(|n| {
        let size = elements(n).len();
        (Just(n), 0..size, 0..size).prop_map(|(n, i, j)| {
            let els = elements(n);
            (els[i].clone(), els[j].clone())
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn group_axioms((a, b) in arb_element_pair()) {
        let n = a.rank();
        let id = SignedPermutation::identity(n);
        prop_assert_eq!(a.compose(&a.inverse()).unwrap(), id.clone());
        prop_assert_eq!(a.compose(&id).unwrap(), a.clone());
        // (ab)^{-1} = b^{-1} a^{-1}
        let ab = a.compose(&b).unwrap();
        prop_assert_eq!(ab.inverse(), b.inverse().compose(&a.inverse()).unwrap());
    }

    #[test]
    fn signed_model_round_trip(s in arb_element()) {
        let (g, sigma) = s.to_signed_model();
        prop_assert_eq!(SignedPermutation::from_signed_model(&g, &sigma).unwrap(), s);
    }

    #[test]
    fn phi_is_a_class_function((a, h) in arb_element_pair()) {
        let qp = BivarPoly::qp();
        let qm = BivarPoly::qm();
        let conj = a.conjugate_by(&h).unwrap();
        prop_assert_eq!(phi_of(&a, &qp, &qm), phi_of(&conj, &qp, &qm));
        prop_assert_eq!(cycle_type(&a, Convention::Reduced), cycle_type(&conj, Convention::Reduced));
    }

    #[test]
    fn reflection_lengths_sum_to_reflection_length(s in arb_element()) {
        let (lp, lm) = reflection_lengths(&s);
        let refls = hyperoct::group::minimal_nonmixing_factorization(&s);
        prop_assert_eq!(refls.len(), lp + lm);
    }

    #[test]
    fn inverse_preserves_cycle_type(s in arb_element()) {
        prop_assert_eq!(
            cycle_type(&s, Convention::Padded),
            cycle_type(&s.inverse(), Convention::Padded)
        );
    }

    #[test]
    fn poly_ring_axioms(
        a in -5i64..=5, b in -5i64..=5, c in -5i64..=5,
        ea in 0u32..3, eb in 0u32..3
    ) {
        let p = BivarPoly::monomial(ea, eb, rat(a, 1)) + BivarPoly::qp();
        let q = BivarPoly::monomial(eb, ea, rat(b, 1)) + BivarPoly::qm();
        let r = BivarPoly::from_int(c) + BivarPoly::qp() * BivarPoly::qm();
        prop_assert_eq!(p.clone() * q.clone(), q.clone() * p.clone());
        prop_assert_eq!(
            p.clone() * (q.clone() + r.clone()),
            p.clone() * q.clone() + p.clone() * r.clone()
        );
        prop_assert_eq!((p.clone() * q.clone()) * r.clone(), p.clone() * (q * r));
        prop_assert!((p.clone() - p).is_zero());
    }

    #[test]
    fn poly_evaluation_commutes_with_ops(
        n1 in -4i64..=4, d1 in 1i64..=4, n2 in -4i64..=4, d2 in 1i64..=4
    ) {
        let qp = rat(n1, d1);
        let qm = rat(n2, d2);
        let p = BivarPoly::qp() * BivarPoly::qm() + BivarPoly::from_int(3);
        let q = BivarPoly::qm().pow(2) - BivarPoly::qp();
        prop_assert_eq!(
            (p.clone() * q.clone()).eval(&qp, &qm),
            p.eval(&qp, &qm) * q.eval(&qp, &qm)
        );
    }

    #[test]
    fn hat_fixes_noncrossing_partitions(seed in 0usize..200) {
        // hat is the identity on partitions that are already of hat shape:
        // pick one by round-tripping
        let n = 3 + seed % 3;
        let all = pairpart::enumerate(n, false, None);
        let p = &all[seed % all.len()];
        let h1 = pairpart::hat(p);
        // rebuild a partition from the hat and re-hat it
        let mut blocks: Vec<Vec<i32>> = h1.pairs().iter().map(|&(x, y)| vec![x, y]).collect();
        for s in h1.singletons() {
            blocks.push(vec![s]);
        }
        let q = pairpart::SymPairPartition::from_blocks(n, &blocks).unwrap();
        let h2 = pairpart::hat(&q);
        prop_assert_eq!(h1.pairs(), h2.pairs());
    }
}

#[test]
fn gram_entries_are_symmetric() {
    let g = chars::gram_matrix(2, &rat(1, 3), &rat(-1, 2));
    for i in 0..g.len() {
        assert_eq!(g[i][i], BigRational::one());
        for j in 0..g.len() {
            assert_eq!(g[i][j], g[j][i]);
        }
    }
}

#[test]
fn deformed_level_grams_psd_at_extreme_points() {
    // consistency of the Fock inner product with the group Gram verdicts
    for (qp, qm) in [
        (rat(1, 2), rat(0, 1)),
        (rat(1, 3), rat(1, 3)),
        (rat(-1, 3), rat(1, 3)),
        (rat(0, 1), rat(1, 2)),
        (rat(0, 1), rat(-1, 1)),
    ] {
        for level in 1..=3usize {
            assert!(
                fock::level_gram_psd(2, level, &qp, &qm),
                "level {level} at ({qp}, {qm})"
            );
        }
    }
}

#[test]
fn weighted_average_of_phi_is_nonnegative_at_extreme_points() {
    // sum over classes of |C| phi(C) is |B(n)| times the multiplicity of the
    // trivial representation, hence nonnegative at extreme parameters
    use hyperoct::group::CycleType;
    for (qp, qm) in [(rat(1, 2), rat(0, 1)), (rat(1, 3), rat(1, 3)), (rat(-1, 4), rat(0, 1))] {
        for n in 1..=4usize {
            let mut total = BigRational::zero();
            for t in CycleType::all_padded(n) {
                let size = BigRational::from_integer(
                    t.class_size(n).to_string().parse().unwrap(),
                );
                total += size * t.phi(&qp, &qm);
            }
            assert!(!total.is_negative(), "n = {n} at ({qp}, {qm})");
        }
    }
}

#[test]
fn wick_moment_with_orthonormal_frame_counts_colored_pairings() {
    // two orthonormal vectors alternating: only pairings joining equal labels
    // survive, so the moment is the square-norm weighted sub-sum
    let e1 = vec![rat(1, 1), rat(0, 1)];
    let e2 = vec![rat(0, 1), rat(1, 1)];
    let vectors = vec![e1.clone(), e2.clone(), e2, e1];
    let qp = BivarPoly::qp();
    let qm = BivarPoly::qm();
    let m: BivarPoly = pairpart::wick_moment(&vectors, &qp, &qm);
    // pairings must pair positions {1,4} and {2,3}
    assert_eq!(m.eval(&rat(0, 1), &rat(0, 1)), BigRational::one());
    // and the moment is symmetric under swapping the middle labels
    let vectors2 = vec![
        vec![rat(1, 1), rat(0, 1)],
        vec![rat(0, 1), rat(1, 1)],
        vec![rat(1, 1), rat(0, 1)],
        vec![rat(0, 1), rat(1, 1)],
    ];
    let m2: BivarPoly = pairpart::wick_moment(&vectors2, &qp, &qm);
    assert_ne!(m, m2);
}
