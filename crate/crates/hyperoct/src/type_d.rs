//! The index-two subgroup of even sign changes: membership, conjugacy-class
//! splitting, and the positive-definiteness classification of the restricted
//! reflection function.

use crate::chars::{classify, Classification};
use crate::group::{cycle_type, elements, Convention, CycleType, Reflection, SignedPermutation};
use crate::partition::{partition_pairs_of_total, Partition};
use num::rational::BigRational;
use num::{One, Signed, Zero};

/// Membership: the product of all signs is `+1`, equivalently the number of
/// negative cycles is even.
pub fn is_in_d(s: &SignedPermutation) -> bool {
    let (g, _) = s.to_signed_model();
    g.iter().product::<i8>() == 1
}

pub fn elements_d(n: usize) -> Vec<SignedPermutation> {
    elements(n).into_iter().filter(is_in_d).collect()
}

/// One conjugacy class of the subgroup.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DClass {
    /// padded label inherited from the ambient group
    pub label: CycleType,
    /// `Some(0)` / `Some(1)` tag the two halves of a split class, in the
    /// deterministic order of their minimal representatives
    pub split: Option<u8>,
    pub size: usize,
    pub representative: SignedPermutation,
}

/// Conjugacy classes of the subgroup by brute-force orbit enumeration.
/// An ambient class splits in two exactly when it has no negative cycles and
/// all positive cycle lengths are even.
pub fn classes_d(n: usize) -> Vec<DClass> {
    let els = elements_d(n);
    let index: std::collections::HashMap<&SignedPermutation, usize> =
        els.iter().zip(0..).collect();
    // orbit generators: adjacent transpositions plus one mixed long reflection
    let mut gens = Vec::new();
    for i in 1..n as i32 {
        gens.push(Reflection::Long(i, i + 1).to_perm(n));
    }
    if n >= 2 {
        gens.push(Reflection::Long(1, -2).to_perm(n));
    }
    let mut class_of = vec![usize::MAX; els.len()];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for start in 0..els.len() {
        if class_of[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut orbit = vec![start];
        class_of[start] = id;
        let mut frontier = vec![start];
        while let Some(i) = frontier.pop() {
            for h in &gens {
                let conj = els[i].conjugate_by(h).unwrap();
                let j = index[&conj];
                if class_of[j] == usize::MAX {
                    class_of[j] = id;
                    orbit.push(j);
                    frontier.push(j);
                }
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }

    // group orbits by ambient label; duplicated labels are split classes
    let mut by_label: std::collections::BTreeMap<CycleType, Vec<&Vec<usize>>> = Default::default();
    for orbit in &orbits {
        let label = cycle_type(&els[orbit[0]], Convention::Padded);
        by_label.entry(label).or_default().push(orbit);
    }
    let mut out = Vec::new();
    for (label, group) in by_label {
        assert!(group.len() <= 2, "a class splits into at most two");
        let mut group = group;
        group.sort_by_key(|orbit| orbit[0]);
        let split = group.len() == 2;
        for (tag, orbit) in group.into_iter().enumerate() {
            out.push(DClass {
                label: label.clone(),
                split: if split { Some(tag as u8) } else { None },
                size: orbit.len(),
                representative: els[orbit[0]].clone(),
            });
        }
    }
    out
}

/// Predicate for the ambient classes that split.
pub fn label_splits(label: &CycleType) -> bool {
    label.rho_minus.is_empty() && label.rho_plus.parts().iter().all(|&p| p % 2 == 0)
}

/// Symmetrized multiplicity of the unordered pair `{lambda, mu}` in the
/// restricted expansion at `q+ = q- = q`.
pub fn coefficient_d(lam: &Partition, mu: &Partition, q: &BigRational) -> BigRational {
    crate::chars::coefficient_b(lam, mu).eval(q, q)
        + crate::chars::coefficient_b(mu, lam).eval(q, q)
}

/// Classification verdict for the restricted reflection function.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ClassificationD {
    /// `q = 1/(2N+1)` for an integer `N`, or `q = 0`
    Pd { odd_inverse: Option<i64> },
    NotPd {
        witness: Option<(Partition, Partition)>,
    },
}

impl ClassificationD {
    pub fn is_pd(&self) -> bool {
        matches!(self, ClassificationD::Pd { .. })
    }
}

/// The restriction is positive definite exactly for `q = 0` or `1/q` an odd
/// integer. Witnesses come from scanning the symmetrized coefficients.
pub fn classify_d(q: &BigRational) -> ClassificationD {
    classify_d_with_bound(q, crate::chars::DEFAULT_WITNESS_BOUND)
}

pub fn classify_d_with_bound(q: &BigRational, bound: usize) -> ClassificationD {
    if q.is_zero() {
        return ClassificationD::Pd { odd_inverse: None };
    }
    let inv = q.recip();
    if inv.is_integer() {
        let v: i64 = {
            use num::ToPrimitive;
            inv.to_integer().to_i64().unwrap()
        };
        if v.rem_euclid(2) == 1 {
            return ClassificationD::Pd {
                odd_inverse: Some(v),
            };
        }
    }
    ClassificationD::NotPd {
        witness: find_witness_d(q, bound),
    }
}

/// First unordered pair with a negative symmetrized coefficient, scanning by
/// total size.
pub fn find_witness_d(q: &BigRational, bound: usize) -> Option<(Partition, Partition)> {
    for total in 1..=bound {
        for (lam, mu) in partition_pairs_of_total(total) {
            if coefficient_d(&lam, &mu, q).is_negative() {
                return Some((lam, mu));
            }
        }
    }
    None
}

/// Consistency of the closed-form verdict with the coefficient scan up to
/// the given total size.
pub fn classify_d_agrees_with_scan(q: &BigRational, scan_bound: usize) -> bool {
    let verdict = classify_d_with_bound(q, scan_bound);
    let witness = find_witness_d(q, scan_bound);
    match verdict {
        ClassificationD::Pd { .. } => witness.is_none(),
        ClassificationD::NotPd { .. } => witness.is_some(),
    }
}

/// At `q = 1/(2N+1)` the ambient classification is extreme with `M = N + 1`.
pub fn ambient_extreme_for_odd_inverse(n: u64) -> bool {
    let q = BigRational::new(BigInt::one(), BigInt::from(2 * n + 1));
    classify(&q, &q)
        == Classification::Extreme {
            m: n + 1,
            n,
            eps: 1,
        }
}

use num::bigint::BigInt;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};

    #[test]
    fn membership_and_order() {
        let s = SignedPermutation::from_word(vec![-1, -2]).unwrap();
        assert!(is_in_d(&s));
        let s = SignedPermutation::from_word(vec![-1, 2]).unwrap();
        assert!(!is_in_d(&s));
        for n in 1..=5usize {
            let expected = (1usize << (n - 1)) * (1..=n).product::<usize>();
            assert_eq!(elements_d(n).len(), expected, "order of the subgroup at rank {n}");
        }
    }

    #[test]
    fn long_reflections_lie_in_d() {
        for r in crate::group::reflections(3) {
            let p = r.to_perm(3);
            assert_eq!(is_in_d(&p), r.is_long());
        }
        let _ = Reflection::Short(1);
    }

    #[test]
    fn rank_two_classes_split() {
        let classes = classes_d(2);
        // the abelian group of order 4: four singleton classes
        assert_eq!(classes.len(), 4);
        assert!(classes.iter().all(|c| c.size == 1));
        let split: Vec<_> = classes.iter().filter(|c| c.split.is_some()).collect();
        assert_eq!(split.len(), 2);
        for c in &split {
            assert_eq!(c.label.rho_plus, Partition::new(vec![2]));
            assert!(c.label.rho_minus.is_empty());
        }
    }

    #[test]
    fn splitting_exactly_on_even_positive_labels() {
        for n in 1..=4usize {
            let classes = classes_d(n);
            let mut seen: std::collections::BTreeMap<CycleType, usize> = Default::default();
            for c in &classes {
                *seen.entry(c.label.clone()).or_default() += 1;
            }
            for (label, count) in seen {
                let expected = if label_splits(&label) { 2 } else { 1 };
                assert_eq!(count, expected, "label {label} at rank {n}");
            }
            // sizes add up to the subgroup order
            let total: usize = classes.iter().map(|c| c.size).sum();
            assert_eq!(total, elements_d(n).len());
        }
    }

    #[test]
    fn phi_constant_on_split_classes() {
        // the restricted function phi_{q,q} is inherited from ambient classes,
        // so both halves of a split class carry the same value
        let q = rat(1, 3);
        for c in classes_d(4) {
            let expected = c.label.phi(&q, &q);
            let t = cycle_type(&c.representative, Convention::Reduced);
            assert_eq!(t.phi(&q, &q), expected);
        }
    }

    #[test]
    fn classify_d_examples() {
        assert!(classify_d(&rat(1, 3)).is_pd());
        assert!(classify_d(&rat(0, 1)).is_pd());
        assert!(classify_d(&rat(1, 1)).is_pd());
        assert!(classify_d(&rat(-1, 1)).is_pd());
        assert!(classify_d(&rat(-1, 3)).is_pd());
        match classify_d(&rat(1, 2)) {
            ClassificationD::NotPd { witness: Some(_) } => {}
            other => panic!("expected a witness at q = 1/2, got {other:?}"),
        }
        assert!(!classify_d(&rat(1, 4)).is_pd());
        assert!(!classify_d(&rat(2, 3)).is_pd());
    }

    #[test]
    fn scan_agreement_on_grid() {
        for q in [
            rat(0, 1),
            rat(1, 1),
            rat(-1, 1),
            rat(1, 2),
            rat(-1, 2),
            rat(1, 3),
            rat(-1, 3),
            rat(1, 4),
            rat(-1, 4),
            rat(1, 5),
            rat(-1, 5),
        ] {
            assert!(classify_d_agrees_with_scan(&q, 8), "q = {q}");
        }
    }

    #[test]
    fn ambient_consistency() {
        for n in 0..=3u64 {
            assert!(ambient_extreme_for_odd_inverse(n));
        }
        let _ = rat_int(0);
    }
}
