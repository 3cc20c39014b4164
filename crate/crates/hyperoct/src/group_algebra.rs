//! The group algebra of `B(n)` over the bivariate polynomial ring, and the
//! factorization of the signed reflection function into rank-by-rank
//! jump factors.

use crate::group::{all_points, elements, phi_of, Reflection, SignedPermutation};
use num::One;
use crate::poly::BivarPoly;
use num::Zero;
use std::collections::HashMap;

/// Finitely supported sum of group elements with polynomial coefficients.
#[derive(Clone, Debug)]
pub struct GroupAlgebraElement {
    n: usize,
    coeffs: HashMap<SignedPermutation, BivarPoly>,
}

impl GroupAlgebraElement {
    pub fn zero(n: usize) -> Self {
        GroupAlgebraElement {
            n,
            coeffs: HashMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::basis(SignedPermutation::identity(n))
    }

    pub fn basis(g: SignedPermutation) -> Self {
        Self::term(g, BivarPoly::one())
    }

    pub fn term(g: SignedPermutation, c: BivarPoly) -> Self {
        let n = g.rank();
        let mut coeffs = HashMap::new();
        if !c.is_zero() {
            coeffs.insert(g, c);
        }
        GroupAlgebraElement { n, coeffs }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn support_size(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, g: &SignedPermutation) -> BivarPoly {
        self.coeffs.get(g).cloned().unwrap_or_else(BivarPoly::zero)
    }

    fn insert(&mut self, g: SignedPermutation, c: BivarPoly) {
        if c.is_zero() {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.coeffs.entry(g) {
            Entry::Occupied(mut e) => {
                let v = std::mem::take(e.get_mut()) + c;
                // drop exact cancellations so equality is support-wise
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add(mut self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n);
        for (g, c) in &rhs.coeffs {
            self.insert(g.clone(), c.clone());
        }
        self
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n);
        let mut out = Self::zero(self.n);
        for (g, cg) in &self.coeffs {
            for (h, ch) in &rhs.coeffs {
                out.insert(g.compose(h).unwrap(), cg.clone() * ch.clone());
            }
        }
        out
    }

    pub fn scale(mut self, c: &BivarPoly) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        for v in self.coeffs.values_mut() {
            *v = std::mem::take(v) * c.clone();
        }
        self
    }

    pub fn equals(&self, rhs: &Self) -> bool {
        self.n == rhs.n
            && self.coeffs.len() == rhs.coeffs.len()
            && self
                .coeffs
                .iter()
                .all(|(g, c)| rhs.coeffs.get(g) == Some(c))
    }
}

/// `J_i^+ = sum over j in [±(i-1)] of (j i)(-j -i)`, a sum of `2(i-1)` long
/// reflections, as an element of the algebra of `B(n)`.
pub fn j_plus(i: usize, n: usize) -> GroupAlgebraElement {
    let mut out = GroupAlgebraElement::zero(n);
    for j in all_points(i - 1) {
        let refl = Reflection::long(j, i as i32).to_perm(n);
        out = out.add(&GroupAlgebraElement::basis(refl));
    }
    out
}

/// `J_i^- = (-i i)`, the short reflection at `i`.
pub fn j_minus(i: usize, n: usize) -> GroupAlgebraElement {
    GroupAlgebraElement::basis(Reflection::Short(i as i32).to_perm(n))
}

/// Both sides of the rank-`n` factorization identity:
/// `sum over B(n) of phi(s) s` versus the product of the jump factors
/// `(1 + q+ J_i^+ + q- J_i^-)` for `i = n, n-1, ..., 1`.
pub fn factorization_sides(n: usize) -> (GroupAlgebraElement, GroupAlgebraElement) {
    let lhs = elements(n).into_iter().fold(
        GroupAlgebraElement::zero(n),
        |acc, g| {
            let phi = phi_of(&g, &BivarPoly::qp(), &BivarPoly::qm());
            acc.add(&GroupAlgebraElement::term(g, phi))
        },
    );
    let mut rhs = GroupAlgebraElement::one(n);
    for i in (1..=n).rev() {
        let factor = GroupAlgebraElement::one(n)
            .add(&j_plus(i, n).scale(&BivarPoly::qp()))
            .add(&j_minus(i, n).scale(&BivarPoly::qm()));
        rhs = rhs.mul(&factor);
    }
    (lhs, rhs)
}

/// Checks the factorization identity at rank `n` by exact coefficient-wise
/// comparison. Rank 0 is the scalar identity `1 = 1`.
pub fn factorization_identity(n: usize) -> bool {
    let (lhs, rhs) = factorization_sides(n);
    lhs.equals(&rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Reflection;
    use crate::scalar::rat_int;

    #[test]
    fn rank_one_identity_by_hand() {
        let (lhs, rhs) = factorization_sides(1);
        // both sides are id + q- (1 -1)
        let id = SignedPermutation::identity(1);
        let flip = Reflection::Short(1).to_perm(1);
        for side in [&lhs, &rhs] {
            assert_eq!(side.support_size(), 2);
            assert_eq!(side.coeff(&id), BivarPoly::one());
            assert_eq!(side.coeff(&flip), BivarPoly::qm());
        }
        assert!(lhs.equals(&rhs));
    }

    #[test]
    fn identity_holds_up_to_rank_three() {
        for n in 0..=3 {
            assert!(factorization_identity(n), "rank {n}");
        }
    }

    #[test]
    fn rhs_support_is_the_whole_group() {
        let (_, rhs) = factorization_sides(3);
        assert_eq!(rhs.support_size(), 48);
        let (lhs, rhs) = factorization_sides(2);
        assert_eq!(lhs.support_size(), 8);
        assert_eq!(rhs.support_size(), 8);
    }

    #[test]
    fn algebra_is_associative_on_samples() {
        let a = GroupAlgebraElement::term(
            SignedPermutation::from_word(vec![2, -1]).unwrap(),
            BivarPoly::qp(),
        );
        let b = GroupAlgebraElement::one(2).add(&j_minus(2, 2).scale(&BivarPoly::qm()));
        let c = j_plus(2, 2);
        let left = a.mul(&b).mul(&c);
        let right = a.mul(&b.mul(&c));
        assert!(left.equals(&right));
        let _ = rat_int(0);
    }
}
