//! Signed permutations, conjugacy invariants and the signed reflection function.
//!
//! An element of the hyperoctahedral group `B(n)` is stored in the permutation
//! model: the images of `1..n` as signed integers, with `s(-i) = -s(i)`
//! implied. The signed model `(g_1,...,g_n; sigma)` is a view derived on
//! demand.

use crate::partition::Partition;
use crate::scalar::Scalar;
use itertools::Itertools;
use num::bigint::BigUint;
use num::One;
use thiserror::Error;

#[derive(Error, Debug, PartialEq, Eq)]
pub enum GroupError {
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("invalid image word: {0}")]
    InvalidWord(String),
}

/// Element of `B(n)` as a bar-equivariant permutation of `{-n..-1, 1..n}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SignedPermutation {
    img: Vec<i32>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            img: (1..=n as i32).collect(),
        }
    }

    /// Builds an element from the word `(s(1), ..., s(n))`.
    pub fn from_word(img: Vec<i32>) -> Result<Self, GroupError> {
        let n = img.len();
        let mut seen = vec![false; n];
        for &v in &img {
            let a = v.unsigned_abs() as usize;
            if v == 0 || a > n || seen[a - 1] {
                return Err(GroupError::InvalidWord(format!("{img:?}")));
            }
            seen[a - 1] = true;
        }
        Ok(SignedPermutation { img })
    }

    pub fn rank(&self) -> usize {
        self.img.len()
    }

    pub fn word(&self) -> &[i32] {
        &self.img
    }

    /// Image of any point of `{-n..-1, 1..n}`.
    pub fn apply(&self, p: i32) -> i32 {
        if p > 0 {
            self.img[(p - 1) as usize]
        } else {
            -self.img[(-p - 1) as usize]
        }
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &v)| v == i as i32 + 1)
    }

    /// Function composition `self . other` (apply `other` first). This agrees
    /// with the wreath-product multiplication of the signed model.
    pub fn compose(&self, other: &Self) -> Result<Self, GroupError> {
        if self.rank() != other.rank() {
            return Err(GroupError::RankMismatch(self.rank(), other.rank()));
        }
        Ok(SignedPermutation {
            img: (1..=self.rank() as i32)
                .map(|i| self.apply(other.apply(i)))
                .collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let n = self.rank();
        let mut img = vec![0; n];
        for i in 1..=n as i32 {
            let j = self.apply(i);
            if j > 0 {
                img[(j - 1) as usize] = i;
            } else {
                img[(-j - 1) as usize] = -i;
            }
        }
        SignedPermutation { img }
    }

    /// `h self h^{-1}`.
    pub fn conjugate_by(&self, h: &Self) -> Result<Self, GroupError> {
        h.compose(self)?.compose(&h.inverse())
    }

    /// The signed model `(g_1,...,g_n; sigma)`: `g_v` is the sign with which
    /// the value `v` occurs in the word, `sigma` the unsigned permutation.
    pub fn to_signed_model(&self) -> (Vec<i8>, Vec<usize>) {
        let n = self.rank();
        let mut g = vec![1i8; n];
        let mut sigma = vec![0usize; n];
        for (i, &v) in self.img.iter().enumerate() {
            sigma[i] = v.unsigned_abs() as usize;
            g[v.unsigned_abs() as usize - 1] = if v > 0 { 1 } else { -1 };
        }
        (g, sigma)
    }

    pub fn from_signed_model(g: &[i8], sigma: &[usize]) -> Result<Self, GroupError> {
        if g.len() != sigma.len() {
            return Err(GroupError::RankMismatch(g.len(), sigma.len()));
        }
        let img = sigma
            .iter()
            .map(|&v| g[v - 1] as i32 * v as i32)
            .collect();
        Self::from_word(img)
    }

    /// Sign of the underlying unsigned permutation.
    pub fn unsigned_parity(&self) -> i8 {
        let n = self.rank();
        let mut seen = vec![false; n];
        let mut sign = 1i8;
        for i in 0..n {
            if seen[i] {
                continue;
            }
            let mut j = i;
            let mut len = 0;
            while !seen[j] {
                seen[j] = true;
                j = self.img[j].unsigned_abs() as usize - 1;
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }

    /// Orbits of the action on `{-n..-1, 1..n}`, each orbit listed from its
    /// canonically smallest point. Fixed points appear as singleton orbits.
    pub fn orbits(&self) -> Vec<Vec<i32>> {
        let n = self.rank();
        let mut seen = vec![false; 2 * n];
        let mut out = Vec::new();
        for p in all_points(n) {
            if seen[point_index(p, n)] {
                continue;
            }
            let mut orbit = vec![p];
            seen[point_index(p, n)] = true;
            let mut q = self.apply(p);
            while q != p {
                orbit.push(q);
                seen[point_index(q, n)] = true;
                q = self.apply(q);
            }
            out.push(orbit);
        }
        out
    }
}

/// Points of `[±n]` in the canonical order `-n < ... < -1 < 1 < ... < n`.
pub fn all_points(n: usize) -> impl Iterator<Item = i32> {
    let n = n as i32;
    (-n..0).chain(1..=n)
}

/// Fix-point handling for cycle types.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Convention {
    /// Parts of 1 are dropped from `rho+`; `|rho+| + |rho-| <= n`.
    Reduced,
    /// Parts of 1 pad `rho+` so that `|rho+| + |rho-| = n`.
    Padded,
}

/// Conjugacy class label: lengths of positive and negative cycles.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CycleType {
    pub rho_plus: Partition,
    pub rho_minus: Partition,
}

impl CycleType {
    pub fn new(rho_plus: Partition, rho_minus: Partition) -> Self {
        CycleType {
            rho_plus,
            rho_minus,
        }
    }

    pub fn reduced(&self) -> CycleType {
        CycleType::new(self.rho_plus.strip_ones(), self.rho_minus.clone())
    }

    pub fn padded_to(&self, n: usize) -> CycleType {
        let rest = n - self.rho_minus.size();
        CycleType::new(self.rho_plus.strip_ones().padded_to(rest), self.rho_minus.clone())
    }

    /// Exponent of `q+`: `||rho+|| + ||rho-||`. Invariant under padding.
    pub fn long_exponent(&self) -> usize {
        self.rho_plus.norm() + self.rho_minus.norm()
    }

    /// Exponent of `q-`: the number of negative cycles.
    pub fn short_exponent(&self) -> usize {
        self.rho_minus.len()
    }

    /// The signed reflection function on this class, in any scalar ring.
    pub fn phi<S: Scalar>(&self, qp: &S, qm: &S) -> S {
        qp.pow(self.long_exponent()) * qm.pow(self.short_exponent())
    }

    /// Size of the conjugacy class in `B(n)` by the wreath-product
    /// centraliser formula.
    pub fn class_size(&self, n: usize) -> BigUint {
        let padded = self.padded_to(n);
        let mut centraliser = BigUint::one();
        for rho in [&padded.rho_plus, &padded.rho_minus] {
            for j in 1..=rho.max_part() {
                let m = rho.mult(j);
                for _ in 0..m {
                    centraliser *= BigUint::from(2 * j as u64);
                }
                for k in 1..=m {
                    centraliser *= BigUint::from(k as u64);
                }
            }
        }
        let order = group_order(n);
        assert!((&order % &centraliser) == BigUint::from(0u8));
        order / centraliser
    }

    /// All class labels of `B(n)` in the padded convention, deterministic order.
    pub fn all_padded(n: usize) -> Vec<CycleType> {
        crate::partition::partition_pairs_of_total(n)
            .into_iter()
            .map(|(a, b)| CycleType::new(a, b))
            .collect()
    }
}

impl std::fmt::Display for CycleType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.rho_plus, self.rho_minus)
    }
}

pub fn group_order(n: usize) -> BigUint {
    let mut order = BigUint::one();
    for i in 1..=n as u64 {
        order *= BigUint::from(2 * i);
    }
    order
}

/// Cycle type of an element: bar-closed orbits are negative cycles (orbit
/// length `2k` recorded as `k`), bar-disjoint orbit pairs are positive cycles.
pub fn cycle_type(s: &SignedPermutation, conv: Convention) -> CycleType {
    let n = s.rank();
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    let mut seen_bar = vec![false; 2 * n];
    for orbit in s.orbits() {
        if seen_bar[point_index(orbit[0], n)] {
            continue;
        }
        let closed = orbit.contains(&-orbit[0]);
        if closed {
            debug_assert!(orbit.len() % 2 == 0);
            minus.push(orbit.len() / 2);
        } else {
            plus.push(orbit.len());
            for &p in &orbit {
                seen_bar[point_index(-p, n)] = true;
            }
        }
    }
    let t = CycleType::new(Partition::new(plus), Partition::new(minus));
    match conv {
        Convention::Reduced => t.reduced(),
        Convention::Padded => t.padded_to(s.rank()),
    }
}

/// `(l_+, l_-)`: long and short reflection counts of any minimal non-mixing
/// factorization, from the closed formula on the reduced cycle type.
pub fn reflection_lengths(s: &SignedPermutation) -> (usize, usize) {
    let t = cycle_type(s, Convention::Reduced);
    (t.long_exponent(), t.short_exponent())
}

/// The signed reflection function of a group element.
pub fn phi_of<S: Scalar>(s: &SignedPermutation, qp: &S, qm: &S) -> S {
    cycle_type(s, Convention::Reduced).phi(qp, qm)
}

/// A reflection of `B(n)`: long ones are conjugates of `(1 2)(-1 -2)`, short
/// ones are the sign flips `(i -i)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Reflection {
    /// `(a b)(-a -b)` with `|a| != |b|`; stored with `0 < a < |b|`.
    Long(i32, i32),
    /// `(i -i)` with `i >= 1`.
    Short(i32),
}

impl Reflection {
    /// Canonical form of the long reflection through `{a, b}` (or its bar image).
    pub fn long(a: i32, b: i32) -> Self {
        assert!(a != 0 && b != 0 && a.abs() != b.abs());
        let (x, y) = if a.abs() < b.abs() { (a, b) } else { (b, a) };
        if x > 0 {
            Reflection::Long(x, y)
        } else {
            Reflection::Long(-x, -y)
        }
    }

    pub fn is_long(&self) -> bool {
        matches!(self, Reflection::Long(_, _))
    }

    pub fn to_perm(&self, n: usize) -> SignedPermutation {
        let mut s = SignedPermutation::identity(n);
        match *self {
            Reflection::Long(a, b) => {
                s.img[a.unsigned_abs() as usize - 1] = if a > 0 { b } else { -b };
                s.img[b.unsigned_abs() as usize - 1] = if b > 0 { a } else { -a };
            }
            Reflection::Short(i) => {
                s.img[i as usize - 1] = -i;
            }
        }
        s
    }
}

/// All `n^2` reflections of `B(n)`: `n(n-1)` long and `n` short.
pub fn reflections(n: usize) -> Vec<Reflection> {
    let mut out = Vec::new();
    for i in 1..=n as i32 {
        for j in i + 1..=n as i32 {
            out.push(Reflection::Long(i, j));
            out.push(Reflection::Long(i, -j));
        }
    }
    for i in 1..=n as i32 {
        out.push(Reflection::Short(i));
    }
    out
}

/// Every element of `B(n)` exactly once: unsigned one-line words in
/// lexicographic order, and for each word all `2^n` sign patterns in binary
/// counter order (bit `k` of the counter negates position `k+1`).
pub fn elements(n: usize) -> Vec<SignedPermutation> {
    if n == 0 {
        return vec![SignedPermutation::identity(0)];
    }
    let mut out = Vec::new();
    for perm in (1..=n as i32).permutations(n) {
        for mask in 0u32..(1 << n) {
            let img = perm
                .iter()
                .enumerate()
                .map(|(k, &v)| if mask >> k & 1 == 1 { -v } else { v })
                .collect();
            out.push(SignedPermutation { img });
        }
    }
    out
}

/// A minimal non-mixing factorization of `s` into reflections.
///
/// Coset representatives are peeled from rank `n` down to 1, which yields a
/// minimal factorization; the reflections are then stably sorted by the cycle
/// of `s` carrying their support, which certifies the non-mixing property
/// (reflections supported in different cycles commute).
pub fn minimal_nonmixing_factorization(s: &SignedPermutation) -> Vec<Reflection> {
    let n = s.rank();
    let mut current = s.clone();
    let mut refls = Vec::new();
    for k in (1..=n as i32).rev() {
        let j = current.apply(k);
        if j == k {
            continue;
        }
        let r = if j == -k {
            Reflection::Short(k)
        } else {
            Reflection::long(j, k)
        };
        refls.push(r);
        current = r.to_perm(n).compose(&current).unwrap();
    }
    debug_assert!(current.is_identity());

    // cycle-pair id of each point of s: orbits merged with their bar image,
    // keyed by the smallest absolute value they move
    let orbits = s.orbits();
    let mut component = std::collections::HashMap::new();
    for orbit in &orbits {
        let key = orbit.iter().map(|p| p.unsigned_abs()).min().unwrap();
        for &p in orbit {
            component.insert(p, key);
            component.insert(-p, key);
        }
    }
    let support_point = |r: &Reflection| match *r {
        Reflection::Long(a, _) => a,
        Reflection::Short(i) => i,
    };
    refls.sort_by_key(|r| component[&support_point(r)]);
    refls
}

/// Index of a point under the canonical order `-n < ... < -1 < 1 < ... < n`.
pub fn point_index(p: i32, n: usize) -> usize {
    if p < 0 {
        (p + n as i32) as usize
    } else {
        (p + n as i32 - 1) as usize
    }
}

pub fn index_point(idx: usize, n: usize) -> i32 {
    if idx < n {
        idx as i32 - n as i32
    } else {
        idx as i32 - n as i32 + 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::BivarPoly;
    use crate::scalar::rat_int;
    use num::Zero;

    fn example_element() -> SignedPermutation {
        // signed model (1,-1,1,-1,-1,1; (124)(35)(6))
        let g = [1i8, -1, 1, -1, -1, 1];
        let sigma = [2usize, 4, 5, 1, 3, 6];
        SignedPermutation::from_signed_model(&g, &sigma).unwrap()
    }

    #[test]
    fn signed_model_round_trip_matches_word() {
        let s = example_element();
        assert_eq!(s.word(), &[-2, -4, -5, 1, 3, 6]);
        let (g, sigma) = s.to_signed_model();
        assert_eq!(SignedPermutation::from_signed_model(&g, &sigma).unwrap(), s);
    }

    #[test]
    fn compose_matches_wreath_product_rule() {
        // (g; s) * (g'; s') = (g_1 g'_{s^{-1}(1)}, ...; s s')
        let a = example_element();
        let b = SignedPermutation::from_word(vec![3, -1, 2, -6, 5, -4]).unwrap();
        let c = a.compose(&b).unwrap();
        let (ga, sa) = a.to_signed_model();
        let (gb, sb) = b.to_signed_model();
        let (gc, sc) = c.to_signed_model();
        for i in 0..6 {
            // (sigma sigma')(i+1), applying sigma' first
            assert_eq!(sc[i], sa[sb[i] - 1]);
        }
        for v in 1..=6usize {
            let sigma_inv_v = sa.iter().position(|&x| x == v).unwrap() + 1;
            assert_eq!(gc[v - 1], ga[v - 1] * gb[sigma_inv_v - 1]);
        }
    }

    #[test]
    fn identity_and_involution() {
        let s = example_element();
        let id = SignedPermutation::identity(6);
        assert_eq!(id.compose(&s).unwrap(), s);
        assert_eq!(s.compose(&id).unwrap(), s);
        let s0 = Reflection::Short(1).to_perm(3);
        assert!(s0.compose(&s0).unwrap().is_identity());
        assert_eq!(s.compose(&s.inverse()).unwrap(), id);
    }

    #[test]
    fn cycle_type_of_running_example() {
        let s = example_element();
        let t = cycle_type(&s, Convention::Reduced);
        assert_eq!(t.rho_plus, Partition::new(vec![3]));
        assert_eq!(t.rho_minus, Partition::new(vec![2]));
        let padded = cycle_type(&s, Convention::Padded);
        assert_eq!(padded.rho_plus, Partition::new(vec![3, 1]));
        assert_eq!(reflection_lengths(&s), (3, 1));
    }

    #[test]
    fn cycle_type_edge_cases() {
        let id4 = SignedPermutation::identity(4);
        let t = cycle_type(&id4, Convention::Padded);
        assert_eq!(t.rho_plus, Partition::new(vec![1, 1, 1, 1]));
        assert!(t.rho_minus.is_empty());

        let short = Reflection::Short(2).to_perm(3);
        let t = cycle_type(&short, Convention::Reduced);
        assert!(t.rho_plus.is_empty());
        assert_eq!(t.rho_minus, Partition::new(vec![1]));
        assert_eq!(reflection_lengths(&short), (0, 1));

        let long = Reflection::Long(1, 3).to_perm(3);
        assert_eq!(reflection_lengths(&long), (1, 0));
    }

    #[test]
    fn phi_values() {
        let qp = BivarPoly::qp();
        let qm = BivarPoly::qm();
        let t = CycleType::new(Partition::new(vec![3]), Partition::new(vec![2]));
        assert_eq!(t.phi(&qp, &qm), BivarPoly::monomial(3, 1, rat_int(1)));
        let id = CycleType::new(Partition::empty(), Partition::empty());
        assert_eq!(id.phi(&qp, &qm), BivarPoly::one());
        let short = CycleType::new(Partition::empty(), Partition::new(vec![1]));
        assert_eq!(short.phi(&qp, &qm), BivarPoly::qm());
        use num::One;
        let _ = BivarPoly::zero();
    }

    #[test]
    fn enumeration_counts_and_distinctness() {
        assert_eq!(elements(3).len(), 48);
        let els = elements(4);
        assert_eq!(els.len(), 384);
        let set: std::collections::HashSet<_> = els.iter().collect();
        assert_eq!(set.len(), 384);
        assert_eq!(reflections(4).len(), 16);
        for r in reflections(4) {
            let p = r.to_perm(4);
            assert!(p.compose(&p).unwrap().is_identity());
            let unsigned_is_id = p.word().iter().enumerate().all(|(i, &v)| v.unsigned_abs() as usize == i + 1);
            assert_eq!(unsigned_is_id, !r.is_long());
        }
    }

    #[test]
    fn class_sizes_by_brute_force() {
        for n in 1..=4 {
            let mut counts = std::collections::HashMap::new();
            for s in elements(n) {
                *counts.entry(cycle_type(&s, Convention::Padded)).or_insert(0u64) += 1;
            }
            assert_eq!(counts.len(), CycleType::all_padded(n).len());
            for (t, count) in counts {
                assert_eq!(BigUint::from(count), t.class_size(n), "class {t} in B({n})");
            }
        }
    }

    #[test]
    fn phi_is_central() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in 1..=4 {
            let els = elements(n);
            for s in els.iter().step_by(5) {
                let phi_s: BivarPoly = phi_of(s, &BivarPoly::qp(), &BivarPoly::qm());
                for _ in 0..50 {
                    let h = &els[rng.gen_range(0..els.len())];
                    let c = s.conjugate_by(h).unwrap();
                    assert_eq!(phi_of(&c, &BivarPoly::qp(), &BivarPoly::qm()), phi_s);
                }
            }
        }
    }

    #[test]
    fn factorization_of_small_examples() {
        // (1 -1)(2 -2) -> two short reflections
        let s = SignedPermutation::from_word(vec![-1, -2]).unwrap();
        let refls = minimal_nonmixing_factorization(&s);
        assert_eq!(refls, vec![Reflection::Short(1), Reflection::Short(2)]);

        // a positive k-cycle needs k-1 long reflections
        let c = SignedPermutation::from_word(vec![2, 3, 4, 1]).unwrap();
        let refls = minimal_nonmixing_factorization(&c);
        assert_eq!(refls.len(), 3);
        assert!(refls.iter().all(Reflection::is_long));

        // negative cycle (3 -5 -3 5): one long + one short
        let mut img = vec![1, 2, 0, 4, 0];
        img[2] = -5; // 3 -> -5
        img[4] = 3; // 5 -> 3
        let s = SignedPermutation::from_word(img).unwrap();
        let refls = minimal_nonmixing_factorization(&s);
        let longs = refls.iter().filter(|r| r.is_long()).count();
        assert_eq!((longs, refls.len() - longs), (1, 1));
        let prod = refls
            .iter()
            .fold(SignedPermutation::identity(5), |acc, r| acc.compose(&r.to_perm(5)).unwrap());
        assert_eq!(prod, s);
    }

    #[test]
    fn factorization_is_minimal_and_nonmixing_exhaustively() {
        // BFS oracle: reflection-length of every element of B(n), n <= 3
        for n in 1..=3usize {
            let els = elements(n);
            let index: std::collections::HashMap<_, _> =
                els.iter().cloned().zip(0..).collect();
            let refl_perms: Vec<_> = reflections(n).iter().map(|r| r.to_perm(n)).collect();
            let mut dist = vec![usize::MAX; els.len()];
            let id = SignedPermutation::identity(n);
            dist[index[&id]] = 0;
            let mut queue = std::collections::VecDeque::from([id]);
            while let Some(g) = queue.pop_front() {
                let d = dist[index[&g]];
                for r in &refl_perms {
                    let h = g.compose(r).unwrap();
                    let hi = index[&h];
                    if dist[hi] == usize::MAX {
                        dist[hi] = d + 1;
                        queue.push_back(h);
                    }
                }
            }
            for s in &els {
                let refls = minimal_nonmixing_factorization(s);
                assert_eq!(refls.len(), dist[index[s]], "length not minimal for {s:?}");
                let (lp, lm) = reflection_lengths(s);
                let longs = refls.iter().filter(|r| r.is_long()).count();
                assert_eq!((longs, refls.len() - longs), (lp, lm));
                let prod = refls
                    .iter()
                    .fold(SignedPermutation::identity(n), |acc, r| {
                        acc.compose(&r.to_perm(n)).unwrap()
                    });
                assert_eq!(&prod, s);
                // non-mixing: every reflection's orbits refine the orbits of s
                let orbits = s.orbits();
                for r in &refls {
                    for orbit in r.to_perm(n).orbits() {
                        if orbit.len() == 1 {
                            continue;
                        }
                        assert!(orbits
                            .iter()
                            .any(|o| orbit.iter().all(|p| o.contains(p))));
                    }
                }
            }
        }
    }

    #[test]
    fn reflection_lengths_additive_over_cycles() {
        // disjoint product: negative 1-cycle at 1, positive 2-cycle at (2 3)
        let s = SignedPermutation::from_word(vec![-1, 3, 2]).unwrap();
        assert_eq!(reflection_lengths(&s), (1, 1));
    }
}
