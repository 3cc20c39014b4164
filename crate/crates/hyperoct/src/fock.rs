//! The cyclic Fock space of type B.
//!
//! Level `n` is `H^{tensor 2n}` with slots indexed by `[±n]` in the canonical
//! order; level 0 is the vacuum line. The deformed inner product twists the
//! free one by the symmetrizer `sum over B(n) of phi(s) s`, creation prepends
//! and appends a vector pair, and the deformed annihilator is computed along
//! two independent routes that are asserted to agree. Everything is generic
//! over the scalar ring, so identities run symbolically and numeric modes
//! share the code.

use crate::group::{all_points, elements, phi_of, Reflection, SignedPermutation};
use crate::pairpart::{self, Eps};
use crate::poly::BivarPoly;
use crate::scalar::Scalar;
use num::rational::BigRational;
use num::{One, Zero};
use std::collections::BTreeMap;

/// Graded vector of the algebraic Fock space, finitely supported over basis
/// index tuples. The tuple at level `n` lists the basis indices of the slots
/// `-n, ..., -1, 1, ..., n` in this order; level 0 has the empty tuple.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FockVector<S: Scalar> {
    d: usize,
    levels: BTreeMap<usize, BTreeMap<Vec<u8>, S>>,
}

impl<S: Scalar> FockVector<S> {
    pub fn zero(d: usize) -> Self {
        FockVector {
            d,
            levels: BTreeMap::new(),
        }
    }

    pub fn vacuum(d: usize) -> Self {
        let mut v = Self::zero(d);
        v.add_term(0, vec![], S::one());
        v
    }

    pub fn basis(d: usize, tuple: Vec<u8>) -> Self {
        assert!(tuple.len().is_multiple_of(2));
        assert!(tuple.iter().all(|&t| (t as usize) < d));
        let mut v = Self::zero(d);
        v.add_term(tuple.len() / 2, tuple, S::one());
        v
    }

    pub fn dim_h(&self) -> usize {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn levels(&self) -> impl Iterator<Item = (usize, &BTreeMap<Vec<u8>, S>)> {
        self.levels.iter().map(|(&n, m)| (n, m))
    }

    pub fn coeff(&self, tuple: &[u8]) -> S {
        self.levels
            .get(&(tuple.len() / 2))
            .and_then(|m| m.get(tuple))
            .cloned()
            .unwrap_or_else(S::zero)
    }

    pub fn vacuum_coeff(&self) -> S {
        self.coeff(&[])
    }

    pub fn add_term(&mut self, level: usize, tuple: Vec<u8>, c: S) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(tuple.len(), 2 * level);
        let slot = self
            .levels
            .entry(level)
            .or_default()
            .entry(tuple)
            .or_insert_with(S::zero);
        *slot = slot.clone() + c;
        let is_now_zero = slot.is_zero();
        if is_now_zero {
            let m = self.levels.get_mut(&level).unwrap();
            m.retain(|_, v| !v.is_zero());
            if m.is_empty() {
                self.levels.remove(&level);
            }
        }
    }

    pub fn add(mut self, rhs: &Self) -> Self {
        assert_eq!(self.d, rhs.d);
        for (&level, terms) in &rhs.levels {
            for (tuple, c) in terms {
                self.add_term(level, tuple.clone(), c.clone());
            }
        }
        self
    }

    pub fn scale(mut self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(self.d);
        }
        for terms in self.levels.values_mut() {
            for v in terms.values_mut() {
                *v = v.clone() * c.clone();
            }
        }
        self
    }

    pub fn sub(self, rhs: &Self) -> Self {
        let minus = rhs.clone().scale(&(-S::one()));
        self.add(&minus)
    }

    /// Free (undeformed) level-diagonal inner product; basis tuples are
    /// orthonormal and scalars are not conjugated (real coefficients).
    pub fn free_inner(&self, rhs: &Self) -> S {
        let mut acc = S::zero();
        for (&level, terms) in &self.levels {
            if let Some(other) = rhs.levels.get(&level) {
                for (tuple, c) in terms {
                    if let Some(d) = other.get(tuple) {
                        acc = acc + c.clone() * d.clone();
                    }
                }
            }
        }
        acc
    }
}

/// Applies a group element to one level: slot `i` of the output takes the
/// input's slot `s(i)` content.
fn apply_group_to_tuple(s: &SignedPermutation, tuple: &[u8]) -> Vec<u8> {
    let n = s.rank();
    debug_assert_eq!(tuple.len(), 2 * n);
    let mut out = vec![0u8; 2 * n];
    for (idx, slot) in out.iter_mut().enumerate() {
        let point = crate::group::index_point(idx, n);
        let src = crate::group::point_index(s.apply(point), n);
        *slot = tuple[src];
    }
    out
}

/// The level-`n` symmetrizer `sum over B(n) of phi(s) s` applied to `v`'s
/// level-`n` component.
pub fn symmetrize<S: Scalar>(v: &FockVector<S>, level: usize, qp: &S, qm: &S) -> FockVector<S> {
    let mut out = FockVector::zero(v.d);
    let Some(terms) = v.levels.get(&level) else {
        return out;
    };
    if level == 0 {
        for (tuple, c) in terms {
            out.add_term(0, tuple.clone(), c.clone());
        }
        return out;
    }
    for g in elements(level) {
        let phi = phi_of(&g, qp, qm);
        if phi.is_zero() {
            continue;
        }
        for (tuple, c) in terms {
            out.add_term(
                level,
                apply_group_to_tuple(&g, tuple),
                phi.clone() * c.clone(),
            );
        }
    }
    out
}

/// Deformed inner product: level-diagonal, with the symmetrizer inserted on
/// the right argument.
pub fn deformed_inner<S: Scalar>(u: &FockVector<S>, v: &FockVector<S>, qp: &S, qm: &S) -> S {
    let mut acc = S::zero();
    for &level in v.levels.keys() {
        let pv = symmetrize(v, level, qp, qm);
        // restrict u to the same level for the free pairing
        let mut u_level = FockVector::zero(u.d);
        if let Some(terms) = u.levels.get(&level) {
            for (tuple, c) in terms {
                u_level.add_term(level, tuple.clone(), c.clone());
            }
        }
        acc = acc + u_level.free_inner(&pv);
    }
    acc
}

/// Creation: prepends `x` at the new most-negative slot and appends `y` at
/// the new most-positive slot.
pub fn create<S: Scalar>(x: &[BigRational], y: &[BigRational], v: &FockVector<S>) -> FockVector<S> {
    let d = v.d;
    assert_eq!(x.len(), d);
    assert_eq!(y.len(), d);
    let mut out = FockVector::zero(d);
    for (&level, terms) in &v.levels {
        for (tuple, c) in terms {
            for (a, xa) in x.iter().enumerate() {
                if xa.is_zero() {
                    continue;
                }
                for (b, yb) in y.iter().enumerate() {
                    if yb.is_zero() {
                        continue;
                    }
                    let mut t = Vec::with_capacity(tuple.len() + 2);
                    t.push(a as u8);
                    t.extend_from_slice(tuple);
                    t.push(b as u8);
                    let factor = S::from_rational(&(xa * yb));
                    out.add_term(level + 1, t, c.clone() * factor);
                }
            }
        }
    }
    out
}

/// Free annihilation: contracts the outermost slot pair against `x` and `y`.
pub fn annihilate_free<S: Scalar>(
    x: &[BigRational],
    y: &[BigRational],
    v: &FockVector<S>,
) -> FockVector<S> {
    let d = v.d;
    let mut out = FockVector::zero(d);
    for (&level, terms) in &v.levels {
        if level == 0 {
            continue;
        }
        for (tuple, c) in terms {
            let first = tuple[0] as usize;
            let last = tuple[tuple.len() - 1] as usize;
            let factor = &x[first] * &y[last];
            if factor.is_zero() {
                continue;
            }
            let middle = tuple[1..tuple.len() - 1].to_vec();
            out.add_term(level - 1, middle, c.clone() * S::from_rational(&factor));
        }
    }
    out
}

/// `R^{(n)} = id + q- J_n^- + q+ J_n^+` applied to the level-`n` component.
pub fn apply_r<S: Scalar>(v: &FockVector<S>, level: usize, qp: &S, qm: &S) -> FockVector<S> {
    let mut out = FockVector::zero(v.d);
    let Some(terms) = v.levels.get(&level) else {
        return out;
    };
    let n = level;
    for (tuple, c) in terms {
        out.add_term(n, tuple.clone(), c.clone());
    }
    if n == 0 {
        return out;
    }
    let short = Reflection::Short(n as i32).to_perm(n);
    for (tuple, c) in terms {
        out.add_term(
            n,
            apply_group_to_tuple(&short, tuple),
            qm.clone() * c.clone(),
        );
    }
    for j in all_points(n - 1) {
        let long = Reflection::long(j, n as i32).to_perm(n);
        for (tuple, c) in terms {
            out.add_term(
                n,
                apply_group_to_tuple(&long, tuple),
                qp.clone() * c.clone(),
            );
        }
    }
    out
}

/// Deformed annihilation `b(x tensor y) . R^{(n)}`, computed both through the
/// symmetrizer recursion and through the direct contraction sum; the two
/// results are asserted equal and the common value returned.
pub fn annihilate_deformed<S: Scalar>(
    x: &[BigRational],
    y: &[BigRational],
    v: &FockVector<S>,
    qp: &S,
    qm: &S,
) -> FockVector<S> {
    // route 1: free annihilation after R^{(n)}
    let mut via_r = FockVector::zero(v.d);
    for &level in v.levels.keys() {
        let r_applied = apply_r(v, level, qp, qm);
        via_r = via_r.add(&annihilate_free(x, y, &r_applied));
    }
    // route 2: contraction operators slot by slot
    let via_contractions = annihilate_by_contractions(x, y, v, qp, qm);
    assert_eq!(
        via_r, via_contractions,
        "the two annihilation routes must agree"
    );
    via_r
}

/// The contraction-sum route: the plain outer contraction, plus `q-` times
/// the crossed outer contraction, plus `q+` times one contraction for every
/// inner slot pair moved outward.
fn annihilate_by_contractions<S: Scalar>(
    x: &[BigRational],
    y: &[BigRational],
    v: &FockVector<S>,
    qp: &S,
    qm: &S,
) -> FockVector<S> {
    let d = v.d;
    let mut out = FockVector::zero(d);
    for (&level, terms) in &v.levels {
        if level == 0 {
            continue;
        }
        let n = level;
        let len = 2 * n;
        for (tuple, c) in terms {
            let first = tuple[0] as usize;
            let last = tuple[len - 1] as usize;
            // alpha_0: <x, slot -n> <y, slot n>
            let factor = &x[first] * &y[last];
            if !factor.is_zero() {
                let middle = tuple[1..len - 1].to_vec();
                out.add_term(n - 1, middle, c.clone() * S::from_rational(&factor));
            }
            // gamma_{q-}: crossed contraction <x, slot n> <y, slot -n>
            let factor = &x[last] * &y[first];
            if !factor.is_zero() {
                let middle = tuple[1..len - 1].to_vec();
                out.add_term(
                    n - 1,
                    middle,
                    qm.clone() * c.clone() * S::from_rational(&factor),
                );
            }
            // beta_{q+}: contract slots (j-bar, j), move outer contents inward
            for j in all_points(n - 1) {
                let ij = crate::group::point_index(j, n);
                let ijbar = crate::group::point_index(-j, n);
                let factor = &x[tuple[ijbar] as usize] * &y[tuple[ij] as usize];
                if factor.is_zero() {
                    continue;
                }
                let mut moved = tuple.clone();
                moved[ij] = tuple[len - 1];
                moved[ijbar] = tuple[0];
                let middle = moved[1..len - 1].to_vec();
                out.add_term(
                    n - 1,
                    middle,
                    qp.clone() * c.clone() * S::from_rational(&factor),
                );
            }
        }
    }
    out
}

/// Second-quantisation differential operator for rank-one maps
/// `A = |xi><x|`, `B = |eta><y|`: for every mirrored slot pair, apply `(A, B)`
/// and `(B, A)` across it, each weighted by `q+`. Kills the vacuum.
pub fn gamma_rank_one<S: Scalar>(
    x: &[BigRational],
    xi: &[BigRational],
    y: &[BigRational],
    eta: &[BigRational],
    v: &FockVector<S>,
    qp: &S,
) -> FockVector<S> {
    let d = v.d;
    let mut out = FockVector::zero(d);
    for (&level, terms) in &v.levels {
        if level == 0 {
            continue;
        }
        let n = level;
        for (tuple, c) in terms {
            for i in 1..=n as i32 {
                let ii = crate::group::point_index(i, n);
                let ibar = crate::group::point_index(-i, n);
                // A on the negative slot, B on the positive slot
                add_rank_one_term(&mut out, n, tuple, c, ibar, ii, x, xi, y, eta, qp);
                // and the mirrored placement
                add_rank_one_term(&mut out, n, tuple, c, ii, ibar, x, xi, y, eta, qp);
            }
        }
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn add_rank_one_term<S: Scalar>(
    out: &mut FockVector<S>,
    n: usize,
    tuple: &[u8],
    c: &S,
    slot_a: usize,
    slot_b: usize,
    x: &[BigRational],
    xi: &[BigRational],
    y: &[BigRational],
    eta: &[BigRational],
    qp: &S,
) {
    let ca = &x[tuple[slot_a] as usize];
    let cb = &y[tuple[slot_b] as usize];
    let base = ca * cb;
    if base.is_zero() {
        return;
    }
    for (a, xia) in xi.iter().enumerate() {
        if xia.is_zero() {
            continue;
        }
        for (b, etab) in eta.iter().enumerate() {
            if etab.is_zero() {
                continue;
            }
            let mut t = tuple.to_vec();
            t[slot_a] = a as u8;
            t[slot_b] = b as u8;
            let factor = &base * xia * etab;
            out.add_term(n, t, qp.clone() * c.clone() * S::from_rational(&factor));
        }
    }
}

/// Checks the cyclic commutation relation on every basis tuple up to
/// `max_level`:
/// `b(x,y) b*(xi,eta) = <x,xi><y,eta> id + q- <x,eta><y,xi> id
///  + Gamma_{q+}(|xi><x| tensor |eta><y|)`.
#[allow(clippy::too_many_arguments)]
pub fn commutation_check_on<S: Scalar>(
    d: usize,
    max_level: usize,
    x: &[BigRational],
    y: &[BigRational],
    xi: &[BigRational],
    eta: &[BigRational],
    qp: &S,
    qm: &S,
) -> bool {
    let dot = |a: &[BigRational], b: &[BigRational]| -> BigRational {
        a.iter().zip(b).map(|(p, q)| p * q).sum()
    };
    let scal_id = S::from_rational(&dot(x, xi)) * S::from_rational(&dot(y, eta));
    let scal_q = qm.clone() * S::from_rational(&dot(x, eta)) * S::from_rational(&dot(y, xi));
    for level in 0..=max_level {
        for tuple in tuples(d, 2 * level) {
            let e: FockVector<S> = FockVector::basis(d, tuple.clone());
            let lhs = annihilate_deformed(x, y, &create(xi, eta, &e), qp, qm);
            let rhs = e
                .clone()
                .scale(&scal_id)
                .add(&e.clone().scale(&scal_q))
                .add(&gamma_rank_one(x, xi, y, eta, &e, qp));
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// Symbolic commutation check with generic rational vectors.
pub fn commutation_check(d: usize, max_level: usize) -> bool {
    let [x, y, xi, eta] = generic_vectors(d);
    commutation_check_on(
        d,
        max_level,
        &x,
        &y,
        &xi,
        &eta,
        &BivarPoly::qp(),
        &BivarPoly::qm(),
    )
}

/// Fixed generic rational vectors with no accidental orthogonality.
pub fn generic_vectors(d: usize) -> [Vec<BigRational>; 4] {
    let mk = |seed: i64| -> Vec<BigRational> {
        (0..d as i64)
            .map(|k| crate::scalar::rat(seed + 2 * k + 1, 2 + ((seed + k).rem_euclid(3))))
            .collect()
    };
    [mk(1), mk(-4), mk(3), mk(7)]
}

fn tuples(d: usize, len: usize) -> Vec<Vec<u8>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * d);
        for t in &out {
            for a in 0..d as u8 {
                let mut t2 = t.clone();
                t2.push(a);
                next.push(t2);
            }
        }
        out = next;
    }
    out
}

/// Decomposition check `P^{(n)} = (id tensor P^{(n-1)} tensor id) . R^{(n)}`
/// on every basis tuple of level `n`, symbolically.
pub fn symmetrizer_decomposition_check(d: usize, n: usize) -> bool {
    assert!(n >= 1);
    let qp = BivarPoly::qp();
    let qm = BivarPoly::qm();
    for tuple in tuples(d, 2 * n) {
        let e: FockVector<BivarPoly> = FockVector::basis(d, tuple);
        let lhs = symmetrize(&e, n, &qp, &qm);
        let r_applied = apply_r(&e, n, &qp, &qm);
        let rhs = symmetrize_middle(&r_applied, n, &qp, &qm);
        if lhs != rhs {
            return false;
        }
    }
    true
}

/// `(id tensor P^{(n-1)} tensor id)`: the symmetrizer of rank `n-1` acting on
/// the inner slots, realized by embedding `B(n-1)` into `B(n)`.
fn symmetrize_middle(
    v: &FockVector<BivarPoly>,
    level: usize,
    qp: &BivarPoly,
    qm: &BivarPoly,
) -> FockVector<BivarPoly> {
    let mut out = FockVector::zero(v.d);
    let Some(terms) = v.levels.get(&level) else {
        return out;
    };
    let inner = level - 1;
    for g in elements(inner) {
        let phi = phi_of(&g, qp, qm);
        let mut word: Vec<i32> = g.word().to_vec();
        word.push(level as i32);
        let embedded = SignedPermutation::from_word(word).unwrap();
        for (tuple, c) in terms {
            out.add_term(
                level,
                apply_group_to_tuple(&embedded, tuple),
                phi.clone() * c.clone(),
            );
        }
    }
    out
}

/// Adjoint identity `<b* u, v> = <u, b v>` in the deformed product, checked
/// on all basis pairs up to the given levels.
pub fn adjoint_check(d: usize, max_level: usize) -> bool {
    let [x, y, _, _] = generic_vectors(d);
    let qp = BivarPoly::qp();
    let qm = BivarPoly::qm();
    for level in 0..max_level {
        for tu in tuples(d, 2 * level) {
            let u: FockVector<BivarPoly> = FockVector::basis(d, tu);
            let cu = create(&x, &y, &u);
            for tv in tuples(d, 2 * (level + 1)) {
                let v: FockVector<BivarPoly> = FockVector::basis(d, tv);
                let bv = annihilate_deformed(&x, &y, &v, &qp, &qm);
                if deformed_inner(&cu, &v, &qp, &qm) != deformed_inner(&u, &bv, &qp, &qm) {
                    return false;
                }
            }
        }
    }
    true
}

/// Squared norms of the chain vectors `x^{tensor n} tensor x^{tensor n}`
/// (unit `x`) at the exclusion parameters `q+ = -1/(M+N)`,
/// `q- = (M-N)/(M+N)`, for `n = 1 ..= M+1`. The exclusion principle predicts
/// strictly positive values through `n = M` and an exact zero at `n = M+1`.
pub fn exclusion_norms(m: u64, n_param: u64) -> Vec<BigRational> {
    let qp = BigRational::new((-1).into(), ((m + n_param) as i64).into());
    let qm = BigRational::new(
        (m as i64 - n_param as i64).into(),
        ((m + n_param) as i64).into(),
    );
    let mut out = Vec::new();
    for level in 1..=(m + 1) as usize {
        let e: FockVector<BigRational> = FockVector::basis(1, vec![0; 2 * level]);
        let norm2 = deformed_inner(&e, &e, &qp, &qm);
        // cross-check against the product of the recursion factors
        let product: BigRational = (1..=level)
            .map(|k| {
                BigRational::one()
                    + crate::scalar::rat_int(2 * (k as i64 - 1)) * &qp
                    + &qm
            })
            .product();
        assert_eq!(norm2, product, "norm recursion at level {level}");
        out.push(norm2);
    }
    out
}

pub fn exclusion_holds(m: u64, n_param: u64) -> bool {
    let norms = exclusion_norms(m, n_param);
    norms[..m as usize].iter().all(|v| v > &BigRational::zero())
        && norms[m as usize].is_zero()
}

/// Applies the word of creations (`Star`) and deformed annihilations (`One`)
/// to the vacuum; entry `k` of `vector_pairs` supplies `(x_{-k-1}, x_{k+1})`.
pub fn apply_word<S: Scalar>(
    eps: &[Eps],
    vector_pairs: &[(Vec<BigRational>, Vec<BigRational>)],
    d: usize,
    qp: &S,
    qm: &S,
) -> FockVector<S> {
    assert_eq!(eps.len(), vector_pairs.len());
    let mut v = FockVector::vacuum(d);
    for (e, (xneg, xpos)) in eps.iter().zip(vector_pairs) {
        v = match e {
            Eps::Star => create(xneg, xpos, &v),
            Eps::One => annihilate_deformed(xneg, xpos, &v, qp, qm),
        };
    }
    v
}

/// The combinatorial side of the word formula: a sum over admissible
/// symmetric partitions, weighted by `q-^{c-} q+^{l_c + l_sc}`, of the inner
/// products over pairs times the tensor of the free semi-cycle vectors
/// ordered by their position keys.
pub fn combinatorial_word<S: Scalar>(
    eps: &[Eps],
    vector_pairs: &[(Vec<BigRational>, Vec<BigRational>)],
    d: usize,
    qp: &S,
    qm: &S,
) -> FockVector<S> {
    let n = eps.len();
    let vector_at = |p: i32| -> &Vec<BigRational> {
        let idx = p.unsigned_abs() as usize - 1;
        if p < 0 {
            &vector_pairs[idx].0
        } else {
            &vector_pairs[idx].1
        }
    };
    let mut out = FockVector::zero(d);
    pairpart::visit_partitions(n, false, Some(eps), &mut |p| {
        let mut scalar = BigRational::one();
        for (a, b) in p.pairs() {
            let va = vector_at(a);
            let vb = vector_at(b);
            scalar *= va
                .iter()
                .zip(vb)
                .map(|(s, t)| s * t)
                .sum::<BigRational>();
        }
        if scalar.is_zero() {
            return;
        }
        let dec = pairpart::decompose(p);
        let st = dec.stats();
        let weight = qm.pow(st.c_minus) * qp.pow(st.l_c + st.l_sc);

        // free vectors ordered by the position keys r, canonical order
        let mut factors: Vec<(usize, i32)> = Vec::new();
        for sc in &dec.semi_cycles {
            for &(l, r) in &sc.parts {
                factors.push((crate::group::point_index(r, n), l));
            }
        }
        factors.sort_unstable();
        let level = factors.len() / 2;
        debug_assert_eq!(factors.len() % 2, 0);

        // expand the tensor product of the chosen vectors over basis tuples
        let mut expansion: Vec<(Vec<u8>, BigRational)> = vec![(vec![], scalar)];
        for &(_, l) in &factors {
            let vl = vector_at(l);
            let mut next = Vec::with_capacity(expansion.len() * d);
            for (tuple, c) in &expansion {
                for (a, comp) in vl.iter().enumerate() {
                    if comp.is_zero() {
                        continue;
                    }
                    let mut t = tuple.clone();
                    t.push(a as u8);
                    next.push((t, c * comp));
                }
            }
            expansion = next;
        }
        for (tuple, c) in expansion {
            out.add_term(level, tuple, weight.clone() * S::from_rational(&c));
        }
    });
    out
}

/// Vacuum moments of the Gaussian operator `G = b*(x,x) + b(x,x)` at unit
/// `x`, computed by repeatedly applying the actual Fock operators (the chain
/// of identical-tensor states is preserved, so dimension one suffices).
pub fn gaussian_moment_operator(two_n: usize) -> BivarPoly {
    let x = vec![BigRational::one()];
    let qp = BivarPoly::qp();
    let qm = BivarPoly::qm();
    let mut v: FockVector<BivarPoly> = FockVector::vacuum(1);
    for _ in 0..two_n {
        let up = create(&x, &x, &v);
        let down = annihilate_deformed(&x, &x, &v, &qp, &qm);
        v = up.add(&down);
    }
    v.vacuum_coeff()
}

/// Exact PSD test of the deformed level Gram matrix over all basis tuples.
pub fn level_gram_psd(d: usize, level: usize, qp: &BigRational, qm: &BigRational) -> bool {
    let basis = tuples(d, 2 * level);
    let images: Vec<FockVector<BigRational>> = basis
        .iter()
        .map(|t| {
            let e = FockVector::basis(d, t.clone());
            symmetrize(&e, level, qp, qm)
        })
        .collect();
    let gram: Vec<Vec<BigRational>> = basis
        .iter()
        .map(|t| {
            let e: FockVector<BigRational> = FockVector::basis(d, t.clone());
            images.iter().map(|pv| e.free_inner(pv)).collect()
        })
        .collect();
    crate::linalg::is_psd(&gram)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};

    fn poly_qp() -> BivarPoly {
        BivarPoly::qp()
    }
    fn poly_qm() -> BivarPoly {
        BivarPoly::qm()
    }

    #[test]
    fn vacuum_and_level_one_norms() {
        let e0: FockVector<BivarPoly> = FockVector::vacuum(1);
        assert_eq!(deformed_inner(&e0, &e0, &poly_qp(), &poly_qm()), BivarPoly::one());
        let e1: FockVector<BivarPoly> = FockVector::basis(1, vec![0, 0]);
        assert_eq!(
            deformed_inner(&e1, &e1, &poly_qp(), &poly_qm()),
            BivarPoly::one() + BivarPoly::qm()
        );
    }

    #[test]
    fn chain_norms_match_recursion_product() {
        for n in 1..=4usize {
            let e: FockVector<BivarPoly> = FockVector::basis(1, vec![0; 2 * n]);
            let norm = deformed_inner(&e, &e, &poly_qp(), &poly_qm());
            let mut expected = BivarPoly::one();
            for k in 1..=n {
                expected = expected
                    * (BivarPoly::one()
                        + poly_qp().scale(&rat_int(2 * (k as i64 - 1)))
                        + poly_qm());
            }
            assert_eq!(norm, expected, "level {n}");
        }
    }

    #[test]
    fn annihilator_on_vacuum_and_level_one() {
        let [x, y, xi, eta] = generic_vectors(2);
        let vac: FockVector<BivarPoly> = FockVector::vacuum(2);
        assert!(annihilate_deformed(&x, &y, &vac, &poly_qp(), &poly_qm()).is_zero());
        // b(x,y)(xi tensor eta) = (<x,xi><y,eta> + q- <x,eta><y,xi>) vacuum
        let v = create(&xi, &eta, &vac);
        let got = annihilate_deformed(&x, &y, &v, &poly_qp(), &poly_qm());
        let dot = |a: &[BigRational], b: &[BigRational]| -> BigRational {
            a.iter().zip(b).map(|(p, q)| p * q).sum()
        };
        let expected = FockVector::vacuum(2)
            .scale(&BivarPoly::constant(dot(&x, &xi) * dot(&y, &eta)))
            .add(&FockVector::vacuum(2).scale(
                &(BivarPoly::qm() * BivarPoly::constant(dot(&x, &eta) * dot(&y, &xi))),
            ));
        assert_eq!(got, expected);
    }

    #[test]
    fn commutation_relation_symbolic() {
        assert!(commutation_check(2, 2));
    }

    #[test]
    fn commutation_equal_unit_vectors_on_vacuum() {
        let x = vec![BigRational::one()];
        let vac: FockVector<BivarPoly> = FockVector::vacuum(1);
        let lhs = annihilate_deformed(&x, &x, &create(&x, &x, &vac), &poly_qp(), &poly_qm());
        let expected = vac.scale(&(BivarPoly::one() + BivarPoly::qm()));
        assert_eq!(lhs, expected);
    }

    #[test]
    fn symmetrizer_decomposition_small() {
        for n in 1..=3 {
            assert!(symmetrizer_decomposition_check(2, n), "level {n}");
        }
    }

    #[test]
    fn adjoint_identity_small_levels() {
        assert!(adjoint_check(2, 2));
    }

    #[test]
    fn exclusion_examples() {
        let norms = exclusion_norms(2, 1);
        assert_eq!(norms, vec![rat(4, 3), rat(8, 9), rat(0, 1)]);
        assert!(exclusion_holds(1, 1));
        assert!(exclusion_holds(2, 1));
        assert!(exclusion_holds(3, 1));
        assert!(exclusion_holds(1, 2));
    }

    #[test]
    fn word_single_creation() {
        let [x, y, _, _] = generic_vectors(2);
        let pairs = vec![(x.clone(), y.clone())];
        let v: FockVector<BivarPoly> =
            apply_word(&[Eps::Star], &pairs, 2, &poly_qp(), &poly_qm());
        let expected = create(&x, &y, &FockVector::vacuum(2));
        assert_eq!(v, expected);
        let w: FockVector<BivarPoly> =
            combinatorial_word(&[Eps::Star], &pairs, 2, &poly_qp(), &poly_qm());
        assert_eq!(w, expected);
    }

    #[test]
    fn word_create_then_annihilate_unit() {
        let x = vec![BigRational::one()];
        let pairs = vec![(x.clone(), x.clone()), (x.clone(), x.clone())];
        let eps = [Eps::Star, Eps::One];
        let v: FockVector<BivarPoly> = apply_word(&eps, &pairs, 1, &poly_qp(), &poly_qm());
        let expected = FockVector::vacuum(1).scale(&(BivarPoly::one() + BivarPoly::qm()));
        assert_eq!(v, expected);
        let w: FockVector<BivarPoly> =
            combinatorial_word(&eps, &pairs, 1, &poly_qp(), &poly_qm());
        assert_eq!(w, expected);
    }

    #[test]
    fn words_match_combinatorics_length_three() {
        let d = 2;
        let [a, b, c, e] = generic_vectors(d);
        let pairs = vec![(a, b.clone()), (b, c.clone()), (c, e)];
        for eps in all_words(3) {
            let lhs: FockVector<BivarPoly> =
                apply_word(&eps, &pairs, d, &poly_qp(), &poly_qm());
            let rhs = combinatorial_word(&eps, &pairs, d, &poly_qp(), &poly_qm());
            assert_eq!(lhs, rhs, "word {eps:?}");
        }
    }

    fn all_words(n: usize) -> Vec<Vec<Eps>> {
        let mut out = vec![vec![]];
        for _ in 0..n {
            let mut next = Vec::new();
            for w in &out {
                for e in [Eps::Star, Eps::One] {
                    let mut w2 = w.clone();
                    w2.push(e);
                    next.push(w2);
                }
            }
            out = next;
        }
        out
    }

    #[test]
    fn gaussian_moments_small() {
        assert!(gaussian_moment_operator(1).is_zero());
        assert_eq!(
            gaussian_moment_operator(2),
            BivarPoly::one() + BivarPoly::qm()
        );
        let m4 = gaussian_moment_operator(4);
        let expected = (BivarPoly::one() + BivarPoly::qm())
            * (BivarPoly::from_int(2)
                + BivarPoly::qm().scale(&rat_int(2))
                + BivarPoly::qp().scale(&rat_int(2)));
        assert_eq!(m4, expected);
    }

    #[test]
    fn level_gram_psd_at_extreme_parameters() {
        // (M, N) = (2, 1), eps = +1
        assert!(level_gram_psd(2, 2, &rat(1, 3), &rat(1, 3)));
        // degenerate family
        assert!(level_gram_psd(2, 2, &rat(0, 1), &rat(1, 2)));
        // and a non-PD point fails once the witness irrep enters the space
        assert!(level_gram_psd(2, 2, &rat(1, 3), &rat(0, 1)));
        assert!(!level_gram_psd(2, 3, &rat(1, 3), &rat(0, 1)));
    }
}
