//! Symmetric pair partitions with singletons: the associated non-crossing
//! hat matching, the cycle/semi-cycle decomposition and its statistics, the
//! Wick-type moment formula, and the projection to plain matchings.
//!
//! Points live in `[±n] = {-n..-1, 1..n}` with the canonical order
//! `-n < ... < -1 < 1 < ... < n`. A partition here has only pairs and
//! singletons, is invariant under the bar (negation) map, and no pair equals
//! its own bar image. A pair `(a, b)` with `a < b` is *positive* if
//! `b > -a` and *negative* otherwise; every bar orbit of pairs contains one of
//! each.

use crate::group::{index_point, point_index};
use crate::poly::BivarPoly;
use crate::scalar::Scalar;
use num::rational::BigRational;
use num::{One, Zero};
use serde_json::json;

/// Whether a slot of a creation/annihilation word creates (`Star`) or
/// annihilates (`One`).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Eps {
    Star,
    One,
}

/// Canonical comparison of points of `[±n]`.
fn cmp_points(a: i32, b: i32, n: usize) -> std::cmp::Ordering {
    point_index(a, n).cmp(&point_index(b, n))
}

/// Symmetric partition of `[±n]` into pairs and singletons.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymPairPartition {
    n: usize,
    /// partner in the canonical index space; `None` marks a singleton
    partner: Vec<Option<i32>>,
}

impl SymPairPartition {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partner(&self, p: i32) -> Option<i32> {
        self.partner[point_index(p, self.n)]
    }

    /// Builds from blocks, validating every structural invariant.
    pub fn from_blocks(n: usize, blocks: &[Vec<i32>]) -> Result<Self, String> {
        let mut partner = vec![None; 2 * n];
        let mut seen = vec![false; 2 * n];
        for block in blocks {
            match block.as_slice() {
                [p] => {
                    let idx = checked_index(*p, n, &mut seen)?;
                    partner[idx] = None;
                }
                [a, b] => {
                    if a == b {
                        return Err(format!("degenerate pair ({a},{b})"));
                    }
                    if *a == -*b {
                        return Err(format!("bar-fixed pair ({a},{b}) is not allowed"));
                    }
                    let ia = checked_index(*a, n, &mut seen)?;
                    let ib = checked_index(*b, n, &mut seen)?;
                    partner[ia] = Some(*b);
                    partner[ib] = Some(*a);
                }
                other => return Err(format!("block of size {} not allowed", other.len())),
            }
        }
        if !seen.iter().all(|&s| s) {
            return Err("blocks do not cover [±n]".to_string());
        }
        let out = SymPairPartition { n, partner };
        for p in points(n) {
            let bar_partner = out.partner(p).map(|q| -q);
            if out.partner(-p) != bar_partner {
                return Err("partition is not bar-symmetric".to_string());
            }
        }
        Ok(out)
    }

    /// Blocks in canonical order; pairs are listed `(left leg, right leg)`.
    pub fn blocks(&self) -> Vec<Vec<i32>> {
        let mut out = Vec::new();
        let mut emitted = vec![false; 2 * self.n];
        for p in points(self.n) {
            let idx = point_index(p, self.n);
            if emitted[idx] {
                continue;
            }
            emitted[idx] = true;
            match self.partner(p) {
                None => out.push(vec![p]),
                Some(q) => {
                    emitted[point_index(q, self.n)] = true;
                    out.push(vec![p, q]);
                }
            }
        }
        out
    }

    /// Pairs as `(left, right)` in canonical order of the left leg.
    pub fn pairs(&self) -> Vec<(i32, i32)> {
        self.blocks()
            .into_iter()
            .filter(|b| b.len() == 2)
            .map(|b| (b[0], b[1]))
            .collect()
    }

    pub fn singletons(&self) -> Vec<i32> {
        self.blocks()
            .into_iter()
            .filter(|b| b.len() == 1)
            .map(|b| b[0])
            .collect()
    }

    /// `(a, b)` with `a < b` is positive when `b > -a`.
    pub fn pair_is_positive(&self, (a, b): (i32, i32)) -> bool {
        cmp_points(b, -a, self.n) == std::cmp::Ordering::Greater
    }

    /// Blocks as JSON arrays of integers, barred points negative.
    pub fn to_json(&self) -> serde_json::Value {
        json!(self.blocks())
    }
}

fn checked_index(p: i32, n: usize, seen: &mut [bool]) -> Result<usize, String> {
    if p == 0 || p.unsigned_abs() as usize > n {
        return Err(format!("point {p} outside [±{n}]"));
    }
    let idx = point_index(p, n);
    if seen[idx] {
        return Err(format!("point {p} covered twice"));
    }
    seen[idx] = true;
    Ok(idx)
}

pub fn points(n: usize) -> impl Iterator<Item = i32> {
    crate::group::all_points(n)
}

/// Visits every symmetric pair/singleton partition of `[±n]` once, in a
/// deterministic order (the singleton branch explored first at each step).
///
/// `perfect` restricts to partitions without singletons; `eps` applies the
/// admissibility constraints of creation/annihilation words: a pair with
/// underlying positions `i < j` needs `eps[i-1] = Star` and `eps[j-1] = One`,
/// a singleton at `±c` needs `eps[c-1] = Star`.
pub fn visit_partitions<F: FnMut(&SymPairPartition)>(
    n: usize,
    perfect: bool,
    eps: Option<&[Eps]>,
    f: &mut F,
) {
    if let Some(word) = eps {
        assert_eq!(word.len(), n);
    }
    let mut partner = vec![None; 2 * n];
    let mut assigned = vec![false; 2 * n];
    rec(n, perfect, eps, &mut partner, &mut assigned, f);

    fn rec<F: FnMut(&SymPairPartition)>(
        n: usize,
        perfect: bool,
        eps: Option<&[Eps]>,
        partner: &mut Vec<Option<i32>>,
        assigned: &mut Vec<bool>,
        f: &mut F,
    ) {
        let first = (0..2 * n).find(|&i| !assigned[i]);
        let Some(first) = first else {
            f(&SymPairPartition {
                n,
                partner: partner.clone(),
            });
            return;
        };
        let p = index_point(first, n);
        let bar_idx = point_index(-p, n);

        // singleton branch: p and -p become singletons together
        let singleton_ok = !perfect
            && eps.is_none_or(|w| w[p.unsigned_abs() as usize - 1] == Eps::Star);
        if singleton_ok {
            assigned[first] = true;
            assigned[bar_idx] = true;
            rec(n, perfect, eps, partner, assigned, f);
            assigned[first] = false;
            assigned[bar_idx] = false;
        }

        // pair branches: match p with any later unassigned q != -p, which
        // forces the bar pair (-p, -q)
        for q_idx in first + 1..2 * n {
            if assigned[q_idx] || q_idx == bar_idx {
                continue;
            }
            let q = index_point(q_idx, n);
            if let Some(w) = eps {
                let (lo, hi) = ord_abs(p, q);
                if w[lo - 1] != Eps::Star || w[hi - 1] != Eps::One {
                    continue;
                }
            }
            let qbar_idx = point_index(-q, n);
            for &i in &[first, q_idx, bar_idx, qbar_idx] {
                assigned[i] = true;
            }
            partner[first] = Some(q);
            partner[q_idx] = Some(p);
            partner[bar_idx] = Some(-q);
            partner[qbar_idx] = Some(-p);
            rec(n, perfect, eps, partner, assigned, f);
            for &i in &[first, q_idx, bar_idx, qbar_idx] {
                assigned[i] = false;
                partner[i] = None;
            }
        }
    }

    fn ord_abs(p: i32, q: i32) -> (usize, usize) {
        let (a, b) = (p.unsigned_abs() as usize, q.unsigned_abs() as usize);
        debug_assert_ne!(a, b);
        (a.min(b), a.max(b))
    }
}

pub fn enumerate(n: usize, perfect: bool, eps: Option<&[Eps]>) -> Vec<SymPairPartition> {
    let mut out = Vec::new();
    visit_partitions(n, perfect, eps, &mut |p| out.push(p.clone()));
    out
}

/// The unique non-crossing companion of a symmetric partition.
///
/// Every block lives inside one side; right legs of positive pairs and left
/// legs of negative pairs agree with those of the source partition, and pairs
/// never cover singletons.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HatMatching {
    n: usize,
    partner: Vec<Option<i32>>,
}

impl HatMatching {
    pub fn partner(&self, p: i32) -> Option<i32> {
        self.partner[point_index(p, self.n)]
    }

    pub fn pairs(&self) -> Vec<(i32, i32)> {
        let n = self.n;
        let mut out = Vec::new();
        for p in points(n) {
            if let Some(q) = self.partner(p) {
                if cmp_points(p, q, n) == std::cmp::Ordering::Less {
                    out.push((p, q));
                }
            }
        }
        out
    }

    pub fn singletons(&self) -> Vec<i32> {
        points(self.n).filter(|&p| self.partner(p).is_none()).collect()
    }

    pub fn is_noncrossing(&self) -> bool {
        let pairs = self.pairs();
        let n = self.n;
        for (i, &(a, b)) in pairs.iter().enumerate() {
            for &(c, d) in &pairs[i + 1..] {
                let (ia, ib) = (point_index(a, n), point_index(b, n));
                let (ic, id) = (point_index(c, n), point_index(d, n));
                if ia < ic && ic < ib && ib < id {
                    return false;
                }
                if ic < ia && ia < id && id < ib {
                    return false;
                }
            }
        }
        true
    }
}

/// Builds the hat matching by the lattice-path rule: on the negative side,
/// read points in increasing order, put an up step at every left leg of a
/// negative pair and a down step elsewhere; a down step at height zero
/// becomes a horizontal step (a singleton). Up/down steps are matched by a
/// stack and the result is mirrored to the positive side.
pub fn hat(p: &SymPairPartition) -> HatMatching {
    let n = p.n();
    let mut is_up = vec![false; n];
    for pair in p.pairs() {
        if !p.pair_is_positive(pair) {
            let left = pair.0;
            debug_assert!(left < 0, "negative pairs have negative left legs");
            is_up[point_index(left, n)] = true;
        }
    }
    let mut partner: Vec<Option<i32>> = vec![None; 2 * n];
    let mut stack: Vec<i32> = Vec::new();
    for idx in 0..n {
        let pt = index_point(idx, n);
        if is_up[idx] {
            stack.push(pt);
        } else if let Some(top) = stack.pop() {
            partner[point_index(top, n)] = Some(pt);
            partner[point_index(pt, n)] = Some(top);
            // mirrored pair on the positive side
            partner[point_index(-top, n)] = Some(-pt);
            partner[point_index(-pt, n)] = Some(-top);
        }
        // else: horizontal step at height zero, a singleton of the hat
    }
    assert!(
        stack.is_empty(),
        "every up step of the hat path must be matched"
    );
    HatMatching { n, partner }
}

/// One closed cycle: its sign, length and the points it covers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cycle {
    pub negative: bool,
    pub length: usize,
    pub support: Vec<i32>,
}

/// One semi-cycle: an open chain together with its bar image. Each of the two
/// halves carries an output vector index `l` (the free end missing a
/// partition edge) and a position key `r` (the free end missing a hat edge).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SemiCycle {
    pub length: usize,
    /// `(l, r)` for the two mirrored halves
    pub parts: [(i32, i32); 2],
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycleDecomposition {
    pub cycles: Vec<Cycle>,
    pub semi_cycles: Vec<SemiCycle>,
}

/// The statistics entering the moment formulas.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Stats {
    /// number of cycles
    pub c: usize,
    /// number of negative cycles
    pub c_minus: usize,
    /// total cycle length minus the number of cycles
    pub l_c: usize,
    /// total semi-cycle length minus the number of semi-cycles
    pub l_sc: usize,
}

impl CycleDecomposition {
    pub fn stats(&self) -> Stats {
        Stats {
            c: self.cycles.len(),
            c_minus: self.cycles.iter().filter(|c| c.negative).count(),
            l_c: self.cycles.iter().map(|c| c.length - 1).sum(),
            l_sc: self.semi_cycles.iter().map(|s| s.length - 1).sum(),
        }
    }
}

/// Decomposes a partition into cycles and semi-cycles via its hat matching.
///
/// The union of partition edges and hat edges turns `[±n]` into disjoint
/// alternating paths and closed loops. A loop with bar-closed support is a
/// negative cycle (half as long as its pair count); a loop and its disjoint
/// bar image form one positive cycle. Open paths come in mirrored bar pairs
/// forming one semi-cycle each; a path runs from a hat-singleton end (the
/// position key `r`) to a partition-singleton end (the vector index `l`).
pub fn decompose(p: &SymPairPartition) -> CycleDecomposition {
    let n = p.n();
    let hat = hat(p);
    let mut visited = vec![false; 2 * n];
    let mut cycles = Vec::new();
    let mut semi_cycles = Vec::new();

    for start in points(n) {
        if visited[point_index(start, n)] {
            continue;
        }
        // collect the component of the union graph
        let mut component = vec![start];
        visited[point_index(start, n)] = true;
        let mut frontier = vec![start];
        while let Some(q) = frontier.pop() {
            for next in [p.partner(q), hat.partner(q)].into_iter().flatten() {
                if !visited[point_index(next, n)] {
                    visited[point_index(next, n)] = true;
                    component.push(next);
                    frontier.push(next);
                }
            }
        }
        let pair_edges = component.iter().filter(|&&q| p.partner(q).is_some()).count() / 2;
        let closed = component
            .iter()
            .all(|&q| p.partner(q).is_some() && hat.partner(q).is_some());

        let support: std::collections::BTreeSet<i32> = component.iter().copied().collect();
        let bar_closed = support.iter().all(|&q| support.contains(&-q));

        if closed {
            if bar_closed {
                debug_assert!(pair_edges % 2 == 0);
                cycles.push(Cycle {
                    negative: true,
                    length: pair_edges / 2,
                    support: component,
                });
            } else {
                // count the pair {component, bar component} once
                if component.iter().map(|&q| point_index(q, n)).min()
                    < component.iter().map(|&q| point_index(-q, n)).min()
                {
                    cycles.push(Cycle {
                        negative: false,
                        length: pair_edges,
                        support: component,
                    });
                }
            }
        } else {
            debug_assert!(!bar_closed, "open paths are never bar-closed");
            let l_end = component
                .iter()
                .copied()
                .filter(|&q| p.partner(q).is_none())
                .collect::<Vec<_>>();
            let r_end = component
                .iter()
                .copied()
                .filter(|&q| hat.partner(q).is_none())
                .collect::<Vec<_>>();
            assert_eq!(l_end.len(), 1, "one free vector end per path");
            assert_eq!(r_end.len(), 1, "one free position end per path");
            if component.iter().map(|&q| point_index(q, n)).min()
                < component.iter().map(|&q| point_index(-q, n)).min()
            {
                semi_cycles.push(SemiCycle {
                    length: pair_edges + 1,
                    parts: [(l_end[0], r_end[0]), (-l_end[0], -r_end[0])],
                });
            }
        }
    }
    CycleDecomposition {
        cycles,
        semi_cycles,
    }
}

pub fn stats(p: &SymPairPartition) -> Stats {
    decompose(p).stats()
}

/// Wick-type moment: the sum over perfect symmetric pair partitions of
/// `[±2n]` of `q-^{c-} q+^{l_c}` times the inner products over all pairs,
/// with the symmetric index extension `x_{-i} = x_i`.
pub fn wick_moment<S: Scalar>(vectors: &[Vec<BigRational>], qp: &S, qm: &S) -> S {
    let two_n = vectors.len();
    let dim = vectors.first().map_or(0, Vec::len);
    assert!(
        vectors.iter().all(|v| v.len() == dim),
        "inner-product vectors must share a dimension"
    );
    let mut total = S::zero();
    visit_partitions(two_n, true, None, &mut |p| {
        let mut product = BigRational::from_integer(1.into());
        for (a, b) in p.pairs() {
            let (va, vb) = (
                &vectors[a.unsigned_abs() as usize - 1],
                &vectors[b.unsigned_abs() as usize - 1],
            );
            product *= dot(va, vb);
        }
        if product.is_zero() {
            return;
        }
        let st = stats(p);
        let weight = qm.pow(st.c_minus) * qp.pow(st.l_c);
        total = total.clone() + weight * S::from_rational(&product);
    });
    total
}

fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Plain matching of `{1..2n}` stored as a partner table.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matching {
    partner: Vec<usize>,
}

impl Matching {
    pub fn from_pairs(two_n: usize, pairs: &[(usize, usize)]) -> Self {
        assert_eq!(pairs.len() * 2, two_n);
        let mut partner = vec![0; two_n + 1];
        for &(a, b) in pairs {
            partner[a] = b;
            partner[b] = a;
        }
        Matching { partner }
    }

    pub fn two_n(&self) -> usize {
        self.partner.len() - 1
    }

    pub fn partner(&self, i: usize) -> usize {
        self.partner[i]
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (1..=self.two_n())
            .filter(|&i| i < self.partner(i))
            .map(|i| (i, self.partner(i)))
            .collect()
    }
}

/// Visits all `(2n-1)!!` matchings of `{1..2n}`.
pub fn visit_matchings<F: FnMut(&Matching)>(two_n: usize, f: &mut F) {
    assert!(two_n.is_multiple_of(2));
    let mut partner = vec![0usize; two_n + 1];
    rec(two_n, 1, &mut partner, f);

    fn rec<F: FnMut(&Matching)>(two_n: usize, i: usize, partner: &mut Vec<usize>, f: &mut F) {
        if i > two_n {
            f(&Matching {
                partner: partner.clone(),
            });
            return;
        }
        if partner[i] != 0 {
            rec(two_n, i + 1, partner, f);
            return;
        }
        for j in i + 1..=two_n {
            if partner[j] == 0 {
                partner[i] = j;
                partner[j] = i;
                rec(two_n, i + 1, partner, f);
                partner[i] = 0;
                partner[j] = 0;
            }
        }
    }
}

/// The unique non-crossing matching with the same left legs, built by a stack.
pub fn noncrossing_with_same_left_legs(m: &Matching) -> Matching {
    let two_n = m.two_n();
    let mut pairs = Vec::new();
    let mut stack = Vec::new();
    for i in 1..=two_n {
        if i < m.partner(i) {
            stack.push(i);
        } else {
            let top = stack.pop().expect("right legs match left legs");
            pairs.push((top, i));
        }
    }
    Matching::from_pairs(two_n, &pairs)
}

/// Number of connected components of the union of `m` with its non-crossing
/// companion.
pub fn cycle_count(m: &Matching) -> usize {
    let hat = noncrossing_with_same_left_legs(m);
    let two_n = m.two_n();
    let mut visited = vec![false; two_n + 1];
    let mut components = 0;
    for start in 1..=two_n {
        if visited[start] {
            continue;
        }
        components += 1;
        let mut frontier = vec![start];
        visited[start] = true;
        while let Some(q) = frontier.pop() {
            for next in [m.partner(q), hat.partner(q)] {
                if !visited[next] {
                    visited[next] = true;
                    frontier.push(next);
                }
            }
        }
    }
    components
}

/// Projection of a perfect symmetric pair partition to the matching of
/// underlying positions `|i|`. Each underlying pair arises from exactly two
/// symmetric pairs (a bar orbit), which collapse to one.
pub fn project(p: &SymPairPartition) -> Matching {
    assert!(p.singletons().is_empty(), "projection needs a perfect partition");
    let mut pairs: Vec<(usize, usize)> = p
        .pairs()
        .iter()
        .map(|&(a, b)| {
            let (x, y) = (a.unsigned_abs() as usize, b.unsigned_abs() as usize);
            (x.min(y), x.max(y))
        })
        .collect();
    pairs.sort_unstable();
    pairs.dedup();
    Matching::from_pairs(p.n(), &pairs)
}

/// Checks the fiber identity over one plain matching `m`: the `2^n` symmetric
/// preimages of `m` satisfy
/// `sum q-^{c-} q+^{n - c} = (1 + q-)^{c(m)} (2 q+)^{n - c(m)}`.
pub fn fiber_identity(m: &Matching) -> bool {
    let two_n = m.two_n();
    let n = two_n / 2;
    let pairs = m.pairs();
    let mut lhs = BivarPoly::zero();
    for mask in 0u32..(1 << n) {
        let mut blocks = Vec::new();
        for (k, &(i, j)) in pairs.iter().enumerate() {
            let (a, b) = (i as i32, j as i32);
            if mask >> k & 1 == 0 {
                blocks.push(vec![a, b]);
                blocks.push(vec![-b, -a]);
            } else {
                blocks.push(vec![-a, b]);
                blocks.push(vec![-b, a]);
            }
        }
        let p = SymPairPartition::from_blocks(two_n, &blocks).unwrap();
        let st = stats(&p);
        debug_assert_eq!(st.l_c, n - st.c);
        lhs = lhs
            + BivarPoly::qm().pow(st.c_minus) * BivarPoly::qp().pow(n - st.c);
    }
    let c = cycle_count(m);
    let rhs = (BivarPoly::one() + BivarPoly::qm()).pow(c)
        * (BivarPoly::qp().scale(&crate::scalar::rat(2, 1))).pow(n - c);
    lhs == rhs
}

/// `(non-nested, no-right-crossing)` pair counts of a plain matching.
pub fn drake_stats(m: &Matching) -> (usize, usize) {
    let pairs = m.pairs();
    let non_nested = pairs
        .iter()
        .filter(|&&(i, j)| {
            !pairs.iter().any(|&(a, b)| a < i && j < b)
        })
        .count();
    let no_right_crossing = pairs
        .iter()
        .filter(|&&(i, j)| {
            !pairs.iter().any(|&(a, b)| i < a && a < j && j < b)
        })
        .count();
    (non_nested, no_right_crossing)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{double_factorial_odd, rat_int};
    use num::bigint::BigInt;
    use num::One;

    fn two_positive_one_negative() -> SymPairPartition {
        SymPairPartition::from_blocks(
            10,
            &[
                vec![-1, 3],
                vec![-3, 1],
                vec![-2, 4],
                vec![-4, 2],
                vec![-6, 5],
                vec![-5, 6],
                vec![8, 10],
                vec![7, 9],
                vec![-9, -7],
                vec![-10, -8],
            ],
        )
        .unwrap()
    }

    fn three_semi_cycles() -> SymPairPartition {
        SymPairPartition::from_blocks(
            9,
            &[
                vec![-6, -2],
                vec![2, 6],
                vec![-9, -3],
                vec![3, 9],
                vec![-4, 1],
                vec![-1, 4],
                vec![5],
                vec![-5],
                vec![7],
                vec![-7],
                vec![8],
                vec![-8],
            ],
        )
        .unwrap()
    }

    #[test]
    fn validation_rejects_bad_blocks() {
        assert!(SymPairPartition::from_blocks(1, &[vec![-1, 1]]).is_err());
        assert!(SymPairPartition::from_blocks(1, &[vec![1]]).is_err()); // -1 missing
        assert!(
            SymPairPartition::from_blocks(2, &[vec![1, 2], vec![-1], vec![-2]]).is_err(),
            "asymmetric partitions must be rejected"
        );
        assert!(SymPairPartition::from_blocks(1, &[vec![1], vec![-1]]).is_ok());
    }

    #[test]
    fn enumeration_counts() {
        // perfect symmetric pair partitions of [±2n]: 2^n (2n-1)!!
        for n in 1..=4usize {
            let count = enumerate(2 * n, true, None).len();
            let expected = BigInt::from(1u8 << n) * double_factorial_odd(n);
            assert_eq!(BigInt::from(count), expected, "2n = {}", 2 * n);
        }
        // with singletons: t(n) = t(n-1) + 2(n-1) t(n-2)
        let mut t = vec![1usize, 1];
        for n in 2..=6 {
            let next = t[n - 1] + 2 * (n - 1) * t[n - 2];
            t.push(next);
        }
        for n in 1..=6usize {
            assert_eq!(enumerate(n, false, None).len(), t[n]);
        }
        // odd point count admits no perfect symmetric matching
        assert_eq!(enumerate(3, true, None).len(), 0);
    }

    #[test]
    fn eps_constraints_filter() {
        // all-star word of length 2: only the all-singleton partition remains
        let all_star = vec![Eps::Star, Eps::Star];
        let got = enumerate(2, false, Some(&all_star));
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].pairs().len(), 0);
        // star-one word of length 2: singletons are forbidden at position 2
        let word = vec![Eps::Star, Eps::One];
        let got = enumerate(2, false, Some(&word));
        assert_eq!(got.len(), 2);
        assert!(got.iter().all(|p| p.singletons().is_empty()));
    }

    #[test]
    fn positivity_of_pairs() {
        let p = two_positive_one_negative();
        let positives: Vec<(i32, i32)> = p
            .pairs()
            .into_iter()
            .filter(|&pr| p.pair_is_positive(pr))
            .collect();
        assert_eq!(
            positives,
            vec![(-5, 6), (-2, 4), (-1, 3), (7, 9), (8, 10)]
        );
    }

    #[test]
    fn hat_of_two_positive_one_negative() {
        let h = hat(&two_positive_one_negative());
        let expected: Vec<(i32, i32)> = vec![
            (-10, -7),
            (-9, -8),
            (-4, -1),
            (-3, -2),
            (-6, -5),
            (1, 4),
            (2, 3),
            (5, 6),
            (7, 10),
            (8, 9),
        ];
        let mut got = h.pairs();
        got.sort_unstable();
        let mut want = expected;
        want.sort_unstable();
        assert_eq!(got, want);
        assert!(h.is_noncrossing());
    }

    #[test]
    fn hat_of_three_semi_cycles() {
        let h = hat(&three_semi_cycles());
        let mut got = h.pairs();
        got.sort_unstable();
        let mut want = vec![
            (-4, -3),
            (3, 4),
            (8, 9),
            (-9, -8),
            (-6, -5),
            (5, 6),
        ];
        want.sort_unstable();
        assert_eq!(got, want);
        let mut singles = h.singletons();
        singles.sort_unstable();
        assert_eq!(singles, vec![-7, -2, -1, 1, 2, 7]);
    }

    #[test]
    fn all_singletons_hat_is_all_singletons() {
        let blocks: Vec<Vec<i32>> = points(4).map(|p| vec![p]).collect();
        let p = SymPairPartition::from_blocks(4, &blocks).unwrap();
        let h = hat(&p);
        assert_eq!(h.pairs().len(), 0);
        assert_eq!(h.singletons().len(), 8);
    }

    #[test]
    fn decompose_cycles_only() {
        let d = decompose(&two_positive_one_negative());
        let st = d.stats();
        assert_eq!(st.c, 3);
        assert_eq!(st.c_minus, 1);
        assert_eq!(st.l_c, 2);
        assert_eq!(st.l_sc, 0);
        assert!(d.semi_cycles.is_empty());
        let mut lengths: Vec<(bool, usize)> = d
            .cycles
            .iter()
            .map(|c| (c.negative, c.length))
            .collect();
        lengths.sort_unstable();
        assert_eq!(lengths, vec![(false, 2), (false, 2), (true, 1)]);
    }

    #[test]
    fn decompose_with_semi_cycles() {
        let d = decompose(&three_semi_cycles());
        assert!(d.cycles.is_empty());
        let mut lengths: Vec<usize> = d.semi_cycles.iter().map(|s| s.length).collect();
        lengths.sort_unstable();
        assert_eq!(lengths, vec![1, 2, 3]);
        assert_eq!(d.stats().l_sc, 3);

        // edge points of each chain
        let find = |len: usize| d.semi_cycles.iter().find(|s| s.length == len).unwrap();
        let s1 = find(3);
        let mut parts = s1.parts.to_vec();
        parts.sort_unstable();
        let mut expected = vec![(8, -1), (-8, 1)];
        expected.sort_unstable();
        assert_eq!(parts, expected);
        let s2 = find(2);
        let mut parts = s2.parts.to_vec();
        parts.sort_unstable();
        let mut expected = vec![(5, 2), (-5, -2)];
        expected.sort_unstable();
        assert_eq!(parts, expected);
        let s3 = find(1);
        let mut parts = s3.parts.to_vec();
        parts.sort_unstable();
        assert_eq!(parts, vec![(-7, -7), (7, 7)]);
    }

    #[test]
    fn minimal_positive_cycle() {
        let p = SymPairPartition::from_blocks(2, &[vec![1, 2], vec![-2, -1]]).unwrap();
        let d = decompose(&p);
        assert_eq!(d.cycles.len(), 1);
        assert!(!d.cycles[0].negative);
        assert_eq!(d.cycles[0].length, 1);
        assert_eq!(d.stats().l_c, 0);
        // the mixed variant is a negative cycle
        let p = SymPairPartition::from_blocks(2, &[vec![-2, 1], vec![-1, 2]]).unwrap();
        let d = decompose(&p);
        assert_eq!(d.cycles.len(), 1);
        assert!(d.cycles[0].negative);
        assert_eq!(d.cycles[0].length, 1);
    }

    #[test]
    fn hat_properties_exhaustive() {
        for n in 1..=7usize {
            visit_partitions(n, false, None, &mut |p| {
                let h = hat(p);
                assert!(h.is_noncrossing());
                // blocks stay within one side
                for (a, b) in h.pairs() {
                    assert_eq!(a.signum(), b.signum());
                }
                // bar symmetry
                for q in points(n) {
                    assert_eq!(h.partner(-q), h.partner(q).map(|x| -x));
                }
                // leg conditions
                let pr_pi: std::collections::BTreeSet<i32> = p
                    .pairs()
                    .into_iter()
                    .filter(|&pr| p.pair_is_positive(pr))
                    .map(|(_, b)| b)
                    .collect();
                let pr_hat: std::collections::BTreeSet<i32> = h
                    .pairs()
                    .into_iter()
                    .filter(|&(a, _)| a > 0)
                    .map(|(_, b)| b)
                    .collect();
                assert_eq!(pr_pi, pr_hat, "positive right legs at {:?}", p.blocks());
                let nl_pi: std::collections::BTreeSet<i32> = p
                    .pairs()
                    .into_iter()
                    .filter(|&pr| !p.pair_is_positive(pr))
                    .map(|(a, _)| a)
                    .collect();
                let nl_hat: std::collections::BTreeSet<i32> = h
                    .pairs()
                    .into_iter()
                    .filter(|&(a, _)| a < 0)
                    .map(|(a, _)| a)
                    .collect();
                assert_eq!(nl_pi, nl_hat, "negative left legs at {:?}", p.blocks());
                // pairs do not cover singletons
                for s in h.singletons() {
                    let si = point_index(s, n);
                    for (a, b) in h.pairs() {
                        let (ia, ib) = (point_index(a, n), point_index(b, n));
                        assert!(!(ia < si && si < ib), "hat pair covers singleton");
                    }
                }
            });
        }
    }

    #[test]
    fn decomposition_accounting_exhaustive() {
        for n in 1..=6usize {
            visit_partitions(n, false, None, &mut |p| {
                let d = decompose(p);
                let pair_count = p.pairs().len();
                let cyc_len: usize = d.cycles.iter().map(|c| c.length).sum();
                let semi_len: usize = d.semi_cycles.iter().map(|s| s.length).sum();
                assert_eq!(
                    cyc_len + semi_len,
                    pair_count / 2 + d.semi_cycles.len(),
                    "length accounting at {:?}",
                    p.blocks()
                );
            });
        }
    }

    #[test]
    fn wick_moment_examples() {
        let unit = [vec![rat_int(1)]];
        let qp = BivarPoly::qp();
        let qm = BivarPoly::qm();
        // 2n = 2
        let m2: BivarPoly = wick_moment(&[unit[0].clone(), unit[0].clone()], &qp, &qm);
        assert_eq!(m2, BivarPoly::one() + BivarPoly::qm());
        // 2n = 4
        let vectors = vec![unit[0].clone(); 4];
        let m4: BivarPoly = wick_moment(&vectors, &qp, &qm);
        let expected = (BivarPoly::one() + BivarPoly::qm())
            * (BivarPoly::from_int(2) + BivarPoly::qm().scale(&rat_int(2)) + BivarPoly::qp().scale(&rat_int(2)));
        assert_eq!(m4, expected);
        // orthogonal vectors kill every pairing
        let x1 = vec![rat_int(1), rat_int(0)];
        let x2 = vec![rat_int(0), rat_int(1)];
        let zero: BivarPoly = wick_moment(&[x1, x2], &qp, &qm);
        assert!(zero.is_zero());
    }

    #[test]
    fn matching_cycle_counts() {
        let m = Matching::from_pairs(4, &[(1, 2), (3, 4)]);
        assert_eq!(cycle_count(&m), 2);
        let m = Matching::from_pairs(4, &[(1, 3), (2, 4)]);
        assert_eq!(cycle_count(&m), 1);
        let m = Matching::from_pairs(4, &[(1, 4), (2, 3)]);
        assert_eq!(cycle_count(&m), 2);
        // non-crossing matchings have the maximal count n
        let mut count = 0;
        visit_matchings(6, &mut |m| {
            let nc = noncrossing_with_same_left_legs(m);
            if nc == *m {
                assert_eq!(cycle_count(m), 3);
                count += 1;
            }
        });
        assert_eq!(count, 5); // Catalan(3)
    }

    #[test]
    fn fiber_identity_small() {
        for two_n in [2usize, 4, 6, 8] {
            visit_matchings(two_n, &mut |m| {
                assert!(fiber_identity(m), "fiber identity at {:?}", m.pairs());
            });
        }
    }

    #[test]
    fn drake_examples() {
        let m = Matching::from_pairs(4, &[(1, 2), (3, 4)]);
        assert_eq!(drake_stats(&m), (2, 2));
        let m = Matching::from_pairs(4, &[(1, 4), (2, 3)]);
        assert_eq!(drake_stats(&m).0, 1);
        let m = Matching::from_pairs(4, &[(1, 3), (2, 4)]);
        assert_eq!(drake_stats(&m).1, 1);
    }

    #[test]
    fn json_blocks_shape() {
        let p = SymPairPartition::from_blocks(1, &[vec![1], vec![-1]]).unwrap();
        assert_eq!(p.to_json().to_string(), "[[-1],[1]]");
        let _ = BigInt::one();
    }
}
