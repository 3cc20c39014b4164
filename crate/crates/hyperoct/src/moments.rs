//! Moments of the deformed Gaussian distribution along independent routes:
//! the three-term recurrence, weighted Dyck paths, symmetric pair partitions,
//! plain matchings in the `(x, y) = (1 + q-, 2 q+)` variables, and the Fock
//! operator itself. All routes must agree as exact polynomials.

use crate::pairpart::{self, Matching};
use crate::poly::BivarPoly;
use crate::scalar::{catalan, double_factorial_odd, factorial, rat, rat_int, Scalar};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

/// Jacobi coefficient `lambda(k) = 1 + 2(k-1) q+ + q-` of the three-term
/// recurrence, as a polynomial.
pub fn lambda_poly(k: usize) -> BivarPoly {
    BivarPoly::one() + BivarPoly::qp().scale(&rat_int(2 * (k as i64 - 1))) + BivarPoly::qm()
}

/// `lambda(k)` at fixed rational parameters.
pub fn lambda_rational(k: usize, qp: &BigRational, qm: &BigRational) -> BigRational {
    BigRational::one() + rat_int(2 * (k as i64 - 1)) * qp + qm
}

/// Associated-Hermite shift `c = (1+q-)/(2 q+) - 1` for `q+ != 0`, so that
/// `lambda(k) = 2 q+ (k + c)`. The orthogonality measure is the dilation of
/// the associated measure by `sqrt(2 q+)`; the factor stays symbolic (it is
/// reported as a formula, never evaluated numerically).
pub fn hermite_shift(qp: &BigRational, qm: &BigRational) -> Option<BigRational> {
    if qp.is_zero() {
        return None;
    }
    Some((BigRational::one() + qm) / (rat(2, 1) * qp) - BigRational::one())
}

/// Moment of order `m` via the tridiagonal recurrence: the `e_0` coefficient
/// of `T^m e_0` where `T e_k = e_{k+1} + lambda(k) e_{k-1}`. Odd moments
/// vanish.
pub fn jacobi_moment(m: usize) -> BivarPoly {
    let mut state = vec![BivarPoly::one()];
    for _ in 0..m {
        let mut next = vec![BivarPoly::zero(); state.len() + 1];
        for (k, c) in state.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            next[k + 1] = next[k + 1].clone() + c.clone();
            if k > 0 {
                next[k - 1] = next[k - 1].clone() + lambda_poly(k) * c.clone();
            }
        }
        state = next;
    }
    state[0].clone()
}

/// Same recurrence at fixed rational parameters.
pub fn jacobi_moment_rational(m: usize, qp: &BigRational, qm: &BigRational) -> BigRational {
    let mut state = vec![BigRational::one()];
    for _ in 0..m {
        let mut next = vec![BigRational::zero(); state.len() + 1];
        for (k, c) in state.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            next[k + 1] += c;
            if k > 0 {
                next[k - 1] += lambda_rational(k, qp, qm) * c;
            }
        }
        state = next;
    }
    state[0].clone()
}

/// Moment of order `2n` as the weighted generating function of Dyck paths:
/// each down step at height `h` (after the step) contributes
/// `1 + q- + 2 q+ h`.
pub fn dyck_moment(two_n: usize) -> BivarPoly {
    if two_n % 2 == 1 {
        return BivarPoly::zero();
    }
    let mut total = BivarPoly::zero();
    visit_dyck_weights(two_n, 0, BivarPoly::one(), &mut total);
    total
}

fn visit_dyck_weights(remaining: usize, height: usize, weight: BivarPoly, total: &mut BivarPoly) {
    if remaining == 0 {
        if height == 0 {
            *total = total.clone() + weight;
        }
        return;
    }
    // up step
    if height < remaining - 1 {
        visit_dyck_weights(remaining - 1, height + 1, weight.clone(), total);
    }
    // down step: weight by 1 + q- + 2 q+ (height - 1)
    if height > 0 {
        let factor = BivarPoly::one()
            + BivarPoly::qm()
            + BivarPoly::qp().scale(&rat_int(2 * (height as i64 - 1)));
        visit_dyck_weights(remaining - 1, height - 1, weight * factor, total);
    }
}

/// Number of Dyck paths of semi-length `n` (a Catalan number, by direct count).
pub fn dyck_count(n: usize) -> usize {
    let mut count = 0usize;
    visit_dyck_count(2 * n, 0, &mut count);
    count
}

fn visit_dyck_count(remaining: usize, height: usize, count: &mut usize) {
    if remaining == 0 {
        if height == 0 {
            *count += 1;
        }
        return;
    }
    if height < remaining - 1 {
        visit_dyck_count(remaining - 1, height + 1, count);
    }
    if height > 0 {
        visit_dyck_count(remaining - 1, height - 1, count);
    }
}

/// Moment of order `2n` as the sum over perfect symmetric pair partitions of
/// `[±2n]` of `q-^{c-} q+^{l_c}` (all vectors equal and unit).
pub fn pair_partition_moment(two_n: usize) -> BivarPoly {
    if two_n % 2 == 1 {
        return BivarPoly::zero();
    }
    let mut counts: std::collections::BTreeMap<(usize, usize), BigInt> =
        std::collections::BTreeMap::new();
    pairpart::visit_partitions(two_n, true, None, &mut |p| {
        let st = pairpart::stats(p);
        *counts.entry((st.l_c, st.c_minus)).or_default() += 1;
    });
    let mut out = BivarPoly::zero();
    for ((lc, cm), count) in counts {
        out = out
            + BivarPoly::monomial(
                lc as u32,
                cm as u32,
                BigRational::from_integer(count),
            );
    }
    out
}

/// Moment of order `2n` as the sum over plain matchings of `[2n]` of
/// `(1 + q-)^{c} (2 q+)^{n - c}` with `c` the concatenation cycle count.
pub fn matching_moment(two_n: usize) -> BivarPoly {
    if two_n % 2 == 1 {
        return BivarPoly::zero();
    }
    let n = two_n / 2;
    let mut counts: std::collections::BTreeMap<usize, BigInt> = std::collections::BTreeMap::new();
    pairpart::visit_matchings(two_n, &mut |m| {
        *counts.entry(pairpart::cycle_count(m)).or_default() += 1;
    });
    let x = BivarPoly::one() + BivarPoly::qm();
    let y = BivarPoly::qp().scale(&rat(2, 1));
    let mut out = BivarPoly::zero();
    for (c, count) in counts {
        out = out
            + (x.pow(c) * y.pow(n - c)).scale(&BigRational::from_integer(count));
    }
    out
}

/// One row of the cross-check report.
#[derive(Clone, Debug)]
pub struct MomentRow {
    pub order: usize,
    pub jacobi: BivarPoly,
    pub dyck: BivarPoly,
    pub pair_partition: BivarPoly,
    pub matching: BivarPoly,
    pub fock: BivarPoly,
    /// first differing monomial between two disagreeing routes, if any
    pub first_diff: Option<String>,
}

impl MomentRow {
    pub fn all_equal(&self) -> bool {
        self.first_diff.is_none()
    }
}

/// Computes every even moment up to `two_n_max` along all five routes and
/// reports the first discrepancy per order (none in a correct build).
pub fn cross_check(two_n_max: usize) -> Vec<MomentRow> {
    let mut rows = Vec::new();
    for order in (2..=two_n_max).step_by(2) {
        let jacobi = jacobi_moment(order);
        let dyck = dyck_moment(order);
        let pair_partition = pair_partition_moment(order);
        let matching = matching_moment(order);
        let fock = crate::fock::gaussian_moment_operator(order);
        let routes = [
            ("jacobi", &jacobi),
            ("dyck", &dyck),
            ("pair_partition", &pair_partition),
            ("matching", &matching),
            ("fock", &fock),
        ];
        let mut first_diff = None;
        for (name, poly) in &routes[1..] {
            if let Some((mono, a, b)) = jacobi.first_difference(poly) {
                first_diff = Some(format!(
                    "jacobi vs {name} at q+^{} q-^{}: {} vs {}",
                    mono.0,
                    mono.1,
                    crate::scalar::format_rational(&a),
                    crate::scalar::format_rational(&b)
                ));
                break;
            }
        }
        rows.push(MomentRow {
            order,
            jacobi,
            dyck,
            pair_partition,
            matching,
            fock,
            first_diff,
        });
    }
    rows
}

/// One specialization row: classical sequences recovered from the bivariate
/// moment polynomial.
#[derive(Clone, Debug)]
pub struct SpecializationRow {
    pub n: usize,
    /// `q+ = 0` slice equals `C_n (1+q-)^n`
    pub catalan_dilation_ok: bool,
    /// value at `(x, y) = (2, 2)`, i.e. `q- = q+ = 1`; expected `(2n)!/n!`
    pub at_x2_y2: BigInt,
    pub expected_x2_y2: BigInt,
    /// value at `(x, y) = (2, 0)`, i.e. `q- = 1, q+ = 0`; expected `2^n C_n`
    pub at_x2_y0: BigInt,
    pub expected_x2_y0: BigInt,
    /// number of perfect symmetric pair partitions; expected `2^n (2n-1)!!`
    pub total_count: BigInt,
    pub expected_total: BigInt,
    /// cycle / non-nested / no-right-crossing statistics agree
    pub drake_ok: bool,
}

impl SpecializationRow {
    pub fn all_ok(&self) -> bool {
        self.catalan_dilation_ok
            && self.at_x2_y2 == self.expected_x2_y2
            && self.at_x2_y0 == self.expected_x2_y0
            && self.total_count == self.expected_total
            && self.drake_ok
    }
}

pub fn specializations(n_max: usize) -> Vec<SpecializationRow> {
    (1..=n_max).map(specialization_row).collect()
}

fn specialization_row(n: usize) -> SpecializationRow {
    let m = jacobi_moment(2 * n);

    // q+ = 0 slice
    let catalan_poly = (BivarPoly::one() + BivarPoly::qm())
        .pow(n)
        .scale(&BigRational::from_integer(catalan(n)));
    let catalan_dilation_ok = m.subst_qp_zero() == catalan_poly;

    let as_int = |q: BigRational| -> BigInt {
        assert!(q.is_integer());
        q.to_integer()
    };
    let at_x2_y2 = as_int(m.eval(&rat_int(1), &rat_int(1)));
    let expected_x2_y2 = factorial(2 * n) / factorial(n);
    let at_x2_y0 = as_int(m.eval(&rat_int(0), &rat_int(1)));
    let expected_x2_y0 = BigInt::from(2u8).pow(n as u32) * catalan(n);

    let mut total_count = BigInt::zero();
    pairpart::visit_partitions(2 * n, true, None, &mut |_| {
        total_count += 1;
    });
    let expected_total = BigInt::from(2u8).pow(n as u32) * double_factorial_odd(n);

    SpecializationRow {
        n,
        catalan_dilation_ok,
        at_x2_y2,
        expected_x2_y2,
        at_x2_y0,
        expected_x2_y0,
        total_count,
        expected_total,
        drake_ok: drake_equidistribution(n),
    }
}

/// The three univariate statistics (concatenation cycles, non-nested pairs,
/// pairs with no right crossing) are equidistributed over matchings of `[2n]`.
pub fn drake_equidistribution(n: usize) -> bool {
    let mut by_cycles: std::collections::BTreeMap<usize, BigInt> = Default::default();
    let mut by_non_nested: std::collections::BTreeMap<usize, BigInt> = Default::default();
    let mut by_no_rc: std::collections::BTreeMap<usize, BigInt> = Default::default();
    pairpart::visit_matchings(2 * n, &mut |m: &Matching| {
        *by_cycles.entry(pairpart::cycle_count(m)).or_default() += 1;
        let (nn, nrc) = pairpart::drake_stats(m);
        *by_non_nested.entry(nn).or_default() += 1;
        *by_no_rc.entry(nrc).or_default() += 1;
    });
    by_cycles == by_non_nested && by_cycles == by_no_rc
}

/// Hankel determinant signs for the moment sequence at the exclusion
/// parameters `q+ = -1/(M+N)`, `q- = (M-N)/(M+N)`: the matrix of order
/// `M+1` must be positive definite and the one of order `M+2` singular,
/// certifying a measure supported on exactly `M+1` atoms.
pub fn hankel_atom_check(m: u64, n_param: u64) -> (i8, i8, bool) {
    let qp = BigRational::new((-1).into(), BigInt::from(m + n_param));
    let qm = BigRational::new(
        BigInt::from(m as i64 - n_param as i64),
        BigInt::from(m + n_param),
    );
    let moments: Vec<BigRational> = (0..=(2 * (m as usize + 1)))
        .map(|k| jacobi_moment_rational(k, &qp, &qm))
        .collect();
    let hankel = |order: usize| -> Vec<Vec<BigRational>> {
        (0..order)
            .map(|i| (0..order).map(|j| moments[i + j].clone()).collect())
            .collect()
    };
    let sign_m1 = crate::linalg::det_sign(&hankel(m as usize + 1));
    let sign_m2 = crate::linalg::det_sign(&hankel(m as usize + 2));
    (sign_m1, sign_m2, sign_m1 == 1 && sign_m2 == 0)
}
