//! Irreducible characters of the symmetric and hyperoctahedral groups, the
//! expansion of the signed reflection function into irreducible characters,
//! the positive-definiteness classification, exact Gram tests, and the
//! extreme-character evaluator for the infinite group.

use crate::group::{elements, phi_of, CycleType};
use crate::linalg::is_psd;
use crate::partition::{partition_pairs_of_total, Partition};
use crate::poly::BivarPoly;
use crate::scalar::{abs_at_most_one, rat};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use thiserror::Error;

#[derive(Error, Debug, PartialEq, Eq)]
pub enum CharError {
    #[error("size mismatch: |lambda| = {0} but |mu| = {1}")]
    SizeMismatch(usize, usize),
}

/// Irreducible character of the symmetric group by the Murnaghan-Nakayama
/// recursion on border strips, memoized on `(lambda, mu)`.
pub fn char_a(lam: &Partition, mu: &Partition) -> Result<i64, CharError> {
    if lam.size() != mu.size() {
        return Err(CharError::SizeMismatch(lam.size(), mu.size()));
    }
    thread_local! {
        static MEMO: std::cell::RefCell<MnMemo> = std::cell::RefCell::new(MnMemo::new());
    }
    MEMO.with(|memo| Ok(mn(lam.parts(), mu.parts(), &mut memo.borrow_mut())))
}

type MnMemo = std::collections::HashMap<(Vec<usize>, Vec<usize>), i64>;

fn mn(lam: &[usize], mu: &[usize], memo: &mut MnMemo) -> i64 {
    if mu.is_empty() {
        return 1; // lam is empty too
    }
    let key = (lam.to_vec(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let k = mu[0];
    let rest = &mu[1..];
    let mut total = 0;
    for (next, sign) in remove_border_strips(lam, k) {
        total += sign * mn(next.parts(), rest, memo);
    }
    memo.insert(key, total);
    total
}

/// All ways to remove a border strip of size `k`, with the sign `(-1)^height`.
/// Uses the beta-number encoding: strips correspond to moves `b -> b - k`.
fn remove_border_strips(lam: &[usize], k: usize) -> Vec<(Partition, i64)> {
    let rows = lam.len();
    let betas: Vec<usize> = (0..rows).map(|i| lam[i] + (rows - 1 - i)).collect();
    let mut out = Vec::new();
    for i in 0..rows {
        if betas[i] < k {
            continue;
        }
        let target = betas[i] - k;
        if betas.contains(&target) {
            continue;
        }
        let height = betas
            .iter()
            .filter(|&&b| b > target && b < betas[i])
            .count();
        let mut next: Vec<usize> = betas.clone();
        next[i] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let parts = next
            .iter()
            .enumerate()
            .map(|(r, &b)| b - (rows - 1 - r))
            .collect();
        out.push((
            Partition::new(parts),
            if height % 2 == 0 { 1 } else { -1 },
        ));
    }
    out
}

/// Irreducible character of `B(n)` on the padded class `(rho+, rho-)`, read
/// off the two-alphabet power-sum expansion: assign every part of `rho+` and
/// `rho-` to the `x` or `y` alphabet, with a sign for each `rho-` part sent
/// to `y`.
pub fn char_b(
    lam_pair: (&Partition, &Partition),
    rho: &CycleType,
) -> Result<i64, CharError> {
    let (lp, lm) = lam_pair;
    let n = lp.size() + lm.size();
    let rho_n = rho.rho_plus.size() + rho.rho_minus.size();
    if n != rho_n {
        return Err(CharError::SizeMismatch(n, rho_n));
    }
    let plus_parts = rho.rho_plus.parts();
    let minus_parts = rho.rho_minus.parts();
    let total_parts = plus_parts.len() + minus_parts.len();
    let mut sum = 0i64;
    for mask in 0u64..(1 << total_parts) {
        let mut to_x = Vec::new();
        let mut to_y = Vec::new();
        let mut sign = 1i64;
        for (idx, &part) in plus_parts.iter().chain(minus_parts.iter()).enumerate() {
            let is_minus_part = idx >= plus_parts.len();
            if mask >> idx & 1 == 0 {
                to_x.push(part);
            } else {
                to_y.push(part);
                if is_minus_part {
                    sign = -sign;
                }
            }
        }
        let size_x: usize = to_x.iter().sum();
        if size_x != lp.size() {
            continue;
        }
        let mu_x = Partition::new(to_x);
        let mu_y = Partition::new(to_y);
        sum += sign * char_a(lp, &mu_x)? * char_a(lm, &mu_y)?;
    }
    Ok(sum)
}

/// Half-sums of the deformation parameters as polynomials.
fn half(sign_plus: bool) -> BivarPoly {
    let one = BivarPoly::one();
    let qm = BivarPoly::qm();
    let s = if sign_plus { one + qm } else { one - qm };
    s.scale(&rat(1, 2))
}

/// Multiplicity of the irreducible `(lambda+, lambda-)` in the expansion of
/// the signed reflection function:
/// product over boxes of `q+ c + (1 ± q-)/2`, divided by the hook products.
///
/// The hook-length division makes the box product equal to
/// `s_{lambda+}(1^M) s_{lambda-}(1^N) / (M+N)^n` at the integer parameter
/// points, which is what the expansion over irreducible characters requires.
pub fn coefficient_b(lp: &Partition, lm: &Partition) -> BivarPoly {
    let mut acc = BivarPoly::one();
    for (&sign_plus, part) in [(true, lp), (false, lm)].iter().map(|(s, p)| (s, *p)) {
        let a = half(sign_plus);
        for c in part.contents() {
            let factor = BivarPoly::qp().scale(&BigRational::from_integer(c.into())) + a.clone();
            acc = acc * factor;
        }
    }
    let hooks = lp.hook_product() * lm.hook_product();
    acc.scale(&BigRational::new(BigInt::one(), hooks))
}

/// Checks the character expansion of the signed reflection function on every
/// padded class of `B(n)`: the sum of `char_b * coefficient_b` over all
/// irreducibles must equal `phi` as an exact polynomial identity.
pub fn verify_rozklad(n: usize) -> bool {
    rozklad_failures(n).is_empty()
}

/// Classes where the expansion fails (empty in a correct build).
pub fn rozklad_failures(n: usize) -> Vec<CycleType> {
    let irreps = partition_pairs_of_total(n);
    let coeffs: Vec<BivarPoly> = irreps
        .iter()
        .map(|(lp, lm)| coefficient_b(lp, lm))
        .collect();
    let mut failures = Vec::new();
    for rho in CycleType::all_padded(n) {
        let mut sum = BivarPoly::zero();
        for ((lp, lm), coeff) in irreps.iter().zip(&coeffs) {
            let chi = char_b((lp, lm), &rho).unwrap();
            if chi != 0 {
                sum = sum + coeff.scale(&BigRational::from_integer(chi.into()));
            }
        }
        let expected = rho.phi(&BivarPoly::qp(), &BivarPoly::qm());
        if sum != expected {
            failures.push(rho);
        }
    }
    failures
}

/// Verdict of the positive-definiteness classification on the infinite
/// hyperoctahedral group.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Classification {
    /// `q+ = eps/(M+N)`, `q- = (M-N)/(M+N)`: an extreme character.
    Extreme { m: u64, n: u64, eps: i8 },
    /// `q+ = 0`, `|q-| <= 1`: the degenerate one-parameter family.
    Degenerate { q_minus: BigRational },
    /// Not positive definite; a witness pair with negative multiplicity when
    /// one exists within the search bound.
    NotPd {
        witness: Option<(Partition, Partition)>,
    },
}

impl Classification {
    pub fn is_pd(&self) -> bool {
        !matches!(self, Classification::NotPd { .. })
    }
}

pub const DEFAULT_WITNESS_BOUND: usize = 12;

/// Number-theoretic classification of `(q+, q-)`. The verdict never depends
/// on the witness search; the witness is reported as evidence only.
pub fn classify(qp: &BigRational, qm: &BigRational) -> Classification {
    classify_with_bound(qp, qm, DEFAULT_WITNESS_BOUND)
}

pub fn classify_with_bound(
    qp: &BigRational,
    qm: &BigRational,
    witness_bound: usize,
) -> Classification {
    if qp.is_zero() {
        if abs_at_most_one(qm) {
            return Classification::Degenerate { q_minus: qm.clone() };
        }
        return Classification::NotPd {
            witness: find_witness(qp, qm, witness_bound),
        };
    }
    let abs_qp = qp.abs();
    let inv = abs_qp.recip();
    let two_abs = rat(2, 1) * &abs_qp;
    let m = (BigRational::one() + qm) / &two_abs;
    let n = (BigRational::one() - qm) / &two_abs;
    if inv.is_integer() && m.is_integer() && n.is_integer() && !m.is_negative() && !n.is_negative()
    {
        use num::ToPrimitive;
        return Classification::Extreme {
            m: m.to_integer().to_u64().unwrap(),
            n: n.to_integer().to_u64().unwrap(),
            eps: if qp.is_positive() { 1 } else { -1 },
        };
    }
    Classification::NotPd {
        witness: find_witness(qp, qm, witness_bound),
    }
}

/// Scans partition pairs in increasing total size for a negative multiplicity.
pub fn find_witness(
    qp: &BigRational,
    qm: &BigRational,
    bound: usize,
) -> Option<(Partition, Partition)> {
    for total in 1..=bound {
        for (lp, lm) in partition_pairs_of_total(total) {
            if coefficient_b(&lp, &lm).eval(qp, qm).is_negative() {
                return Some((lp, lm));
            }
        }
    }
    None
}

/// Verdict for the one-parameter reflection function on the infinite
/// symmetric group: positive definite exactly for `q = 0` or `1/q` a nonzero
/// integer.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ClassificationA {
    Pd { inv: Option<i64> },
    NotPd { witness: Option<Partition> },
}

impl ClassificationA {
    pub fn is_pd(&self) -> bool {
        matches!(self, ClassificationA::Pd { .. })
    }
}

/// Weight of the irreducible `lambda` in the type-A expansion:
/// `prod over boxes (1 + q c) / hooks`. For `q = 1/N` this is
/// `s_lambda(1^N) / N^n`.
pub fn coefficient_a(lam: &Partition, q: &BigRational) -> BigRational {
    let mut acc = BigRational::one();
    for c in lam.contents() {
        acc *= BigRational::one() + q * BigRational::from_integer(c.into());
    }
    acc / BigRational::from_integer(lam.hook_product())
}

pub fn classify_a(q: &BigRational) -> ClassificationA {
    classify_a_with_bound(q, DEFAULT_WITNESS_BOUND)
}

pub fn classify_a_with_bound(q: &BigRational, bound: usize) -> ClassificationA {
    if q.is_zero() {
        return ClassificationA::Pd { inv: None };
    }
    let inv = q.recip();
    if inv.is_integer() {
        return ClassificationA::Pd {
            inv: Some(inv.to_integer().to_string().parse().unwrap()),
        };
    }
    let witness = (1..=bound)
        .flat_map(crate::partition::partitions_of)
        .find(|lam| coefficient_a(lam, q).is_negative());
    ClassificationA::NotPd { witness }
}

/// The exact Gram matrix `G[g, h] = phi(h^{-1} g)` over all of `B(n)`.
pub fn gram_matrix(n: usize, qp: &BigRational, qm: &BigRational) -> Vec<Vec<BigRational>> {
    let els = elements(n);
    let inverses: Vec<_> = els.iter().map(|g| g.inverse()).collect();
    els.iter()
        .map(|g| {
            inverses
                .iter()
                .map(|h_inv| phi_of(&h_inv.compose(g).unwrap(), qp, qm))
                .collect()
        })
        .collect()
}

/// Exact PSD test of the reflection-function Gram matrix on `B(n)`.
pub fn gram_psd(n: usize, qp: &BigRational, qm: &BigRational) -> bool {
    is_psd(&gram_matrix(n, qp, qm))
}

/// Parameters of an extreme character of the infinite hyperoctahedral group.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct ThomaParamsB {
    pub alpha: Vec<BigRational>,
    pub beta: Vec<BigRational>,
    pub gamma: Vec<BigRational>,
    pub delta: Vec<BigRational>,
    pub kappa: BigRational,
}

impl ThomaParamsB {
    /// Flat parameters realizing the signed reflection function with
    /// `q+ = eps/(m+n)`, `q- = (m-n)/(m+n)`.
    pub fn flat(m: u64, n: u64, eps: i8) -> Self {
        let t = BigRational::new(BigInt::one(), BigInt::from(m + n));
        let flat_m = vec![t.clone(); m as usize];
        let flat_n = vec![t; n as usize];
        if eps > 0 {
            ThomaParamsB {
                alpha: flat_m,
                gamma: flat_n,
                ..Default::default()
            }
        } else {
            ThomaParamsB {
                beta: flat_m,
                delta: flat_n,
                ..Default::default()
            }
        }
    }

    /// The `kappa`-only family realizing `q+ = 0`, `q- = kappa`.
    pub fn kappa_only(kappa: BigRational) -> Self {
        ThomaParamsB {
            kappa,
            ..Default::default()
        }
    }

    fn sum(seq: &[BigRational]) -> BigRational {
        seq.iter().sum()
    }

    fn power_sum(seq: &[BigRational], j: usize) -> BigRational {
        seq.iter().map(|x| x.pow(j as i32)).sum()
    }
}

/// Value of the extreme character with the given parameters on a padded
/// class: the leading factor is raised to the number of fixed negative
/// cycles, and for each cycle length `j >= 2` the signed power-sum bracket is
/// raised to the multiplicity of `j` in `rho+` resp. `rho-`. Parts equal to 1
/// in `rho+` contribute no factor.
pub fn hirai_character(p: &ThomaParamsB, rho: &CycleType) -> BigRational {
    let leading_base = ThomaParamsB::sum(&p.alpha) + ThomaParamsB::sum(&p.beta)
        - ThomaParamsB::sum(&p.gamma)
        - ThomaParamsB::sum(&p.delta)
        + p.kappa.clone();
    let m1 = rho.rho_minus.mult(1);
    let mut value = if m1 == 0 {
        BigRational::one()
    } else {
        leading_base.pow(m1 as i32)
    };
    let max_j = rho.rho_plus.max_part().max(rho.rho_minus.max_part());
    for j in 2..=max_j {
        let alt: BigRational = if j % 2 == 1 {
            BigRational::one()
        } else {
            -BigRational::one()
        };
        let base_common =
            ThomaParamsB::power_sum(&p.alpha, j) + &alt * ThomaParamsB::power_sum(&p.beta, j);
        let base_eps =
            ThomaParamsB::power_sum(&p.gamma, j) + &alt * ThomaParamsB::power_sum(&p.delta, j);
        for (eps_plus, part) in [(true, &rho.rho_plus), (false, &rho.rho_minus)] {
            let mult = part.mult(j);
            if mult == 0 {
                continue;
            }
            let bracket = if eps_plus {
                &base_common + &base_eps
            } else {
                &base_common - &base_eps
            };
            value *= bracket.pow(mult as i32);
        }
    }
    value
}

/// Checks that the extreme character with flat parameters agrees with the
/// signed reflection function on every class of `B(n)`.
pub fn hirai_matches_phi(m: u64, n: u64, eps: i8, rank: usize) -> bool {
    let params = ThomaParamsB::flat(m, n, eps);
    let qp = BigRational::new(BigInt::from(eps), BigInt::from(m + n));
    let qm = BigRational::new(BigInt::from(m as i64 - n as i64), BigInt::from(m + n));
    hirai_matches_phi_at(&params, &qp, &qm, rank)
}

/// Same check for the degenerate family `q+ = 0`, `q- = kappa`.
pub fn hirai_kappa_matches_phi(kappa: &BigRational, rank: usize) -> bool {
    let params = ThomaParamsB::kappa_only(kappa.clone());
    hirai_matches_phi_at(&params, &BigRational::zero(), kappa, rank)
}

fn hirai_matches_phi_at(
    params: &ThomaParamsB,
    qp: &BigRational,
    qm: &BigRational,
    rank: usize,
) -> bool {
    CycleType::all_padded(rank)
        .iter()
        .all(|rho| hirai_character(params, rho) == rho.phi(qp, qm))
}

/// Evaluates phi on an element at rational parameters (convenience used by
/// the Gram assembly and reports).
pub fn phi_rational(
    s: &crate::group::SignedPermutation,
    qp: &BigRational,
    qm: &BigRational,
) -> BigRational {
    phi_of(s, qp, qm)
}

/// Smallest total size of a padded pair whose multiplicity is negative, if
/// any within the bound: the level at which the Gram matrix must fail.
pub fn min_negative_level(qp: &BigRational, qm: &BigRational, bound: usize) -> Option<usize> {
    (1..=bound).find(|&total| {
        partition_pairs_of_total(total)
            .iter()
            .any(|(lp, lm)| coefficient_b(lp, lm).eval(qp, qm).is_negative())
    })
}
