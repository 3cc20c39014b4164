//! The tensor-space representation of `B(n)` on `(C^{M+N})^{tensor n}` whose
//! normalized character is the signed reflection function.
//!
//! The space `V` has a basis of `M` "plus" vectors followed by `N` "minus"
//! vectors. A group element permutes the tensor slots by its underlying
//! permutation, multiplies every slot holding a minus vector by the slot's
//! sign, and scales everything by a global class sign. All matrices are
//! signed permutation matrices and are stored as an index map plus signs.

use crate::group::{cycle_type, elements, Convention, Reflection, SignedPermutation};
use crate::scalar::rat_int;
use num::rational::BigRational;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Error, Debug, PartialEq, Eq)]
pub enum RepError {
    #[error("dimension budget exceeded: (M+N)^n = {0} > {1}")]
    BudgetExceeded(usize, usize),
}

/// Parameters of the representation: `q+ = eps/(M+N)`, `q- = (M-N)/(M+N)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RepConfig {
    pub m: usize,
    pub n_minus: usize,
    pub eps: i8,
    pub rank: usize,
}

impl RepConfig {
    pub fn new(m: usize, n_minus: usize, eps: i8, rank: usize) -> Self {
        assert!(m + n_minus >= 1, "M + N must be positive");
        assert!(eps == 1 || eps == -1);
        RepConfig {
            m,
            n_minus,
            eps,
            rank,
        }
    }

    pub fn dim_v(&self) -> usize {
        self.m + self.n_minus
    }

    pub fn dim(&self) -> usize {
        self.dim_v().pow(self.rank as u32)
    }

    pub fn q_plus(&self) -> BigRational {
        rat_int(self.eps as i64) / rat_int(self.dim_v() as i64)
    }

    pub fn q_minus(&self) -> BigRational {
        rat_int(self.m as i64 - self.n_minus as i64) / rat_int(self.dim_v() as i64)
    }
}

/// Signed permutation matrix: basis vector `k` maps to `sign[k] * e_{target[k]}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RepMatrix {
    pub dim: usize,
    pub target: Vec<usize>,
    pub sign: Vec<i8>,
}

impl RepMatrix {
    pub fn identity(dim: usize) -> Self {
        RepMatrix {
            dim,
            target: (0..dim).collect(),
            sign: vec![1; dim],
        }
    }

    /// Matrix product `self * other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let target = (0..self.dim).map(|k| self.target[other.target[k]]).collect();
        let sign = (0..self.dim)
            .map(|k| other.sign[k] * self.sign[other.target[k]])
            .collect();
        RepMatrix {
            dim: self.dim,
            target,
            sign,
        }
    }

    pub fn trace(&self) -> i64 {
        (0..self.dim)
            .filter(|&k| self.target[k] == k)
            .map(|k| self.sign[k] as i64)
            .sum()
    }

    pub fn dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0; self.dim]; self.dim];
        for k in 0..self.dim {
            out[self.target[k]][k] = self.sign[k] as i64;
        }
        out
    }
}

const DEFAULT_DIM_BUDGET: usize = 1 << 16;

fn decode(mut k: usize, base: usize, n: usize) -> Vec<usize> {
    let mut digits = vec![0; n];
    for i in (0..n).rev() {
        digits[i] = k % base;
        k /= base;
    }
    digits
}

fn encode(digits: &[usize], base: usize) -> usize {
    digits.iter().fold(0, |acc, &d| acc * base + d)
}

/// Matrix of the representation at `g`.
///
/// The class sign `eps^{||rho+|| + ||rho-||}` is realized multiplicatively as
/// the parity of the underlying unsigned permutation when `eps = -1` (the two
/// agree class by class, which is asserted in the test suite).
pub fn rep_matrix(g: &SignedPermutation, cfg: &RepConfig) -> Result<RepMatrix, RepError> {
    assert_eq!(g.rank(), cfg.rank);
    let dim = cfg.dim();
    if dim > DEFAULT_DIM_BUDGET {
        return Err(RepError::BudgetExceeded(dim, DEFAULT_DIM_BUDGET));
    }
    let base = cfg.dim_v();
    let n = cfg.rank;
    let (g_signs, _) = g.to_signed_model();
    let g_inv = g.inverse();
    let global = if cfg.eps == -1 {
        g.unsigned_parity()
    } else {
        1
    };
    let mut target = Vec::with_capacity(dim);
    let mut sign = Vec::with_capacity(dim);
    for k in 0..dim {
        let digits = decode(k, base, n);
        let mut out = vec![0; n];
        let mut s = global;
        for i in 1..=n {
            let src = g_inv.apply(i as i32).unsigned_abs() as usize;
            let d = digits[src - 1];
            out[i - 1] = d;
            if d >= cfg.m {
                s *= g_signs[i - 1];
            }
        }
        target.push(encode(&out, base));
        sign.push(s);
    }
    Ok(RepMatrix { dim, target, sign })
}

/// Closed form for the trace of the representation at `g`.
pub fn expected_trace(g: &SignedPermutation, cfg: &RepConfig) -> i64 {
    let t = cycle_type(g, Convention::Reduced);
    let n = cfg.rank as i64;
    let m_plus_n = cfg.dim_v() as i64;
    let m_minus_n = cfg.m as i64 - cfg.n_minus as i64;
    let class_sign = if cfg.eps == -1 && t.long_exponent() % 2 == 1 {
        -1
    } else {
        1
    };
    // exponent n - ||rho+|| - |rho-| is non-negative for reduced types
    let e1 = n - t.rho_plus.norm() as i64 - t.rho_minus.size() as i64;
    class_sign * m_plus_n.pow(e1 as u32) * m_minus_n.pow(t.short_exponent() as u32)
}

/// `omega(ab) = omega(a) omega(b)` over all generator pairs and `samples`
/// seeded random pairs.
pub fn verify_homomorphism(cfg: &RepConfig, samples: usize, seed: u64) -> Result<bool, RepError> {
    let n = cfg.rank;
    let mut gens = vec![Reflection::Short(1).to_perm(n)];
    for i in 1..n as i32 {
        gens.push(Reflection::Long(i, i + 1).to_perm(n));
    }
    for a in &gens {
        for b in &gens {
            if !homomorphism_pair(a, b, cfg)? {
                return Ok(false);
            }
        }
    }
    let els = elements(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let a = &els[rng.gen_range(0..els.len())];
        let b = &els[rng.gen_range(0..els.len())];
        if !homomorphism_pair(a, b, cfg)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn homomorphism_pair(
    a: &SignedPermutation,
    b: &SignedPermutation,
    cfg: &RepConfig,
) -> Result<bool, RepError> {
    let ab = a.compose(b).unwrap();
    Ok(rep_matrix(&ab, cfg)? == rep_matrix(a, cfg)?.compose(&rep_matrix(b, cfg)?))
}

/// For every element of `B(n)`: the trace equals the closed formula, and the
/// normalized trace equals the signed reflection function at the induced
/// parameters.
pub fn verify_character(cfg: &RepConfig) -> Result<bool, RepError> {
    let qp = cfg.q_plus();
    let qm = cfg.q_minus();
    let dim = rat_int(cfg.dim() as i64);
    for g in elements(cfg.rank) {
        let tr = rep_matrix(&g, cfg)?.trace();
        if tr != expected_trace(&g, cfg) {
            return Ok(false);
        }
        let normalized = rat_int(tr) / dim.clone();
        if normalized != crate::group::phi_of(&g, &qp, &qm) {
            return Ok(false);
        }
    }
    Ok(true)
}
