//! Exact bivariate polynomials in the two deformation parameters.
//!
//! This is the universal scalar ring for the symbolic identities: coefficients
//! are `BigRational`, monomials are `q+^a q-^b`, and the term map is kept
//! sorted by `(a, b)` so every report and comparison is deterministic.

use crate::scalar::{format_rational, Scalar};
use num::rational::BigRational;
use num::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Polynomial in `q+` and `q-` with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BivarPoly {
    terms: BTreeMap<(u32, u32), BigRational>,
}

impl BivarPoly {
    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((0, 0), c);
        }
        BivarPoly { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(BigRational::from_integer(n.into()))
    }

    /// The variable `q+`.
    pub fn qp() -> Self {
        Self::monomial(1, 0, BigRational::one())
    }

    /// The variable `q-`.
    pub fn qm() -> Self {
        Self::monomial(0, 1, BigRational::one())
    }

    pub fn monomial(e_qp: u32, e_qm: u32, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((e_qp, e_qm), c);
        }
        BivarPoly { terms }
    }

    /// Terms in `(e_qp, e_qm)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e_qp: u32, e_qm: u32) -> BigRational {
        self.terms
            .get(&(e_qp, e_qm))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BivarPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (*k, v * c))
                .collect(),
        }
    }

    pub fn eval(&self, qp: &BigRational, qm: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (&(a, b), c) in &self.terms {
            acc += c * qp.pow(a as i32) * qm.pow(b as i32);
        }
        acc
    }

    /// Substitutes `q+ = 0`, leaving a polynomial in `q-` only.
    pub fn subst_qp_zero(&self) -> Self {
        BivarPoly {
            terms: self
                .terms
                .iter()
                .filter(|((a, _), _)| *a == 0)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    fn insert(&mut self, key: (u32, u32), c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// First monomial (in `(e_qp, e_qm)` order) where `self` and `other` differ.
    pub fn first_difference(&self, other: &Self) -> Option<((u32, u32), BigRational, BigRational)> {
        let keys: std::collections::BTreeSet<(u32, u32)> = self
            .terms
            .keys()
            .chain(other.terms.keys())
            .copied()
            .collect();
        for k in keys {
            let a = self.coeff(k.0, k.1);
            let b = other.coeff(k.0, k.1);
            if a != b {
                return Some((k, a, b));
            }
        }
        None
    }
}

impl Zero for BivarPoly {
    fn zero() -> Self {
        BivarPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for BivarPoly {
    fn one() -> Self {
        BivarPoly::constant(BigRational::one())
    }
}

impl Add for BivarPoly {
    type Output = BivarPoly;
    fn add(self, rhs: Self) -> Self {
        let mut out = self;
        for (k, v) in rhs.terms {
            out.insert(k, v);
        }
        out
    }
}

impl Sub for BivarPoly {
    type Output = BivarPoly;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> Self {
        BivarPoly {
            terms: self.terms.into_iter().map(|(k, v)| (k, -v)).collect(),
        }
    }
}

impl Mul for BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: Self) -> Self {
        let mut out = BivarPoly::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.insert((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }
}

impl Scalar for BivarPoly {
    fn from_rational(q: &BigRational) -> Self {
        BivarPoly::constant(q.clone())
    }
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(a, b), c) in &self.terms {
            let cs = format_rational(c);
            if first {
                first = false;
            } else {
                write!(f, " + ")?;
            }
            let mut piece = String::new();
            if a == 0 && b == 0 {
                piece.push_str(&cs);
            } else {
                if cs != "1" {
                    piece.push_str(&cs);
                    piece.push(' ');
                }
                if a == 1 {
                    piece.push_str("q+");
                } else if a > 1 {
                    piece.push_str(&format!("q+^{a}"));
                }
                if a > 0 && b > 0 {
                    piece.push(' ');
                }
                if b == 1 {
                    piece.push_str("q-");
                } else if b > 1 {
                    piece.push_str(&format!("q-^{b}"));
                }
            }
            write!(f, "{piece}")?;
        }
        Ok(())
    }
}
