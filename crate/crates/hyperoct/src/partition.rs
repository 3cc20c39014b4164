//! Integer partitions with the combinatorial accessors used throughout:
//! norm, multiplicities, box contents and hook lengths.

use num::bigint::BigInt;
use num::One;
use std::fmt;

/// Weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from any list of non-negative integers: zeros are
    /// dropped and the rest is sorted decreasingly.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: vec![] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|rho| - l(rho)`, the number of boxes outside the first column.
    pub fn norm(&self) -> usize {
        self.size() - self.len()
    }

    /// Multiplicity of the part `j`.
    pub fn mult(&self, j: usize) -> usize {
        self.parts.iter().filter(|&&p| p == j).count()
    }

    /// Largest part, 0 for the empty partition.
    pub fn max_part(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Contents `column - row` of all boxes, rows and columns 1-based.
    pub fn contents(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.size());
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 1..=p {
                out.push(j as i64 - (i as i64 + 1));
            }
        }
        out
    }

    /// Column lengths of the diagram (the conjugate partition).
    pub fn conjugate(&self) -> Partition {
        let cols = self.max_part();
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Product of all hook lengths of the diagram.
    pub fn hook_product(&self) -> BigInt {
        let conj = self.conjugate();
        let mut acc = BigInt::one();
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 1..=p {
                let arm = p - j;
                let leg = conj.parts[j - 1] - (i + 1);
                acc *= BigInt::from((arm + leg + 1) as u64);
            }
        }
        acc
    }

    /// Adds parts equal to 1 until the size reaches `n`.
    pub fn padded_to(&self, n: usize) -> Partition {
        assert!(self.size() <= n, "cannot pad {self} to size {n}");
        let mut parts = self.parts.clone();
        parts.extend(std::iter::repeat_n(1, n - self.size()));
        Partition { parts }
    }

    /// Removes all parts equal to 1.
    pub fn strip_ones(&self) -> Partition {
        Partition {
            parts: self.parts.iter().copied().filter(|&p| p > 1).collect(),
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n` in reverse lexicographic order (largest part first).
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            current.push(p);
            rec(remaining - p, p, current, out);
            current.pop();
        }
    }
    rec(n, n.max(1), &mut current, &mut out);
    out
}

/// All ordered pairs of partitions with `|a| + |b| = total`, deterministic order.
pub fn partition_pairs_of_total(total: usize) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for k in 0..=total {
        for a in partitions_of(k) {
            for b in partitions_of(total - k) {
                out.push((a.clone(), b));
            }
        }
    }
    out
}
