//! Exact rational linear algebra: a positive-semidefiniteness decision via
//! LDL^T with symmetric pivoting, and fraction-free determinant signs for
//! Hankel matrices.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

/// Decides positive semidefiniteness of a symmetric rational matrix exactly.
///
/// At each step the largest remaining diagonal entry is chosen as pivot. If it
/// is negative the matrix is not PSD; if it is zero the matrix is PSD exactly
/// when the whole remaining block vanishes; otherwise one Schur-complement
/// step is taken.
pub fn is_psd(matrix: &[Vec<BigRational>]) -> bool {
    let n = matrix.len();
    let mut a: Vec<Vec<BigRational>> = matrix.to_vec();
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        let &p = active
            .iter()
            .max_by(|&&i, &&j| a[i][i].cmp(&a[j][j]))
            .unwrap();
        let d = a[p][p].clone();
        if d.is_negative() {
            return false;
        }
        if d.is_zero() {
            // maximal diagonal is zero: PSD iff the remaining block is zero
            return active
                .iter()
                .all(|&i| active.iter().all(|&j| a[i][j].is_zero()));
        }
        active.retain(|&i| i != p);
        // symmetric Schur complement: update the lower triangle and mirror
        for ii in 0..active.len() {
            let i = active[ii];
            if a[i][p].is_zero() {
                continue;
            }
            let f = &a[i][p] / &d;
            for &j in active.iter().take(ii + 1) {
                if a[p][j].is_zero() {
                    continue;
                }
                let t = &f * &a[p][j];
                a[i][j] -= &t;
                if i != j {
                    a[j][i] = a[i][j].clone();
                }
            }
        }
    }
    true
}

/// Sign of `det(m)` for a square rational matrix: `-1`, `0` or `1`.
///
/// Rows are first scaled to integers (positive factors, so the sign is
/// unchanged) and the determinant is computed by fraction-free Bareiss
/// elimination.
pub fn det_sign(matrix: &[Vec<BigRational>]) -> i8 {
    let n = matrix.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|row| {
            let lcm = row
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter()
                .map(|x| x.numer() * (&lcm / x.denom()))
                .collect()
        })
        .collect();
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = &a[n - 1][n - 1];
    if d.is_zero() {
        0
    } else if d.is_negative() {
        -sign
    } else {
        sign
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};

    fn m(rows: &[&[(i64, i64)]]) -> Vec<Vec<BigRational>> {
        rows.iter()
            .map(|r| r.iter().map(|&(n, d)| rat(n, d)).collect())
            .collect()
    }

    #[test]
    fn psd_small_cases() {
        assert!(is_psd(&m(&[&[(1, 1), (1, 2)], &[(1, 2), (1, 1)]])));
        // |q-| = 1: singular but PSD
        assert!(is_psd(&m(&[&[(1, 1), (1, 1)], &[(1, 1), (1, 1)]])));
        assert!(!is_psd(&m(&[&[(1, 1), (3, 2)], &[(3, 2), (1, 1)]])));
        // zero diagonal with nonzero off-diagonal
        assert!(!is_psd(&m(&[&[(0, 1), (1, 1)], &[(1, 1), (0, 1)]])));
        assert!(is_psd(&m(&[&[(0, 1), (0, 1)], &[(0, 1), (0, 1)]])));
        // indefinite 3x3
        assert!(!is_psd(&m(&[
            &[(2, 1), (3, 1), (0, 1)],
            &[(3, 1), (2, 1), (0, 1)],
            &[(0, 1), (0, 1), (1, 1)],
        ])));
    }

    #[test]
    fn psd_agrees_with_leading_minors_on_positive_definite() {
        // a diagonally dominant (hence PD) matrix
        let a = m(&[
            &[(5, 1), (1, 2), (1, 3)],
            &[(1, 2), (4, 1), (1, 5)],
            &[(1, 3), (1, 5), (3, 1)],
        ]);
        assert!(is_psd(&a));
    }

    #[test]
    fn det_signs() {
        assert_eq!(det_sign(&m(&[&[(2, 1)]])), 1);
        assert_eq!(det_sign(&m(&[&[(0, 1)]])), 0);
        assert_eq!(det_sign(&m(&[&[(1, 1), (2, 1)], &[(3, 1), (4, 1)]])), -1);
        assert_eq!(
            det_sign(&m(&[
                &[(1, 1), (0, 1), (1, 1)],
                &[(0, 1), (1, 1), (0, 1)],
                &[(1, 1), (0, 1), (1, 1)],
            ])),
            0
        );
        // fractions: det [[1/2, 1/3], [1/3, 1/2]] = 1/4 - 1/9 > 0
        assert_eq!(det_sign(&m(&[&[(1, 2), (1, 3)], &[(1, 3), (1, 2)]])), 1);
        let _ = rat_int(0);
    }
}
