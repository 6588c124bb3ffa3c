//! Fraction-free integer determinants.
//!
//! Bareiss elimination keeps every intermediate entry an exact integer
//! (each division is exact by the Sylvester identity), so determinants of
//! integer matrices come out exact with no rational blowup mid-computation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Exact determinant of a square integer matrix by fraction-free (Bareiss)
/// elimination with row pivoting. The empty matrix has determinant 1.
pub(crate) fn det_bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    debug_assert!(m.iter().all(|row| row.len() == n));

    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                // Zero column below the pivot: singular.
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                m[i][j] = q;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }

    let det = std::mem::take(&mut m[n - 1][n - 1]);
    if sign < 0 {
        -det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    /// Cofactor expansion along the first row; the independent oracle the
    /// elimination path is checked against.
    fn det_naive(m: &[Vec<BigInt>]) -> BigInt {
        let n = m.len();
        if n == 0 {
            return BigInt::one();
        }
        if n == 1 {
            return m[0][0].clone();
        }
        let mut acc = BigInt::zero();
        for j in 0..n {
            let minor: Vec<Vec<BigInt>> = (1..n)
                .map(|i| {
                    (0..n)
                        .filter(|&c| c != j)
                        .map(|c| m[i][c].clone())
                        .collect()
                })
                .collect();
            let term = &m[0][j] * det_naive(&minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn small_frozen_cases() {
        assert_eq!(det_bareiss(vec![]), BigInt::one());
        assert_eq!(det_bareiss(mat(&[&[7]])), BigInt::from(7));
        assert_eq!(det_bareiss(mat(&[&[1, 2], &[3, 4]])), BigInt::from(-2));
        // Laplacian minor of the unit triangle.
        assert_eq!(
            det_bareiss(mat(&[&[2, -1], &[-1, 2]])),
            BigInt::from(3)
        );
        assert_eq!(
            det_bareiss(mat(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]])),
            BigInt::zero()
        );
    }

    #[test]
    fn zero_pivot_needs_row_swap() {
        assert_eq!(
            det_bareiss(mat(&[&[0, 1], &[1, 0]])),
            BigInt::from(-1)
        );
        assert_eq!(
            det_bareiss(mat(&[&[0, 2, 1], &[3, 0, 0], &[1, 1, 1]])),
            det_naive(&mat(&[&[0, 2, 1], &[3, 0, 0], &[1, 1, 1]]))
        );
    }

    #[test]
    fn agrees_with_cofactor_expansion_on_dense_cases() {
        // Deterministic pseudo-random small matrices.
        let mut state = 1u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) as i64 % 19) - 9
        };
        for n in 1..=5 {
            for _ in 0..20 {
                let m: Vec<Vec<BigInt>> = (0..n)
                    .map(|_| (0..n).map(|_| BigInt::from(next())).collect())
                    .collect();
                assert_eq!(det_bareiss(m.clone()), det_naive(&m));
            }
        }
    }
}
