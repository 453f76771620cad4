//! Fraction-free elimination over the integers for rational matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::Rational;

/// Rows scaled to primitive integer vectors; scaling a row changes neither
/// the row space nor the nullspace.
fn integer_rows(matrix: &[Vec<Rational>]) -> Vec<Vec<BigInt>> {
    matrix
        .iter()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            row.iter().map(|c| c.numer() * (&lcm / c.denom())).collect()
        })
        .collect()
}

/// Bareiss elimination to row echelon form. Returns the pivot columns.
fn bareiss(rows: &mut [Vec<BigInt>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        for i in r + 1..rows.len() {
            for j in c + 1..cols {
                let v = &rows[r][c] * &rows[i][j] - &rows[i][c] * &rows[r][j];
                rows[i][j] = v / &prev;
            }
            rows[i][c] = BigInt::zero();
        }
        prev = rows[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of a rational matrix.
pub fn rank(matrix: &[Vec<Rational>]) -> usize {
    let cols = matrix.first().map_or(0, Vec::len);
    let mut rows = integer_rows(matrix);
    bareiss(&mut rows, cols).len()
}

/// A basis of `{ v : M v = 0 }`, one vector per free column with that
/// column set to 1. Empty exactly when `M` is injective.
pub fn nullspace(matrix: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let cols = matrix.first().map_or(0, Vec::len);
    let mut rows = integer_rows(matrix);
    let pivots = bareiss(&mut rows, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (r, &pc) in pivots.iter().enumerate().rev() {
                let mut acc = Rational::zero();
                for j in pc + 1..cols {
                    if !rows[r][j].is_zero() && !v[j].is_zero() {
                        acc += Rational::from_integer(rows[r][j].clone()) * &v[j];
                    }
                }
                v[pc] = -acc / Rational::from_integer(rows[r][pc].clone());
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| rat(x, 1)).collect()).collect()
    }

    #[test]
    fn examples() {
        assert!(nullspace(&m(&[&[1, 0], &[0, 1]])).is_empty());
        assert_eq!(nullspace(&m(&[&[0]])).len(), 1);
        assert_eq!(nullspace(&m(&[&[1, 1], &[1, 1]])), vec![vec![rat(-1, 1), rat(1, 1)]]);
    }

    #[test]
    fn skipped_column_then_pivot() {
        let a = m(&[&[0, 1, 2], &[0, 2, 5], &[0, 0, 0]]);
        assert_eq!(rank(&a), 2);
        assert_eq!(nullspace(&a), vec![vec![rat(1, 1), rat(0, 1), rat(0, 1)]]);
    }

    proptest! {
        #[test]
        fn kernel_vectors_and_rank_nullity(
            rows in 1usize..6, cols in 1usize..7,
            entries in proptest::collection::vec((-4i64..5, 1i64..4), 36),
            zero_mask in proptest::collection::vec(proptest::bool::weighted(0.3), 36),
        ) {
            let a: Vec<Vec<Rational>> = (0..rows)
                .map(|i| (0..cols).map(|j| {
                    let k = i * cols + j;
                    if zero_mask[k] { rat(0, 1) } else { rat(entries[k].0, entries[k].1) }
                }).collect())
                .collect();
            let basis = nullspace(&a);
            prop_assert_eq!(basis.len() + rank(&a), cols);
            for v in &basis {
                for row in &a {
                    let dot: Rational = row.iter().zip(v).map(|(x, y)| x * y).sum();
                    prop_assert!(dot.is_zero());
                }
            }
            prop_assert_eq!(rank(&basis_matrix(&basis, cols)), basis.len());
        }
    }

    fn basis_matrix(basis: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
        if basis.is_empty() { vec![vec![rat(0, 1); cols]] } else { basis.to_vec() }
    }
}
