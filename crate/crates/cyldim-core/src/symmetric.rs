//! Hook lengths, contents, and Schur polynomials by direct semistandard
//! tableau enumeration. Everything is exact; coefficients are big integers.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinatorics::Partition;

/// One Young-diagram cell with its hook length and content.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CellData {
    /// 1-based row index.
    pub row: usize,
    /// 1-based column index.
    pub col: usize,
    pub hook: usize,
    pub content: i64,
}

/// Hook `h(s) = lambda_i + lambda'_j - i - j + 1` and content `c(s) = j - i`
/// for every cell, in row-major order.
pub fn hooks_and_contents(lambda: &Partition) -> Vec<CellData> {
    let conj = lambda.conjugate();
    let mut out = Vec::new();
    for i in 1..=lambda.length() {
        for j in 1..=lambda.part(i) {
            out.push(CellData {
                row: i,
                col: j,
                hook: lambda.part(i) + conj.part(j) - i - j + 1,
                content: j as i64 - i as i64,
            });
        }
    }
    out
}

/// The exact product over cells of `(m + c(s)) / h(s)`. This equals the
/// number of semistandard tableaux of shape `lambda` with entries at most
/// `m`, so the rational product is always an integer.
pub fn hook_content_product(lambda: &Partition, m: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for cell in hooks_and_contents(lambda) {
        num *= BigInt::from(m as i64 + cell.content);
        den *= BigInt::from(cell.hook as i64);
    }
    let r = &num % &den;
    assert!(r.is_zero(), "hook content product must be integral");
    num / den
}

/// Exponent vector -> coefficient map of a polynomial in `k` variables.
pub type MonomialMap = BTreeMap<Vec<usize>, BigInt>;

/// The Schur polynomial `s_lambda(x_1, ..., x_k)` as a monomial map: the
/// coefficient of `x^alpha` counts semistandard tableaux of shape `lambda`
/// and content `alpha`. Zero polynomial when the shape has more than `k`
/// rows.
pub fn schur_polynomial(lambda: &Partition, k_vars: usize) -> MonomialMap {
    let mut out = MonomialMap::new();
    if lambda.length() > k_vars {
        return out;
    }
    if lambda.is_empty() {
        out.insert(vec![0; k_vars], BigInt::one());
        return out;
    }
    // Fill rows top to bottom, each row left to right.
    let rows = lambda.length();
    let mut tableau: Vec<Vec<usize>> = (1..=rows).map(|i| vec![0; lambda.part(i)]) .collect();
    let mut content = vec![0usize; k_vars];
    fill(lambda, k_vars, 0, 0, &mut tableau, &mut content, &mut out);
    out
}

fn fill(
    lambda: &Partition,
    k_vars: usize,
    row: usize,
    col: usize,
    tableau: &mut Vec<Vec<usize>>,
    content: &mut Vec<usize>,
    out: &mut MonomialMap,
) {
    if row == tableau.len() {
        *out.entry(content.clone()).or_insert_with(BigInt::zero) += 1;
        return;
    }
    if col == lambda.part(row + 1) {
        fill(lambda, k_vars, row + 1, 0, tableau, content, out);
        return;
    }
    // weakly increasing along rows, strictly increasing down columns
    let min_left = if col > 0 { tableau[row][col - 1] } else { 1 };
    let min_above = if row > 0 && tableau[row - 1].len() > col {
        tableau[row - 1][col] + 1
    } else {
        1
    };
    for entry in min_left.max(min_above)..=k_vars {
        tableau[row][col] = entry;
        content[entry - 1] += 1;
        fill(lambda, k_vars, row, col + 1, tableau, content, out);
        content[entry - 1] -= 1;
    }
}

/// Classical Kostka number: semistandard tableaux of shape `lambda` and
/// content `alpha` (any composition with entries summing to `|lambda|`).
pub fn kostka_number(lambda: &Partition, alpha: &[usize]) -> BigInt {
    let poly = schur_polynomial(lambda, alpha.len());
    poly.get(alpha).cloned().unwrap_or_else(BigInt::zero)
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{partitions_in_box, BoxShape};

    fn pt(k: usize, n: usize, parts: &[usize]) -> Partition {
        BoxShape::new(k, n).unwrap().partition(parts).unwrap()
    }

    #[test]
    fn single_cell_hook_and_content() {
        let lam = pt(1, 3, &[1]);
        let cells = hooks_and_contents(&lam);
        assert_eq!(cells.len(), 1);
        assert_eq!(cells[0].hook, 1);
        assert_eq!(cells[0].content, 0);
        // product with m is m itself
        assert_eq!(hook_content_product(&lam, 7), BigInt::from(7));
    }

    #[test]
    fn staircase_hooks_and_contents() {
        let lam = pt(2, 5, &[2, 1]);
        let cells = hooks_and_contents(&lam);
        let hooks: Vec<usize> = cells.iter().map(|c| c.hook).collect();
        let contents: Vec<i64> = cells.iter().map(|c| c.content).collect();
        assert_eq!(hooks, vec![3, 1, 1]);
        assert_eq!(contents, vec![0, 1, -1]);
        // product with m = m(m-1)(m+1)/3
        for m in 0..6usize {
            let expected = (m as i64) * (m as i64 - 1) * (m as i64 + 1) / 3;
            assert_eq!(hook_content_product(&lam, m), BigInt::from(expected));
        }
    }

    #[test]
    fn row_two_with_two_variables() {
        let lam = pt(1, 4, &[2]);
        assert_eq!(hook_content_product(&lam, 2), BigInt::from(3));
        let poly = schur_polynomial(&lam, 2);
        // x1^2 + x1 x2 + x2^2
        assert_eq!(poly.len(), 3);
        assert_eq!(poly[&vec![2, 0]], BigInt::from(1));
        assert_eq!(poly[&vec![1, 1]], BigInt::from(1));
        assert_eq!(poly[&vec![0, 2]], BigInt::from(1));
    }

    #[test]
    fn schur_polynomial_small_cases() {
        let one = pt(1, 3, &[1]);
        let p = schur_polynomial(&one, 2);
        assert_eq!(p.len(), 2);
        assert_eq!(p[&vec![1, 0]], BigInt::from(1));

        let lam21 = pt(2, 5, &[2, 1]);
        let p = schur_polynomial(&lam21, 2);
        assert_eq!(p.len(), 2);
        assert_eq!(p[&vec![2, 1]], BigInt::from(1));
        assert_eq!(p[&vec![1, 2]], BigInt::from(1));

        let lam2 = pt(1, 4, &[2]);
        let p = schur_polynomial(&lam2, 1);
        assert_eq!(p.len(), 1);
        assert_eq!(p[&vec![2]], BigInt::from(1));

        // too many rows: zero polynomial
        let tall = pt(2, 5, &[1, 1]);
        assert!(schur_polynomial(&tall, 1).is_empty());
    }

    #[test]
    fn schur_is_symmetric() {
        let lam = pt(2, 6, &[3, 1]);
        let poly = schur_polynomial(&lam, 3);
        // every permutation of an exponent vector carries the same count
        for (alpha, coeff) in &poly {
            let mut perm = alpha.clone();
            perm.reverse();
            assert_eq!(poly.get(&perm), Some(coeff));
            perm.swap(0, 1);
            assert_eq!(poly.get(&perm), Some(coeff));
        }
    }

    #[test]
    fn coefficient_sum_matches_hook_content_product() {
        let shape = BoxShape::new(3, 6).unwrap();
        for lam in partitions_in_box(shape) {
            let total: BigInt = schur_polynomial(&lam, 3).values().sum();
            assert_eq!(total, hook_content_product(&lam, 3), "lambda={lam:?}");
        }
    }

    #[test]
    fn kostka_basics() {
        let lam = pt(2, 5, &[2, 1]);
        assert_eq!(kostka_number(&lam, &[2, 1]), BigInt::from(1));
        assert_eq!(kostka_number(&lam, &[1, 1, 1]), BigInt::from(2));
        assert_eq!(kostka_number(&lam, &[3, 0]), BigInt::from(0));
    }

    #[test]
    fn binomial_and_factorial() {
        assert_eq!(binomial(9, 4), BigInt::from(126));
        assert_eq!(binomial(4, 7), BigInt::from(0));
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(factorial(0), BigInt::from(1));
    }
}
