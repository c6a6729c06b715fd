//! Dense exact elimination over a scalar field.
//!
//! The matrices arising from boundary maps of the simplicial complexes in
//! this crate are small (vertex counts bounded by the variable count), so a
//! dense row-echelon pass with exact arithmetic is entirely adequate.

use crate::scalar::Scalar;

/// Row echelon reduction in place; returns the pivot columns.
pub fn row_echelon<S: Scalar>(rows: &mut [Vec<S>]) -> Vec<usize> {
    let mut pivots = Vec::new();
    if rows.is_empty() {
        return pivots;
    }
    let cols = rows[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv();
        for x in rows[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot_row = rows[r].clone();
                for (x, p) in rows[i].iter_mut().zip(pivot_row) {
                    *x = x.clone() - p * f.clone();
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

pub fn rank<S: Scalar>(mut rows: Vec<Vec<S>>) -> usize {
    row_echelon(&mut rows).len()
}

/// Basis of the null space of the matrix whose columns are indexed `0..cols`
/// and whose rows are given (row-major).
pub fn kernel_basis<S: Scalar>(rows: &[Vec<S>], cols: usize) -> Vec<Vec<S>> {
    let mut m: Vec<Vec<S>> = rows.to_vec();
    let pivots = row_echelon(&mut m);
    let mut basis = Vec::new();
    let mut piv_iter = 0usize;
    for free in 0..cols {
        if piv_iter < pivots.len() && pivots[piv_iter] == free {
            piv_iter += 1;
            continue;
        }
        let mut v = vec![S::zero(); cols];
        v[free] = S::one();
        for (r, &pc) in pivots.iter().enumerate() {
            // row r: x_pc + sum of entries over free columns = 0
            v[pc] = S::zero() - m[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Rank of the span of a set of vectors.
pub fn span_rank<S: Scalar>(vectors: &[Vec<S>]) -> usize {
    rank(vectors.to_vec())
}

/// Solve `Σ x_j columns[j] = target`; `None` when the target is outside the
/// span.
pub fn solve_columns<S: Scalar>(columns: &[Vec<S>], target: &[S]) -> Option<Vec<S>> {
    let rows = target.len();
    let cols = columns.len();
    // augmented matrix [A | t]
    let mut m: Vec<Vec<S>> = (0..rows)
        .map(|r| {
            let mut row: Vec<S> = columns.iter().map(|c| c[r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();
    let pivots = row_echelon(&mut m);
    if pivots.contains(&cols) {
        return None; // inconsistent system
    }
    let mut x = vec![S::zero(); cols];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = m[r][cols].clone();
    }
    Some(x)
}

/// Given spanning vectors of a subspace `B` and candidate vectors, return the
/// indices of a subset of candidates that is linearly independent modulo `B`
/// and spans the quotient together with `B`.
pub fn independent_mod<S: Scalar>(boundaries: &[Vec<S>], candidates: &[Vec<S>]) -> Vec<usize> {
    let mut rows: Vec<Vec<S>> = boundaries.to_vec();
    let mut current = rank(rows.clone());
    let mut chosen = Vec::new();
    for (i, cand) in candidates.iter().enumerate() {
        rows.push(cand.clone());
        let r = rank(rows.clone());
        if r > current {
            current = r;
            chosen.push(i);
        } else {
            rows.pop();
        }
    }
    chosen
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Coeff;
    use num_traits::Zero;
    use crate::scalar::Scalar;

    fn q(v: i64) -> Coeff {
        Coeff::from_int(v)
    }

    #[test]
    fn rank_and_kernel() {
        let rows = vec![
            vec![q(1), q(2), q(3)],
            vec![q(2), q(4), q(6)],
            vec![q(0), q(1), q(1)],
        ];
        assert_eq!(rank(rows.clone()), 2);
        let ker = kernel_basis(&rows, 3);
        assert_eq!(ker.len(), 1);
        for row in &rows {
            let dot = row
                .iter()
                .zip(&ker[0])
                .fold(q(0), |a, (x, y)| a + x.clone() * y.clone());
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn quotient_selection() {
        let b = vec![vec![q(1), q(0), q(0)]];
        let cands = vec![
            vec![q(2), q(0), q(0)], // inside B
            vec![q(0), q(1), q(0)],
            vec![q(1), q(1), q(0)], // dependent on previous mod B
            vec![q(0), q(0), q(5)],
        ];
        assert_eq!(independent_mod(&b, &cands), vec![1, 3]);
    }
}
