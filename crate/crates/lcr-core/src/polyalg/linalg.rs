//! Dense matrices over `F_p`: rank, kernel, determinant, Sylvester.
//!
//! Plain Gaussian elimination. Sizes here are tiny (a handful of rows
//! per analysis, a few hundred for relation sampling), so no pivoting
//! strategy beyond "first nonzero in the column" is needed; over a
//! prime field there is no conditioning concern.

use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use super::fp::Fp;
use super::LinalgError;

/// A rectangular matrix over `F_p`, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Fp>,
}

impl FieldMatrix {
    /// Zero matrix of the given dimensions.
    pub fn zeros(rows: usize, cols: usize) -> FieldMatrix {
        FieldMatrix {
            rows,
            cols,
            data: alloc::vec![Fp::ZERO; rows * cols],
        }
    }

    /// Build from rows; all rows must share one length.
    pub fn from_rows(rows: Vec<Vec<Fp>>) -> Result<FieldMatrix, LinalgError> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n_cols) {
            return Err(LinalgError::RaggedRows);
        }
        Ok(FieldMatrix {
            rows: n_rows,
            cols: n_cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Identity matrix.
    pub fn identity(n: usize) -> FieldMatrix {
        let mut m = FieldMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Fp::ONE;
        }
        m
    }

    pub fn n_rows(&self) -> usize {
        self.rows
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    /// Row echelon reduction in place; returns (rank, pivot columns,
    /// row-swap count). Reduces all the way to RREF so `kernel` can read
    /// the basis off directly.
    fn rref(&mut self) -> (usize, Vec<usize>, usize) {
        let mut pivots = Vec::new();
        let mut swaps = 0;
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self[(r, col)].is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..self.cols {
                    let tmp = self[(p, c)];
                    self[(p, c)] = self[(row, c)];
                    self[(row, c)] = tmp;
                }
                swaps += 1;
            }
            let inv = self[(row, col)].inv().expect("pivot is nonzero");
            for c in col..self.cols {
                self[(row, c)] *= inv;
            }
            for r in 0..self.rows {
                if r != row && !self[(r, col)].is_zero() {
                    let factor = self[(r, col)];
                    for c in col..self.cols {
                        let sub = factor * self[(row, c)];
                        self[(r, c)] -= sub;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (row, pivots, swaps)
    }

    /// Matrix rank by elimination on a scratch copy.
    pub fn rank(&self) -> usize {
        self.clone().rref().0
    }

    /// Determinant; matrix must be square.
    pub fn determinant(&self) -> Result<Fp, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        // Forward elimination without normalizing pivots.
        let mut m = self.clone();
        let n = m.rows;
        let mut det = Fp::ONE;
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m[(r, col)].is_zero()) else {
                return Ok(Fp::ZERO);
            };
            if p != col {
                for c in 0..n {
                    let tmp = m[(p, c)];
                    m[(p, c)] = m[(col, c)];
                    m[(col, c)] = tmp;
                }
                det = -det;
            }
            let pivot = m[(col, col)];
            det *= pivot;
            let inv = pivot.inv().expect("pivot is nonzero");
            for r in col + 1..n {
                if !m[(r, col)].is_zero() {
                    let factor = m[(r, col)] * inv;
                    for c in col..n {
                        let sub = factor * m[(col, c)];
                        m[(r, c)] -= sub;
                    }
                }
            }
        }
        Ok(det)
    }

    /// Basis of the right null space, one vector per free column,
    /// in ascending free-column order.
    pub fn kernel(&self) -> Vec<Vec<Fp>> {
        let mut m = self.clone();
        let (_, pivots, _) = m.rref();
        let pivot_set: Vec<bool> = {
            let mut v = alloc::vec![false; self.cols];
            for &c in &pivots {
                v[c] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free] {
                continue;
            }
            let mut v = alloc::vec![Fp::ZERO; self.cols];
            v[free] = Fp::ONE;
            // Each pivot row reads x_pivot = -sum(free entries).
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[(row, free)];
            }
            basis.push(v);
        }
        basis
    }
}

impl Index<(usize, usize)> for FieldMatrix {
    type Output = Fp;
    fn index(&self, (r, c): (usize, usize)) -> &Fp {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for FieldMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Fp {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        &mut self.data[r * self.cols + c]
    }
}

/// Sylvester matrix of two univariate polynomials given as ascending
/// coefficient lists (`f[i]` multiplies `x^i`, top coefficient nonzero).
/// With `deg f = n` and `deg g = m`, the result is `(n+m) x (n+m)`:
/// `m` columns carrying `f`'s coefficients followed by `n` columns
/// carrying `g`'s, each column one shift lower than its neighbor. Its
/// determinant is the resultant.
pub fn sylvester_matrix(f: &[Fp], g: &[Fp]) -> Result<FieldMatrix, LinalgError> {
    let n = degree_of(f)?;
    let m = degree_of(g)?;
    let size = n + m;
    let mut s = FieldMatrix::zeros(size, size);
    for col in 0..m {
        for (k, &c) in f.iter().enumerate() {
            // f's x^k entry lands in row col + (n - k).
            s[(col + n - k, col)] = c;
        }
    }
    for col in 0..n {
        for (k, &c) in g.iter().enumerate() {
            s[(col + m - k, m + col)] = c;
        }
    }
    Ok(s)
}

fn degree_of(f: &[Fp]) -> Result<usize, LinalgError> {
    match f.iter().rposition(|c| !c.is_zero()) {
        Some(d) if d >= 1 => Ok(d),
        _ => Err(LinalgError::DegreeZeroInput),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_rank_and_det() {
        let m = FieldMatrix::identity(3);
        assert_eq!(m.rank(), 3);
        assert_eq!(m.determinant().unwrap(), Fp::ONE);
        assert!(m.kernel().is_empty());
    }

    #[test]
    fn zero_matrix_kernel() {
        let m = FieldMatrix::zeros(2, 3);
        assert_eq!(m.rank(), 0);
        let basis = m.kernel();
        assert_eq!(basis.len(), 3);
    }

    #[test]
    fn determinant_requires_square() {
        let m = FieldMatrix::zeros(2, 3);
        assert!(matches!(
            m.determinant(),
            Err(LinalgError::NonSquare { rows: 2, cols: 3 })
        ));
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let m = FieldMatrix::from_rows(alloc::vec![
            alloc::vec![Fp::new(1), Fp::new(2), Fp::new(3)],
            alloc::vec![Fp::new(2), Fp::new(4), Fp::new(6)],
        ])
        .unwrap();
        assert_eq!(m.rank(), 1);
        let basis = m.kernel();
        assert_eq!(basis.len(), 2);
        for v in basis {
            for r in 0..m.n_rows() {
                let mut acc = Fp::ZERO;
                for c in 0..m.n_cols() {
                    acc += m[(r, c)] * v[c];
                }
                assert_eq!(acc, Fp::ZERO);
            }
        }
    }

    #[test]
    fn sylvester_degree_one_pair() {
        // f = a1 x + a0, g = b1 x + b0 -> [[a1, b1], [a0, b0]].
        let (a0, a1, b0, b1) = (Fp::new(3), Fp::new(5), Fp::new(7), Fp::new(11));
        let s = sylvester_matrix(&[a0, a1], &[b0, b1]).unwrap();
        assert_eq!(s.n_rows(), 2);
        assert_eq!(s[(0, 0)], a1);
        assert_eq!(s[(0, 1)], b1);
        assert_eq!(s[(1, 0)], a0);
        assert_eq!(s[(1, 1)], b0);
        assert_eq!(s.determinant().unwrap(), a1 * b0 - a0 * b1);
    }

    #[test]
    fn sylvester_detects_shared_root() {
        // f = x^2 - 1, g = x - 1 share the root 1.
        let f = [-Fp::ONE, Fp::ZERO, Fp::ONE];
        let g = [-Fp::ONE, Fp::ONE];
        let s = sylvester_matrix(&f, &g).unwrap();
        assert_eq!(s.determinant().unwrap(), Fp::ZERO);
    }

    #[test]
    fn sylvester_rejects_constants() {
        assert!(matches!(
            sylvester_matrix(&[Fp::ONE], &[Fp::ZERO, Fp::ONE]),
            Err(LinalgError::DegreeZeroInput)
        ));
    }
}
