use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use num::{One, Zero};
use thiserror::Error;

use super::scalar::{format_scalar, sca, Scalar};

/// Dense rational matrix, row-major.
///
/// Zero-row and zero-column matrices are first-class: an `m×0` matrix is
/// the unique map out of the zero space, a `0×n` matrix the unique map
/// into it. All products and eliminations must accept them.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Returned by [`Matrix::solve`] when a right-hand side column lies
/// outside the column space.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("no solution: right-hand side column {rhs_col} is outside the column space")]
pub struct NoSolution {
    pub rhs_col: usize,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count mismatch");
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::new(rows, cols, vec![Scalar::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        for row in &rows {
            assert_eq!(row.len(), c, "ragged rows");
        }
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Integer-literal constructor, mostly for tests and fixtures.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&n| sca(n)).collect()).collect())
    }

    /// Column vector from integer entries.
    pub fn col_from_ints(entries: &[i64]) -> Self {
        Matrix::new(entries.len(), 1, entries.iter().map(|&n| sca(n)).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        self.data[r * self.cols + c] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Matrix::identity(self.rows)
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn scale(&self, k: &Scalar) -> Matrix {
        Matrix::new(self.rows, self.cols, self.data.iter().map(|x| x * k).collect())
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let mut out = Matrix::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c).clone());
            }
        }
        out
    }

    /// Vertical concatenation `[self; other]`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix::new(self.rows + other.rows, self.cols, data)
    }

    /// Block-diagonal sum `diag(self, other)`.
    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                out.set(self.rows + r, self.cols + c, other.get(r, c).clone());
            }
        }
        out
    }

    pub fn column(&self, c: usize) -> Matrix {
        let mut out = Matrix::zeros(self.rows, 1);
        for r in 0..self.rows {
            out.set(r, 0, self.get(r, c).clone());
        }
        out
    }

    pub fn submatrix_cols(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.rows, cols.len());
        for (j, &c) in cols.iter().enumerate() {
            for r in 0..self.rows {
                out.set(r, j, self.get(r, c).clone());
            }
        }
        out
    }

    /// Reduced row echelon form together with the ascending pivot columns.
    ///
    /// Gauss–Jordan with the first nonzero entry as pivot; exact arithmetic
    /// needs no pivot-size strategy and keeps the result deterministic.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, pr);
            let inv = m.get(row, col).recip();
            m.scale_row(row, &inv);
            for r in 0..m.rows {
                if r != row && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    m.sub_scaled_row(r, row, &factor);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical basis of the null space `{x : Mx = 0}`, one column per
    /// free variable, in reduced column echelon form.
    pub fn kernel_basis(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Matrix::zeros(self.cols, free.len());
        for (j, &f) in free.iter().enumerate() {
            basis.set(f, j, Scalar::one());
            for (i, &p) in pivots.iter().enumerate() {
                basis.set(p, j, -r.get(i, f).clone());
            }
        }
        column_echelon(&basis)
    }

    /// Canonical basis of the column space, in reduced column echelon form.
    pub fn image_basis(&self) -> Matrix {
        column_echelon(self)
    }

    /// Solves `self · X = rhs` exactly, free variables set to zero.
    pub fn solve(&self, rhs: &Matrix) -> Result<Matrix, NoSolution> {
        assert_eq!(self.rows, rhs.rows, "solve row mismatch");
        let (r, pivots) = self.hstack(rhs).rref();
        if let Some(&p) = pivots.iter().find(|&&p| p >= self.cols) {
            return Err(NoSolution { rhs_col: p - self.cols });
        }
        let mut x = Matrix::zeros(self.cols, rhs.cols);
        for (i, &p) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(p, j, r.get(i, self.cols + j).clone());
            }
        }
        Ok(x)
    }

    /// Inverse of a square full-rank matrix.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let inv = self.solve(&Matrix::identity(self.rows)).ok()?;
        if (self * &inv).is_identity() {
            Some(inv)
        } else {
            None
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, k: &Scalar) {
        for c in 0..self.cols {
            let v = self.get(r, c) * k;
            self.set(r, c, v);
        }
    }

    /// row[r] -= k * row[src]
    fn sub_scaled_row(&mut self, r: usize, src: usize, k: &Scalar) {
        for c in 0..self.cols {
            let v = self.get(r, c) - &(self.get(src, c) * k);
            self.set(r, c, v);
        }
    }
}

/// Reduced column echelon form of the column space of `m`: the unique
/// basis whose leading entries are 1, sit in strictly increasing rows,
/// and are the only nonzero entries in their row. This is the canonical
/// subspace representative used everywhere.
pub(crate) fn column_echelon(m: &Matrix) -> Matrix {
    let (r, pivots) = m.transpose().rref();
    let rt = r.transpose();
    rt.submatrix_cols(&(0..pivots.len()).collect::<Vec<_>>())
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;

    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        self.get(r, c)
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matmul shape mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for c in 0..rhs.cols {
                let mut acc = Scalar::zero();
                for k in 0..self.cols {
                    if !self.get(r, k).is_zero() && !rhs.get(k, c).is_zero() {
                        acc += self.get(r, k) * rhs.get(k, c);
                    }
                }
                out.set(r, c, acc);
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;

    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "add shape mismatch");
        Matrix::new(
            self.rows,
            self.cols,
            self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        )
    }
}

impl Sub for &Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "sub shape mismatch");
        Matrix::new(
            self.rows,
            self.cols,
            self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        )
    }
}

impl Neg for &Matrix {
    type Output = Matrix;

    fn neg(self) -> Matrix {
        Matrix::new(self.rows, self.cols, self.data.iter().map(|a| -a).collect())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix({}x{}) {}", self.rows, self.cols, self)
    }
}

impl fmt::Display for Matrix {
    /// `.pad` matrix-literal syntax: `[a, b; c, d]`, `[]` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows == 0 || self.cols == 0 {
            return write!(f, "[]");
        }
        let rows: Vec<String> = (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| format_scalar(self.get(r, c)))
                    .collect::<Vec<_>>()
                    .join(", ")
            })
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_collinear_rows() {
        let m = Matrix::from_int_rows(&[&[2, 4], &[1, 2]]);
        let (r, pivots) = m.rref();
        assert_eq!(r, Matrix::from_int_rows(&[&[1, 2], &[0, 0]]));
        assert_eq!(pivots, vec![0]);
    }

    #[test]
    fn rref_identity_fixpoint() {
        let m = Matrix::identity(2);
        let (r, pivots) = m.rref();
        assert_eq!(r, m);
        assert_eq!(pivots, vec![0, 1]);
    }

    #[test]
    fn rref_empty() {
        let m = Matrix::zeros(0, 3);
        let (r, pivots) = m.rref();
        assert_eq!(r, m);
        assert!(pivots.is_empty());
    }

    #[test]
    fn kernel_of_coordinate_projection() {
        let m = Matrix::from_int_rows(&[&[0, 1]]);
        assert_eq!(m.kernel_basis(), Matrix::from_int_rows(&[&[1], &[0]]));
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        for n in 0..4 {
            assert_eq!(Matrix::identity(n).kernel_basis().cols(), 0);
        }
    }

    #[test]
    fn kernel_of_zero_map() {
        let m = Matrix::zeros(1, 1);
        assert_eq!(m.kernel_basis(), Matrix::identity(1));
    }

    #[test]
    fn kernel_basis_is_canonical() {
        // Raw back-substitution would give (-1, 1); the canonical form
        // rescales the leading entry to 1.
        let m = Matrix::from_int_rows(&[&[1, 1]]);
        assert_eq!(m.kernel_basis(), Matrix::from_int_rows(&[&[1], &[-1]]));
    }

    #[test]
    fn image_basis_examples() {
        let m = Matrix::from_int_rows(&[&[1], &[2]]);
        assert_eq!(m.image_basis(), Matrix::from_int_rows(&[&[1], &[2]]));
        assert_eq!(Matrix::zeros(2, 2).image_basis().cols(), 0);
        assert_eq!(Matrix::identity(3).image_basis(), Matrix::identity(3));
    }

    #[test]
    fn solve_free_variable_zeroed() {
        let m = Matrix::from_int_rows(&[&[0, 1]]);
        let b = Matrix::from_int_rows(&[&[1]]);
        assert_eq!(m.solve(&b).unwrap(), Matrix::from_int_rows(&[&[0], &[1]]));
    }

    #[test]
    fn solve_identity_and_inconsistent() {
        let b = Matrix::from_int_rows(&[&[3], &[-2]]);
        assert_eq!(Matrix::identity(2).solve(&b).unwrap(), b);
        let m = Matrix::from_int_rows(&[&[0, 0]]);
        let rhs = Matrix::from_int_rows(&[&[1]]);
        assert_eq!(m.solve(&rhs), Err(NoSolution { rhs_col: 0 }));
    }

    #[test]
    fn empty_products() {
        let a = Matrix::zeros(2, 0);
        let b = Matrix::zeros(0, 3);
        assert_eq!(&a * &b, Matrix::zeros(2, 3));
        let c = Matrix::zeros(0, 2);
        let d = Matrix::from_int_rows(&[&[1], &[1]]);
        assert_eq!(&c * &d, Matrix::zeros(0, 1));
    }

    #[test]
    fn inverse_swap() {
        let m = Matrix::from_int_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(m.inverse().unwrap(), m);
        assert!(Matrix::from_int_rows(&[&[1, 2], &[2, 4]]).inverse().is_none());
        assert!(Matrix::zeros(1, 2).inverse().is_none());
    }

    #[test]
    fn display_wire_form() {
        let m = Matrix::from_rows(vec![vec![sca(1), rat(1, 2)], vec![sca(-3), sca(0)]]);
        assert_eq!(m.to_string(), "[1, 1/2; -3, 0]");
        assert_eq!(Matrix::zeros(0, 0).to_string(), "[]");
    }

    use super::super::scalar::rat;
}
