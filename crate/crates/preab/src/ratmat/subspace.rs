use std::fmt;

use super::matrix::{column_echelon, Matrix};

/// Subspace of Q^n, stored as its canonical basis.
///
/// The canonical representative is the reduced column echelon basis with
/// leftmost pivot rows, so span-equal inputs construct identical values
/// and subspace equality is plain structural equality.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
}

impl Subspace {
    /// Subspace spanned by the columns of `generators` (need not be
    /// independent; the canonical basis is extracted).
    pub fn from_columns(ambient: usize, generators: &Matrix) -> Self {
        assert_eq!(generators.rows(), ambient, "generator ambient mismatch");
        Subspace { ambient, basis: column_echelon(generators) }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(ambient, 0) }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(ambient) }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Intersection, via the kernel of `[U | -V]`.
    pub fn meet(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "meet ambient mismatch");
        let stacked = self.basis.hstack(&-&other.basis);
        let null = stacked.kernel_basis();
        let coeffs = null.transpose().submatrix_cols(&(0..self.dim()).collect::<Vec<_>>()).transpose();
        Subspace::from_columns(self.ambient, &(&self.basis * &coeffs))
    }

    /// Sum of subspaces.
    pub fn join(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "join ambient mismatch");
        Subspace::from_columns(self.ambient, &self.basis.hstack(&other.basis))
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient, other.ambient, "contains ambient mismatch");
        self.basis.solve(other.basis()).is_ok()
    }

    pub fn contains_vector(&self, v: &Matrix) -> bool {
        assert_eq!(v.rows(), self.ambient);
        self.basis.solve(v).is_ok()
    }

    /// Rows `N` with `v ∈ self ⇔ Nv = 0`: a basis of the annihilator of
    /// the subspace, transposed. Used to express membership as a linear
    /// constraint when sampling morphism spaces.
    pub fn annihilator_rows(&self) -> Matrix {
        self.basis.transpose().kernel_basis().transpose()
    }

    /// Image of the subspace under a linear map given by `m`.
    pub fn map_through(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient);
        Subspace::from_columns(m.rows(), &(m * &self.basis))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} of Q^{}) {}", self.dim(), self.ambient, self.basis)
    }
}
