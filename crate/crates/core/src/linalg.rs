//! Exact linear algebra over the rationals.
//!
//! Everything here works on dense coordinate vectors of [`Scalar`]s. A
//! [`Subspace`] is always kept in reduced row echelon form, so two subspaces
//! are equal exactly when their records compare equal.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::superalgebra::{GradedDim, Parity};

/// Exact rational scalar, always in lowest terms with a positive denominator.
pub type Scalar = BigRational;

pub fn scalar(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero_vec(len: usize) -> Vec<Scalar> {
    vec![Scalar::zero(); len]
}

pub fn unit_vec(len: usize, k: usize) -> Vec<Scalar> {
    let mut v = zero_vec(len);
    v[k] = Scalar::one();
    v
}

/// `acc += c * v`, touching only the nonzero entries of `v`.
pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    debug_assert_eq!(acc.len(), v.len());
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += c * x;
        }
    }
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("subspace is not contained in the larger subspace")]
    SubspaceNotContained,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: zero_vec(rows * cols) }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_rows(cols: usize, rows: &[Vec<Scalar>]) -> Result<Self, LinalgError> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(LinalgError::DimensionMismatch { expected: cols, got: r.len() });
            }
            entries.extend(r.iter().cloned());
        }
        Ok(Matrix { rows: rows.len(), cols, entries })
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<Scalar>> =
            rows.iter().map(|r| r.iter().map(|&x| scalar(x)).collect()).collect();
        Self::from_rows(cols, &rows).expect("ragged integer matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, got: rhs.rows });
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = &rhs[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn apply_left(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = zero_vec(self.cols);
        for (r, c) in v.iter().enumerate() {
            axpy(&mut out, c, self.row(r));
        }
        out
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let augmented: Vec<Vec<Scalar>> = (0..n)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.extend(unit_vec(n, r));
                row
            })
            .collect();
        let (red, pivots) = rref(&Matrix::from_rows(2 * n, &augmented).ok()?);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let inv: Vec<Vec<Scalar>> = (0..n).map(|r| red.row(r)[n..].to_vec()).collect();
        Matrix::from_rows(n, &inv).ok()
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        &self.entries[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        &mut self.entries[r * self.cols + c]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  {}", cells.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Reduced row echelon basis that grows one vector at a time.
///
/// Rows stay sorted by pivot, pivots are 1, and every pivot column is zero
/// in all other rows, so the final state is the unique RREF of the span
/// regardless of insertion order.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    ambient_dim: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(ambient_dim: usize) -> Self {
        EchelonBasis { ambient_dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Reduce `v` in place against the current rows.
    pub fn reduce_in_place(&self, v: &mut [Scalar]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let c = -v[p].clone();
                axpy(v, &c, row);
            }
        }
    }

    /// Insert a vector; returns true when it enlarged the span.
    pub fn insert(&mut self, mut v: Vec<Scalar>) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "vector length does not match ambient dimension");
        self.reduce_in_place(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].recip();
        for x in v.iter_mut().skip(p) {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = -row[p].clone();
                axpy(row, &c, &v);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    pub fn into_subspace(self) -> Subspace {
        let basis = Matrix::from_rows(self.ambient_dim, &self.rows).expect("rows have ambient length");
        Subspace { ambient_dim: self.ambient_dim, basis, pivot_cols: self.pivots }
    }
}

/// Reduced row echelon form and pivot columns. Zero rows are dropped.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut eb = EchelonBasis::new(m.cols);
    for r in 0..m.rows {
        eb.insert(m.row(r).to_vec());
    }
    let s = eb.into_subspace();
    (s.basis, s.pivot_cols)
}

/// Span of a set of coordinate vectors.
pub fn span<I>(vectors: I, ambient_dim: usize) -> Subspace
where
    I: IntoIterator<Item = Vec<Scalar>>,
{
    let mut eb = EchelonBasis::new(ambient_dim);
    for v in vectors {
        eb.insert(v);
    }
    eb.into_subspace()
}

/// Null space `{x : m x = 0}`, as a subspace of `cols(m)`-space.
pub fn kernel(m: &Matrix) -> Subspace {
    let (red, pivots) = rref(m);
    let n = m.cols;
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let vectors = (0..n).filter(|&f| !is_pivot[f]).map(|f| {
        let mut v = unit_vec(n, f);
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -red[(r, f)].clone();
        }
        v
    });
    span(vectors, n)
}

/// Subspace of `ambient_dim`-space stored as its reduced row echelon basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivot_cols: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        EchelonBasis::new(ambient_dim).into_subspace()
    }

    pub fn full(ambient_dim: usize) -> Self {
        span((0..ambient_dim).map(|k| unit_vec(ambient_dim, k)), ambient_dim)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.pivot_cols.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivot_cols.is_empty()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vecs()
    }

    pub fn pivot_cols(&self) -> &[usize] {
        &self.pivot_cols
    }

    /// Columns that are not pivots, i.e. the standard complement.
    pub fn free_cols(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient_dim];
        for &p in &self.pivot_cols {
            is_pivot[p] = true;
        }
        (0..self.ambient_dim).filter(|&c| !is_pivot[c]).collect()
    }

    /// Canonical remainder of `v` modulo this subspace; supported on free columns.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient_dim);
        let mut out = v.to_vec();
        for (r, &p) in self.pivot_cols.iter().enumerate() {
            if !out[p].is_zero() {
                let c = -out[p].clone();
                axpy(&mut out, &c, self.basis.row(r));
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.ambient_dim == self.ambient_dim
            && (0..other.rank()).all(|r| self.contains(other.basis.row(r)))
    }

    /// Sum of two subspaces of the same ambient space.
    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        span(self.basis_vectors().into_iter().chain(other.basis_vectors()), self.ambient_dim)
    }

    pub fn to_echelon(&self) -> EchelonBasis {
        EchelonBasis {
            ambient_dim: self.ambient_dim,
            rows: self.basis_vectors(),
            pivots: self.pivot_cols.clone(),
        }
    }

    /// Graded dimension of a graded subspace, given the parity of each coordinate.
    ///
    /// The RREF of a subspace spanned by parity-homogeneous vectors consists
    /// of homogeneous rows, so counting pivots per parity is exact.
    pub fn graded_dim(&self, coord_parity: &[Parity]) -> GradedDim {
        assert_eq!(coord_parity.len(), self.ambient_dim);
        let odd = self.pivot_cols.iter().filter(|&&p| coord_parity[p] == Parity::Odd).count();
        GradedDim::new(self.rank() - odd, odd)
    }
}

/// `rank(big) - rank(small)`, after checking `small ⊆ big`.
pub fn quotient_dim(big: &Subspace, small: &Subspace) -> Result<usize, LinalgError> {
    if big.ambient_dim != small.ambient_dim {
        return Err(LinalgError::DimensionMismatch { expected: big.ambient_dim, got: small.ambient_dim });
    }
    if !big.contains_subspace(small) {
        return Err(LinalgError::SubspaceNotContained);
    }
    Ok(big.rank() - small.rank())
}

/// Is `x` a perfect square in the rationals? Returns its nonnegative root.
pub fn rational_sqrt(x: &Scalar) -> Option<Scalar> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    if &(&n * &n) == x.numer() && &(&d * &d) == x.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}
