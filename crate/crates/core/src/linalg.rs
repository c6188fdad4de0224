//! Dense exact linear algebra over ℚ(i).
//!
//! Every rank, kernel and subspace decision in the crate goes through
//! [`Matrix::rref`], which performs Gauss–Jordan elimination on exact
//! Gaussian rationals. There are no pivot thresholds: an entry is a pivot
//! iff it is nonzero.

use std::cell::RefCell;
use std::fmt;

use crate::error::LinalgError;
use crate::field::{GaussianRational, Rational};

/// Row-major dense matrix of Gaussian rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<GaussianRational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![GaussianRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = GaussianRational::one();
        }
        m
    }

    /// Builds a matrix from rows; all rows must share one length.
    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Builds a matrix with the given column count from row vectors (handles zero rows).
    pub fn from_row_vectors(cols: usize, rows: &[Vec<GaussianRational>]) -> Matrix {
        let mut m = Matrix::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "row length mismatch");
            for (j, x) in row.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn from_i64(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| GaussianRational::from(x)).collect()).collect(),
        )
    }

    pub fn from_rational_rows(rows: Vec<Vec<Rational>>) -> Matrix {
        Matrix::from_rows(
            rows.into_iter().map(|r| r.into_iter().map(GaussianRational::real).collect()).collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[GaussianRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<GaussianRational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<GaussianRational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(GaussianRational::is_zero)
    }

    pub fn is_real(&self) -> bool {
        self.data.iter().all(GaussianRational::is_real)
    }

    /// Real parts of the entries, provided the matrix is real.
    pub fn to_rational_rows(&self) -> Option<Vec<Vec<Rational>>> {
        if !self.is_real() {
            return None;
        }
        Some((0..self.rows).map(|i| self.row(i).iter().map(|x| x.re.clone()).collect()).collect())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn conj(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(GaussianRational::conj).collect(),
        }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Matrix {
        self.transpose().conj()
    }

    pub fn scale(&self, s: &GaussianRational) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[GaussianRational]) -> Vec<GaussianRational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = GaussianRational::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    /// Stacks `other` to the right of `self`.
    pub fn hcat(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let mut out = Matrix::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..other.cols {
                out[(i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        out
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv().expect("nonzero pivot");
            for j in c..m.cols {
                let x = &m[(r, j)] * &inv;
                m[(r, j)] = x;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if m[(r, j)].is_zero() {
                        continue;
                    }
                    let delta = &f * &m[(r, j)];
                    m[(i, j)] -= &delta;
                }
            }
            pivots.push(c);
            r += 1;
        }
        audit::record(self, pivots.len());
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel `{x : A x = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<GaussianRational>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![GaussianRational::zero(); self.cols];
                v[f] = GaussianRational::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -&r[(row, f)];
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Result<Matrix, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let (r, pivots) = self.hcat(&Matrix::identity(n)).rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(LinalgError::Singular);
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Ok(inv)
    }

    /// Some solution of `A x = b`, if one exists.
    pub fn solve(&self, b: &[GaussianRational]) -> Option<Vec<GaussianRational>> {
        assert_eq!(b.len(), self.rows);
        let bm = Matrix::from_row_vectors(1, &b.iter().map(|x| vec![x.clone()]).collect::<Vec<_>>());
        let (r, pivots) = self.hcat(&bm).rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![GaussianRational::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r[(row, self.cols)].clone();
        }
        Some(x)
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = GaussianRational;
    fn index(&self, (i, j): (usize, usize)) -> &GaussianRational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut GaussianRational {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

pub fn dot(a: &[GaussianRational], b: &[GaussianRational]) -> GaussianRational {
    let mut acc = GaussianRational::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += &(x * y);
        }
    }
    acc
}

/// A linear subspace of ℚ(i)^n, stored by its canonical reduced echelon basis.
///
/// Two subspaces are equal iff their stored bases are equal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<GaussianRational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Subspace {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Subspace {
        Subspace::span(ambient, &Matrix::identity(ambient).row_vectors())
    }

    pub fn span(ambient: usize, vectors: &[Vec<GaussianRational>]) -> Subspace {
        if vectors.is_empty() {
            return Subspace::zero(ambient);
        }
        let (r, pivots) = Matrix::from_row_vectors(ambient, vectors).rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace { ambient, basis, pivots }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<GaussianRational>] {
        &self.basis
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is not in the subspace.
    pub fn coordinates(&self, v: &[GaussianRational]) -> Option<Vec<GaussianRational>> {
        assert_eq!(v.len(), self.ambient);
        let coords: Vec<GaussianRational> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rebuilt = vec![GaussianRational::zero(); self.ambient];
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (r, x) in rebuilt.iter_mut().zip(b) {
                *r += &(c * x);
            }
        }
        (rebuilt == v).then_some(coords)
    }

    pub fn contains(&self, v: &[GaussianRational]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn join(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let all: Vec<_> = self.basis.iter().chain(&other.basis).cloned().collect();
        Subspace::span(self.ambient, &all)
    }

    pub fn meet(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.ambient);
        }
        // Columns are the basis vectors of both spaces; kernel vectors (a, b)
        // give a·A = b·(-B) … here encoded as A^T a + B^T b = 0.
        let a = Matrix::from_row_vectors(self.ambient, &self.basis).transpose();
        let b = Matrix::from_row_vectors(self.ambient, &other.basis).transpose();
        let ker = a.hcat(&b).nullspace();
        let k = self.dim();
        let vectors: Vec<Vec<GaussianRational>> =
            ker.iter().map(|x| a.mul_vec(&x[..k])).collect();
        Subspace::span(self.ambient, &vectors)
    }

    pub fn conj(&self) -> Subspace {
        let conj: Vec<_> =
            self.basis.iter().map(|v| v.iter().map(GaussianRational::conj).collect()).collect();
        Subspace::span(self.ambient, &conj)
    }

    pub fn is_conj_stable(&self) -> bool {
        self.conj() == *self
    }

    /// Real points of a conjugation-stable subspace: a basis of real vectors.
    ///
    /// For `V = conj(V)` the real and imaginary parts of any basis span
    /// `V ∩ ℚ^n` over ℚ, and that set has ℚ-dimension `dim V`.
    pub fn real_basis(&self) -> Vec<Vec<Rational>> {
        let mut parts = Vec::with_capacity(2 * self.dim());
        for v in &self.basis {
            parts.push(v.iter().map(|x| GaussianRational::real(x.re.clone())).collect::<Vec<_>>());
            parts.push(v.iter().map(|x| GaussianRational::real(x.im.clone())).collect::<Vec<_>>());
        }
        Subspace::span(self.ambient, &parts)
            .basis
            .into_iter()
            .map(|v| v.into_iter().map(|x| x.re).collect())
            .collect()
    }
}

/// Optional per-thread log of every exact elimination performed, used by the
/// floating-point cross-check in the acceptance suite.
pub mod audit {
    use super::*;

    thread_local! {
        static LOG: RefCell<Option<Vec<(Matrix, usize)>>> = const { RefCell::new(None) };
    }

    /// Starts recording (matrix, rank) pairs on this thread, discarding any earlier log.
    pub fn start() {
        LOG.with(|l| *l.borrow_mut() = Some(Vec::new()));
    }

    /// Stops recording and returns everything logged since [`start`].
    pub fn take() -> Vec<(Matrix, usize)> {
        LOG.with(|l| l.borrow_mut().take().unwrap_or_default())
    }

    pub(super) fn record(m: &Matrix, rank: usize) {
        LOG.with(|l| {
            if let Some(log) = l.borrow_mut().as_mut() {
                log.push((m.clone(), rank));
            }
        });
    }
}
