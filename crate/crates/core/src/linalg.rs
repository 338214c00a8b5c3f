//! Dense exact-rational linear algebra.
//!
//! Everything downstream (Hom spaces, Ext spaces, structure constants) reduces
//! to rank, kernel and quotient computations over `Q`. Matrices are small
//! (a few hundred rows at most) and very sparse, so elimination skips zero
//! entries of the pivot row instead of using a sparse format.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_rational::Ratio;
use num_traits::{One, Zero};

/// Exact rational scalar. Overflow is a panic (overflow checks are enabled in
/// every profile of this workspace), never a silent wrap.
pub type Q = Ratio<i64>;

pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
        }
        write!(f, "]")
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Q;
    fn index(&self, (r, c): (usize, usize)) -> &Q {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Q {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Q::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Q::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Q) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from integer rows. All rows must have equal length;
    /// `cols` is needed for the zero-row case.
    pub fn from_int_rows(rows: &[Vec<i64>], cols: usize) -> Self {
        Self::from_fn(rows.len(), cols, |r, c| q(rows[r][c]))
    }

    pub fn column(v: &[Q]) -> Self {
        Matrix {
            rows: v.len(),
            cols: 1,
            data: v.to_vec(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn row(&self, r: usize) -> &[Q] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<Q> {
        (0..self.rows).map(|r| self[(r, c)]).collect()
    }

    pub fn entries(&self) -> &[Q] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0 || self.cols == 0
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)])
    }

    pub fn scale(&self, s: Q) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape(), "matrix add shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape(), "matrix sub shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix mul shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = Q::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn hstack(parts: &[&Matrix], rows: usize) -> Matrix {
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let mut off = 0;
        for m in parts {
            assert_eq!(m.rows, rows, "hstack row mismatch");
            for r in 0..rows {
                for c in 0..m.cols {
                    out[(r, off + c)] = m[(r, c)];
                }
            }
            off += m.cols;
        }
        out
    }

    pub fn vstack(parts: &[&Matrix], cols: usize) -> Matrix {
        let rows = parts.iter().map(|m| m.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for m in parts {
            assert_eq!(m.cols, cols, "vstack column mismatch");
            data.extend_from_slice(&m.data);
        }
        Matrix { rows, cols, data }
    }

    /// Rows `r0..r1`, columns `c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Matrix {
        Matrix::from_fn(r1 - r0, c1 - c0, |r, c| self[(r0 + r, c0 + c)])
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, m: &Matrix) {
        for r in 0..m.rows {
            for c in 0..m.cols {
                self[(r0 + r, c0 + c)] = m[(r, c)];
            }
        }
    }

    /// Reduced row echelon form. Pivots are chosen as the first nonzero entry
    /// in column order, so the result is canonical for a given input.
    pub fn rref(&self) -> Echelon {
        let mut m = self.clone();
        let pivots = m.rref_in_place(self.cols);
        m.truncate_rows(pivots.len());
        Echelon { rows: m, pivots }
    }

    /// Row-reduces in place, pivoting only within the first `pivot_cols`
    /// columns. Returns the pivot columns; pivot rows end up on top.
    fn rref_in_place(&mut self, pivot_cols: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        let mut nz = Vec::with_capacity(self.cols);
        for col in 0..pivot_cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self[(r, col)].is_zero()) else {
                continue;
            };
            self.swap_rows(row, p);
            let inv = self[(row, col)].recip();
            if !inv.is_one() {
                for c in col..self.cols {
                    let x = self[(row, c)];
                    if !x.is_zero() {
                        self[(row, c)] = x * inv;
                    }
                }
            }
            nz.clear();
            nz.extend((col..self.cols).filter(|&c| !self[(row, c)].is_zero()));
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let f = self[(r, col)];
                if f.is_zero() {
                    continue;
                }
                for &c in &nz {
                    let delta = f * self[(row, c)];
                    self[(r, c)] -= delta;
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn truncate_rows(&mut self, rows: usize) {
        self.rows = rows;
        self.data.truncate(rows * self.cols);
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place(self.cols).len()
    }

    /// Basis of the right kernel, one column per free variable, in increasing
    /// free-column order. Shape `cols x nullity`.
    pub fn kernel(&self) -> Matrix {
        let e = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !e.pivots.contains(c)).collect();
        let mut k = Matrix::zeros(self.cols, free.len());
        for (j, &f) in free.iter().enumerate() {
            k[(f, j)] = Q::one();
            for (i, &p) in e.pivots.iter().enumerate() {
                k[(p, j)] = -e.rows[(i, f)];
            }
        }
        k
    }

    /// Left inverse `L` with `L * self = I` for a matrix of full column rank.
    pub fn left_inverse(&self) -> Option<Matrix> {
        let (m, k) = self.shape();
        let mut aug = Matrix::hstack(&[self, &Matrix::identity(m)], m);
        let pivots = aug.rref_in_place(k);
        if pivots.len() != k {
            return None;
        }
        Some(aug.block(0, k, k, k + m))
    }

    /// Solves `self * x = b` for a single column; `None` if inconsistent.
    pub fn solve(&self, b: &[Q]) -> Option<Vec<Q>> {
        let aug = Matrix::hstack(&[self, &Matrix::column(b)], self.rows);
        let e = aug.rref();
        if e.pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Q::zero(); self.cols];
        for (i, &p) in e.pivots.iter().enumerate() {
            x[p] = e.rows[(i, self.cols)];
        }
        Some(x)
    }
}

/// A matrix in reduced row echelon form with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub rows: Matrix,
    pub pivots: Vec<usize>,
}

/// A subspace of `Q^dim` held in reduced row echelon form.
///
/// Also serves as a quotient: the non-pivot coordinates of a reduced vector
/// are its coordinates in `Q^dim / self` with respect to the unit-vector
/// coset representatives at the free positions.
#[derive(Clone, Debug)]
pub struct Subspace {
    dim: usize,
    echelon: Echelon,
    free: Vec<usize>,
}

impl Subspace {
    pub fn zero(dim: usize) -> Self {
        Self::spanned_by_rows(&Matrix::zeros(0, dim))
    }

    /// The span of the rows of `m`.
    pub fn spanned_by_rows(m: &Matrix) -> Self {
        let echelon = m.rref();
        let free = (0..m.cols()).filter(|c| !echelon.pivots.contains(c)).collect();
        Subspace {
            dim: m.cols(),
            echelon,
            free,
        }
    }

    pub fn spanned_by(vectors: &[Vec<Q>], dim: usize) -> Self {
        let m = Matrix::from_fn(vectors.len(), dim, |r, c| vectors[r][c]);
        Self::spanned_by_rows(&m)
    }

    /// The span of the columns of `m`.
    pub fn column_space(m: &Matrix) -> Self {
        Self::spanned_by_rows(&m.transpose())
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn dim(&self) -> usize {
        self.echelon.pivots.len()
    }

    pub fn codim(&self) -> usize {
        self.free.len()
    }

    pub fn basis(&self) -> &Matrix {
        &self.echelon.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.echelon.pivots
    }

    /// Free (non-pivot) positions: the quotient basis.
    pub fn free(&self) -> &[usize] {
        &self.free
    }

    pub fn reduce(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(v.len(), self.dim);
        let mut v = v.to_vec();
        for (i, &p) in self.echelon.pivots.iter().enumerate() {
            let f = v[p];
            if f.is_zero() {
                continue;
            }
            for (c, x) in self.echelon.rows.row(i).iter().enumerate() {
                if !x.is_zero() {
                    v[c] -= f * x;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Coordinates of the class of `v` in the quotient.
    pub fn quotient_coords(&self, v: &[Q]) -> Vec<Q> {
        let r = self.reduce(v);
        self.free.iter().map(|&f| r[f]).collect()
    }

    pub fn join(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.dim, other.dim);
        Subspace::spanned_by_rows(&Matrix::vstack(&[self.basis(), other.basis()], self.dim))
    }
}

/// Coordinates with respect to a fixed, linearly independent family.
#[derive(Clone, Debug)]
pub struct Coordinates {
    basis: Matrix,
    left_inverse: Matrix,
}

impl Coordinates {
    /// `basis` holds the vectors as columns.
    pub fn new(basis: Matrix) -> Option<Self> {
        let left_inverse = basis.left_inverse()?;
        Some(Coordinates {
            basis,
            left_inverse,
        })
    }

    pub fn len(&self) -> usize {
        self.basis.cols()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Coordinates of `v`, or `None` when `v` is outside the span.
    pub fn of(&self, v: &[Q]) -> Option<Vec<Q>> {
        let c = self.left_inverse.mul_vec(v);
        if self.basis.mul_vec(&c) == v {
            Some(c)
        } else {
            None
        }
    }
}
