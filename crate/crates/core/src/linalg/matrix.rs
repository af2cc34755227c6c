use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{format_rational, int, Polynomial, Rational, Subspace};
use crate::error::{Error, Result};

/// Coordinate vector over the rationals.
pub type Vector = Vec<Rational>;

pub fn zero_vector(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Rational::one();
    v
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub(crate) fn axpy(acc: &mut [Rational], a: &Rational, x: &[Rational]) {
    if a.is_zero() {
        return;
    }
    for (s, t) in acc.iter_mut().zip(x) {
        if !t.is_zero() {
            *s += a * t;
        }
    }
}

pub(crate) fn scaled(a: &Rational, x: &[Rational]) -> Vector {
    x.iter().map(|t| a * t).collect()
}

pub(crate) fn vadd(x: &[Rational], y: &[Rational]) -> Vector {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

/// Dense rational matrix acting on column vectors: `(Mv)_r = sum_c M[r][c] v_c`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, &Rational::one())
    }

    pub fn scalar(n: usize, q: &Rational) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = q.clone();
        }
        m
    }

    /// Builds a matrix from its rows. Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&x| int(x)).collect())
                .collect(),
        )
    }

    /// Matrix whose `c`-th column is `columns[c]`. Panics on ragged input.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (r, x) in col.iter().enumerate() {
                m[(r, c)] = x.clone();
            }
        }
        m
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, x) in entries.iter().enumerate() {
            m[(i, i)] = x.clone();
        }
        m
    }

    pub fn block_diagonal(a: &Matrix, b: &Matrix) -> Self {
        let mut m = Self::zeros(a.rows + b.rows, a.cols + b.cols);
        for r in 0..a.rows {
            for c in 0..a.cols {
                m[(r, c)] = a[(r, c)].clone();
            }
        }
        for r in 0..b.rows {
            for c in 0..b.cols {
                m[(a.rows + r, a.cols + c)] = b[(r, c)].clone();
            }
        }
        m
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

    pub(crate) fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// True iff the matrix is square and a multiple of the identity.
    pub fn is_scalar(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let d = self.rows;
        (0..d).all(|r| {
            (0..d).all(|c| {
                if r == c {
                    self[(r, c)] == self[(0, 0)]
                } else {
                    self[(r, c)].is_zero()
                }
            })
        })
    }

    pub fn apply(&self, v: &[Rational]) -> Vector {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|r| {
                let mut acc = Rational::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn checked_apply(&self, v: &[Rational]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok(self.apply(v))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * q).collect(),
        }
    }

    /// `self + q * I`.
    pub fn add_scalar(&self, q: &Rational) -> Self {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            m[(i, i)] += q;
        }
        m
    }

    pub fn pow(&self, k: u32) -> Self {
        assert!(self.is_square(), "power of a non-square matrix");
        (0..k).fold(Self::identity(self.rows), |acc, _| &acc * self)
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .sum()
    }

    /// Reduced row-echelon form together with the rank.
    pub fn rref(&self) -> (Matrix, usize) {
        let mut m = self.clone();
        let rank = m.rref_in_place();
        (m, rank)
    }

    /// Gauss-Jordan elimination in place; returns pivot columns.
    pub(crate) fn rref_pivots(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self[(r, col)].is_zero()) else {
                continue;
            };
            self.swap_rows(row, p);
            let inv = self[(row, col)].recip();
            for c in col..self.cols {
                let x = &self[(row, c)] * &inv;
                self[(row, c)] = x;
            }
            let pivot_row = self.row(row).to_vec();
            for r in 0..self.rows {
                if r == row || self[(r, col)].is_zero() {
                    continue;
                }
                let f = self[(r, col)].clone();
                for c in col..self.cols {
                    if !pivot_row[c].is_zero() {
                        let x = &f * &pivot_row[c];
                        self[(r, c)] -= x;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    fn rref_in_place(&mut self) -> usize {
        self.rref_pivots().len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    pub fn det(&self) -> Result<Rational> {
        let n = self.require_square()?;
        let mut m = self.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m[(r, col)].is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != col {
                m.swap_rows(p, col);
                det = -det;
            }
            let pivot = m[(col, col)].clone();
            det *= &pivot;
            for r in col + 1..n {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let f = &m[(r, col)] / &pivot;
                for c in col..n {
                    let x = &f * &m[(col, c)];
                    m[(r, c)] -= x;
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        let n = self.require_square()?;
        let mut aug = Self::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, n + r)] = Rational::one();
        }
        let pivots = aug.rref_pivots();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        let mut inv = Self::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv[(r, c)] = aug[(r, n + c)].clone();
            }
        }
        Ok(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Null space `{ v : M v = 0 }` in canonical form.
    pub fn kernel(&self) -> Subspace {
        let mut m = self.clone();
        let pivots = m.rref_pivots();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let basis = free
            .iter()
            .map(|&f| {
                let mut v = zero_vector(self.cols);
                v[f] = Rational::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -m[(row, f)].clone();
                }
                v
            })
            .collect::<Vec<_>>();
        Subspace::span(self.cols, &basis).expect("kernel vectors have ambient length")
    }

    /// Column space.
    pub fn image(&self) -> Subspace {
        let cols: Vec<Vector> = (0..self.cols).map(|c| self.column(c)).collect();
        Subspace::span(self.rows, &cols).expect("columns have ambient length")
    }

    /// `det(t I - M)` via Faddeev-LeVerrier; exact over the rationals.
    pub fn char_poly(&self) -> Result<Polynomial> {
        let n = self.require_square()?;
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        let mut aux = Matrix::zeros(n, n);
        for k in 1..=n {
            aux = (self * &aux).add_scalar(&coeffs[n + 1 - k]);
            let t = (self * &aux).trace();
            coeffs[n - k] = -t / int(k as i64);
        }
        Ok(Polynomial::new(coeffs))
    }

    /// Diagonalizability over the algebraic closure for 2x2 matrices.
    pub fn is_diagonalizable_2x2(&self) -> Result<bool> {
        if self.rows != 2 || self.cols != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: self.rows.max(self.cols),
            });
        }
        Ok(!discriminant_2x2(self).is_zero() || self.is_scalar())
    }
}

/// `tr^2 - 4 det` of a 2x2 matrix.
pub fn discriminant_2x2(m: &Matrix) -> Rational {
    let tr = m.trace();
    let det = &m[(0, 0)] * &m[(1, 1)] - &m[(0, 1)] * &m[(1, 0)];
    &tr * &tr - int(4) * det
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;

    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        assert!(r < self.rows && c < self.cols, "index out of range");
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        assert!(r < self.rows && c < self.cols, "index out of range");
        &mut self.data[r * self.cols + c]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape");
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
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;

    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum shape");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix difference shape");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;

    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(format_rational).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
