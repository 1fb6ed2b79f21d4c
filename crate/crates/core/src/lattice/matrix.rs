use std::fmt;
use std::ops::Mul;

use crate::{Error, IntScalar, Result};

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: IntScalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Build from explicit rows. `cols` is needed to describe a matrix with
    /// no rows (a map out of the zero group still has a target).
    pub fn from_rows(rows: Vec<Vec<T>>, cols: usize) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Invalid(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            data.extend(row);
        }
        Ok(Matrix { rows: n, cols, data })
    }

    /// Square or rectangular matrix from machine integers; panics on ragged input.
    pub fn from_i64<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let rows = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&v| from_i64::<T>(v)).collect())
            .collect();
        Self::from_rows(rows, cols).expect("ragged matrix literal")
    }

    /// The matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(columns: &[Vec<T>], rows: usize) -> Result<Self> {
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::Invalid(format!(
                    "column {j} has {} entries, expected {rows}",
                    c.len()
                )));
            }
        }
        Ok(Self::from_fn(rows, columns.len(), |r, c| columns[c][r].clone()))
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

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn map<U: IntScalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|r| dot(self.row(r), v))
            .collect()
    }

    /// Leading `k`x`k` block.
    pub fn leading(&self, k: usize) -> Self {
        Self::from_fn(k, k, |r, c| self.get(r, c).clone())
    }

    /// Principal submatrix on the given indices.
    pub fn principal(&self, idx: &[usize]) -> Self {
        Self::from_fn(idx.len(), idx.len(), |r, c| self.get(idx[r], idx[c]).clone())
    }

    pub fn check_symmetric(&self) -> Result<()> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        for r in 0..self.rows {
            for c in r + 1..self.cols {
                if self.get(r, c) != self.get(c, r) {
                    return Err(Error::NotSymmetric { row: r, col: c });
                }
            }
        }
        Ok(())
    }

    pub fn is_symmetric(&self) -> bool {
        self.check_symmetric().is_ok()
    }

    /// Determinant by fraction-free (Bareiss) elimination. Panics if not square.
    pub fn determinant(&self) -> T {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return T::one();
        }
        let mut a = self.clone();
        let mut sign = T::one();
        let mut prev = T::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(i) => {
                        a.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return T::zero(),
                }
            }
            let pivot = a.get(k, k).clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (pivot.clone() * a.get(i, j).clone()
                        - a.get(i, k).clone() * a.get(k, j).clone())
                        / prev.clone();
                    a.set(i, j, v);
                }
                a.set(i, k, T::zero());
            }
            prev = pivot;
        }
        sign * a.get(n - 1, n - 1).clone()
    }

    /// All leading principal minors `d_1, ..., d_n`, computed in one
    /// fraction-free pass. Returns `None` in place of the tail once a minor
    /// vanishes, since elimination without pivoting cannot continue past it.
    pub fn leading_minors(&self) -> Vec<Option<T>> {
        assert!(self.is_square(), "minors of a non-square matrix");
        let n = self.rows;
        let mut out = Vec::with_capacity(n);
        let mut a = self.clone();
        let mut prev = T::one();
        for k in 0..n {
            let pivot = a.get(k, k).clone();
            out.push(Some(pivot.clone()));
            if pivot.is_zero() {
                out.extend((k + 1..n).map(|_| None));
                break;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (pivot.clone() * a.get(i, j).clone()
                        - a.get(i, k).clone() * a.get(k, j).clone())
                        / prev.clone();
                    a.set(i, j, v);
                }
            }
            prev = pivot;
        }
        out
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row[target] -= factor * row[source]
    pub(crate) fn row_sub(&mut self, target: usize, source: usize, factor: &T) {
        if factor.is_zero() {
            return;
        }
        for c in 0..self.cols {
            self.sub_scaled(target * self.cols + c, source * self.cols + c, factor);
        }
    }

    /// col[target] -= factor * col[source]
    pub(crate) fn col_sub(&mut self, target: usize, source: usize, factor: &T) {
        if factor.is_zero() {
            return;
        }
        for r in 0..self.rows {
            self.sub_scaled(r * self.cols + target, r * self.cols + source, factor);
        }
    }

    /// data[target] -= factor * data[source], skipping zero sources since
    /// winding matrices are sparse.
    fn sub_scaled(&mut self, target: usize, source: usize, factor: &T) {
        if self.data[source].is_zero() {
            return;
        }
        let prod = factor.clone() * self.data[source].clone();
        let cur = std::mem::replace(&mut self.data[target], T::zero());
        self.data[target] = cur - prod;
    }

    pub(crate) fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -self.get(r, c).clone();
            self.set(r, c, v);
        }
    }
}

impl<T: IntScalar> Mul for &Matrix<T> {
    type Output = Matrix<T>;

    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        Matrix::from_fn(self.rows, rhs.cols, |r, c| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                acc = acc + self.get(r, k).clone() * rhs.get(k, c).clone();
            }
            acc
        })
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{:?}", self.data[r * self.cols + c])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

pub fn dot<T: IntScalar>(a: &[T], b: &[T]) -> T {
    a.iter()
        .zip(b)
        .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

pub(crate) fn from_i64<T: IntScalar>(v: i64) -> T {
    T::from_i64(v).expect("i64 fits every supported scalar")
}
