//! Dense rational matrices with exact elimination.

use super::Rational;
use crate::error::{Error, Result};
use num::{BigInt, Integer, One, Zero};
use rayon::prelude::*;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

/// Products with at least this many left-hand rows run row-parallel.
const PAR_ROWS: usize = 48;

/// A dense `rows × cols` matrix of rationals, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    /// All-zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    /// Identity of size `n`.
    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| {
            if r == c {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    /// Builds from a 0-based entry function.
    pub fn from_fn<F: FnMut(usize, usize) -> Rational>(rows: usize, cols: usize, mut f: F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds from rows of rationals; all rows must share a length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds from integer rows.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| super::rat(v)).collect())
                .collect(),
        )
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Row-major entries.
    pub fn data(&self) -> &[Rational] {
        &self.data
    }

    /// One row as a slice.
    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Entry A^i_j with 1-based indices (upper index = row).
    pub fn at(&self, i: usize, j: usize) -> &Rational {
        &self[(i - 1, j - 1)]
    }

    /// True when square.
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// True when every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// First nonzero entry in row-major order.
    pub fn first_nonzero(&self) -> Option<(usize, usize, Rational)> {
        self.data
            .iter()
            .position(|x| !x.is_zero())
            .map(|p| (p / self.cols, p % self.cols, self.data[p].clone()))
    }

    /// Number of nonzero entries.
    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }

    /// Transpose.
    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    /// Multiplies every entry by `s`.
    pub fn scale(&self, s: &Rational) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    /// Sum of diagonal entries.
    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).fold(Rational::zero(), |acc, i| acc + &self[(i, i)])
    }

    /// Commutator AB − BA.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// Kronecker product A ⊗ B with row index (a,b) ↦ a·rows(B)+b.
    pub fn kron(&self, other: &Self) -> Self {
        Self::from_fn(self.rows * other.rows, self.cols * other.cols, |r, c| {
            &self[(r / other.rows, c / other.cols)] * &other[(r % other.rows, c % other.cols)]
        })
    }

    /// Nonnegative integer power of a square matrix.
    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity(self.rows);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Reduced row-echelon form and pivot columns, by exact Gauss–Jordan elimination.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m[(row, col)].recip();
            for c in col..m.cols {
                let v = &m[(row, c)] * &inv;
                m[(row, c)] = v;
            }
            for r in 0..m.rows {
                if r != row && !m[(r, col)].is_zero() {
                    let f = m[(r, col)].clone();
                    for c in col..m.cols {
                        let v = &m[(row, c)] * &f;
                        m[(r, c)] -= v;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    /// Nonzero rows of the reduced row-echelon form: a canonical basis of the row space.
    pub fn row_space_basis(&self) -> Self {
        let (m, pivots) = self.rref();
        Self::from_fn(pivots.len(), self.cols, |r, c| m[(r, c)].clone())
    }

    /// Rank.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space, one vector per column of the result.
    pub fn null_space(&self) -> Self {
        let (m, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Self::zeros(self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            out[(f, k)] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                out[(p, k)] = -m[(r, f)].clone();
            }
        }
        out
    }

    /// Determinant by fraction-free (Bareiss) elimination on the row-scaled integer matrix.
    pub fn det(&self) -> Rational {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Rational::one();
        }
        let mut scale = BigInt::one();
        let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for r in 0..n {
            let l = self
                .row(r)
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &l;
            a.push(
                self.row(r)
                    .iter()
                    .map(|x| x.numer() * (&l / x.denom()))
                    .collect(),
            );
        }
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(p) => {
                        a.swap(k, p);
                        sign = -sign;
                    }
                    None => return Rational::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
            }
            prev = a[k][k].clone();
        }
        Rational::new(sign * &a[n - 1][n - 1], scale)
    }

    /// Inverse of a square matrix.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self[(r, c)].clone()
            } else if c - n == r {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        let (m, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular(format!("{n}x{n} matrix has rank < {n}")));
        }
        Ok(Self::from_fn(n, n, |r, c| m[(r, c + n)].clone()))
    }

    /// Solves `self · X = rhs` for square invertible `self`.
    pub fn solve(&self, rhs: &Self) -> Result<Self> {
        if self.rows != rhs.rows {
            return Err(Error::DimensionMismatch("solve".into()));
        }
        let n = self.rows;
        let k = rhs.cols;
        let aug = Self::from_fn(n, self.cols + k, |r, c| {
            if c < self.cols {
                self[(r, c)].clone()
            } else {
                rhs[(r, c - self.cols)].clone()
            }
        });
        let (m, pivots) = aug.rref();
        if pivots.len() < self.cols || pivots.iter().any(|&p| p >= self.cols) {
            return Err(Error::Singular("system has no unique solution".into()));
        }
        Ok(Self::from_fn(self.cols, k, |r, c| m[(r, c + self.cols)].clone()))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn mul_row(&self, other: &Self, r: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); other.cols];
        for (k, a) in self.row(r).iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(other.row(k)) {
                if !b.is_zero() {
                    *o += a * b;
                }
            }
        }
        out
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let rows: Vec<Vec<Rational>> = if self.rows >= PAR_ROWS {
            (0..self.rows)
                .into_par_iter()
                .map(|r| self.mul_row(other, r))
                .collect()
        } else {
            (0..self.rows).map(|r| self.mul_row(other, r)).collect()
        };
        Matrix {
            rows: self.rows,
            cols: other.cols,
            data: rows.into_iter().flatten().collect(),
        }
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{frac, rat};

    #[test]
    fn inverse_and_det() {
        let a = Matrix::from_i64(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, Matrix::identity(3));
        assert_eq!(a.det(), rat(18));
        let b = Matrix::from_rows(vec![vec![frac(1, 2), rat(1)], vec![rat(3), frac(-1, 3)]]);
        assert_eq!(b.det(), frac(-1, 6) - rat(3));
        assert!(Matrix::from_i64(&[&[1, 2], &[2, 4]]).inverse().is_err());
        assert_eq!(Matrix::from_i64(&[&[0, 1], &[1, 0]]).det(), rat(-1));
    }

    #[test]
    fn rank_and_null_space() {
        let a = Matrix::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let k = a.null_space();
        assert_eq!(k.cols(), 1);
        assert!((&a * &k).is_zero());
    }

    #[test]
    fn solve_system() {
        let a = Matrix::from_i64(&[&[1, 1], &[1, -1]]);
        let b = Matrix::from_i64(&[&[3], &[1]]);
        assert_eq!(a.solve(&b).unwrap(), Matrix::from_i64(&[&[2], &[1]]));
    }
}
