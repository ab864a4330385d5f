use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{Algebra, Rat};
use crate::field::FieldElem;

/// Field operations needed by the elimination kernels.
pub trait Scalar: Clone + PartialEq + fmt::Debug {
    fn is_zero(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn try_inv(&self) -> Result<Self>;
    /// Embeds a rational alongside `self`.
    fn rat_like(&self, c: &Rat) -> Self;
    /// Whether two entries may share a matrix.
    fn compatible(&self, _other: &Self) -> bool {
        true
    }
}

impl Scalar for Rat {
    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        Rat::zero()
    }
    fn one_like(&self) -> Self {
        Rat::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn try_inv(&self) -> Result<Self> {
        self.inv().ok_or(Error::DivisionByZero)
    }
    fn rat_like(&self, c: &Rat) -> Self {
        c.clone()
    }
}

impl Scalar for FieldElem {
    fn is_zero(&self) -> bool {
        FieldElem::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        self.field().zero()
    }
    fn one_like(&self) -> Self {
        self.field().one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn try_inv(&self) -> Result<Self> {
        self.inv()
    }
    fn rat_like(&self, c: &Rat) -> Self {
        self.field().from_rat(c.clone())
    }
    fn compatible(&self, other: &Self) -> bool {
        self.field().same_field(other.field())
    }
}

/// Dense row-major matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

pub type QMatrix = Matrix<Rat>;
pub type EMatrix = Matrix<FieldElem>;

/// Output of [`Matrix::rank_and_solve`].
#[derive(Clone, Debug, PartialEq)]
pub struct Solved<T> {
    pub rank: usize,
    /// A particular solution with free variables set to zero, when a
    /// right-hand side was given and the system is consistent.
    pub solution: Option<Vec<T>>,
    /// A basis of the right kernel.
    pub kernel: Vec<Vec<T>>,
}

impl<T: Scalar> Matrix<T> {
    /// Builds a matrix from equal-length rows of compatible entries.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let nrows = rows.len();
        let entries: Vec<T> = rows.into_iter().flatten().collect();
        if let Some(first) = entries.first() {
            if entries.iter().any(|e| !first.compatible(e)) {
                return Err(Error::FieldMismatch);
            }
        }
        Ok(Matrix {
            rows: nrows,
            cols,
            entries,
        })
    }

    pub fn from_columns(columns: Vec<Vec<T>>) -> Result<Self> {
        Ok(Self::from_rows(columns)?.transpose())
    }

    /// `n × n` identity using `template` to build zero and one.
    pub fn identity(n: usize, template: &T) -> Self {
        let mut entries = vec![template.zero_like(); n * n];
        for i in 0..n {
            entries[i * n + i] = template.one_like();
        }
        Matrix {
            rows: n,
            cols: n,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} + {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        if self.cols == 0 {
            return Err(Error::DimensionMismatch("empty inner dimension".into()));
        }
        let mut entries = Vec::with_capacity(self.rows * rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = self.get(i, 0).mul(rhs.get(0, j));
                for k in 1..self.cols {
                    acc = acc.add(&self.get(i, k).mul(rhs.get(k, j)));
                }
                entries.push(acc);
            }
        }
        Ok(Matrix {
            rows: self.rows,
            cols: rhs.cols,
            entries,
        })
    }

    pub fn scale(&self, c: &T) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| a.mul(c)).collect(),
        }
    }

    /// Sum of the diagonal; `None` for non-square or empty matrices.
    pub fn trace(&self) -> Option<T> {
        if !self.is_square() || self.rows == 0 {
            return None;
        }
        let mut acc = self.get(0, 0).clone();
        for i in 1..self.rows {
            acc = acc.add(self.get(i, i));
        }
        Some(acc)
    }

    /// Exact Gauss-Jordan elimination. Pivots are the first nonzero entry
    /// in each column scanning downward, so results are reproducible.
    pub fn rank_and_solve(&self, rhs: Option<&[T]>) -> Result<Solved<T>> {
        if let Some(b) = rhs {
            if b.len() != self.rows {
                return Err(Error::DimensionMismatch(format!(
                    "rhs of length {} for {} rows",
                    b.len(),
                    self.rows
                )));
            }
        }
        let width = self.cols + usize::from(rhs.is_some());
        let mut m: Vec<Vec<T>> = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                if let Some(b) = rhs {
                    r.push(b[i].clone());
                }
                r
            })
            .collect();
        let mut pivots: Vec<usize> = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let inv = m[r][c].try_inv()?;
            for j in c..width {
                m[r][j] = m[r][j].mul(&inv);
            }
            for i in 0..self.rows {
                if i == r || m[i][c].is_zero() {
                    continue;
                }
                let factor = m[i][c].clone();
                for j in c..width {
                    let t = factor.mul(&m[r][j]);
                    m[i][j] = m[i][j].sub(&t);
                }
            }
            pivots.push(c);
            r += 1;
        }
        let rank = pivots.len();
        let template = self.entries.first().cloned().or_else(|| rhs.and_then(|b| b.first().cloned()));
        let Some(template) = template else {
            return Ok(Solved {
                rank,
                solution: rhs.map(|_| vec![]),
                kernel: Vec::new(),
            });
        };
        let zero = template.zero_like();
        let one = template.one_like();

        let solution = rhs.and_then(|_| {
            if (rank..self.rows).any(|i| !m[i][self.cols].is_zero()) {
                return None;
            }
            let mut x = vec![zero.clone(); self.cols];
            for (i, &c) in pivots.iter().enumerate() {
                x[c] = m[i][self.cols].clone();
            }
            Some(x)
        });

        let mut kernel = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![zero.clone(); self.cols];
            v[free] = one.clone();
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = zero.sub(&m[i][free]);
            }
            kernel.push(v);
        }
        Ok(Solved {
            rank,
            solution,
            kernel,
        })
    }

    pub fn rank(&self) -> Result<usize> {
        Ok(self.rank_and_solve(None)?.rank)
    }

    /// Determinant by Bareiss fraction-free elimination; each exact division
    /// is carried out as multiplication by an inverse.
    pub fn det(&self) -> Result<T> {
        if !self.is_square() || self.rows == 0 {
            return Err(Error::DimensionMismatch("determinant of a non-square or empty matrix".into()));
        }
        let n = self.rows;
        let mut m = self.to_rows();
        let mut prev = m[0][0].one_like();
        let mut negate = false;
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                    return Ok(m[0][0].zero_like());
                };
                m.swap(k, p);
                negate = !negate;
            }
            let prev_inv = prev.try_inv()?;
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                    m[i][j] = t.mul(&prev_inv);
                }
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        Ok(if negate { d.zero_like().sub(&d) } else { d })
    }
}

impl QMatrix {
    /// Determinant via Bareiss elimination over ℤ after clearing each row's
    /// denominators.
    pub fn det_fraction_free(&self) -> Result<Rat> {
        if !self.is_square() || self.rows == 0 {
            return Err(Error::DimensionMismatch("determinant of a non-square or empty matrix".into()));
        }
        let n = self.rows;
        let mut scale = BigInt::one();
        let mut m: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                let row = self.row(i);
                let lcm = row.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
                scale *= &lcm;
                row.iter().map(|c| c.numer() * (&lcm / c.denom())).collect()
            })
            .collect();
        let mut prev = BigInt::one();
        let mut negate = false;
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                    return Ok(Rat::zero());
                };
                m.swap(k, p);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                    m[i][j] = t / &prev;
                }
            }
            prev = m[k][k].clone();
        }
        let d = Rat::new(m[n - 1][n - 1].clone(), scale);
        Ok(if negate { -d } else { d })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&c| Rat::from_int(c)).collect())
                .collect(),
        )
        .expect("rectangular input")
    }
}

impl<T: Scalar> Algebra for Matrix<T> {
    /// `c` times the identity; the receiver must be square and nonempty.
    fn scalar_like(&self, c: &Rat) -> Self {
        assert!(self.is_square() && self.rows > 0, "scalar embedding needs a square matrix");
        let c = self.entries[0].rat_like(c);
        Matrix::identity(self.rows, &self.entries[0]).scale(&c)
    }
    fn alg_add(&self, rhs: &Self) -> Self {
        self.try_add(rhs).expect("matching shapes")
    }
    fn alg_mul(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).expect("matching shapes")
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[T]> = (0..self.rows)
            .map(|i| &self.entries[i * self.cols..(i + 1) * self.cols])
            .collect();
        f.debug_list().entries(rows).finish()
    }
}
