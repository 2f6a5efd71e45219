//! Dense matrices over Laurent scalars or over a flag algebra, with the tensor
//! leg embeddings used by the R-matrix calculus.
//!
//! A multi-index `(a_1, ..., a_L)` over `{1..N}` is stored at the big-endian
//! position `sum (a_l - 1) N^{L-l}`; for two legs this is `(j-1)N + (k-1)`.

use std::fmt;

use thiserror::Error;

use crate::ncalg::{AlgebraError, Element, FlagAlgebra};
use crate::scalar::Laurent;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("shape mismatch: {op} of {left:?} and {right:?}")]
    Shape {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("matrix is singular or its inverse has non-Laurent entries")]
    NotInvertible,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Matrix entries: a commutative additive group with a distinguished zero.
pub trait Entry: Clone + PartialEq + fmt::Display {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign(&mut self, other: &Self);
    fn negated(&self) -> Self;
    fn scaled(&self, c: &Laurent) -> Self;
}

impl Entry for Laurent {
    fn zero() -> Self {
        Laurent::zero()
    }
    fn is_zero(&self) -> bool {
        Laurent::is_zero(self)
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scaled(&self, c: &Laurent) -> Self {
        self * c
    }
}

impl Entry for Element {
    fn zero() -> Self {
        Element::zero()
    }
    fn is_zero(&self) -> bool {
        Element::is_zero(self)
    }
    fn add_assign(&mut self, other: &Self) {
        self.add_scaled(other, &Laurent::one());
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scaled(&self, c: &Laurent) -> Self {
        self.scale(c)
    }
}

#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type SMat = Matrix<Laurent>;
pub type AMat = Matrix<Element>;

impl<T: Entry> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
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

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    /// Zero-based access.
    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn entry_mut(&mut self, r: usize, c: usize) -> &mut T {
        &mut self.data[r * self.cols + c]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Entry::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn map<U: Entry>(&self, mut f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(&mut f).collect(),
        }
    }

    pub fn try_map<U: Entry, E>(&self, mut f: impl FnMut(&T) -> Result<U, E>) -> Result<Matrix<U>, E> {
        let data = self.data.iter().map(&mut f).collect::<Result<Vec<_>, E>>()?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn scale(&self, c: &Laurent) -> Self {
        self.map(|x| x.scaled(c))
    }

    pub fn neg(&self) -> Self {
        self.map(Entry::negated)
    }

    fn check_same(&self, other: &Self, op: &'static str) -> Result<(), MatrixError> {
        if self.shape() != other.shape() {
            return Err(MatrixError::Shape {
                op,
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, MatrixError> {
        self.check_same(other, "add")?;
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(&other.data) {
            x.add_assign(y);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, MatrixError> {
        self.add(&other.neg())
    }

    /// First position where the two matrices differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        if self.shape() != other.shape() {
            return Some((0, 0));
        }
        let i = self.data.iter().zip(&other.data).position(|(a, b)| a != b)?;
        Some((i / self.cols, i % self.cols))
    }

    /// Generic product with a custom entry multiplication. Zero entries are
    /// skipped on both sides.
    pub fn mul_with<U: Entry, V: Entry, E>(
        &self,
        other: &Matrix<U>,
        mut f: impl FnMut(&T, &U) -> Result<V, E>,
    ) -> Result<Matrix<V>, E>
    where
        E: From<MatrixError>,
    {
        if self.cols != other.rows {
            return Err(MatrixError::Shape {
                op: "mul",
                left: self.shape(),
                right: other.shape(),
            }
            .into());
        }
        let mut out = Matrix::<V>::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let p = f(a, b)?;
                    out.entry_mut(r, c).add_assign(&p);
                }
            }
        }
        Ok(out)
    }

    /// Embeds a matrix acting on the tensor legs `legs` (1-based, in the order
    /// of the factor's own multi-index) into `total` legs of dimension `n`.
    pub fn embed(&self, n: usize, legs: &[usize], total: usize) -> Self {
        let k = legs.len();
        assert_eq!(self.rows, n.pow(k as u32));
        assert_eq!(self.cols, n.pow(k as u32));
        let dim = n.pow(total as u32);
        let mut out = Self::zeros(dim, dim);
        let sub_index = |idx: &[usize]| legs.iter().fold(0, |acc, &l| acc * n + idx[l - 1]);
        for row in 0..dim {
            let a = digits(row, n, total);
            let ra = sub_index(&a);
            for cb in 0..self.cols {
                let v = self.get(ra, cb);
                if v.is_zero() {
                    continue;
                }
                let mut b = a.clone();
                let bd = digits(cb, n, k);
                for (i, &l) in legs.iter().enumerate() {
                    b[l - 1] = bd[i];
                }
                out.set(row, undigits(&b, n), v.clone());
            }
        }
        out
    }
}

/// Zero-based big-endian digits of `idx` in base `n`, `len` of them.
pub fn digits(mut idx: usize, n: usize, len: usize) -> Vec<usize> {
    let mut d = vec![0; len];
    for slot in d.iter_mut().rev() {
        *slot = idx % n;
        idx /= n;
    }
    d
}

pub fn undigits(d: &[usize], n: usize) -> usize {
    d.iter().fold(0, |acc, &x| acc * n + x)
}

impl SMat {
    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { Laurent::one() } else { Laurent::zero() })
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rows)
    }

    pub fn mul(&self, other: &SMat) -> Result<SMat, MatrixError> {
        self.mul_with(other, |a, b| Ok::<_, MatrixError>(a * b))
    }

    /// Product of several factors, left to right.
    pub fn chain(factors: &[&SMat]) -> Result<SMat, MatrixError> {
        let (first, rest) = factors.split_first().expect("empty product");
        let mut acc = (*first).clone();
        for f in rest {
            acc = acc.mul(f)?;
        }
        Ok(acc)
    }

    /// Substitutes `v -> v^{-1}` entrywise.
    pub fn invert_v(&self) -> SMat {
        self.map(Laurent::invert_v)
    }

    /// Lifts a scalar matrix into algebra-valued entries.
    pub fn to_alg(&self) -> AMat {
        self.map(|c| Element::scalar(c.clone()))
    }

    /// Exact inverse by fraction-free Gauss-Jordan elimination followed by one
    /// exact division by the determinant. Fails unless every entry of the
    /// inverse is a Laurent polynomial.
    pub fn inverse(&self) -> Result<SMat, MatrixError> {
        if self.rows != self.cols {
            return Err(MatrixError::Shape {
                op: "inverse",
                left: self.shape(),
                right: self.shape(),
            });
        }
        let n = self.rows;
        let w = 2 * n;
        let mut m: Vec<Vec<Laurent>> = (0..n)
            .map(|r| {
                let mut row: Vec<Laurent> = (0..n).map(|c| self.get(r, c).clone()).collect();
                row.extend((0..n).map(|c| if c == r { Laurent::one() } else { Laurent::zero() }));
                row
            })
            .collect();
        let mut prev = Laurent::one();
        for k in 0..n {
            let p = (k..n).find(|&r| !m[r][k].is_zero()).ok_or(MatrixError::NotInvertible)?;
            m.swap(k, p);
            let pivot = m[k][k].clone();
            for i in 0..n {
                if i == k {
                    continue;
                }
                let factor = m[i][k].clone();
                for j in 0..w {
                    let num = &(&pivot * &m[i][j]) - &(&factor * &m[k][j]);
                    m[i][j] = num.div_exact(&prev).ok_or(MatrixError::NotInvertible)?;
                }
            }
            prev = pivot;
        }
        // every diagonal entry now equals `prev`, the determinant up to sign
        SMat::from_fn(n, n, |r, c| m[r][n + c].clone()).try_map(|x| {
            x.div_exact(&prev).ok_or(MatrixError::NotInvertible)
        })
    }
}

impl AMat {
    pub fn identity(n: usize) -> Self {
        SMat::identity(n).to_alg()
    }

    /// Product with entries multiplied in `alg`.
    pub fn mul_in(&self, other: &AMat, alg: &FlagAlgebra) -> Result<AMat, MatrixError> {
        self.mul_with(other, |a, b| alg.multiply(a, b).map_err(MatrixError::from))
    }

    pub fn chain_in(factors: &[&AMat], alg: &FlagAlgebra) -> Result<AMat, MatrixError> {
        let (first, rest) = factors.split_first().expect("empty product");
        let mut acc = (*first).clone();
        for f in rest {
            acc = acc.mul_in(f, alg)?;
        }
        Ok(acc)
    }

    /// Scalar matrix times algebra matrix.
    pub fn lmul_scalar(s: &SMat, a: &AMat) -> Result<AMat, MatrixError> {
        s.mul_with(a, |x, y| Ok::<_, MatrixError>(y.scale(x)))
    }

    /// Algebra matrix times scalar matrix.
    pub fn rmul_scalar(&self, s: &SMat) -> Result<AMat, MatrixError> {
        self.mul_with(s, |x, y| Ok::<_, MatrixError>(x.scale(y)))
    }
}

/// A factor of a mixed product of scalar and algebra-valued matrices.
#[derive(Clone, Copy)]
pub enum Factor<'a> {
    S(&'a SMat),
    A(&'a AMat),
}

/// Left-to-right product of mixed factors, entries multiplied in `alg`.
pub fn chain_mixed(factors: &[Factor<'_>], alg: &FlagAlgebra) -> Result<AMat, MatrixError> {
    let (first, rest) = factors.split_first().expect("empty product");
    let mut acc = match first {
        Factor::S(s) => s.to_alg(),
        Factor::A(a) => (*a).clone(),
    };
    for f in rest {
        acc = match f {
            Factor::S(s) => acc.rmul_scalar(s)?,
            Factor::A(a) => acc.mul_in(a, alg)?,
        };
    }
    Ok(acc)
}

impl<T: Entry> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<T: Entry> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{}\n{}", self.rows, self.cols, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(x: i64) -> Laurent {
        Laurent::from_int(x)
    }

    #[test]
    fn inverse_of_unimodular() {
        let a = SMat::from_fn(3, 3, |r, c| match (r, c) {
            (0, 0) => Laurent::q(),
            (0, 2) => Laurent::gamma(),
            (1, 1) => l(1),
            (1, 0) => l(5),
            (2, 2) => Laurent::q_pow(-1),
            _ => l(0),
        });
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).unwrap().is_identity());
        assert!(inv.mul(&a).unwrap().is_identity());
    }

    #[test]
    fn needs_pivoting() {
        let a = SMat::from_fn(2, 2, |r, c| if r != c { l(1) } else { l(0) });
        assert_eq!(a.inverse().unwrap(), a);
    }

    #[test]
    fn non_laurent_inverse_rejected() {
        let a = SMat::from_fn(1, 1, |_, _| Laurent::from_int(1) + Laurent::q());
        assert_eq!(a.inverse(), Err(MatrixError::NotInvertible));
        let z = SMat::zeros(2, 2);
        assert_eq!(z.inverse(), Err(MatrixError::NotInvertible));
    }

    #[test]
    fn embed_two_legs_of_three() {
        // A on legs (1,3) has entries A_{(a1 a3),(b1 b3)} d(a2,b2)
        let n = 2;
        let a = SMat::from_fn(4, 4, |r, c| l((r * 4 + c) as i64 + 1));
        let e = a.embed(n, &[1, 3], 3);
        for row in 0..8 {
            for col in 0..8 {
                let (x, y) = (digits(row, n, 3), digits(col, n, 3));
                let expected = if x[1] == y[1] {
                    a.get(x[0] * 2 + x[2], y[0] * 2 + y[2]).clone()
                } else {
                    l(0)
                };
                assert_eq!(e.get(row, col), &expected);
            }
        }
        // reversed leg order is the flip-conjugated embedding
        let swapped = a.embed(n, &[3, 1], 3);
        let p = SMat::from_fn(4, 4, |r, c| {
            let (x, y) = (digits(r, 2, 2), digits(c, 2, 2));
            if x[0] == y[1] && x[1] == y[0] { l(1) } else { l(0) }
        });
        let conj = SMat::chain(&[&p, &a, &p]).unwrap().embed(n, &[1, 3], 3);
        assert_eq!(swapped, conj);
    }

    #[test]
    fn shape_errors() {
        let a = SMat::identity(2);
        let b = SMat::identity(3);
        assert!(matches!(a.mul(&b), Err(MatrixError::Shape { .. })));
        assert!(matches!(a.add(&b), Err(MatrixError::Shape { .. })));
    }
}
