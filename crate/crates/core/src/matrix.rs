//! Dense matrices over the rationals with arbitrary-precision entries.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::par;

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => Ok(Q::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

pub fn format_rational(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Q>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Q>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch("matrices must be at least 1×1".into()));
        }
        if entries.len() != rows * cols {
            return Err(Error::LengthMismatch { expected: rows * cols, found: entries.len() });
        }
        Ok(RationalMatrix { rows, cols, entries })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Q) -> Self {
        let entries = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        RationalMatrix { rows, cols, entries }
    }

    pub fn from_ints(rows: usize, cols: usize, values: &[i64]) -> Self {
        assert_eq!(values.len(), rows * cols);
        Self::from_fn(rows, cols, |i, j| q(values[i * cols + j]))
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| Q::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Q::one() } else { Q::zero() })
    }

    /// The matrix of a function on basis vectors: column `i` is `e_{images[i]}`.
    pub fn of_function(images: &[usize]) -> Self {
        let n = images.len();
        Self::from_fn(n, n, |i, j| if images[j] == i { Q::one() } else { Q::zero() })
    }

    /// The flip `v ⊗ w ↦ w ⊗ v` on `K^d ⊗ K^d`.
    pub fn swap(d: usize) -> Self {
        let images: Vec<usize> = (0..d * d).map(|k| (k % d) * d + k / d).collect();
        Self::of_function(&images)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Q] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Q) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn first_nonzero(&self) -> Option<(usize, usize)> {
        self.entries.iter().position(|x| !x.is_zero()).map(|k| (k / self.cols, k % self.cols))
    }

    pub fn first_difference(&self, other: &RationalMatrix) -> Option<(usize, usize)> {
        self.entries.iter().zip(&other.entries).position(|(a, b)| a != b).map(|k| (k / self.cols, k % self.cols))
    }

    /// Column indices of the nonzero entries of each row.
    fn row_support(&self) -> Vec<Vec<usize>> {
        (0..self.rows)
            .map(|i| (0..self.cols).filter(|&j| !self.get(i, j).is_zero()).collect())
            .collect()
    }

    pub fn checked_mul(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}×{} by {}×{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let left = self.row_support();
        let right = other.row_support();
        let rows = par::map_range(self.rows, |i| {
            let mut acc = vec![Q::zero(); other.cols];
            for &k in &left[i] {
                let a = self.get(i, k);
                for &j in &right[k] {
                    acc[j] += a * other.get(k, j);
                }
            }
            acc
        });
        Ok(RationalMatrix { rows: self.rows, cols: other.cols, entries: rows.into_iter().flatten().collect() })
    }

    fn zip_with(&self, other: &RationalMatrix, f: impl Fn(&Q, &Q) -> Q) -> Result<RationalMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch(format!(
                "shapes {}×{} and {}×{} differ",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect();
        Ok(RationalMatrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn checked_add(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn checked_sub(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &Q) -> RationalMatrix {
        RationalMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|x| x * c).collect() }
    }

    pub fn transpose(&self) -> RationalMatrix {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Kronecker product, `self` on the more significant index.
    pub fn kron(&self, other: &RationalMatrix) -> RationalMatrix {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        Self::from_fn(r, c, |i, j| {
            self.get(i / other.rows, j / other.cols) * other.get(i % other.rows, j % other.cols)
        })
    }

    /// `[A, B] = AB − BA`.
    pub fn commutator(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        self.checked_mul(other)?.checked_sub(&other.checked_mul(self)?)
    }

    /// Exact inverse by Gauss–Jordan elimination.
    pub fn invert(&self) -> Result<RationalMatrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!("cannot invert a {}×{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero()).ok_or(Error::Singular)?;
            if pivot != col {
                for j in 0..n {
                    a.entries.swap(pivot * n + j, col * n + j);
                    inv.entries.swap(pivot * n + j, col * n + j);
                }
            }
            let p = a.get(col, col).recip();
            for j in 0..n {
                let (x, y) = (a.get(col, j) * &p, inv.get(col, j) * &p);
                a.set(col, j, x);
                inv.set(col, j, y);
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let factor = a.get(r, col).clone();
                for j in 0..n {
                    let x = a.get(r, j) - &factor * a.get(col, j);
                    let y = inv.get(r, j) - &factor * inv.get(col, j);
                    a.set(r, j, x);
                    inv.set(r, j, y);
                }
            }
        }
        Ok(inv)
    }

    /// Solves `self · x = b` for a square invertible `self`.
    pub fn solve(&self, b: &[Q]) -> Result<Vec<Q>> {
        let inv = self.invert()?;
        Ok((0..self.rows).map(|i| (0..self.cols).fold(Q::zero(), |acc, j| acc + inv.get(i, j) * &b[j])).collect())
    }

    pub fn max_abs_entry(&self) -> Q {
        self.entries.iter().map(|x| x.abs()).max().unwrap_or_else(Q::zero)
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| format_rational(self.get(i, j))).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Mul for &RationalMatrix {
    type Output = RationalMatrix;
    fn mul(self, rhs: &RationalMatrix) -> RationalMatrix {
        self.checked_mul(rhs).expect("matrix shapes agree")
    }
}

impl Add for &RationalMatrix {
    type Output = RationalMatrix;
    fn add(self, rhs: &RationalMatrix) -> RationalMatrix {
        self.checked_add(rhs).expect("matrix shapes agree")
    }
}

impl Sub for &RationalMatrix {
    type Output = RationalMatrix;
    fn sub(self, rhs: &RationalMatrix) -> RationalMatrix {
        self.checked_sub(rhs).expect("matrix shapes agree")
    }
}

impl Neg for &RationalMatrix {
    type Output = RationalMatrix;
    fn neg(self) -> RationalMatrix {
        self.scale(&q(-1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_examples() {
        assert_eq!(RationalMatrix::identity(3).invert().unwrap(), RationalMatrix::identity(3));
        let m = RationalMatrix::from_ints(2, 2, &[1, 2, 3, 4]);
        let expected = RationalMatrix::new(2, 2, vec![q(-2), q(1), q_frac(3, 2), q_frac(-1, 2)]).unwrap();
        assert_eq!(m.invert().unwrap(), expected);
        assert_eq!(&m * &expected, RationalMatrix::identity(2));
        assert_eq!(RationalMatrix::from_ints(2, 2, &[1, 2, 2, 4]).invert(), Err(Error::Singular));
        let pivoting = RationalMatrix::from_ints(3, 3, &[0, 1, 0, 0, 0, 1, 1, 0, 0]);
        assert_eq!(&pivoting * &pivoting.invert().unwrap(), RationalMatrix::identity(3));
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("3/6").unwrap(), q_frac(1, 2));
        assert_eq!(parse_rational("-4").unwrap(), q(-4));
        assert_eq!(format_rational(&q_frac(-2, 4)), "-1/2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn swap_matrix() {
        let p = RationalMatrix::swap(2);
        assert_eq!(&p * &p, RationalMatrix::identity(4));
        // e_0 ⊗ e_1 = e_1 goes to e_1 ⊗ e_0 = e_2
        assert_eq!(*p.get(2, 1), q(1));
    }

    #[test]
    fn kron_and_dimensions() {
        let a = RationalMatrix::from_ints(1, 2, &[1, 2]);
        let b = RationalMatrix::from_ints(2, 1, &[3, 4]);
        assert_eq!(a.kron(&b), RationalMatrix::from_ints(2, 2, &[3, 6, 4, 8]));
        assert!(a.checked_mul(&a).is_err());
        assert!(a.checked_add(&b).is_err());
    }
}
