//! Banded matrices over a generic scalar and the symmetric tridiagonal
//! operator shared by the oscillator and the spectral oracle.
//!
//! Every operator of a representation is diagonal or has a single nonzero
//! off-diagonal, so products stay narrow and all identity checks run on the
//! band storage. Dense copies are only produced for export and small tests.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::DMatrix;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::surd::Surd;

/// Ring elements a [`BandMatrix`] can hold.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(v: i64) -> Self;
    fn to_f64(&self) -> f64;
    /// Absolute value as a float, used for residual reporting.
    fn magnitude(&self) -> f64 {
        self.to_f64().abs()
    }
    /// True only for an exact zero.
    fn is_exact_zero(&self) -> bool;
    /// Whether arithmetic on this type is exact.
    const EXACT: bool;
}

impl Scalar for f64 {
    const EXACT: bool = false;
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_int(v: i64) -> Self {
        v as f64
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn is_exact_zero(&self) -> bool {
        *self == 0.0
    }
}

impl Scalar for Surd {
    const EXACT: bool = true;
    fn zero() -> Self {
        Surd::zero()
    }
    fn one() -> Self {
        Surd::one()
    }
    fn from_int(v: i64) -> Self {
        Surd::from_int(v)
    }
    fn to_f64(&self) -> f64 {
        Surd::to_f64(self)
    }
    fn is_exact_zero(&self) -> bool {
        self.is_zero()
    }
}

/// Scalars that can hold square roots of a parameter field: floats take
/// roots of floats, [`Surd`] takes exact roots of rationals.
pub trait RepScalar: Scalar {
    type Param: Field;
    fn sqrt_param(p: &Self::Param) -> Result<Self>;
    fn from_param(p: &Self::Param) -> Self;
    /// `self²` back in the parameter field, when representable.
    fn square_to_param(&self) -> Option<Self::Param>;
}

impl RepScalar for f64 {
    type Param = f64;
    fn sqrt_param(p: &f64) -> Result<Self> {
        if *p < 0.0 {
            return Err(Error::InvalidArgument(format!("square root of {p}")));
        }
        Ok(p.sqrt())
    }
    fn from_param(p: &f64) -> Self {
        *p
    }
    fn square_to_param(&self) -> Option<f64> {
        Some(self * self)
    }
}

impl RepScalar for Surd {
    type Param = BigRational;
    fn sqrt_param(p: &BigRational) -> Result<Self> {
        Surd::sqrt(p)
    }
    fn from_param(p: &BigRational) -> Self {
        Surd::from_rational(p.clone())
    }
    fn square_to_param(&self) -> Option<BigRational> {
        (self.clone() * self.clone()).as_rational()
    }
}

/// Square banded matrix: entry `(i, j)` is stored iff `-lower <= j - i <= upper`.
#[derive(Clone, Debug, PartialEq)]
pub struct BandMatrix<T> {
    n: usize,
    lower: usize,
    upper: usize,
    data: Vec<T>,
}

impl<T: Scalar> BandMatrix<T> {
    pub fn zeros(n: usize, lower: usize, upper: usize) -> Self {
        let lower = lower.min(n.saturating_sub(1));
        let upper = upper.min(n.saturating_sub(1));
        Self {
            n,
            lower,
            upper,
            data: vec![T::zero(); n * (lower + upper + 1)],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_diagonal(vec![T::one(); n])
    }

    pub fn from_diagonal(diag: Vec<T>) -> Self {
        let n = diag.len();
        Self {
            n,
            lower: 0,
            upper: 0,
            data: diag,
        }
    }

    /// Matrix with `values[k]` at `(k + 1, k)` when `offset == -1`, or at
    /// `(k, k + 1)` when `offset == 1`.
    pub fn from_offdiagonal(n: usize, offset: isize, values: &[T]) -> Self {
        assert_eq!(values.len(), n.saturating_sub(1));
        let (lower, upper) = if offset < 0 { (1, 0) } else { (0, 1) };
        let mut m = Self::zeros(n, lower, upper);
        for (k, v) in values.iter().enumerate() {
            if offset < 0 {
                m.set(k + 1, k, v.clone());
            } else {
                m.set(k, k + 1, v.clone());
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn bandwidths(&self) -> (usize, usize) {
        (self.lower, self.upper)
    }

    fn slot(&self, i: usize, j: usize) -> Option<usize> {
        if i >= self.n || j >= self.n {
            return None;
        }
        let offset = j as isize - i as isize;
        if offset < -(self.lower as isize) || offset > self.upper as isize {
            return None;
        }
        let width = self.lower + self.upper + 1;
        Some(i * width + (offset + self.lower as isize) as usize)
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.slot(i, j)
            .map(|s| self.data[s].clone())
            .unwrap_or_else(T::zero)
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        let s = self
            .slot(i, j)
            .unwrap_or_else(|| panic!("({i}, {j}) outside the band"));
        self.data[s] = value;
    }

    /// Column range of the stored band in row `i`.
    fn row_span(&self, i: usize) -> std::ops::Range<usize> {
        let lo = i.saturating_sub(self.lower);
        let hi = (i + self.upper + 1).min(self.n);
        lo..hi
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n);
        let mut out = Self::zeros(self.n, self.lower + rhs.lower, self.upper + rhs.upper);
        for i in 0..self.n {
            for k in self.row_span(i) {
                let a = self.get(i, k);
                if a.is_exact_zero() {
                    continue;
                }
                for j in rhs.row_span(k) {
                    let b = rhs.get(k, j);
                    if b.is_exact_zero() {
                        continue;
                    }
                    let s = out.slot(i, j).expect("product band");
                    out.data[s] = out.data[s].clone() + a.clone() * b;
                }
            }
        }
        out
    }

    fn combine(&self, rhs: &Self, f: impl Fn(T, T) -> T) -> Self {
        assert_eq!(self.n, rhs.n);
        let mut out = Self::zeros(self.n, self.lower.max(rhs.lower), self.upper.max(rhs.upper));
        for i in 0..self.n {
            for j in out.row_span(i) {
                let v = f(self.get(i, j), rhs.get(i, j));
                out.set(i, j, v);
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.combine(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.combine(rhs, |a, b| a - b)
    }

    pub fn scale(&self, s: &T) -> Self {
        Self {
            data: self.data.iter().map(|v| v.clone() * s.clone()).collect(),
            ..self.clone()
        }
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.n, self.upper, self.lower);
        for i in 0..self.n {
            for j in self.row_span(i) {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    /// `AB - BA`
    pub fn commutator(&self, rhs: &Self) -> Self {
        self.matmul(rhs).sub(&rhs.matmul(self))
    }

    /// `AB + BA`
    pub fn anticommutator(&self, rhs: &Self) -> Self {
        self.matmul(rhs).add(&rhs.matmul(self))
    }

    pub fn diagonal(&self) -> Vec<T> {
        (0..self.n).map(|i| self.get(i, i)).collect()
    }

    pub fn max_magnitude(&self) -> f64 {
        self.data.iter().map(Scalar::magnitude).fold(0.0, f64::max)
    }

    pub fn is_exact_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_exact_zero)
    }

    pub fn apply(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|i| {
                self.row_span(i)
                    .fold(T::zero(), |acc, j| acc + self.get(i, j) * v[j].clone())
            })
            .collect()
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> BandMatrix<U> {
        BandMatrix {
            n: self.n,
            lower: self.lower,
            upper: self.upper,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn to_dense(&self, to_f64: impl Fn(&T) -> f64) -> DMatrix<f64> {
        DMatrix::from_fn(self.n, self.n, |i, j| to_f64(&self.get(i, j)))
    }
}

/// Real symmetric tridiagonal matrix. The oscillator operators have a zero
/// diagonal; the oracle accepts any diagonal.
#[derive(Clone, Debug, PartialEq)]
pub struct TridiagonalOperator {
    pub diag: Vec<f64>,
    pub offdiag: Vec<f64>,
}

impl TridiagonalOperator {
    pub fn new(diag: Vec<f64>, offdiag: Vec<f64>) -> Self {
        assert_eq!(offdiag.len() + 1, diag.len().max(1));
        Self { diag, offdiag }
    }

    pub fn zero_diagonal(offdiag: Vec<f64>) -> Self {
        Self {
            diag: vec![0.0; offdiag.len() + 1],
            offdiag,
        }
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn apply(&self, v: &[f64]) -> Vec<f64> {
        let n = self.dim();
        (0..n)
            .map(|i| {
                let mut s = self.diag[i] * v[i];
                if i > 0 {
                    s += self.offdiag[i - 1] * v[i - 1];
                }
                if i + 1 < n {
                    s += self.offdiag[i] * v[i + 1];
                }
                s
            })
            .collect()
    }

    /// Infinity norm (max absolute row sum).
    pub fn norm_inf(&self) -> f64 {
        let n = self.dim();
        (0..n)
            .map(|i| {
                let mut s = self.diag[i].abs();
                if i > 0 {
                    s += self.offdiag[i - 1].abs();
                }
                if i + 1 < n {
                    s += self.offdiag[i].abs();
                }
                s
            })
            .fold(0.0, f64::max)
    }

    pub fn to_dense(&self) -> DMatrix<f64> {
        let n = self.dim();
        DMatrix::from_fn(n, n, |i, j| {
            if i == j {
                self.diag[i]
            } else if j == i + 1 {
                self.offdiag[i]
            } else if i == j + 1 {
                self.offdiag[j]
            } else {
                0.0
            }
        })
    }
}

/// Flips the sign of `v` so that its first significant component is
/// positive. Components below `sqrt(eps) * max|v|` count as zero.
pub fn normalize_sign(v: &mut [f64]) {
    let scale = v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let threshold = f64::EPSILON.sqrt() * scale;
    if let Some(first) = v.iter().find(|x| x.abs() > threshold) {
        if *first < 0.0 {
            v.iter_mut().for_each(|x| *x = -*x);
        }
    }
}

pub fn max_abs_diff(a: &DMatrix<f64>, b: &DMatrix<f64>) -> f64 {
    (a - b).iter().fold(0.0, |m, x| m.max(x.abs()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri(n: usize) -> BandMatrix<f64> {
        let mut m = BandMatrix::zeros(n, 1, 1);
        for i in 0..n {
            m.set(i, i, 2.0);
            if i + 1 < n {
                m.set(i, i + 1, -1.0);
                m.set(i + 1, i, -1.0 + i as f64);
            }
        }
        m
    }

    #[test]
    fn band_product_matches_dense() {
        let a = tri(6);
        let b = tri(6).transpose();
        let dense = a.to_dense(|x| *x) * b.to_dense(|x| *x);
        let banded = a.matmul(&b).to_dense(|x| *x);
        assert!(max_abs_diff(&dense, &banded) < 1e-14);
        assert_eq!(a.matmul(&b).bandwidths(), (2, 2));
    }

    #[test]
    fn commutator_of_diagonals_vanishes() {
        let d1 = BandMatrix::from_diagonal(vec![1.0, 2.0, 3.0]);
        let d2 = BandMatrix::from_diagonal(vec![-1.0, 0.5, 7.0]);
        assert!(d1.commutator(&d2).is_exact_zero());
    }

    #[test]
    fn offdiagonal_placement() {
        let up = BandMatrix::from_offdiagonal(3, 1, &[1.0, 2.0]);
        assert_eq!(up.get(0, 1), 1.0);
        assert_eq!(up.get(1, 2), 2.0);
        assert_eq!(up.get(1, 0), 0.0);
        assert_eq!(up.transpose().get(2, 1), 2.0);
    }

    #[test]
    fn sign_normalization_skips_noise() {
        let mut v = vec![-1e-20, -0.5, 0.5];
        normalize_sign(&mut v);
        assert_eq!(v[1], 0.5);
    }

    #[test]
    fn tridiagonal_apply_matches_dense() {
        let t = TridiagonalOperator::new(vec![1.0, 2.0, 3.0], vec![0.5, -0.25]);
        let v = [1.0, -1.0, 2.0];
        let dense = t.to_dense() * nalgebra::DVector::from_column_slice(&v);
        let got = t.apply(&v);
        for i in 0..3 {
            assert!((dense[i] - got[i]).abs() < 1e-15);
        }
        assert_eq!(t.norm_inf(), 3.25);
    }
}
