//! Ordered fields the formulas are evaluated over: binary64 for production
//! work and arbitrary-precision rationals for exact verification.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

pub trait Field:
    Clone + Debug + Display + PartialOrd + Num + Signed + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    fn from_int(v: i64) -> Self;

    /// `Some(k)` iff the value is exactly the integer `-k`, `k >= 0`.
    fn nonpositive_integer(&self) -> Option<u64>;

    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    fn ratio(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }

    /// Equality up to `rel` relative to `max(1, |a|, |b|)`; exact fields
    /// ignore `rel`.
    fn close(&self, other: &Self, rel: f64) -> bool;

    /// Whether arithmetic in this field is exact.
    fn is_exact() -> bool;
}

impl Field for f64 {
    fn from_int(v: i64) -> Self {
        v as f64
    }

    fn nonpositive_integer(&self) -> Option<u64> {
        if *self <= 0.0 && self.fract() == 0.0 && self.is_finite() {
            Some((-*self) as u64)
        } else {
            None
        }
    }

    fn to_f64_lossy(&self) -> f64 {
        *self
    }

    fn close(&self, other: &Self, rel: f64) -> bool {
        (self - other).abs() <= rel * self.abs().max(other.abs()).max(1.0)
    }

    fn is_exact() -> bool {
        false
    }
}

impl Field for BigRational {
    fn from_int(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn nonpositive_integer(&self) -> Option<u64> {
        if self.is_integer() && !self.is_positive() {
            (-self.to_integer()).to_u64()
        } else {
            None
        }
    }

    fn close(&self, other: &Self, _rel: f64) -> bool {
        self == other
    }

    fn is_exact() -> bool {
        true
    }
}

/// Pochhammer symbol `(a)_k = a (a+1) ... (a+k-1)`.
pub fn pochhammer<F: Field>(a: &F, k: u64) -> F {
    let mut acc = F::one();
    let mut term = a.clone();
    for _ in 0..k {
        acc = acc * term.clone();
        term = term + F::one();
    }
    acc
}

/// Generalized binomial coefficient `binom(a, k)` for integer `k >= 0`.
pub fn binomial<F: Field>(a: &F, k: u64) -> F {
    let mut acc = F::one();
    for i in 0..k {
        acc = acc * (a.clone() - F::from_int(i as i64)) / F::from_int(i as i64 + 1);
    }
    acc
}

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact rational value of a finite double.
pub fn exact_rational(x: f64) -> Option<BigRational> {
    BigRational::from_float(x)
}

pub fn sign_power<F: Field>(k: i64) -> F {
    if k.rem_euclid(2) == 0 {
        F::one()
    } else {
        -F::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn nonpositive_integer_detection() {
        assert_eq!((-3.0f64).nonpositive_integer(), Some(3));
        assert_eq!(0.0f64.nonpositive_integer(), Some(0));
        assert_eq!((-2.5f64).nonpositive_integer(), None);
        assert_eq!(1.0f64.nonpositive_integer(), None);
        assert_eq!(rational(-4, 1).nonpositive_integer(), Some(4));
        assert_eq!(rational(-4, 3).nonpositive_integer(), None);
    }

    #[test]
    fn binomial_half_integer() {
        // binom(3/2, 2) = 3/8
        assert_eq!(binomial(&rational(3, 2), 2), rational(3, 8));
        assert_eq!(binomial(&rational(-1, 2), 0), BigRational::one());
        assert!((binomial(&1.5f64, 2) - 0.375).abs() < 1e-15);
    }

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer(&rational(1, 2), 3), rational(15, 8));
        assert_eq!(pochhammer(&3.0f64, 0), 1.0);
        assert_eq!(pochhammer(&-2.0f64, 3), 0.0);
    }
}
