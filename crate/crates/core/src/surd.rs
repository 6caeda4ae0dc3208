//! Exact arithmetic on finite sums `Σ q_i √f_i` with rational `q_i` and
//! distinct squarefree positive integers `f_i`.
//!
//! Square roots of distinct squarefree integers are linearly independent over
//! the rationals, so the canonical form makes equality and zero tests exact.
//! Matrix elements of the unitary representations are square roots of
//! rationals, and their commutators and anticommutators stay inside this ring.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct Surd {
    terms: BTreeMap<BigUint, BigRational>,
}

impl Surd {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_rational(q: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(BigUint::one(), q);
        }
        Self { terms }
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(v)))
    }

    /// `√q` for a nonnegative rational `q`.
    pub fn sqrt(q: &BigRational) -> Result<Self> {
        if q.is_negative() {
            return Err(Error::InvalidArgument(format!(
                "square root of negative rational {q}"
            )));
        }
        if q.is_zero() {
            return Ok(Self::zero());
        }
        // √(a/b) = √(ab) / b
        let a = q.numer().magnitude().clone();
        let b = q.denom().magnitude().clone();
        let (square, free) = squarefree_split(&(&a * &b));
        let coeff = BigRational::new(BigInt::from(square), BigInt::from(b));
        let mut terms = BTreeMap::new();
        terms.insert(free, coeff);
        Ok(Self { terms })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The rational value, if the number has no irrational part.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self
                .terms
                .get(&BigUint::one())
                .cloned(),
            _ => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(f, q)| q.to_f64().unwrap_or(f64::NAN) * f.to_f64().unwrap_or(f64::NAN).sqrt())
            .sum()
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(f, c)| (f.clone(), c * q)).collect(),
        }
    }

    fn accumulate(&mut self, radical: BigUint, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(radical);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }
}

/// Splits `n = s² · f` with `f` squarefree; returns `(s, f)`.
fn squarefree_split(n: &BigUint) -> (BigUint, BigUint) {
    if let Some(small) = n.to_u128() {
        let (s, f) = squarefree_split_u128(small);
        return (BigUint::from(s), BigUint::from(f));
    }
    let mut rest = n.clone();
    let mut square = BigUint::one();
    let mut free = BigUint::one();
    let mut d = BigUint::from(2u32);
    while &d * &d <= rest {
        let mut count = 0u32;
        while (&rest % &d).is_zero() {
            rest /= &d;
            count += 1;
        }
        for _ in 0..count / 2 {
            square *= &d;
        }
        if count % 2 == 1 {
            free *= &d;
        }
        d += 1u32;
    }
    free *= rest;
    (square, free)
}

fn squarefree_split_u128(mut n: u128) -> (u128, u128) {
    let mut square = 1u128;
    let mut free = 1u128;
    let mut d = 2u128;
    while d * d <= n {
        let mut count = 0;
        while n.is_multiple_of(d) {
            n /= d;
            count += 1;
        }
        for _ in 0..count / 2 {
            square *= d;
        }
        if count % 2 == 1 {
            free *= d;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    (square, free * n)
}

impl Add for Surd {
    type Output = Surd;
    fn add(mut self, rhs: Surd) -> Surd {
        for (f, q) in rhs.terms {
            self.accumulate(f, q);
        }
        self
    }
}

impl Sub for Surd {
    type Output = Surd;
    fn sub(self, rhs: Surd) -> Surd {
        self + (-rhs)
    }
}

impl Neg for Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        Surd {
            terms: self.terms.into_iter().map(|(f, q)| (f, -q)).collect(),
        }
    }
}

impl Mul for Surd {
    type Output = Surd;
    fn mul(self, rhs: Surd) -> Surd {
        let mut out = Surd::zero();
        for (f1, q1) in &self.terms {
            for (f2, q2) in &rhs.terms {
                // √f1 √f2 = g √((f1/g)(f2/g)), g = gcd(f1, f2); the product
                // of the coprime squarefree cofactors is again squarefree.
                let g = f1.gcd(f2);
                let radical = (f1 / &g) * (f2 / &g);
                let coeff = q1 * q2 * BigRational::from_integer(BigInt::from(g));
                out.accumulate(radical, coeff);
            }
        }
        out
    }
}

impl fmt::Debug for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (rad, q) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if rad.is_one() {
                write!(f, "{q}")?;
            } else {
                write!(f, "({q})√{rad}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rational;

    #[test]
    fn sqrt_canonical_form() {
        let s = Surd::sqrt(&rational(8, 3)).unwrap(); // √(8/3) = (2/3)√6
        assert_eq!(s.terms.len(), 1);
        assert_eq!(s.terms[&BigUint::from(6u32)], rational(2, 3));
        assert!((s.to_f64() - (8.0f64 / 3.0).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn sqrt_squared_is_rational() {
        for (p, q) in [(3, 1), (1, 2), (45, 7), (1, 1000), (12, 18)] {
            let r = rational(p, q);
            let s = Surd::sqrt(&r).unwrap();
            assert_eq!((s.clone() * s).as_rational(), Some(r));
        }
    }

    #[test]
    fn independent_radicals_do_not_cancel() {
        let a = Surd::sqrt(&rational(2, 1)).unwrap();
        let b = Surd::sqrt(&rational(3, 1)).unwrap();
        assert!(!(a.clone() - b.clone()).is_zero());
        assert!((a.clone() + b.clone() - a - b).is_zero());
    }

    #[test]
    fn product_of_radicals() {
        // √6 √10 = 2√15
        let p = Surd::sqrt(&rational(6, 1)).unwrap() * Surd::sqrt(&rational(10, 1)).unwrap();
        assert_eq!(p, Surd::sqrt(&rational(60, 1)).unwrap());
    }

    #[test]
    fn negative_radicand_rejected() {
        assert!(Surd::sqrt(&rational(-1, 2)).is_err());
    }

    #[test]
    fn big_radicand_split() {
        // 2^130 · 3 does not fit in u128
        let n = (BigUint::one() << 130u32) * BigUint::from(3u32);
        let (s, f) = squarefree_split(&n);
        assert_eq!(&s * &s * &f, n);
        assert_eq!(f, BigUint::from(3u32));
    }
}
