//! Terminating generalized hypergeometric series
//! `pFq(a_1..a_p; b_1..b_q; z) = Σ_k Π(a_i)_k / (Π(b_i)_k k!) z^k`.
//!
//! The float sum carries a running bound on its rounding error. When the
//! bound is too large for the caller (alternating terms far larger than the
//! result, which happens for dual Hahn polynomials with `N ≳ 20`), the same
//! series is re-summed exactly: every finite double is a dyadic rational, so
//! the parameters scale to integers and a Horner scheme over `BigInt`
//! produces the exact value of the series at the given doubles.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::field::Field;

/// Index of the last nonzero term, after validating termination and the
/// denominators.
fn last_term<F: Field>(num: &[F], den: &[F], max_terms: usize) -> Result<usize> {
    let k = num
        .iter()
        .filter_map(Field::nonpositive_integer)
        .min()
        .ok_or(Error::NonTerminating { terms: max_terms })? as usize;
    if k > max_terms {
        return Err(Error::NonTerminating { terms: max_terms });
    }
    // term t uses (b)_t = b (b+1) ... (b+t-1)
    for b in den {
        if let Some(z) = b.nonpositive_integer() {
            let z = z as usize;
            if z < k {
                return Err(Error::VanishingDenominator { k: z + 1 });
            }
        }
    }
    Ok(k)
}

fn term_ratio<F: Field>(num: &[F], den: &[F], z: &F, k: usize) -> F {
    let kf = F::from_int(k as i64);
    let mut r = z.clone();
    for a in num {
        r = r * (a.clone() + kf.clone());
    }
    let mut d = kf.clone() + F::one();
    for b in den {
        d = d * (b.clone() + kf.clone());
    }
    r / d
}

/// Forward term-ratio summation in the field `F`; exact for rationals.
pub fn terminating_sum<F: Field>(num: &[F], den: &[F], z: &F, max_terms: usize) -> Result<F> {
    let last = last_term(num, den, max_terms)?;
    let mut term = F::one();
    let mut sum = F::one();
    for k in 0..last {
        term = term * term_ratio(num, den, z, k);
        sum = sum + term.clone();
    }
    Ok(sum)
}

/// `3F2(a1, a2, a3; b1, b2; 1)`.
pub fn hyp3f2_unit<F: Field>(a1: F, a2: F, a3: F, b1: F, b2: F, terms: usize) -> Result<F> {
    terminating_sum(&[a1, a2, a3], &[b1, b2], &F::one(), terms)
}

/// Float sum together with an upper bound on its absolute rounding error.
pub fn terminating_sum_bounded(
    num: &[f64],
    den: &[f64],
    z: f64,
    max_terms: usize,
) -> Result<(f64, f64)> {
    let last = last_term(num, den, max_terms)?;
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    let mut abs_sum = 1.0f64;
    for k in 0..last {
        term *= term_ratio(num, den, &z, k);
        sum += term;
        abs_sum += term.abs();
    }
    // each term accumulates at most (p + q + 3) roundings per step
    let ops = (num.len() + den.len() + 3) as f64;
    let bound = ops * (last as f64 + 1.0) * f64::EPSILON * abs_sum;
    Ok((sum, bound))
}

/// Exact value of the series at the given doubles, rounded once to `f64`.
pub fn terminating_sum_exact(num: &[f64], den: &[f64], z: f64, max_terms: usize) -> Result<f64> {
    let last = last_term(num, den, max_terms)?;
    let to_q = |x: f64| {
        BigRational::from_float(x)
            .ok_or_else(|| Error::InvalidArgument(format!("non-finite series parameter {x}")))
    };
    let num_q = num.iter().map(|&x| to_q(x)).collect::<Result<Vec<_>>>()?;
    let den_q = den.iter().map(|&x| to_q(x)).collect::<Result<Vec<_>>>()?;
    let z_q = to_q(z)?;

    // common denominator of the parameters (a power of two)
    let scale = num_q
        .iter()
        .chain(&den_q)
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let scaled = |q: &BigRational| q.numer() * (&scale / q.denom());
    let a: Vec<BigInt> = num_q.iter().map(scaled).collect();
    let b: Vec<BigInt> = den_q.iter().map(scaled).collect();
    let (zn, zd) = (z_q.numer().clone(), z_q.denom().clone());

    // ratio_k = z Π(A_i + kL) L^{q-p} / ((k+1) Π(B_i + kL))
    let (extra_num, extra_den) = {
        let p = a.len() as i64;
        let q = b.len() as i64;
        let pow = |e: i64| num_traits::pow(scale.clone(), e as usize);
        if q >= p {
            (pow(q - p), BigInt::one())
        } else {
            (BigInt::one(), pow(p - q))
        }
    };

    // S_last = 1, S_k = 1 + ratio_k S_{k+1}, value = S_0
    let mut p = BigInt::one();
    let mut q = BigInt::one();
    for k in (0..last).rev() {
        let kl = &scale * BigInt::from(k);
        let mut nk = &zn * &extra_num;
        for ai in &a {
            nk *= ai + &kl;
        }
        let mut dk = &zd * &extra_den * BigInt::from(k + 1);
        for bi in &b {
            dk *= bi + &kl;
        }
        p = &q * &dk + nk * &p;
        q *= dk;
    }
    if q.is_negative() {
        p = -p;
        q = -q;
    }
    if p.is_zero() {
        return Ok(0.0);
    }
    Ratio::new_raw(p, q)
        .to_f64()
        .ok_or_else(|| Error::InvalidArgument("series value not representable".into()))
}

/// Float sum when its error bound is below `abs_tol`, exact re-summation
/// otherwise.
pub fn terminating_sum_stable(
    num: &[f64],
    den: &[f64],
    z: f64,
    max_terms: usize,
    abs_tol: f64,
) -> Result<f64> {
    let (value, bound) = terminating_sum_bounded(num, den, z, max_terms)?;
    if bound <= abs_tol {
        Ok(value)
    } else {
        terminating_sum_exact(num, den, z, max_terms)
    }
}

/// Fields the special-function code can sum series in. Floats use the
/// bounded/exact strategy with the given absolute tolerance; exact fields
/// ignore the tolerance.
pub trait SeriesField: Field {
    fn series(num: &[Self], den: &[Self], z: &Self, max_terms: usize, abs_tol: f64) -> Result<Self>;
}

impl SeriesField for f64 {
    fn series(num: &[f64], den: &[f64], z: &f64, max_terms: usize, abs_tol: f64) -> Result<f64> {
        terminating_sum_stable(num, den, *z, max_terms, abs_tol)
    }
}

impl SeriesField for BigRational {
    fn series(
        num: &[BigRational],
        den: &[BigRational],
        z: &BigRational,
        max_terms: usize,
        _abs_tol: f64,
    ) -> Result<BigRational> {
        terminating_sum(num, den, z, max_terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rational;

    #[test]
    fn zero_numerator_gives_one() {
        assert_eq!(hyp3f2_unit(0.3, 1.7, 0.0, 0.5, -2.0, 4).unwrap(), 1.0);
    }

    #[test]
    fn two_term_sums() {
        let v = hyp3f2_unit(rational(-1, 1), rational(1, 1), rational(-1, 1), rational(7, 20), rational(-3, 1), 3)
            .unwrap();
        assert_eq!(v, rational(1, 21));
        let f = hyp3f2_unit(-1.0, 1.0, -1.0, 0.35, -3.0, 3).unwrap();
        assert!((f - 1.0 / 21.0).abs() < 1e-15);
        assert_eq!(hyp3f2_unit(-1.0, 1.0, -1.0, 0.5, -1.0, 3).unwrap(), -1.0);
    }

    #[test]
    fn rejections() {
        assert_eq!(
            hyp3f2_unit(0.5, 1.5, 2.5, 1.0, 1.0, 10),
            Err(Error::NonTerminating { terms: 10 })
        );
        assert_eq!(
            hyp3f2_unit(-5.0, 1.0, 1.0, -2.0, 1.0, 10),
            Err(Error::VanishingDenominator { k: 3 })
        );
        assert!(hyp3f2_unit(-5.0, 1.0, 1.0, 1.0, 1.0, 3).is_err());
    }

    #[test]
    fn exact_resummation_matches_rationals() {
        let num = [-7.0, 7.25, -5.0];
        let den = [0.375, -12.0];
        let exact = terminating_sum(
            &num.map(|x| BigRational::from_float(x).unwrap()),
            &den.map(|x| BigRational::from_float(x).unwrap()),
            &BigRational::one(),
            20,
        )
        .unwrap();
        let got = terminating_sum_exact(&num, &den, 1.0, 20).unwrap();
        assert_eq!(got, exact.to_f64().unwrap());
    }

    #[test]
    fn exact_path_with_argument_two() {
        // 2F1(-2, -1; -2; 2) = 1 + (-2)(-1)/(-2) * 2 = -1
        let v = terminating_sum_exact(&[-2.0, -1.0], &[-2.0], 2.0, 5).unwrap();
        assert_eq!(v, -1.0);
    }

    #[test]
    fn cancellation_triggers_fallback() {
        // large alternating terms, tiny result
        let num = [-30.0, 30.0 - 0.4995, -30.0];
        let den = [0.0005, -30.0];
        let (float, bound) = terminating_sum_bounded(&num, &den, 1.0, 40).unwrap();
        let exact = terminating_sum_exact(&num, &den, 1.0, 40).unwrap();
        assert!((float - exact).abs() <= bound);
        let stable = terminating_sum_stable(&num, &den, 1.0, 40, 1e-300).unwrap();
        assert_eq!(stable, exact);
    }
}
