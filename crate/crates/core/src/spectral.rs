//! Symmetric tridiagonal eigen-oracle: Sturm bisection, inverse iteration
//! and exact characteristic polynomials. Knows nothing about the analytic
//! eigenvectors it is used to check.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{normalize_sign, TridiagonalOperator};

pub const MAX_INVERSE_ITERATIONS: usize = 50;

/// Number of eigenvalues strictly below `x`.
pub fn sturm_count(t: &TridiagonalOperator, x: f64) -> usize {
    let n = t.dim();
    let max_b2 = t.offdiag.iter().fold(1.0f64, |m, b| m.max(b * b));
    // a pivot that is exactly zero is pushed to the positive side, so an
    // eigenvalue equal to x is not counted
    let pivmin = f64::MIN_POSITIVE * max_b2;
    let mut count = 0;
    let mut d = 0.0f64;
    for i in 0..n {
        d = if i == 0 {
            t.diag[0] - x
        } else {
            t.diag[i] - x - t.offdiag[i - 1] * t.offdiag[i - 1] / d
        };
        if d.abs() < pivmin {
            d = pivmin;
        }
        if d < 0.0 {
            count += 1;
        }
    }
    count
}

fn gershgorin(t: &TridiagonalOperator) -> (f64, f64) {
    let n = t.dim();
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let mut r = 0.0;
        if i > 0 {
            r += t.offdiag[i - 1].abs();
        }
        if i + 1 < n {
            r += t.offdiag[i].abs();
        }
        lo = lo.min(t.diag[i] - r);
        hi = hi.max(t.diag[i] + r);
    }
    let pad = f64::EPSILON * (lo.abs().max(hi.abs()).max(1.0)) * 4.0;
    (lo - pad, hi + pad)
}

/// All eigenvalues, ascending, each bisected to an interval of width `tol`.
pub fn sturm_eigenvalues(t: &TridiagonalOperator, tol: f64) -> Result<Vec<f64>> {
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    let n = t.dim();
    if n == 0 {
        return Ok(Vec::new());
    }
    let (lo0, hi0) = gershgorin(t);
    Ok((0..n)
        .into_par_iter()
        .map(|k| {
            // invariant: count(lo) <= k < count(hi)
            let (mut lo, mut hi) = (lo0, hi0);
            while hi - lo > tol {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                if sturm_count(t, mid) > k {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            0.5 * (lo + hi)
        })
        .collect())
}

/// LU factors of a shifted tridiagonal matrix with partial pivoting.
struct TridiagonalLu {
    dl: Vec<f64>,
    d: Vec<f64>,
    du: Vec<f64>,
    du2: Vec<f64>,
    swapped: Vec<bool>,
}

impl TridiagonalLu {
    fn factor(t: &TridiagonalOperator, shift: f64, pivmin: f64) -> Self {
        let n = t.dim();
        let mut dl = t.offdiag.clone();
        let mut du = t.offdiag.clone();
        let mut d: Vec<f64> = t.diag.iter().map(|a| a - shift).collect();
        let mut du2 = vec![0.0; n.saturating_sub(2)];
        let mut swapped = vec![false; n.saturating_sub(1)];
        for i in 0..n.saturating_sub(1) {
            if d[i].abs() >= dl[i].abs() {
                if d[i] == 0.0 {
                    d[i] = pivmin;
                }
                let fact = dl[i] / d[i];
                dl[i] = fact;
                d[i + 1] -= fact * du[i];
            } else {
                let fact = d[i] / dl[i];
                d[i] = dl[i];
                dl[i] = fact;
                let temp = du[i];
                du[i] = d[i + 1];
                d[i + 1] = temp - fact * d[i + 1];
                if i + 2 < n {
                    du2[i] = du[i + 1];
                    du[i + 1] *= -fact;
                }
                swapped[i] = true;
            }
        }
        if n > 0 && d[n - 1] == 0.0 {
            d[n - 1] = pivmin;
        }
        Self { dl, d, du, du2, swapped }
    }

    fn solve(&self, b: &mut [f64]) {
        let n = self.d.len();
        for i in 0..n.saturating_sub(1) {
            if self.swapped[i] {
                let temp = b[i];
                b[i] = b[i + 1];
                b[i + 1] = temp - self.dl[i] * b[i];
            } else {
                b[i + 1] -= self.dl[i] * b[i];
            }
        }
        for i in (0..n).rev() {
            let mut s = b[i];
            if i + 1 < n {
                s -= self.du[i] * b[i + 1];
            }
            if i + 2 < n {
                s -= self.du2[i] * b[i + 2];
            }
            b[i] = s / self.d[i];
        }
    }
}

fn unit(v: &mut [f64]) {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    v.iter_mut().for_each(|x| *x /= norm);
}

/// Unit eigenvector for an eigenvalue estimate `lambda`, with
/// `‖T v - λ v‖ < tol ‖T‖`. The first significant component is positive.
pub fn inverse_iteration_vector(t: &TridiagonalOperator, lambda: f64, tol: f64) -> Result<Vec<f64>> {
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    let n = t.dim();
    let norm = t.norm_inf().max(f64::MIN_POSITIVE);
    let lu = TridiagonalLu::factor(t, lambda, f64::EPSILON * norm);
    let mut v: Vec<f64> = (0..n).map(|i| ((i as f64 + 1.0) * 0.618).fract() + 0.5).collect();
    unit(&mut v);
    let mut residual = f64::INFINITY;
    for _ in 0..MAX_INVERSE_ITERATIONS {
        lu.solve(&mut v);
        unit(&mut v);
        let tv = t.apply(&v);
        residual = tv
            .iter()
            .zip(&v)
            .map(|(a, b)| (a - lambda * b).powi(2))
            .sum::<f64>()
            .sqrt();
        if residual < tol * norm {
            normalize_sign(&mut v);
            return Ok(v);
        }
    }
    Err(Error::NonConvergence {
        iterations: MAX_INVERSE_ITERATIONS,
        residual,
    })
}

/// Monic polynomial with exact rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoly {
    pub coefficients: Vec<BigRational>,
}

impl CharPoly {
    pub fn one() -> Self {
        Self {
            coefficients: vec![BigRational::one()],
        }
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// `Π (λ - r)`
    pub fn from_roots(roots: &[BigRational]) -> Self {
        roots.iter().fold(Self::one(), |p, r| p.times_linear(r))
    }

    /// `self · (λ - a)`
    fn times_linear(&self, a: &BigRational) -> Self {
        let mut out = vec![BigRational::zero(); self.coefficients.len() + 1];
        for (k, c) in self.coefficients.iter().enumerate() {
            out[k + 1] += c;
            out[k] -= c * a;
        }
        Self { coefficients: out }
    }

    fn minus_scaled(&self, other: &Self, s: &BigRational) -> Self {
        let mut out = self.coefficients.clone();
        for (k, c) in other.coefficients.iter().enumerate() {
            out[k] -= c * s;
        }
        Self { coefficients: out }
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coefficients
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// `p(-λ) = ±p(λ)`
    pub fn has_parity(&self) -> bool {
        let d = self.degree();
        self.coefficients
            .iter()
            .enumerate()
            .all(|(k, c)| (d - k).is_multiple_of(2) || c.is_zero())
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            let show_coeff = !a.is_one() || k == 0;
            if show_coeff {
                write!(f, "{a}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "λ")?,
                _ => write!(f, "λ^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Symmetric tridiagonal matrix given by its diagonal and the squares of
/// its off-diagonal entries, both rational.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalTridiagonal {
    pub diag: Vec<BigRational>,
    pub offdiag_squared: Vec<BigRational>,
}

impl RationalTridiagonal {
    pub fn zero_diagonal(offdiag_squared: Vec<BigRational>) -> Self {
        Self {
            diag: vec![BigRational::zero(); offdiag_squared.len() + 1],
            offdiag_squared,
        }
    }
}

/// `det(λ I - T)` from `p_{k+1} = (λ - a_k) p_k - b_{k-1}² p_{k-1}`.
pub fn char_poly_exact(t: &RationalTridiagonal) -> Result<CharPoly> {
    if t.offdiag_squared.len() + 1 != t.diag.len() {
        return Err(Error::InvalidArgument("diagonal and off-diagonal lengths disagree".into()));
    }
    if let Some(bad) = t.offdiag_squared.iter().find(|b| b.is_negative()) {
        return Err(Error::InvalidArgument(format!(
            "off-diagonal square {bad} is negative; the matrix is not real symmetric"
        )));
    }
    let mut prev = CharPoly::one();
    let mut cur = prev.times_linear(&t.diag[0]);
    for k in 1..t.diag.len() {
        let next = cur
            .times_linear(&t.diag[k])
            .minus_scaled(&prev, &t.offdiag_squared[k - 1]);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `λ Π_{q=1..j} (λ² - (step q)²)`, the monic polynomial with roots
/// `{-j..j}·step`.
pub fn equidistant_poly(j: u32, step: i64) -> CharPoly {
    let roots: Vec<BigRational> = (-i64::from(j)..=i64::from(j))
        .map(|q| BigRational::from_integer(BigInt::from(q * step)))
        .collect();
    CharPoly::from_roots(&roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rational;

    fn three(m0: f64, m1: f64) -> TridiagonalOperator {
        TridiagonalOperator::zero_diagonal(vec![m0, m1])
    }

    #[test]
    fn sturm_small() {
        let t = three(1.0, 3f64.sqrt());
        let ev = sturm_eigenvalues(&t, 1e-12).unwrap();
        for (e, x) in ev.iter().zip([-2.0, 0.0, 2.0]) {
            assert!((e - x).abs() < 1e-12, "{ev:?}");
        }
        assert_eq!(sturm_count(&t, 0.0), 1);
        assert_eq!(sturm_count(&t, 0.5), 2);
    }

    #[test]
    fn sturm_diagonal_zero() {
        let t = TridiagonalOperator::zero_diagonal(vec![0.0; 4]);
        let ev = sturm_eigenvalues(&t, 1e-12).unwrap();
        assert!(ev.iter().all(|e| e.abs() < 1e-12));
        assert!(sturm_eigenvalues(&t, 0.0).is_err());
    }

    #[test]
    fn inverse_iteration_small() {
        let r2 = 2f64.sqrt();
        let t = three(r2, r2);
        let v = inverse_iteration_vector(&t, 2.0, 1e-12).unwrap();
        for (a, b) in v.iter().zip([0.5, 1.0 / r2, 0.5]) {
            assert!((a - b).abs() < 1e-12);
        }
        let v0 = inverse_iteration_vector(&t, 0.0, 1e-12).unwrap();
        for (a, b) in v0.iter().zip([1.0 / r2, 0.0, -1.0 / r2]) {
            assert!((a - b).abs() < 1e-12, "{v0:?}");
        }
    }

    #[test]
    fn inverse_iteration_wrong_lambda_fails() {
        let r2 = 2f64.sqrt();
        let t = three(r2, r2);
        assert!(matches!(
            inverse_iteration_vector(&t, 1.0, 1e-12),
            Err(Error::NonConvergence { .. })
        ));
    }

    #[test]
    fn char_poly_examples() {
        let t = RationalTridiagonal::zero_diagonal(vec![rational(1, 1), rational(3, 1)]);
        let p = char_poly_exact(&t).unwrap();
        assert_eq!(p, equidistant_poly(1, 2));
        assert_eq!(p.to_string(), "λ^3 - 4λ");
        let t = RationalTridiagonal::zero_diagonal([4, 6, 6, 4].map(|v| rational(v, 1)).to_vec());
        let p = char_poly_exact(&t).unwrap();
        assert_eq!(p.to_string(), "λ^5 - 20λ^3 + 64λ");
        assert!(p.has_parity());
    }

    #[test]
    fn char_poly_rejects_negative_square() {
        let t = RationalTridiagonal::zero_diagonal(vec![rational(-1, 1)]);
        assert!(char_poly_exact(&t).is_err());
    }

    #[test]
    fn char_poly_with_diagonal() {
        // [[1, b], [b, 2]], b² = 1/2: λ² - 3λ + 3/2
        let t = RationalTridiagonal {
            diag: vec![rational(1, 1), rational(2, 1)],
            offdiag_squared: vec![rational(1, 2)],
        };
        let p = char_poly_exact(&t).unwrap();
        assert_eq!(p.coefficients, vec![rational(3, 2), rational(-3, 1), rational(1, 1)]);
    }
}
