//! Laguerre and Hermite polynomials, symmetric Krawtchouk values and the
//! parabose oscillator wavefunctions.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use statrs::function::gamma::ln_gamma;

use crate::error::{check_range, Error, Result};
use crate::field::rational;

use super::hypergeometric::terminating_sum;

/// Generalized Laguerre polynomial `L_m^{(α)}(x)` by the recurrence
/// `(k+1) L_{k+1} = (2k+1+α-x) L_k - (k+α) L_{k-1}`.
pub fn laguerre(m: u32, alpha: f64, x: f64) -> f64 {
    let mut prev = 1.0;
    if m == 0 {
        return prev;
    }
    let mut cur = 1.0 + alpha - x;
    for k in 1..m {
        let k = f64::from(k);
        let next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Physicists' Hermite polynomial `H_n(x)`.
pub fn hermite(n: u32, x: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 2.0 * x;
    for k in 1..n {
        let next = 2.0 * x * cur - 2.0 * f64::from(k) * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Normalized Hermite function `H_n(x) e^{-x²/2} / (2^{n/2} √(n!) π^{1/4})`,
/// via the recurrence for the normalized functions themselves.
pub fn hermite_function(n: u32, x: f64) -> f64 {
    let mut prev = PI.powf(-0.25) * (-x * x / 2.0).exp();
    if n == 0 {
        return prev;
    }
    let mut cur = 2f64.sqrt() * x * prev;
    for k in 1..n {
        let k = f64::from(k);
        let next = (2.0 / (k + 1.0)).sqrt() * x * cur - (k / (k + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `2F1(-n, -x; -2j; 2)` in exact arithmetic.
pub fn krawtchouk_symmetric_exact(n: u32, x: u32, j: u32) -> Result<BigRational> {
    let two_j = i64::from(2 * j);
    check_range("n", i64::from(n), 0, two_j)?;
    check_range("x", i64::from(x), 0, two_j)?;
    let q = |v: i64| BigRational::from_integer(BigInt::from(v));
    terminating_sum(
        &[q(-i64::from(n)), q(-i64::from(x))],
        &[q(-two_j)],
        &rational(2, 1),
        2 * j as usize + 1,
    )
}

/// Symmetric Krawtchouk polynomial `2F1(-n, -x; -2j; 2)`. The alternating
/// terms are summed exactly and rounded once.
pub fn krawtchouk_symmetric(n: u32, x: u32, j: u32) -> Result<f64> {
    let v = krawtchouk_symmetric_exact(n, x, j)?;
    Ok(v.to_f64().unwrap_or(f64::NAN))
}

/// `binom(n, k)` as an exact rational.
pub fn binomial_exact(n: u32, k: u32) -> BigRational {
    if k > n {
        return BigRational::from_integer(BigInt::from(0));
    }
    let mut acc = BigRational::one();
    for i in 0..k {
        acc *= rational(i64::from(n - i), i64::from(i + 1));
    }
    acc
}

/// Parabose oscillator wavefunction `Ψ^{(a)}_n(x)`:
///
/// ```text
/// n = 2m:    (-1)^m √(m!/Γ(a+m))   |x|^{a-1/2} e^{-x²/2} L_m^{(a-1)}(x²)
/// n = 2m+1:  (-1)^m √(m!/Γ(a+m+1)) x |x|^{a-1/2} e^{-x²/2} L_m^{(a)}(x²)
/// ```
///
/// Even levels are infinite at `x = 0` when `a < 1/2`.
pub fn parabose(n: u32, a: f64, x: f64) -> Result<f64> {
    if !(a > 0.0) {
        return Err(Error::InvalidArgument(format!("parabose parameter a must be positive, got {a}")));
    }
    let m = n / 2;
    let sign = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
    let mf = f64::from(m);
    let gauss = (-x * x / 2.0).exp();
    if n.is_multiple_of(2) {
        let norm = (0.5 * (ln_gamma(mf + 1.0) - ln_gamma(a + mf))).exp();
        let power = abs_pow(x, a - 0.5);
        let lag = laguerre(m, a - 1.0, x * x);
        if power.is_infinite() {
            return Ok(if lag == 0.0 { 0.0 } else { sign * lag.signum() * f64::INFINITY });
        }
        Ok(sign * norm * power * gauss * lag)
    } else {
        let norm = (0.5 * (ln_gamma(mf + 1.0) - ln_gamma(a + mf + 1.0))).exp();
        Ok(sign * norm * x.signum() * abs_pow(x, a + 0.5) * gauss * laguerre(m, a, x * x))
    }
}

/// `|x|^p` with `0^0 = 1` and `0^{p<0} = ∞`.
fn abs_pow(x: f64, p: f64) -> f64 {
    let ax = x.abs();
    if ax == 0.0 {
        if p == 0.0 {
            1.0
        } else if p > 0.0 {
            0.0
        } else {
            f64::INFINITY
        }
    } else {
        ax.powf(p)
    }
}
