//! Dual Hahn polynomials
//! `R_n(λ(x); γ, δ, N) = 3F2(-x, x+γ+δ+1, -n; γ+1, -N; 1)` on the lattice
//! `λ(x) = x(x+γ+δ+1)`, with their weight, squared norms and the
//! orthonormal functions `R̃_n = √(w/h_n) R_n`.

use std::fmt::Write as _;

use crate::error::{check_range, Error, Result};
use crate::export::fmt17;
use crate::field::{binomial, Field};

use super::hypergeometric::SeriesField;

/// Absolute accuracy requested from float series, in units of the
/// orthonormal functions.
pub const SERIES_TOL: f64 = 64.0 * f64::EPSILON;

#[derive(Clone, Debug, PartialEq)]
pub struct DualHahnParams<F: Field = f64> {
    pub gamma: F,
    pub delta: F,
    pub n: u32,
    /// `γ + δ + 1 = 0`; then `λ(x) = x²`.
    pub degenerate: bool,
}

impl<F: Field> DualHahnParams<F> {
    /// Accepts `γ, δ > -1` or `γ, δ < -N`. In floating point a sum
    /// `γ + δ + 1` within a few ulps of zero is snapped to the degenerate
    /// case with `δ = -γ - 1`.
    pub fn new(gamma: F, delta: F, n: u32) -> Result<Self> {
        let minus_one = -F::one();
        let minus_n = F::from_int(-i64::from(n));
        let regular = gamma > minus_one && delta > minus_one;
        let alternative = gamma < minus_n && delta < minus_n;
        if !(regular || alternative) {
            return Err(Error::InvalidArgument(format!(
                "dual Hahn parameters need γ, δ > -1 or γ, δ < -N; got γ = {gamma}, δ = {delta}, N = {n}"
            )));
        }
        let s = gamma.clone() + delta.clone() + F::one();
        let snap = if F::is_exact() {
            s.is_zero()
        } else {
            let scale = gamma.abs().to_f64_lossy() + delta.abs().to_f64_lossy() + 1.0;
            s.abs().to_f64_lossy() <= 4.0 * f64::EPSILON * scale
        };
        let delta = if snap { -gamma.clone() - F::one() } else { delta };
        Ok(Self {
            gamma,
            delta,
            n,
            degenerate: snap,
        })
    }

    /// `γ + δ + 1`, exactly zero in the degenerate case.
    pub fn s(&self) -> F {
        if self.degenerate {
            F::zero()
        } else {
            self.gamma.clone() + self.delta.clone() + F::one()
        }
    }

    pub fn lambda(&self, x: u32) -> F {
        let xf = F::from_int(i64::from(x));
        if self.degenerate {
            xf.clone() * xf
        } else {
            xf.clone() * (xf + self.s())
        }
    }

    fn check_index(&self, what: &'static str, v: u32) -> Result<()> {
        check_range(what, i64::from(v), 0, i64::from(self.n))
    }
}

impl<F: SeriesField> DualHahnParams<F> {
    fn series_args(&self, n: u32, x: u32) -> ([F; 3], [F; 2]) {
        let xf = F::from_int(i64::from(x));
        (
            [-xf.clone(), xf + self.s(), F::from_int(-i64::from(n))],
            [self.gamma.clone() + F::one(), F::from_int(-i64::from(self.n))],
        )
    }

    fn r_with_tol(&self, n: u32, x: u32, abs_tol: f64) -> Result<F> {
        self.check_index("n", n)?;
        self.check_index("x", x)?;
        let (num, den) = self.series_args(n, x);
        F::series(&num, &den, &F::one(), self.n as usize + 1, abs_tol)
    }

    /// `R_n(λ(x))`. Float evaluation is accurate to `SERIES_TOL` absolute
    /// (or exact when the float sum cannot guarantee that).
    pub fn r(&self, n: u32, x: u32) -> Result<F> {
        self.r_with_tol(n, x, SERIES_TOL)
    }

    /// Orthonormal function `√(w(x)/h_n) R_n(λ(x))`.
    pub fn normalized(&self, n: u32, x: u32) -> Result<F> {
        let w = self.weight(x)?;
        let h = self.norm(n)?;
        if w.is_negative() || !h.is_positive() {
            return Err(Error::NegativeMeasure(format!(
                "w({x}) = {w}, h_{n} = {h} for γ = {}, δ = {}, N = {}",
                self.gamma, self.delta, self.n
            )));
        }
        let ratio = (w / h).to_f64_lossy();
        let scale = ratio.sqrt();
        let tol = if scale > 0.0 { SERIES_TOL / scale } else { f64::INFINITY };
        let r = self.r_with_tol(n, x, tol)?;
        Ok(F::from_f64(scale).expect("finite scale") * r)
    }
}

impl<F: Field> DualHahnParams<F> {
    /// Weight `w(x)`, evaluated as a product of ratios so that large `N`
    /// does not overflow. The degenerate case takes the removable limit,
    /// `w(0) = 1`.
    pub fn weight(&self, x: u32) -> Result<F> {
        self.check_index("x", x)?;
        let s = self.s();
        let one = F::one();
        let xf = F::from_int(i64::from(x));
        let pole = |what: &str| {
            Err(Error::Pole(format!(
                "{what} vanishes in w({x}) for γ = {}, δ = {}, N = {}",
                self.gamma, self.delta, self.n
            )))
        };
        let mut w = if x == 0 {
            one.clone()
        } else {
            let d = xf.clone() + s.clone();
            if d.is_zero() {
                return pole("x + γ + δ + 1");
            }
            (xf.clone() + xf.clone() + s.clone()) / d
        };
        for i in 0..x {
            let fi = F::from_int(i64::from(i));
            let d = self.delta.clone() + one.clone() + fi.clone();
            if d.is_zero() {
                return pole("(δ+1)_x");
            }
            w = w * (self.gamma.clone() + one.clone() + fi) / d;
        }
        let nf = i64::from(self.n);
        for i in 1..=i64::from(x) {
            w = w * F::from_int(nf - i64::from(x) + i) / F::from_int(i);
        }
        for i in 1..=nf {
            let d = xf.clone() + s.clone() + F::from_int(i);
            if d.is_zero() {
                return pole("(x+γ+δ+1)_N");
            }
            w = w * F::from_int(i) / d;
        }
        Ok(w)
    }

    /// Squared norm `h_n = 1 / (binom(γ+n, n) binom(N+δ-n, N-n))`.
    pub fn norm(&self, n: u32) -> Result<F> {
        self.check_index("n", n)?;
        let nf = F::from_int(i64::from(n));
        let b1 = binomial(&(self.gamma.clone() + nf.clone()), u64::from(n));
        let b2 = binomial(
            &(F::from_int(i64::from(self.n)) + self.delta.clone() - nf),
            u64::from(self.n - n),
        );
        let d = b1 * b2;
        if d.is_zero() {
            return Err(Error::Pole(format!("h_{n} has a vanishing binomial")));
        }
        Ok(F::one() / d)
    }

    /// `R_0..R_N` at fixed `x` from the three-term recurrence in `n`:
    /// `λ R_n = A_n R_{n+1} - (A_n + C_n) R_n + C_n R_{n-1}` with
    /// `A_n = (n+γ+1)(n-N)`, `C_n = n(n-δ-N-1)`.
    pub fn recurrence_values(&self, x: u32) -> Result<Vec<F>> {
        self.check_index("x", x)?;
        let lam = self.lambda(x);
        let big_n = F::from_int(i64::from(self.n));
        let mut out = vec![F::one()];
        for k in 0..self.n {
            let kf = F::from_int(i64::from(k));
            let a = (kf.clone() + self.gamma.clone() + F::one()) * (kf.clone() - big_n.clone());
            let c = kf.clone() * (kf - self.delta.clone() - big_n.clone() - F::one());
            if a.is_zero() {
                return Err(Error::Pole(format!("recurrence coefficient A_{k} vanishes")));
            }
            let cur = out[k as usize].clone();
            let prev = if k > 0 { out[k as usize - 1].clone() } else { F::zero() };
            let next = ((lam.clone() + a.clone() + c.clone()) * cur - c * prev) / a;
            out.push(next);
        }
        Ok(out)
    }
}

/// Values on the grid `x = 0..N`.
#[derive(Clone, Debug, PartialEq)]
pub struct GridFunction {
    pub params: DualHahnParams<f64>,
    pub values: Vec<f64>,
}

impl GridFunction {
    pub fn normalized(n: u32, params: &DualHahnParams<f64>) -> Result<Self> {
        let values = (0..=params.n)
            .map(|x| params.normalized(n, x))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            params: params.clone(),
            values,
        })
    }

    pub fn weights(params: &DualHahnParams<f64>) -> Result<Self> {
        let values = (0..=params.n)
            .map(|x| params.weight(x))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            params: params.clone(),
            values,
        })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,value\n");
        for (x, v) in self.values.iter().enumerate() {
            writeln!(out, "{x},{}", fmt17(*v)).expect("write to string");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rational;
    use num_rational::BigRational;

    fn half_degenerate(n: u32) -> DualHahnParams<BigRational> {
        DualHahnParams::new(rational(-1, 2), rational(-1, 2), n).unwrap()
    }

    #[test]
    fn degenerate_weights_exact() {
        let p = half_degenerate(2);
        assert!(p.degenerate);
        let w: Vec<_> = (0..=2).map(|x| p.weight(x).unwrap()).collect();
        assert_eq!(w, vec![rational(1, 1), rational(4, 3), rational(1, 3)]);
        assert_eq!(p.norm(0).unwrap(), rational(8, 3));
    }

    #[test]
    fn norms() {
        let p = DualHahnParams::new(rational(1, 2), rational(1, 2), 0).unwrap();
        assert_eq!(p.norm(0).unwrap(), rational(1, 1));
        assert_eq!(half_degenerate(1).norm(1).unwrap(), rational(2, 1));
    }

    #[test]
    fn r_values() {
        let p = DualHahnParams::new(rational(-13, 20), rational(-7, 20), 3).unwrap();
        assert!(p.degenerate);
        assert_eq!(p.r(1, 1).unwrap(), rational(1, 21));
        assert_eq!(p.r(0, 2).unwrap(), rational(1, 1));
        assert_eq!(p.r(3, 0).unwrap(), rational(1, 1));
        assert!(p.r(4, 0).is_err());
    }

    #[test]
    fn float_degenerate_snap() {
        let ct = 0.3f64;
        let p = DualHahnParams::new((-ct - 1.0) / 2.0, (ct - 1.0) / 2.0, 3).unwrap();
        assert!(p.degenerate);
        assert_eq!(p.s(), 0.0);
        assert!(!DualHahnParams::new(-0.5, -0.5 + 1e-9, 3).unwrap().degenerate);
    }

    #[test]
    fn normalized_small() {
        let p = DualHahnParams::new(-0.5, -0.5, 1).unwrap();
        assert!((p.normalized(0, 0).unwrap() - 0.5f64.sqrt()).abs() < 1e-15);
        assert!((p.normalized(1, 1).unwrap() + 0.5f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn rejects_bad_params() {
        assert!(DualHahnParams::new(-1.0, 0.5, 3).is_err());
        assert!(DualHahnParams::new(-4.5, -5.0, 3).is_ok());
    }

    #[test]
    fn grid_csv() {
        let p = DualHahnParams::new(-0.5, -0.5, 2).unwrap();
        let csv = GridFunction::weights(&p).unwrap().to_csv();
        assert!(csv.starts_with("x,value\n0,1\n1,1.3333333333333333"));
    }
}
