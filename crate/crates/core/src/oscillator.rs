//! The finite oscillator on the odd-dimensional representations
//! (`j` integer, `ε = +1`), parametrized by `c̃ = c / (2j+1)` with
//! `|c̃| < 1`.
//!
//! Position is stored as the matrix `M^q = 2q̂ = J+ + J-`, whose spectrum
//! is `{-2j, -2j+2, …, 2j}`. Eigenvector columns are indexed by
//! `l = j + q`, eigenvalues ascending.

use std::fmt::Write as _;

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::error::{check_range, Error, Result};
use crate::export::{fmt17, json_array};
use crate::field::Field;
use crate::linalg::TridiagonalOperator;
use crate::orthopoly::dual_hahn::SERIES_TOL;
use crate::orthopoly::{parabose, DualHahnParams, SeriesField};
use crate::spectral::RationalTridiagonal;

const FRAC_1_SQRT_2: f64 = std::f64::consts::FRAC_1_SQRT_2;

fn check_model(j: u32, ctilde: f64) -> Result<()> {
    if j == 0 {
        return Err(Error::InvalidArgument("the oscillator needs j >= 1".into()));
    }
    if !(ctilde.abs() < 1.0) {
        return Err(Error::Inadmissible(format!("|c~| < 1 fails: c~ = {ctilde}")));
    }
    Ok(())
}

/// `M_k²`: `(k+1-c̃)(2j-k)` for even `k`, `(k+1)(2j-k+c̃)` for odd `k`.
pub fn mk_squared<F: Field>(k: u32, j: u32, ctilde: &F) -> Result<F> {
    check_range("k", i64::from(k), 0, 2 * i64::from(j) - 1)?;
    if !(ctilde.abs() < F::one()) {
        return Err(Error::Inadmissible(format!("|c~| < 1 fails: c~ = {ctilde}")));
    }
    let k1 = F::from_int(i64::from(k) + 1);
    let top = F::from_int(2 * i64::from(j) - i64::from(k));
    Ok(if k.is_multiple_of(2) {
        (k1 - ctilde.clone()) * top
    } else {
        k1 * (top + ctilde.clone())
    })
}

pub fn mk_coeff(k: u32, j: u32, ctilde: f64) -> Result<f64> {
    Ok(mk_squared(k, j, &ctilde)?.sqrt())
}

/// `M^q = 2q̂`: zero diagonal, off-diagonal `M_0..M_{2j-1}`.
pub fn position_operator(j: u32, ctilde: f64) -> Result<TridiagonalOperator> {
    check_model(j, ctilde)?;
    let off = (0..2 * j)
        .map(|k| mk_coeff(k, j, ctilde))
        .collect::<Result<Vec<_>>>()?;
    Ok(TridiagonalOperator::zero_diagonal(off))
}

/// `2q̂` with exact squared off-diagonal entries, for rational `c̃`.
pub fn position_operator_exact(j: u32, ctilde: &BigRational) -> Result<RationalTridiagonal> {
    if j == 0 {
        return Err(Error::InvalidArgument("the oscillator needs j >= 1".into()));
    }
    let sq = (0..2 * j)
        .map(|k| mk_squared(k, j, ctilde))
        .collect::<Result<Vec<_>>>()?;
    Ok(RationalTridiagonal::zero_diagonal(sq))
}

/// `M^p = 2i p̂`: `+M_k` above the diagonal, `-M_k` below.
pub fn momentum_operator(j: u32, ctilde: f64) -> Result<DMatrix<f64>> {
    let q = position_operator(j, ctilde)?;
    let n = q.dim();
    Ok(DMatrix::from_fn(n, n, |r, c| {
        if c == r + 1 {
            q.offdiag[r]
        } else if r == c + 1 {
            -q.offdiag[c]
        } else {
            0.0
        }
    }))
}

/// The Hermitian matrix `M^p / (2i)` is unitarily similar (by a diagonal
/// of phases) to the real symmetric tridiagonal matrix with the moduli of
/// its off-diagonal entries.
pub fn momentum_as_tridiagonal(mp: &DMatrix<f64>) -> TridiagonalOperator {
    let n = mp.nrows();
    let off = (0..n.saturating_sub(1)).map(|k| mp[(k, k + 1)].abs() / 2.0).collect();
    TridiagonalOperator::zero_diagonal(off)
}

/// `n + 1/2` for `n = 0..2j`.
pub fn hamiltonian_spectrum(j: u32) -> Vec<f64> {
    (0..=2 * j).map(|n| f64::from(n) + 0.5).collect()
}

/// Dual Hahn data of even rows (`N = j`, degenerate) and odd rows
/// (`N = j - 1`).
pub fn even_family(j: u32, ctilde: f64) -> Result<DualHahnParams<f64>> {
    DualHahnParams::new((-ctilde - 1.0) / 2.0, (ctilde - 1.0) / 2.0, j)
}

pub fn odd_family(j: u32, ctilde: f64) -> Result<DualHahnParams<f64>> {
    DualHahnParams::new((1.0 - ctilde) / 2.0, (ctilde + 1.0) / 2.0, j - 1)
}

fn normalized_table(p: &DualHahnParams<f64>) -> Result<Vec<Vec<f64>>> {
    (0..=p.n)
        .into_par_iter()
        .map(|r| (0..=p.n).map(|s| p.normalized(r, s)).collect())
        .collect()
}

fn sign(r: u32) -> f64 {
    if r.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// Orthogonal eigenvector matrix of `M^q`; column `j + q` has eigenvalue
/// `2q`.
#[derive(Clone, Debug, PartialEq)]
pub struct EigvecMatrixU {
    pub j: u32,
    pub ctilde: f64,
    pub entries: DMatrix<f64>,
}

impl EigvecMatrixU {
    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    /// `max |U Uᵀ - I|`
    pub fn orthogonality_residual(&self) -> f64 {
        let u = &self.entries;
        let id = DMatrix::<f64>::identity(self.dim(), self.dim());
        let a = (u * u.transpose() - &id).abs().max();
        let b = (u.transpose() * u - id).abs().max();
        a.max(b)
    }

    /// `max |M^q U - U D^q|`
    pub fn eigen_residual(&self) -> Result<f64> {
        let mq = position_operator(self.j, self.ctilde)?.to_dense();
        let d = DMatrix::from_diagonal(&nalgebra::DVector::from_iterator(
            self.dim(),
            (0..self.dim()).map(|l| 2.0 * (l as f64 - f64::from(self.j))),
        ));
        Ok((&mq * &self.entries - &self.entries * d).abs().max())
    }
}

pub fn analytic_u(j: u32, ctilde: f64) -> Result<EigvecMatrixU> {
    check_model(j, ctilde)?;
    let even = normalized_table(&even_family(j, ctilde)?)?;
    let odd = normalized_table(&odd_family(j, ctilde)?)?;
    let ju = j as usize;
    let mut u = DMatrix::zeros(2 * ju + 1, 2 * ju + 1);
    for r in 0..=ju {
        let sg = sign(r as u32);
        u[(2 * r, ju)] = sg * even[r][0];
        for s in 1..=ju {
            let v = sg * FRAC_1_SQRT_2 * even[r][s];
            u[(2 * r, ju - s)] = v;
            u[(2 * r, ju + s)] = v;
        }
    }
    for r in 0..ju {
        let sg = sign(r as u32);
        for s in 0..ju {
            let v = sg * FRAC_1_SQRT_2 * odd[r][s];
            u[(2 * r + 1, ju - s - 1)] = -v;
            u[(2 * r + 1, ju + s + 1)] = v;
        }
    }
    Ok(EigvecMatrixU {
        j,
        ctilde,
        entries: u,
    })
}

/// `V = 𝒥 U` with `𝒥 = -i diag(i^0, i^1, …, i^{2j})`; unitary, and
/// `(M^p / 2i) V = V diag(-j..j)`.
pub fn analytic_v(j: u32, ctilde: f64) -> Result<DMatrix<Complex64>> {
    let u = analytic_u(j, ctilde)?.entries;
    Ok(DMatrix::from_fn(u.nrows(), u.ncols(), |k, l| phase(k) * u[(k, l)]))
}

/// `-i · i^k`
fn phase(k: usize) -> Complex64 {
    match k % 4 {
        0 => Complex64::new(0.0, -1.0),
        1 => Complex64::new(1.0, 0.0),
        2 => Complex64::new(0.0, 1.0),
        _ => Complex64::new(-1.0, 0.0),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Position,
    Momentum,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Position => "position",
            Kind::Momentum => "momentum",
        }
    }
}

impl std::str::FromStr for Kind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "position" => Ok(Kind::Position),
            "momentum" => Ok(Kind::Momentum),
            _ => Err(Error::InvalidArgument(format!("unknown kind {s:?}"))),
        }
    }
}

/// `w(|q|)/h_n` for the even family.
fn big_w(n: u32, q: u32, even: &DualHahnParams<f64>) -> Result<f64> {
    Ok(even.weight(q)? / even.norm(n)?)
}

/// Closed-form position (`φ_n(q)`) or momentum (`ψ_n(p)`) wavefunction at
/// level `n` and grid point `point ∈ -j..j`.
pub fn wavefunction(kind: Kind, n: u32, point: i64, j: u32, ctilde: f64) -> Result<Complex64> {
    check_model(j, ctilde)?;
    check_range("n", i64::from(n), 0, 2 * i64::from(j))?;
    check_range("point", point, -i64::from(j), i64::from(j))?;
    let even = even_family(j, ctilde)?;
    let q = point.unsigned_abs() as u32;
    let jf = f64::from(j);
    let half = n / 2;
    let nf = f64::from(half);
    let minus_n = -f64::from(half);
    if n.is_multiple_of(2) {
        let w = big_w(half, q, &even)?;
        let pre = w.sqrt() / if q == 0 { 1.0 } else { 2f64.sqrt() };
        let qf = f64::from(q);
        let f = f64::series(
            &[-qf, qf, minus_n],
            &[(1.0 - ctilde) / 2.0, -jf],
            &1.0,
            j as usize + 1,
            SERIES_TOL / pre.max(f64::MIN_POSITIVE),
        )?;
        Ok(match kind {
            Kind::Position => Complex64::new(sign(half) * pre * f, 0.0),
            Kind::Momentum => Complex64::new(0.0, -pre * f),
        })
    } else {
        if q == 0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        let w = big_w(half, q, &even)?;
        let pf = point as f64;
        let pre = ((2.0 * nf + 1.0 - ctilde) * (jf - nf)).sqrt() / ((1.0 - ctilde) * jf) * w.sqrt();
        let qf = f64::from(q);
        let f = f64::series(
            &[1.0 - qf, qf + 1.0, minus_n],
            &[(3.0 - ctilde) / 2.0, 1.0 - jf],
            &1.0,
            j as usize,
            SERIES_TOL / (pre * qf).max(f64::MIN_POSITIVE),
        )?;
        let v = pf * pre * f;
        Ok(match kind {
            Kind::Position => Complex64::new(sign(half) * v, 0.0),
            Kind::Momentum => Complex64::new(v, 0.0),
        })
    }
}

/// Wavefunction values on the full grid `-j..j` for a list of levels.
#[derive(Clone, Debug, PartialEq)]
pub struct WavefunctionTable {
    pub j: u32,
    pub ctilde: f64,
    pub kind: Kind,
    pub levels: Vec<u32>,
    pub grid: Vec<i64>,
    /// `values[row][point]`, rows in the order of `levels`.
    pub values: Vec<Vec<Complex64>>,
}

impl WavefunctionTable {
    pub fn build(kind: Kind, j: u32, ctilde: f64, levels: &[u32]) -> Result<Self> {
        check_model(j, ctilde)?;
        for &n in levels {
            check_range("level", i64::from(n), 0, 2 * i64::from(j))?;
        }
        let grid: Vec<i64> = (-i64::from(j)..=i64::from(j)).collect();
        let values = levels
            .par_iter()
            .map(|&n| {
                grid.iter()
                    .map(|&q| wavefunction(kind, n, q, j, ctilde))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            j,
            ctilde,
            kind,
            levels: levels.to_vec(),
            grid,
            values,
        })
    }

    pub fn two_j(&self) -> u32 {
        2 * self.j
    }

    /// Euclidean norm of each level row over the grid.
    pub fn row_norms(&self) -> Vec<f64> {
        self.values
            .iter()
            .map(|row| row.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt())
            .collect()
    }

    pub fn max_norm_defect(&self) -> f64 {
        self.row_norms().iter().map(|n| (n - 1.0).abs()).fold(0.0, f64::max)
    }

    /// Largest violation of `f_n(-q) = ±f_n(q)` with sign `(-1)^n`.
    pub fn max_parity_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for (row, &n) in self.values.iter().zip(&self.levels) {
            let s = sign(n);
            let len = row.len();
            for i in 0..len {
                worst = worst.max((row[len - 1 - i] - row[i] * s).norm());
            }
        }
        worst
    }

    /// Header `q,n,re,im`; rows ordered by level, then by `q`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("q,n,re,im\n");
        for (row, &n) in self.values.iter().zip(&self.levels) {
            for (z, &q) in row.iter().zip(&self.grid) {
                writeln!(out, "{q},{n},{},{}", fmt17(z.re), fmt17(z.im)).expect("write to string");
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        let levels: Vec<String> = self.levels.iter().map(u32::to_string).collect();
        let grid: Vec<String> = self.grid.iter().map(i64::to_string).collect();
        let rows: Vec<String> = self
            .values
            .iter()
            .zip(&self.levels)
            .map(|(row, n)| {
                let re: Vec<f64> = row.iter().map(|z| z.re).collect();
                let im: Vec<f64> = row.iter().map(|z| z.im).collect();
                format!("{{\"n\": {n}, \"re\": {}, \"im\": {}}}", json_array(&re), json_array(&im))
            })
            .collect();
        format!(
            "{{\"metadata\": {{\"two_j\": {}, \"ctilde\": {}, \"kind\": \"{}\", \"levels\": [{}]}}, \"grid\": [{}], \"rows\": [{}]}}",
            self.two_j(),
            fmt17(self.ctilde),
            self.kind.name(),
            levels.join(", "),
            grid.join(", "),
            rows.join(", ")
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `c̃ → -1`, i.e. `γ → -1`
    Minus,
    /// `c̃ → +1`, i.e. `δ → -1`
    Plus,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryReport {
    pub side: Side,
    pub j: u32,
    pub eps: f64,
    /// Max deviation over `q = 1..j`, indexed by `n = 0..j`.
    pub per_level: Vec<f64>,
}

impl BoundaryReport {
    pub fn max_deviation(&self) -> f64 {
        self.per_level.iter().copied().fold(0.0, f64::max)
    }
}

/// Compares the orthonormal dual Hahn functions next to a forbidden
/// parameter value with their limits:
///
/// ```text
/// γ → -1:  R̃_n(λ(q); γ, 0, j) → -R̃_{n-1}(λ(q-1); 1, 0, j-1)
/// δ → -1:  R̃_n(λ(q); 0, δ, j) →  R̃_n(λ(q-1); 0, 1, j-1)
/// ```
///
/// for `q = 1..j`. Limits with an out-of-range index are zero.
pub fn boundary_limit_check(side: Side, j: u32, eps: f64) -> Result<BoundaryReport> {
    if j == 0 {
        return Err(Error::InvalidArgument("boundary limits need j >= 1".into()));
    }
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::InvalidArgument(format!("eps must lie in (0, 1), got {eps}")));
    }
    let near = match side {
        Side::Minus => DualHahnParams::new(-1.0 + eps, 0.0, j)?,
        Side::Plus => DualHahnParams::new(0.0, -1.0 + eps, j)?,
    };
    let limit = match side {
        Side::Minus => DualHahnParams::new(1.0, 0.0, j - 1)?,
        Side::Plus => DualHahnParams::new(0.0, 1.0, j - 1)?,
    };
    let per_level = (0..=j)
        .into_par_iter()
        .map(|n| {
            let mut worst = 0.0f64;
            for q in 1..=j {
                let lhs = near.normalized(n, q)?;
                let rhs = match side {
                    Side::Minus if n == 0 => 0.0,
                    Side::Minus => -limit.normalized(n - 1, q - 1)?,
                    Side::Plus if n == j => 0.0,
                    Side::Plus => limit.normalized(n, q - 1)?,
                };
                worst = worst.max((lhs - rhs).abs());
            }
            Ok(worst)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BoundaryReport {
        side,
        j,
        eps,
        per_level,
    })
}

/// `max_q |j^{1/4} φ_n(q) - Ψ^{(a)}_n(q/√j)|` with `a = (1-c̃)/2`. Infinite
/// when the parabose function is singular at a grid point.
pub fn scaled_limit_error(n: u32, j: u32, ctilde: f64) -> Result<f64> {
    check_model(j, ctilde)?;
    let a = (1.0 - ctilde) / 2.0;
    let jf = f64::from(j);
    let scale = jf.powf(0.25);
    let errors = (-i64::from(j)..=i64::from(j))
        .into_par_iter()
        .map(|q| {
            let phi = wavefunction(Kind::Position, n, q, j, ctilde)?.re;
            let psi = parabose(n, a, q as f64 / jf.sqrt())?;
            Ok((scale * phi - psi).abs())
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(errors.into_iter().fold(0.0, f64::max))
}
