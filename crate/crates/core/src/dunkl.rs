//! Reflection-differential realizations of su(2)_P on homogeneous
//! polynomials of degree `2j` in `x, y`.
//!
//! With `R_x f(x, y) = f(-x, y)`:
//!
//! ```text
//! variant 1:  T_x = ∂x + (μ/x)(1 - R_x),  T_y = ∂y - (μ/y)(1 - R_x),
//!             J0 = (x∂x - y∂y + 2μ)/2,  P = R_x
//! variant 2:  T_x = ∂x + (μ/x)(1 - R_x),  T_y = ∂y + (μ/y)(1 + R_x),
//!             J0 = (x∂x - y∂y)/2,       P = -R_x
//! ```
//!
//! and `J+ = x T_y`, `J- = y T_x` in both. The `1/y` term leaves the space
//! of polynomials unless it annihilates `x^{2j}`, which ties variant 1 to
//! integer `j` and variant 2 to half-integer `j`.
//!
//! Vectors are coefficient sequences in the basis
//! `x^a y^b / √(a! b!)`, `a = j + m`, `b = j - m`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{ExactRep, RelationCheck, RelationReport};
use crate::error::{Error, Result};
use crate::linalg::{BandMatrix, Scalar};
use crate::surd::Surd;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HomogPolySpace {
    pub two_j: u32,
}

impl HomogPolySpace {
    pub fn new(two_j: u32) -> Self {
        Self { two_j }
    }

    pub fn dim(&self) -> usize {
        self.two_j as usize + 1
    }

    /// Exponents `(a, b)` of basis vector `i`.
    pub fn exponents(&self, i: usize) -> (u32, u32) {
        (i as u32, self.two_j - i as u32)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    One,
    Two,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RealizationVariant {
    pub variant: Variant,
    pub mu: BigRational,
}

impl RealizationVariant {
    pub fn new(variant: Variant, mu: BigRational) -> Self {
        Self { variant, mu }
    }

    /// Variant 1 with `μ = -c̃/2`.
    pub fn from_ctilde(ctilde: &BigRational) -> Self {
        Self::new(Variant::One, -ctilde / BigRational::from_integer(2.into()))
    }

    pub fn check_space(&self, space: &HomogPolySpace) -> Result<()> {
        let integer = space.two_j.is_multiple_of(2);
        match (self.variant, integer) {
            (Variant::One, true) | (Variant::Two, false) => Ok(()),
            (Variant::One, false) => Err(Error::Incompatible(format!(
                "variant 1 needs integer j, got two_j = {}",
                space.two_j
            ))),
            (Variant::Two, true) => Err(Error::Incompatible(format!(
                "variant 2 needs half-integer j, got two_j = {}",
                space.two_j
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Op {
    Tx,
    Ty,
    J0,
    Jplus,
    Jminus,
    P,
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// `1 - (-1)^a`, `1 + (-1)^a`
fn reflect_factor(a: u32, plus: bool) -> BigRational {
    let r = if a.is_multiple_of(2) { 1 } else { -1 };
    int(if plus { 1 + r } else { 1 - r })
}

/// Image of the monomial `x^a y^b` under `op`, as `(coefficient, a', b')`.
/// A nonzero multiple of `1/x` or `1/y` on a monomial without that factor
/// is a boundary violation.
pub fn monomial_action(rv: &RealizationVariant, op: Op, a: u32, b: u32) -> Result<(BigRational, u32, u32)> {
    let mu = &rv.mu;
    let sign_a = if a.is_multiple_of(2) { 1 } else { -1 };
    let tx = || int(a.into()) + mu * reflect_factor(a, false);
    let ty = || match rv.variant {
        Variant::One => int(b.into()) - mu * reflect_factor(a, false),
        Variant::Two => int(b.into()) + mu * reflect_factor(a, true),
    };
    let lowered = |coeff: BigRational, exp: u32, what: &str| -> Result<BigRational> {
        if exp == 0 && !coeff.is_zero() {
            return Err(Error::Boundary(format!(
                "{what} on x^{a} y^{b} leaves the polynomials (coefficient {coeff})"
            )));
        }
        Ok(coeff)
    };
    Ok(match op {
        Op::Tx => {
            let c = lowered(tx(), a, "T_x")?;
            (c, a.saturating_sub(1), b)
        }
        Op::Ty => {
            let c = lowered(ty(), b, "T_y")?;
            (c, a, b.saturating_sub(1))
        }
        Op::Jplus => {
            let c = lowered(ty(), b, "J+")?;
            (c, a + 1, b.saturating_sub(1))
        }
        Op::Jminus => {
            let c = lowered(tx(), a, "J-")?;
            (c, a.saturating_sub(1), b + 1)
        }
        Op::J0 => {
            let m2 = int(i64::from(a) - i64::from(b));
            let shift = match rv.variant {
                Variant::One => mu * int(2),
                Variant::Two => BigRational::zero(),
            };
            ((m2 + shift) / int(2), a, b)
        }
        Op::P => {
            let s = match rv.variant {
                Variant::One => sign_a,
                Variant::Two => -sign_a,
            };
            (int(s), a, b)
        }
    })
}

fn factorial(n: u32) -> BigRational {
    (1..=n).fold(BigRational::one(), |acc, k| acc * int(k.into()))
}

/// Applies `op` to a coefficient vector. `T_x` and `T_y` land in the
/// space of degree `2j - 1`, the others in the same space.
pub fn apply_operator(op: Op, v: &[Surd], space: &HomogPolySpace, rv: &RealizationVariant) -> Result<Vec<Surd>> {
    rv.check_space(space)?;
    if v.len() != space.dim() {
        return Err(Error::InvalidArgument(format!(
            "vector has length {}, space has dimension {}",
            v.len(),
            space.dim()
        )));
    }
    let lowers = matches!(op, Op::Tx | Op::Ty);
    if lowers && space.two_j == 0 {
        return Ok(Vec::new());
    }
    let out_dim = if lowers { space.dim() - 1 } else { space.dim() };
    let mut out = vec![Surd::zero(); out_dim];
    for (i, coeff) in v.iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let (a, b) = space.exponents(i);
        let (k, a2, b2) = monomial_action(rv, op, a, b)?;
        if k.is_zero() {
            continue;
        }
        // x^a y^b = √(a! b!) e_i, and x^{a'} y^{b'} = √(a'! b'!) e_{i'}
        let ratio = factorial(a2) * factorial(b2) / (factorial(a) * factorial(b));
        let image = Surd::sqrt(&ratio)?.scale(&k) * coeff.clone();
        let target = a2 as usize;
        out[target] = out[target].clone() + image;
    }
    Ok(out)
}

/// Matrix of `J0`, `J±` or `P` on the normalized basis.
pub fn operator_matrix(op: Op, space: &HomogPolySpace, rv: &RealizationVariant) -> Result<BandMatrix<Surd>> {
    if matches!(op, Op::Tx | Op::Ty) {
        return Err(Error::InvalidArgument("T_x and T_y change the degree".into()));
    }
    let n = space.dim();
    let mut m = BandMatrix::zeros(n, 1, 1);
    for col in 0..n {
        let mut e = vec![Surd::zero(); n];
        e[col] = Surd::one();
        for (row, v) in apply_operator(op, &e, space, rv)?.into_iter().enumerate() {
            if !v.is_zero() {
                m.set(row, col, v);
            }
        }
    }
    Ok(m)
}

/// The value of `c` the realization produces on degree `2j`:
/// `-2μ(2j+1)` for variant 1, `(2μ)² + 2μ(2j+1)` for variant 2.
pub fn realization_c(space: &HomogPolySpace, rv: &RealizationVariant) -> BigRational {
    let dim = int(i64::from(space.two_j) + 1);
    let two_mu = &rv.mu * int(2);
    match rv.variant {
        Variant::One => -(two_mu * dim),
        Variant::Two => &two_mu * &two_mu + two_mu * dim,
    }
}

/// Checks `P² = 1`, `[P, J0] = 0`, `{P, J±} = 0`, `[J0, J±] = ±J±`,
/// `[J+, J-] = 2J0 + cP` and `T_y x^{2j} = 0`, all exactly.
pub fn verify_defining_relations(space: &HomogPolySpace, rv: &RealizationVariant) -> Result<RelationReport> {
    rv.check_space(space)?;
    let j0 = operator_matrix(Op::J0, space, rv)?;
    let jp = operator_matrix(Op::Jplus, space, rv)?;
    let jm = operator_matrix(Op::Jminus, space, rv)?;
    let p = operator_matrix(Op::P, space, rv)?;
    let id = BandMatrix::<Surd>::identity(space.dim());
    let c = Surd::from_rational(realization_c(space, rv));
    let mut r = RelationReport {
        exact: true,
        ..Default::default()
    };
    r.push("P^2 = 1", &p.matmul(&p).sub(&id));
    r.push("[P, J0] = 0", &p.commutator(&j0));
    r.push("{P, J+} = 0", &p.anticommutator(&jp));
    r.push("{P, J-} = 0", &p.anticommutator(&jm));
    r.push("[J0, J+] = J+", &j0.commutator(&jp).sub(&jp));
    r.push("[J0, J-] = -J-", &j0.commutator(&jm).add(&jm));
    r.push(
        "[J+, J-] = 2 J0 + c P",
        &jp.commutator(&jm).sub(&j0.scale(&Surd::from_int(2))).sub(&p.scale(&c)),
    );
    let mut top = vec![Surd::zero(); space.dim()];
    top[space.dim() - 1] = Surd::one();
    let ty_top = apply_operator(Op::Ty, &top, space, rv)?;
    r.checks.push(RelationCheck {
        name: "T_y x^{2j} = 0",
        max_residual: ty_top.iter().map(Scalar::magnitude).fold(0.0, f64::max),
        exact_zero: ty_top.iter().all(Surd::is_zero),
    });
    Ok(r)
}

/// Data unchanged by conjugation with an invertible diagonal matrix:
/// the diagonals of `J0`, `P`, `J+ J-` and `J- J+`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugationInvariants {
    pub j0: Vec<BigRational>,
    pub p: Vec<i8>,
    pub jplus_jminus: Vec<BigRational>,
    pub jminus_jplus: Vec<BigRational>,
}

fn rational_diagonal(m: &BandMatrix<Surd>) -> Result<Vec<BigRational>> {
    m.diagonal()
        .iter()
        .map(|v| {
            v.as_rational()
                .ok_or_else(|| Error::Incompatible(format!("irrational diagonal entry {v}")))
        })
        .collect()
}

impl ConjugationInvariants {
    pub fn of_matrices(
        j0: &BandMatrix<Surd>,
        p: &BandMatrix<Surd>,
        jp: &BandMatrix<Surd>,
        jm: &BandMatrix<Surd>,
    ) -> Result<Self> {
        let p = rational_diagonal(p)?
            .iter()
            .map(|v| if v.is_one() { Ok(1) } else if (-v).is_one() { Ok(-1) } else {
                Err(Error::Incompatible(format!("parity eigenvalue {v}")))
            })
            .collect::<Result<Vec<i8>>>()?;
        Ok(Self {
            j0: rational_diagonal(j0)?,
            p,
            jplus_jminus: rational_diagonal(&jp.matmul(jm))?,
            jminus_jplus: rational_diagonal(&jm.matmul(jp))?,
        })
    }

    pub fn of_realization(space: &HomogPolySpace, rv: &RealizationVariant) -> Result<Self> {
        Self::of_matrices(
            &operator_matrix(Op::J0, space, rv)?,
            &operator_matrix(Op::P, space, rv)?,
            &operator_matrix(Op::Jplus, space, rv)?,
            &operator_matrix(Op::Jminus, space, rv)?,
        )
    }

    pub fn of_rep(rep: &ExactRep) -> Result<Self> {
        Self::of_matrices(&rep.j0(), &rep.p(), &rep.jplus(), &rep.jminus())
    }
}

/// Whether the realization and `rep` agree on all conjugation invariants.
pub fn similarity_invariants_match(space: &HomogPolySpace, rv: &RealizationVariant, rep: &ExactRep) -> Result<bool> {
    if rep.dim() != space.dim() {
        return Err(Error::InvalidArgument(format!(
            "dimension mismatch: realization {} vs representation {}",
            space.dim(),
            rep.dim()
        )));
    }
    Ok(ConjugationInvariants::of_realization(space, rv)? == ConjugationInvariants::of_rep(rep)?)
}
