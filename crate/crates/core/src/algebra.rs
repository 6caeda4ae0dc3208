//! Unitary irreducible representations of su(2)_P.
//!
//! The algebra is spanned by `J0, J+, J-` and a parity `P` with
//!
//! ```text
//! P² = 1,  [P, J0] = 0,  {P, J±} = 0,
//! [J0, J±] = ±J±,  [J+, J-] = 2 J0 + c P.
//! ```
//!
//! Representations are labelled by `j` (stored as `two_j`), the parameter
//! `c` and the sign `ε` of `P` on the lowest weight vector. The basis is
//! `|j,-j⟩ … |j,j⟩`, indexed by `i = j + m`.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{check_range, Error, Result};
use crate::export::{fmt17, json_array};
use crate::field::Field;
use crate::linalg::{BandMatrix, RepScalar, Scalar};
use crate::surd::Surd;

/// `j` as the integer `2j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfInt {
    pub two_j: u32,
}

impl HalfInt {
    pub const fn new(two_j: u32) -> Self {
        Self { two_j }
    }

    pub const fn from_int(j: u32) -> Self {
        Self { two_j: 2 * j }
    }

    pub const fn is_integer(self) -> bool {
        self.two_j.is_multiple_of(2)
    }

    pub const fn dim(self) -> usize {
        self.two_j as usize + 1
    }

    pub fn value(self) -> f64 {
        f64::from(self.two_j) / 2.0
    }
}

impl std::fmt::Display for HalfInt {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.two_j / 2)
        } else {
            write!(f, "{}/2", self.two_j)
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Sign {
    #[default]
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(v: i64) -> Result<Self> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            _ => Err(Error::InvalidArgument(format!("epsilon must be +1 or -1, got {v}"))),
        }
    }

    fn apply<F: Field>(self, x: F) -> F {
        match self {
            Sign::Plus => x,
            Sign::Minus => -x,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraParams<F: Field = f64> {
    pub c: F,
    pub epsilon: Sign,
}

impl<F: Field> AlgebraParams<F> {
    pub fn new(c: F, epsilon: Sign) -> Self {
        Self { c, epsilon }
    }

    /// `c ε`
    pub fn c_eps(&self) -> F {
        self.epsilon.apply(self.c.clone())
    }
}

/// Whether a unitary irreducible representation of dimension `2j + 1`
/// exists. Both conditions are strict.
pub fn admissible<F: Field>(j: HalfInt, params: &AlgebraParams<F>) -> bool {
    admissibility_violation(j, params).is_none()
}

fn admissibility_violation<F: Field>(j: HalfInt, params: &AlgebraParams<F>) -> Option<String> {
    let n = i64::from(j.two_j);
    if j.is_integer() {
        let lhs = F::from_int(n + 1);
        (lhs <= params.c.abs()).then(|| {
            format!("2j+1 > |c| fails for j = {j}: {} > {}", n + 1, params.c.abs())
        })
    } else {
        let rhs = -params.c_eps();
        (F::from_int(n) <= rhs).then(|| format!("2j > -c*epsilon fails for j = {j}: {n} > {rhs}"))
    }
}

fn require_admissible<F: Field>(j: HalfInt, params: &AlgebraParams<F>) -> Result<()> {
    match admissibility_violation(j, params) {
        Some(msg) => Err(Error::Inadmissible(msg)),
        None => Ok(()),
    }
}

/// Highest weight `λ` of the representation with `n + 1` states.
pub fn highest_weight<F: Field>(n: u32, c: &F, epsilon: Sign) -> F {
    let half_n = F::ratio(i64::from(n), 2);
    if n % 2 == 1 {
        return half_n;
    }
    let shift = epsilon.apply(c.clone()) / F::from_int(2 * (i64::from(n) + 1));
    half_n - shift
}

/// `A(k)` for the representation with `n + 1` states, so that
/// `J+ J- v_k = A(k-1) v_k` on the descending basis `v_k = J-^k v_0`.
pub fn coeff_a<F: Field>(k: i64, n: u32, c: &F, epsilon: Sign) -> Result<F> {
    let n = i64::from(n);
    check_range("k", k, 0, n)?;
    let ce = epsilon.apply(c.clone());
    let k1 = F::from_int(k + 1);
    let nk = F::from_int(n - k);
    Ok(if n % 2 == 0 {
        let shift = ce / F::from_int(n + 1);
        if k % 2 == 1 {
            k1 * (nk - shift)
        } else {
            (k1 + shift) * nk
        }
    } else if k % 2 == 1 {
        k1 * nk
    } else {
        k1 * nk + ce
    })
}

/// `h_0 = 1`, `h_k = A(k-1) h_{k-1}` for `k = 0..=n`.
pub fn norms_h<F: Field>(n: u32, c: &F, epsilon: Sign) -> Vec<F> {
    let mut h = Vec::with_capacity(n as usize + 1);
    h.push(F::one());
    for k in 1..=i64::from(n) {
        let a = coeff_a(k - 1, n, c, epsilon).expect("k in range");
        let prev = h.last().cloned().expect("nonempty");
        h.push(a * prev);
    }
    h
}

/// Squares of the `J+` matrix elements `⟨i+1| J+ |i⟩`, `i = 0..2j-1`.
pub fn offdiag_squares<F: Field>(j: HalfInt, params: &AlgebraParams<F>) -> Vec<F> {
    let n = i64::from(j.two_j);
    let ce = params.c_eps();
    let ct = ce.clone() / F::from_int(n + 1);
    (0..n)
        .map(|i| {
            let top = F::from_int(n - i);
            let bottom = F::from_int(i + 1);
            match (j.is_integer(), i % 2 == 0) {
                (true, true) => top * (bottom - ct.clone()),
                (true, false) => (top + ct.clone()) * bottom,
                (false, true) => top * bottom + ce.clone(),
                (false, false) => top * bottom,
            }
        })
        .collect()
}

/// Matrices of `J0, J±, P` in a representation, over a float or exact
/// scalar `S`.
#[derive(Clone, Debug, PartialEq)]
pub struct RepMatrices<S: RepScalar = f64> {
    pub two_j: u32,
    pub c: S::Param,
    pub epsilon: Sign,
    pub j0_diag: Vec<S::Param>,
    pub p_diag: Vec<i8>,
    pub jplus_offdiag: Vec<S>,
    pub jminus_offdiag: Vec<S>,
    /// `jplus_offdiag[i]²`, kept exactly in the parameter field.
    pub offdiag_squared: Vec<S::Param>,
    /// `c ε / (2j + 1)` for integer `j`.
    pub ctilde: Option<S::Param>,
}

pub type ExactRep = RepMatrices<Surd>;

pub fn build_representation(j: HalfInt, params: &AlgebraParams<f64>) -> Result<RepMatrices<f64>> {
    build_representation_in::<f64>(j, params)
}

pub fn build_exact(j: HalfInt, params: &AlgebraParams<BigRational>) -> Result<ExactRep> {
    build_representation_in::<Surd>(j, params)
}

pub fn build_representation_in<S: RepScalar>(
    j: HalfInt,
    params: &AlgebraParams<S::Param>,
) -> Result<RepMatrices<S>> {
    require_admissible(j, params)?;
    let n = i64::from(j.two_j);
    let ce = params.c_eps();
    let ctilde = j
        .is_integer()
        .then(|| ce.clone() / S::Param::from_int(n + 1));
    let j0_diag = (0..=n)
        .map(|i| {
            let m = S::Param::ratio(2 * i - n, 2);
            match &ctilde {
                Some(ct) => m - ct.clone() / S::Param::from_int(2),
                None => m,
            }
        })
        .collect();
    let eps = params.epsilon.value();
    let p_diag = (0..=n)
        .map(|i| {
            let parity = if j.is_integer() { i } else { i + 1 };
            if parity % 2 == 0 {
                eps as i8
            } else {
                -eps as i8
            }
        })
        .collect();
    let squares = offdiag_squares(j, params);
    for (i, s) in squares.iter().enumerate() {
        if !s.is_positive() {
            return Err(Error::Inadmissible(format!(
                "J+ matrix element {i} has nonpositive square {s}"
            )));
        }
    }
    let jplus_offdiag = squares
        .iter()
        .map(S::sqrt_param)
        .collect::<Result<Vec<S>>>()?;
    Ok(RepMatrices {
        two_j: j.two_j,
        c: params.c.clone(),
        epsilon: params.epsilon,
        j0_diag,
        p_diag,
        jminus_offdiag: jplus_offdiag.clone(),
        jplus_offdiag,
        offdiag_squared: squares,
        ctilde,
    })
}

/// Scalar value of `2 J0² + J+ J- + J- J+` on the representation.
pub fn casimir_value<F: Field>(j: HalfInt, params: &AlgebraParams<F>) -> Result<F> {
    require_admissible(j, params)?;
    let n = i64::from(j.two_j);
    // 2j(j+1) = n(n+2)/2
    let base = F::ratio(n * (n + 2), 2);
    Ok(if j.is_integer() {
        let ct = params.c_eps() / F::from_int(n + 1);
        base + ct.clone() * ct / F::from_int(2)
    } else {
        base + params.c_eps()
    })
}

/// One checked identity: the max-magnitude entry of `lhs - rhs`.
#[derive(Clone, Debug, PartialEq)]
pub struct RelationCheck {
    pub name: &'static str,
    pub max_residual: f64,
    pub exact_zero: bool,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct RelationReport {
    pub exact: bool,
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub(crate) fn push<S: Scalar>(&mut self, name: &'static str, residual: &BandMatrix<S>) {
        self.checks.push(RelationCheck {
            name,
            max_residual: residual.max_magnitude(),
            exact_zero: residual.is_exact_zero(),
        });
    }

    /// In exact mode every residual must vanish identically; otherwise each
    /// must stay within `tol`.
    pub fn passes(&self, tol: f64) -> bool {
        self.failures(tol).next().is_none()
    }

    pub fn failures(&self, tol: f64) -> impl Iterator<Item = &RelationCheck> {
        let exact = self.exact;
        self.checks.iter().filter(move |c| {
            if exact {
                !c.exact_zero
            } else {
                !(c.max_residual <= tol)
            }
        })
    }

    pub fn max_residual(&self) -> f64 {
        self.checks.iter().map(|c| c.max_residual).fold(0.0, f64::max)
    }
}

impl<S: RepScalar> RepMatrices<S> {
    pub fn dim(&self) -> usize {
        self.two_j as usize + 1
    }

    pub fn half_int(&self) -> HalfInt {
        HalfInt::new(self.two_j)
    }

    pub fn params(&self) -> AlgebraParams<S::Param> {
        AlgebraParams::new(self.c.clone(), self.epsilon)
    }

    pub fn j0(&self) -> BandMatrix<S> {
        BandMatrix::from_diagonal(self.j0_diag.iter().map(S::from_param).collect())
    }

    pub fn p(&self) -> BandMatrix<S> {
        BandMatrix::from_diagonal(self.p_diag.iter().map(|&s| S::from_int(s.into())).collect())
    }

    /// `J+ |i⟩ = jplus_offdiag[i] |i+1⟩`
    pub fn jplus(&self) -> BandMatrix<S> {
        BandMatrix::from_offdiagonal(self.dim(), -1, &self.jplus_offdiag)
    }

    pub fn jminus(&self) -> BandMatrix<S> {
        BandMatrix::from_offdiagonal(self.dim(), 1, &self.jminus_offdiag)
    }

    fn scalar_identity(&self, value: &S::Param) -> BandMatrix<S> {
        BandMatrix::identity(self.dim()).scale(&S::from_param(value))
    }

    pub fn casimir_matrix(&self) -> BandMatrix<S> {
        let j0 = self.j0();
        let (jp, jm) = (self.jplus(), self.jminus());
        j0.matmul(&j0)
            .scale(&S::from_int(2))
            .add(&jp.matmul(&jm))
            .add(&jm.matmul(&jp))
    }

    /// Residuals of the defining relations, the star relation and the
    /// Casimir scalarity.
    pub fn relation_residuals(&self) -> Result<RelationReport> {
        let (j0, jp, jm, p) = (self.j0(), self.jplus(), self.jminus(), self.p());
        let id = BandMatrix::<S>::identity(self.dim());
        let two = S::from_int(2);
        let c = S::from_param(&self.c);
        let mut r = RelationReport {
            exact: S::EXACT,
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
            &jp.commutator(&jm).sub(&j0.scale(&two)).sub(&p.scale(&c)),
        );
        r.push("J+^T = J-", &jp.transpose().sub(&jm));
        let omega = casimir_value(self.half_int(), &self.params())?;
        r.push(
            "Casimir is scalar",
            &self.casimir_matrix().sub(&self.scalar_identity(&omega)),
        );
        Ok(r)
    }

    /// `K1 = (J+ + J-)/2`, `K2 = -(J+ - J-) P / 2`, `K3 = J0 P`.
    pub fn bannai_ito_generators(&self) -> [BandMatrix<S>; 3] {
        let half = S::from_param(&S::Param::ratio(1, 2));
        let (jp, jm, p) = (self.jplus(), self.jminus(), self.p());
        let k1 = jp.add(&jm).scale(&half);
        let k2 = jp.sub(&jm).matmul(&p).scale(&(-half));
        let k3 = self.j0().matmul(&p);
        [k1, k2, k3]
    }

    /// `{K1,K2} = K3 + c/2`, `{K2,K3} = K1`, `{K3,K1} = K2`, `K_i` symmetric.
    pub fn bannai_ito_residuals(&self) -> RelationReport {
        let [k1, k2, k3] = self.bannai_ito_generators();
        let half_c = self.c.clone() / S::Param::from_int(2);
        let mut r = RelationReport {
            exact: S::EXACT,
            ..Default::default()
        };
        r.push(
            "{K1, K2} = K3 + c/2",
            &k1.anticommutator(&k2).sub(&k3).sub(&self.scalar_identity(&half_c)),
        );
        r.push("{K2, K3} = K1", &k2.anticommutator(&k3).sub(&k1));
        r.push("{K3, K1} = K2", &k3.anticommutator(&k1).sub(&k2));
        for (name, k) in [("K1^T = K1", &k1), ("K2^T = K2", &k2), ("K3^T = K3", &k3)] {
            r.push(name, &k.transpose().sub(k));
        }
        r
    }

    /// Diagonals of `J+ J-` and `J- J+`; unchanged by diagonal rescaling of
    /// the basis.
    pub fn ladder_products(&self) -> (Vec<S::Param>, Vec<S::Param>) {
        let d = self.dim();
        let sq = &self.offdiag_squared;
        let pm = (0..d)
            .map(|i| if i > 0 { sq[i - 1].clone() } else { S::Param::zero() })
            .collect();
        let mp = (0..d)
            .map(|i| if i + 1 < d { sq[i].clone() } else { S::Param::zero() })
            .collect();
        (pm, mp)
    }

    /// `{"two_j", "c", "epsilon", "j0_diag", "p_diag", "j_offdiag"}` with
    /// 17 significant digits.
    pub fn to_json(&self) -> String {
        let j0: Vec<f64> = self.j0_diag.iter().map(Field::to_f64_lossy).collect();
        let off: Vec<f64> = self.jplus_offdiag.iter().map(Scalar::to_f64).collect();
        let p: Vec<String> = self.p_diag.iter().map(i8::to_string).collect();
        format!(
            "{{\"two_j\": {}, \"c\": {}, \"epsilon\": {}, \"j0_diag\": {}, \"p_diag\": [{}], \"j_offdiag\": {}}}",
            self.two_j,
            fmt17(self.c.to_f64_lossy()),
            self.epsilon.value(),
            json_array(&j0),
            p.join(", "),
            json_array(&off),
        )
    }
}

/// Checks that, with `c ε = (2α+1)² + (2α+1)(2j+1)`, the squared `J±`
/// matrix elements of a half-integer representation factor as
/// `(j-m+2α+1)(j+m+2α+2)` and `(j-m+2α+2)(j+m+2α+1)`.
pub fn verify_alpha_factorization<S: RepScalar>(two_j: u32, alpha: &S::Param) -> Result<bool> {
    if two_j.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "half-integer j required, got two_j = {two_j}"
        )));
    }
    type P<S> = <S as RepScalar>::Param;
    let a1 = alpha.clone() * P::<S>::from_int(2) + P::<S>::one();
    let n = i64::from(two_j);
    let ce = a1.clone() * a1.clone() + a1.clone() * P::<S>::from_int(n + 1);
    let rep = build_representation_in::<S>(HalfInt::new(two_j), &AlgebraParams::new(ce, Sign::Plus))?;
    let int = |v: i64| P::<S>::from_int(v);
    let rel = 1e-12;
    for i in 0..n {
        let got = rep.jplus_offdiag[i as usize]
            .square_to_param()
            .ok_or_else(|| Error::InvalidArgument("irrational square".into()))?;
        let expected = if i % 2 == 0 {
            // J+ |j,m⟩ with j+m = i
            (int(n - i) + a1.clone()) * (int(i + 1) + a1.clone())
        } else {
            int((n - i) * (i + 1))
        };
        if !got.close(&expected, rel) {
            return Ok(false);
        }
        let got_minus = rep.jminus_offdiag[i as usize]
            .square_to_param()
            .ok_or_else(|| Error::InvalidArgument("irrational square".into()))?;
        // J- |j,m⟩ with j+m = i+1
        let i1 = i + 1;
        let expected_minus = if i1 % 2 == 1 {
            (int(n - i1 + 1) + a1.clone()) * (int(i1) + a1.clone())
        } else {
            int(i1 * (n - i1 + 1))
        };
        if !got_minus.close(&expected_minus, rel) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rational;

    #[test]
    fn admissibility_examples() {
        let p = |c: f64, e| AlgebraParams::new(c, e);
        assert!(admissible(HalfInt::from_int(3), &p(5.0, Sign::Plus)));
        assert!(!admissible(HalfInt::from_int(2), &p(5.0, Sign::Plus)));
        assert!(!admissible(HalfInt::new(1), &p(2.0, Sign::Minus)));
        assert!(admissible(HalfInt::new(1), &p(2.0, Sign::Plus)));
    }

    #[test]
    fn inadmissible_error_names_inequality() {
        let err = build_representation(HalfInt::from_int(2), &AlgebraParams::new(5.0, Sign::Plus))
            .unwrap_err();
        assert!(err.to_string().contains("2j+1 > |c|"), "{err}");
    }

    #[test]
    fn highest_weight_values() {
        assert_eq!(highest_weight(3, &0.7, Sign::Plus), 1.5);
        assert_eq!(highest_weight(2, &rational(3, 5), Sign::Plus), rational(9, 10));
        assert_eq!(highest_weight(0, &rational(3, 5), Sign::Minus), rational(3, 10));
    }

    #[test]
    fn coeff_a_values() {
        assert_eq!(coeff_a(0, 2, &0.0, Sign::Plus).unwrap(), 2.0);
        assert_eq!(coeff_a(0, 2, &rational(3, 5), Sign::Plus).unwrap(), rational(12, 5));
        assert_eq!(coeff_a(4, 4, &rational(7, 3), Sign::Minus).unwrap(), rational(0, 1));
        assert!(coeff_a(3, 2, &0.0, Sign::Plus).is_err());
        assert!(coeff_a(-1, 2, &0.0, Sign::Plus).is_err());
    }

    #[test]
    fn spin_one_su2() {
        let rep = build_representation(HalfInt::from_int(1), &AlgebraParams::new(0.0, Sign::Plus)).unwrap();
        let r2 = 2f64.sqrt();
        assert_eq!(rep.jplus_offdiag, vec![r2, r2]);
    }

    #[test]
    fn spin_one_deformed_exact() {
        let rep = build_exact(HalfInt::from_int(1), &AlgebraParams::new(rational(3, 2), Sign::Plus)).unwrap();
        assert_eq!(rep.jplus_offdiag[0], Surd::one());
        assert_eq!(rep.jplus_offdiag[1], Surd::sqrt(&rational(3, 1)).unwrap());
        assert_eq!(rep.j0_diag, vec![rational(-5, 4), rational(-1, 4), rational(3, 4)]);
        assert_eq!(rep.p_diag, vec![1, -1, 1]);
        assert!(rep.relation_residuals().unwrap().passes(0.0));
    }

    #[test]
    fn half_spin_with_c() {
        let rep = build_representation(HalfInt::new(1), &AlgebraParams::new(2.0, Sign::Plus)).unwrap();
        assert!((rep.jplus_offdiag[0] - 3f64.sqrt()).abs() < 1e-15);
        assert_eq!(rep.p_diag, vec![-1, 1]);
    }

    #[test]
    fn casimir_values() {
        let v = casimir_value(HalfInt::from_int(1), &AlgebraParams::new(rational(3, 2), Sign::Plus)).unwrap();
        assert_eq!(v, rational(33, 8));
        assert_eq!(casimir_value(HalfInt::from_int(1), &AlgebraParams::new(0.0, Sign::Plus)).unwrap(), 4.0);
        assert_eq!(casimir_value(HalfInt::new(1), &AlgebraParams::new(2.0, Sign::Plus)).unwrap(), 3.5);
    }

    #[test]
    fn bannai_ito_anticommutator_shift() {
        let rep = build_exact(HalfInt::from_int(1), &AlgebraParams::new(rational(3, 2), Sign::Plus)).unwrap();
        let [k1, k2, k3] = rep.bannai_ito_generators();
        let lhs = k1.anticommutator(&k2).sub(&k3);
        let expected = BandMatrix::identity(3).scale(&Surd::from_rational(rational(3, 4)));
        assert!(lhs.sub(&expected).is_exact_zero());
        assert!(rep.bannai_ito_residuals().passes(0.0));
    }

    #[test]
    fn alpha_factorization_examples() {
        assert!(verify_alpha_factorization::<Surd>(1, &rational(0, 1)).unwrap());
        assert!(verify_alpha_factorization::<Surd>(3, &rational(1, 4)).unwrap());
        assert!(verify_alpha_factorization::<f64>(3, &0.25).unwrap());
        // α = -1: cε = 1 - 2 = -1, and 2j = 1 > 1 fails
        assert!(matches!(verify_alpha_factorization::<Surd>(1, &rational(-1, 1)), Err(Error::Inadmissible(_))));
        assert!(verify_alpha_factorization::<f64>(2, &0.0).is_err());
    }

    #[test]
    fn json_key_order() {
        let rep = build_representation(HalfInt::from_int(1), &AlgebraParams::new(0.0, Sign::Plus)).unwrap();
        let s = rep.to_json();
        let keys = ["two_j", "c", "epsilon", "j0_diag", "p_diag", "j_offdiag"];
        let pos: Vec<usize> = keys.iter().map(|k| s.find(&format!("\"{k}\"")).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
        assert!(s.contains("\"p_diag\": [1, -1, 1]"));
    }
}
