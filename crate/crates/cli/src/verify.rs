//! Verification suites over built-in parameter grids. Each check family
//! runs its cases in parallel and reports the worst one; report order is
//! fixed.

use std::fmt::Write as _;

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_rational::BigRational;
use rayon::prelude::*;

use finosc_core::dunkl::{
    realization_c, similarity_invariants_match, verify_defining_relations, HomogPolySpace, RealizationVariant,
    Variant,
};
use finosc_core::export::fmt_sig;
use finosc_core::field::rational;
use finosc_core::linalg::normalize_sign;
use finosc_core::orthopoly::classical::{binomial_exact, krawtchouk_symmetric};
use finosc_core::orthopoly::SeriesField;
use finosc_core::oscillator::{even_family, momentum_as_tridiagonal, odd_family, position_operator_exact};
use finosc_core::spectral::equidistant_poly;
use finosc_core::{
    admissible, analytic_u, analytic_v, boundary_limit_check, build_exact, build_representation, char_poly_exact,
    inverse_iteration_vector, momentum_operator, position_operator, scaled_limit_error, sturm_eigenvalues,
    wavefunction, AlgebraParams, DualHahnParams, Error, HalfInt, Kind, RelationReport, RepMatrices, RepScalar,
    Side, Sign,
};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Algebra,
    Spectral,
    Orthogonality,
    Limits,
    Dunkl,
    All,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Algebra => "algebra",
            Suite::Spectral => "spectral",
            Suite::Orthogonality => "orthogonality",
            Suite::Limits => "limits",
            Suite::Dunkl => "dunkl",
            Suite::All => "all",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    pub two_j_max: u32,
    pub exact: bool,
    pub tol: f64,
    pub corrupt_offdiag: Option<usize>,
}

const CTILDES: [f64; 7] = [0.0, 0.3, -0.3, 0.8, -0.8, 0.999, -0.999];

struct Case {
    label: String,
    residual: f64,
    pass: bool,
}

impl Case {
    fn within(label: String, residual: f64, tol: f64) -> Self {
        Self {
            label,
            residual,
            pass: residual <= tol,
        }
    }

    fn exact(label: String, ok: bool) -> Self {
        Self {
            label,
            residual: if ok { 0.0 } else { 1.0 },
            pass: ok,
        }
    }

    fn error(label: String, e: &Error) -> Self {
        Self {
            label: format!("{label}: {e}"),
            residual: f64::NAN,
            pass: false,
        }
    }
}

pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub bound: String,
    cases: Vec<Case>,
}

impl Check {
    pub fn pass(&self) -> bool {
        self.cases.iter().all(|c| c.pass)
    }

    fn worst(&self) -> Option<&Case> {
        self.cases
            .iter()
            .find(|c| c.residual.is_nan())
            .or_else(|| self.cases.iter().max_by(|a, b| a.residual.total_cmp(&b.residual)))
    }
}

#[derive(Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(Check::pass)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.pass()).count()
    }

    /// One line per check family with 6-digit residuals, then failing
    /// cases, then a summary.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.pass() { "PASS" } else { "FAIL" };
            let (worst, at) = match c.worst() {
                Some(w) if w.residual.is_nan() => ("error".to_string(), w.label.clone()),
                Some(w) => (fmt_sig(w.residual, 6), w.label.clone()),
                None => ("-".to_string(), String::new()),
            };
            writeln!(
                out,
                "{status}  {}/{}  cases={}  max_residual={worst}  bound={}  worst at {at}",
                c.suite,
                c.name,
                c.cases.len(),
                c.bound
            )
            .expect("write to string");
            for f in c.cases.iter().filter(|f| !f.pass).take(5) {
                let r = if f.residual.is_nan() { "error".into() } else { fmt_sig(f.residual, 6) };
                writeln!(out, "      failed: {} (residual {r})", f.label).expect("write to string");
            }
        }
        writeln!(out, "{} checks, {} failed", self.checks.len(), self.failures()).expect("write to string");
        out
    }

    fn push(&mut self, suite: Suite, name: impl Into<String>, bound: impl Into<String>, cases: Vec<Case>) {
        self.checks.push(Check {
            suite: suite.name(),
            name: name.into(),
            bound: bound.into(),
            cases,
        });
    }
}

fn collect<T: Sync>(items: &[T], f: impl Fn(&T) -> Case + Sync + Send) -> Vec<Case> {
    items.par_iter().map(f).collect()
}

fn corrupt<S: RepScalar>(rep: &mut RepMatrices<S>, k: Option<usize>) -> Result<(), Error> {
    if let Some(k) = k.filter(|&k| k < rep.offdiag_squared.len()) {
        let sq = rep.offdiag_squared[k].clone() + <S::Param as num_traits::One>::one();
        let v = S::sqrt_param(&sq)?;
        rep.offdiag_squared[k] = sq;
        rep.jplus_offdiag[k] = v.clone();
        rep.jminus_offdiag[k] = v;
    }
    Ok(())
}

fn report_case(label: String, r: Result<RelationReport, Error>, tol: f64) -> Case {
    match r {
        Ok(r) if r.exact => {
            let bad: Vec<&str> = r.failures(0.0).map(|c| c.name).collect();
            Case::exact(
                if bad.is_empty() { label } else { format!("{label} [{}]", bad.join("; ")) },
                bad.is_empty(),
            )
        }
        Ok(r) => Case::within(label, r.max_residual(), tol),
        Err(e) => Case::error(label, &e),
    }
}

fn algebra(opts: &Options, report: &mut Report) {
    let eps = [Sign::Plus, Sign::Minus];
    let mut float_cases = Vec::new();
    for two_j in 0..=opts.two_j_max {
        for c in [0.0, 0.37, -1.9, 0.999] {
            for e in eps {
                if admissible(HalfInt::new(two_j), &AlgebraParams::new(c, e)) {
                    float_cases.push((two_j, c, e));
                }
            }
        }
    }
    let build = |&(two_j, c, e): &(u32, f64, Sign)| {
        let mut rep = build_representation(HalfInt::new(two_j), &AlgebraParams::new(c, e))?;
        corrupt(&mut rep, opts.corrupt_offdiag)?;
        Ok::<_, Error>(rep)
    };
    let label = |&(two_j, c, e): &(u32, f64, Sign)| format!("two_j={two_j} c={c} eps={}", e.value());
    let bound = "1e-12*dim";
    let tol = |two_j: u32| 1e-12 * f64::from(two_j + 1);
    let cases = collect(&float_cases, |p| report_case(label(p), build(p).and_then(|r| r.relation_residuals()), tol(p.0)));
    report.push(Suite::Algebra, "relations-and-casimir-float", bound, cases);
    let cases = collect(&float_cases, |p| report_case(label(p), build(p).map(|r| r.bannai_ito_residuals()), tol(p.0)));
    report.push(Suite::Algebra, "bannai-ito-float", bound, cases);

    if opts.exact {
        let mut exact_cases = Vec::new();
        for two_j in 0..=opts.two_j_max.min(12) {
            for c in [rational(0, 1), rational(1, 3), rational(-5, 7), rational(2, 1), rational(-9, 4)] {
                for e in eps {
                    if admissible(HalfInt::new(two_j), &AlgebraParams::new(c.clone(), e)) {
                        exact_cases.push((two_j, c.clone(), e));
                    }
                }
            }
        }
        let build = |(two_j, c, e): &(u32, BigRational, Sign)| {
            let mut rep = build_exact(HalfInt::new(*two_j), &AlgebraParams::new(c.clone(), *e))?;
            corrupt(&mut rep, opts.corrupt_offdiag)?;
            Ok::<_, Error>(rep)
        };
        let label = |(two_j, c, e): &(u32, BigRational, Sign)| format!("two_j={two_j} c={c} eps={}", e.value());
        let cases = collect(&exact_cases, |p| report_case(label(p), build(p).and_then(|r| r.relation_residuals()), 0.0));
        report.push(Suite::Algebra, "relations-and-casimir-exact", "exact", cases);
        let cases = collect(&exact_cases, |p| report_case(label(p), build(p).map(|r| r.bannai_ito_residuals()), 0.0));
        report.push(Suite::Algebra, "bannai-ito-exact", "exact", cases);
    }
}

fn grid_j_ct(j_max: u32) -> Vec<(u32, f64)> {
    (1..=j_max).flat_map(|j| CTILDES.iter().map(move |&ct| (j, ct))).collect()
}

fn equidistance_defect(ev: &[f64], j: u32) -> f64 {
    ev.iter()
        .enumerate()
        .map(|(l, v)| (v - (l as f64 - f64::from(j))).abs())
        .fold(0.0, f64::max)
}

fn spectral(opts: &Options, report: &mut Report) {
    let j_max = opts.two_j_max / 2;
    let grid = grid_j_ct(j_max);
    let label = |&(j, ct): &(u32, f64)| format!("j={j} c~={ct}");
    let bound = format!("{:e}", opts.tol);

    let cases = collect(&grid, |p @ &(j, ct)| {
        match position_operator(j, ct).and_then(|t| sturm_eigenvalues(&t, 1e-13)) {
            Ok(ev) => {
                let half: Vec<f64> = ev.iter().map(|v| v / 2.0).collect();
                Case::within(label(p), equidistance_defect(&half, j), opts.tol)
            }
            Err(e) => Case::error(label(p), &e),
        }
    });
    report.push(Suite::Spectral, "position-spectrum", bound.clone(), cases);

    let cases = collect(&grid, |p @ &(j, ct)| {
        match momentum_operator(j, ct).and_then(|m| sturm_eigenvalues(&momentum_as_tridiagonal(&m), 1e-13)) {
            Ok(ev) => Case::within(label(p), equidistance_defect(&ev, j), opts.tol),
            Err(e) => Case::error(label(p), &e),
        }
    });
    report.push(Suite::Spectral, "momentum-spectrum", bound, cases);

    let cases = collect(&grid, |p @ &(j, ct)| {
        let dim = f64::from(2 * j + 1);
        match analytic_u(j, ct).and_then(|u| Ok((u.eigen_residual()?, u.orthogonality_residual()))) {
            Ok((eig, orth)) => Case {
                label: format!("{} eig={} orth={}", label(p), fmt_sig(eig, 6), fmt_sig(orth, 6)),
                residual: eig.max(orth),
                pass: eig < 1e-10 * dim && orth < 1e-11,
            },
            Err(e) => Case::error(label(p), &e),
        }
    });
    report.push(Suite::Spectral, "analytic-u", "eig 1e-10*dim, orth 1e-11", cases);

    let cases = collect(&grid, |p @ &(j, ct)| match v_residuals(j, ct) {
        Ok((eig, unit)) => Case {
            label: format!("{} eig={} unit={}", label(p), fmt_sig(eig, 6), fmt_sig(unit, 6)),
            residual: eig.max(unit),
            pass: eig < 1e-10 * f64::from(2 * j + 1) && unit < 1e-11,
        },
        Err(e) => Case::error(label(p), &e),
    });
    report.push(Suite::Spectral, "analytic-v", "eig 1e-10*dim, unit 1e-11", cases);

    let small: Vec<(u32, f64)> = grid.iter().copied().filter(|&(j, _)| j <= 20).collect();
    let cases = collect(&small, |p @ &(j, ct)| match oracle_deviation(j, ct) {
        Ok(d) => Case::within(label(p), d, 1e-8),
        Err(e) => Case::error(label(p), &e),
    });
    report.push(Suite::Spectral, "oracle-vs-analytic-vectors", "1e-8", cases);

    if opts.exact {
        let mut exact_grid = Vec::new();
        for j in 1..=j_max.min(8) {
            for ct in [rational(0, 1), rational(1, 3), rational(-1, 3), rational(9, 10), rational(-9, 10)] {
                exact_grid.push((j, ct));
            }
        }
        let cases = collect(&exact_grid, |(j, ct)| {
            let label = format!("j={j} c~={ct}");
            match position_operator_exact(*j, ct).and_then(|t| char_poly_exact(&t)) {
                Ok(p) => Case::exact(label, p == equidistant_poly(*j, 2)),
                Err(e) => Case::error(label, &e),
            }
        });
        report.push(Suite::Spectral, "char-poly-exact", "λ Π(λ² - 4q²), exact", cases);
    }
}

fn v_residuals(j: u32, ct: f64) -> Result<(f64, f64), Error> {
    let v = analytic_v(j, ct)?;
    let n = v.nrows();
    let h = momentum_operator(j, ct)?.map(|x| Complex64::new(0.0, -x / 2.0));
    let d = DMatrix::from_fn(n, n, |r, c| {
        Complex64::new(if r == c { r as f64 - f64::from(j) } else { 0.0 }, 0.0)
    });
    let eig = (&h * &v - &v * d).map(|z| z.norm()).max();
    let unit = (&v * v.adjoint() - DMatrix::<Complex64>::identity(n, n)).map(|z| z.norm()).max();
    Ok((eig, unit))
}

fn oracle_deviation(j: u32, ct: f64) -> Result<f64, Error> {
    let u = analytic_u(j, ct)?.entries;
    let mq = position_operator(j, ct)?;
    let mut worst = 0.0f64;
    for l in 0..u.ncols() {
        let lambda = 2.0 * (l as f64 - f64::from(j));
        let mut oracle = inverse_iteration_vector(&mq, lambda, 1e-13)?;
        let mut column: Vec<f64> = u.column(l).iter().copied().collect();
        normalize_sign(&mut oracle);
        normalize_sign(&mut column);
        for (a, b) in oracle.iter().zip(&column) {
            worst = worst.max((a - b).abs());
        }
    }
    Ok(worst)
}

fn orthonormality_defect(p: &DualHahnParams<f64>) -> Result<f64, Error> {
    let table = (0..=p.n)
        .map(|n| (0..=p.n).map(|x| p.normalized(n, x)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    let mut worst = 0.0f64;
    for m in 0..table.len() {
        for n in m..table.len() {
            let dot: f64 = table[m].iter().zip(&table[n]).map(|(a, b)| a * b).sum();
            worst = worst.max((dot - if m == n { 1.0 } else { 0.0 }).abs());
        }
    }
    Ok(worst)
}

fn orthogonality(opts: &Options, report: &mut Report) {
    let n_max = opts.two_j_max / 2;
    let mut grid = Vec::new();
    for n in 1..=n_max {
        for ct in CTILDES {
            grid.push((n, ct, true));
            grid.push((n, ct, false));
        }
    }
    let cases = collect(&grid, |&(n, ct, even)| {
        let label = format!("N={n} c~={ct} {}", if even { "degenerate" } else { "shifted" });
        // the families at spin j have N = j and N = j - 1
        let p = if even { even_family(n, ct) } else { odd_family(n + 1, ct) };
        match p.and_then(|p| orthonormality_defect(&p)) {
            Ok(d) => Case::within(label, d, 1e-10),
            Err(e) => Case::error(label, &e),
        }
    });
    report.push(Suite::Orthogonality, "dual-hahn-float", "1e-10", cases);

    let js: Vec<u32> = (1..=n_max.min(20)).collect();
    let cases = collect(&js, |&j| {
        let label = format!("j={j}");
        match krawtchouk_worst(j) {
            Ok(r) => Case::within(label, r, 1e-9),
            Err(e) => Case::error(label, &e),
        }
    });
    report.push(Suite::Orthogonality, "krawtchouk-reduction", "relative 1e-9", cases);

    let cases = vec![match analytic_u(1, 0.0) {
        Ok(u) => {
            let r = std::f64::consts::FRAC_1_SQRT_2;
            let expected = [0.5, r, 0.5, -r, 0.0, r, 0.5, -r, 0.5];
            let dev = (0..9).map(|i| (u.entries[(i / 3, i % 3)] - expected[i]).abs()).fold(0.0, f64::max);
            Case::within("j=1 c~=0".into(), dev, 1e-14)
        }
        Err(e) => Case::error("j=1".into(), &e),
    }];
    report.push(Suite::Orthogonality, "spin-one-u", "1e-14", cases);

    if opts.exact {
        let p = DualHahnParams::new(rational(-1, 2), rational(-1, 2), 2).expect("valid parameters");
        let w: Vec<BigRational> = (0..=2).map(|x| p.weight(x).expect("in range")).collect();
        let ok = w == [rational(1, 1), rational(4, 3), rational(1, 3)]
            && p.norm(0).expect("in range") == rational(8, 3);
        report.push(
            Suite::Orthogonality,
            "worked-example-exact",
            "exact",
            vec![Case::exact("N=2 γ=δ=-1/2".into(), ok)],
        );
        let ns: Vec<u32> = (0..=n_max.min(6)).collect();
        let cases = collect(&ns, |&n| {
            let label = format!("N={n}");
            match exact_orthogonality(n) {
                Ok(ok) => Case::exact(label, ok),
                Err(e) => Case::error(label, &e),
            }
        });
        report.push(Suite::Orthogonality, "dual-hahn-exact", "exact", cases);
    }
}

fn exact_orthogonality(n_big: u32) -> Result<bool, Error> {
    for (g, d) in [(rational(-1, 2), rational(-1, 2)), (rational(-3, 10), rational(-7, 10)), (rational(2, 5), rational(9, 10))]
    {
        let p = DualHahnParams::new(g, d, n_big)?;
        for m in 0..=n_big {
            for n in 0..=n_big {
                let mut sum = rational(0, 1);
                for x in 0..=n_big {
                    sum += p.weight(x)? * p.r(m, x)? * p.r(n, x)?;
                }
                let expected = if m == n { p.norm(n)? } else { rational(0, 1) };
                if sum != expected {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Largest relative error of the two `c̃ = 0` reduction identities at
/// spin `j`: the `3F2` side by the float series, the Krawtchouk side
/// exactly.
fn krawtchouk_worst(j: u32) -> Result<f64, Error> {
    let jf = f64::from(j);
    let rel = |a: f64, b: f64| {
        let s = a.abs().max(b.abs());
        if s == 0.0 {
            0.0
        } else {
            (a - b).abs() / s
        }
    };
    let to_f64 = |q: BigRational| num_traits::ToPrimitive::to_f64(&q).unwrap_or(f64::NAN);
    let mut worst = 0.0f64;
    for n in 0..=j {
        let sgn = if n % 2 == 0 { 1.0 } else { -1.0 };
        let nf = f64::from(n);
        let bin = to_f64(binomial_exact(2 * j, 2 * n) / binomial_exact(j, n));
        for q in 0..=j {
            let qf = f64::from(q);
            let rhs = sgn * bin * krawtchouk_symmetric(2 * n, j + q, j)?;
            let lhs = f64::series(&[-qf, qf, -nf], &[0.5, -jf], &1.0, j as usize + 1, 1e-12 * rhs.abs())?;
            worst = worst.max(rel(lhs, rhs));
        }
        if n < j {
            let bin = to_f64(binomial_exact(2 * j, 2 * n + 1) / binomial_exact(j - 1, n));
            for q in 1..=j {
                let qf = f64::from(q);
                let rhs = -sgn / (2.0 * qf) * bin * krawtchouk_symmetric(2 * n + 1, j + q, j)?;
                let lhs =
                    f64::series(&[1.0 - qf, qf + 1.0, -nf], &[1.5, 1.0 - jf], &1.0, j as usize, 1e-12 * rhs.abs())?;
                worst = worst.max(rel(lhs, rhs));
            }
        }
    }
    Ok(worst)
}

pub const LIMIT_JS: [u32; 3] = [8, 32, 128];
pub const LIMIT_BOUND: f64 = 0.05;

fn limits(opts: &Options, report: &mut Report) {
    let j_max = (opts.two_j_max / 2).min(8);
    for side in [Side::Minus, Side::Plus] {
        let js: Vec<u32> = (1..=j_max).collect();
        let cases = collect(&js, |&j| {
            let label = format!("j={j}");
            let devs: Result<Vec<f64>, Error> = [1e-4, 1e-6, 1e-8]
                .iter()
                .map(|&eps| Ok(boundary_limit_check(side, j, eps)?.max_deviation()))
                .collect();
            match devs {
                Ok(d) => Case {
                    label: format!("{label} deviations {} {} {}", fmt_sig(d[0], 6), fmt_sig(d[1], 6), fmt_sig(d[2], 6)),
                    residual: d[2],
                    pass: d[2] < 1e-3 && d[0] > d[1] && d[1] > d[2],
                },
                Err(e) => Case::error(label, &e),
            }
        });
        let name = match side {
            Side::Minus => "boundary-ctilde-minus-one",
            Side::Plus => "boundary-ctilde-plus-one",
        };
        report.push(Suite::Limits, name, "1e-3 at eps=1e-8, decreasing in eps", cases);
    }

    let concentration = match wavefunction(Kind::Position, 64, 0, 32, -0.999) {
        Ok(z) => Case {
            label: format!("j=32 c~=-0.999 |phi_64(0)|^2={}", fmt_sig(z.norm_sqr(), 6)),
            residual: 1.0 - z.norm_sqr(),
            pass: z.norm_sqr() > 0.9,
        },
        Err(e) => Case::error("j=32".into(), &e),
    };
    report.push(Suite::Limits, "boundary-concentration", "|phi|^2 > 0.9", vec![concentration]);

    for ct in [0.0, -0.8, 0.8] {
        for n in 0..=2u32 {
            let errs: Result<Vec<f64>, Error> = LIMIT_JS.iter().map(|&j| scaled_limit_error(n, j, ct)).collect();
            let case = match errs {
                Ok(e) => {
                    let decreasing = e.windows(2).all(|w| w[0] > w[1]);
                    Case {
                        label: format!(
                            "j=8,32,128 errors {} {} {}",
                            fmt_sig(e[0], 6),
                            fmt_sig(e[1], 6),
                            fmt_sig(e[2], 6)
                        ),
                        residual: e[2],
                        pass: decreasing && e[2] < LIMIT_BOUND,
                    }
                }
                Err(e) => Case::error(format!("n={n}"), &e),
            };
            let a = (1.0 - ct) / 2.0;
            report.push(
                Suite::Limits,
                format!("parabose-limit n={n} c~={ct} a={}", fmt_sig(a, 6)),
                format!("decreasing, < {LIMIT_BOUND} at j=128"),
                vec![case],
            );
        }
    }
}

fn dunkl(opts: &Options, report: &mut Report) {
    let mut v1 = Vec::new();
    for j in 1..=(opts.two_j_max / 2).min(6) {
        for ct in [rational(0, 1), rational(1, 3), rational(-2, 5), rational(9, 10)] {
            v1.push((2 * j, RealizationVariant::from_ctilde(&ct)));
        }
    }
    let mut v2 = Vec::new();
    for two_j in (1..=opts.two_j_max.min(11)).step_by(2) {
        for mu in [rational(0, 1), rational(1, 2), rational(3, 7), rational(2, 1)] {
            v2.push((two_j, RealizationVariant::new(Variant::Two, mu)));
        }
    }
    for (name, grid) in [("variant-1", v1), ("variant-2", v2)] {
        let cases = collect(&grid, |(two_j, rv)| {
            let label = format!("two_j={two_j} mu={}", rv.mu);
            match dunkl_case(*two_j, rv) {
                Ok(ok) => Case::exact(label, ok),
                Err(e) => Case::error(label, &e),
            }
        });
        report.push(Suite::Dunkl, name, "relations and invariants, exact", cases);
    }
}

fn dunkl_case(two_j: u32, rv: &RealizationVariant) -> Result<bool, Error> {
    let space = HomogPolySpace::new(two_j);
    let relations = verify_defining_relations(&space, rv)?.passes(0.0);
    let rep = build_exact(HalfInt::new(two_j), &AlgebraParams::new(realization_c(&space, rv), Sign::Plus))?;
    Ok(relations && similarity_invariants_match(&space, rv, &rep)?)
}

pub fn run(suite: Suite, opts: &Options) -> Result<Report, CliError> {
    if opts.two_j_max == 0 {
        return Err(CliError::usage("--two-j-max must be positive"));
    }
    if !(opts.tol > 0.0) {
        return Err(CliError::usage("--tol must be positive"));
    }
    let mut report = Report::default();
    let all = suite == Suite::All;
    if all || suite == Suite::Algebra {
        algebra(opts, &mut report);
    }
    if all || suite == Suite::Spectral {
        spectral(opts, &mut report);
    }
    if all || suite == Suite::Orthogonality {
        orthogonality(opts, &mut report);
    }
    if all || suite == Suite::Limits {
        limits(opts, &mut report);
    }
    if all || suite == Suite::Dunkl {
        dunkl(opts, &mut report);
    }
    Ok(report)
}
