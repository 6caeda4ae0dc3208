use finosc_core::linalg::normalize_sign;
use finosc_core::oscillator::{odd_family, wavefunction};
use finosc_core::{
    analytic_u, analytic_v, boundary_limit_check, hamiltonian_spectrum, inverse_iteration_vector, momentum_operator,
    position_operator, scaled_limit_error, Error, Kind, Side, WavefunctionTable,
};
use nalgebra::DMatrix;
use num_complex::Complex64;
use proptest::prelude::*;

const CTILDES: [f64; 7] = [0.0, 0.3, -0.3, 0.8, -0.8, 0.999, -0.999];

fn momentum_residual(j: u32, ct: f64) -> (f64, f64) {
    let v = analytic_v(j, ct).unwrap();
    let n = v.nrows();
    let mp = momentum_operator(j, ct).unwrap().map(|x| Complex64::new(x, 0.0));
    let two_i = Complex64::new(0.0, 2.0);
    let h = mp / two_i;
    let d = DMatrix::from_fn(n, n, |r, c| {
        if r == c {
            Complex64::new(r as f64 - f64::from(j), 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let eig = (&h * &v - &v * d).map(|z| z.norm()).max();
    let unit = (&v * v.adjoint() - DMatrix::<Complex64>::identity(n, n))
        .map(|z| z.norm())
        .max();
    (eig, unit)
}

#[test]
fn analytic_diagonalization() {
    for j in 1..=40u32 {
        let dim = f64::from(2 * j + 1);
        for ct in CTILDES {
            let u = analytic_u(j, ct).unwrap();
            let eig = u.eigen_residual().unwrap();
            assert!(eig < 1e-10 * dim, "U j={j} c~={ct}: {eig}");
            let orth = u.orthogonality_residual();
            assert!(orth < 1e-11, "UU^T j={j} c~={ct}: {orth}");
            let (veig, vunit) = momentum_residual(j, ct);
            assert!(veig < 1e-10 * dim, "V j={j} c~={ct}: {veig}");
            assert!(vunit < 1e-11, "VV^† j={j} c~={ct}: {vunit}");
        }
    }
}

#[test]
fn oracle_vectors_match_analytic_columns() {
    for j in 1..=20u32 {
        for ct in CTILDES {
            let u = analytic_u(j, ct).unwrap().entries;
            let mq = position_operator(j, ct).unwrap();
            let n = u.nrows();
            for l in 0..n {
                let lambda = 2.0 * (l as f64 - f64::from(j));
                let mut oracle = inverse_iteration_vector(&mq, lambda, 1e-13).unwrap();
                let mut column: Vec<f64> = u.column(l).iter().copied().collect();
                normalize_sign(&mut oracle);
                normalize_sign(&mut column);
                let dev = oracle.iter().zip(&column).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
                assert!(dev < 1e-8, "j={j} c~={ct} l={l}: {dev}");
            }
        }
    }
}

#[test]
fn spin_one_krawtchouk_matrix() {
    // c̃ = 0, j = 1: the su(2) Krawtchouk eigenvectors
    let u = analytic_u(1, 0.0).unwrap().entries;
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let expected = DMatrix::from_row_slice(3, 3, &[0.5, r, 0.5, -r, 0.0, r, 0.5, -r, 0.5]);
    assert!((u - expected).abs().max() < 1e-14);
}

#[test]
fn wavefunctions_are_matrix_entries() {
    for j in [1u32, 3, 8, 15] {
        for ct in CTILDES {
            let u = analytic_u(j, ct).unwrap().entries;
            let v = analytic_v(j, ct).unwrap();
            let ju = j as usize;
            for n in 0..=2 * j {
                for q in -i64::from(j)..=i64::from(j) {
                    let col = (ju as i64 + q) as usize;
                    let phi = wavefunction(Kind::Position, n, q, j, ct).unwrap();
                    let psi = wavefunction(Kind::Momentum, n, q, j, ct).unwrap();
                    assert!((phi.re - u[(n as usize, col)]).abs() < 1e-12 && phi.im == 0.0);
                    assert!((psi - v[(n as usize, col)]).norm() < 1e-12, "j={j} n={n} q={q}");
                }
            }
        }
    }
}

#[test]
fn table_invariants() {
    for kind in [Kind::Position, Kind::Momentum] {
        for ct in CTILDES {
            let levels: Vec<u32> = (0..=24).collect();
            let t = WavefunctionTable::build(kind, 12, ct, &levels).unwrap();
            assert!(t.max_norm_defect() < 1e-12, "{kind:?} c~={ct}");
            assert!(t.max_parity_defect() < 1e-12, "{kind:?} c~={ct}");
        }
    }
    assert!(matches!(
        WavefunctionTable::build(Kind::Position, 3, 0.0, &[7]),
        Err(Error::OutOfRange { .. })
    ));
    assert!(matches!(WavefunctionTable::build(Kind::Position, 3, 1.0, &[0]), Err(Error::Inadmissible(_))));
}

#[test]
fn output_is_deterministic() {
    let a = WavefunctionTable::build(Kind::Momentum, 9, -0.3, &[0, 1, 5]).unwrap();
    let b = WavefunctionTable::build(Kind::Momentum, 9, -0.3, &[0, 1, 5]).unwrap();
    assert_eq!(a.to_csv(), b.to_csv());
    assert_eq!(a.to_json(), b.to_json());
    assert!(a.to_json().starts_with("{\"metadata\": {\"two_j\": 18, \"ctilde\": -0.29999999999999999"));
}

#[test]
fn boundary_limits() {
    for side in [Side::Minus, Side::Plus] {
        for j in 1..=8u32 {
            let devs: Vec<f64> = [1e-4, 1e-6, 1e-8]
                .iter()
                .map(|&eps| boundary_limit_check(side, j, eps).unwrap().max_deviation())
                .collect();
            assert!(devs[2] < 1e-3, "{side:?} j={j}: {devs:?}");
            assert!(devs[0] > devs[1] && devs[1] > devs[2], "{side:?} j={j}: {devs:?}");
        }
    }
}

#[test]
fn boundary_concentration() {
    let phi = wavefunction(Kind::Position, 64, 0, 32, -0.999).unwrap();
    assert!(phi.norm_sqr() > 0.9, "{}", phi.norm_sqr());
}

#[test]
fn hermite_limit_at_zero_deformation() {
    for n in 0..=2u32 {
        let errs: Vec<f64> = [8u32, 32, 128]
            .iter()
            .map(|&j| scaled_limit_error(n, j, 0.0).unwrap())
            .collect();
        assert!(errs[0] > errs[1] && errs[1] > errs[2], "n={n}: {errs:?}");
        assert!(errs[2] < 0.05, "n={n}: {errs:?}");
    }
}

#[test]
fn hamiltonian_levels() {
    assert_eq!(hamiltonian_spectrum(2), vec![0.5, 1.5, 2.5, 3.5, 4.5]);
}

#[test]
fn odd_family_at_j1_is_trivial() {
    let p = odd_family(1, 0.4).unwrap();
    assert_eq!(p.n, 0);
    assert_eq!(p.normalized(0, 0).unwrap(), 1.0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn random_deformation_diagonalizes(j in 1u32..25, ct in -0.9999f64..0.9999) {
        let u = analytic_u(j, ct).unwrap();
        let dim = f64::from(2 * j + 1);
        prop_assert!(u.eigen_residual().unwrap() < 1e-10 * dim);
        prop_assert!(u.orthogonality_residual() < 1e-11);
    }

    #[test]
    fn wavefunction_parity(j in 1u32..30, ct in -0.99f64..0.99, n_frac in 0.0f64..1.0, q_frac in 0.0f64..1.0) {
        let n = ((2 * j) as f64 * n_frac) as u32;
        let q = (f64::from(j) * q_frac) as i64;
        let s = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
        for kind in [Kind::Position, Kind::Momentum] {
            let a = wavefunction(kind, n, q, j, ct).unwrap();
            let b = wavefunction(kind, n, -q, j, ct).unwrap();
            prop_assert!((b - a * s).norm() < 1e-13);
        }
    }
}
