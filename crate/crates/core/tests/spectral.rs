use finosc_core::field::rational;
use finosc_core::oscillator::{momentum_as_tridiagonal, position_operator_exact};
use finosc_core::spectral::{equidistant_poly, sturm_count, RationalTridiagonal};
use finosc_core::{
    char_poly_exact, inverse_iteration_vector, momentum_operator, position_operator, sturm_eigenvalues, CharPoly,
    Error, TridiagonalOperator,
};
use nalgebra::{DMatrix, SymmetricEigen};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

const CTILDES: [f64; 7] = [0.0, 0.3, -0.3, 0.8, -0.8, 0.999, -0.999];

fn dense_eigenvalues(t: &TridiagonalOperator) -> Vec<f64> {
    let mut ev: Vec<f64> = SymmetricEigen::new(t.to_dense()).eigenvalues.iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    ev
}

#[test]
fn position_spectrum_is_equidistant() {
    for j in 1..=40u32 {
        for ct in CTILDES {
            let mq = position_operator(j, ct).unwrap();
            let ev = sturm_eigenvalues(&mq, 1e-13).unwrap();
            assert_eq!(ev.len(), 2 * j as usize + 1);
            for (l, v) in ev.iter().enumerate() {
                let expected = l as f64 - f64::from(j);
                assert!((v / 2.0 - expected).abs() < 1e-9, "j={j} c~={ct} l={l}: {v}");
            }
        }
    }
}

#[test]
fn sturm_agrees_with_dense_solver() {
    for j in [1u32, 4, 11, 25] {
        for ct in CTILDES {
            let mq = position_operator(j, ct).unwrap();
            let ours = sturm_eigenvalues(&mq, 1e-13).unwrap();
            let dense = dense_eigenvalues(&mq);
            for (a, b) in ours.iter().zip(&dense) {
                assert!((a - b).abs() < 1e-10, "j={j} c~={ct}: {a} vs {b}");
            }
        }
    }
}

#[test]
fn momentum_spectrum_matches_position() {
    for j in 1..=40u32 {
        for ct in CTILDES {
            let mp = momentum_operator(j, ct).unwrap();
            let ev = sturm_eigenvalues(&momentum_as_tridiagonal(&mp), 1e-13).unwrap();
            for (l, v) in ev.iter().enumerate() {
                assert!((v - (l as f64 - f64::from(j))).abs() < 1e-9, "j={j} c~={ct}");
            }
        }
    }
}

#[test]
fn exact_characteristic_polynomial() {
    let grid = [
        rational(0, 1),
        rational(1, 3),
        rational(-1, 3),
        rational(9, 10),
        rational(-9, 10),
    ];
    for j in 1..=8u32 {
        let target = equidistant_poly(j, 2);
        for ct in &grid {
            // M^q = 2q̂
            let p = char_poly_exact(&position_operator_exact(j, ct).unwrap()).unwrap();
            assert_eq!(p, target, "j={j} c~={ct}: {p}");
        }
    }
}

#[test]
fn equidistant_poly_from_roots() {
    // λ Π_{q=1..j} (λ² - 4q²), built independently from the roots ±2q
    for j in 0..=6u32 {
        let mut roots = vec![rational(0, 1)];
        for q in 1..=i64::from(j) {
            roots.push(BigRational::from_integer(BigInt::from(2 * q)));
            roots.push(BigRational::from_integer(BigInt::from(-2 * q)));
        }
        assert_eq!(equidistant_poly(j, 2), CharPoly::from_roots(&roots));
    }
    assert_eq!(equidistant_poly(2, 1).to_string(), "λ^5 - 5λ^3 + 4λ");
}

#[test]
fn char_poly_rejects_bad_input() {
    let t = RationalTridiagonal::zero_diagonal(vec![rational(1, 1), rational(-2, 1)]);
    assert!(char_poly_exact(&t).is_err());
    let t = RationalTridiagonal {
        diag: vec![rational(0, 1)],
        offdiag_squared: vec![rational(1, 1)],
    };
    assert!(char_poly_exact(&t).is_err());
}

#[test]
fn non_equidistant_operator_is_detected() {
    // a generic symmetric tridiagonal matrix does not hit the target
    let t = RationalTridiagonal::zero_diagonal(vec![rational(1, 1), rational(2, 1)]);
    assert_ne!(char_poly_exact(&t).unwrap(), equidistant_poly(1, 2));
}

#[test]
fn inverse_iteration_residuals() {
    let mq = position_operator(12, -0.8).unwrap();
    for l in 0..25 {
        let lambda = 2.0 * (l as f64 - 12.0);
        let v = inverse_iteration_vector(&mq, lambda, 1e-12).unwrap();
        let mv = mq.apply(&v);
        let res = mv.iter().zip(&v).map(|(a, b)| (a - lambda * b).abs()).fold(0.0, f64::max);
        assert!(res < 1e-10, "l={l}: {res}");
        let norm: f64 = v.iter().map(|x| x * x).sum();
        assert!((norm - 1.0).abs() < 1e-12);
    }
}

#[test]
fn invalid_tolerance() {
    let t = TridiagonalOperator::zero_diagonal(vec![1.0]);
    assert!(matches!(sturm_eigenvalues(&t, 0.0), Err(Error::InvalidArgument(_))));
}

fn tridiagonal_strategy() -> impl Strategy<Value = TridiagonalOperator> {
    (1usize..30).prop_flat_map(|n| {
        (
            prop::collection::vec(-5.0f64..5.0, n),
            prop::collection::vec(-3.0f64..3.0, n - 1),
        )
            .prop_map(|(d, e)| TridiagonalOperator::new(d, e))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sturm_matches_dense(t in tridiagonal_strategy()) {
        let ours = sturm_eigenvalues(&t, 1e-13).unwrap();
        let dense = dense_eigenvalues(&t);
        prop_assert_eq!(ours.len(), dense.len());
        for (a, b) in ours.iter().zip(&dense) {
            prop_assert!((a - b).abs() < 1e-9);
        }
    }

    #[test]
    fn sturm_count_is_monotone(t in tridiagonal_strategy(), x in -10.0f64..10.0, dx in 0.0f64..5.0) {
        prop_assert!(sturm_count(&t, x) <= sturm_count(&t, x + dx));
        prop_assert_eq!(sturm_count(&t, 1e6), t.dim());
    }

    #[test]
    fn equidistant_for_random_rational_ctilde(j in 1u32..6, num in -99i64..100) {
        let ct = rational(num, 100);
        let p = char_poly_exact(&position_operator_exact(j, &ct).unwrap()).unwrap();
        prop_assert_eq!(p, equidistant_poly(j, 2));
    }

    #[test]
    fn char_poly_of_dense_product(d in prop::collection::vec(-4i64..5, 4), e in prop::collection::vec(1i64..6, 3)) {
        let t = RationalTridiagonal {
            diag: d.iter().map(|&v| rational(v, 1)).collect(),
            offdiag_squared: e.iter().map(|&v| rational(v, 1)).collect(),
        };
        let p = char_poly_exact(&t).unwrap();
        // det(xI - T) at integer x against a dense float determinant
        for x in -3i64..=3 {
            let dense = DMatrix::from_fn(4, 4, |r, c| {
                if r == c {
                    x as f64 - d[r] as f64
                } else if r + 1 == c || c + 1 == r {
                    -(e[r.min(c)] as f64).sqrt()
                } else {
                    0.0
                }
            });
            let det = dense.determinant();
            let exact: f64 = num_traits::ToPrimitive::to_f64(&p.eval(&rational(x, 1))).unwrap();
            prop_assert!((det - exact).abs() < 1e-8 * exact.abs().max(1.0));
        }
    }
}
