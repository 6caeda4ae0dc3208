use finosc_core::dunkl::{
    apply_operator, monomial_action, operator_matrix, realization_c, similarity_invariants_match,
    verify_defining_relations, ConjugationInvariants, HomogPolySpace, Op, RealizationVariant, Variant,
};
use finosc_core::field::rational;
use finosc_core::{build_exact, AlgebraParams, Error, HalfInt, Sign, Surd};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

#[test]
fn variant_one_integer_j() {
    for j in 1..=6u32 {
        let space = HomogPolySpace::new(2 * j);
        let dim = q(2 * i64::from(j) + 1);
        for ct in [rational(0, 1), rational(1, 3), rational(-2, 5), rational(9, 10), rational(-99, 100)] {
            let rv = RealizationVariant::from_ctilde(&ct);
            assert_eq!(rv.mu, -&ct / q(2));
            let c = realization_c(&space, &rv);
            assert_eq!(c, &ct * &dim);
            let report = verify_defining_relations(&space, &rv).unwrap();
            assert!(report.exact && report.passes(0.0), "j={j} c~={ct}: {report:?}");
            let rep = build_exact(HalfInt::from_int(j), &AlgebraParams::new(c, Sign::Plus)).unwrap();
            assert!(similarity_invariants_match(&space, &rv, &rep).unwrap(), "j={j} c~={ct}");
        }
    }
}

#[test]
fn variant_two_half_integer_j() {
    for two_j in [1u32, 3, 5, 7, 9, 11] {
        let space = HomogPolySpace::new(two_j);
        for mu in [rational(0, 1), rational(1, 2), rational(3, 7), rational(-1, 10), rational(2, 1)] {
            let rv = RealizationVariant::new(Variant::Two, mu.clone());
            let c = realization_c(&space, &rv);
            let two_mu = &mu * q(2);
            assert_eq!(c, &two_mu * &two_mu + &two_mu * q(i64::from(two_j) + 1));
            let report = verify_defining_relations(&space, &rv).unwrap();
            assert!(report.exact && report.passes(0.0), "two_j={two_j} μ={mu}: {report:?}");
            let params = AlgebraParams::new(c, Sign::Plus);
            match build_exact(HalfInt::new(two_j), &params) {
                Ok(rep) => assert!(similarity_invariants_match(&space, &rv, &rep).unwrap()),
                // a non-unitary realization has no unitary counterpart
                Err(Error::Inadmissible(_)) => assert!(!mu.is_zero()),
                Err(e) => panic!("{e}"),
            }
        }
    }
}

#[test]
fn invariants_detect_wrong_parameter() {
    let space = HomogPolySpace::new(4);
    let rv = RealizationVariant::from_ctilde(&rational(1, 5));
    let other = build_exact(HalfInt::from_int(2), &AlgebraParams::new(rational(2, 1), Sign::Plus)).unwrap();
    assert!(!similarity_invariants_match(&space, &rv, &other).unwrap());
    let wrong_dim = build_exact(HalfInt::from_int(1), &AlgebraParams::new(rational(0, 1), Sign::Plus)).unwrap();
    assert!(similarity_invariants_match(&space, &rv, &wrong_dim).is_err());
}

#[test]
fn variants_need_matching_parity_of_two_j() {
    let v1 = RealizationVariant::new(Variant::One, rational(1, 4));
    let v2 = RealizationVariant::new(Variant::Two, rational(1, 4));
    assert!(matches!(verify_defining_relations(&HomogPolySpace::new(3), &v1), Err(Error::Incompatible(_))));
    assert!(matches!(verify_defining_relations(&HomogPolySpace::new(4), &v2), Err(Error::Incompatible(_))));
    // the reason: T_y x^{2j} picks up a 1/y term
    assert!(matches!(monomial_action(&v1, Op::Ty, 3, 0), Err(Error::Boundary(_))));
    assert!(matches!(monomial_action(&v2, Op::Ty, 4, 0), Err(Error::Boundary(_))));
}

#[test]
fn lowering_operators_change_degree() {
    let space = HomogPolySpace::new(4);
    let rv = RealizationVariant::from_ctilde(&rational(1, 2));
    let v: Vec<Surd> = (0..5).map(|i| Surd::from_int(i + 1)).collect();
    assert_eq!(apply_operator(Op::Tx, &v, &space, &rv).unwrap().len(), 4);
    assert_eq!(apply_operator(Op::Ty, &v, &space, &rv).unwrap().len(), 4);
    assert!(operator_matrix(Op::Tx, &space, &rv).is_err());
    assert!(apply_operator(Op::J0, &v[..3], &space, &rv).is_err());
}

#[test]
fn monomial_rules() {
    // T_x x^3 y = (3 + 2μ) x^2 y, T_x x^2 y^2 = 2 x y^2
    let rv = RealizationVariant::new(Variant::One, rational(1, 3));
    assert_eq!(monomial_action(&rv, Op::Tx, 3, 1).unwrap(), (rational(11, 3), 2, 1));
    assert_eq!(monomial_action(&rv, Op::Tx, 2, 2).unwrap(), (q(2), 1, 2));
    // variant 2: T_y x^2 y = (1 + 2μ) x^2, T_y x y^2 = 2 x y
    let rv = RealizationVariant::new(Variant::Two, rational(1, 3));
    assert_eq!(monomial_action(&rv, Op::Ty, 2, 1).unwrap(), (rational(5, 3), 2, 0));
    assert_eq!(monomial_action(&rv, Op::Ty, 1, 2).unwrap(), (q(2), 1, 1));
    assert_eq!(monomial_action(&rv, Op::P, 1, 2).unwrap().0, q(1));
    assert_eq!(monomial_action(&rv, Op::J0, 3, 0).unwrap().0, rational(3, 2));
}

#[test]
fn ladder_products_are_rational() {
    let space = HomogPolySpace::new(6);
    let rv = RealizationVariant::from_ctilde(&rational(-3, 7));
    let inv = ConjugationInvariants::of_realization(&space, &rv).unwrap();
    assert_eq!(inv.jplus_jminus[0], q(0));
    assert_eq!(inv.jminus_jplus[6], q(0));
    assert_eq!(inv.p, vec![1, -1, 1, -1, 1, -1, 1]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn relations_for_random_mu(two_j in 1u32..9, num in -20i64..20, den in 1i64..9) {
        let mu = rational(num, den);
        let variant = if two_j % 2 == 0 { Variant::One } else { Variant::Two };
        let rv = RealizationVariant::new(variant, mu);
        let space = HomogPolySpace::new(two_j);
        let report = verify_defining_relations(&space, &rv).unwrap();
        prop_assert!(report.passes(0.0));
    }
}
