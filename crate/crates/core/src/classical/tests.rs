use super::*;
use crate::kernel::rats;
use crate::rime::hecke_residual;
use crate::tensor::yb_residual;
use proptest::prelude::*;

fn all_kinds(n: usize, params: &[Rational]) -> Vec<ClassicalKind> {
    vec![
        ClassicalKind::RimeNonSkew(params.to_vec()),
        ClassicalKind::RCG,
        ClassicalKind::RCGPrime,
        ClassicalKind::BSkew,
        ClassicalKind::BCG,
        ClassicalKind::RimeSkew(params.to_vec()),
        ClassicalKind::RimeSkewSL(params[..n].to_vec()),
    ]
}

#[test]
fn matrix_unit_product_rule() {
    let n = 3;
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                for l in 1..=n {
                    let lhs = &matrix_unit(n, i, j) * &matrix_unit(n, k, l);
                    let rhs = if i == l { matrix_unit(n, k, j) } else { Matrix::zeros(n, n) };
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}

#[test]
fn rime_nonskew_two_dim_block() {
    let r = build_classical(&ClassicalKind::RimeNonSkew(rats(&[1, 2])), 2).unwrap();
    let expected = Matrix::from_i64(&[&[0, 0, 0, 0], &[-1, 1, 2, -2], &[1, -1, -2, 2], &[0, 0, 0, 0]]);
    assert_eq!(r.matrix(), &expected);
}

#[test]
fn b_skew_two_dim_is_a_single_wedge() {
    let b = build_classical(&ClassicalKind::BSkew, 2).unwrap();
    assert_eq!(b, Operator2::wedge(&matrix_unit(2, 2, 1), &matrix_unit(2, 2, 2)));
    // Reversing the basis order and transposing both legs gives e²₁∧e¹₁.
    let j = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
    let flipped = b.conjugate(&j).unwrap().transpose();
    assert_eq!(flipped, Operator2::wedge(&matrix_unit(2, 2, 1), &matrix_unit(2, 1, 1)));
}

#[test]
fn every_kind_solves_cybe() {
    let params = rats(&[0, 1, 3, -2]);
    for n in 2..=4 {
        for kind in all_kinds(n, &params[..n]) {
            let r = build_classical(&kind, n).unwrap();
            assert!(cybe_residual(&r).is_zero(), "{} n={n}", kind.name());
        }
    }
}

#[test]
fn repeated_parameters_rejected() {
    let e = build_classical(&ClassicalKind::RimeSkew(rats(&[1, 1])), 2).unwrap_err();
    assert!(matches!(e, Error::DegenerateParameters(_)));
    assert!(build_classical(&ClassicalKind::RCG, 1).is_err());
}

#[test]
fn classical_limit_is_exact() {
    assert!(classical_limit_residual(&rats(&[1, 2]), &rat(1)).unwrap().is_zero());
    assert!(classical_limit_residual(&rats(&[2, -1, 5, 7]), &frac(-3, 4)).unwrap().is_zero());
    let r_hat = strict_rime_r(&rats(&[1, 2, 4]), &rat(0)).unwrap();
    assert_eq!(&permutation_p(3) * &r_hat, Operator2::identity(3));
}

#[test]
fn conjugation_pairs_vanish() {
    assert!(conjugation_residual(&ConjugationPair::RimeCg(rats(&[1, 2]))).unwrap().is_zero());
    assert!(conjugation_residual(&ConjugationPair::SkewB(rats(&[0, 1, 3]))).unwrap().is_zero());
    assert!(conjugation_residual(&ConjugationPair::SkewSlBcg(rats(&[0, 1, 3]))).unwrap().is_zero());
    for n in 2..=4 {
        let v = rats(&[3, -1, 2, 5][..n]);
        assert!(conjugation_residual(&ConjugationPair::RimeCg(v.clone())).unwrap().is_zero());
        assert!(conjugation_residual(&ConjugationPair::SkewB(v.clone())).unwrap().is_zero());
        assert!(conjugation_residual(&ConjugationPair::SkewSlBcg(v)).unwrap().is_zero());
    }
}

#[test]
fn carrier_algebra_all_items() {
    for mu in [rats(&[0, 1]), rats(&[0, 1, 3]), rats(&[2, -1, 5, 1])] {
        let rep = carrier_algebra_check(&mu).unwrap();
        assert!(rep.all_pass(), "{rep:?}");
    }
}

#[test]
fn carrier_examples() {
    let z12 = z_unit(2, 1, 2);
    let z21 = z_unit(2, 2, 1);
    assert_eq!(z12.commutator(&z21), &z21 - &z12);
    let mu = rats(&[0, 1]);
    let r = build_classical(&ClassicalKind::RimeSkew(mu), 2).unwrap();
    let t = tensor_coordinates(&[z12, z21], &r).unwrap();
    // ω(Z¹₂, Z²₁) = −(μ₁ − μ₂) = 1 is the inverse of t^{(12),(21)} = 1/(μ₁ − μ₂) = −1 paired across.
    assert_eq!(t[(0, 1)], rat(-1));
    assert_eq!(t[(1, 0)], rat(1));
}

#[test]
fn carrier_rejects_repeated_mu() {
    assert!(carrier_algebra_check(&rats(&[1, 2, 1])).is_err());
}

#[test]
fn invariance_shift_examples() {
    let r = build_classical(&ClassicalKind::RCG, 3).unwrap();
    assert!(invariance_shift_residual(&r, &eta_cg(3), &frac(1, 2)).unwrap().is_zero());
    let b = build_classical(&ClassicalKind::BSkew, 3).unwrap();
    assert!(invariance_shift_residual(&b, &eta_b(3), &rat(2)).unwrap().is_zero());
    assert!(invariance_shift_residual(&r, &eta_cg(3), &rat(0)).unwrap().is_zero());
    let bad = matrix_unit(3, 1, 2);
    assert!(matches!(
        invariance_shift_residual(&r, &bad, &rat(1)),
        Err(Error::InvalidInput(_))
    ));
}

#[test]
fn eta_cg_is_traceless() {
    for n in 2..=5 {
        assert!(eta_cg(n).trace().is_zero());
    }
}

#[test]
fn representation_change_examples() {
    for (n, c) in [(2, rat(0)), (2, rat(1)), (3, frac(-1, 3)), (4, frac(5, 2))] {
        let rc = representation_change_residual(n, &c).unwrap();
        assert!(rc.cg.is_zero(), "cg n={n}");
        assert!(rc.skew.is_zero(), "skew n={n}");
    }
    let rc = representation_change_residual(3, &frac(-1, 3)).unwrap();
    let b = build_classical(&ClassicalKind::BSkew, 3).unwrap();
    let bcg = build_classical(&ClassicalKind::BCG, 3).unwrap();
    assert_eq!(rc.skew_difference, &bcg - &b);
}

#[test]
fn representation_change_has_quadratic_identity_term() {
    let n = 3;
    let c = rat(1);
    let rc = rcg(n);
    let id = Matrix::identity(n);
    let eta = eta_cg(n);
    let linear = &(&Operator2::tensor(&eta, &id) - &Operator2::tensor(&id, &eta))
        - &Operator2::identity(n).scale(&rat(n as i64 - 1));
    let diff = &representation_change(&rc, &c) - &(&rc + &linear);
    assert_eq!(diff, Operator2::identity(n).scale(&rat(-3)));
}

#[test]
fn bd_symmetry_reports() {
    for n in 2..=4 {
        assert!(bd_symmetry_check(&ClassicalKind::RCG, n).unwrap().all_pass());
        assert!(bd_symmetry_check(&ClassicalKind::RCGPrime, n).unwrap().all_pass());
    }
    assert!(bd_symmetry_check(&ClassicalKind::BSkew, 3).is_err());
}

#[test]
fn rime_nonskew_and_skew_symmetries() {
    let phi = rats(&[1, 3, -2, 5]);
    let r = build_classical(&ClassicalKind::RimeNonSkew(phi.clone()), 4).unwrap();
    assert_eq!(&permutation_p(4) * &r, r.scale(&rat(-1)));
    let s = build_classical(&ClassicalKind::RimeSkew(phi), 4).unwrap();
    assert_eq!(s.reversed(), s.scale(&rat(-1)));
}

#[test]
fn fork_matrix_entries_and_equations() {
    let one = rat(1);
    let r = bd_fork_r(&rat(2), &one, &one, &one).unwrap();
    assert_eq!(r.at(1, 1, 1, 1), &one);
    assert_eq!(r.at(4, 1, 2, 3), &frac(1, 2));
    assert!(yb_residual(&r).is_zero());
    assert!(hecke_residual(&r, &frac(3, 4)).is_zero());
    assert!(bd_fork_r(&rat(1), &one, &one, &one).is_err());
    assert!(bd_fork_r(&rat(-1), &one, &one, &one).is_err());
    assert!(bd_fork_r(&rat(3), &rat(0), &one, &one).is_err());
}

#[test]
fn tilde_difference_and_gram() {
    for mu in [rats(&[0, 1]), rats(&[0, 1, 3]), rats(&[2, -1, 5, 1])] {
        assert!(tilde_difference_residual(&mu).unwrap().is_zero());
        let g = bcg_gram_matrix(&mu).unwrap();
        assert_eq!(g.rank(), g.rows(), "mu={mu:?}");
    }
}

fn nonzero() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=8)
        .prop_filter("nonzero", |(p, _)| *p != 0)
        .prop_map(|(p, q)| frac(p, q))
}

fn distinct(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec(nonzero(), n).prop_filter("distinct", |v| {
        (0..v.len()).all(|i| (i + 1..v.len()).all(|j| v[i] != v[j]))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn prop_all_kinds_cybe(v in distinct(3)) {
        for kind in all_kinds(3, &v) {
            let r = build_classical(&kind, 3).unwrap();
            prop_assert!(cybe_residual(&r).is_zero());
        }
    }

    #[test]
    fn prop_classical_limit(v in distinct(3), beta in nonzero()) {
        prop_assert!(classical_limit_residual(&v, &beta).unwrap().is_zero());
    }

    #[test]
    fn prop_conjugations(v in distinct(3)) {
        prop_assert!(conjugation_residual(&ConjugationPair::RimeCg(v.clone())).unwrap().is_zero());
        prop_assert!(conjugation_residual(&ConjugationPair::SkewB(v.clone())).unwrap().is_zero());
        prop_assert!(conjugation_residual(&ConjugationPair::SkewSlBcg(v)).unwrap().is_zero());
    }

    #[test]
    fn prop_fork_hecke_and_ybe(q in nonzero(), p in nonzero(), r in nonzero(), s in nonzero()) {
        prop_assume!(q != rat(1) && q != rat(-1));
        let m = bd_fork_r(&q, &p, &r, &s).unwrap();
        let beta = Rational::one() - Rational::one() / (&q * &q);
        prop_assert!(hecke_residual(&m, &beta).is_zero());
        prop_assert!(yb_residual(&m).is_zero());
    }
}
