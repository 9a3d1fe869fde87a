use super::*;
use crate::kernel::rats;
use proptest::prelude::*;

fn params(psi: &[i64], a: i64, b: i64, c: i64) -> PencilParams {
    PencilParams::new(rats(psi), Rho::new(rat(a), rat(b), rat(c))).unwrap()
}

#[test]
fn two_point_constant_rho() {
    let br = pencil_bracket(&params(&[0, 1], 0, 0, 3)).unwrap();
    let v = &Polynomial::var(0) - &Polynomial::var(1);
    assert_eq!(br.get(1, 2), &(&v * &v).scale(&rat(-3)));
}

#[test]
fn zero_rho_gives_zero_bracket() {
    assert!(pencil_bracket(&params(&[1, 2, 5], 0, 0, 0)).unwrap().is_zero());
}

#[test]
fn pencil_satisfies_jacobi() {
    for n in 2..=5 {
        let psi: Vec<i64> = [3, -1, 4, 7, -5][..n].to_vec();
        let br = pencil_bracket(&params(&psi, 2, -3, 5)).unwrap();
        assert!(jacobi_residual(&br).is_empty(), "n={n}");
        let fit = rime_fit(&br).unwrap();
        assert!(rime_jacobi_condition(&fit).is_empty());
    }
}

#[test]
fn repeated_psi_rejected() {
    assert!(PencilParams::new(rats(&[1, 1]), Rho::new(rat(1), rat(0), rat(0))).is_err());
}

#[test]
fn rime_bracket_jacobi_matches_triple_condition() {
    // A rescaled pencil member has nonzero coefficients and satisfies the triple condition.
    let br = pencil_bracket(&params(&[1, 2, 4], 1, 1, 1)).unwrap().rescaled(&rats(&[2, -3, 5]));
    let fit = rime_fit(&br).unwrap();
    assert!(jacobi_residual(&br).is_empty());
    assert!(rime_jacobi_condition(&fit).is_empty());
    // Perturb a single coefficient of (x¹)² in {x¹,x²}.
    let bump = PolyBracket::from_upper(3, |i, j| {
        if (i, j) == (1, 2) {
            Polynomial::monomial(vec![0, 0], rat(1))
        } else {
            Polynomial::zero()
        }
    });
    let broken = br.add_scaled(&bump, &rat(1));
    let fit = rime_fit(&broken).unwrap();
    assert!(!jacobi_residual(&broken).is_empty());
    assert!(!rime_jacobi_condition(&fit).is_empty());
}

#[test]
fn rime_fit_cases() {
    assert!(rime_fit(&PolyBracket::zero(3)).unwrap().a.is_zero());
    let br = PolyBracket::from_upper(3, |i, j| {
        if (i, j) == (1, 2) {
            Polynomial::monomial(vec![2, 2], rat(1))
        } else {
            Polynomial::zero()
        }
    });
    assert!(rime_fit(&br).is_none());
    let p = params(&[0, 1], 0, 1, 0);
    let fit = rime_fit(&pencil_bracket(&p).unwrap()).unwrap();
    // ϱ = t: {x¹,x²} = (ϱ_2(x¹)² + ϱ_1(x²)²)/ψ_12 − (ϱ_1+ϱ_2)/ψ_12 x¹x² = −(x¹)² + x¹x².
    assert_eq!(fit.a[(0, 1)], rat(-1));
    assert_eq!(fit.a[(1, 0)], rat(0));
    assert_eq!(fit.nu[(0, 1)], frac(1, 2));
}

#[test]
fn identity_variation_vanishes() {
    let br = pencil_bracket(&params(&[1, 3, -2], 1, 2, -1)).unwrap();
    assert!(lie_derivative(&br, &Matrix::identity(3)).is_zero());
}

#[test]
fn invariance_generator_examples() {
    let g = invariance_generator(&params(&[0, 1], 0, 0, 1)).unwrap();
    assert_eq!(g, Matrix::from_i64(&[&[1, -1], &[1, -1]]));
    for (psi, a, b, c) in [(vec![1, 3, -2], 1, 2, -1), (vec![0, 2, 5, -3], -2, 0, 3), (vec![1, 2], 0, 1, 0)] {
        let p = params(&psi, a, b, c);
        let g = invariance_generator(&p).unwrap();
        assert!(g.trace().is_zero());
        assert!(lie_derivative(&pencil_bracket(&p).unwrap(), &g).is_zero());
    }
}

#[test]
fn rime_preserving_family() {
    let p = params(&[1, 3, -2, 4], 1, -1, 2);
    let br = pencil_bracket(&p).unwrap();
    let a = rime_preserving_generator(&p, &rats(&[1, 2, -1, 3]));
    let var = lie_derivative(&br, &a);
    assert!(!var.is_zero());
    assert!(rime_fit(&br.add_scaled(&var, &frac(1, 7))).is_some());
    // A generic off-diagonal perturbation breaks the rime shape.
    let mut other = a.clone();
    other[(0, 1)] += rat(1);
    assert!(rime_fit(&br.add_scaled(&lie_derivative(&br, &other), &rat(1))).is_none());
}

#[test]
fn compensation_examples() {
    let p = params(&[1, 3, -2], 1, 2, -1);
    let zero = compensation_check(&p, &rats(&[0, 0, 0]), &rat(1)).unwrap();
    assert!(zero.all_pass());
    assert!(compensation_check(&p, &rats(&[1, -2, 5]), &frac(1, 3)).unwrap().all_pass());
    let flat = params(&[2, -1, 5, 4], 0, 3, 1);
    assert!(compensation_check(&flat, &rats(&[2, 1, -1, 3]), &rat(2)).unwrap().all_pass());
}

#[test]
fn sl2_examples() {
    let [bm, ..] = sl2_generators(&rats(&[0, 1])).unwrap();
    assert_eq!(bm, Matrix::from_i64(&[&[-1, -1], &[1, 1]]));
    assert!(bm.det().is_zero() && bm.trace().is_zero());
    for psi in [rats(&[0, 1]), rats(&[1, 3, -2]), rats(&[2, -1, 5, 7])] {
        let rep = sl2_suite(&psi).unwrap();
        assert!(rep.all_pass(), "{rep:?}");
    }
}

#[test]
fn discriminant_moves() {
    let z = rat(3);
    let r = discriminant_action(&Rho::new(rat(1), rat(0), rat(0)), &PencilMove::Shift(z.clone())).unwrap();
    assert_eq!(r, Rho::new(rat(1), rat(6), rat(9)));
    assert!(r.discriminant().is_zero());
    let r = discriminant_action(&Rho::new(rat(0), rat(1), rat(0)), &PencilMove::Dilate(rat(5))).unwrap();
    assert_eq!(r, Rho::new(rat(0), rat(1), rat(0)));
    let rho = Rho::new(rat(2), rat(-3), rat(7));
    let inv = discriminant_action(&rho, &PencilMove::Invert).unwrap();
    assert_eq!(inv, Rho::new(rat(-7), rat(3), rat(-2)));
    assert_eq!(inv.discriminant(), rho.discriminant());
    assert!(discriminant_action(&rho, &PencilMove::Dilate(rat(0))).is_err());
}

#[test]
fn moves_transport_brackets() {
    let p = params(&[1, 3, -2], 2, -1, 3);
    let br = pencil_bracket(&p).unwrap();
    for mv in [PencilMove::Shift(frac(1, 2)), PencilMove::Dilate(rat(-3)), PencilMove::Invert] {
        let (q, d) = apply_move(&p, &mv).unwrap();
        assert_eq!(br.rescaled(&d), pencil_bracket(&q).unwrap(), "{mv:?}");
        assert_eq!(q.rho.discriminant(), p.rho.discriminant());
    }
}

#[test]
fn normal_forms() {
    let nf = normal_form_classify(&params(&[1, 2, 4], 1, 0, 0)).unwrap();
    assert_eq!(nf.class, OrbitClass::Lightlike);
    assert!(nf.verified);
    let nf = normal_form_classify(&params(&[2, 3, 5], 1, -1, 0)).unwrap();
    assert_eq!(nf.class, OrbitClass::Massive);
    assert!(nf.verified);
    let nf = normal_form_classify(&params(&[1, 2, 4], 0, 3, 0)).unwrap();
    assert_eq!(nf.moves, Some(vec![PencilMove::Shift(rat(0))]));
    assert!(nf.verified);
    let nf = normal_form_classify(&params(&[1, 2, 4], 1, 0, -2)).unwrap();
    assert_eq!(nf.class, OrbitClass::Massive);
    assert_eq!(nf.gap, Some(WitnessGap::NeedsQuadraticExtension));
    assert!(normal_form_classify(&params(&[1, 2], 0, 0, 0)).is_err());
}

#[test]
fn quantum_limits() {
    let (br, p) = bracket_from_quantum(&QuantumFamily::Unitary { mu: rats(&[0, 1]) }).unwrap();
    assert_eq!(p.rho, Rho::new(rat(0), rat(0), rat(-1)));
    assert_eq!(br, pencil_bracket(&p).unwrap());
    let (br, p) = bracket_from_quantum(&QuantumFamily::NonUnitary { psi: rats(&[1, 3, -2]), beta: frac(2, 3) }).unwrap();
    assert_eq!(br, pencil_bracket(&p).unwrap());
    let (br, _) = bracket_from_quantum(&QuantumFamily::NonUnitary { psi: rats(&[1, 3, -2]), beta: rat(0) }).unwrap();
    assert!(br.is_zero());
}

#[test]
fn linear_rime() {
    for n in 3..=5 {
        assert!(linear_rime_suite(n).unwrap().all_pass(), "n={n}");
    }
    assert_eq!(linear_rime_suite(3).unwrap().sl2_isomorphism, Some(true));
    let mut a = unique_linear_algebra(4);
    a[(1, 2)] = rat(3);
    assert!(!linear_jacobi_condition(&a).is_empty());
    assert!(!jacobi_residual(&linear_bracket(&a)).is_empty());
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

fn rho() -> impl Strategy<Value = Rho> {
    (nonzero(), nonzero(), nonzero()).prop_map(|(a, b, c)| Rho::new(a, b, c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn prop_pencil_jacobi(psi in distinct(4), r in rho()) {
        let br = pencil_bracket(&PencilParams::new(psi, r).unwrap()).unwrap();
        prop_assert!(jacobi_residual(&br).is_empty());
        prop_assert!(rime_fit(&br).is_some());
    }

    #[test]
    fn prop_generator_annihilates(psi in distinct(3), r in rho()) {
        let p = PencilParams::new(psi, r).unwrap();
        let g = invariance_generator(&p).unwrap();
        prop_assert!(g.trace().is_zero());
        prop_assert!(lie_derivative(&pencil_bracket(&p).unwrap(), &g).is_zero());
    }

    #[test]
    fn prop_compensation(psi in distinct(3), r in rho(), nu in proptest::collection::vec(nonzero(), 3), eps in nonzero()) {
        let p = PencilParams::new(psi, r).unwrap();
        prop_assert!(compensation_check(&p, &nu, &eps).unwrap().all_pass());
    }

    #[test]
    fn prop_discriminant_invariant(r in rho(), z in nonzero()) {
        for mv in [PencilMove::Shift(z.clone()), PencilMove::Dilate(z.clone()), PencilMove::Invert] {
            prop_assert_eq!(discriminant_action(&r, &mv).unwrap().discriminant(), r.discriminant());
        }
    }

    #[test]
    fn prop_normal_form_witness(psi in distinct(3), r in rho()) {
        let nf = normal_form_classify(&PencilParams::new(psi, r).unwrap()).unwrap();
        prop_assert!(nf.verified || nf.gap.is_some());
    }

    #[test]
    fn prop_varpi(a in proptest::collection::vec(nonzero(), 9), b in proptest::collection::vec(nonzero(), 9)) {
        let y1 = Matrix::from_fn(3, 3, |r, c| a[3 * r + c].clone());
        let y2 = Matrix::from_fn(3, 3, |r, c| b[3 * r + c].clone());
        prop_assert_eq!(varpi(&varpi(&y1)), y1.clone());
        for res in varpi_identities(&y1, &y2) {
            prop_assert!(res.is_zero());
        }
    }
}
