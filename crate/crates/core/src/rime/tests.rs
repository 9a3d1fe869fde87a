use super::*;
use crate::kernel::{frac, rats};
use crate::tensor::yb_residual;
use proptest::prelude::*;

fn rows_of(r: &Operator2) -> Vec<Vec<Rational>> {
    (0..r.matrix().rows())
        .map(|i| r.matrix().row(i).to_vec())
        .collect()
}

fn ints(v: &[i64]) -> Vec<Rational> {
    rats(v)
}

#[test]
fn assemble_identity_and_diagonal_projector() {
    let mut d = RimeData::zero(3);
    for i in 0..3 {
        d.alpha[(i, i)] = rat(1);
    }
    let diag = assemble_rime(&d);
    assert_eq!(diag.square(), diag);
    assert_eq!(diag.matrix().nnz(), 3);
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                d.beta[(i, j)] = rat(1);
            }
        }
    }
    assert_eq!(assemble_rime(&d), Operator2::identity(3));
}

#[test]
fn assemble_two_dim_block_layout() {
    let mut d = RimeData::zero(2);
    let v = |x: i64| rat(x);
    d.alpha = Matrix::from_i64(&[&[1, 2], &[3, 4]]);
    d.beta = Matrix::from_i64(&[&[0, 5], &[6, 0]]);
    d.gamma = Matrix::from_i64(&[&[0, 7], &[8, 0]]);
    d.gamma_p = Matrix::from_i64(&[&[0, 9], &[10, 0]]);
    let r = assemble_rime(&d);
    let expect = vec![
        vec![v(1), v(0), v(0), v(0)],
        vec![v(7), v(5), v(2), v(9)],
        vec![v(10), v(3), v(6), v(8)],
        vec![v(0), v(0), v(0), v(4)],
    ];
    assert_eq!(rows_of(&r), expect);
    assert_eq!(RimeData::from_operator(&r), d);
}

#[test]
fn strict_rime_example_rows() {
    let r = strict_rime_r(&ints(&[1, 2]), &rat(1)).unwrap();
    assert_eq!(
        r.matrix(),
        &Matrix::from_i64(&[&[1, 0, 0, 0], &[1, -1, -1, 2], &[-1, 2, 2, -2], &[0, 0, 0, 1]])
    );
    assert_eq!(classify(&r), RimeClass::RimeStrict);
    assert!(yb_residual(&r).is_zero());
}

#[test]
fn strict_rime_rejects_repeated_phi() {
    assert!(matches!(
        strict_rime_r(&ints(&[1, 1]), &rat(1)),
        Err(Error::DegenerateParameters(_))
    ));
    assert!(unitary_rime_r(&ints(&[0, 0])).is_err());
}

#[test]
fn strict_rime_n3_solves_ybe_and_beta_zero_is_involutive() {
    for beta in [frac(1, 3), rat(-2), rat(5)] {
        let r = strict_rime_r(&ints(&[1, 2, 3]), &beta).unwrap();
        assert!(yb_residual(&r).is_zero());
        assert!(hecke_residual(&r, &beta).is_zero());
    }
    let r0 = strict_rime_r(&ints(&[1, 2, 3]), &rat(0)).unwrap();
    assert_eq!(r0.square(), Operator2::identity(3));
}

#[test]
fn phi_zero_allowed_but_not_strict() {
    let r = strict_rime_r(&ints(&[0, 1, 3]), &frac(1, 2)).unwrap();
    assert!(yb_residual(&r).is_zero());
    assert_eq!(classify(&r), RimeClass::RimeNonStrict);
}

#[test]
fn unitary_example_rows_and_square() {
    let r = unitary_rime_r(&ints(&[0, 1])).unwrap();
    assert_eq!(
        r.matrix(),
        &Matrix::from_i64(&[&[1, 0, 0, 0], &[1, -1, 0, 1], &[-1, 2, 1, -1], &[0, 0, 0, 1]])
    );
    assert_eq!(r.square(), Operator2::identity(2));
    assert!(yb_residual(&unitary_rime_r(&ints(&[0, 1, 2])).unwrap()).is_zero());
}

#[test]
fn unitary_family_is_first_order_limit_of_strict_family() {
    let mu = ints(&[0, 1, 3]);
    let ru = unitary_rime_r(&mu).unwrap();
    let slope = |b: Rational| {
        let phi: Vec<Rational> = mu.iter().map(|m| rat(1) + &b * m).collect();
        (&strict_rime_r(&phi, &b).unwrap() - &ru).scale(&b.recip())
    };
    assert_eq!(slope(frac(1, 10)), slope(frac(1, 100)));
}

#[test]
fn classify_catalog_examples() {
    let gl2 = Operator2::from_matrix(
        2,
        Matrix::from_rows(vec![
            vec![rat(2), rat(0), rat(0), rat(0)],
            vec![rat(0), rat(0), rat(1), rat(0)],
            vec![rat(0), rat(1), frac(3, 2), rat(0)],
            vec![rat(0), rat(0), rat(0), rat(2)],
        ]),
    )
    .unwrap();
    assert_eq!(classify(&gl2), RimeClass::Ice);
    let jordanian = Operator2::from_matrix(
        2,
        Matrix::from_i64(&[&[1, 1, -1, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]),
    )
    .unwrap();
    assert_eq!(classify(&jordanian), RimeClass::NotRime);
}

#[test]
fn eigen_multiplicities_examples() {
    let r = strict_rime_r(&ints(&[1, 2]), &rat(1)).unwrap();
    assert_eq!(
        eigen_multiplicities(&r, &rat(1)).unwrap(),
        EigenStructure::Semisimple { m1: 3, m_beta_minus_1: 1 }
    );
    let b = frac(1, 3);
    let r3 = strict_rime_r(&ints(&[1, 2, 4]), &b).unwrap();
    assert_eq!(
        eigen_multiplicities(&r3, &b).unwrap(),
        EigenStructure::Semisimple { m1: 6, m_beta_minus_1: 3 }
    );
    let r2 = strict_rime_r(&ints(&[1, 2, 4]), &rat(2)).unwrap();
    assert_eq!(eigen_multiplicities(&r2, &rat(2)).unwrap(), EigenStructure::Jordan);
    assert!(eigen_multiplicities(&r2, &rat(3)).is_err());
}

#[test]
fn hecke_of_permutation() {
    assert!(hecke_residual(&permutation_p(3), &rat(0)).is_zero());
}

#[test]
fn unitary_quantum_traces_example() {
    let mu = ints(&[0, 1]);
    let r = unitary_rime_r(&mu).unwrap();
    let (q, qt) = quantum_traces(&r).unwrap();
    assert_eq!(q, Matrix::from_i64(&[&[2, -1], &[1, 0]]));
    assert_eq!(qt, Matrix::from_i64(&[&[0, 1], &[-1, 2]]));
    assert_eq!(&q * &qt, Matrix::identity(2));
    let (qc, qtc) = quantum_traces_closed(&unitary_beta(&mu).unwrap());
    assert_eq!((qc, qtc), (q.clone(), qt));
    let w0 = w_vector(&mu, 0).unwrap();
    let w1 = w_vector(&mu, 1).unwrap();
    assert_eq!(&q * &w0, w0);
    assert_eq!(&q * &w1, &w0 + &w1);
    assert!(unitary_jordan_residual(&mu).unwrap().is_zero());
}

#[test]
fn strict_rime_at_beta_one_is_not_skew_invertible() {
    let r = strict_rime_r(&ints(&[1, 2]), &rat(1)).unwrap();
    assert!(matches!(quantum_traces(&r), Err(Error::NotSkewInvertible)));
    assert!(nonunitary_eigen_residual(&ints(&[1, 2]), &rat(1)).unwrap().is_zero());
}

#[test]
fn skew_inverse_trace_matches_closed_form_nonunitary() {
    for (phi, beta) in [(ints(&[1, 2]), rat(3)), (ints(&[1, 3, -2]), frac(2, 5))] {
        let r = strict_rime_r(&phi, &beta).unwrap();
        let traces = quantum_traces(&r).unwrap();
        assert_eq!(traces, quantum_traces_closed(&strict_beta(&phi, &beta).unwrap()));
        let n = phi.len();
        let prod = &traces.0 * &traces.1;
        assert_eq!(prod, Matrix::identity(n).scale(&powi(&(rat(1) - &beta), n as i64 - 1)));
        assert!(nonunitary_eigen_residual(&phi, &beta).unwrap().is_zero());
    }
}

#[test]
fn invariance_y_properties() {
    let phi = ints(&[1, 2, 4]);
    let beta = frac(1, 3);
    let r = strict_rime_r(&phi, &beta).unwrap();
    let (q, qt) = quantum_traces(&r).unwrap();
    let one = rat(1);
    assert_eq!(invariance_y(&phi, &(&one - &beta), &one).unwrap(), q);
    assert_eq!(invariance_y(&phi, &one, &(&one - &beta)).unwrap(), qt);
    assert_eq!(invariance_y(&phi, &one, &one).unwrap(), Matrix::identity(3));
    let (u, v) = (frac(2, 3), rat(-3));
    let y = invariance_y(&phi, &u, &v).unwrap();
    assert_eq!(y.det(), powi(&(&u * &v), 3));
    assert!(invariance_residual(&r, &y).is_zero());
    let (u2, v2) = (rat(5), frac(-1, 2));
    let y2 = invariance_y(&phi, &u2, &v2).unwrap();
    assert_eq!(&y * &y2, invariance_y(&phi, &(&u * &u2), &(&v * &v2)).unwrap());
    assert!(invariance_y(&phi, &rat(0), &one).is_err());
}

#[test]
fn invariance_y0_properties() {
    let mu = ints(&[0, 1, 3]);
    assert_eq!(invariance_y0(&mu, &rat(0)).unwrap(), Matrix::identity(3));
    let r = unitary_rime_r(&mu).unwrap();
    let (q, qt) = quantum_traces(&r).unwrap();
    assert_eq!(invariance_y0(&mu, &rat(-1)).unwrap(), q);
    assert_eq!(invariance_y0(&mu, &rat(1)).unwrap(), qt);
    let (a1, a2) = (frac(1, 2), frac(1, 3));
    let prod = &invariance_y0(&mu, &a1).unwrap() * &invariance_y0(&mu, &a2).unwrap();
    assert_eq!(prod, invariance_y0(&mu, &(&a1 + &a2)).unwrap());
    assert!(invariance_residual(&r, &invariance_y0(&mu, &frac(-7, 4)).unwrap()).is_zero());
    let q2 = invariance_y0(&ints(&[0, 1]), &rat(-1)).unwrap();
    assert_eq!(q2, Matrix::from_i64(&[&[2, -1], &[1, 0]]));
}

#[test]
fn generators_are_traceless_and_commute() {
    let phi = ints(&[1, 2, 4]);
    let eta = invariance_generator(&GeneratorKind::Nonunitary(phi.clone())).unwrap();
    assert_eq!(eta.trace(), rat(0));
    let r = strict_rime_r(&phi, &frac(3, 7)).unwrap();
    assert!(generator_residual(&r, &eta).is_zero());

    let mu = ints(&[0, 1, 3]);
    let eta0 = invariance_generator(&GeneratorKind::Unitary(mu.clone())).unwrap();
    assert_eq!(eta0.trace(), rat(0));
    assert!(generator_residual(&unitary_rime_r(&mu).unwrap(), &eta0).is_zero());

    let e2 = invariance_generator(&GeneratorKind::Unitary(ints(&[0, 1]))).unwrap();
    assert_eq!(e2.at(1, 1), &rat(-1));
    assert_eq!(e2.at(1, 2), &rat(1));
    assert_eq!(e2.at(2, 1), &rat(-1));
    assert_eq!(e2.at(2, 2), &rat(1));
}

#[test]
fn literal_printed_eta_diagonal_is_not_an_invariance_generator() {
    // Oracle for the corrected diagonal: the displayed Σ 1/(φ_j−φ_l) breaks both properties.
    let phi = ints(&[1, 2, 4]);
    let n = 3;
    let half = frac(1, 1);
    let literal = Matrix::from_fn(n, n, |i, j| {
        if i == j {
            (0..n)
                .filter(|&l| l != j)
                .fold(-half.clone(), |acc, l| acc + (&phi[j] - &phi[l]).recip())
        } else {
            &phi[j] / (&phi[j] - &phi[i])
        }
    });
    let r = strict_rime_r(&phi, &frac(1, 2)).unwrap();
    assert!(!generator_residual(&r, &literal).is_zero());
    assert_ne!(literal.trace(), rat(0));
}

#[test]
fn unitary_quantum_trace_is_single_jordan_block() {
    let mu = ints(&[0, 1, 3, 7]);
    let (q, _) = quantum_traces(&unitary_rime_r(&mu).unwrap()).unwrap();
    let nil = &q - &Matrix::identity(4);
    assert!(!nil.pow(3).is_zero());
    assert!(nil.pow(4).is_zero());
}

#[test]
fn appendix_system_vanishes_on_solutions() {
    let strict = RimeData::from_beta(&strict_beta(&ints(&[1, 2, 3]), &rat(1)).unwrap());
    for (name, v) in appendix_a_residuals(&strict) {
        assert_eq!(v, rat(0), "{name} on strict data");
    }
    let ice = ice_standard_data(3, &rat(3)).unwrap();
    assert!(yb_residual(&assemble_rime(&ice)).is_zero());
    for (name, v) in appendix_a_residuals(&ice) {
        assert_eq!(v, rat(0), "{name} on ice data");
    }
}

#[test]
fn appendix_system_detects_beta_sum_violation() {
    let mut d = RimeData::from_beta(&strict_beta(&ints(&[1, 2, 3]), &rat(1)).unwrap());
    d.beta[(0, 1)] += rat(1);
    let res = appendix_a_residuals(&d);
    assert!(res.values().any(|v| *v != rat(0)));
    assert!(!yb_residual(&assemble_rime(&d)).is_zero());
}

#[test]
fn gamma_pairing_holds_for_constructors() {
    let d = RimeData::from_operator(&strict_rime_r(&ints(&[2, 5, -1]), &frac(3, 2)).unwrap());
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                assert_eq!(d.gamma_p[(i, j)], -d.gamma[(j, i)].clone());
            }
        }
    }
}

#[test]
fn reversal_properties() {
    let mu = ints(&[0, 1, 3]);
    assert!(reversal_residual_unitary(&mu).unwrap().is_zero());
    let phi = ints(&[1, 2, 4]);
    assert!(reversal_residual_nonunitary(&phi, &frac(1, 3)).unwrap().is_zero());
}

fn qp_relations(beta: &Matrix) -> Matrix {
    let n = beta.rows();
    let idx = |a: usize, b: usize| a * n + b;
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            // [x^i,x^j] + (β_ij x^i + β_ji x^j)(x^i − x^j)
            let mut row = vec![rat(0); n * n];
            row[idx(i, j)] += rat(1);
            row[idx(j, i)] -= rat(1);
            row[idx(i, i)] += &beta[(i, j)];
            row[idx(i, j)] -= &beta[(i, j)];
            row[idx(j, i)] += &beta[(j, i)];
            row[idx(j, j)] -= &beta[(j, i)];
            rows.push(row);
        }
    }
    relation_basis(&Matrix::from_rows(rows))
}

#[test]
fn right_even_space_matches_quadratic_relations() {
    for (phi, beta) in [(ints(&[1, 2]), rat(1)), (ints(&[1, 3, 4]), frac(2, 3))] {
        let b = strict_beta(&phi, &beta).unwrap();
        let r = assemble_rime(&RimeData::from_beta(&b));
        let rel = quantum_space_relations(&r, &rat(1), Side::Right);
        assert_eq!(rel, qp_relations(&b));
    }
}

#[test]
fn left_even_and_right_odd_spaces_are_classical() {
    let n = 3;
    let beta = frac(1, 2);
    let r = strict_rime_r(&ints(&[1, 2, 5]), &beta).unwrap();
    let idx = |a: usize, b: usize| a * n + b;
    let mut comm = Vec::new();
    let mut anti = Vec::new();
    for i in 0..n {
        for j in i..n {
            let mut a = vec![rat(0); n * n];
            a[idx(i, j)] += rat(1);
            a[idx(j, i)] += rat(1);
            anti.push(a);
            if i != j {
                let mut c = vec![rat(0); n * n];
                c[idx(i, j)] = rat(1);
                c[idx(j, i)] = rat(-1);
                comm.push(c);
            }
        }
    }
    let left = quantum_space_relations(&r, &Parity::Even.eigenvalue(&beta), Side::Left);
    assert_eq!(left, relation_basis(&Matrix::from_rows(comm)));
    let right_odd = quantum_space_relations(&r, &Parity::Odd.eigenvalue(&beta), Side::Right);
    assert_eq!(right_odd, relation_basis(&Matrix::from_rows(anti)));
}

fn left_odd_relations(b: &Matrix, beta: &Rational, square: &Rational, skip_self: bool) -> Matrix {
    // square·ξ_i² + ξ_i ρ + (1−β) ρ ξ_i and {ξ_i,ξ_j} − β_ij ξ_i ξ_j − β_ji ξ_j ξ_i
    let n = b.rows();
    let idx = |a: usize, c: usize| a * n + c;
    let mut rows = Vec::new();
    for i in 0..n {
        let mut row = vec![rat(0); n * n];
        row[idx(i, i)] += square;
        for j in (0..n).filter(|&j| !(skip_self && j == i)) {
            row[idx(i, j)] += rat(1);
            row[idx(j, i)] += rat(1) - beta;
        }
        rows.push(row);
        for j in (0..n).filter(|&j| j != i) {
            let mut row = vec![rat(0); n * n];
            row[idx(i, j)] += rat(1) - &b[(i, j)];
            row[idx(j, i)] += rat(1) - &b[(j, i)];
            rows.push(row);
        }
    }
    relation_basis(&Matrix::from_rows(rows))
}

#[test]
fn left_odd_space_relations() {
    for (phi, beta) in [(ints(&[1, 2]), frac(1, 3)), (ints(&[1, 2, 5]), frac(-3, 2))] {
        let b = strict_beta(&phi, &beta).unwrap();
        let r = assemble_rime(&RimeData::from_beta(&b));
        let got = quantum_space_relations(&r, &Parity::Odd.eigenvalue(&beta), Side::Left);
        // With ρ summed over j ≠ i the square coefficient 2−β is exact.
        assert_eq!(got, left_odd_relations(&b, &beta, &(rat(2) - &beta), true));
        // With ρ over all j the square term cancels.
        assert_eq!(got, left_odd_relations(&b, &beta, &rat(0), false));
        assert_ne!(got, left_odd_relations(&b, &beta, &(rat(2) - &beta), false));
    }
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=8).prop_filter_map("nonzero", |(p, q)| (p != 0).then(|| frac(p, q)))
}

fn distinct_vec(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec(small_rational(), n).prop_filter("distinct", |v| {
        require_distinct(v, "v").is_ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn strict_family_is_hecke_and_braided(phi in distinct_vec(3), beta in small_rational()) {
        let r = strict_rime_r(&phi, &beta).unwrap();
        prop_assert!(yb_residual(&r).is_zero());
        prop_assert!(hecke_residual(&r, &beta).is_zero());
        prop_assert!(yb_residual(&r.reversed()).is_zero());
    }

    #[test]
    fn unitary_family_is_involutive(mu in distinct_vec(3)) {
        let r = unitary_rime_r(&mu).unwrap();
        prop_assert_eq!(r.square(), Operator2::identity(3));
        prop_assert!(yb_residual(&r).is_zero());
    }

    #[test]
    fn closed_quantum_traces_match_skew_inverse(phi in distinct_vec(3), beta in small_rational()) {
        prop_assume!(beta != rat(1));
        let b = strict_beta(&phi, &beta).unwrap();
        let r = assemble_rime(&RimeData::from_beta(&b));
        prop_assert_eq!(quantum_traces(&r).unwrap(), quantum_traces_closed(&b));
    }
}
