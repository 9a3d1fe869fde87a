use proptest::prelude::*;
use yibre::blocks::{block_matrix, BlockKind};
use yibre::kernel::{
    elem_sym, elem_sym_omit, format_rational, frac, parse_rational, rat, vandermonde, vandermonde_inverse,
};
use yibre::poisson::{varpi, varpi_identities};
use yibre::rime::{strict_rime_r, unitary_rime_r};
use yibre::suite::{run_check, Suite, SuiteConfig};
use yibre::tensor::yb_residual;
use yibre::{Matrix, Rational};

fn small() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=8).prop_map(|(p, q)| frac(p, q))
}

fn nonzero() -> impl Strategy<Value = Rational> {
    small().prop_filter("nonzero", |x| *x != rat(0))
}

fn distinct(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(small(), n).prop_filter("distinct", |v| {
        (0..v.len()).all(|i| (i + 1..v.len()).all(|j| v[i] != v[j]))
    })
}

fn matrix(n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(small(), n * n).prop_map(move |v| Matrix::from_fn(n, n, |i, j| v[i * n + j].clone()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn rationals_round_trip_through_text(x in small()) {
        prop_assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
    }

    #[test]
    fn omitted_symmetric_functions_sum(v in prop::collection::vec(small(), 1..6), c in 0usize..6) {
        let n = v.len();
        prop_assume!(c <= n);
        let total: Rational = (1..=n).map(|i| elem_sym_omit(&v, c, i).unwrap()).sum();
        prop_assert_eq!(total, rat((n - c) as i64) * elem_sym(&v, c));
    }

    #[test]
    fn symmetric_function_recursion(v in prop::collection::vec(small(), 1..6), r in 1usize..6) {
        for i in 1..=v.len() {
            let lhs = elem_sym(&v, r);
            let rhs = elem_sym_omit(&v, r, i).unwrap() + &v[i - 1] * elem_sym_omit(&v, r - 1, i).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn vandermonde_inverse_is_two_sided(v in distinct(4)) {
        let m = vandermonde(&v);
        let inv = vandermonde_inverse(&v).unwrap();
        prop_assert_eq!(&m * &inv, Matrix::identity(4));
        prop_assert_eq!(&inv * &m, Matrix::identity(4));
    }

    #[test]
    fn reversal_preserves_ybe(phi in distinct(3), beta in nonzero(), mu in distinct(3)) {
        for r in [strict_rime_r(&phi, &beta).unwrap(), unitary_rime_r(&mu).unwrap()] {
            prop_assert!(yb_residual(&r).is_zero());
            prop_assert!(yb_residual(&r.reversed()).is_zero());
        }
    }

    #[test]
    fn catalog_reversal_preserves_ybe(q in nonzero().prop_filter("q^2 != 1", |q| *q != rat(1) && *q != rat(-1))) {
        for kind in BlockKind::samples(&q) {
            let r = block_matrix(&kind).unwrap();
            prop_assert_eq!(yb_residual(&r).is_zero(), yb_residual(&r.reversed()).is_zero());
        }
    }

    #[test]
    fn varpi_is_an_involution(y1 in matrix(3), y2 in matrix(3)) {
        prop_assert_eq!(varpi(&varpi(&y1)), y1.clone());
        for r in varpi_identities(&y1, &y2) {
            prop_assert!(r.is_zero());
        }
    }

    #[test]
    fn check_reports_depend_only_on_inputs(seed in any::<u64>()) {
        let cfg = SuiteConfig { suite: Suite::Cg, n: 2, seed, draws: 2, mutation: None };
        let a = run_check("cg.equivalence", &cfg).unwrap();
        let b = run_check("cg.equivalence", &cfg).unwrap();
        prop_assert_eq!(a, b);
    }
}
