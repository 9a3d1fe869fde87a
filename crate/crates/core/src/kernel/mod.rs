//! Exact rational scalars, elementary symmetric functions and Vandermonde inversion.

mod dual;
mod linalg;

pub use dual::Dual;
pub use linalg::Matrix;

use crate::error::{Error, Result};
use num::{BigInt, BigRational, One, Zero};

/// The only scalar type: an arbitrary-precision rational in canonical form.
pub type Rational = BigRational;

/// A rational parameter vector such as φ, μ or ψ.
pub type RationalVector = Vec<Rational>;

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The fraction `num/den`; panics when `den` is zero.
pub fn frac(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Vector of integers as rationals.
pub fn rats(values: &[i64]) -> RationalVector {
    values.iter().map(|&v| rat(v)).collect()
}

/// Parses `"p/q"` or `"p"` into a canonical rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::MalformedRational(s.to_string());
    let t = s.trim();
    let (p, q) = match t.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (t, "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

/// Parses a comma-separated list of rationals.
pub fn parse_vector(s: &str) -> Result<RationalVector> {
    s.split(',').map(parse_rational).collect()
}

/// Serializes a rational as `"p/q"`, or `"p"` when the denominator is 1.
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Step function θ(k): true iff k > 0.
pub fn theta(k: i64) -> bool {
    k > 0
}

/// θ(k) as 0 or 1.
pub fn theta_r(k: i64) -> Rational {
    if theta(k) {
        Rational::one()
    } else {
        Rational::zero()
    }
}

/// Kronecker delta as a rational.
pub fn delta(a: usize, b: usize) -> Rational {
    if a == b {
        Rational::one()
    } else {
        Rational::zero()
    }
}

/// Integer power with negative exponents allowed; `x` must be nonzero when `e < 0`.
pub fn powi(x: &Rational, e: i64) -> Rational {
    if e >= 0 {
        num::pow(x.clone(), e as usize)
    } else {
        assert!(!x.is_zero(), "negative power of zero");
        num::pow(x.recip(), (-e) as usize)
    }
}

/// Rational square root when `x` is the square of a rational.
pub fn rational_sqrt(x: &Rational) -> Option<Rational> {
    use num::Signed;
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    (&n * &n == *x.numer() && &d * &d == *x.denom()).then(|| Rational::new(n, d))
}

/// Binomial coefficient C(n, k), zero outside 0 ≤ k ≤ n.
pub fn binomial(n: i64, k: i64) -> Rational {
    if k < 0 || n < 0 || k > n {
        return Rational::zero();
    }
    let mut acc = BigInt::one();
    for t in 0..k {
        acc = acc * BigInt::from(n - t) / BigInt::from(t + 1);
    }
    Rational::from_integer(acc)
}

/// Elementary symmetric polynomial e_k of `values`.
pub fn elem_sym(values: &[Rational], k: usize) -> Rational {
    // e[j] after processing a prefix holds e_j of that prefix.
    let mut e = vec![Rational::zero(); k + 1];
    e[0] = Rational::one();
    for v in values {
        for j in (1..=k).rev() {
            let t = &e[j - 1] * v;
            e[j] += t;
        }
    }
    e[k].clone()
}

/// e_k of `values` with the 1-based entry `omit` removed.
pub fn elem_sym_omit(values: &[Rational], k: usize, omit: usize) -> Result<Rational> {
    if omit == 0 || omit > values.len() {
        return Err(Error::IndexOutOfRange(format!(
            "omit={omit} for length {}",
            values.len()
        )));
    }
    let rest: Vec<Rational> = values
        .iter()
        .enumerate()
        .filter(|(i, _)| i + 1 != omit)
        .map(|(_, v)| v.clone())
        .collect();
    Ok(elem_sym(&rest, k))
}

/// Fails unless the entries are pairwise distinct.
pub fn require_distinct(values: &[Rational], what: &str) -> Result<()> {
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            if values[i] == values[j] {
                return Err(Error::DegenerateParameters(format!(
                    "{what} has repeated entry at positions {} and {}",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    Ok(())
}

/// Fails if `x` is zero.
pub fn require_nonzero(x: &Rational, what: &str) -> Result<()> {
    if x.is_zero() {
        Err(Error::DegenerateParameters(format!("{what} must be nonzero")))
    } else {
        Ok(())
    }
}

/// Vandermonde matrix V^j_k = φ_k^{n−j}.
pub fn vandermonde(values: &[Rational]) -> Matrix {
    let n = values.len();
    Matrix::from_fn(n, n, |r, c| powi(&values[c], (n - 1 - r) as i64))
}

/// Inverse of [`vandermonde`] via Lagrange interpolation:
/// (V⁻¹)^k_j = (−1)^{j−1} e_{j−1}^k̂ / Π_{l≠k}(φ_k−φ_l).
pub fn vandermonde_inverse(values: &[Rational]) -> Result<Matrix> {
    require_distinct(values, "vandermonde nodes")?;
    let n = values.len();
    let mut out = Matrix::zeros(n, n);
    for k in 0..n {
        let mut den = Rational::one();
        for l in 0..n {
            if l != k {
                den *= &values[k] - &values[l];
            }
        }
        for j in 0..n {
            let mut v = elem_sym_omit(values, j, k + 1)? / &den;
            if j % 2 == 1 {
                v = -v;
            }
            out[(k, j)] = v;
        }
    }
    Ok(out)
}

/// Product Π_{l≠k} f(l) over 0-based indices.
pub fn prod_except<F: Fn(usize) -> Rational>(n: usize, skip: &[usize], f: F) -> Rational {
    let mut p = Rational::one();
    for l in 0..n {
        if !skip.contains(&l) {
            p *= f(l);
        }
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_sqrt_of_squares() {
        assert_eq!(rational_sqrt(&frac(9, 4)), Some(frac(3, 2)));
        assert_eq!(rational_sqrt(&rat(0)), Some(rat(0)));
        assert_eq!(rational_sqrt(&rat(2)), None);
        assert_eq!(rational_sqrt(&rat(-4)), None);
    }

    #[test]
    fn elem_sym_examples() {
        assert_eq!(elem_sym(&rats(&[1, 2, 3]), 2), rat(11));
        assert_eq!(elem_sym(&rats(&[5, 7]), 0), rat(1));
        assert_eq!(elem_sym(&rats(&[1, 2]), 3), rat(0));
    }

    #[test]
    fn elem_sym_omit_examples() {
        assert_eq!(elem_sym_omit(&rats(&[1, 2, 3]), 1, 2).unwrap(), rat(4));
        assert_eq!(elem_sym_omit(&rats(&[1, 2]), 1, 1).unwrap(), rat(2));
        assert_eq!(elem_sym_omit(&rats(&[4, 9, 1]), 0, 3).unwrap(), rat(1));
        assert!(elem_sym_omit(&rats(&[1, 2]), 1, 3).is_err());
        assert!(elem_sym_omit(&rats(&[1, 2]), 1, 0).is_err());
    }

    #[test]
    fn vandermonde_inverse_examples() {
        let v = rats(&[1, 2]);
        let inv = vandermonde_inverse(&v).unwrap();
        assert_eq!(inv, Matrix::from_i64(&[&[-1, 2], &[1, -1]]));
        assert_eq!(vandermonde(&v), Matrix::from_i64(&[&[1, 2], &[1, 1]]));
        assert_eq!(vandermonde_inverse(&rats(&[5])).unwrap(), Matrix::identity(1));
        let v3 = rats(&[1, 2, 3]);
        let inv3 = vandermonde_inverse(&v3).unwrap();
        assert_eq!(&vandermonde(&v3) * &inv3, Matrix::identity(3));
        assert!(matches!(
            vandermonde_inverse(&rats(&[1, 1])),
            Err(Error::DegenerateParameters(_))
        ));
    }

    #[test]
    fn rational_io_round_trip() {
        assert_eq!(parse_rational("-6/4").unwrap(), frac(-3, 2));
        assert_eq!(format_rational(&frac(-3, 2)), "-3/2");
        assert_eq!(format_rational(&rat(7)), "7");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(parse_vector("1, 2,1/3").unwrap(), vec![rat(1), rat(2), frac(1, 3)]);
    }

    #[test]
    fn binomial_and_powers() {
        assert_eq!(binomial(5, 2), rat(10));
        assert_eq!(binomial(3, 4), rat(0));
        assert_eq!(powi(&rat(2), -3), frac(1, 8));
        assert!(theta(1) && !theta(0) && !theta(-2));
    }
}
