//! Quadratic rime Poisson brackets: the three-parameter pencil, Jacobi verification, the
//! invariance generator and its sl(2) origin, discriminant classification with rational
//! normal-form witnesses, the classical limit of the rime quantum planes, and linear rime brackets.

use crate::bezout::lagrange_basis;
use crate::error::{Error, Result};
use crate::kernel::{frac, rat, require_distinct, require_nonzero, Dual, Matrix, Rational};
use crate::rime::{strict_beta_alt, unitary_beta};
use crate::tensor::Operator1;
use num::{One, Zero};
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

/// A commutative polynomial in x¹..xⁿ; monomials are sorted lists of 0-based variable indices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<Vec<usize>, Rational>,
}

impl Polynomial {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Self::default()
    }

    /// The constant 1.
    pub fn one() -> Self {
        Self::monomial(vec![], Rational::one())
    }

    /// The variable with 0-based index `i`.
    pub fn var(i: usize) -> Self {
        Self::monomial(vec![i], Rational::one())
    }

    /// c times the monomial with the given variable multiset.
    pub fn monomial(mut vars: Vec<usize>, c: Rational) -> Self {
        vars.sort_unstable();
        let mut p = Self::zero();
        p.add_term(vars, c);
        p
    }

    fn add_term(&mut self, vars: Vec<usize>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(vars) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the monomial with the given variable multiset.
    pub fn coefficient(&self, vars: &[usize]) -> Rational {
        let mut key = vars.to_vec();
        key.sort_unstable();
        self.terms.get(&key).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero terms in monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Rational)> {
        self.terms.iter()
    }

    /// Scalar multiple.
    pub fn scale(&self, s: &Rational) -> Self {
        let mut p = Self::zero();
        for (k, v) in &self.terms {
            p.add_term(k.clone(), v * s);
        }
        p
    }

    /// Partial derivative with respect to the 0-based variable `l`.
    pub fn derivative(&self, l: usize) -> Self {
        let mut p = Self::zero();
        for (k, v) in &self.terms {
            let count = k.iter().filter(|&&x| x == l).count();
            if count > 0 {
                let mut m = k.clone();
                let pos = m.iter().position(|&x| x == l).expect("present");
                m.remove(pos);
                p.add_term(m, v * rat(count as i64));
            }
        }
        p
    }

    /// First nonzero term as a witness string.
    pub fn witness(&self) -> Option<(String, Rational)> {
        self.terms.iter().next().map(|(k, v)| {
            let name: Vec<String> = k.iter().map(|i| format!("x{}", i + 1)).collect();
            (name.join("*"), v.clone())
        })
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, o: &Polynomial) -> Polynomial {
        let mut p = self.clone();
        for (k, v) in &o.terms {
            p.add_term(k.clone(), v.clone());
        }
        p
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, o: &Polynomial) -> Polynomial {
        self + &o.scale(&-Rational::one())
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, o: &Polynomial) -> Polynomial {
        let mut p = Polynomial::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let mut m = a.clone();
                m.extend_from_slice(b);
                m.sort_unstable();
                p.add_term(m, x * y);
            }
        }
        p
    }
}

/// A Poisson bracket on x¹..xⁿ given by the polynomials f^{ij} = {xⁱ, xʲ}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyBracket {
    n: usize,
    f: Vec<Vec<Polynomial>>,
}

/// Quadratic brackets use the same representation.
pub type QuadraticBracket = PolyBracket;

impl PolyBracket {
    /// Builds from f^{ij} for i < j (1-based), extended by antisymmetry.
    pub fn from_upper<F: FnMut(usize, usize) -> Polynomial>(n: usize, mut f: F) -> Self {
        let mut table = vec![vec![Polynomial::zero(); n]; n];
        for i in 1..=n {
            for j in i + 1..=n {
                let p = f(i, j);
                table[j - 1][i - 1] = p.scale(&-Rational::one());
                table[i - 1][j - 1] = p;
            }
        }
        PolyBracket { n, f: table }
    }

    /// The zero bracket.
    pub fn zero(n: usize) -> Self {
        Self::from_upper(n, |_, _| Polynomial::zero())
    }

    /// Number of variables.
    pub fn dim(&self) -> usize {
        self.n
    }

    /// {xⁱ, xʲ} with 1-based indices.
    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.f[i - 1][j - 1]
    }

    /// Coefficient of x^k x^l in {xⁱ, xʲ}, 1-based.
    pub fn coefficient(&self, i: usize, j: usize, k: usize, l: usize) -> Rational {
        self.get(i, j).coefficient(&[k - 1, l - 1])
    }

    /// True when every f^{ij} vanishes.
    pub fn is_zero(&self) -> bool {
        self.f.iter().flatten().all(Polynomial::is_zero)
    }

    /// Entrywise sum with a scalar multiple of another bracket.
    pub fn add_scaled(&self, other: &Self, s: &Rational) -> Self {
        Self::from_upper(self.n, |i, j| self.get(i, j) + &other.get(i, j).scale(s))
    }

    /// Bracket of two polynomials by the Leibniz rule.
    pub fn apply(&self, p: &Polynomial, q: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for k in 0..self.n {
            let dp = p.derivative(k);
            if dp.is_zero() {
                continue;
            }
            for l in 0..self.n {
                let dq = q.derivative(l);
                if !dq.is_zero() {
                    out = &out + &(&(&dp * &dq) * &self.f[k][l]);
                }
            }
        }
        out
    }

    /// The bracket in the rescaled variables x^i = d_i x̃^i.
    pub fn rescaled(&self, d: &[Rational]) -> Self {
        Self::from_upper(self.n, |i, j| {
            let mut p = Polynomial::zero();
            for (vars, c) in self.get(i, j).terms() {
                let mut s = c / (&d[i - 1] * &d[j - 1]);
                for &v in vars {
                    s *= &d[v];
                }
                p = &p + &Polynomial::monomial(vars.clone(), s);
            }
            p
        })
    }
}

/// Cyclic sums {xⁱ,{xʲ,xᵏ}} + cyclic for i < j < k, keeping only nonzero ones.
pub fn jacobi_residual(br: &PolyBracket) -> BTreeMap<(usize, usize, usize), Polynomial> {
    let n = br.dim();
    let mut out = BTreeMap::new();
    let x = |i: usize| Polynomial::var(i - 1);
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                let t1 = br.apply(&x(i), br.get(j, k));
                let t2 = br.apply(&x(j), br.get(k, i));
                let t3 = br.apply(&x(k), br.get(i, j));
                let s = &(&t1 + &t2) + &t3;
                if !s.is_zero() {
                    out.insert((i, j, k), s);
                }
            }
        }
    }
    out
}

/// The quadratic polynomial ϱ(t) = at² + bt + c.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rho {
    /// t² coefficient.
    pub a: Rational,
    /// t coefficient.
    pub b: Rational,
    /// Constant term.
    pub c: Rational,
}

impl Rho {
    /// at² + bt + c.
    pub fn new(a: Rational, b: Rational, c: Rational) -> Self {
        Rho { a, b, c }
    }

    /// ϱ(t).
    pub fn eval(&self, t: &Rational) -> Rational {
        &self.a * t * t + &self.b * t + &self.c
    }

    /// ϱ′(t).
    pub fn deriv(&self, t: &Rational) -> Rational {
        rat(2) * &self.a * t + &self.b
    }

    /// The discriminant b² − 4ac.
    pub fn discriminant(&self) -> Rational {
        &self.b * &self.b - rat(4) * &self.a * &self.c
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero()
    }
}

/// Parameters of a pencil member: distinct ψ and the polynomial ϱ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PencilParams {
    /// Pairwise distinct points.
    pub psi: Vec<Rational>,
    /// The pencil polynomial.
    pub rho: Rho,
}

impl PencilParams {
    /// Checks distinctness of ψ.
    pub fn new(psi: Vec<Rational>, rho: Rho) -> Result<Self> {
        require_distinct(&psi, "psi")?;
        Ok(PencilParams { psi, rho })
    }

    fn rho_at(&self, i: usize) -> Rational {
        self.rho.eval(&self.psi[i - 1])
    }

    fn psi_diff(&self, i: usize, j: usize) -> Rational {
        &self.psi[i - 1] - &self.psi[j - 1]
    }

    /// ξ_i = Σ_{s≠i} 1/(ψ_s − ψ_i).
    pub fn xi(&self, i: usize) -> Rational {
        (1..=self.psi.len())
            .filter(|&s| s != i)
            .map(|s| self.psi_diff(s, i).recip())
            .sum()
    }
}

fn quad(i: usize, j: usize) -> [Polynomial; 3] {
    let (xi, xj) = (Polynomial::var(i - 1), Polynomial::var(j - 1));
    [&xi * &xi, &xj * &xj, &xi * &xj]
}

/// Pencil bracket in the form with separate (xⁱ)², (xʲ)² and xⁱxʲ terms.
pub fn pencil_form_monomial(p: &PencilParams) -> PolyBracket {
    PolyBracket::from_upper(p.psi.len(), |i, j| {
        let d = p.psi_diff(i, j);
        let (ri, rj) = (p.rho_at(i), p.rho_at(j));
        let [xii, xjj, xij] = quad(i, j);
        let mixed = &d * &p.rho.a - (&ri + &rj) / &d;
        &(&xii.scale(&(&rj / &d)) + &xjj.scale(&(&ri / &d))) + &xij.scale(&mixed)
    })
}

/// Pencil bracket in the factored form (ϱ_j xⁱ − ϱ_i xʲ)(xⁱ − xʲ)/ψ_ij + aψ_ij xⁱxʲ.
pub fn pencil_form_factored(p: &PencilParams) -> PolyBracket {
    PolyBracket::from_upper(p.psi.len(), |i, j| {
        let d = p.psi_diff(i, j);
        let (xi, xj) = (Polynomial::var(i - 1), Polynomial::var(j - 1));
        let lin = &xi.scale(&p.rho_at(j)) - &xj.scale(&p.rho_at(i));
        let first = (&lin * &(&xi - &xj)).scale(&d.recip());
        &first + &(&xi * &xj).scale(&(&p.rho.a * &d))
    })
}

/// Pencil bracket in the homogeneous form v²ϱ(u/v)/ψ_ij with u = ψ_j xⁱ − ψ_i xʲ, v = xⁱ − xʲ.
pub fn pencil_form_homogeneous(p: &PencilParams) -> PolyBracket {
    PolyBracket::from_upper(p.psi.len(), |i, j| {
        let (xi, xj) = (Polynomial::var(i - 1), Polynomial::var(j - 1));
        let u = &xi.scale(&p.psi[j - 1]) - &xj.scale(&p.psi[i - 1]);
        let v = &xi - &xj;
        let sum = &(&(&u * &u).scale(&p.rho.a) + &(&u * &v).scale(&p.rho.b)) + &(&v * &v).scale(&p.rho.c);
        sum.scale(&p.psi_diff(i, j).recip())
    })
}

/// The pencil member of (ψ, ϱ), after checking that its three written forms agree.
pub fn pencil_bracket(p: &PencilParams) -> Result<PolyBracket> {
    require_distinct(&p.psi, "psi")?;
    let a = pencil_form_monomial(p);
    if a != pencil_form_factored(p) || a != pencil_form_homogeneous(p) {
        return Err(Error::InvalidInput(
            "the written forms of the pencil bracket disagree".into(),
        ));
    }
    Ok(a)
}

/// Coefficients of a rime bracket {xⁱ,xʲ} = a_ij(xⁱ)² − a_ji(xʲ)² + 2ν_ij xⁱxʲ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RimeCoefficients {
    /// a_ij with zero diagonal.
    pub a: Matrix,
    /// Antisymmetric ν_ij.
    pub nu: Matrix,
}

/// Extracts rime coefficients, or None when some {xⁱ,xʲ} involves other variables.
pub fn rime_fit(br: &PolyBracket) -> Option<RimeCoefficients> {
    let n = br.dim();
    let mut a = Matrix::zeros(n, n);
    let mut nu = Matrix::zeros(n, n);
    for i in 1..=n {
        for j in i + 1..=n {
            let p = br.get(i, j);
            let allowed = |vars: &Vec<usize>| vars.iter().all(|&v| v == i - 1 || v == j - 1);
            if !p.terms().all(|(k, _)| k.len() == 2 && allowed(k)) {
                return None;
            }
            a[(i - 1, j - 1)] = p.coefficient(&[i - 1, i - 1]);
            a[(j - 1, i - 1)] = -p.coefficient(&[j - 1, j - 1]);
            let v = p.coefficient(&[i - 1, j - 1]) / rat(2);
            nu[(j - 1, i - 1)] = -v.clone();
            nu[(i - 1, j - 1)] = v;
        }
    }
    Some(RimeCoefficients { a, nu })
}

/// a_ij a_jk + a_ik(ν_ij + ν_jk) over ordered triples of distinct indices, nonzero ones only.
pub fn rime_jacobi_condition(rc: &RimeCoefficients) -> BTreeMap<(usize, usize, usize), Rational> {
    let n = rc.a.rows();
    let mut out = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if i == j || j == k || i == k {
                    continue;
                }
                let v = &rc.a[(i, j)] * &rc.a[(j, k)] + &rc.a[(i, k)] * (&rc.nu[(i, j)] + &rc.nu[(j, k)]);
                if !v.is_zero() {
                    out.insert((i + 1, j + 1, k + 1), v);
                }
            }
        }
    }
    out
}

/// First-order variation of the bracket under x ↦ x + εAx.
pub fn lie_derivative(br: &PolyBracket, a: &Operator1) -> PolyBracket {
    let n = br.dim();
    let flow: Vec<Polynomial> = (0..n)
        .map(|k| {
            (0..n).fold(Polynomial::zero(), |acc, l| {
                &acc + &Polynomial::var(l).scale(&a[(k, l)])
            })
        })
        .collect();
    PolyBracket::from_upper(n, |i, j| {
        let mut out = Polynomial::zero();
        for k in 1..=n {
            let aik = &a[(i - 1, k - 1)];
            let ajk = &a[(j - 1, k - 1)];
            out = &out + &br.get(k, j).scale(aik);
            out = &out + &br.get(i, k).scale(ajk);
            out = &out - &(&flow[k - 1] * &br.get(i, j).derivative(k - 1));
        }
        out
    })
}

/// The generator 𝒜(ϱ) of the invariance group of a pencil member.
pub fn invariance_generator(p: &PencilParams) -> Result<Operator1> {
    require_distinct(&p.psi, "psi")?;
    let n = p.psi.len();
    let half = frac(n as i64 - 1, 2);
    Ok(Matrix::from_fn(n, n, |r, c| {
        let (i, j) = (r + 1, c + 1);
        if i != j {
            p.rho_at(i) / p.psi_diff(i, j)
        } else {
            &half * p.rho.deriv(&p.psi[i - 1]) + p.rho_at(i) * p.xi(i)
        }
    }))
}

/// The matrix of the rime-preserving deformation with constants ν_k, off-diagonal part only.
pub fn rime_preserving_generator(p: &PencilParams, nu: &[Rational]) -> Operator1 {
    let n = p.psi.len();
    Matrix::from_fn(n, n, |r, c| {
        if r == c {
            Rational::zero()
        } else {
            &nu[c] * p.rho_at(r + 1) / p.psi_diff(r + 1, c + 1)
        }
    })
}

/// Outcome of the compensation check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompensationReport {
    /// −δ_x f equals the two-term remainder once the diagonal is chosen to cancel the rest.
    pub split: bool,
    /// The closed ψ-variation equals the first-order change of the pencil bracket.
    pub psi_variation: bool,
    /// The ψ-variation with δψ_i = ερ_iν_i cancels ε times the remainder.
    pub compensated: bool,
    /// The deformed bracket is still rime.
    pub stays_rime: bool,
}

impl CompensationReport {
    /// True when every item holds.
    pub fn all_pass(&self) -> bool {
        self.split && self.psi_variation && self.compensated && self.stays_rime
    }
}

/// The pencil bracket with dual-number ψ, returned as (value, first-order part).
pub fn pencil_first_order(p: &PencilParams, dpsi: &[Rational]) -> (PolyBracket, PolyBracket) {
    let n = p.psi.len();
    let psi: Vec<Dual> = p
        .psi
        .iter()
        .zip(dpsi)
        .map(|(x, d)| Dual::new(x.clone(), d.clone()))
        .collect();
    let rho = |t: &Dual| {
        let a = Dual::constant(p.rho.a.clone());
        let b = Dual::constant(p.rho.b.clone());
        let c = Dual::constant(p.rho.c.clone());
        &(&(&a * &(t * t)) + &(&b * t)) + &c
    };
    let coeffs = |i: usize, j: usize| -> [Dual; 3] {
        let d = &psi[i - 1] - &psi[j - 1];
        let (ri, rj) = (rho(&psi[i - 1]), rho(&psi[j - 1]));
        let a = Dual::constant(p.rho.a.clone());
        [&rj / &d, &ri / &d, &(&d * &a) - &(&(&ri + &rj) / &d)]
    };
    let build = |first: bool| {
        PolyBracket::from_upper(n, |i, j| {
            let cs = coeffs(i, j);
            let q = quad(i, j);
            q.iter().zip(cs.iter()).fold(Polynomial::zero(), |acc, (m, c)| {
                &acc + &m.scale(if first { &c.re } else { &c.eps })
            })
        })
    };
    (build(true), build(false))
}

/// Checks that the rime-preserving deformation with constants ν is compensated by moving ψ.
pub fn compensation_check(p: &PencilParams, nu: &[Rational], eps: &Rational) -> Result<CompensationReport> {
    require_distinct(&p.psi, "psi")?;
    let n = p.psi.len();
    if nu.len() != n {
        return Err(Error::DimensionMismatch(format!("nu has length {}, expected {n}", nu.len())));
    }
    let br = pencil_bracket(p)?;
    let mut a = rime_preserving_generator(p, nu);
    for i in 1..=n {
        let s: Rational = (1..=n)
            .filter(|&s| s != i)
            .map(|s| &nu[s - 1] * p.rho_at(s) / p.psi_diff(s, i))
            .sum();
        a[(i - 1, i - 1)] = p.rho.deriv(&p.psi[i - 1]) * &nu[i - 1] + s;
    }
    let variation = lie_derivative(&br, &a);
    let remainder = PolyBracket::from_upper(n, |i, j| {
        let d = p.psi_diff(i, j);
        let (ri, rj) = (p.rho_at(i), p.rho_at(j));
        let (xi, xj) = (Polynomial::var(i - 1), Polynomial::var(j - 1));
        let v = &xi - &xj;
        let first = (&v * &v).scale(&(&ri * &rj * (&nu[i - 1] - &nu[j - 1]) / (&d * &d)));
        let [xii, xjj, _] = quad(i, j);
        let second = &xii.scale(&(&nu[j - 1] * &rj)) - &xjj.scale(&(&nu[i - 1] * &ri));
        &first + &second.scale(&p.rho.a)
    });
    let split = variation.add_scaled(&remainder, &Rational::one()).is_zero();

    let dpsi: Vec<Rational> = (1..=n).map(|i| eps * p.rho_at(i) * &nu[i - 1]).collect();
    let closed = PolyBracket::from_upper(n, |i, j| {
        let d = p.psi_diff(i, j);
        let (ri, rj) = (p.rho_at(i), p.rho_at(j));
        let (xi, xj) = (Polynomial::var(i - 1), Polynomial::var(j - 1));
        let v = &xi - &xj;
        let first = (&v * &v).scale(&((&ri * &dpsi[j - 1] - &rj * &dpsi[i - 1]) / (&d * &d)));
        let [xii, xjj, _] = quad(i, j);
        let second = &xjj.scale(&dpsi[i - 1]) - &xii.scale(&dpsi[j - 1]);
        &first + &second.scale(&p.rho.a)
    });
    let (_, exact) = pencil_first_order(p, &dpsi);
    let psi_variation = closed == exact;
    let compensated = closed.add_scaled(&remainder, eps).is_zero();
    let deformed = br.add_scaled(&lie_derivative(&br, &rime_preserving_generator(p, nu)), eps);
    Ok(CompensationReport {
        split,
        psi_variation,
        compensated,
        stays_rime: rime_fit(&deformed).is_some(),
    })
}

/// The operators B⁻, B⁰, B⁺ in the Lagrange basis at the points ψ.
pub fn sl2_generators(psi: &[Rational]) -> Result<[Operator1; 3]> {
    require_distinct(psi, "psi")?;
    let n = psi.len();
    let p = PencilParams::new(psi.to_vec(), Rho::new(rat(0), rat(0), rat(0)))?;
    let half = frac(n as i64 - 1, 2);
    let nm1 = rat(n as i64 - 1);
    let build = |power: u32| {
        Matrix::from_fn(n, n, |r, c| {
            let (i, j) = (r + 1, c + 1);
            let pi = &psi[r];
            let pw = match power {
                0 => Rational::one(),
                1 => pi.clone(),
                _ => pi * pi,
            };
            if i != j {
                pw / p.psi_diff(i, j)
            } else {
                let xi = p.xi(i);
                match power {
                    0 => -xi,
                    1 => -(&half + pi * &xi),
                    _ => -(&nm1 * pi + pi * pi * &xi),
                }
            }
        })
    };
    Ok([build(0), build(1), build(2)])
}

/// The involution ϖ negating the diagonal.
pub fn varpi(y: &Operator1) -> Operator1 {
    Matrix::from_fn(y.rows(), y.cols(), |r, c| {
        if r == c {
            -y[(r, c)].clone()
        } else {
            y[(r, c)].clone()
        }
    })
}

/// Residuals of the three product identities satisfied by ϖ.
pub fn varpi_identities(y1: &Operator1, y2: &Operator1) -> [Operator1; 3] {
    let w = varpi;
    let lhs = &(&w(y1) * &w(y2)) + &w(&(y1 * y2));
    [
        &lhs - &(&w(&(&w(y1) * &w(y2))) + &(y1 * y2)),
        &lhs - &(&w(&(&w(y1) * y2)) + &(y1 * &w(y2))),
        &lhs - &(&w(&(y1 * &w(y2))) + &(&w(y1) * y2)),
    ]
}

/// Matrix, in increasing powers of t, of f ↦ ϱf′ − (n−1)/2·ϱ′f on polynomials of degree < n.
pub fn projective_action_monomial(rho: &Rho, n: usize) -> Operator1 {
    let half = frac(n as i64 - 1, 2);
    let mut m = Matrix::zeros(n, n);
    for k in 0..n {
        // t^k ↦ k(a t^{k+1} + b t^k + c t^{k−1}) − (n−1)/2 (2a t^{k+1} + b t^k)
        let kk = rat(k as i64);
        let up = &rho.a * (&kk - rat(2) * &half);
        let same = &rho.b * (&kk - &half);
        let down = &rho.c * &kk;
        if k + 1 < n {
            m[(k + 1, k)] += up;
        }
        m[(k, k)] += same;
        if k >= 1 {
            m[(k - 1, k)] += down;
        }
    }
    m
}

/// Outcome of the sl(2) suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2Report {
    /// The three commutation relations.
    pub commutators: bool,
    /// aB⁺ + bB⁰ + cB⁻ is the projective action written in the Lagrange basis, for several ϱ.
    pub projective_action: bool,
    /// 𝒜(ϱ) = ϖ(B(ϱ)) for several ϱ.
    pub generator_is_varpi: bool,
    /// ϖ∘ϖ = id and the three product identities on sample pairs.
    pub varpi: bool,
}

impl Sl2Report {
    /// True when every item holds.
    pub fn all_pass(&self) -> bool {
        self.commutators && self.projective_action && self.generator_is_varpi && self.varpi
    }
}

/// B(ϱ) = aB⁺ + bB⁰ + cB⁻.
pub fn b_of_rho(psi: &[Rational], rho: &Rho) -> Result<Operator1> {
    let [bm, b0, bp] = sl2_generators(psi)?;
    Ok(&(&bp.scale(&rho.a) + &b0.scale(&rho.b)) + &bm.scale(&rho.c))
}

/// Checks the sl(2) relations, the Lagrange-basis realization, ϖ and its identities.
pub fn sl2_suite(psi: &[Rational]) -> Result<Sl2Report> {
    let n = psi.len();
    let [bm, b0, bp] = sl2_generators(psi)?;
    let commutators = b0.commutator(&bm) == bm.scale(&rat(-1))
        && b0.commutator(&bp) == bp
        && bp.commutator(&bm) == b0.scale(&rat(-2));
    let l = lagrange_basis(psi)?;
    let linv = l.inverse()?;
    let samples = [
        Rho::new(rat(1), rat(0), rat(0)),
        Rho::new(rat(0), rat(1), rat(0)),
        Rho::new(rat(0), rat(0), rat(1)),
        Rho::new(frac(2, 3), rat(-1), rat(5)),
    ];
    let mut projective_action = true;
    let mut generator_is_varpi = true;
    for rho in &samples {
        let b = b_of_rho(psi, rho)?;
        let m = &(&linv * &projective_action_monomial(rho, n)) * &l;
        projective_action &= m == b;
        let params = PencilParams::new(psi.to_vec(), rho.clone())?;
        generator_is_varpi &= invariance_generator(&params)? == varpi(&b);
    }
    let y1 = Matrix::from_fn(n, n, |r, c| frac((3 * r + 5 * c) as i64 % 7 - 3, 1 + c as i64));
    let y2 = Matrix::from_fn(n, n, |r, c| frac((2 * r + c * c) as i64 % 5 - 2, 1 + r as i64));
    let varpi_ok = varpi(&varpi(&y1)) == y1
        && [(&y1, &y2), (&bm, &bp), (&b0, &y1)]
            .iter()
            .all(|(a, b)| varpi_identities(a, b).iter().all(Matrix::is_zero));
    Ok(Sl2Report {
        commutators,
        projective_action,
        generator_is_varpi,
        varpi: varpi_ok,
    })
}

/// A move on the pencil parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PencilMove {
    /// ψ ↦ ψ − ζ, equivalently ϱ(t) ↦ ϱ(t + ζ).
    Shift(Rational),
    /// ψ ↦ ψ/λ, equivalently (a, b, c) ↦ (λa, b, c/λ).
    Dilate(Rational),
    /// ψ ↦ 1/ψ with x̃ⁱ = xⁱ/ψ_i, equivalently (a, b, c) ↦ (−c, −b, −a).
    Invert,
}

/// The effect of a move on the coefficients of ϱ.
pub fn discriminant_action(rho: &Rho, mv: &PencilMove) -> Result<Rho> {
    Ok(match mv {
        PencilMove::Shift(z) => Rho::new(
            rho.a.clone(),
            &rho.b + rat(2) * z * &rho.a,
            &rho.c + z * &rho.b + z * z * &rho.a,
        ),
        PencilMove::Dilate(l) => {
            require_nonzero(l, "lambda")?;
            Rho::new(l * &rho.a, rho.b.clone(), &rho.c / l)
        }
        PencilMove::Invert => Rho::new(-rho.c.clone(), -rho.b.clone(), -rho.a.clone()),
    })
}

/// Applies a move to the parameters, returning the new parameters and the rescaling d with
/// xⁱ = d_i x̃ⁱ under which the old bracket becomes the new one.
pub fn apply_move(p: &PencilParams, mv: &PencilMove) -> Result<(PencilParams, Vec<Rational>)> {
    let rho = discriminant_action(&p.rho, mv)?;
    let n = p.psi.len();
    let (psi, d) = match mv {
        PencilMove::Shift(z) => (p.psi.iter().map(|x| x - z).collect(), vec![Rational::one(); n]),
        PencilMove::Dilate(l) => (p.psi.iter().map(|x| x / l).collect(), vec![Rational::one(); n]),
        PencilMove::Invert => {
            for x in &p.psi {
                require_nonzero(x, "psi")?;
            }
            (p.psi.iter().map(Rational::recip).collect(), p.psi.clone())
        }
    };
    Ok((PencilParams::new(psi, rho)?, d))
}

/// Orbit type of ϱ under the moves.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitClass {
    /// D(ϱ) ≠ 0; normal form ϱ = bt.
    Massive,
    /// D(ϱ) = 0, ϱ ≠ 0; normal form ϱ = c.
    Lightlike,
    /// ϱ = 0.
    Zero,
}

/// Why a rational witness was not produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessGap {
    /// The roots of ϱ are irrational.
    NeedsQuadraticExtension,
    /// Every rational route inverts a zero point.
    ZeroPoint,
}

/// Classification result with an optional verified witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    /// The orbit type.
    pub class: OrbitClass,
    /// Moves reaching the normal form, when found over the rationals.
    pub moves: Option<Vec<PencilMove>>,
    /// Final parameters.
    pub target: Option<PencilParams>,
    /// True when the transported bracket equals the pencil member of the target.
    pub verified: bool,
    /// Reason for a missing witness.
    pub gap: Option<WitnessGap>,
}

fn run_moves(p: &PencilParams, moves: &[PencilMove]) -> Option<(PencilParams, Vec<Rational>)> {
    let n = p.psi.len();
    let mut cur = p.clone();
    let mut d = vec![Rational::one(); n];
    for mv in moves {
        let (next, step) = apply_move(&cur, mv).ok()?;
        for (x, s) in d.iter_mut().zip(&step) {
            *x *= s;
        }
        cur = next;
    }
    Some((cur, d))
}

fn rational_roots(rho: &Rho) -> Option<Vec<Rational>> {
    let disc = rho.discriminant();
    let s = crate::kernel::rational_sqrt(&disc)?;
    let two_a = rat(2) * &rho.a;
    Some(vec![(-&rho.b + &s) / &two_a, (-&rho.b - &s) / &two_a])
}

/// Classifies ϱ by its discriminant and searches for rational moves reaching the normal form.
pub fn normal_form_classify(p: &PencilParams) -> Result<NormalForm> {
    require_distinct(&p.psi, "psi")?;
    let rho = &p.rho;
    if rho.is_zero() {
        return Err(Error::DegenerateParameters("rho is the zero polynomial".into()));
    }
    let disc = rho.discriminant();
    let class = if disc.is_zero() { OrbitClass::Lightlike } else { OrbitClass::Massive };
    let mut candidates: Vec<Vec<PencilMove>> = Vec::new();
    let mut gap = None;
    match class {
        OrbitClass::Massive => {
            if rho.a.is_zero() {
                candidates.push(vec![PencilMove::Shift(-&rho.c / &rho.b)]);
            } else if let Some(roots) = rational_roots(rho) {
                for z in roots {
                    // ϱ(t + z) = a t² + b′t; invert to −b′t − a, then shift the constant away.
                    let b1 = &rho.b + rat(2) * &z * &rho.a;
                    candidates.push(vec![
                        PencilMove::Shift(z),
                        PencilMove::Invert,
                        PencilMove::Shift(-&rho.a / &b1),
                    ]);
                }
            } else {
                gap = Some(WitnessGap::NeedsQuadraticExtension);
            }
        }
        OrbitClass::Lightlike => {
            if rho.a.is_zero() {
                candidates.push(vec![]);
            } else {
                let t0 = -&rho.b / (rat(2) * &rho.a);
                candidates.push(vec![PencilMove::Shift(t0), PencilMove::Invert]);
            }
        }
        OrbitClass::Zero => unreachable!(),
    }
    let source = pencil_bracket(p)?;
    for moves in candidates {
        if let Some((target, d)) = run_moves(p, &moves) {
            let normal = match class {
                OrbitClass::Massive => target.rho.a.is_zero() && target.rho.c.is_zero(),
                _ => target.rho.a.is_zero() && target.rho.b.is_zero(),
            };
            let verified = normal && source.rescaled(&d) == pencil_bracket(&target)?;
            return Ok(NormalForm {
                class,
                moves: Some(moves),
                target: Some(target),
                verified,
                gap: None,
            });
        }
    }
    Ok(NormalForm {
        class,
        moves: None,
        target: None,
        verified: false,
        gap: Some(gap.unwrap_or(WitnessGap::ZeroPoint)),
    })
}

/// The two rime quantum-plane families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuantumFamily {
    /// β_ij = −βψ_j/(ψ_i − ψ_j).
    NonUnitary {
        /// Points ψ.
        psi: Vec<Rational>,
        /// Hecke parameter β.
        beta: Rational,
    },
    /// β_ij = 1/(μ_i − μ_j).
    Unitary {
        /// Points μ.
        mu: Vec<Rational>,
    },
}

/// First-order bracket of [xⁱ,xʲ] + (β_ij xⁱ + β_ji xʲ)(xⁱ − xʲ) = 0 with β_ij ↦ εβ_ij, together
/// with the pencil member it coincides with.
pub fn bracket_from_quantum(family: &QuantumFamily) -> Result<(PolyBracket, PencilParams)> {
    let (beta, params) = match family {
        QuantumFamily::NonUnitary { psi, beta } => (
            strict_beta_alt(psi, beta)?,
            PencilParams::new(psi.clone(), Rho::new(rat(0), beta.clone(), rat(0)))?,
        ),
        QuantumFamily::Unitary { mu } => (
            unitary_beta(mu)?,
            PencilParams::new(mu.clone(), Rho::new(rat(0), rat(0), rat(-1)))?,
        ),
    };
    let n = beta.rows();
    let br = PolyBracket::from_upper(n, |i, j| {
        let (xi, xj) = (Polynomial::var(i - 1), Polynomial::var(j - 1));
        let lin = &xi.scale(&beta[(i - 1, j - 1)]) + &xj.scale(&beta[(j - 1, i - 1)]);
        (&lin * &(&xi - &xj)).scale(&-Rational::one())
    });
    Ok((br, params))
}

/// A linear bracket {xⁱ,xʲ} = a_ij xⁱ − a_ji xʲ.
pub fn linear_bracket(a: &Matrix) -> PolyBracket {
    PolyBracket::from_upper(a.rows(), |i, j| {
        &Polynomial::var(i - 1).scale(&a[(i - 1, j - 1)]) - &Polynomial::var(j - 1).scale(&a[(j - 1, i - 1)])
    })
}

/// Ordered triples violating a_ik a_kj = a_ij a_jk.
pub fn linear_jacobi_condition(a: &Matrix) -> Vec<(usize, usize, usize)> {
    let n = a.rows();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if i != j && j != k && i != k && &a[(i, k)] * &a[(k, j)] != &a[(i, j)] * &a[(j, k)] {
                    out.push((i + 1, j + 1, k + 1));
                }
            }
        }
    }
    out
}

/// The coefficients a_ij = 1 of the unique strict rime Lie algebra for n ≥ 4.
pub fn unique_linear_algebra(n: usize) -> Matrix {
    Matrix::from_fn(n, n, |r, c| if r == c { Rational::zero() } else { Rational::one() })
}

/// The second three-dimensional strict rime Lie algebra.
pub fn exceptional_linear_algebra() -> Matrix {
    Matrix::from_i64(&[&[0, 1, 1], &[1, 0, -1], &[-1, -1, 0]])
}

/// Outcome of the linear rime suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearRimeReport {
    /// Jacobi holds exactly when the triple condition holds, on the sample coefficient matrices.
    pub jacobi_characterization: bool,
    /// [xⁱ, xᵏ − xˡ] = −(xᵏ − xˡ) and [xⁱ − xʲ, xᵏ − xˡ] = 0 in the unique algebra.
    pub almost_trivial: bool,
    /// The three-dimensional exceptional algebra is sl(2) under the stated map (n = 3 only).
    pub sl2_isomorphism: Option<bool>,
}

impl LinearRimeReport {
    /// True when every item holds.
    pub fn all_pass(&self) -> bool {
        self.jacobi_characterization && self.almost_trivial && self.sl2_isomorphism.unwrap_or(true)
    }
}

/// Checks the linear rime brackets for a given n ≥ 3.
pub fn linear_rime_suite(n: usize) -> Result<LinearRimeReport> {
    if n < 3 {
        return Err(Error::InvalidInput("linear rime suite needs n ≥ 3".into()));
    }
    let kappa: Vec<Rational> = (0..n).map(|k| frac(k as i64 + 2, 3)).collect();
    let column_scaled = Matrix::from_fn(n, n, |r, c| if r == c { Rational::zero() } else { kappa[c].clone() });
    let mut broken = unique_linear_algebra(n);
    broken[(0, 1)] = rat(2);
    let mut samples = vec![unique_linear_algebra(n), column_scaled, broken];
    if n == 3 {
        samples.push(exceptional_linear_algebra());
    }
    let jacobi_characterization = samples
        .iter()
        .all(|a| linear_jacobi_condition(a).is_empty() == jacobi_residual(&linear_bracket(a)).is_empty());

    let br = linear_bracket(&unique_linear_algebra(n));
    let x = |i: usize| Polynomial::var(i - 1);
    let mut almost_trivial = true;
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                for l in 1..=n {
                    let d = &x(k) - &x(l);
                    almost_trivial &= br.apply(&x(i), &d) == d.scale(&rat(-1));
                    almost_trivial &= br.apply(&(&x(i) - &x(j)), &d).is_zero();
                }
            }
        }
    }

    let sl2_isomorphism = (n == 3).then(|| {
        let br = linear_bracket(&exceptional_linear_algebra());
        let h = &x(1) - &x(3);
        let e = &x(1) + &x(3);
        let f = &x(2) - &e.scale(&frac(1, 4));
        br.apply(&h, &e) == e.scale(&rat(2))
            && br.apply(&h, &f) == f.scale(&rat(-2))
            && br.apply(&e, &f) == h
    });
    Ok(LinearRimeReport {
        jacobi_characterization,
        almost_trivial,
        sl2_isomorphism,
    })
}

#[cfg(test)]
mod tests;
