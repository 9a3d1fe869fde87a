//! Classical r-matrices: the rime and Cremmer–Gervais families, the parameter-free skew-symmetric
//! solutions, their conjugation equivalences, carrier algebras, invariance shifts, and the
//! four-dimensional exchange-relation R-matrix of a non-standard Belavin–Drinfeld triple.
//!
//! Matrix units follow e^i_j(e_k) = δ^i_k e_j, so e^i_j has its single 1 in row j, column i and
//! e^i_j e^k_l = δ^i_l e^k_j.

use crate::cg::x_change_of_basis;
use crate::error::{Error, Result};
use crate::kernel::{frac, rat, require_distinct, require_nonzero, Matrix, Rational};
use crate::rime::strict_rime_r;
use crate::tensor::{cybe_residual, permutation_p, Operator1, Operator2, Operator3};
use num::{One, Zero};

/// A classical r-matrix family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassicalKind {
    /// Non-skew-symmetric rime r-matrix r(φ).
    RimeNonSkew(Vec<Rational>),
    /// Parameter-free Cremmer–Gervais r-matrix r_CG.
    RCG,
    /// The Cremmer–Gervais r-matrix of the opposite triple, r′_CG.
    RCGPrime,
    /// Parameter-free skew-symmetric r-matrix b.
    BSkew,
    /// Boundary r-matrix b_CG.
    BCG,
    /// Skew-symmetric rime r-matrix on the carrier spanned by Z^i_j.
    RimeSkew(Vec<Rational>),
    /// Its sl(n) version built from Z̃^i_j = Z^i_j + I/n.
    RimeSkewSL(Vec<Rational>),
}

/// A classical family as listed by the catalog.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassicalEntry {
    /// Name as accepted by the CLI `--kind` flag.
    pub kind: &'static str,
    /// Display label.
    pub label: &'static str,
    /// Parameter names.
    pub params: &'static [&'static str],
    /// Descriptive anchor.
    pub anchor: &'static str,
}

/// Every classical family in a fixed order.
pub const CLASSICAL_CATALOG: &[ClassicalEntry] = &[
    ClassicalEntry { kind: "rime-nonskew", label: "rime r(φ), non-skew-symmetric", params: &["phi"], anchor: "classical.rime-nonskew" },
    ClassicalEntry { kind: "rcg", label: "r_CG (Cremmer–Gervais)", params: &[], anchor: "classical.rcg" },
    ClassicalEntry { kind: "rcg-prime", label: "r'_CG (opposite triple)", params: &[], anchor: "classical.rcg-prime" },
    ClassicalEntry { kind: "b", label: "b (parameter-free skew-symmetric)", params: &[], anchor: "classical.b" },
    ClassicalEntry { kind: "bcg", label: "b_CG (boundary)", params: &[], anchor: "classical.bcg" },
    ClassicalEntry { kind: "rime-skew", label: "rime r(μ), skew-symmetric", params: &["mu"], anchor: "classical.rime-skew" },
    ClassicalEntry { kind: "rime-skew-sl", label: "rime r̃(μ), sl(n)", params: &["mu"], anchor: "classical.rime-skew-sl" },
];

impl ClassicalKind {
    /// Catalog name of the family.
    pub fn name(&self) -> &'static str {
        match self {
            ClassicalKind::RimeNonSkew(_) => "rime-nonskew",
            ClassicalKind::RCG => "rcg",
            ClassicalKind::RCGPrime => "rcg-prime",
            ClassicalKind::BSkew => "b",
            ClassicalKind::BCG => "bcg",
            ClassicalKind::RimeSkew(_) => "rime-skew",
            ClassicalKind::RimeSkewSL(_) => "rime-skew-sl",
        }
    }
}

/// The matrix unit e^i_j (1-based): e_i ↦ e_j.
pub fn matrix_unit(n: usize, i: usize, j: usize) -> Operator1 {
    let mut m = Matrix::zeros(n, n);
    m[(j - 1, i - 1)] = Rational::one();
    m
}

/// Z^i_j = e^i_j − e^j_j, with Z^i_i = 0.
pub fn z_unit(n: usize, i: usize, j: usize) -> Operator1 {
    if i == j {
        return Matrix::zeros(n, n);
    }
    &matrix_unit(n, i, j) - &matrix_unit(n, j, j)
}

/// Z̃^i_j = Z^i_j + I/n.
pub fn z_tilde(n: usize, i: usize, j: usize) -> Operator1 {
    &z_unit(n, i, j) + &Matrix::identity(n).scale(&frac(1, n as i64))
}

/// η = −(n+1)/2·I + Σ_j j e^j_j, the traceless invariance generator of r_CG.
pub fn eta_cg(n: usize) -> Operator1 {
    let shift = frac(n as i64 + 1, 2);
    Matrix::from_fn(n, n, |r, c| {
        if r == c {
            rat(r as i64 + 1) - &shift
        } else {
            Rational::zero()
        }
    })
}

/// η⁰ = Σ_j (n−j) e^{j+1}_j, the invariance generator of b.
pub fn eta_b(n: usize) -> Operator1 {
    let mut m = Matrix::zeros(n, n);
    for j in 1..n {
        m = &m + &matrix_unit(n, j + 1, j).scale(&rat((n - j) as i64));
    }
    m
}

fn check_len(values: &[Rational], n: usize, what: &str) -> Result<()> {
    if values.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "{what} has length {}, expected {n}",
            values.len()
        )));
    }
    require_distinct(values, what)
}

fn require_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("n = {n}, expected n >= 2")));
    }
    Ok(())
}

fn rime_nonskew(phi: &[Rational]) -> Operator2 {
    let n = phi.len();
    let mut r = Operator2::zero(n);
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            let b = &phi[i - 1] / (&phi[i - 1] - &phi[j - 1]);
            let term = &(&Operator2::tensor(&matrix_unit(n, i, j), &matrix_unit(n, j, i))
                - &Operator2::tensor(&matrix_unit(n, i, i), &matrix_unit(n, j, j)))
                + &Operator2::wedge(&matrix_unit(n, i, i), &matrix_unit(n, i, j));
            r = &r + &term.scale(&b);
        }
    }
    r
}

fn rcg(n: usize) -> Operator2 {
    let mut r = Operator2::zero(n);
    for i in 1..=n {
        for j in i + 1..=n {
            for s in 1..=j - i {
                let a = Operator2::tensor(
                    &matrix_unit(n, i + s - 1, j),
                    &matrix_unit(n, j - s + 1, i),
                );
                let b = Operator2::tensor(
                    &matrix_unit(n, i + s - 1, i),
                    &matrix_unit(n, j - s + 1, j),
                );
                r = &r + &(&a - &b);
            }
        }
    }
    r
}

fn rcg_prime(n: usize) -> Operator2 {
    let mut r = Operator2::zero(n);
    for i in 1..=n {
        for j in i + 1..=n {
            for s in 1..=j - i {
                let a = Operator2::tensor(
                    &matrix_unit(n, i, j - s + 1),
                    &matrix_unit(n, j, i + s - 1),
                );
                let b = Operator2::tensor(
                    &matrix_unit(n, j, j - s + 1),
                    &matrix_unit(n, i, i + s - 1),
                );
                r = &r + &(&a - &b);
            }
        }
    }
    r
}

fn b_skew(n: usize) -> Operator2 {
    let mut r = Operator2::zero(n);
    for i in 1..=n {
        for j in i + 1..=n {
            for k in 1..=j - i {
                r = &r
                    + &Operator2::wedge(&matrix_unit(n, i + k, i), &matrix_unit(n, j - k + 1, j));
            }
        }
    }
    r
}

/// I∧Σ_j (1 − j/n) e^{j+1}_j, the difference b_CG − b.
fn bcg_correction(n: usize) -> Operator2 {
    let mut s = Matrix::zeros(n, n);
    for j in 1..n {
        s = &s + &matrix_unit(n, j + 1, j).scale(&(Rational::one() - frac(j as i64, n as i64)));
    }
    Operator2::wedge(&Matrix::identity(n), &s)
}

fn rime_skew(mu: &[Rational], z: fn(usize, usize, usize) -> Operator1) -> Operator2 {
    let n = mu.len();
    let mut r = Operator2::zero(n);
    for i in 1..=n {
        for j in i + 1..=n {
            let w = Operator2::wedge(&z(n, i, j), &z(n, j, i));
            r = &r + &w.scale(&(Rational::one() / (&mu[i - 1] - &mu[j - 1])));
        }
    }
    r
}

/// The operator of a classical family on Cⁿ⊗Cⁿ.
pub fn build_classical(kind: &ClassicalKind, n: usize) -> Result<Operator2> {
    require_n(n)?;
    Ok(match kind {
        ClassicalKind::RimeNonSkew(phi) => {
            check_len(phi, n, "phi")?;
            rime_nonskew(phi)
        }
        ClassicalKind::RCG => rcg(n),
        ClassicalKind::RCGPrime => rcg_prime(n),
        ClassicalKind::BSkew => b_skew(n),
        ClassicalKind::BCG => &b_skew(n) + &bcg_correction(n),
        ClassicalKind::RimeSkew(mu) => {
            check_len(mu, n, "mu")?;
            rime_skew(mu, z_unit)
        }
        ClassicalKind::RimeSkewSL(mu) => {
            check_len(mu, n, "mu")?;
            rime_skew(mu, z_tilde)
        }
    })
}

/// P·R̂(φ,β) − I⊗I − β·r(φ).
pub fn classical_limit_residual(phi: &[Rational], beta: &Rational) -> Result<Operator2> {
    let n = phi.len();
    let r_hat = strict_rime_r(phi, beta)?;
    let r = build_classical(&ClassicalKind::RimeNonSkew(phi.to_vec()), n)?;
    let lhs = &(&permutation_p(n) * &r_hat) - &Operator2::identity(n);
    Ok(&lhs - &r.scale(beta))
}

/// A pair of classical families related by conjugation with X.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConjugationPair {
    /// r(φ) and r_CG.
    RimeCg(Vec<Rational>),
    /// Skew rime r(μ) and b.
    SkewB(Vec<Rational>),
    /// Its sl(n) version r̃(μ) and b_CG.
    SkewSlBcg(Vec<Rational>),
}

/// lhs − (X⊗X)·rhs·(X⁻¹⊗X⁻¹) for the pair, with X the symmetric-function change of basis.
pub fn conjugation_residual(pair: &ConjugationPair) -> Result<Operator2> {
    let (params, lhs_kind, rhs_kind) = match pair {
        ConjugationPair::RimeCg(phi) => (phi, ClassicalKind::RimeNonSkew(phi.clone()), ClassicalKind::RCG),
        ConjugationPair::SkewB(mu) => (mu, ClassicalKind::RimeSkew(mu.clone()), ClassicalKind::BSkew),
        ConjugationPair::SkewSlBcg(mu) => (mu, ClassicalKind::RimeSkewSL(mu.clone()), ClassicalKind::BCG),
    };
    let n = params.len();
    let lhs = build_classical(&lhs_kind, n)?;
    let rhs = build_classical(&rhs_kind, n)?;
    let (x, xinv) = x_change_of_basis(params)?;
    let conj = &(&Operator2::tensor(&x, &x) * &rhs) * &Operator2::tensor(&xinv, &xinv);
    Ok(&lhs - &conj)
}

/// Outcome of the carrier-algebra checks for the skew-symmetric rime r-matrix.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CarrierReport {
    /// Z^j_i Z^k_l = (δ^j_l − δ^i_l)(Z^k_i − Z^l_i) on all index pairs.
    pub product_rule: bool,
    /// The listed brackets hold and all others vanish.
    pub brackets: bool,
    /// ω(Z^i_j, Z^k_l) = −(μ_i − μ_j)δ^l_i δ^j_k is the inverse of the coefficient matrix of r.
    pub omega_inverse: bool,
    /// ω(Z_A, Z_B) = λ_n([Z_A, Z_B]) with λ_n = −Σ μ_i z^i_j under the trace pairing
    /// ⟨z^i_j, Z^k_l⟩ = δ^i_l δ^k_j, i.e. λ_n(Z^i_j) = −μ_j.
    pub coboundary: bool,
    /// Z̃^i_j satisfy the same brackets.
    pub tilde_brackets: bool,
    /// Z̃^i_j v = v/n for v = Σ e_i.
    pub tilde_eigenvector: bool,
}

impl CarrierReport {
    /// True when every item holds.
    pub fn all_pass(&self) -> bool {
        self.product_rule
            && self.brackets
            && self.omega_inverse
            && self.coboundary
            && self.tilde_brackets
            && self.tilde_eigenvector
    }

    /// Items as `(name, holds)` pairs.
    pub fn items(&self) -> Vec<(&'static str, bool)> {
        vec![
            ("product_rule", self.product_rule),
            ("brackets", self.brackets),
            ("omega_inverse", self.omega_inverse),
            ("coboundary", self.coboundary),
            ("tilde_brackets", self.tilde_brackets),
            ("tilde_eigenvector", self.tilde_eigenvector),
        ]
    }
}

/// Ordered index pairs (i, j), i ≠ j.
fn off_diagonal_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                v.push((i, j));
            }
        }
    }
    v
}

fn vectorize(m: &Operator1) -> Vec<Rational> {
    m.data().to_vec()
}

/// Columns of `g` as a matrix whose columns are the vectorized basis elements.
fn basis_matrix(basis: &[Operator1]) -> Matrix {
    let cols: Vec<Vec<Rational>> = basis.iter().map(vectorize).collect();
    Matrix::from_fn(cols[0].len(), cols.len(), |r, c| cols[c][r].clone())
}

/// Solves G·X = B when every column of B lies in the column span of G (G of full column rank).
fn solve_in_span(g: &Matrix, b: &Matrix) -> Option<Matrix> {
    let m = g.cols();
    let aug = Matrix::from_fn(g.rows(), m + b.cols(), |r, c| {
        if c < m {
            g[(r, c)].clone()
        } else {
            b[(r, c - m)].clone()
        }
    });
    let (red, pivots) = aug.rref();
    if pivots.len() != m || pivots.iter().enumerate().any(|(k, &p)| p != k) {
        return None;
    }
    for r in m..red.rows() {
        if red.row(r).iter().any(|x| !x.is_zero()) {
            return None;
        }
    }
    Some(Matrix::from_fn(m, b.cols(), |r, c| red[(r, m + c)].clone()))
}

/// Coordinates of `x` in `basis`, if it lies in the span.
fn coordinates(basis: &[Operator1], x: &Operator1) -> Option<Vec<Rational>> {
    let g = basis_matrix(basis);
    let v = vectorize(x);
    let b = Matrix::from_fn(v.len(), 1, |r, _| v[r].clone());
    solve_in_span(&g, &b).map(|s| (0..s.rows()).map(|r| s[(r, 0)].clone()).collect())
}

/// Coefficients t^{AB} with r = Σ t^{AB} B_A⊗B_B, if r lies in span(basis)⊗span(basis).
pub fn tensor_coordinates(basis: &[Operator1], r: &Operator2) -> Option<Matrix> {
    let n = r.dim();
    // M[(a,b),(c,d)] = r^{ac}_{bd} factors as G·T·Gᵀ.
    let m = Matrix::from_fn(n * n, n * n, |x, y| {
        r.at(x / n + 1, y / n + 1, x % n + 1, y % n + 1).clone()
    });
    let g = basis_matrix(basis);
    let y = solve_in_span(&g, &m)?;
    let tt = solve_in_span(&g, &y.transpose())?;
    Some(tt.transpose())
}

fn bracket_rule(n: usize, z: fn(usize, usize, usize) -> Operator1) -> bool {
    let pairs = off_diagonal_pairs(n);
    for &(a, b) in &pairs {
        for &(c, d) in &pairs {
            let lhs = z(n, a, b).commutator(&z(n, c, d));
            // [Z^i_j, Z^j_i] = Z^j_i − Z^i_j
            let expected = if (c, d) == (b, a) {
                &z(n, b, a) - &z(n, a, b)
            // [Z^j_i, Z^k_i] = Z^j_i − Z^k_i
            } else if b == d && a != c {
                &z(n, a, b) - &z(n, c, b)
            // [Z^i_j, Z^j_k] = Z^j_k − Z^i_k
            } else if c == b && d != a {
                &z(n, b, d) - &z(n, a, d)
            // [Z^j_k, Z^i_j] = −(Z^j_k − Z^i_k)
            } else if a == d && c != b {
                &z(n, c, b) - &z(n, a, b)
            } else {
                Matrix::zeros(n, n)
            };
            if lhs != expected {
                return false;
            }
        }
    }
    true
}

/// Checks the associative and Lie structure of the carrier of r(μ), its Frobenius form, and the
/// sl(n) carrier.
pub fn carrier_algebra_check(mu: &[Rational]) -> Result<CarrierReport> {
    let n = mu.len();
    require_n(n)?;
    require_distinct(mu, "mu")?;
    let pairs = off_diagonal_pairs(n);
    let basis: Vec<Operator1> = pairs.iter().map(|&(i, j)| z_unit(n, i, j)).collect();
    let product_rule = (1..=n).all(|j| {
        (1..=n).all(|i| {
            (1..=n).all(|k| {
                (1..=n).all(|l| {
                    let lhs = &z_unit(n, j, i) * &z_unit(n, k, l);
                    let f = crate::kernel::delta(j, l) - crate::kernel::delta(i, l);
                    lhs == (&z_unit(n, k, i) - &z_unit(n, l, i)).scale(&f)
                })
            })
        })
    });
    let brackets = bracket_rule(n, z_unit);

    let r = build_classical(&ClassicalKind::RimeSkew(mu.to_vec()), n)?;
    let omega = Matrix::from_fn(pairs.len(), pairs.len(), |x, y| {
        let (i, j) = pairs[x];
        let (k, l) = pairs[y];
        if l == i && j == k {
            -(&mu[i - 1] - &mu[j - 1])
        } else {
            Rational::zero()
        }
    });
    let omega_inverse = match tensor_coordinates(&basis, &r) {
        Some(t) => &t * &omega == Matrix::identity(pairs.len()),
        None => false,
    };

    let lambda: Vec<Rational> = pairs.iter().map(|&(_, j)| -mu[j - 1].clone()).collect();
    let coboundary = pairs.iter().enumerate().all(|(x, &(i, j))| {
        pairs.iter().enumerate().all(|(y, _)| {
            let (k, l) = pairs[y];
            let br = z_unit(n, i, j).commutator(&z_unit(n, k, l));
            match coordinates(&basis, &br) {
                Some(c) => {
                    let val: Rational = c.iter().zip(&lambda).map(|(a, b)| a * b).sum();
                    val == omega[(x, y)]
                }
                None => false,
            }
        })
    });

    let tilde_brackets = bracket_rule(n, z_tilde);
    let v = Matrix::from_fn(n, 1, |_, _| Rational::one());
    let third = v.scale(&frac(1, n as i64));
    let tilde_eigenvector = pairs.iter().all(|&(i, j)| &z_tilde(n, i, j) * &v == third);
    Ok(CarrierReport {
        product_rule,
        brackets,
        omega_inverse,
        coboundary,
        tilde_brackets,
        tilde_eigenvector,
    })
}

/// cYBE residual of r + c(η₁ − η₂), after checking [r, η₁ + η₂] = 0.
pub fn invariance_shift_residual(r: &Operator2, eta: &Operator1, c: &Rational) -> Result<Operator3> {
    let n = r.dim();
    let id = Matrix::identity(n);
    let e1 = Operator2::tensor(eta, &id);
    let e2 = Operator2::tensor(&id, eta);
    if !r.commutator(&(&e1 + &e2)).is_zero() {
        return Err(Error::InvalidInput(
            "eta is not an invariance generator of r".into(),
        ));
    }
    let shifted = r + &(&e1 - &e2).scale(c);
    Ok(cybe_residual(&shifted))
}

/// Applies the leg-wise substitution e^i_j ↦ e^i_j + c δ^i_j I, i.e. M ↦ M + c·tr(M)·I on each leg.
pub fn representation_change(r: &Operator2, c: &Rational) -> Operator2 {
    let n = r.dim();
    let id = Matrix::identity(n);
    let t1 = r.partial_trace(crate::tensor::Leg::First);
    let t2 = r.partial_trace(crate::tensor::Leg::Second);
    let full = t1.trace();
    let lin = &Operator2::tensor(&id, &t1) + &Operator2::tensor(&t2, &id);
    &(r + &lin.scale(c)) + &Operator2::identity(n).scale(&(c * c * full))
}

/// Residuals of the two representation-change formulas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentationChange {
    /// Substituted r_CG − [r_CG + c(η⊗I − I⊗η − (n−1)I⊗I) − c²·n(n−1)/2·I⊗I].
    pub cg: Operator2,
    /// Carrier shift Z^i_j ↦ Z^i_j − cI applied to r(μ), pulled back by X_μ, minus b + c·η⁰∧I.
    pub skew: Operator2,
    /// The pulled-back shifted operator minus b.
    pub skew_difference: Operator2,
}

/// Representation-change residuals for r_CG and for b (via the skew rime carrier at μ_i = i − 1).
pub fn representation_change_residual(n: usize, c: &Rational) -> Result<RepresentationChange> {
    require_n(n)?;
    let id = Matrix::identity(n);
    let rc = rcg(n);
    let eta = eta_cg(n);
    let shift = &(&Operator2::tensor(&eta, &id) - &Operator2::tensor(&id, &eta))
        - &Operator2::identity(n).scale(&rat(n as i64 - 1));
    let quadratic = Operator2::identity(n).scale(&(c * c * frac((n * (n - 1)) as i64, 2)));
    let expected = &(&rc + &shift.scale(c)) - &quadratic;
    let cg = &representation_change(&rc, c) - &expected;

    let mu: Vec<Rational> = (0..n).map(|i| rat(i as i64)).collect();
    let mut shifted = Operator2::zero(n);
    let ci = id.scale(c);
    for i in 1..=n {
        for j in i + 1..=n {
            let w = Operator2::wedge(&(&z_unit(n, i, j) - &ci), &(&z_unit(n, j, i) - &ci));
            shifted = &shifted + &w.scale(&(Rational::one() / (&mu[i - 1] - &mu[j - 1])));
        }
    }
    let (x, xinv) = x_change_of_basis(&mu)?;
    let pulled = &(&Operator2::tensor(&xinv, &xinv) * &shifted) * &Operator2::tensor(&x, &x);
    let b = b_skew(n);
    let skew = &(&pulled - &b) - &Operator2::wedge(&eta_b(n), &id).scale(c);
    Ok(RepresentationChange {
        cg,
        skew,
        skew_difference: &pulled - &b,
    })
}

/// Outcome of the Belavin–Drinfeld symmetry checks for r_CG or r′_CG.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BdSymmetryReport {
    /// P·r = −r (r_CG) or r·P = −r (r′_CG).
    pub p_antisymmetry: bool,
    /// r₁₂ + r₂₁ = P − I⊗I.
    pub unitarity_defect: bool,
    /// The Cartan part equals −Σ_{i<j} e^i_i⊗e^j_j (r_CG) or −Σ_{i<j} e^j_j⊗e^i_i (r′_CG).
    pub cartan_part: bool,
}

impl BdSymmetryReport {
    /// True when every item holds.
    pub fn all_pass(&self) -> bool {
        self.p_antisymmetry && self.unitarity_defect && self.cartan_part
    }
}

/// Symmetry checks for the two Cremmer–Gervais classical r-matrices.
pub fn bd_symmetry_check(kind: &ClassicalKind, n: usize) -> Result<BdSymmetryReport> {
    require_n(n)?;
    let p = permutation_p(n);
    let (r, left) = match kind {
        ClassicalKind::RCG => (rcg(n), true),
        ClassicalKind::RCGPrime => (rcg_prime(n), false),
        _ => {
            return Err(Error::InvalidInput(
                "symmetry check applies to rcg and rcg-prime".into(),
            ))
        }
    };
    let p_antisymmetry = if left {
        &p * &r == r.scale(&rat(-1))
    } else {
        &r * &p == r.scale(&rat(-1))
    };
    let unitarity_defect = &r + &r.reversed() == &p - &Operator2::identity(n);
    let mut cartan = Operator2::zero(n);
    for i in 1..=n {
        for j in i + 1..=n {
            let (a, b) = if left { (i, j) } else { (j, i) };
            cartan = &cartan - &Operator2::tensor(&matrix_unit(n, a, a), &matrix_unit(n, b, b));
        }
    }
    let cartan_part = (1..=n).all(|a| (1..=n).all(|b| r.at(a, b, a, b) == cartan.at(a, b, a, b)));
    Ok(BdSymmetryReport {
        p_antisymmetry,
        unitarity_defect,
        cartan_part,
    })
}

/// The 16×16 R̂ read off the exchange relations x^i y^j = R̂^{ij}_{kl} y^k x^l of the
/// four-dimensional non-standard triple.
pub fn bd_fork_r(q: &Rational, p: &Rational, r: &Rational, s: &Rational) -> Result<Operator2> {
    require_nonzero(q, "q")?;
    if q.is_one() || (-q).is_one() {
        return Err(Error::DegenerateParameters("q must differ from ±1".into()));
    }
    require_nonzero(p, "p")?;
    require_nonzero(r, "r")?;
    require_nonzero(s, "s")?;
    let one = Rational::one();
    let b = &one - &(&one / (q * q));
    let mut m = Operator2::zero(4);
    for i in 1..=4 {
        m.set(i, i, i, i, one.clone());
    }
    let entries: Vec<(usize, usize, usize, usize, Rational)> = vec![
        (1, 2, 2, 1, p / q),
        (1, 3, 3, 1, r / (q * q)),
        (1, 4, 4, 1, p * r / q),
        (1, 4, 3, 2, -(r * s) / q),
        (2, 1, 1, 2, &one / (p * q)),
        (2, 1, 2, 1, b.clone()),
        (2, 3, 3, 2, s / (p * q)),
        (2, 4, 4, 2, s / (q * q)),
        (3, 1, 1, 3, &one / r),
        (3, 1, 3, 1, b.clone()),
        (3, 2, 2, 3, p / (q * s)),
        (3, 2, 3, 2, b.clone()),
        (3, 4, 4, 3, p * r / (q * s)),
        (4, 1, 1, 4, &one / (p * q * r)),
        (4, 1, 4, 1, b.clone()),
        (4, 1, 2, 3, &one / q),
        (4, 2, 2, 4, &one / s),
        (4, 2, 4, 2, b.clone()),
        (4, 3, 3, 4, s / (p * q * r)),
        (4, 3, 4, 3, b),
    ];
    for (i, j, k, l, v) in entries {
        m.set(i, j, k, l, v);
    }
    Ok(m)
}

/// X_μ·Σ_j (1 − j/n) e^{j+1}_j − (1/n)·Σ_{i≠j} Z^j_i/(μ_i − μ_j)·X_μ.
pub fn tilde_difference_residual(mu: &[Rational]) -> Result<Operator1> {
    let n = mu.len();
    require_n(n)?;
    let (x, _) = x_change_of_basis(mu)?;
    let mut s = Matrix::zeros(n, n);
    for j in 1..n {
        s = &s + &matrix_unit(n, j + 1, j).scale(&(Rational::one() - frac(j as i64, n as i64)));
    }
    let mut k = Matrix::zeros(n, n);
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                k = &k + &z_unit(n, j, i).scale(&(Rational::one() / (&mu[i - 1] - &mu[j - 1])));
            }
        }
    }
    Ok(&(&x * &s) - &(&k * &x).scale(&frac(1, n as i64)))
}

/// Gram matrix λ([W_A, W_B]) of λ = Σ_i (e^i_{i+1})* on the carrier of b_CG, spanned by
/// W_A = X_μ⁻¹ Z̃_A X_μ. Duals use the trace pairing, (e^i_j)*(M) = tr(e^i_j M) = M^i_j.
pub fn bcg_gram_matrix(mu: &[Rational]) -> Result<Matrix> {
    let n = mu.len();
    require_n(n)?;
    let (x, xinv) = x_change_of_basis(mu)?;
    let pairs = off_diagonal_pairs(n);
    let w: Vec<Operator1> = pairs
        .iter()
        .map(|&(i, j)| &(&xinv * &z_tilde(n, i, j)) * &x)
        .collect();
    let lambda = |m: &Operator1| -> Rational { (1..n).map(|i| m[(i - 1, i)].clone()).sum() };
    Ok(Matrix::from_fn(w.len(), w.len(), |a, b| lambda(&w[a].commutator(&w[b]))))
}

#[cfg(test)]
mod tests;
