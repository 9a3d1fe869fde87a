//! Rime R-matrices: assembly from coefficient data, the strict and unitary families, Hecke
//! structure, quantum traces, invariance groups and quadratic quantum-space relations.

mod appendix;
mod space;

pub use appendix::{appendix_a_residuals, AppendixResiduals};
pub use space::{quantum_space_relations, relation_basis, Parity, Side};

use crate::error::{Error, Result};
use crate::kernel::{
    binomial, elem_sym_omit, powi, rat, require_distinct, require_nonzero, Matrix, Rational,
};
use crate::tensor::{permutation_p, skew_inverse, Leg, Operator1, Operator2};
use num::{One, Zero};

/// Coefficients (α_i, α_ij, β_ij, γ_ij, γ′_ij) of a rime matrix.
///
/// Grids are 0-based n×n; the diagonal of `alpha` holds α_i, and the diagonals of `beta`,
/// `gamma` and `gamma_p` are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RimeData {
    /// α_ij, with α_ii = α_i.
    pub alpha: Matrix,
    /// β_ij.
    pub beta: Matrix,
    /// γ_ij.
    pub gamma: Matrix,
    /// γ′_ij.
    pub gamma_p: Matrix,
}

impl RimeData {
    /// All-zero data of dimension n.
    pub fn zero(n: usize) -> Self {
        RimeData {
            alpha: Matrix::zeros(n, n),
            beta: Matrix::zeros(n, n),
            gamma: Matrix::zeros(n, n),
            gamma_p: Matrix::zeros(n, n),
        }
    }

    /// Dimension n.
    pub fn dim(&self) -> usize {
        self.alpha.rows()
    }

    /// Data of the normalized solution with α_i = 1, α_ij = 1 − β_ji, γ_ij = −β_ij, γ′_ij = β_ji.
    pub fn from_beta(beta: &Matrix) -> Self {
        let n = beta.rows();
        let b = |i: usize, j: usize| if i == j { Rational::zero() } else { beta[(i, j)].clone() };
        RimeData {
            alpha: Matrix::from_fn(n, n, |i, j| Rational::one() - b(j, i)),
            beta: Matrix::from_fn(n, n, b),
            gamma: Matrix::from_fn(n, n, |i, j| -b(i, j)),
            gamma_p: Matrix::from_fn(n, n, |i, j| b(j, i)),
        }
    }

    /// Reads the coefficients off the rime positions of `r`, ignoring any other entries.
    pub fn from_operator(r: &Operator2) -> Self {
        let n = r.dim();
        let off = |f: &dyn Fn(usize, usize) -> Rational| {
            Matrix::from_fn(n, n, |i, j| if i == j { Rational::zero() } else { f(i + 1, j + 1) })
        };
        RimeData {
            alpha: Matrix::from_fn(n, n, |i, j| r.at(i + 1, j + 1, j + 1, i + 1).clone()),
            beta: off(&|i, j| r.at(i, j, i, j).clone()),
            gamma: off(&|i, j| r.at(i, j, i, i).clone()),
            gamma_p: off(&|i, j| r.at(i, j, j, j).clone()),
        }
    }

    /// Image under the involution α_ij↔α_ji, β_ij↔β_ji, γ_ij↔γ′_ji: the data of R̂₂₁.
    pub fn involution(&self) -> Self {
        RimeData {
            alpha: self.alpha.transpose(),
            beta: self.beta.transpose(),
            gamma: self.gamma_p.transpose(),
            gamma_p: self.gamma.transpose(),
        }
    }
}

/// Position of a matrix relative to the ice and rime conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum RimeClass {
    /// Nonzero entries only where {i,j} = {k,l}.
    Ice,
    /// Rime but some α_ij γ_ij vanishes.
    RimeNonStrict,
    /// Rime with α_ij γ_ij ≠ 0 for all i ≠ j.
    RimeStrict,
    /// Some nonzero entry has {k,l} ⊄ {i,j}.
    NotRime,
}

/// R̂^{ij}_{kl} = α_ij δ^i_l δ^j_k + β_ij δ^i_k δ^j_l + γ_ij δ^i_k δ^i_l + γ′_ij δ^j_k δ^j_l.
pub fn assemble_rime(data: &RimeData) -> Operator2 {
    let n = data.dim();
    let mut r = Operator2::zero(n);
    for i in 1..=n {
        r.set(i, i, i, i, data.alpha[(i - 1, i - 1)].clone());
        for j in 1..=n {
            if i == j {
                continue;
            }
            let (a, b) = (i - 1, j - 1);
            r.set(i, j, j, i, data.alpha[(a, b)].clone());
            r.set(i, j, i, j, data.beta[(a, b)].clone());
            r.set(i, j, i, i, data.gamma[(a, b)].clone());
            r.set(i, j, j, j, data.gamma_p[(a, b)].clone());
        }
    }
    r
}

/// Classifies `r` by the support of its entries.
pub fn classify(r: &Operator2) -> RimeClass {
    let n = r.dim();
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                for l in 1..=n {
                    let inside = (k == i || k == j) && (l == i || l == j);
                    if !inside && !r.at(i, j, k, l).is_zero() {
                        return RimeClass::NotRime;
                    }
                }
            }
        }
    }
    let d = RimeData::from_operator(r);
    if d.gamma.is_zero() && d.gamma_p.is_zero() {
        return RimeClass::Ice;
    }
    let strict = (0..n).all(|i| {
        (0..n).all(|j| i == j || !(&d.alpha[(i, j)] * &d.gamma[(i, j)]).is_zero())
    });
    if strict {
        RimeClass::RimeStrict
    } else {
        RimeClass::RimeNonStrict
    }
}

/// β_ij = βφ_i/(φ_i−φ_j).
pub fn strict_beta(phi: &[Rational], beta: &Rational) -> Result<Matrix> {
    require_distinct(phi, "phi")?;
    let n = phi.len();
    Ok(Matrix::from_fn(n, n, |i, j| {
        if i == j {
            Rational::zero()
        } else {
            beta * &phi[i] / (&phi[i] - &phi[j])
        }
    }))
}

/// β_ij = −βψ_j/(ψ_i−ψ_j), the parameterization related to [`strict_beta`] by φ ↦ φ⁻¹.
pub fn strict_beta_alt(psi: &[Rational], beta: &Rational) -> Result<Matrix> {
    require_distinct(psi, "psi")?;
    let n = psi.len();
    Ok(Matrix::from_fn(n, n, |i, j| {
        if i == j {
            Rational::zero()
        } else {
            -(beta * &psi[j]) / (&psi[i] - &psi[j])
        }
    }))
}

/// β_ij = 1/(μ_i−μ_j).
pub fn unitary_beta(mu: &[Rational]) -> Result<Matrix> {
    require_distinct(mu, "mu")?;
    let n = mu.len();
    Ok(Matrix::from_fn(n, n, |i, j| {
        if i == j {
            Rational::zero()
        } else {
            (&mu[i] - &mu[j]).recip()
        }
    }))
}

/// The non-unitary strict rime solution R̂(φ) with parameter β.
pub fn strict_rime_r(phi: &[Rational], beta: &Rational) -> Result<Operator2> {
    Ok(assemble_rime(&RimeData::from_beta(&strict_beta(phi, beta)?)))
}

/// The unitary strict rime solution R̂(μ).
pub fn unitary_rime_r(mu: &[Rational]) -> Result<Operator2> {
    Ok(assemble_rime(&RimeData::from_beta(&unitary_beta(mu)?)))
}

/// R̂² − βR̂ − (1−β)·I⊗I.
pub fn hecke_residual(r: &Operator2, beta: &Rational) -> Operator2 {
    let n = r.dim();
    let id = Operator2::identity(n);
    let lhs = &r.square() - &r.scale(beta);
    &lhs - &id.scale(&(Rational::one() - beta))
}

/// Spectral data of a Hecke matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EigenStructure {
    /// Multiplicities (m₁, m_{β−1}) of the eigenvalues 1 and β−1.
    Semisimple {
        /// Multiplicity of 1.
        m1: usize,
        /// Multiplicity of β−1.
        m_beta_minus_1: usize,
    },
    /// β = 2: the only eigenvalue is 1, R̂ ≠ I and (R̂−I)² = 0.
    Jordan,
}

/// Eigenvalue multiplicities of a Hecke matrix, or the Jordan flag at β = 2.
pub fn eigen_multiplicities(r: &Operator2, beta: &Rational) -> Result<EigenStructure> {
    if !hecke_residual(r, beta).is_zero() {
        return Err(Error::InvalidInput("Hecke residual is nonzero".into()));
    }
    let n2 = r.dim() * r.dim();
    let id = Operator2::identity(r.dim());
    let minus_one = r - &id;
    if *beta == rat(2) {
        if minus_one.is_zero() || !minus_one.square().is_zero() {
            return Err(Error::InvalidInput("expected a nontrivial Jordan block".into()));
        }
        return Ok(EigenStructure::Jordan);
    }
    let shifted = r - &id.scale(&(beta - rat(1)));
    Ok(EigenStructure::Semisimple {
        m1: n2 - minus_one.matrix().rank(),
        m_beta_minus_1: n2 - shifted.matrix().rank(),
    })
}

/// Quantum trace matrices Q = Tr₂Ψ and Q̃ = Tr₁Ψ of the skew inverse Ψ.
pub fn quantum_traces(r: &Operator2) -> Result<(Operator1, Operator1)> {
    let psi = skew_inverse(r)?;
    Ok((psi.partial_trace(Leg::Second), psi.partial_trace(Leg::First)))
}

/// Closed forms of Q and Q̃ in terms of β_ij:
/// Q^k_j = −β_jk Π_{l≠k}(1−β_jl), Q^j_j = Π_l(1−β_jl),
/// Q̃^k_j = β_jk Π_{l≠k}(1−β_lj), Q̃^j_j = Π_l(1−β_lj).
pub fn quantum_traces_closed(beta: &Matrix) -> (Operator1, Operator1) {
    let n = beta.rows();
    let one = Rational::one();
    let q = Matrix::from_fn(n, n, |k, j| {
        let prod = (0..n)
            .filter(|&l| l != k || k == j)
            .fold(one.clone(), |acc, l| acc * (&one - &beta[(j, l)]));
        if k == j {
            prod
        } else {
            -(&beta[(j, k)] * prod)
        }
    });
    let qt = Matrix::from_fn(n, n, |k, j| {
        let prod = (0..n)
            .filter(|&l| l != k || k == j)
            .fold(one.clone(), |acc, l| acc * (&one - &beta[(l, j)]));
        if k == j {
            prod
        } else {
            &beta[(j, k)] * prod
        }
    });
    (q, qt)
}

/// The vector w_a with components (w_a)^j = e_a^ĵ(values).
pub fn w_vector(values: &[Rational], a: usize) -> Result<Matrix> {
    let n = values.len();
    let mut w = Matrix::zeros(n, 1);
    for j in 0..n {
        w[(j, 0)] = elem_sym_omit(values, a, j + 1)?;
    }
    Ok(w)
}

/// Y(u,v)^j_j = Π_{l≠j}(uφ_j−vφ_l)/(φ_j−φ_l),
/// Y(u,v)^i_j = (u−v)φ_j/(φ_j−φ_i) · Π_{l≠i,j}(uφ_j−vφ_l)/(φ_j−φ_l).
pub fn invariance_y(phi: &[Rational], u: &Rational, v: &Rational) -> Result<Operator1> {
    require_distinct(phi, "phi")?;
    require_nonzero(u, "u")?;
    require_nonzero(v, "v")?;
    let n = phi.len();
    let factor = |j: usize, l: usize| (u * &phi[j] - v * &phi[l]) / (&phi[j] - &phi[l]);
    Ok(Matrix::from_fn(n, n, |i, j| {
        let prod = (0..n)
            .filter(|&l| l != i && l != j)
            .fold(Rational::one(), |acc, l| acc * factor(j, l));
        if i == j {
            prod
        } else {
            (u - v) * &phi[j] / (&phi[j] - &phi[i]) * prod
        }
    }))
}

/// Y⁰(a)^j_j = Π_{l≠j}(1 + a/(μ_j−μ_l)), Y⁰(a)^i_j = a/(μ_j−μ_i) · Π_{l≠i,j}(1 + a/(μ_j−μ_l)).
pub fn invariance_y0(mu: &[Rational], a: &Rational) -> Result<Operator1> {
    require_distinct(mu, "mu")?;
    let n = mu.len();
    let factor = |j: usize, l: usize| Rational::one() + a / (&mu[j] - &mu[l]);
    Ok(Matrix::from_fn(n, n, |i, j| {
        let prod = (0..n)
            .filter(|&l| l != i && l != j)
            .fold(Rational::one(), |acc, l| acc * factor(j, l));
        if i == j {
            prod
        } else {
            a / (&mu[j] - &mu[i]) * prod
        }
    }))
}

/// Parameter family selecting an invariance generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorKind {
    /// The non-unitary family R̂(φ).
    Nonunitary(Vec<Rational>),
    /// The unitary family R̂(μ).
    Unitary(Vec<Rational>),
}

/// Traceless generator of the determinant-one invariance group.
///
/// Non-unitary: η^i_j = φ_j/(φ_j−φ_i), η^j_j = −(n−1)/2 + Σ_{l≠j} φ_j/(φ_j−φ_l), the derivative
/// of Y(1+t/2, 1−t/2) at t = 0. Unitary: η⁰^i_j = 1/(μ_j−μ_i), η⁰^j_j = Σ_{l≠j} 1/(μ_j−μ_l).
pub fn invariance_generator(kind: &GeneratorKind) -> Result<Operator1> {
    match kind {
        GeneratorKind::Nonunitary(phi) => {
            require_distinct(phi, "phi")?;
            let n = phi.len();
            let half = Rational::new((n as i64 - 1).into(), 2.into());
            Ok(Matrix::from_fn(n, n, |i, j| {
                if i == j {
                    (0..n)
                        .filter(|&l| l != j)
                        .fold(-half.clone(), |acc, l| acc + &phi[j] / (&phi[j] - &phi[l]))
                } else {
                    &phi[j] / (&phi[j] - &phi[i])
                }
            }))
        }
        GeneratorKind::Unitary(mu) => {
            require_distinct(mu, "mu")?;
            let n = mu.len();
            Ok(Matrix::from_fn(n, n, |i, j| {
                if i == j {
                    (0..n)
                        .filter(|&l| l != j)
                        .fold(Rational::zero(), |acc, l| acc + (&mu[j] - &mu[l]).recip())
                } else {
                    (&mu[j] - &mu[i]).recip()
                }
            }))
        }
    }
}

/// R̂ (Y⊗Y) − (Y⊗Y) R̂.
pub fn invariance_residual(r: &Operator2, y: &Operator1) -> Operator2 {
    let yy = Operator2::tensor(y, y);
    &(r * &yy) - &(&yy * r)
}

/// [R̂, η⊗1 + 1⊗η].
pub fn generator_residual(r: &Operator2, eta: &Operator1) -> Operator2 {
    let id = Matrix::identity(eta.rows());
    let s = &Operator2::tensor(eta, &id) + &Operator2::tensor(&id, eta);
    r.commutator(&s)
}

/// Q w_i − Σ_{s≤i} C(n−1−s, i−s) w_s for the unitary family, one column per i.
pub fn unitary_jordan_residual(mu: &[Rational]) -> Result<Matrix> {
    let n = mu.len();
    let (q, _) = quantum_traces(&unitary_rime_r(mu)?)?;
    let mut out = Matrix::zeros(n, n);
    for i in 0..n {
        let mut res = &q * &w_vector(mu, i)?;
        for s in 0..=i {
            let c = binomial((n - 1 - s) as i64, (i - s) as i64);
            res = &res - &w_vector(mu, s)?.scale(&c);
        }
        for r in 0..n {
            out[(r, i)] = res[(r, 0)].clone();
        }
    }
    Ok(out)
}

/// Q w_a − (1−β)^{n−1−a} w_a for the non-unitary family, one column per a.
pub fn nonunitary_eigen_residual(phi: &[Rational], beta: &Rational) -> Result<Matrix> {
    let n = phi.len();
    let (q, _) = quantum_traces_closed(&strict_beta(phi, beta)?);
    let mut out = Matrix::zeros(n, n);
    for a in 0..n {
        let w = w_vector(phi, a)?;
        let ev = powi(&(Rational::one() - beta), (n - 1 - a) as i64);
        let res = &(&q * &w) - &w.scale(&ev);
        for r in 0..n {
            out[(r, a)] = res[(r, 0)].clone();
        }
    }
    Ok(out)
}

/// R̂₂₁(φ) − (F⁻¹⊗F⁻¹) R̂(φ⁻¹) (F⊗F) with F = diag(φ); requires φ_i ≠ 0.
pub fn reversal_residual_nonunitary(phi: &[Rational], beta: &Rational) -> Result<Operator2> {
    for p in phi {
        require_nonzero(p, "phi entry")?;
    }
    let n = phi.len();
    let inv: Vec<Rational> = phi.iter().map(|p| p.recip()).collect();
    let f = Matrix::from_fn(n, n, |i, j| if i == j { phi[i].clone() } else { Rational::zero() });
    let finv = f.inverse()?;
    let rhs = strict_rime_r(&inv, beta)?.conjugate(&finv)?;
    Ok(&strict_rime_r(phi, beta)?.reversed() - &rhs)
}

/// R̂₂₁(μ) − R̂(−μ).
pub fn reversal_residual_unitary(mu: &[Rational]) -> Result<Operator2> {
    let neg: Vec<Rational> = mu.iter().map(|m| -m.clone()).collect();
    Ok(&unitary_rime_r(mu)?.reversed() - &unitary_rime_r(&neg)?)
}

/// Data of the standard GL(n) ice matrix: α_i = q, α_ij = 1, β_ij = q − q⁻¹ for i > j.
pub fn ice_standard_data(n: usize, q: &Rational) -> Result<RimeData> {
    require_nonzero(q, "q")?;
    let d = q - q.recip();
    let mut data = RimeData::zero(n);
    for i in 0..n {
        for j in 0..n {
            if i == j {
                data.alpha[(i, i)] = q.clone();
            } else {
                data.alpha[(i, j)] = Rational::one();
                if i > j {
                    data.beta[(i, j)] = d.clone();
                }
            }
        }
    }
    Ok(data)
}

/// The plain R = P R̂.
pub fn plain_r(r_hat: &Operator2) -> Operator2 {
    &permutation_p(r_hat.dim()) * r_hat
}

#[cfg(test)]
mod tests;
