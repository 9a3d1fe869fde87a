//! Cremmer–Gervais R-matrices, the symmetric-function change of basis to the strict rime family,
//! diagonal twists, and the rime form of the standard solution.

use crate::error::{Error, Result};
use crate::kernel::{
    elem_sym_omit, powi, rat, require_distinct, require_nonzero, Matrix, Rational,
};
use crate::rime::{strict_beta, strict_rime_r, relation_basis};
use crate::tensor::{Operator1, Operator2};
use num::{One, Zero};

/// Parameters of the two-parameter Cremmer–Gervais matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CgParams {
    /// Dimension.
    pub n: usize,
    /// The value q⁻².
    pub qsq_inv: Rational,
    /// Twist parameter p.
    pub p: Rational,
}

impl CgParams {
    /// Parameters with p = 1.
    pub fn untwisted(n: usize, qsq_inv: Rational) -> Self {
        CgParams {
            n,
            qsq_inv,
            p: Rational::one(),
        }
    }

    /// Hecke parameter β = 1 − q⁻².
    pub fn beta(&self) -> Rational {
        Rational::one() - &self.qsq_inv
    }
}

/// The Cremmer–Gervais matrix R̂_{CG,p}.
pub fn cg_matrix(params: &CgParams) -> Result<Operator2> {
    require_nonzero(&params.qsq_inv, "q^-2")?;
    require_nonzero(&params.p, "p")?;
    let n = params.n;
    let b = params.beta();
    let p = &params.p;
    let mut r = Operator2::zero(n);
    for i in 1..=n {
        for j in 1..=n {
            let q = if i > j { params.qsq_inv.clone() } else { Rational::one() };
            r.set(i, j, j, i, q * powi(p, i as i64 - j as i64));
            for s in i..j {
                r.add_at(i, j, s, i + j - s, &(&b * powi(p, i as i64 - s as i64)));
            }
            for s in j + 1..i {
                r.add_at(i, j, s, i + j - s, &-(&b * powi(p, i as i64 - s as i64)));
            }
        }
    }
    Ok(r)
}

/// D(p) = diag(1, p, …, p^{n−1}).
pub fn d_matrix(n: usize, p: &Rational) -> Operator1 {
    Matrix::from_fn(n, n, |i, j| {
        if i == j {
            powi(p, i as i64)
        } else {
            Rational::zero()
        }
    })
}

/// D(p)₁ R̂ D(p)₁⁻¹, after checking that D(p)⊗D(p) commutes with R̂.
pub fn d_twist_conjugate(r: &Operator2, p: &Rational) -> Result<Operator2> {
    require_nonzero(p, "p")?;
    let n = r.dim();
    let d = d_matrix(n, p);
    let dd = Operator2::tensor(&d, &d);
    if !r.commutator(&dd).is_zero() {
        return Err(Error::InvalidInput(
            "D(p)⊗D(p) does not commute with the R-matrix".into(),
        ));
    }
    let id = Matrix::identity(n);
    let d1 = Operator2::tensor(&d, &id);
    let d1inv = Operator2::tensor(&d.inverse()?, &id);
    Ok(&(&d1 * r) * &d1inv)
}

/// X^k_j = e_{j−1}^k̂(φ) and its closed-form inverse (X⁻¹)^j_i = (−1)^{j−1} φ_i^{n−j} / Π_{k≠i}(φ_i−φ_k).
pub fn x_change_of_basis(phi: &[Rational]) -> Result<(Operator1, Operator1)> {
    require_distinct(phi, "phi")?;
    let n = phi.len();
    let mut x = Matrix::zeros(n, n);
    for k in 0..n {
        for j in 0..n {
            x[(k, j)] = elem_sym_omit(phi, j, k + 1)?;
        }
    }
    let xinv = Matrix::from_fn(n, n, |j, i| {
        let mut den = Rational::one();
        for k in 0..n {
            if k != i {
                den *= &phi[i] - &phi[k];
            }
        }
        let v = powi(&phi[i], (n - 1 - j) as i64) / den;
        if j % 2 == 1 {
            -v
        } else {
            v
        }
    });
    Ok((x, xinv))
}

/// R̂(φ,β)(X⊗X) − (X⊗X)R̂_CG with q⁻² = 1 − β.
pub fn cg_equivalence_residual(phi: &[Rational], beta: &Rational) -> Result<Operator2> {
    let qsq_inv = Rational::one() - beta;
    if qsq_inv.is_zero() {
        return Err(Error::InvalidInput("beta = 1 gives q^-2 = 0".into()));
    }
    let r = strict_rime_r(phi, beta)?;
    let (x, _) = x_change_of_basis(phi)?;
    let xx = Operator2::tensor(&x, &x);
    let cg = cg_matrix(&CgParams::untwisted(phi.len(), qsq_inv))?;
    Ok(&(&r * &xx) - &(&xx * &cg))
}

fn e_omit(phi: &[Rational], r: i64, omit: usize) -> Result<Rational> {
    if r < 0 {
        Ok(Rational::zero())
    } else {
        elem_sym_omit(phi, r as usize, omit)
    }
}

/// LHS − RHS of the symmetric-function identity reducing the change of basis for i ≠ j:
/// (φ_i e_{k−1}^î − φ_j e_{k−1}^ĵ)(e_{l−1}^î − e_{l−1}^ĵ)/(φ_i−φ_j)
/// = Σ_{s ≥ max(1,k−l+2)} (e_{l+s−2}^î e_{k−s}^ĵ − e_{l+s−2}^ĵ e_{k−s}^î).
pub fn sectype_identity_residual(
    phi: &[Rational],
    i: usize,
    j: usize,
    k: usize,
    l: usize,
) -> Result<Rational> {
    require_distinct(phi, "phi")?;
    let n = phi.len();
    if i == j {
        return Err(Error::InvalidInput("sectype identity needs i != j".into()));
    }
    for idx in [i, j, k, l] {
        if idx == 0 || idx > n {
            return Err(Error::IndexOutOfRange(format!("index {idx} for n={n}")));
        }
    }
    let (k, l) = (k as i64, l as i64);
    let lhs = (&phi[i - 1] * e_omit(phi, k - 1, i)? - &phi[j - 1] * e_omit(phi, k - 1, j)?)
        * (e_omit(phi, l - 1, i)? - e_omit(phi, l - 1, j)?)
        / (&phi[i - 1] - &phi[j - 1]);
    let mut rhs = Rational::zero();
    for s in (k - l + 2).max(1)..=k {
        rhs += e_omit(phi, l + s - 2, i)? * e_omit(phi, k - s, j)?
            - e_omit(phi, l + s - 2, j)? * e_omit(phi, k - s, i)?;
    }
    Ok(lhs - rhs)
}

/// Closed form of X(φ′)X(φ)⁻¹: entry (i,j) is Π_{k≠i}(φ_j−φ′_k) / Π_{l≠j}(φ_j−φ_l).
///
/// The factor (φ_j−φ′_i) of the numerator is cancelled against the prefactor, so no pole occurs.
pub fn phi_transition(phi: &[Rational], phi_p: &[Rational]) -> Result<Operator1> {
    require_distinct(phi, "phi")?;
    require_distinct(phi_p, "phi'")?;
    let n = phi.len();
    if phi_p.len() != n {
        return Err(Error::DimensionMismatch(format!("{} vs {}", n, phi_p.len())));
    }
    Ok(Matrix::from_fn(n, n, |i, j| {
        let mut num = Rational::one();
        let mut den = Rational::one();
        for k in 0..n {
            if k != i {
                num *= &phi[j] - &phi_p[k];
            }
            if k != j {
                den *= &phi[j] - &phi[k];
            }
        }
        num / den
    }))
}

/// ∂e_j/∂φ_i − e_{j−1}^î over all i, j ∈ 1..n (row i, column j).
///
/// The derivative is taken combinatorially: the sum over j-subsets containing i of the product of
/// the remaining entries.
pub fn generating_function_residual(phi: &[Rational]) -> Result<Matrix> {
    let n = phi.len();
    let mut out = Matrix::zeros(n, n);
    for i in 0..n {
        let mut deriv = vec![Rational::zero(); n + 1];
        for mask in 0u32..(1 << n) {
            if mask & (1 << i) == 0 {
                continue;
            }
            let mut prod = Rational::one();
            for (t, v) in phi.iter().enumerate() {
                if t != i && mask & (1 << t) != 0 {
                    prod *= v;
                }
            }
            deriv[mask.count_ones() as usize] += prod;
        }
        for j in 1..=n {
            out[(i, j - 1)] = &deriv[j] - elem_sym_omit(phi, j - 1, i + 1)?;
        }
    }
    Ok(out)
}

/// (R̂_CG)^{ab}_{kl} − δ^a_k δ^b_l − δ^a_l δ^b_k + (R̂_CG)^{ba}_{kl}.
pub fn cg_symmetry_residual(n: usize, qsq_inv: &Rational) -> Result<Operator2> {
    let r = cg_matrix(&CgParams::untwisted(n, qsq_inv.clone()))?;
    Ok(Operator2::from_fn(n, |a, b, k, l| {
        let mut v = r.at(a, b, k, l) + r.at(b, a, k, l);
        if a == k && b == l {
            v -= rat(1);
        }
        if a == l && b == k {
            v -= rat(1);
        }
        v
    }))
}

/// Right even quantum plane of R̂_{CG,1}, written directly from the ordering relations
/// y^i y^j = q² y^j y^i + (q²−1)(y^{i+1}y^{j−1} + … + y^{j−1}y^{i+1}) for i < j.
pub fn cg_plane_relations(n: usize, qsq_inv: &Rational) -> Result<Matrix> {
    require_nonzero(qsq_inv, "q^-2")?;
    let qsq = qsq_inv.recip();
    let idx = |a: usize, b: usize| a * n + b;
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut row = vec![Rational::zero(); n * n];
            row[idx(i, j)] += rat(1);
            row[idx(j, i)] -= &qsq;
            for s in 1..j - i {
                row[idx(i + s, j - s)] -= &qsq - rat(1);
            }
            rows.push(row);
        }
    }
    Ok(relation_basis(&Matrix::from_rows(rows)))
}

/// Relations Σ r_{ab} x^a x^b rewritten in y through x = X y, i.e. each row times X⊗X.
pub fn substitute_relations(relations: &Matrix, x: &Operator1) -> Matrix {
    relation_basis(&(relations * &x.kron(x)))
}

/// Right even relations of the strict rime matrix, written from the rime quadratic relations
/// [x^i,x^j] + (β_ij x^i + β_ji x^j)(x^i − x^j) = 0.
pub fn rime_plane_relations(phi: &[Rational], beta: &Rational) -> Result<Matrix> {
    let b = strict_beta(phi, beta)?;
    let n = phi.len();
    let idx = |a: usize, c: usize| a * n + c;
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut row = vec![Rational::zero(); n * n];
            row[idx(i, j)] += rat(1) - &b[(i, j)];
            row[idx(j, i)] += &b[(j, i)] - rat(1);
            row[idx(i, i)] += &b[(i, j)];
            row[idx(j, j)] -= &b[(j, i)];
            rows.push(row);
        }
    }
    Ok(relation_basis(&Matrix::from_rows(rows)))
}

/// Output of [`standard_riming`].
#[derive(Clone, Debug)]
pub struct StandardRiming {
    /// Standard solution R̂_c in the exchange form u^i v^j = (R̂_c)^{ij}_{kl} v^k u^l.
    pub rc: Operator2,
    /// X̃^i_j = 1 − θ_ji (lower-triangular ones).
    pub xtilde: Operator1,
    /// (X̃⊗X̃) R̂_c (X̃⁻¹⊗X̃⁻¹).
    pub r_prime: Operator2,
    /// R̂′ minus the operator read off the transformed exchange relations.
    pub residual: Operator2,
}

/// Operator read off u^iv^i = v^iu^i, u^iv^j = v^ju^i + (1−q⁻²)v^iu^j (i<j), u^iv^j = q⁻² v^ju^i (i>j).
pub fn standard_exchange_matrix(n: usize, qsq_inv: &Rational) -> Operator2 {
    let b = Rational::one() - qsq_inv;
    let mut r = Operator2::zero(n);
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                r.set(i, i, i, i, rat(1));
            } else if i < j {
                r.set(i, j, j, i, rat(1));
                r.set(i, j, i, j, b.clone());
            } else {
                r.set(i, j, j, i, qsq_inv.clone());
            }
        }
    }
    r
}

/// Operator read off the relations in the summed variables U^i = u¹+…+u^i:
/// U^iV^i = V^iU^i; U^iV^j = V^jU^i + (1−q⁻²)(V^iU^j − V^iU^i) (i<j);
/// U^iV^j = q⁻² V^jU^i + (1−q⁻²)V^jU^j (i>j).
pub fn rimed_exchange_matrix(n: usize, qsq_inv: &Rational) -> Operator2 {
    let b = Rational::one() - qsq_inv;
    let mut r = Operator2::zero(n);
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                r.set(i, i, i, i, rat(1));
            } else if i < j {
                r.set(i, j, j, i, rat(1));
                r.set(i, j, i, j, b.clone());
                r.set(i, j, i, i, -b.clone());
            } else {
                r.set(i, j, j, i, qsq_inv.clone());
                r.set(i, j, j, j, b.clone());
            }
        }
    }
    r
}

/// Conjugates the standard solution by X̃ and compares with the rimed exchange relations.
pub fn standard_riming(n: usize, qsq_inv: &Rational) -> Result<StandardRiming> {
    if n < 2 {
        return Err(Error::InvalidInput("standard riming needs n >= 2".into()));
    }
    require_nonzero(qsq_inv, "q^-2")?;
    let rc = standard_exchange_matrix(n, qsq_inv);
    let xtilde = Matrix::from_fn(n, n, |i, j| if j <= i { rat(1) } else { rat(0) });
    let r_prime = rc.conjugate(&xtilde)?;
    let residual = &r_prime - &rimed_exchange_matrix(n, qsq_inv);
    Ok(StandardRiming {
        rc,
        xtilde,
        r_prime,
        residual,
    })
}
