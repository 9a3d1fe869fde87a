//! Operators on V, V⊗V and V⊗V⊗V, and the residuals of the Yang–Baxter-type equations.
//!
//! Index conventions: an [`Operator1`] entry A^i_j sits in row i, column j and acts by
//! (Av)^i = A^i_j v^j. An [`Operator2`] entry R^{ij}_{kl} sits in row (ij), column (kl), and
//! composition is (RS)^{ij}_{kl} = R^{ij}_{ab} S^{ab}_{kl}. All public indices are 1-based.

use crate::error::{Error, Result};
use crate::kernel::{format_rational, Matrix, Rational};
use num::{One, Zero};
use std::ops::{Add, Mul, Neg, Sub};

/// An n×n operator on V.
pub type Operator1 = Matrix;

/// A pair of tensor legs of V⊗V⊗V.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Legs {
    /// Legs 1 and 2.
    L12,
    /// Legs 1 and 3.
    L13,
    /// Legs 2 and 3.
    L23,
}

/// A single tensor leg of V⊗V.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Leg {
    /// First factor.
    First,
    /// Second factor.
    Second,
}

/// An endomorphism of V⊗V with entries R^{ij}_{kl}.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Operator2 {
    n: usize,
    m: Matrix,
}

impl Operator2 {
    /// Builds from a 1-based entry function `f(i, j, k, l) = R^{ij}_{kl}`.
    pub fn from_fn<F: FnMut(usize, usize, usize, usize) -> Rational>(n: usize, mut f: F) -> Self {
        let m = Matrix::from_fn(n * n, n * n, |r, c| f(r / n + 1, r % n + 1, c / n + 1, c % n + 1));
        Operator2 { n, m }
    }

    /// Wraps an n²×n² matrix whose row (ij) is (i−1)n + (j−1).
    pub fn from_matrix(n: usize, m: Matrix) -> Result<Self> {
        if m.rows() != n * n || m.cols() != n * n {
            return Err(Error::DimensionMismatch(format!(
                "expected {0}x{0}, got {1}x{2}",
                n * n,
                m.rows(),
                m.cols()
            )));
        }
        Ok(Operator2 { n, m })
    }

    /// Zero operator.
    pub fn zero(n: usize) -> Self {
        Operator2 {
            n,
            m: Matrix::zeros(n * n, n * n),
        }
    }

    /// Identity I⊗I.
    pub fn identity(n: usize) -> Self {
        Operator2 {
            n,
            m: Matrix::identity(n * n),
        }
    }

    /// Dimension n of V.
    pub fn dim(&self) -> usize {
        self.n
    }

    /// Underlying n²×n² matrix.
    pub fn matrix(&self) -> &Matrix {
        &self.m
    }

    /// Entry R^{ij}_{kl}.
    pub fn at(&self, i: usize, j: usize, k: usize, l: usize) -> &Rational {
        let n = self.n;
        &self.m[((i - 1) * n + j - 1, (k - 1) * n + l - 1)]
    }

    /// Sets R^{ij}_{kl}.
    pub fn set(&mut self, i: usize, j: usize, k: usize, l: usize, v: Rational) {
        let n = self.n;
        self.m[((i - 1) * n + j - 1, (k - 1) * n + l - 1)] = v;
    }

    /// Adds `v` to R^{ij}_{kl}.
    pub fn add_at(&mut self, i: usize, j: usize, k: usize, l: usize, v: &Rational) {
        let n = self.n;
        self.m[((i - 1) * n + j - 1, (k - 1) * n + l - 1)] += v;
    }

    /// A⊗B, i.e. (A⊗B)^{ij}_{kl} = A^i_k B^j_l.
    pub fn tensor(a: &Operator1, b: &Operator1) -> Self {
        assert_eq!(a.rows(), b.rows());
        Operator2 {
            n: a.rows(),
            m: a.kron(b),
        }
    }

    /// x∧y = x⊗y − y⊗x.
    pub fn wedge(a: &Operator1, b: &Operator1) -> Self {
        &Self::tensor(a, b) - &Self::tensor(b, a)
    }

    /// Scalar multiple.
    pub fn scale(&self, s: &Rational) -> Self {
        Operator2 {
            n: self.n,
            m: self.m.scale(s),
        }
    }

    /// True when every entry vanishes.
    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    /// Reversal R₂₁ = P R P, i.e. (R₂₁)^{ij}_{kl} = R^{ji}_{lk}.
    pub fn reversed(&self) -> Self {
        Self::from_fn(self.n, |i, j, k, l| self.at(j, i, l, k).clone())
    }

    /// Matrix transpose, (Rᵗ)^{ij}_{kl} = R^{kl}_{ij}.
    pub fn transpose(&self) -> Self {
        Operator2 {
            n: self.n,
            m: self.m.transpose(),
        }
    }

    /// Inverse operator.
    pub fn inverse(&self) -> Result<Self> {
        Ok(Operator2 {
            n: self.n,
            m: self.m.inverse()?,
        })
    }

    /// Square RR.
    pub fn square(&self) -> Self {
        self * self
    }

    /// Commutator RS − SR.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// (T⊗T) R (T⊗T)⁻¹.
    pub fn conjugate(&self, t: &Operator1) -> Result<Self> {
        let tt = Self::tensor(t, t);
        let inv = tt.inverse()?;
        Ok(&(&tt * self) * &inv)
    }

    /// Partial trace: (Tr₂ R)^i_k = Σ_a R^{ia}_{ka}; (Tr₁ R)^j_l = Σ_a R^{aj}_{al}.
    pub fn partial_trace(&self, leg: Leg) -> Operator1 {
        let n = self.n;
        Matrix::from_fn(n, n, |r, c| {
            let mut s = Rational::zero();
            for a in 1..=n {
                s += match leg {
                    Leg::Second => self.at(r + 1, a, c + 1, a),
                    Leg::First => self.at(a, r + 1, a, c + 1),
                };
            }
            s
        })
    }

    /// Coefficients (u, v) with R² = uR + vI, when R is not scalar and such a relation exists.
    pub fn quadratic_relation(&self) -> Option<(Rational, Rational)> {
        let size = self.m.rows();
        let sq = self.square();
        let id = Matrix::identity(size);
        let aug = Matrix::from_fn(size * size, 3, |e, c| {
            let (r, k) = (e / size, e % size);
            match c {
                0 => self.m[(r, k)].clone(),
                1 => id[(r, k)].clone(),
                _ => sq.m[(r, k)].clone(),
            }
        });
        let (red, pivots) = aug.rref();
        (pivots == [0, 1]).then(|| (red[(0, 2)].clone(), red[(1, 2)].clone()))
    }

    /// First nonzero entry, keyed `"i,j|k,l"`.
    pub fn witness(&self) -> Option<(String, Rational)> {
        let n = self.n;
        self.m.first_nonzero().map(|(r, c, v)| {
            (
                format!("{},{}|{},{}", r / n + 1, r % n + 1, c / n + 1, c % n + 1),
                v,
            )
        })
    }

    /// Nonzero entries as `("i,j|k,l", "p/q")` pairs in row-major order.
    pub fn sparse_entries(&self) -> Vec<(String, String)> {
        let n = self.n;
        let mut out = Vec::new();
        for r in 0..n * n {
            for c in 0..n * n {
                let v = &self.m[(r, c)];
                if !v.is_zero() {
                    out.push((
                        format!("{},{}|{},{}", r / n + 1, r % n + 1, c / n + 1, c % n + 1),
                        format_rational(v),
                    ));
                }
            }
        }
        out
    }
}

impl Mul for &Operator2 {
    type Output = Operator2;
    fn mul(self, o: &Operator2) -> Operator2 {
        assert_eq!(self.n, o.n);
        Operator2 {
            n: self.n,
            m: &self.m * &o.m,
        }
    }
}

impl Add for &Operator2 {
    type Output = Operator2;
    fn add(self, o: &Operator2) -> Operator2 {
        assert_eq!(self.n, o.n);
        Operator2 {
            n: self.n,
            m: &self.m + &o.m,
        }
    }
}

impl Sub for &Operator2 {
    type Output = Operator2;
    fn sub(self, o: &Operator2) -> Operator2 {
        assert_eq!(self.n, o.n);
        Operator2 {
            n: self.n,
            m: &self.m - &o.m,
        }
    }
}

impl Neg for &Operator2 {
    type Output = Operator2;
    fn neg(self) -> Operator2 {
        Operator2 {
            n: self.n,
            m: -&self.m,
        }
    }
}

/// The permutation operator P^{ij}_{kl} = δ^i_l δ^j_k.
pub fn permutation_p(n: usize) -> Operator2 {
    Operator2::from_fn(n, |i, j, k, l| {
        if i == l && j == k {
            Rational::one()
        } else {
            Rational::zero()
        }
    })
}

/// An endomorphism of V⊗V⊗V, stored as an n³×n³ matrix with row (ijk) = (i−1)n² + (j−1)n + (k−1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Operator3 {
    n: usize,
    m: Matrix,
}

impl Operator3 {
    /// Zero operator.
    pub fn zero(n: usize) -> Self {
        Operator3 {
            n,
            m: Matrix::zeros(n * n * n, n * n * n),
        }
    }

    /// Identity I⊗I⊗I.
    pub fn identity(n: usize) -> Self {
        Operator3 {
            n,
            m: Matrix::identity(n * n * n),
        }
    }

    /// Dimension n of V.
    pub fn dim(&self) -> usize {
        self.n
    }

    /// Underlying n³×n³ matrix.
    pub fn matrix(&self) -> &Matrix {
        &self.m
    }

    /// Entry with 1-based row legs (a,b,c) and column legs (d,e,f).
    pub fn at(&self, row: [usize; 3], col: [usize; 3]) -> &Rational {
        let n = self.n;
        let r = (row[0] - 1) * n * n + (row[1] - 1) * n + row[2] - 1;
        let c = (col[0] - 1) * n * n + (col[1] - 1) * n + col[2] - 1;
        &self.m[(r, c)]
    }

    /// Embeds `op` on the named pair of legs, identity on the remaining leg.
    pub fn lift(op: &Operator2, legs: Legs) -> Self {
        let n = op.n;
        let n3 = n * n * n;
        let mut m = Matrix::zeros(n3, n3);
        let idx = |a: usize, b: usize, c: usize| a * n * n + b * n + c;
        for r in 0..n * n {
            for c in 0..n * n {
                let v = &op.m[(r, c)];
                if v.is_zero() {
                    continue;
                }
                let (i, j, k, l) = (r / n, r % n, c / n, c % n);
                for s in 0..n {
                    let (row, col) = match legs {
                        Legs::L12 => (idx(i, j, s), idx(k, l, s)),
                        Legs::L23 => (idx(s, i, j), idx(s, k, l)),
                        Legs::L13 => (idx(i, s, j), idx(k, s, l)),
                    };
                    m[(row, col)] = v.clone();
                }
            }
        }
        Operator3 { n, m }
    }

    /// Embeds `a` on leg 1, 2 or 3.
    pub fn lift1(a: &Operator1, leg: usize) -> Self {
        let n = a.rows();
        let id = Matrix::identity(n);
        let m = match leg {
            1 => a.kron(&id).kron(&id),
            2 => id.kron(a).kron(&id),
            3 => id.kron(&id).kron(a),
            _ => panic!("leg must be 1, 2 or 3"),
        };
        Operator3 { n, m }
    }

    /// Scalar multiple.
    pub fn scale(&self, s: &Rational) -> Self {
        Operator3 {
            n: self.n,
            m: self.m.scale(s),
        }
    }

    /// True when every entry vanishes.
    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    /// Commutator XY − YX.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// Partial trace over one leg, leaving an operator on the other two (in order).
    pub fn partial_trace(&self, leg: usize) -> Operator2 {
        let n = self.n;
        Operator2::from_fn(n, |i, j, k, l| {
            let mut s = Rational::zero();
            for a in 1..=n {
                s += match leg {
                    1 => self.at([a, i, j], [a, k, l]),
                    2 => self.at([i, a, j], [k, a, l]),
                    3 => self.at([i, j, a], [k, l, a]),
                    _ => panic!("leg must be 1, 2 or 3"),
                };
            }
            s
        })
    }

    /// First nonzero entry, keyed `"a,b,c|d,e,f"`.
    pub fn witness(&self) -> Option<(String, Rational)> {
        let n = self.n;
        let split = |x: usize| (x / (n * n) + 1, (x / n) % n + 1, x % n + 1);
        self.m.first_nonzero().map(|(r, c, v)| {
            let (a, b, cc) = split(r);
            let (d, e, f) = split(c);
            (format!("{a},{b},{cc}|{d},{e},{f}"), v)
        })
    }
}

impl Mul for &Operator3 {
    type Output = Operator3;
    fn mul(self, o: &Operator3) -> Operator3 {
        assert_eq!(self.n, o.n);
        Operator3 {
            n: self.n,
            m: &self.m * &o.m,
        }
    }
}

impl Add for &Operator3 {
    type Output = Operator3;
    fn add(self, o: &Operator3) -> Operator3 {
        Operator3 {
            n: self.n,
            m: &self.m + &o.m,
        }
    }
}

impl Sub for &Operator3 {
    type Output = Operator3;
    fn sub(self, o: &Operator3) -> Operator3 {
        Operator3 {
            n: self.n,
            m: &self.m - &o.m,
        }
    }
}

/// Lifts `op` to the named legs.
pub fn lift(op: &Operator2, legs: Legs) -> Operator3 {
    Operator3::lift(op, legs)
}

/// (R⊗1)(1⊗R)(R⊗1) − (1⊗R)(R⊗1)(1⊗R).
pub fn yb_residual(r: &Operator2) -> Operator3 {
    let r12 = lift(r, Legs::L12);
    let r23 = lift(r, Legs::L23);
    let a = &r12 * &(&r23 * &r12);
    let b = &r23 * &(&r12 * &r23);
    &a - &b
}

/// R₁₂R₁₃R₂₃ − R₂₃R₁₃R₁₂, the Yang–Baxter equation in non-braid form.
pub fn qybe_residual(r: &Operator2) -> Operator3 {
    let r12 = lift(r, Legs::L12);
    let r13 = lift(r, Legs::L13);
    let r23 = lift(r, Legs::L23);
    let a = &r12 * &(&r13 * &r23);
    let b = &r23 * &(&r13 * &r12);
    &a - &b
}

/// [r₁₂,r₁₃] + [r₁₂,r₂₃] + [r₁₃,r₂₃].
pub fn cybe_residual(r: &Operator2) -> Operator3 {
    let r12 = lift(r, Legs::L12);
    let r13 = lift(r, Legs::L13);
    let r23 = lift(r, Legs::L23);
    let s = &r12.commutator(&r13) + &r12.commutator(&r23);
    &s + &r13.commutator(&r23)
}

/// r∘r = r₁₂r₁₃ + r₁₃r₂₃ − r₂₃r₁₂, or with `primed` the form r∘′r = r₁₃r₁₂ + r₂₃r₁₃ − r₁₂r₂₃.
pub fn circ(r: &Operator2, primed: bool) -> Operator3 {
    let r12 = lift(r, Legs::L12);
    let r13 = lift(r, Legs::L13);
    let r23 = lift(r, Legs::L23);
    if primed {
        &(&(&r13 * &r12) + &(&r23 * &r13)) - &(&r12 * &r23)
    } else {
        &(&(&r12 * &r13) + &(&r13 * &r23)) - &(&r23 * &r12)
    }
}

/// r∘r − c·r₁₃ (or the primed form); c = 0 gives the associative equation.
pub fn nhacybe_residual(r: &Operator2, c: &Rational, primed: bool) -> Operator3 {
    &circ(r, primed) - &lift(r, Legs::L13).scale(c)
}

/// Partial trace of an [`Operator2`] over one leg.
pub fn partial_trace(op: &Operator2, leg: Leg) -> Operator1 {
    op.partial_trace(leg)
}

/// The skew inverse Ψ with Tr₂(R̂₁₂ Ψ₂₃) = P₁₃.
///
/// In components Σ_{a,c} R^{ia}_{kc} Ψ^{cj}_{al} = δ^i_l δ^j_k, which is linear in Ψ with
/// coefficient matrix M_{(ik),(ca)} = R^{ia}_{kc}.
pub fn skew_inverse(r: &Operator2) -> Result<Operator2> {
    let n = r.dim();
    let idx = |a: usize, b: usize| (a - 1) * n + b - 1;
    let mut m = Matrix::zeros(n * n, n * n);
    let mut rhs = Matrix::zeros(n * n, n * n);
    for i in 1..=n {
        for k in 1..=n {
            for a in 1..=n {
                for c in 1..=n {
                    m[(idx(i, k), idx(c, a))] = r.at(i, a, k, c).clone();
                }
            }
            for j in 1..=n {
                for l in 1..=n {
                    if i == l && j == k {
                        rhs[(idx(i, k), idx(j, l))] = Rational::one();
                    }
                }
            }
        }
    }
    let x = m.solve(&rhs).map_err(|_| Error::NotSkewInvertible)?;
    Ok(Operator2::from_fn(n, |c, j, a, l| x[(idx(c, a), idx(j, l))].clone()))
}

/// Tr₂(R̂₁₂ Ψ₂₃) − P₁₃ as an operator on legs (1,3).
pub fn skew_inverse_residual(r: &Operator2, psi: &Operator2) -> Operator2 {
    let n = r.dim();
    let prod = &lift(r, Legs::L12) * &lift(psi, Legs::L23);
    &prod.partial_trace(2) - &permutation_p(n)
}
