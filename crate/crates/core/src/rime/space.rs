//! Degree-two relations of the quantum spaces attached to an R-matrix.
//!
//! A relation is a row vector over the n² ordered monomials, with monomial x^a x^b in column
//! (a−1)n + (b−1). Relation spaces are compared through their reduced row-echelon bases.

use crate::kernel::{Matrix, Rational};
use crate::tensor::Operator2;

/// Which side the generators sit on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// R^{ij}_{kl} x^k x^l = λ x^i x^j.
    Right,
    /// x_j x_i R^{ij}_{kl} = λ x_l x_k.
    Left,
}

/// Even spaces use the eigenvalue 1, odd spaces the eigenvalue β−1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    /// Eigenvalue 1.
    Even,
    /// Eigenvalue β−1.
    Odd,
}

impl Parity {
    /// The eigenvalue selecting this parity for a Hecke matrix with parameter β.
    pub fn eigenvalue(self, beta: &Rational) -> Rational {
        match self {
            Parity::Even => crate::kernel::rat(1),
            Parity::Odd => beta - crate::kernel::rat(1),
        }
    }
}

/// Canonical (reduced row-echelon) basis of the span of the given relation rows.
pub fn relation_basis(rows: &Matrix) -> Matrix {
    rows.row_space_basis()
}

/// Relation space of the quantum space of R̂ with eigenvalue λ.
pub fn quantum_space_relations(r: &Operator2, eigenvalue: &Rational, side: Side) -> Matrix {
    let n = r.dim();
    let idx = |a: usize, b: usize| (a - 1) * n + b - 1;
    let mut rows = Matrix::zeros(n * n, n * n);
    for p in 1..=n {
        for q in 1..=n {
            let row = idx(p, q);
            match side {
                Side::Right => {
                    for k in 1..=n {
                        for l in 1..=n {
                            rows[(row, idx(k, l))] += r.at(p, q, k, l);
                        }
                    }
                    rows[(row, idx(p, q))] -= eigenvalue;
                }
                Side::Left => {
                    // Relation indexed by the lower pair (k,l) = (p,q).
                    for i in 1..=n {
                        for j in 1..=n {
                            rows[(row, idx(j, i))] += r.at(i, j, p, q);
                        }
                    }
                    rows[(row, idx(q, p))] -= eigenvalue;
                }
            }
        }
    }
    relation_basis(&rows)
}
