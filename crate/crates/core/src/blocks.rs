//! Catalog of two-dimensional (4×4) Yang–Baxter solutions, their spectral properties, the basis
//! changes relating them, and their transpose/reversal/inverse symmetries.

use crate::error::{Error, Result};
use crate::kernel::{rat, rational_sqrt, require_nonzero, Matrix, Rational};
use crate::rime::RimeData;
use crate::tensor::{skew_inverse, Operator1, Operator2};
use num::{One, Signed, Zero};

/// A member of the two-dimensional catalog with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlockKind {
    /// Rime GL(2)-type block with α₁₂ α₂₁ ≠ 0 and γ₂₁ = 0.
    Rbl1 { q: Rational, gamma: Rational },
    /// Rime GL(1|1)-type block with α₁₂ = −α₁.
    Rbl2 { q: Rational, gamma: Rational },
    /// Rime GL(2)-type block with α₁₂ = 0.
    Rbl3 { q: Rational, gamma: Rational },
    /// Rime GL(1|1)-type block with α₁₂ = α₂₁ = 0; ω ∈ {q², 1, q⁻²}.
    Rbl4 {
        q: Rational,
        omega: Rational,
        gamma: Rational,
    },
    /// Standard GL(2) matrix.
    Gl2Std { q: Rational, p: Rational },
    /// Standard GL(1|1) matrix.
    Gl11Std { q: Rational, p: Rational },
    /// Eight-vertex GL(1|1) matrix.
    EightVertex { q: Rational },
    /// Non-standard GL(1|1) matrix with upper-triangular P R̂; ε = ±1.
    RII { q: Rational, epsilon: Rational },
    /// Jordanian family (h₁ : h₂).
    Jordanian { h1: Rational, h2: Rational },
    /// Permutation-like solution.
    PermLike { a: Rational, b: Rational, c: Rational },
    /// Solution R̂′(a).
    RPrime { a: Rational },
    /// Non-semisimple solution R̂″(h₁ : h₂ : √h₃).
    RDoublePrime {
        h1: Rational,
        h2: Rational,
        h3: Rational,
    },
    /// Non-semisimple solution R̂‴.
    RTriplePrime,
}

/// Catalog entry: name, parameter signature and a short description.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    /// Name as accepted by the CLI `--kind` flag.
    pub kind: &'static str,
    /// Display label.
    pub label: &'static str,
    /// Parameter names.
    pub params: &'static [&'static str],
    /// Matrix dimension n (operators are n²×n²).
    pub n: usize,
}

/// Every block family in a fixed order.
pub const BLOCK_CATALOG: &[CatalogEntry] = &[
    CatalogEntry { kind: "rbl1", label: "RBL1 (rime, GL(2)-type)", params: &["q", "gamma"], n: 2 },
    CatalogEntry { kind: "rbl2", label: "RBL2 (rime, GL(1|1)-type)", params: &["q", "gamma"], n: 2 },
    CatalogEntry { kind: "rbl3", label: "RBL3 (rime, GL(2)-type)", params: &["q", "gamma"], n: 2 },
    CatalogEntry { kind: "rbl4", label: "RBL4 (ω ∈ {q²,1,q⁻²})", params: &["q", "omega", "gamma"], n: 2 },
    CatalogEntry { kind: "gl2", label: "GL(2) standard", params: &["q", "p"], n: 2 },
    CatalogEntry { kind: "gl11", label: "GL(1|1) standard", params: &["q", "p"], n: 2 },
    CatalogEntry { kind: "eight-vertex", label: "eight-vertex GL(1|1)", params: &["q"], n: 2 },
    CatalogEntry { kind: "r2", label: "R^II (ε = ±1)", params: &["q", "epsilon"], n: 2 },
    CatalogEntry { kind: "jordanian", label: "Jordanian (h1:h2)", params: &["h1", "h2"], n: 2 },
    CatalogEntry { kind: "perm-like", label: "permutation-like", params: &["a", "b", "c"], n: 2 },
    CatalogEntry { kind: "r-prime", label: "R'(a)", params: &["a"], n: 2 },
    CatalogEntry { kind: "r-double-prime", label: "R''(h1:h2:√h3)", params: &["h1", "h2", "h3"], n: 2 },
    CatalogEntry { kind: "r-triple-prime", label: "R'''", params: &[], n: 2 },
];

impl BlockKind {
    /// Catalog name of the family.
    pub fn name(&self) -> &'static str {
        match self {
            BlockKind::Rbl1 { .. } => "rbl1",
            BlockKind::Rbl2 { .. } => "rbl2",
            BlockKind::Rbl3 { .. } => "rbl3",
            BlockKind::Rbl4 { .. } => "rbl4",
            BlockKind::Gl2Std { .. } => "gl2",
            BlockKind::Gl11Std { .. } => "gl11",
            BlockKind::EightVertex { .. } => "eight-vertex",
            BlockKind::RII { .. } => "r2",
            BlockKind::Jordanian { .. } => "jordanian",
            BlockKind::PermLike { .. } => "perm-like",
            BlockKind::RPrime { .. } => "r-prime",
            BlockKind::RDoublePrime { .. } => "r-double-prime",
            BlockKind::RTriplePrime => "r-triple-prime",
        }
    }

    /// Named parameter values in catalog order.
    pub fn parameters(&self) -> Vec<(&'static str, Rational)> {
        let v = |pairs: &[(&'static str, &Rational)]| pairs.iter().map(|(k, x)| (*k, (*x).clone())).collect();
        match self {
            BlockKind::Rbl1 { q, gamma } | BlockKind::Rbl2 { q, gamma } | BlockKind::Rbl3 { q, gamma } => {
                v(&[("q", q), ("gamma", gamma)])
            }
            BlockKind::Rbl4 { q, omega, gamma } => v(&[("q", q), ("omega", omega), ("gamma", gamma)]),
            BlockKind::Gl2Std { q, p } | BlockKind::Gl11Std { q, p } => v(&[("q", q), ("p", p)]),
            BlockKind::EightVertex { q } => v(&[("q", q)]),
            BlockKind::RII { q, epsilon } => v(&[("q", q), ("epsilon", epsilon)]),
            BlockKind::Jordanian { h1, h2 } => v(&[("h1", h1), ("h2", h2)]),
            BlockKind::PermLike { a, b, c } => v(&[("a", a), ("b", b), ("c", c)]),
            BlockKind::RPrime { a } => v(&[("a", a)]),
            BlockKind::RDoublePrime { h1, h2, h3 } => v(&[("h1", h1), ("h2", h2), ("h3", h3)]),
            BlockKind::RTriplePrime => Vec::new(),
        }
    }

    /// A representative member of every family at the given q (q ∉ {0, ±1}).
    pub fn samples(q: &Rational) -> Vec<BlockKind> {
        let g = frac2(3, 2);
        vec![
            BlockKind::Rbl1 { q: q.clone(), gamma: g.clone() },
            BlockKind::Rbl2 { q: q.clone(), gamma: g.clone() },
            BlockKind::Rbl3 { q: q.clone(), gamma: g.clone() },
            BlockKind::Rbl4 { q: q.clone(), omega: q * q, gamma: g.clone() },
            BlockKind::Rbl4 { q: q.clone(), omega: rat(1), gamma: g.clone() },
            BlockKind::Rbl4 { q: q.clone(), omega: (q * q).recip(), gamma: g.clone() },
            BlockKind::Gl2Std { q: q.clone(), p: rat(3) },
            BlockKind::Gl11Std { q: q.clone(), p: rat(3) },
            BlockKind::EightVertex { q: q.clone() },
            BlockKind::RII { q: q.clone(), epsilon: rat(1) },
            BlockKind::RII { q: q.clone(), epsilon: rat(-1) },
            BlockKind::Jordanian { h1: rat(2), h2: rat(-3) },
            BlockKind::Jordanian { h1: rat(0), h2: rat(5) },
            BlockKind::PermLike { a: rat(2), b: frac2(1, 2), c: rat(-1) },
            BlockKind::RPrime { a: rat(1) },
            BlockKind::RDoublePrime { h1: rat(1), h2: rat(2), h3: rat(3) },
            BlockKind::RTriplePrime,
        ]
    }
}

fn frac2(a: i64, b: i64) -> Rational {
    crate::kernel::frac(a, b)
}

fn block(rows: [[Rational; 4]; 4]) -> Operator2 {
    let m = Matrix::from_rows(rows.into_iter().map(|r| r.to_vec()).collect());
    Operator2::from_matrix(2, m).expect("4x4 block")
}

/// The literal 4×4 matrix of a catalog member, rows and columns ordered (11),(12),(21),(22).
pub fn block_matrix(kind: &BlockKind) -> Result<Operator2> {
    let z = Rational::zero;
    let o = Rational::one;
    Ok(match kind {
        BlockKind::Rbl1 { q, gamma } => {
            require_nonzero(q, "q")?;
            let qi = q.recip();
            block([
                [q.clone(), z(), z(), z()],
                [gamma.clone(), z(), qi.clone(), z()],
                [-gamma.clone(), q.clone(), q - &qi, z()],
                [z(), z(), z(), q.clone()],
            ])
        }
        BlockKind::Rbl2 { q, gamma } => {
            require_nonzero(q, "q")?;
            let qi = q.recip();
            block([
                [q.clone(), z(), z(), z()],
                [q * gamma, z(), -q.clone(), z()],
                [&qi * gamma, -qi.clone(), q - &qi, z()],
                [z(), z(), z(), -qi],
            ])
        }
        BlockKind::Rbl3 { q, gamma } => {
            require_nonzero(q, "q")?;
            require_nonzero(gamma, "gamma")?;
            let qi = q.recip();
            let gi = gamma.recip();
            block([
                [q.clone(), z(), z(), z()],
                [gamma.clone(), -qi.clone(), z(), gi.clone()],
                [-gamma.clone(), q + &qi, q.clone(), -gi],
                [z(), z(), z(), q.clone()],
            ])
        }
        BlockKind::Rbl4 { q, omega, gamma } => {
            require_nonzero(q, "q")?;
            require_nonzero(gamma, "gamma")?;
            let q2 = q * q;
            if *omega != q2 && !omega.is_one() && *omega != q2.recip() {
                return Err(Error::InvalidInput(
                    "RBL4 requires omega in {q^2, 1, q^-2}".into(),
                ));
            }
            let qi = q.recip();
            block([
                [q.clone(), z(), z(), z()],
                [gamma.clone(), -qi.clone(), z(), gamma.recip()],
                [gamma / omega, z(), -qi, omega / gamma],
                [z(), z(), z(), q.clone()],
            ])
        }
        BlockKind::Gl2Std { q, p } | BlockKind::Gl11Std { q, p } => {
            require_nonzero(q, "q")?;
            require_nonzero(p, "p")?;
            let qi = q.recip();
            let last = if matches!(kind, BlockKind::Gl2Std { .. }) {
                q.clone()
            } else {
                -qi.clone()
            };
            block([
                [q.clone(), z(), z(), z()],
                [z(), z(), p.clone(), z()],
                [z(), p.recip(), q - &qi, z()],
                [z(), z(), z(), last],
            ])
        }
        BlockKind::EightVertex { q } => {
            require_nonzero(q, "q")?;
            let half = frac2(1, 2);
            let d = (q - q.recip()) * &half;
            let s = (q + q.recip()) * &half;
            block([
                [&d + o(), z(), z(), d.clone()],
                [z(), d.clone(), s.clone(), z()],
                [z(), s, d.clone(), z()],
                [d.clone(), z(), z(), d - o()],
            ])
        }
        BlockKind::RII { q, epsilon } => {
            require_nonzero(q, "q")?;
            if epsilon.abs() != o() {
                return Err(Error::InvalidInput("epsilon must be +1 or -1".into()));
            }
            let qi = q.recip();
            block([
                [q.clone(), z(), z(), q + &qi],
                [z(), z(), epsilon * &qi, z()],
                [z(), epsilon * q, q - &qi, z()],
                [z(), z(), z(), -qi],
            ])
        }
        BlockKind::Jordanian { h1, h2 } => block([
            [o(), h1.clone(), -h1.clone(), h1 * h2],
            [z(), z(), o(), -h2.clone()],
            [z(), o(), z(), h2.clone()],
            [z(), z(), z(), o()],
        ]),
        BlockKind::PermLike { a, b, c } => block([
            [o(), z(), z(), z()],
            [z(), z(), a.clone(), z()],
            [z(), b.clone(), z(), z()],
            [z(), z(), z(), c.clone()],
        ]),
        BlockKind::RPrime { a } => block([
            [z(), z(), z(), a.clone()],
            [z(), o(), z(), z()],
            [z(), z(), o(), z()],
            [a.clone(), z(), z(), z()],
        ]),
        BlockKind::RDoublePrime { h1, h2, h3 } => block([
            [o(), h1.clone(), h2.clone(), h3.clone()],
            [z(), z(), o(), h1.clone()],
            [z(), o(), z(), h2.clone()],
            [z(), z(), z(), o()],
        ]),
        BlockKind::RTriplePrime => block([
            [o(), z(), z(), o()],
            [z(), z(), -o(), z()],
            [z(), -o(), z(), z()],
            [z(), z(), z(), o()],
        ]),
    })
}

/// Spectral type of a 4×4 solution obeying R̂² = uR̂ + v.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpectrumType {
    /// Eigenvalues {λ, λ, λ, μ}.
    Gl2 { major: Rational, minor: Rational },
    /// Eigenvalues {λ, λ, μ, μ}.
    Gl11 { first: Rational, second: Rational },
    /// R̂ is a multiple of the identity.
    Scalar(Rational),
    /// Quadratic but not diagonalizable.
    NonSemisimple,
    /// Quadratic with irrational eigenvalues.
    Irrational,
    /// No quadratic relation.
    NotQuadratic,
}

/// Property summary of a catalog member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockProperties {
    /// YBE residual vanishes.
    pub ybe: bool,
    /// (u, v) with R̂² = uR̂ + v.
    pub quadratic: Option<(Rational, Rational)>,
    /// The skew inverse exists.
    pub skew_invertible: bool,
    /// Spectral type.
    pub spectrum: SpectrumType,
}

/// Spectral type of any 2-dimensional operator.
pub fn spectrum_type(r: &Operator2) -> SpectrumType {
    let size = r.matrix().rows();
    let id = Matrix::identity(size);
    if let Some(c) = (0..size)
        .all(|i| (0..size).all(|j| i == j || r.matrix()[(i, j)].is_zero()))
        .then(|| r.matrix()[(0, 0)].clone())
        .filter(|c| r.matrix() == &id.scale(c))
    {
        return SpectrumType::Scalar(c);
    }
    let Some((u, v)) = r.quadratic_relation() else {
        return SpectrumType::NotQuadratic;
    };
    let disc = &u * &u + rat(4) * &v;
    let Some(s) = rational_sqrt(&disc) else {
        return SpectrumType::Irrational;
    };
    if s.is_zero() {
        return SpectrumType::NonSemisimple;
    }
    let half = frac2(1, 2);
    let l1 = (&u + &s) * &half;
    let l2 = (&u - &s) * &half;
    let nullity = |l: &Rational| size - (r.matrix() - &id.scale(l)).rank();
    let (m1, m2) = (nullity(&l1), nullity(&l2));
    if m1 + m2 < size {
        return SpectrumType::NonSemisimple;
    }
    match (m1, m2) {
        (3, 1) => SpectrumType::Gl2 { major: l1, minor: l2 },
        (1, 3) => SpectrumType::Gl2 { major: l2, minor: l1 },
        _ => {
            let (first, second) = if l1 > l2 { (l1, l2) } else { (l2, l1) };
            SpectrumType::Gl11 { first, second }
        }
    }
}

/// YBE, quadratic relation, skew-invertibility and spectral type.
pub fn block_properties(kind: &BlockKind) -> Result<BlockProperties> {
    let r = block_matrix(kind)?;
    Ok(operator_properties(&r))
}

/// [`block_properties`] for an explicit operator.
pub fn operator_properties(r: &Operator2) -> BlockProperties {
    BlockProperties {
        ybe: crate::tensor::yb_residual(r).is_zero(),
        quadratic: r.quadratic_relation(),
        skew_invertible: skew_inverse(r).is_ok(),
        spectrum: spectrum_type(r),
    }
}

/// Determinant of the reshuffled block whose inverse gives the skew inverse:
/// (α₁₂β₁₂ − γ₁₂γ′₁₂)(α₂₁β₂₁ − γ₂₁γ′₂₁) − α₁α₂α₁₂α₂₁.
pub fn skew_block_determinant(data: &RimeData) -> Rational {
    let a = &data.alpha;
    let b = &data.beta;
    let g = &data.gamma;
    let gp = &data.gamma_p;
    (&a[(0, 1)] * &b[(0, 1)] - &g[(0, 1)] * &gp[(0, 1)])
        * (&a[(1, 0)] * &b[(1, 0)] - &g[(1, 0)] * &gp[(1, 0)])
        - &a[(0, 0)] * &a[(1, 1)] * &a[(0, 1)] * &a[(1, 0)]
}

/// The entry restrictions implied by skew-invertibility: for i ≠ j,
/// α_ij = 0 ⇒ γ_ij γ′_ij ≠ 0, and γ_ij γ′_ij = 0 ⇒ α_ij ≠ 0.
pub fn skew_entry_restrictions_hold(data: &RimeData) -> bool {
    let n = data.dim();
    (0..n).all(|i| {
        (0..n).filter(|&j| j != i).all(|j| {
            let gg = &data.gamma[(i, j)] * &data.gamma_p[(i, j)];
            let a = &data.alpha[(i, j)];
            !(a.is_zero() && gg.is_zero())
        })
    })
}

/// R̂_lhs (T⊗T) − (T⊗T) R̂_rhs.
pub fn block_equivalence(lhs: &Operator2, rhs: &Operator2, t: &Operator1) -> Result<Operator2> {
    if t.det().is_zero() {
        return Err(Error::Singular("change-of-basis matrix".into()));
    }
    let tt = Operator2::tensor(t, t);
    Ok(&(lhs * &tt) - &(&tt * rhs))
}

/// A named exact residual, or `None` when the relation needs a quadratic field extension at the
/// chosen parameters.
#[derive(Clone, Debug)]
pub struct NamedResidual {
    /// Identifier of the relation.
    pub name: String,
    /// Residual operator, or `None` when skipped.
    pub residual: Option<Operator2>,
    /// Reason for skipping.
    pub note: Option<String>,
}

impl NamedResidual {
    fn of(name: &str, residual: Operator2) -> Self {
        NamedResidual {
            name: name.into(),
            residual: Some(residual),
            note: None,
        }
    }

    fn skipped(name: &str, note: String) -> Self {
        NamedResidual {
            name: name.into(),
            residual: None,
            note: Some(note),
        }
    }
}

fn mat2(a: Rational, b: Rational, c: Rational, d: Rational) -> Operator1 {
    Matrix::from_rows(vec![vec![a, b], vec![c, d]])
}

/// The stated basis changes between catalog members at parameters (q, γ).
///
/// The eight-vertex relation needs τ² = (q−1)/(q+1); it is evaluated only when τ is rational.
pub fn stated_equivalences(q: &Rational, gamma: &Rational) -> Result<Vec<NamedResidual>> {
    require_nonzero(q, "q")?;
    require_nonzero(gamma, "gamma")?;
    let qi = q.recip();
    let o = Rational::one;
    let z = Rational::zero;
    let rbl4 = |omega: Rational, g: Rational| {
        block_matrix(&BlockKind::Rbl4 {
            q: q.clone(),
            omega,
            gamma: g,
        })
    };
    let rbl1 = block_matrix(&BlockKind::Rbl1 { q: q.clone(), gamma: gamma.clone() })?;
    let mut out = vec![
        NamedResidual::of(
            "rbl1~rbl3",
            block_equivalence(
                &rbl1,
                &block_matrix(&BlockKind::Rbl3 { q: q.clone(), gamma: gamma.clone() })?,
                &mat2(q.clone(), -gamma.recip(), gamma.clone(), z()),
            )?,
        ),
        NamedResidual::of(
            "rbl1~gl2",
            block_equivalence(
                &rbl1,
                &block_matrix(&BlockKind::Gl2Std { q: q.clone(), p: qi.clone() })?,
                &mat2(q - &qi, z(), gamma.clone(), gamma.clone()),
            )?,
        ),
        NamedResidual::of(
            "rbl2~rbl4",
            block_equivalence(
                &block_matrix(&BlockKind::Rbl2 { q: q.clone(), gamma: gamma.clone() })?,
                &block_matrix(&BlockKind::Rbl4 {
                    q: -qi.clone(),
                    omega: q * q,
                    gamma: o(),
                })?,
                &mat2(o(), q.clone(), z(), gamma * q),
            )?,
        ),
        NamedResidual::of(
            "rbl4(q^2)~r2",
            block_equivalence(
                &rbl4(q * q, gamma.clone())?,
                &block_matrix(&BlockKind::RII { q: q.clone(), epsilon: o() })?,
                &mat2(o(), o(), gamma * &qi, -(gamma * &qi)),
            )?,
        ),
        NamedResidual::of(
            "rbl4(q^-2)~r2.reversed",
            block_equivalence(
                &rbl4((q * q).recip(), gamma.clone())?,
                &block_matrix(&BlockKind::RII { q: q.clone(), epsilon: o() })?.reversed(),
                &mat2(o(), o(), gamma * q, -(gamma * q)),
            )?,
        ),
    ];
    let tau_sq = (q - o()) / (q + o());
    match rational_sqrt(&tau_sq) {
        Some(tau) if !(q + o()).is_zero() => out.push(NamedResidual::of(
            "rbl4(1)~eight-vertex",
            block_equivalence(
                &rbl4(o(), gamma.clone())?,
                &block_matrix(&BlockKind::EightVertex { q: q.clone() })?,
                &mat2(o(), tau.clone(), gamma.clone(), -(gamma * &tau)),
            )?,
        )),
        _ => out.push(NamedResidual::skipped(
            "rbl4(1)~eight-vertex",
            format!("tau^2 = {} has no rational root", crate::kernel::format_rational(&tau_sq)),
        )),
    }
    out.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(out)
}

/// Conjugation by D⊗D with D = diag(1, √−1): entry (ij),(kl) is scaled by i^{m(ij)−m(kl)} where
/// m counts the index 2. Returns `None` when some nonzero entry would acquire an odd power.
fn conjugate_by_diag_i(r: &Operator2) -> Option<Operator2> {
    let count = |a: usize, b: usize| (a == 2) as i32 + (b == 2) as i32;
    let mut out = Operator2::zero(2);
    for i in 1..=2 {
        for j in 1..=2 {
            for k in 1..=2 {
                for l in 1..=2 {
                    let v = r.at(i, j, k, l);
                    if v.is_zero() {
                        continue;
                    }
                    let e = (count(i, j) - count(k, l)).rem_euclid(4);
                    match e {
                        0 => out.set(i, j, k, l, v.clone()),
                        2 => out.set(i, j, k, l, -v.clone()),
                        _ => return None,
                    }
                }
            }
        }
    }
    Some(out)
}

fn pi() -> Operator1 {
    Matrix::from_i64(&[&[0, 1], &[1, 0]])
}

/// Transpose, reversal and inverse relations of the Hecke families.
///
/// Families without stated relations return an empty list.
pub fn symmetry_relations(kind: &BlockKind) -> Result<Vec<NamedResidual>> {
    let r = block_matrix(kind)?;
    let mut out = Vec::new();
    match kind {
        BlockKind::Gl2Std { q, p } => {
            out.push(NamedResidual::of(
                "transpose",
                &r.transpose() - &block_matrix(&BlockKind::Gl2Std { q: q.clone(), p: p.recip() })?,
            ));
            out.push(NamedResidual::of("reversed", &r.reversed() - &r.conjugate(&pi())?));
            let other = block_matrix(&BlockKind::Gl2Std { q: q.recip(), p: p.recip() })?;
            out.push(NamedResidual::of("inverse", &r.inverse()? - &other.reversed()));
        }
        BlockKind::Gl11Std { q, p } => {
            out.push(NamedResidual::of(
                "transpose",
                &r.transpose() - &block_matrix(&BlockKind::Gl11Std { q: q.clone(), p: p.recip() })?,
            ));
            let flipped = block_matrix(&BlockKind::Gl11Std { q: -q.recip(), p: p.clone() })?;
            out.push(NamedResidual::of("reversed", &r.reversed() - &flipped.conjugate(&pi())?));
            let other = block_matrix(&BlockKind::Gl11Std { q: q.recip(), p: p.recip() })?;
            out.push(NamedResidual::of("inverse", &r.inverse()? - &other.reversed()));
        }
        BlockKind::EightVertex { q } => {
            out.push(NamedResidual::of("transpose", &r.transpose() - &r));
            out.push(NamedResidual::of("reversed", &r.reversed() - &r));
            let other = block_matrix(&BlockKind::EightVertex { q: q.recip() })?;
            match conjugate_by_diag_i(&other) {
                Some(c) => out.push(NamedResidual::of("inverse", &r.inverse()? - &c)),
                None => out.push(NamedResidual::skipped("inverse", "odd power of sqrt(-1)".into())),
            }
        }
        BlockKind::RII { q, epsilon } => {
            let other = block_matrix(&BlockKind::RII { q: -q.recip(), epsilon: -epsilon.clone() })?;
            let conj = conjugate_by_diag_i(&other.reversed().conjugate(&pi())?);
            match conj {
                Some(c) => out.push(NamedResidual::of("transpose", &r.transpose() - &c)),
                None => out.push(NamedResidual::skipped("transpose", "odd power of sqrt(-1)".into())),
            }
            let inv = block_matrix(&BlockKind::RII { q: q.recip(), epsilon: epsilon.clone() })?;
            out.push(NamedResidual::of("inverse", &r.inverse()? - &inv.reversed()));
        }
        BlockKind::Jordanian { h1, h2 } => {
            let swapped = block_matrix(&BlockKind::Jordanian { h1: h2.clone(), h2: h1.clone() })?;
            out.push(NamedResidual::of("transpose", &r.transpose() - &swapped.conjugate(&pi())?));
            let neg = block_matrix(&BlockKind::Jordanian { h1: -h1.clone(), h2: -h2.clone() })?;
            out.push(NamedResidual::of("reversed", &r.reversed() - &neg));
            out.push(NamedResidual::of("inverse", &r.inverse()? - &r));
        }
        _ => {}
    }
    Ok(out)
}

/// Closed forms of the four non-rime entries (A^{11}_{12}, A^{11}_{21}, A^{22}_{12}, A^{22}_{21}) of
/// A = (T⊗T) R̂_J(h₁:h₂) (T⊗T)⁻¹.
pub fn nonrime_entries(t: &Operator1, h1: &Rational, h2: &Rational) -> Result<[Rational; 4]> {
    let det = t.det();
    if det.is_zero() {
        return Err(Error::Singular("T".into()));
    }
    let t11 = &t[(0, 0)];
    let t21 = &t[(1, 0)];
    let d2 = &det * &det;
    let m = h2 * t11 * t21;
    let minus = &det - &m;
    let plus = &det + &m;
    Ok([
        h1 * t11 * t11 * &minus / &d2,
        -(h1 * t11 * t11 * &plus) / &d2,
        h1 * t21 * t21 * &minus / &d2,
        -(h1 * t21 * t21 * &plus) / &d2,
    ])
}

/// The same four entries read off the conjugated Jordanian matrix.
pub fn nonrime_entries_direct(t: &Operator1, h1: &Rational, h2: &Rational) -> Result<[Rational; 4]> {
    let a = block_matrix(&BlockKind::Jordanian { h1: h1.clone(), h2: h2.clone() })?.conjugate(t)?;
    Ok([
        a.at(1, 1, 1, 2).clone(),
        a.at(1, 1, 2, 1).clone(),
        a.at(2, 2, 1, 2).clone(),
        a.at(2, 2, 2, 1).clone(),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::frac;
    use crate::rime::{classify, RimeClass};
    use crate::tensor::yb_residual;
    use proptest::prelude::*;

    #[test]
    fn rbl1_literal_and_type() {
        let r = block_matrix(&BlockKind::Rbl1 { q: rat(2), gamma: rat(1) }).unwrap();
        assert_eq!(r.at(2, 1, 2, 1), &frac(3, 2));
        assert_eq!(r.at(1, 2, 2, 1), &frac(1, 2));
        let p = block_properties(&BlockKind::Rbl1 { q: rat(2), gamma: rat(1) }).unwrap();
        assert!(p.ybe && p.skew_invertible);
        assert_eq!(p.quadratic, Some((frac(3, 2), rat(1))));
        assert_eq!(p.spectrum, SpectrumType::Gl2 { major: rat(2), minor: frac(-1, 2) });
    }

    #[test]
    fn rbl2_is_gl11_type() {
        let p = block_properties(&BlockKind::Rbl2 { q: rat(2), gamma: rat(1) }).unwrap();
        assert_eq!(p.spectrum, SpectrumType::Gl11 { first: rat(2), second: frac(-1, 2) });
    }

    #[test]
    fn parameters_follow_the_catalog_signature() {
        for kind in BlockKind::samples(&rat(2)) {
            let entry = BLOCK_CATALOG.iter().find(|e| e.kind == kind.name()).unwrap();
            let names: Vec<_> = kind.parameters().into_iter().map(|(k, _)| k).collect();
            assert_eq!(names, entry.params);
        }
    }

    #[test]
    fn rbl4_literal_and_omega_check() {
        let r = block_matrix(&BlockKind::Rbl4 { q: rat(3), omega: rat(1), gamma: rat(1) }).unwrap();
        let expect = Matrix::from_rows(vec![
            vec![rat(3), rat(0), rat(0), rat(0)],
            vec![rat(1), frac(-1, 3), rat(0), rat(1)],
            vec![rat(1), rat(0), frac(-1, 3), rat(1)],
            vec![rat(0), rat(0), rat(0), rat(3)],
        ]);
        assert_eq!(r.matrix(), &expect);
        assert!(matches!(
            block_matrix(&BlockKind::Rbl4 { q: rat(3), omega: rat(2), gamma: rat(1) }),
            Err(Error::InvalidInput(_))
        ));
        assert!(block_matrix(&BlockKind::RII { q: rat(3), epsilon: rat(2) }).is_err());
    }

    #[test]
    fn whole_catalog_solves_ybe() {
        for q in [rat(2), frac(-5, 3)] {
            for kind in BlockKind::samples(&q) {
                let r = block_matrix(&kind).unwrap();
                assert!(yb_residual(&r).is_zero(), "{kind:?}");
            }
        }
    }

    #[test]
    fn expected_spectral_types() {
        let q = rat(2);
        for kind in BlockKind::samples(&q) {
            let p = block_properties(&kind).unwrap();
            let gl2 = matches!(p.spectrum, SpectrumType::Gl2 { .. });
            let gl11 = matches!(p.spectrum, SpectrumType::Gl11 { .. });
            match &kind {
                BlockKind::Rbl1 { .. } | BlockKind::Rbl3 { .. } | BlockKind::Gl2Std { .. } => {
                    assert!(gl2, "{kind:?}")
                }
                BlockKind::Jordanian { .. } => assert!(gl2, "{kind:?}"),
                BlockKind::Rbl2 { .. }
                | BlockKind::Rbl4 { .. }
                | BlockKind::Gl11Std { .. }
                | BlockKind::EightVertex { .. }
                | BlockKind::RII { .. } => assert!(gl11, "{kind:?}"),
                BlockKind::RDoublePrime { .. } | BlockKind::RTriplePrime => {
                    assert!(!gl2 && !gl11, "{kind:?}")
                }
                _ => {}
            }
        }
    }

    #[test]
    fn identity_is_not_skew_invertible() {
        assert!(!operator_properties(&Operator2::identity(2)).skew_invertible);
    }

    #[test]
    fn skew_determinant_matches_skew_inverse_on_rime_blocks() {
        for q in [rat(2), frac(3, 7)] {
            for kind in BlockKind::samples(&q) {
                let r = block_matrix(&kind).unwrap();
                if classify(&r) == RimeClass::NotRime {
                    continue;
                }
                let data = RimeData::from_operator(&r);
                assert_eq!(
                    !skew_block_determinant(&data).is_zero(),
                    skew_inverse(&r).is_ok(),
                    "{kind:?}"
                );
                if skew_inverse(&r).is_ok() && !r.matrix().det().is_zero() {
                    assert!(skew_entry_restrictions_hold(&data), "{kind:?}");
                }
            }
        }
    }

    #[test]
    fn jordanian_rime_only_when_h1_vanishes() {
        let r0 = block_matrix(&BlockKind::Jordanian { h1: rat(0), h2: rat(4) }).unwrap();
        assert_ne!(classify(&r0), RimeClass::NotRime);
        let r1 = block_matrix(&BlockKind::Jordanian { h1: rat(1), h2: rat(4) }).unwrap();
        assert_eq!(classify(&r1), RimeClass::NotRime);
    }

    #[test]
    fn stated_equivalences_vanish() {
        // q = 5/3 makes τ² = 1/4 rational.
        for (q, g) in [(frac(5, 3), rat(1)), (rat(2), frac(-2, 3)), (frac(5, 4), rat(3))] {
            for e in stated_equivalences(&q, &g).unwrap() {
                if let Some(res) = &e.residual {
                    assert!(res.is_zero(), "{} at q={q}", e.name);
                }
            }
        }
        let at = stated_equivalences(&frac(5, 3), &rat(1)).unwrap();
        assert!(at.iter().all(|e| e.residual.is_some()));
        let skipped = stated_equivalences(&rat(2), &rat(1)).unwrap();
        assert_eq!(skipped.iter().filter(|e| e.residual.is_none()).count(), 1);
    }

    #[test]
    fn block_equivalence_rejects_singular_t() {
        let r = Operator2::identity(2);
        assert!(matches!(
            block_equivalence(&r, &r, &Matrix::zeros(2, 2)),
            Err(Error::Singular(_))
        ));
    }

    #[test]
    fn symmetry_relations_hold() {
        let kinds = [
            BlockKind::Gl2Std { q: rat(2), p: rat(3) },
            BlockKind::Gl11Std { q: rat(2), p: rat(3) },
            BlockKind::EightVertex { q: frac(3, 2) },
            BlockKind::RII { q: rat(2), epsilon: rat(1) },
            BlockKind::RII { q: frac(-2, 5), epsilon: rat(-1) },
            BlockKind::Jordanian { h1: rat(2), h2: frac(1, 3) },
        ];
        for kind in kinds {
            let rel = symmetry_relations(&kind).unwrap();
            assert!(!rel.is_empty());
            for e in rel {
                let res = e.residual.expect("rational relation");
                assert!(res.is_zero(), "{kind:?} {}", e.name);
            }
        }
        let gl2 = block_matrix(&BlockKind::Gl2Std { q: rat(2), p: rat(3) }).unwrap();
        assert_eq!(
            gl2.transpose(),
            block_matrix(&BlockKind::Gl2Std { q: rat(2), p: frac(1, 3) }).unwrap()
        );
    }

    #[test]
    fn r_prime_is_standard_in_another_basis() {
        let t = Matrix::from_i64(&[&[1, 1], &[-1, 1]]);
        let r = block_matrix(&BlockKind::RPrime { a: rat(1) }).unwrap();
        let std = block_matrix(&BlockKind::Gl2Std { q: rat(1), p: rat(-1) }).unwrap();
        assert!(block_equivalence(&r, &std, &t).unwrap().is_zero());
        // R′(−1) is the diag(1, √−1) conjugate of R′(1).
        let rm = block_matrix(&BlockKind::RPrime { a: rat(-1) }).unwrap();
        assert_eq!(conjugate_by_diag_i(&r), Some(rm));
    }

    #[test]
    fn nonrime_entries_examples() {
        let id = Matrix::identity(2);
        assert_eq!(
            nonrime_entries(&id, &rat(1), &rat(0)).unwrap(),
            [rat(1), rat(-1), rat(0), rat(0)]
        );
        let t = Matrix::from_i64(&[&[2, 1], &[3, -1]]);
        let zero = nonrime_entries(&t, &rat(0), &rat(7)).unwrap();
        assert!(zero.iter().all(|v| v.is_zero()));
        assert!(nonrime_entries(&Matrix::zeros(2, 2), &rat(1), &rat(1)).is_err());
    }

    fn small() -> impl Strategy<Value = Rational> {
        (-12i64..=12, 1i64..=8).prop_map(|(p, q)| frac(p, q))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(50))]

        #[test]
        fn nonrime_closed_forms_match_conjugation(
            e in proptest::collection::vec(small(), 4),
            h1 in small(),
            h2 in small(),
        ) {
            let t = Matrix::from_rows(vec![e[..2].to_vec(), e[2..].to_vec()]);
            prop_assume!(!t.det().is_zero());
            let closed = nonrime_entries(&t, &h1, &h2).unwrap();
            prop_assert_eq!(&closed, &nonrime_entries_direct(&t, &h1, &h2).unwrap());
            if !h1.is_zero() {
                prop_assert!(closed.iter().any(|v| !v.is_zero()));
            }
        }
    }
}
