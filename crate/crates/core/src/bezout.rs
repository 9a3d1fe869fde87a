//! Bézout operators on polynomials of two variables truncated to degree < n in each variable,
//! their (non-homogeneous) associative Yang–Baxter structure, coproducts, Rota–Baxter operators
//! on matrix algebras, and the associated ★-products.
//!
//! Basis convention: e_a ⊗ e_b = x^{a−1} y^{b−1} (increasing powers), and operator matrices are
//! stored with row = output, as for every [`Operator2`]. The parameter-free classical forms
//! b and r_CG are recovered by reversing the basis order and transposing both legs
//! ([`to_classical_form`]).

use crate::cg::x_change_of_basis;
use crate::classical::{build_classical, matrix_unit, ClassicalKind};
use crate::error::{Error, Result};
use crate::kernel::{elem_sym_omit, frac, rat, require_distinct, theta, Matrix, Rational};
use crate::tensor::{
    cybe_residual, lift, nhacybe_residual, permutation_p, qybe_residual, yb_residual, Legs,
    Operator1, Operator2, Operator3,
};
use num::{One, Zero};
use std::collections::BTreeMap;

/// The truncated polynomial space 𝔓_n with its monomial basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PolySpaceBasis {
    /// Degree bound: powers 0..n−1 in each variable.
    pub n: usize,
}

impl PolySpaceBasis {
    /// The power of the monomial with 1-based index `a`.
    pub fn power(&self, a: usize) -> usize {
        a - 1
    }

    /// The 1-based index of the monomial t^k.
    pub fn index(&self, k: usize) -> usize {
        k + 1
    }
}

/// A polynomial in x and y, dense coefficients c[a][b] of x^a y^b.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Poly2 {
    c: Vec<Vec<Rational>>,
}

impl Poly2 {
    fn zero(size: usize) -> Self {
        Poly2 {
            c: vec![vec![Rational::zero(); size]; size],
        }
    }

    fn monomial(size: usize, a: usize, b: usize) -> Self {
        let mut p = Self::zero(size);
        p.c[a][b] = Rational::one();
        p
    }

    fn size(&self) -> usize {
        self.c.len()
    }

    fn swapped(&self) -> Self {
        let s = self.size();
        let mut p = Self::zero(s);
        for a in 0..s {
            for b in 0..s {
                p.c[b][a] = self.c[a][b].clone();
            }
        }
        p
    }

    fn sub(&self, o: &Self) -> Self {
        let mut p = self.clone();
        for (row, orow) in p.c.iter_mut().zip(&o.c) {
            for (x, y) in row.iter_mut().zip(orow) {
                *x -= y;
            }
        }
        p
    }

    fn scale(&self, s: &Rational) -> Self {
        let mut p = self.clone();
        for row in p.c.iter_mut() {
            for x in row.iter_mut() {
                *x *= s;
            }
        }
        p
    }

    /// Multiplication by x (`by_x`) or y; the size grows by one.
    fn shift(&self, by_x: bool) -> Self {
        let s = self.size();
        let mut p = Self::zero(s + 1);
        for a in 0..s {
            for b in 0..s {
                if by_x {
                    p.c[a + 1][b] = self.c[a][b].clone();
                } else {
                    p.c[a][b + 1] = self.c[a][b].clone();
                }
            }
        }
        p
    }

    fn resized(&self, size: usize) -> Option<Self> {
        let s = self.size();
        let mut p = Self::zero(size);
        for a in 0..s {
            for b in 0..s {
                if a < size && b < size {
                    p.c[a][b] = self.c[a][b].clone();
                } else if !self.c[a][b].is_zero() {
                    return None;
                }
            }
        }
        Some(p)
    }

    /// Exact quotient by (x − y); None when x − y does not divide.
    fn div_x_minus_y(&self) -> Option<Self> {
        let s = self.size();
        // Synthetic division in x with coefficients in y: q_{a−1} = c_a + y·q_a.
        let mut q = Self::zero(s);
        let mut carry = vec![Rational::zero(); s + 1];
        for a in (0..s).rev() {
            let mut next: Vec<Rational> = self.c[a].iter().cloned().chain([Rational::zero()]).collect();
            for (b, v) in carry.iter().take(s).enumerate() {
                next[b + 1] += v;
            }
            if a == 0 {
                return next.iter().all(Zero::is_zero).then_some(q);
            }
            if !next[s].is_zero() {
                return None;
            }
            q.c[a - 1] = next[..s].to_vec();
            carry = next;
        }
        Some(q)
    }
}

/// A Bézout-type operator on 𝔓_n.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BezoutKind {
    /// 𝔟⁰ = (I − P)/(x − y).
    B0,
    /// 𝔟 = x(I − P)/(x − y).
    B,
    /// The step operator r^(s): x^i y^j ↦ θ(i−j) x^i y^j − θ(j−i) x^j y^i.
    RS,
    /// 𝔟̃ = (x+y)/(2(x−y))·I − x/(x−y)·P.
    BTilde,
}

impl BezoutKind {
    /// Every kind in a fixed order.
    pub const ALL: [BezoutKind; 4] = [BezoutKind::B0, BezoutKind::B, BezoutKind::RS, BezoutKind::BTilde];

    /// Short name.
    pub fn name(&self) -> &'static str {
        match self {
            BezoutKind::B0 => "b0",
            BezoutKind::B => "b",
            BezoutKind::RS => "rs",
            BezoutKind::BTilde => "btilde",
        }
    }
}

fn apply_action(kind: BezoutKind, f: &Poly2) -> Poly2 {
    let s = f.size();
    match kind {
        BezoutKind::B0 => f.sub(&f.swapped()).div_x_minus_y().expect("antisymmetric part divides"),
        BezoutKind::B => {
            let q = f.sub(&f.swapped()).div_x_minus_y().expect("antisymmetric part divides");
            q.shift(true).resized(s).expect("degree stays below the bound")
        }
        BezoutKind::RS => {
            let mut out = Poly2::zero(s);
            for i in 0..s {
                for j in 0..s {
                    let v = &f.c[i][j];
                    if i > j {
                        out.c[i][j] += v;
                    } else if j > i {
                        out.c[j][i] -= v;
                    }
                }
            }
            out
        }
        BezoutKind::BTilde => {
            let num = f.shift(true).sub(&f.shift(false).scale(&rat(-1)));
            let num = num.sub(&f.swapped().shift(true).scale(&rat(2)));
            let q = num.div_x_minus_y().expect("numerator vanishes on the diagonal");
            q.scale(&frac(1, 2)).resized(s).expect("degree stays below the bound")
        }
    }
}

/// Matrix of the operator computed from its action on monomials.
pub fn bezout_from_action(kind: BezoutKind, n: usize) -> Operator2 {
    let mut m = Operator2::zero(n);
    for k in 0..n {
        for l in 0..n {
            let img = apply_action(kind, &Poly2::monomial(n, k, l));
            for a in 0..n {
                for b in 0..n {
                    if !img.c[a][b].is_zero() {
                        m.set(a + 1, b + 1, k + 1, l + 1, img.c[a][b].clone());
                    }
                }
            }
        }
    }
    m
}

/// Matrix of the operator from the closed matrix-unit expansions.
pub fn bezout_closed_form(kind: BezoutKind, n: usize) -> Operator2 {
    let mut r = Operator2::zero(n);
    match kind {
        BezoutKind::B0 => {
            for i in 1..=n {
                for j in i + 1..=n {
                    for a in 1..=j - i {
                        r = &r
                            + &Operator2::wedge(
                                &matrix_unit(n, j, i + a - 1),
                                &matrix_unit(n, i, j - a),
                            );
                    }
                }
            }
        }
        BezoutKind::B => {
            for i in 1..=n {
                for j in i + 1..=n {
                    for a in 1..=j - i {
                        let p = Operator2::tensor(&matrix_unit(n, j, i + a), &matrix_unit(n, i, j - a));
                        let q = Operator2::tensor(&matrix_unit(n, i, i + a), &matrix_unit(n, j, j - a));
                        r = &r + &(&p - &q);
                    }
                }
            }
        }
        BezoutKind::RS => {
            for i in 1..=n {
                for j in 1..=n {
                    if i > j {
                        r.add_at(i, j, i, j, &Rational::one());
                    } else if j > i {
                        r.add_at(j, i, i, j, &-Rational::one());
                    }
                }
            }
        }
        BezoutKind::BTilde => {
            r = &bezout_closed_form(BezoutKind::B, n) - &Operator2::identity(n).scale(&frac(1, 2));
        }
    }
    r
}

/// The Bézout-type operator after checking that the action and closed-form constructions agree.
pub fn bezout_operator(kind: BezoutKind, n: usize) -> Result<Operator2> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    let closed = bezout_closed_form(kind, n);
    if closed != bezout_from_action(kind, n) {
        return Err(Error::InvalidInput(format!(
            "{} closed form disagrees with its polynomial action",
            kind.name()
        )));
    }
    Ok(closed)
}

/// Image of a monomial x^k y^l under 𝔟⁰ or 𝔟 from the explicit finite sums, as (a, b, coefficient).
pub fn monomial_action(kind: BezoutKind, k: usize, l: usize) -> Vec<(usize, usize, Rational)> {
    let (k, l) = (k as i64, l as i64);
    let mut out = Vec::new();
    let (lo, hi_off) = match kind {
        BezoutKind::B0 => (0, 1),
        BezoutKind::B => (1, 0),
        _ => return out,
    };
    if theta(k - l) {
        for s in lo..=k - l - hi_off {
            out.push(((l + s) as usize, (k - s - hi_off) as usize, Rational::one()));
        }
    } else if theta(l - k) {
        for s in lo..=l - k - hi_off {
            out.push(((k + s) as usize, (l - s - hi_off) as usize, -Rational::one()));
        }
    }
    out
}

/// Reverses the basis order and transposes both legs, mapping 𝔟⁰ to b and 𝔟 to −r_CG.
pub fn to_classical_form(r: &Operator2) -> Operator2 {
    let n = r.dim();
    Operator2::from_fn(n, |i, j, k, l| r.at(n + 1 - k, n + 1 - l, n + 1 - i, n + 1 - j).clone())
}

/// Named residual operators of the quadratic, permutation and symmetrization identities.
pub fn bezout_identity_suite(n: usize) -> Result<BTreeMap<String, Operator2>> {
    let p = permutation_p(n);
    let id = Operator2::identity(n);
    let ip = &id - &p;
    let b0 = bezout_operator(BezoutKind::B0, n)?;
    let b = bezout_operator(BezoutKind::B, n)?;
    let rs = bezout_operator(BezoutKind::RS, n)?;
    let mut out = BTreeMap::new();
    out.insert("b0.square".into(), b0.square());
    out.insert("b0.right_p".into(), &(&b0 * &p) + &b0);
    out.insert("b0.left_p".into(), &(&p * &b0) - &b0);
    out.insert("b0.symmetrization".into(), &b0 + &b0.reversed());
    for (name, r) in [("b", &b), ("rs", &rs)] {
        out.insert(format!("{name}.square"), &r.square() - r);
        out.insert(format!("{name}.right_p"), &(r * &p) + r);
        out.insert(format!("{name}.symmetrization"), &(r + &r.reversed()) - &ip);
    }
    Ok(out)
}

/// Yang–Baxter residuals of R = I + λr: the R₁₂R₁₃R₂₃ form and the braid form of P·R.
pub fn linear_quantization_residual(
    kind: BezoutKind,
    lambda: &Rational,
    n: usize,
) -> Result<(Operator3, Operator3)> {
    let r = bezout_operator(kind, n)?;
    let big_r = &Operator2::identity(n) + &r.scale(lambda);
    let braid = &permutation_p(n) * &big_r;
    Ok((qybe_residual(&big_r), yb_residual(&braid)))
}

/// The derivative ∂ on 𝔓_n: x^k ↦ k x^{k−1}.
pub fn derivative_matrix(n: usize) -> Operator1 {
    Matrix::from_fn(n, n, |r, c| if c == r + 1 { rat(c as i64) } else { Rational::zero() })
}

/// The Euler operator x∂ on 𝔓_n: x^k ↦ k x^k.
pub fn euler_matrix(n: usize) -> Operator1 {
    Matrix::from_fn(n, n, |r, c| if r == c { rat(r as i64) } else { Rational::zero() })
}

/// A shifted Bézout operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShiftKind {
    /// 𝔟⁰ + c(∂_x − ∂_y).
    B0Shift,
    /// 𝔟 + c(x∂_x − y∂_y).
    BShift,
}

/// Result of a shifted-solution check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftedSolution {
    /// [r, g₁ + g₂] for the invariance generator g.
    pub generator_commutator: Operator2,
    /// cYBE residual of the shifted operator.
    pub cybe: Operator3,
}

/// Invariance of 𝔟⁰ under translations or of 𝔟 under dilatations, and the shifted cYBE solution.
pub fn shifted_solution_residual(kind: ShiftKind, c: &Rational, n: usize) -> Result<ShiftedSolution> {
    let (r, g) = match kind {
        ShiftKind::B0Shift => (bezout_operator(BezoutKind::B0, n)?, derivative_matrix(n)),
        ShiftKind::BShift => (bezout_operator(BezoutKind::B, n)?, euler_matrix(n)),
    };
    let id = Matrix::identity(n);
    let g1 = Operator2::tensor(&g, &id);
    let g2 = Operator2::tensor(&id, &g);
    let shifted = &r + &(&g1 - &g2).scale(c);
    Ok(ShiftedSolution {
        generator_commutator: r.commutator(&(&g1 + &g2)),
        cybe: cybe_residual(&shifted),
    })
}

/// Outcome of the recursion check for 𝔟⁰.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecursionReport {
    /// M(x f) = f + y M(f) on every monomial f with x f in 𝔓_n.
    pub x_rule: bool,
    /// M(y f) = −f + x M(f) on every monomial f with y f in 𝔓_n.
    pub y_rule: bool,
    /// The operator rebuilt from the two rules and M(1) = 0 equals 𝔟⁰.
    pub unique: bool,
}

impl RecursionReport {
    /// True when every item holds.
    pub fn all_pass(&self) -> bool {
        self.x_rule && self.y_rule && self.unique
    }
}

fn op_apply(m: &Operator2, f: &Poly2) -> Poly2 {
    let n = m.dim();
    let mut out = Poly2::zero(n);
    for a in 0..n {
        for b in 0..n {
            let mut s = Rational::zero();
            for k in 0..n {
                for l in 0..n {
                    s += m.at(a + 1, b + 1, k + 1, l + 1) * &f.c[k][l];
                }
            }
            out.c[a][b] = s;
        }
    }
    out
}

/// Checks the two first-order recursions of 𝔟⁰ and that they determine it from M(1) = 0.
pub fn m_recursion_check(n: usize) -> Result<RecursionReport> {
    let m = bezout_operator(BezoutKind::B0, n)?;
    let mut x_rule = true;
    let mut y_rule = true;
    for k in 0..n {
        for l in 0..n {
            let f = Poly2::monomial(n, k, l);
            let mf = op_apply(&m, &f);
            if k + 1 < n {
                let lhs = op_apply(&m, &Poly2::monomial(n, k + 1, l));
                let rhs = mf.shift(false).resized(n).map(|ym| {
                    let mut t = ym;
                    t.c[k][l] += Rational::one();
                    t
                });
                x_rule &= rhs.as_ref() == Some(&lhs);
            }
            if l + 1 < n {
                let lhs = op_apply(&m, &Poly2::monomial(n, k, l + 1));
                let rhs = mf.shift(true).resized(n).map(|xm| {
                    let mut t = xm;
                    t.c[k][l] -= Rational::one();
                    t
                });
                y_rule &= rhs.as_ref() == Some(&lhs);
            }
        }
    }
    // Rebuild: M(x^k y^l) from M(x^{k−1} y^l) by the x-rule, M(y^l) from M(y^{l−1}) by the y-rule.
    let mut images: BTreeMap<(usize, usize), Poly2> = BTreeMap::new();
    images.insert((0, 0), Poly2::zero(n));
    let mut unique = true;
    for l in 0..n {
        if l > 0 {
            let prev = images[&(0, l - 1)].clone();
            match prev.shift(true).resized(n) {
                Some(mut t) => {
                    t.c[0][l - 1] -= Rational::one();
                    images.insert((0, l), t);
                }
                None => unique = false,
            }
        }
        for k in 1..n {
            let prev = images[&(k - 1, l)].clone();
            match prev.shift(false).resized(n) {
                Some(mut t) => {
                    t.c[k - 1][l] += Rational::one();
                    images.insert((k, l), t);
                }
                None => unique = false,
            }
        }
    }
    if unique {
        let mut rebuilt = Operator2::zero(n);
        for ((k, l), img) in &images {
            for a in 0..n {
                for b in 0..n {
                    rebuilt.set(a + 1, b + 1, k + 1, l + 1, img.c[a][b].clone());
                }
            }
        }
        unique = rebuilt == m;
    }
    Ok(RecursionReport { x_rule, y_rule, unique })
}

/// Which coproduct on Mat(V).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoproductVariant {
    /// δ⁰(u) = (u⊗1)r − r(1⊗u).
    Plain,
    /// δ(u) = δ⁰(u) − c(u⊗1).
    Delta,
    /// δ̃(u) = δ⁰(u) + c(1⊗u).
    DeltaTilde,
}

/// The coproduct of u ∈ Mat(V) as an element of Mat(V)⊗Mat(V).
pub fn coproduct(u: &Operator1, r: &Operator2, c: &Rational, variant: CoproductVariant) -> Operator2 {
    let id = Matrix::identity(r.dim());
    let u1 = Operator2::tensor(u, &id);
    let u2 = Operator2::tensor(&id, u);
    let d0 = &(&u1 * r) - &(r * &u2);
    match variant {
        CoproductVariant::Plain => d0,
        CoproductVariant::Delta => &d0 - &u1.scale(c),
        CoproductVariant::DeltaTilde => &d0 + &u2.scale(c),
    }
}

/// δ(uv) − (u⊗1)δ(v) − δ(u)(1⊗v) − κ·c(u⊗v) with κ = 0, 1, −1 for the three variants.
pub fn derivation_residual(
    u: &Operator1,
    v: &Operator1,
    r: &Operator2,
    c: &Rational,
    variant: CoproductVariant,
) -> Operator2 {
    let id = Matrix::identity(r.dim());
    let lhs = coproduct(&(u * v), r, c, variant);
    let a = &Operator2::tensor(u, &id) * &coproduct(v, r, c, variant);
    let b = &coproduct(u, r, c, variant) * &Operator2::tensor(&id, v);
    let kappa = match variant {
        CoproductVariant::Plain => Rational::zero(),
        CoproductVariant::Delta => c.clone(),
        CoproductVariant::DeltaTilde => -c.clone(),
    };
    &(&(&lhs - &a) - &b) - &Operator2::tensor(u, v).scale(&kappa)
}

/// (δ⊗id)δ(u) − (id⊗δ)δ(u).
pub fn coassociativity_residual(
    u: &Operator1,
    r: &Operator2,
    c: &Rational,
    variant: CoproductVariant,
) -> Operator3 {
    let x = coproduct(u, r, c, variant);
    let x12 = lift(&x, Legs::L12);
    let x13 = lift(&x, Legs::L13);
    let x23 = lift(&x, Legs::L23);
    let r12 = lift(r, Legs::L12);
    let r23 = lift(r, Legs::L23);
    let mut left = &(&x13 * &r12) - &(&r12 * &x23);
    let mut right = &(&x12 * &r23) - &(&r23 * &x13);
    match variant {
        CoproductVariant::Plain => {}
        CoproductVariant::Delta => {
            left = &left - &x13.scale(c);
            right = &right - &x12.scale(c);
        }
        CoproductVariant::DeltaTilde => {
            left = &left + &x23.scale(c);
            right = &right + &x13.scale(c);
        }
    }
    &left - &right
}

/// Largest coassociativity residual entry over all matrix units u, as a witness.
pub fn coassociativity_all_units(
    r: &Operator2,
    c: &Rational,
    variant: CoproductVariant,
) -> Option<(String, Rational)> {
    let n = r.dim();
    for i in 1..=n {
        for j in 1..=n {
            let res = coassociativity_residual(&matrix_unit(n, i, j), r, c, variant);
            if let Some((at, v)) = res.witness() {
                return Some((format!("u=e{i}{j} {at}"), v));
            }
        }
    }
    None
}

/// Side of a Rota–Baxter operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RbSide {
    /// 𝔯(A)₁ = Tr₂(r₁₂A₂).
    Left,
    /// 𝔯′(A)₂ = Tr₁(r₁₂A₁).
    Right,
}

/// A linear operator on Mat(V), stored as an n²×n² matrix acting on row-major vectorized
/// matrices: index (i−1)n + (j−1) holds A^i_j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatOperator {
    n: usize,
    m: Matrix,
}

impl MatOperator {
    /// Builds from a function giving 𝔯(A) for each matrix.
    pub fn from_map<F: Fn(&Operator1) -> Operator1>(n: usize, f: F) -> Self {
        let mut m = Matrix::zeros(n * n, n * n);
        for c in 0..n * n {
            let mut e = Matrix::zeros(n, n);
            e[(c / n, c % n)] = Rational::one();
            let img = f(&e);
            for r in 0..n * n {
                m[(r, c)] = img[(r / n, r % n)].clone();
            }
        }
        MatOperator { n, m }
    }

    /// The identity map.
    pub fn identity(n: usize) -> Self {
        MatOperator {
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

    /// Applies the operator to A.
    pub fn apply(&self, a: &Operator1) -> Operator1 {
        let n = self.n;
        Matrix::from_fn(n, n, |i, j| {
            let r = i * n + j;
            let mut s = Rational::zero();
            for c in 0..n * n {
                s += &self.m[(r, c)] * &a[(c / n, c % n)];
            }
            s
        })
    }
}

/// 𝔯 or 𝔯′ of an r-matrix as an operator on Mat(V).
pub fn rota_baxter(r: &Operator2, side: RbSide) -> MatOperator {
    let n = r.dim();
    MatOperator::from_map(n, |a| {
        Matrix::from_fn(n, n, |x, y| {
            let mut s = Rational::zero();
            for p in 1..=n {
                for q in 1..=n {
                    s += match side {
                        // 𝔯(A)^i_k = Σ r^{ij}_{kl} A^l_j
                        RbSide::Left => r.at(x + 1, p, y + 1, q) * &a[(q - 1, p - 1)],
                        // 𝔯′(A)^j_l = Σ r^{ij}_{kl} A^k_i
                        RbSide::Right => r.at(p, x + 1, q, y + 1) * &a[(q - 1, p - 1)],
                    };
                }
            }
            s
        })
    })
}

/// A family of Rota–Baxter operators given by explicit summation formulas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RbKind {
    /// From 𝔟⁰.
    B0,
    /// From 𝔟.
    B,
    /// From r^(s).
    RS,
    /// From the rime r(φ).
    RimePhi(Vec<Rational>),
}

/// The explicit summation formula for the Rota–Baxter operator of the family.
pub fn rb_closed_form(kind: &RbKind, n: usize) -> Result<MatOperator> {
    if let RbKind::RimePhi(phi) = kind {
        if phi.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "phi has length {}, expected {n}",
                phi.len()
            )));
        }
        require_distinct(phi, "phi")?;
    }
    let ni = n as i64;
    let get = |a: &Operator1, i: i64, j: i64| -> Option<Rational> {
        (i >= 1 && j >= 1 && i <= ni && j <= ni).then(|| a[((i - 1) as usize, (j - 1) as usize)].clone())
    };
    let sum_diag = |a: &Operator1, i0: i64, j0: i64, step: i64| -> Rational {
        let mut s = Rational::zero();
        let mut t = 0;
        while let Some(v) = get(a, i0 + step * t, j0 + step * t) {
            s += v;
            t += 1;
        }
        s
    };
    Ok(match kind {
        RbKind::B0 => MatOperator::from_map(n, |a| {
            Matrix::from_fn(n, n, |x, y| {
                let (i, j) = (x as i64 + 1, y as i64 + 1);
                let mut v = Rational::zero();
                if theta(j - i) {
                    v += sum_diag(a, i, j - 1, -1);
                }
                if theta(i + 1 - j) {
                    v -= sum_diag(a, i + 1, j, 1);
                }
                v
            })
        }),
        RbKind::B => MatOperator::from_map(n, |a| {
            Matrix::from_fn(n, n, |x, y| {
                let (i, j) = (x as i64 + 1, y as i64 + 1);
                let mut v = Rational::zero();
                if theta(j + 1 - i) {
                    v += sum_diag(a, i - 1, j - 1, -1);
                }
                if theta(i - j) {
                    v -= sum_diag(a, i, j, 1);
                }
                v
            })
        }),
        RbKind::RS => MatOperator::from_map(n, |a| {
            Matrix::from_fn(n, n, |x, y| {
                if x == y {
                    (0..x).map(|s| a[(s, s)].clone()).sum()
                } else if y > x {
                    -a[(x, y)].clone()
                } else {
                    Rational::zero()
                }
            })
        }),
        RbKind::RimePhi(phi) => MatOperator::from_map(n, |a| {
            Matrix::from_fn(n, n, |i, j| {
                if i != j {
                    &phi[j] / (&phi[j] - &phi[i]) * (&a[(i, j)] - &a[(j, j)])
                } else {
                    (0..n)
                        .filter(|&s| s != i)
                        .map(|s| &phi[i] / (&phi[i] - &phi[s]) * (&a[(i, s)] - &a[(s, s)]))
                        .sum()
                }
            })
        }),
    })
}

/// The r-matrix whose Rota–Baxter operator the closed form describes. The r^(s) formula is the
/// operator of the transposed matrix.
pub fn rb_source(kind: &RbKind, n: usize) -> Result<Operator2> {
    match kind {
        RbKind::B0 => bezout_operator(BezoutKind::B0, n),
        RbKind::B => bezout_operator(BezoutKind::B, n),
        RbKind::RS => Ok(bezout_operator(BezoutKind::RS, n)?.transpose()),
        RbKind::RimePhi(phi) => build_classical(&ClassicalKind::RimeNonSkew(phi.clone()), n),
    }
}

/// The weight of the Rota–Baxter operator of the family.
pub fn rb_weight(kind: &RbKind) -> Rational {
    match kind {
        RbKind::B0 => Rational::zero(),
        RbKind::B | RbKind::RS => rat(-1),
        RbKind::RimePhi(_) => Rational::one(),
    }
}

/// 𝔯(A)𝔯(B) + α𝔯(AB) − 𝔯(𝔯(A)B + A𝔯(B)).
pub fn rb_weight_residual(rb: &MatOperator, alpha: &Rational, a: &Operator1, b: &Operator1) -> Operator1 {
    let ra = rb.apply(a);
    let rbb = rb.apply(b);
    let lhs = &(&ra * &rbb) + &rb.apply(&(a * b)).scale(alpha);
    let inner = &(&ra * b) + &(a * &rbb);
    &lhs - &rb.apply(&inner)
}

/// A★B = 𝔯(A)B + A𝔯(B) − αAB.
pub fn star_product(a: &Operator1, b: &Operator1, rb: &MatOperator, alpha: &Rational) -> Operator1 {
    let s = &(&rb.apply(a) * b) + &(a * &rb.apply(b));
    &s - &(a * b).scale(alpha)
}

/// A★̃B = 𝔯(A)B − A𝔯′(B) + c·A·Tr(B).
pub fn star_product_dual(
    a: &Operator1,
    b: &Operator1,
    left: &MatOperator,
    right: &MatOperator,
    c: &Rational,
) -> Operator1 {
    let s = &(&left.apply(a) * b) - &(a * &right.apply(b));
    &s + &a.scale(&(c * b.trace()))
}

/// Coefficients (α, β) with r + r₂₁ = αP + βI, if they exist and are unique (n ≥ 2).
pub fn symmetrization_constants(r: &Operator2) -> Option<(Rational, Rational)> {
    let n = r.dim();
    let s = r + &r.reversed();
    let p = permutation_p(n);
    let id = Operator2::identity(n);
    if n < 2 {
        return None;
    }
    // P has entry 1 at (12|21); I at (12|12).
    let alpha = s.at(1, 2, 2, 1).clone();
    let beta = s.at(1, 2, 1, 2).clone();
    (&p.scale(&alpha) + &id.scale(&beta) == s).then_some((alpha, beta))
}

/// Outcome of the homomorphism check for a three-dimensional realization of a ★-algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsomorphismReport {
    /// φ(e_A ★ e_B) = φ(e_A)φ(e_B) on all 16 basis pairs.
    pub homomorphism: bool,
    /// The four images are linearly independent.
    pub injective: bool,
    /// Every image lies in the displayed shape.
    pub shape: bool,
}

impl IsomorphismReport {
    /// True when every item holds.
    pub fn all_pass(&self) -> bool {
        self.homomorphism && self.injective && self.shape
    }
}

/// The displayed 3×3 images of e¹₁, e¹₂, e²₁, e²₂ for the ★-algebra of 𝔟⁰ or 𝔟.
pub fn gl2_realization(kind: BezoutKind) -> Result<[Matrix; 4]> {
    Ok(match kind {
        BezoutKind::B0 => [
            Matrix::from_i64(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]),
            Matrix::from_i64(&[&[-1, 0, 0], &[0, 0, 0], &[0, 0, 0]]),
            Matrix::from_i64(&[&[0, 0, 1], &[0, 0, 0], &[0, 0, 0]]),
            Matrix::from_i64(&[&[0, 0, 0], &[0, 0, 1], &[0, 0, 0]]),
        ],
        BezoutKind::B => [
            Matrix::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 0]]),
            Matrix::from_i64(&[&[0, 0, 1], &[0, 0, 0], &[0, 0, 0]]),
            Matrix::from_i64(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]),
            Matrix::from_i64(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, 0]]),
        ],
        _ => {
            return Err(Error::InvalidInput(
                "realizations exist for b0 and b only".into(),
            ))
        }
    })
}

/// Checks that the displayed assignment is an injective ★-homomorphism into the displayed shape.
pub fn gl2_isomorphism_check(kind: BezoutKind) -> Result<IsomorphismReport> {
    let images = gl2_realization(kind)?;
    let (rb_kind, shape): (RbKind, [[bool; 3]; 3]) = match kind {
        BezoutKind::B0 => (RbKind::B0, [[true, true, true], [false, false, true], [false, false, false]]),
        _ => (RbKind::B, [[true, true, true], [false, true, false], [false, false, false]]),
    };
    let alpha = rb_weight(&rb_kind);
    let rb = rota_baxter(&rb_source(&rb_kind, 2)?, RbSide::Left);
    let units = [(1, 1), (1, 2), (2, 1), (2, 2)];
    let phi = |m: &Operator1| -> Matrix {
        let mut out = Matrix::zeros(3, 3);
        for (idx, &(i, j)) in units.iter().enumerate() {
            // Coefficient of e^i_j sits in row j, column i.
            out = &out + &images[idx].scale(&m[(j - 1, i - 1)]);
        }
        out
    };
    let mut homomorphism = true;
    for &(i, j) in &units {
        for &(k, l) in &units {
            let u = matrix_unit(2, i, j);
            let v = matrix_unit(2, k, l);
            let prod = star_product(&u, &v, &rb, &alpha);
            homomorphism &= phi(&prod) == &phi(&u) * &phi(&v);
        }
    }
    let stacked = Matrix::from_fn(4, 9, |r, c| images[r][(c / 3, c % 3)].clone());
    let injective = stacked.rank() == 4;
    let shape_ok = images.iter().all(|m| {
        (0..3).all(|r| (0..3).all(|c| shape[r][c] || m[(r, c)].is_zero()))
    });
    Ok(IsomorphismReport {
        homomorphism,
        injective,
        shape: shape_ok,
    })
}

/// r₁₃(Sr)₂₃ − (Sr)₂₃r₁₂ − c(r₁₃ − r₁₂) and (Sr)₁₂r₁₃ − r₂₃(Sr)₁₂ − c(r₁₃ − r₂₃).
pub fn symmetrized_nhacybe_residuals(r: &Operator2, c: &Rational) -> (Operator3, Operator3) {
    let s = r + &r.reversed();
    let r12 = lift(r, Legs::L12);
    let r13 = lift(r, Legs::L13);
    let r23 = lift(r, Legs::L23);
    let s12 = lift(&s, Legs::L12);
    let s23 = lift(&s, Legs::L23);
    let a = &(&(&r13 * &s23) - &(&s23 * &r12)) - &(&r13 - &r12).scale(c);
    let b = &(&(&s12 * &r13) - &(&r23 * &s12)) - &(&r13 - &r23).scale(c);
    (a, b)
}

/// Residuals of the three-generator algebra relations and the derived braid relation, with
/// r² = βr + v.
pub fn hecke_overlap_residuals(r: &Operator2) -> Result<BTreeMap<String, Operator3>> {
    let (beta, v) = r
        .quadratic_relation()
        .ok_or_else(|| Error::InvalidInput("operator satisfies no quadratic relation".into()))?;
    let n = r.dim();
    let id = Operator3::identity(n);
    let r12 = lift(r, Legs::L12);
    let r13 = lift(r, Legs::L13);
    let r23 = lift(r, Legs::L23);
    let mut out = BTreeMap::new();
    out.insert(
        "r13r23".into(),
        &(&r13 * &r23) - &(&(&(&r23 * &r12) - &(&r12 * &r13)) + &r13.scale(&beta)),
    );
    out.insert(
        "r13r12".into(),
        &(&r13 * &r12) - &(&(&(&r12 * &r23) - &(&r23 * &r13)) + &r13.scale(&beta)),
    );
    for (name, x) in [("r12sq", &r12), ("r13sq", &r13), ("r23sq", &r23)] {
        out.insert(name.into(), &(&(x * x) - &x.scale(&beta)) - &id.scale(&v));
    }
    out.insert(
        "braid".into(),
        &(&r23 * &(&r12 * &r23)) - &(&r12 * &(&r23 * &r12)),
    );
    Ok(out)
}

/// 𝔟̃∘𝔟̃ − β²/4·I⊗I⊗I with β from the symmetrization of 𝔟̃ + I/2.
pub fn btilde_residual(n: usize) -> Result<(Operator3, Operator2)> {
    let bt = bezout_operator(BezoutKind::BTilde, n)?;
    let b = bezout_operator(BezoutKind::B, n)?;
    let (_, beta) = symmetrization_constants(&b)
        .ok_or_else(|| Error::InvalidInput("symmetrization is not αP + βI".into()))?;
    let c = &beta * &beta / rat(4);
    let circ = nhacybe_residual(&bt, &Rational::zero(), false);
    let sq = &bt.square() - &Operator2::identity(n).scale(&c);
    Ok((&circ - &Operator3::identity(n).scale(&c), sq))
}

/// Coefficients of the non-normalized Lagrange polynomials l_i(t) = Π_{s≠i}(t − φ_s) as columns,
/// rows indexed by increasing powers.
pub fn lagrange_basis(phi: &[Rational]) -> Result<Operator1> {
    require_distinct(phi, "phi")?;
    let n = phi.len();
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for a in 0..n {
            let e = elem_sym_omit(phi, n - 1 - a, i + 1)?;
            m[(a, i)] = if (n - 1 - a) % 2 == 1 { -e } else { e };
        }
    }
    Ok(m)
}

/// 𝔟 written in the Lagrange basis {l_i(x) l_j(y)} plus the transpose of the rime r(φ).
pub fn lagrange_basis_residual(phi: &[Rational]) -> Result<Operator2> {
    let n = phi.len();
    let b = bezout_operator(BezoutKind::B, n)?;
    let l = lagrange_basis(phi)?;
    let ll = Operator2::tensor(&l, &l);
    let in_basis = &(&ll.inverse()? * &b) * &ll;
    let r = build_classical(&ClassicalKind::RimeNonSkew(phi.to_vec()), n)?;
    Ok(&in_basis + &r.transpose())
}

/// The classical form of 𝔟 conjugated by X(φ), plus the rime r(φ).
pub fn rime_basis_residual(phi: &[Rational]) -> Result<Operator2> {
    let n = phi.len();
    let b = to_classical_form(&bezout_operator(BezoutKind::B, n)?);
    let (x, _) = x_change_of_basis(phi)?;
    let r = build_classical(&ClassicalKind::RimeNonSkew(phi.to_vec()), n)?;
    Ok(&b.conjugate(&x)? + &r)
}
