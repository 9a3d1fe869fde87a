//! Orderable quadratic rime algebras: rewriting to ordered monomials, overlap (diamond-lemma)
//! analysis and classification of the strict case, Poincaré series by exact linear algebra,
//! the GL(1|1) quantum-space dimension window and the classical limit of the confluent family.

use crate::cg::standard_riming;
use crate::error::{Error, Result};
use crate::kernel::{binomial, rat, require_nonzero, Dual, Matrix, Rational};
use crate::poisson::{jacobi_residual, PolyBracket, Polynomial};
use crate::rime::{quantum_space_relations, relation_basis, Side};
use num::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

/// A word in the generators; letters are 1-based.
pub type Word = Vec<usize>;

/// A linear combination of words.
pub type LinComb = BTreeMap<Word, Rational>;

fn add_into(acc: &mut LinComb, w: Word, c: Rational) {
    if c.is_zero() {
        return;
    }
    match acc.entry(w) {
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

/// Relations x^j x^k = f_jk x^k x^j + g_jk x^k x^k for j < k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedQuadraticPresentation {
    n: usize,
    f: BTreeMap<(usize, usize), Rational>,
    g: BTreeMap<(usize, usize), Rational>,
}

impl OrderedQuadraticPresentation {
    /// Builds from (f_jk, g_jk) for 1 ≤ j < k ≤ n.
    pub fn from_fn<F: FnMut(usize, usize) -> (Rational, Rational)>(n: usize, mut coeffs: F) -> Self {
        let mut f = BTreeMap::new();
        let mut g = BTreeMap::new();
        for j in 1..=n {
            for k in j + 1..=n {
                let (a, b) = coeffs(j, k);
                f.insert((j, k), a);
                g.insert((j, k), b);
            }
        }
        OrderedQuadraticPresentation { n, f, g }
    }

    /// x^j x^k = −x^k x^j + g_jk x^k x^k.
    pub fn anticommuting<F: FnMut(usize, usize) -> Rational>(n: usize, mut g: F) -> Self {
        Self::from_fn(n, |j, k| (rat(-1), g(j, k)))
    }

    /// x^j x^k = f x^k x^j + (1 − f) x^k x^k.
    pub fn uniform(n: usize, f: &Rational) -> Self {
        Self::from_fn(n, |_, _| (f.clone(), Rational::one() - f))
    }

    /// Number of generators.
    pub fn dim(&self) -> usize {
        self.n
    }

    /// f_jk for j < k.
    pub fn f(&self, j: usize, k: usize) -> &Rational {
        &self.f[&(j, k)]
    }

    /// g_jk for j < k.
    pub fn g(&self, j: usize, k: usize) -> &Rational {
        &self.g[&(j, k)]
    }

    /// All f_jk and g_jk are nonzero.
    pub fn is_strict(&self) -> bool {
        self.f.values().chain(self.g.values()).all(|c| !c.is_zero())
    }

    /// The presentation in the variables y^i with x^i = d_i y^i.
    pub fn rescaled(&self, d: &[Rational]) -> Result<Self> {
        if d.len() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "rescaling has {} entries for {} generators",
                d.len(),
                self.n
            )));
        }
        for di in d {
            require_nonzero(di, "rescaling factor")?;
        }
        Ok(Self::from_fn(self.n, |j, k| {
            (self.f(j, k).clone(), self.g(j, k) * &d[k - 1] / &d[j - 1])
        }))
    }

    /// The same relations as rows over the n² monomials.
    pub fn to_general(&self) -> GeneralQuadraticPresentation {
        let n = self.n;
        let idx = |a: usize, b: usize| (a - 1) * n + b - 1;
        let rows = self
            .f
            .keys()
            .map(|&(j, k)| {
                let mut row = vec![Rational::zero(); n * n];
                row[idx(j, k)] = Rational::one();
                row[idx(k, j)] = -self.f(j, k).clone();
                row[idx(k, k)] = -self.g(j, k).clone();
                row
            })
            .collect();
        GeneralQuadraticPresentation { n, relations: rows }
    }
}

/// Applies the rule at position `pos` (which must hold an increasing pair).
fn rewrite_at(word: &[usize], pos: usize, pres: &OrderedQuadraticPresentation) -> LinComb {
    let (j, k) = (word[pos], word[pos + 1]);
    let mut out = LinComb::new();
    let mut a = word.to_vec();
    a[pos] = k;
    a[pos + 1] = j;
    add_into(&mut out, a, pres.f(j, k).clone());
    let mut b = word.to_vec();
    b[pos] = k;
    add_into(&mut out, b, pres.g(j, k).clone());
    out
}

/// Rewrites a combination to weakly decreasing words, always at the leftmost increasing pair.
pub fn normal_order_comb(comb: &LinComb, pres: &OrderedQuadraticPresentation) -> LinComb {
    // Every rule replaces a word by lexicographically larger ones, so processing the smallest
    // pending word first handles each word exactly once.
    let mut pending = comb.clone();
    let mut out = LinComb::new();
    while let Some((w, c)) = pending.pop_first() {
        match (0..w.len().saturating_sub(1)).find(|&p| w[p] < w[p + 1]) {
            None => add_into(&mut out, w, c),
            Some(p) => {
                for (v, d) in rewrite_at(&w, p, pres) {
                    add_into(&mut pending, v, &c * &d);
                }
            }
        }
    }
    out
}

/// Ordered form of a single word.
pub fn normal_order(word: &[usize], pres: &OrderedQuadraticPresentation) -> LinComb {
    let mut comb = LinComb::new();
    comb.insert(word.to_vec(), Rational::one());
    normal_order_comb(&comb, pres)
}

/// Ordered forms of (x^j x^k) x^l and x^j (x^k x^l).
pub fn overlap_forms(j: usize, k: usize, l: usize, pres: &OrderedQuadraticPresentation) -> (LinComb, LinComb) {
    let w = [j, k, l];
    (
        normal_order_comb(&rewrite_at(&w, 0, pres), pres),
        normal_order_comb(&rewrite_at(&w, 1, pres), pres),
    )
}

/// For each j < k < l with a nonzero difference, the coefficient differences of
/// (x^j x^k) x^l − x^j (x^k x^l) on ordered monomials. Empty iff the presentation is confluent.
pub fn overlap_residuals(pres: &OrderedQuadraticPresentation) -> BTreeMap<(usize, usize, usize), LinComb> {
    let n = pres.dim();
    let mut out = BTreeMap::new();
    for j in 1..=n {
        for k in j + 1..=n {
            for l in k + 1..=n {
                let (mut left, right) = overlap_forms(j, k, l, pres);
                for (w, c) in right {
                    add_into(&mut left, w, -c);
                }
                if !left.is_empty() {
                    out.insert((j, k, l), left);
                }
            }
        }
    }
    out
}

/// Classification of an ordered presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderableClass {
    /// Confluent with f = −1; g is unconstrained.
    CaseI {
        /// g_jk for j < k.
        g: BTreeMap<(usize, usize), Rational>,
    },
    /// Confluent with a common f ≠ −1.
    CaseII {
        /// The common value of f_jk.
        f: Rational,
        /// d with `rescaled(d)` equal to the uniform presentation for f; `None` when 1 − f = 0
        /// (possible only for n = 2).
        rescaling: Option<Vec<Rational>>,
    },
    /// Strict but some overlap does not resolve.
    NotConfluentStrict,
    /// Some f_jk or g_jk vanishes.
    NonStrict,
}

/// Classifies a presentation by its overlaps and, in the second case, finds the rescaling
/// that brings every g_jk to 1 − f.
pub fn classify_orderable(pres: &OrderedQuadraticPresentation) -> OrderableClass {
    if !pres.is_strict() {
        return OrderableClass::NonStrict;
    }
    if !overlap_residuals(pres).is_empty() {
        return OrderableClass::NotConfluentStrict;
    }
    let n = pres.dim();
    let minus_one = rat(-1);
    if pres.f.values().all(|f| *f == minus_one) {
        return OrderableClass::CaseI { g: pres.g.clone() };
    }
    let f = pres.f(1, 2).clone();
    if pres.f.values().any(|x| *x != f) {
        // Only reachable for n = 2, where there are no overlaps; n = 2 has a single f.
        return OrderableClass::NotConfluentStrict;
    }
    let one_minus_f = Rational::one() - &f;
    if one_minus_f.is_zero() {
        return OrderableClass::CaseII { f, rescaling: None };
    }
    let mut d = vec![Rational::one()];
    for i in 1..n {
        let next = &d[i - 1] * &one_minus_f / pres.g(i, i + 1);
        d.push(next);
    }
    let normalized = pres.rescaled(&d).ok();
    let witness = normalized.filter(|p| *p == OrderedQuadraticPresentation::uniform(n, &f)).map(|_| d);
    match witness {
        Some(d) => OrderableClass::CaseII { f, rescaling: Some(d) },
        None => OrderableClass::NotConfluentStrict,
    }
}

/// Quadratic relations given as rows over the n² monomials; x^a x^b sits in column (a−1)n + (b−1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralQuadraticPresentation {
    n: usize,
    relations: Vec<Vec<Rational>>,
}

impl GeneralQuadraticPresentation {
    /// Validates row lengths and linear independence.
    pub fn new(n: usize, relations: Vec<Vec<Rational>>) -> Result<Self> {
        if let Some(r) = relations.iter().find(|r| r.len() != n * n) {
            return Err(Error::DimensionMismatch(format!(
                "relation row of length {} for n = {n}",
                r.len()
            )));
        }
        if !relations.is_empty() && Matrix::from_rows(relations.clone()).rank() != relations.len() {
            return Err(Error::InvalidInput("relations are linearly dependent".into()));
        }
        Ok(GeneralQuadraticPresentation { n, relations })
    }

    /// The nonzero rows of a row-echelon relation matrix.
    pub fn from_echelon(n: usize, rows: &Matrix) -> Result<Self> {
        let relations = (0..rows.rows())
            .map(|r| rows.row(r).to_vec())
            .filter(|r| r.iter().any(|c| !c.is_zero()))
            .collect();
        Self::new(n, relations)
    }

    /// Number of generators.
    pub fn dim(&self) -> usize {
        self.n
    }

    /// The relation rows.
    pub fn relations(&self) -> &[Vec<Rational>] {
        &self.relations
    }
}

/// Incremental sparse row echelon form over the rationals.
#[derive(Default)]
struct SparseEchelon {
    pivots: BTreeMap<usize, BTreeMap<usize, Rational>>,
}

impl SparseEchelon {
    fn insert(&mut self, mut row: BTreeMap<usize, Rational>) {
        while let Some((&lead, c)) = row.iter().next() {
            let c = c.clone();
            match self.pivots.get(&lead) {
                Some(p) => {
                    for (col, v) in p {
                        let e = row.entry(*col).or_insert_with(Rational::zero);
                        *e -= &c * v;
                        if e.is_zero() {
                            row.remove(col);
                        }
                    }
                }
                None => {
                    let inv = c.recip();
                    for v in row.values_mut() {
                        *v *= &inv;
                    }
                    self.pivots.insert(lead, row);
                    return;
                }
            }
        }
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Largest degree accepted by [`poincare_series`].
pub const MAX_POINCARE_DEGREE: usize = 6;

fn ideal_rank(pres: &GeneralQuadraticPresentation, m: usize) -> usize {
    let n = pres.n;
    let sparse: Vec<Vec<(usize, &Rational)>> = pres
        .relations
        .iter()
        .map(|r| r.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect())
        .collect();
    let mut ech = SparseEchelon::default();
    for i in 0..=m - 2 {
        let suffix = n.pow((m - 2 - i) as u32);
        for prefix in 0..n.pow(i as u32) {
            for s in 0..suffix {
                for rel in &sparse {
                    let row = rel
                        .iter()
                        .map(|&(col, c)| ((prefix * n * n + col) * suffix + s, c.clone()))
                        .collect();
                    ech.insert(row);
                }
            }
        }
    }
    ech.rank()
}

/// Dimensions of the graded components of degrees 0..=d.
pub fn poincare_series(pres: &GeneralQuadraticPresentation, d: usize) -> Result<Vec<usize>> {
    if d > MAX_POINCARE_DEGREE {
        return Err(Error::InvalidInput(format!(
            "degree {d} exceeds the cap {MAX_POINCARE_DEGREE}"
        )));
    }
    let n = pres.n;
    Ok((0..=d)
        .into_par_iter()
        .map(|m| match m {
            0 => 1,
            1 => n,
            _ => n.pow(m as u32) - ideal_rank(pres, m),
        })
        .collect())
}

/// dim of degree m in n commuting variables.
pub fn commuting_dimension(n: usize, m: usize) -> usize {
    binomial((n + m) as i64 - 1, m as i64)
        .to_integer()
        .to_usize()
        .unwrap_or(0)
}

/// Relations (R̂ − q)^{ij}_{kl} x^k x^l = 0 for the two-dimensional GL(1|1)-type matrix with
/// entries q, γ = 1 and the free parameter ω:
/// (q + q⁻¹) x¹x² = (x¹)² + (x²)², (q + q⁻¹) x²x¹ = ω⁻¹(x¹)² + ω(x²)².
pub fn gl11_even_relations(q: &Rational, omega: &Rational) -> Result<GeneralQuadraticPresentation> {
    require_nonzero(q, "q")?;
    require_nonzero(omega, "omega")?;
    let s = q + q.recip();
    let z = Rational::zero;
    GeneralQuadraticPresentation::new(
        2,
        vec![
            vec![-Rational::one(), s.clone(), z(), -Rational::one()],
            vec![-omega.recip(), z(), s, -omega.clone()],
        ],
    )
}

/// Outcome of [`gl11_window_test`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gl11Verdict {
    /// Computed dimensions for degrees 0..=d.
    pub series: Vec<usize>,
    /// The GL(1|1) pattern 1, 2, 2, 2, ….
    pub expected: Vec<usize>,
    /// First degree where they differ.
    pub first_mismatch: Option<usize>,
}

impl Gl11Verdict {
    /// The series matches the GL(1|1) pattern up to the tested degree.
    pub fn is_gl11_type(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Compares the series of [`gl11_even_relations`] with 1, 2, 2, 2, … up to degree d.
pub fn gl11_window_test(q: &Rational, omega: &Rational, d: usize) -> Result<Gl11Verdict> {
    if q.is_zero() || q.abs().is_one() {
        return Err(Error::DegenerateParameters("q must avoid 0 and ±1".into()));
    }
    let series = poincare_series(&gl11_even_relations(q, omega)?, d)?;
    let expected: Vec<usize> = (0..=d).map(|m| if m == 0 { 1 } else { 2 }).collect();
    let first_mismatch = (0..=d).find(|&m| series[m] != expected[m]);
    Ok(Gl11Verdict {
        series,
        expected,
        first_mismatch,
    })
}

/// The right even quantum space of the GL(1|1)-type block, read off the matrix itself.
pub fn gl11_block_relations(r: &crate::tensor::Operator2, q: &Rational) -> Result<GeneralQuadraticPresentation> {
    GeneralQuadraticPresentation::from_echelon(r.dim(), &quantum_space_relations(r, q, Side::Right))
}

/// Result of [`classical_limit_bracket`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalLimit {
    /// Order-zero part of the commutators x^j x^k − x^k x^j (all zero: commutative limit).
    pub zeroth_order_commutative: bool,
    /// First-order part, read as the bracket {x^j, x^k}.
    pub bracket: PolyBracket,
    /// Nonzero Jacobi components of the bracket.
    pub jacobi: BTreeMap<(usize, usize, usize), Polynomial>,
}

impl ClassicalLimit {
    /// Commutative at order zero and the bracket satisfies Jacobi.
    pub fn all_pass(&self) -> bool {
        self.zeroth_order_commutative && self.jacobi.is_empty()
    }
}

/// Expands x^j x^k = f x^k x^j + (1 − f) x^k x^k at a dual-number f = 1 + cε and reads the
/// commutators modulo ε² as a Poisson bracket on commuting variables.
pub fn classical_limit_bracket(n: usize, f: &Dual) -> Result<ClassicalLimit> {
    if !f.re.is_one() {
        return Err(Error::InvalidInput("the classical limit expands around f = 1".into()));
    }
    let one = Dual::constant(Rational::one());
    // x^j x^k − x^k x^j = (f − 1) x^k x^j + (1 − f) x^k x^k.
    let c_kj = &f.clone() - &one;
    let c_kk = &one - f;
    let zeroth_order_commutative = c_kj.re.is_zero() && c_kk.re.is_zero();
    let bracket = PolyBracket::from_upper(n, |j, k| {
        &Polynomial::monomial(vec![k - 1, j - 1], c_kj.eps.clone())
            + &Polynomial::monomial(vec![k - 1, k - 1], c_kk.eps.clone())
    });
    let jacobi = jacobi_residual(&bracket);
    Ok(ClassicalLimit {
        zeroth_order_commutative,
        bracket,
        jacobi,
    })
}

/// Relation space of the uniform presentation with f = q⁻², with generators listed in reverse
/// order, minus the right even quantum space of the rimed standard solution. Zero rows mean the
/// two spaces coincide.
pub fn rimed_standard_space_residual(n: usize, qsq_inv: &Rational) -> Result<Matrix> {
    let riming = standard_riming(n, qsq_inv)?;
    let space = quantum_space_relations(&riming.r_prime, &Rational::one(), Side::Right);
    let uniform = OrderedQuadraticPresentation::uniform(n, qsq_inv).to_general();
    let rev = |a: usize| n - 1 - a;
    let rows: Vec<Vec<Rational>> = uniform
        .relations
        .iter()
        .map(|r| {
            let mut out = vec![Rational::zero(); n * n];
            for (col, c) in r.iter().enumerate() {
                let (a, b) = (col / n, col % n);
                out[rev(a) * n + rev(b)] = c.clone();
            }
            out
        })
        .collect();
    let ours = relation_basis(&Matrix::from_rows(rows));
    if ours.rows() != space.rows() {
        return Err(Error::DimensionMismatch("relation bases of different size".into()));
    }
    Ok(&ours - &space)
}
