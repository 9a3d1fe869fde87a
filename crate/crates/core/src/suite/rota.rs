//! Rota–Baxter operators of the Bézout and rime r-matrices and their ★-products.

use super::{check, equal, holds, zero, Check, Ctx, Outcome};
use crate::bezout::{
    gl2_isomorphism_check, rb_closed_form, rb_source, rb_weight, rb_weight_residual, rota_baxter,
    star_product, BezoutKind, MatOperator, RbKind, RbSide,
};
use crate::classical::matrix_unit;
use crate::kernel::{rat, Matrix, Rational};

pub(super) const MUTATION_TARGET: &str = "rota.weight.b";

/// Largest dimension for the exhaustive associativity check.
const ASSOCIATIVITY_MAX_N: usize = 3;

pub(super) fn checks() -> Vec<Check> {
    vec![
        check("rota.weight.b0", "Rota-Baxter identity for the operator of b0", |cx| weight(cx, RbKind::B0)),
        check("rota.weight.b", "Rota-Baxter identity of weight -1 for the operator of b", |cx| weight(cx, RbKind::B)),
        check("rota.weight.rs", "Rota-Baxter identity of weight -1 for the operator of r^(s)", |cx| weight(cx, RbKind::RS)),
        check("rota.weight.rime", "Rota-Baxter identity of weight 1 for the operator of the rime r(phi)", weight_rime),
        check("rota.closed-forms", "summation formulas equal the trace constructions", closed_forms),
        check("rota.star.associativity", "star product is associative on all basis triples", associativity),
        check("rota.star.tables", "two-dimensional operator and star-product tables", tables),
        check("rota.star.isomorphisms", "both 3x3 realizations are injective star-homomorphisms", isomorphisms),
    ]
}

fn units(n: usize) -> Vec<Matrix> {
    (1..=n)
        .flat_map(|i| (1..=n).map(move |j| matrix_unit(n, i, j)))
        .collect()
}

fn weight_on(cx: &mut Ctx, rb: &MatOperator, alpha: &Rational) -> Outcome {
    let n = rb.dim();
    let basis = units(n);
    for (x, a) in basis.iter().enumerate() {
        for (y, b) in basis.iter().enumerate() {
            zero(&format!("units ({x},{y})"), &rb_weight_residual(rb, alpha, a, b))?;
        }
    }
    cx.each_draw(|cx| {
        let (a, b) = (cx.sampler.matrix(n), cx.sampler.matrix(n));
        zero("random pair", &rb_weight_residual(rb, alpha, &a, &b))
    })
}

fn weight(cx: &mut Ctx, kind: RbKind) -> Outcome {
    let source = cx.perturb(rb_source(&kind, cx.n)?);
    let rb = rota_baxter(&source, RbSide::Left);
    weight_on(cx, &rb, &rb_weight(&kind))
}

fn weight_rime(cx: &mut Ctx) -> Outcome {
    let kind = RbKind::RimePhi(cx.sampler.distinct(cx.n));
    weight(cx, kind)
}

fn closed_forms(cx: &mut Ctx) -> Outcome {
    let mut kinds = vec![RbKind::B0, RbKind::B, RbKind::RS];
    for _ in 0..cx.draws {
        kinds.push(RbKind::RimePhi(cx.sampler.distinct(cx.n)));
    }
    for kind in kinds {
        let closed = rb_closed_form(&kind, cx.n)?;
        let traced = rota_baxter(&rb_source(&kind, cx.n)?, RbSide::Left);
        zero(&format!("{kind:?}"), &(closed.matrix() - traced.matrix()))?;
    }
    Ok(())
}

fn associativity(cx: &mut Ctx) -> Outcome {
    let n = cx.n.min(ASSOCIATIVITY_MAX_N);
    let kinds = [RbKind::B0, RbKind::B, RbKind::RS, RbKind::RimePhi(cx.sampler.distinct(n))];
    let basis = units(n);
    for kind in kinds {
        let rb = rb_closed_form(&kind, n)?;
        let w = rb_weight(&kind);
        for a in &basis {
            for b in &basis {
                let ab = star_product(a, b, &rb, &w);
                for c in &basis {
                    let lhs = star_product(&ab, c, &rb, &w);
                    let rhs = star_product(a, &star_product(b, c, &rb, &w), &rb, &w);
                    zero(&format!("{kind:?}"), &(&lhs - &rhs))?;
                }
            }
        }
    }
    Ok(())
}

fn entry(m: &Matrix, i: usize, j: usize) -> Rational {
    m[(i - 1, j - 1)].clone()
}

fn table(rows: [[Rational; 2]; 2]) -> Matrix {
    Matrix::from_rows(rows.into_iter().map(|r| r.to_vec()).collect())
}

fn rb0_table(a: &Matrix) -> Matrix {
    table([[-entry(a, 2, 1), entry(a, 1, 1)], [rat(0), rat(0)]])
}

fn rb_table(a: &Matrix) -> Matrix {
    table([[rat(0), rat(0)], [-entry(a, 2, 1), entry(a, 1, 1)]])
}

fn star0_table(a: &Matrix, t: &Matrix) -> Matrix {
    let tr = entry(t, 1, 1) + entry(t, 2, 2);
    table([
        [-entry(a, 2, 1) * entry(t, 1, 1), -entry(a, 2, 1) * entry(t, 1, 2) + entry(a, 1, 1) * tr],
        [-entry(a, 2, 1) * entry(t, 2, 1), entry(a, 2, 1) * entry(t, 1, 1)],
    ])
}

fn star_table(a: &Matrix, t: &Matrix) -> Matrix {
    let tr = entry(t, 1, 1) + entry(t, 2, 2);
    table([
        [entry(a, 1, 1) * entry(t, 1, 1), entry(a, 1, 1) * entry(t, 1, 2) + entry(a, 1, 2) * tr.clone()],
        [entry(a, 1, 1) * entry(t, 2, 1), entry(a, 1, 1) * entry(t, 2, 2) + entry(a, 2, 2) * tr],
    ])
}

fn tables(cx: &mut Ctx) -> Outcome {
    let rb0 = rota_baxter(&rb_source(&RbKind::B0, 2)?, RbSide::Left);
    let rb = rota_baxter(&rb_source(&RbKind::B, 2)?, RbSide::Left);
    let (w0, w) = (rb_weight(&RbKind::B0), rb_weight(&RbKind::B));
    cx.each_draw(|cx| {
        let (a, t) = (cx.sampler.matrix(2), cx.sampler.matrix(2));
        equal("b0 operator", &rb0.apply(&a), &rb0_table(&a))?;
        equal("b operator", &rb.apply(&a), &rb_table(&a))?;
        equal("b0 star", &star_product(&a, &t, &rb0, &w0), &star0_table(&a, &t))?;
        equal("b star", &star_product(&a, &t, &rb, &w), &star_table(&a, &t))
    })
}

fn isomorphisms(_: &mut Ctx) -> Outcome {
    for kind in [BezoutKind::B0, BezoutKind::B] {
        let rep = gl2_isomorphism_check(kind)?;
        holds(&format!("{} homomorphism", kind.name()), rep.homomorphism)?;
        holds(&format!("{} injective", kind.name()), rep.injective)?;
        holds(&format!("{} shape", kind.name()), rep.shape)?;
    }
    Ok(())
}
