//! Quadratic algebras: confluence of ordered presentations, Poincaré series and the GL(1|1) window.

use super::{check, equal, holds, zero, Check, Ctx, Failure, Outcome};
use crate::blocks::{block_matrix, BlockKind};
use crate::kernel::{rat, Dual, Matrix, Rational};
use crate::qalg::{
    classical_limit_bracket, classify_orderable, commuting_dimension, gl11_block_relations, gl11_even_relations,
    gl11_window_test, overlap_residuals, poincare_series, rimed_standard_space_residual, OrderableClass,
    OrderedQuadraticPresentation,
};
use crate::rime::relation_basis;

pub(super) const MUTATION_TARGET: &str = "qalg.overlaps.confluent";

/// Overlaps need three generators.
const MIN_N: usize = 3;
/// Largest dimension and degree for Poincaré series.
const SERIES_MAX_N: usize = 4;
const SERIES_DEGREE: usize = 5;
const SERIES_DRAWS: usize = 2;
const MUTATION_DRAWS: usize = 20;
const WINDOW_DEGREE: usize = 4;
const GENERIC_OMEGAS: usize = 5;

pub(super) fn checks() -> Vec<Check> {
    vec![
        check("qalg.overlaps.confluent", "both confluent families have vanishing overlaps and are classified", confluent),
        check("qalg.overlaps.mutations", "overlaps vanish exactly on the two confluent families", mutations),
        check("qalg.poincare", "confluent presentations have the commutative Poincare series", poincare),
        check("qalg.gl11.window", "the GL(1|1) series holds exactly for omega in {q^-2, 1, q^2}", window),
        check("qalg.gl11.block", "the even quantum space of the GL(1|1)-type block at gamma = 1, and its series for any gamma", block),
        check("qalg.classical-limit", "first-order bracket of the uniform family satisfies Jacobi", classical),
        check("qalg.rimed-standard", "the uniform family is the quantum space of the rimed standard solution", rimed),
    ]
}

fn case_one(cx: &mut Ctx, n: usize) -> OrderedQuadraticPresentation {
    let g = cx.sampler.vector(n * (n - 1) / 2);
    let mut it = g.into_iter();
    OrderedQuadraticPresentation::anticommuting(n, |_, _| it.next().expect("one value per pair"))
}

fn case_two(cx: &mut Ctx, n: usize) -> Result<(OrderedQuadraticPresentation, Rational, Vec<Rational>), Failure> {
    let f = cx.sampler.rational_avoiding(&[rat(1), rat(-1)]);
    let mut d = cx.sampler.vector(n);
    let d0 = d[0].clone();
    d.iter_mut().for_each(|x| *x /= &d0);
    let dinv: Vec<Rational> = d.iter().map(Rational::recip).collect();
    let p = OrderedQuadraticPresentation::uniform(n, &f).rescaled(&dinv)?;
    Ok((p, f, d))
}

fn perturb(cx: &Ctx, p: OrderedQuadraticPresentation) -> OrderedQuadraticPresentation {
    if !cx.mutate {
        return p;
    }
    OrderedQuadraticPresentation::from_fn(p.dim(), |j, k| {
        let f = if (j, k) == (1, 2) { p.f(j, k) + rat(1) } else { p.f(j, k).clone() };
        (f, p.g(j, k).clone())
    })
}

fn confluent(cx: &mut Ctx) -> Outcome {
    let n = cx.n.max(MIN_N);
    cx.each_draw(|cx| {
        let a = case_one(cx, n);
        let a = perturb(cx, a);
        zero("anticommuting overlaps", &overlap_residuals(&a))?;
        holds("anticommuting class", matches!(classify_orderable(&a), OrderableClass::CaseI { .. }))?;
        let (b, f, d) = case_two(cx, n)?;
        let b = perturb(cx, b);
        zero("rescaled uniform overlaps", &overlap_residuals(&b))?;
        equal(
            "rescaled uniform class",
            &classify_orderable(&b),
            &OrderableClass::CaseII { f, rescaling: Some(d) },
        )
    })
}

/// f constant and either f = −1 or g_jk g_kl = (1 − f) g_jl for all j < k < l.
fn expected_confluent(p: &OrderedQuadraticPresentation) -> bool {
    let n = p.dim();
    let f = p.f(1, 2).clone();
    let pairs = (1..=n).flat_map(|j| (j + 1..=n).map(move |k| (j, k)));
    if pairs.clone().any(|(j, k)| *p.f(j, k) != f) {
        return false;
    }
    if f == rat(-1) {
        return true;
    }
    (1..=n).all(|j| {
        (j + 1..=n).all(|k| (k + 1..=n).all(|l| p.g(j, k) * p.g(k, l) == (rat(1) - &f) * p.g(j, l)))
    })
}

fn mutations(cx: &mut Ctx) -> Outcome {
    let n = cx.n.max(MIN_N);
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|j| (j + 1..=n).map(move |k| (j, k))).collect();
    cx.repeat(MUTATION_DRAWS.max(cx.draws), |cx| {
        let base = if cx.sampler.coin() { case_one(cx, n) } else { case_two(cx, n)?.0 };
        let at = pairs[cx.sampler.index(pairs.len())];
        let touch_f = cx.sampler.coin();
        let delta = cx.sampler.rational();
        let mutated = OrderedQuadraticPresentation::from_fn(n, |j, k| {
            let (mut f, mut g) = (base.f(j, k).clone(), base.g(j, k).clone());
            if (j, k) == at {
                if touch_f {
                    f += &delta;
                } else {
                    g += &delta;
                }
            }
            (f, g)
        });
        if !mutated.is_strict() {
            return Ok(());
        }
        let vanish = overlap_residuals(&mutated).is_empty();
        let what = format!("{} at {at:?} by {delta}", if touch_f { "f" } else { "g" });
        equal(&format!("overlaps vanish after {what}"), &vanish, &expected_confluent(&mutated))?;
        let class = classify_orderable(&mutated);
        equal(
            &format!("classified confluent after {what}"),
            &(class != OrderableClass::NotConfluentStrict),
            &vanish,
        )
    })
}

fn poincare(cx: &mut Ctx) -> Outcome {
    let n = cx.n.min(SERIES_MAX_N);
    let expected: Vec<usize> = (0..=SERIES_DEGREE).map(|m| commuting_dimension(n, m)).collect();
    cx.repeat(SERIES_DRAWS.min(cx.draws), |cx| {
        let a = case_one(cx, n);
        equal("anticommuting series", &poincare_series(&a.to_general(), SERIES_DEGREE)?, &expected)?;
        let (b, _, _) = case_two(cx, n)?;
        equal("rescaled uniform series", &poincare_series(&b.to_general(), SERIES_DEGREE)?, &expected)
    })
}

fn window(cx: &mut Ctx) -> Outcome {
    let q = rat(2);
    let special = [&q * &q, rat(1), (&q * &q).recip()];
    for omega in &special {
        let v = gl11_window_test(&q, omega, WINDOW_DEGREE)?;
        holds(&format!("omega = {omega} series {:?} is GL(1|1)", v.series), v.is_gl11_type())?;
    }
    cx.repeat(GENERIC_OMEGAS, |cx| {
        let omega = cx.sampler.rational_avoiding(&special);
        let v = gl11_window_test(&q, &omega, WINDOW_DEGREE)?;
        holds(&format!("omega = {omega} series {:?} is not GL(1|1)", v.series), !v.is_gl11_type())
    })?;
    cx.each_draw(|cx| {
        let q = cx.sampler.rational_avoiding(&[rat(1), rat(-1)]);
        for omega in [&q * &q, rat(1), (&q * &q).recip()] {
            let v = gl11_window_test(&q, &omega, WINDOW_DEGREE)?;
            holds(&format!("q = {q} omega = {omega} is GL(1|1)"), v.is_gl11_type())?;
        }
        Ok(())
    })
}

fn block(cx: &mut Ctx) -> Outcome {
    cx.each_draw(|cx| {
        let q = cx.sampler.rational_avoiding(&[rat(1), rat(-1)]);
        let gamma = cx.sampler.rational();
        for omega in [&q * &q, rat(1), (&q * &q).recip()] {
            let rbl4 = |gamma: Rational| BlockKind::Rbl4 { q: q.clone(), omega: omega.clone(), gamma };
            let from_block = gl11_block_relations(&block_matrix(&rbl4(rat(1)))?, &q)?;
            let ours = gl11_even_relations(&q, &omega)?;
            let a = relation_basis(&Matrix::from_rows(from_block.relations().to_vec()));
            let b = relation_basis(&Matrix::from_rows(ours.relations().to_vec()));
            zero(&format!("omega = {omega}"), &(&a - &b))?;
            let scaled = gl11_block_relations(&block_matrix(&rbl4(gamma.clone()))?, &q)?;
            equal(
                &format!("omega = {omega} gamma = {gamma} series"),
                &poincare_series(&scaled, WINDOW_DEGREE)?,
                &poincare_series(&ours, WINDOW_DEGREE)?,
            )?;
        }
        Ok(())
    })
}

fn classical(cx: &mut Ctx) -> Outcome {
    cx.each_draw(|cx| {
        let eps = cx.sampler.rational();
        let lim = classical_limit_bracket(cx.n, &Dual::new(rat(1), eps))?;
        holds("zeroth order commutative", lim.zeroth_order_commutative)?;
        zero("jacobi", &lim.jacobi)
    })
}

fn rimed(cx: &mut Ctx) -> Outcome {
    cx.each_draw(|cx| {
        let qi = cx.sampler.rational();
        zero("uniform relations - rimed standard space", &rimed_standard_space_residual(cx.n, &qi)?)
    })
}
