//! Bézout operators: nhacYBe, identities, linear quantization and coproducts.

use super::{check, holds, zero, Check, Ctx, Failure, Outcome};
use crate::bezout::{
    bezout_identity_suite, bezout_operator, btilde_residual, coassociativity_all_units, derivation_residual,
    hecke_overlap_residuals, lagrange_basis_residual, linear_quantization_residual, m_recursion_check,
    rime_basis_residual, shifted_solution_residual, symmetrized_nhacybe_residuals, BezoutKind, CoproductVariant,
    ShiftKind,
};
use crate::kernel::{rat, Rational};
use crate::tensor::nhacybe_residual;

pub(super) const MUTATION_TARGET: &str = "bezout.nhacybe.b";

pub(super) fn checks() -> Vec<Check> {
    vec![
        check("bezout.nhacybe.b0", "b0 solves the nhacYBe with c = 0 in both leg orders", nhacybe_b0),
        check("bezout.nhacybe.b", "b solves the nhacYBe with c = 1 in both leg orders", nhacybe_b),
        check("bezout.nhacybe.rs", "r^(s) solves the nhacYBe with c = 1 in both leg orders", nhacybe_rs),
        check("bezout.nhacybe.symmetrized", "symmetrized nhacYBe for b and r^(s)", symmetrized),
        check("bezout.identities", "quadratic, permutation and symmetrization identities", identities),
        check("bezout.hecke-overlaps", "three-generator algebra and braid relation of b and r^(s)", overlaps),
        check("bezout.linear-quantization", "I + lambda r solves both YBE forms", quantization),
        check("bezout.btilde", "b~ solves the shifted nhacYBe and squares to a scalar", btilde),
        check("bezout.recursion", "first-order recursions determine b0", recursion),
        check("bezout.shifted", "translation and dilatation invariance and the shifted cYBE solutions", shifted),
        check("bezout.coproduct.derivation", "coproducts are twisted derivations", derivation),
        check("bezout.coproduct.coassociativity", "coproducts are coassociative on all matrix units, n = 2, 3", coassociativity),
        check("bezout.rime-basis", "b in the Lagrange and symmetric-function bases is the rime r(phi)", rime_basis),
    ]
}

fn nhacybe(cx: &Ctx, kind: BezoutKind, c: &Rational) -> Outcome {
    let r = cx.perturb(bezout_operator(kind, cx.n)?);
    zero("unprimed", &nhacybe_residual(&r, c, false))?;
    zero("primed", &nhacybe_residual(&r, c, true))
}

fn nhacybe_b0(cx: &mut Ctx) -> Outcome {
    nhacybe(cx, BezoutKind::B0, &rat(0))
}

fn nhacybe_b(cx: &mut Ctx) -> Outcome {
    nhacybe(cx, BezoutKind::B, &rat(1))
}

fn nhacybe_rs(cx: &mut Ctx) -> Outcome {
    nhacybe(cx, BezoutKind::RS, &rat(1))
}

fn symmetrized(cx: &mut Ctx) -> Outcome {
    for kind in [BezoutKind::B, BezoutKind::RS] {
        let (a, b) = symmetrized_nhacybe_residuals(&bezout_operator(kind, cx.n)?, &rat(1));
        zero(&format!("{} first", kind.name()), &a)?;
        zero(&format!("{} second", kind.name()), &b)?;
    }
    Ok(())
}

fn identities(cx: &mut Ctx) -> Outcome {
    zero("identity suite", &bezout_identity_suite(cx.n)?)
}

fn overlaps(cx: &mut Ctx) -> Outcome {
    for kind in [BezoutKind::B, BezoutKind::RS] {
        let res = hecke_overlap_residuals(&bezout_operator(kind, cx.n)?)?;
        zero(kind.name(), &res)?;
    }
    Ok(())
}

fn quantization(cx: &mut Ctx) -> Outcome {
    cx.each_draw(|cx| {
        let lambda = cx.sampler.rational();
        for kind in [BezoutKind::B0, BezoutKind::B, BezoutKind::RS] {
            let (qybe, braid) = linear_quantization_residual(kind, &lambda, cx.n)?;
            zero(&format!("{} R12R13R23 form", kind.name()), &qybe)?;
            zero(&format!("{} braid form", kind.name()), &braid)?;
        }
        Ok(())
    })
}

fn btilde(cx: &mut Ctx) -> Outcome {
    let (circ, sq) = btilde_residual(cx.n)?;
    zero("shifted nhacYBe", &circ)?;
    zero("square", &sq)
}

fn recursion(cx: &mut Ctx) -> Outcome {
    let rep = m_recursion_check(cx.n)?;
    holds("x rule", rep.x_rule)?;
    holds("y rule", rep.y_rule)?;
    holds("uniqueness", rep.unique)
}

fn shifted(cx: &mut Ctx) -> Outcome {
    cx.each_draw(|cx| {
        let c = cx.sampler.rational();
        for (name, kind) in [("b0 + c(dx - dy)", ShiftKind::B0Shift), ("b + c(x dx - y dy)", ShiftKind::BShift)] {
            let s = shifted_solution_residual(kind, &c, cx.n)?;
            zero(&format!("{name} generator commutator"), &s.generator_commutator)?;
            zero(&format!("{name} cybe"), &s.cybe)?;
        }
        Ok(())
    })
}

const VARIANTS: [CoproductVariant; 3] = [CoproductVariant::Plain, CoproductVariant::Delta, CoproductVariant::DeltaTilde];

fn derivation(cx: &mut Ctx) -> Outcome {
    cx.each_draw(|cx| {
        let n = cx.n;
        let (u, v, c) = (cx.sampler.matrix(n), cx.sampler.matrix(n), cx.sampler.rational());
        for kind in [BezoutKind::B0, BezoutKind::B, BezoutKind::RS] {
            let r = bezout_operator(kind, n)?;
            for variant in VARIANTS {
                zero(&format!("{} {variant:?}", kind.name()), &derivation_residual(&u, &v, &r, &c, variant))?;
            }
        }
        Ok(())
    })
}

/// Plain, Δ and Δ̃ for 𝔟⁰ at c = 0; Δ and Δ̃ for 𝔟 and r^(s) at c = 1.
fn coassociative_cases() -> Vec<(BezoutKind, usize, i64, CoproductVariant)> {
    let mut cases = Vec::new();
    for n in [2, 3] {
        for variant in VARIANTS {
            cases.push((BezoutKind::B0, n, 0, variant));
        }
        for kind in [BezoutKind::B, BezoutKind::RS] {
            for variant in [CoproductVariant::Delta, CoproductVariant::DeltaTilde] {
                cases.push((kind, n, 1, variant));
            }
        }
    }
    cases
}

fn coassociativity(_: &mut Ctx) -> Outcome {
    for (kind, n, c, variant) in coassociative_cases() {
        let r = bezout_operator(kind, n)?;
        if let Some((at, v)) = coassociativity_all_units(&r, &rat(c), variant) {
            return Err(Failure::Fail(format!(
                "{} n={n} {variant:?} [{at}] = {}",
                kind.name(),
                crate::kernel::format_rational(&v)
            )));
        }
    }
    Ok(())
}

fn rime_basis(cx: &mut Ctx) -> Outcome {
    cx.each_draw(|cx| {
        let phi = cx.sampler.distinct(cx.n);
        zero("symmetric-function basis", &rime_basis_residual(&phi)?)?;
        zero("Lagrange basis", &lagrange_basis_residual(&phi)?)
    })
}
