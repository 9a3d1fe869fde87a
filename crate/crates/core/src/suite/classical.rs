//! Classical r-matrices: cYBE, classical limits, conjugations and the carrier algebra.

use super::{check, holds, zero, Check, Ctx, Failure, Outcome};
use crate::classical::{
    bcg_gram_matrix, bd_fork_r, bd_symmetry_check, build_classical, carrier_algebra_check,
    classical_limit_residual, conjugation_residual, eta_b, eta_cg, invariance_shift_residual,
    representation_change_residual, tilde_difference_residual, ClassicalKind, ConjugationPair,
};
use crate::kernel::rat;
use crate::rime::hecke_residual;
use crate::tensor::{cybe_residual, yb_residual};

pub(super) const MUTATION_TARGET: &str = "classical.cybe";

pub(super) fn checks() -> Vec<Check> {
    vec![
        check("classical.cybe", "all seven classical families solve the cYBE", cybe),
        check("classical.limit", "P R(phi, beta) = I + beta r(phi) exactly", limit),
        check("classical.conjugation", "rime r-matrices are X-conjugates of r_CG, b and b_CG", conjugation),
        check("classical.carrier", "carrier algebra brackets, product rule and the coboundary form", carrier),
        check("classical.invariance-shift", "shifts of r_CG and b along their invariance generators", shift),
        check("classical.representation-change", "change of representation relating r_CG and b to b_CG", representation),
        check("classical.bd-symmetry", "Belavin-Drinfeld symmetry of r_CG and r'_CG", bd_symmetry),
        check("classical.bd-fork", "non-standard four-dimensional solution is Hecke and braided", bd_fork),
        check("classical.bcg", "carrier of b_CG: conjugated generators and a nondegenerate Gram matrix", bcg),
    ]
}

fn kinds(cx: &mut Ctx) -> Vec<ClassicalKind> {
    let n = cx.n;
    vec![
        ClassicalKind::RimeNonSkew(cx.sampler.distinct(n)),
        ClassicalKind::RCG,
        ClassicalKind::RCGPrime,
        ClassicalKind::BSkew,
        ClassicalKind::BCG,
        ClassicalKind::RimeSkew(cx.sampler.distinct(n)),
        ClassicalKind::RimeSkewSL(cx.sampler.distinct(n)),
    ]
}

fn cybe(cx: &mut Ctx) -> Outcome {
    cx.each_draw(|cx| {
        for kind in kinds(cx) {
            let r = cx.perturb(build_classical(&kind, cx.n)?);
            zero(&format!("{} cybe_residual", kind.name()), &cybe_residual(&r))?;
        }
        Ok(())
    })
}

fn limit(cx: &mut Ctx) -> Outcome {
    cx.each_draw(|cx| {
        let phi = cx.sampler.distinct(cx.n);
        let beta = cx.sampler.rational();
        zero("P R - I - beta r", &classical_limit_residual(&phi, &beta)?)
    })
}

fn conjugation(cx: &mut Ctx) -> Outcome {
    cx.each_draw(|cx| {
        let v = cx.sampler.distinct(cx.n);
        for (name, pair) in [
            ("r(phi) ~ r_CG", ConjugationPair::RimeCg(v.clone())),
            ("r(mu) ~ b", ConjugationPair::SkewB(v.clone())),
            ("r~(mu) ~ b_CG", ConjugationPair::SkewSlBcg(v.clone())),
        ] {
            zero(name, &conjugation_residual(&pair)?)?;
        }
        Ok(())
    })
}

fn carrier(cx: &mut Ctx) -> Outcome {
    cx.each_draw(|cx| {
        let report = carrier_algebra_check(&cx.sampler.distinct(cx.n))?;
        match report.items().into_iter().find(|(_, ok)| !ok) {
            Some((name, _)) => Err(Failure::Fail(format!("{name} does not hold"))),
            None => Ok(()),
        }
    })
}

fn shift(cx: &mut Ctx) -> Outcome {
    cx.each_draw(|cx| {
        let n = cx.n;
        let c = cx.sampler.rational();
        let rcg = build_classical(&ClassicalKind::RCG, n)?;
        zero("r_CG shifted by eta_CG", &invariance_shift_residual(&rcg, &eta_cg(n), &c)?)?;
        let b = build_classical(&ClassicalKind::BSkew, n)?;
        zero("b shifted by eta_b", &invariance_shift_residual(&b, &eta_b(n), &c)?)
    })
}

fn representation(cx: &mut Ctx) -> Outcome {
    cx.each_draw(|cx| {
        let rc = representation_change_residual(cx.n, &cx.sampler.rational())?;
        zero("r_CG representation change", &rc.cg)?;
        zero("skew representation change", &rc.skew)
    })
}

fn bd_symmetry(cx: &mut Ctx) -> Outcome {
    for kind in [ClassicalKind::RCG, ClassicalKind::RCGPrime] {
        holds(&format!("{} symmetry", kind.name()), bd_symmetry_check(&kind, cx.n)?.all_pass())?;
    }
    Ok(())
}

fn bd_fork(cx: &mut Ctx) -> Outcome {
    cx.each_draw(|cx| {
        let s = &mut cx.sampler;
        let q = s.rational_avoiding(&[rat(1), rat(-1)]);
        let (p, r, t) = (s.rational(), s.rational(), s.rational());
        let m = bd_fork_r(&q, &p, &r, &t)?;
        zero("yb_residual", &yb_residual(&m))?;
        let beta = rat(1) - (&q * &q).recip();
        zero("hecke_residual", &hecke_residual(&m, &beta))
    })
}

fn bcg(cx: &mut Ctx) -> Outcome {
    cx.each_draw(|cx| {
        let mu = cx.sampler.distinct(cx.n);
        zero("tilde difference", &tilde_difference_residual(&mu)?)?;
        let g = bcg_gram_matrix(&mu)?;
        holds("Gram matrix has full rank", g.rank() == g.rows())
    })
}
