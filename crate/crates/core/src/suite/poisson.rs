//! The quadratic rime Poisson pencil.

use super::{check, equal, holds, zero, Check, Ctx, Failure, Outcome};
use crate::kernel::rat;
use crate::poisson::{
    apply_move, b_of_rho, bracket_from_quantum, compensation_check, discriminant_action, invariance_generator,
    jacobi_residual, lie_derivative, linear_rime_suite, normal_form_classify, pencil_bracket, rime_fit,
    sl2_suite, varpi, OrbitClass, PencilMove, PencilParams, PolyBracket, Polynomial, QuantumFamily, Rho,
};

pub(super) const MUTATION_TARGET: &str = "poisson.pencil.jacobi";

/// Smallest dimension at which the Jacobi identity constrains a bracket.
const MIN_N: usize = 3;

const NORMAL_FORM_DRAWS: usize = 20;

pub(super) fn checks() -> Vec<Check> {
    vec![
        check("poisson.pencil.jacobi", "every pencil member satisfies Jacobi and has rime form (n >= 3)", jacobi),
        check("poisson.pencil.invariance", "the pencil generator is varpi(B(rho)) and preserves the bracket", invariance),
        check("poisson.pencil.compensation", "first-order variations of psi are compensated by rime-preserving flows", compensation),
        check("poisson.sl2", "sl(2) commutators, projective action and varpi identities", sl2),
        check("poisson.moves", "moves preserve the discriminant and transport the bracket", moves),
        check("poisson.normal-form", "normal-form classification agrees with the discriminant", normal_form),
        check("poisson.quantum-limit", "first-order brackets of the rime quantum planes are pencil members", quantum),
        check("poisson.linear", "linear rime brackets and the sl(2) isomorphism at n = 3", linear),
    ]
}

fn rho(cx: &mut Ctx) -> Rho {
    let s = &mut cx.sampler;
    loop {
        let r = Rho::new(s.sparse_rational(), s.sparse_rational(), s.sparse_rational());
        if !r.is_zero() {
            return r;
        }
    }
}

fn params(cx: &mut Ctx, n: usize) -> Result<PencilParams, Failure> {
    let psi = cx.sampler.distinct(n);
    let rho = rho(cx);
    Ok(PencilParams::new(psi, rho)?)
}

fn perturb_bracket(cx: &Ctx, br: PolyBracket) -> PolyBracket {
    if !cx.mutate {
        return br;
    }
    let x1 = Polynomial::var(0);
    let bump = PolyBracket::from_upper(br.dim(), |i, j| {
        if (i, j) == (1, 2) {
            &x1 * &x1
        } else {
            Polynomial::zero()
        }
    });
    br.add_scaled(&bump, &rat(1))
}

fn jacobi(cx: &mut Ctx) -> Outcome {
    let n = cx.n.max(MIN_N);
    cx.each_draw(|cx| {
        let p = params(cx, n)?;
        let br = perturb_bracket(cx, pencil_bracket(&p)?);
        zero("jacobi_residual", &jacobi_residual(&br))?;
        holds("rime fit", rime_fit(&br).is_some())
    })
}

fn invariance(cx: &mut Ctx) -> Outcome {
    cx.each_draw(|cx| {
        let p = params(cx, cx.n)?;
        let g = invariance_generator(&p)?;
        zero("generator - varpi(B(rho))", &(&g - &varpi(&b_of_rho(&p.psi, &p.rho)?)))?;
        zero("trace", &g.trace())?;
        zero("lie derivative", &lie_derivative(&pencil_bracket(&p)?, &g))
    })
}

fn compensation(cx: &mut Ctx) -> Outcome {
    cx.each_draw(|cx| {
        let p = params(cx, cx.n)?;
        let nu = cx.sampler.vector(cx.n);
        let eps = cx.sampler.rational();
        let rep = compensation_check(&p, &nu, &eps)?;
        holds("split", rep.split)?;
        holds("psi variation", rep.psi_variation)?;
        holds("compensated", rep.compensated)?;
        holds("stays rime", rep.stays_rime)
    })
}

fn sl2(cx: &mut Ctx) -> Outcome {
    cx.each_draw(|cx| {
        let rep = sl2_suite(&cx.sampler.distinct(cx.n))?;
        holds("commutators", rep.commutators)?;
        holds("projective action", rep.projective_action)?;
        holds("generator is varpi(B)", rep.generator_is_varpi)?;
        holds("varpi identities", rep.varpi)
    })
}

fn moves(cx: &mut Ctx) -> Outcome {
    cx.each_draw(|cx| {
        let p = params(cx, cx.n)?;
        let br = pencil_bracket(&p)?;
        let z = cx.sampler.rational();
        let l = cx.sampler.rational();
        for mv in [PencilMove::Shift(z), PencilMove::Dilate(l), PencilMove::Invert] {
            let acted = discriminant_action(&p.rho, &mv)?;
            equal(&format!("{mv:?} discriminant"), &acted.discriminant(), &p.rho.discriminant())?;
            let (q, d) = apply_move(&p, &mv)?;
            let moved = &br.rescaled(&d);
            let target = pencil_bracket(&q)?;
            holds(&format!("{mv:?} transports the bracket"), *moved == target)?;
        }
        Ok(())
    })
}

fn normal_form(cx: &mut Ctx) -> Outcome {
    cx.repeat(NORMAL_FORM_DRAWS.max(cx.draws), |cx| {
        let psi = cx.sampler.distinct(cx.n);
        let lightlike = cx.sampler.coin();
        let rho = if lightlike {
            let (a, z) = (cx.sampler.rational(), cx.sampler.sparse_rational());
            Rho::new(a.clone(), rat(-2) * &a * &z, &a * &z * &z)
        } else {
            rho(cx)
        };
        let expected = if num::Zero::is_zero(&rho.discriminant()) {
            OrbitClass::Lightlike
        } else {
            OrbitClass::Massive
        };
        let nf = normal_form_classify(&PencilParams::new(psi, rho)?)?;
        equal("class", &nf.class, &expected)?;
        holds("witness verified or gap recorded", nf.verified || nf.gap.is_some())?;
        holds("witness moves are verified", nf.moves.is_none() || nf.verified)
    })
}

fn quantum(cx: &mut Ctx) -> Outcome {
    cx.each_draw(|cx| {
        let psi = cx.sampler.distinct(cx.n);
        let beta = cx.sampler.rational();
        let mu = cx.sampler.distinct(cx.n);
        for family in [QuantumFamily::NonUnitary { psi, beta }, QuantumFamily::Unitary { mu }] {
            let (br, p) = bracket_from_quantum(&family)?;
            holds("quantum bracket is the pencil member", br == pencil_bracket(&p)?)?;
        }
        Ok(())
    })
}

fn linear(cx: &mut Ctx) -> Outcome {
    let n = cx.n.max(MIN_N);
    let rep = linear_rime_suite(n)?;
    holds("Jacobi characterization", rep.jacobi_characterization)?;
    holds("almost trivial", rep.almost_trivial)?;
    holds("sl(2) isomorphism", rep.sl2_isomorphism != Some(false))?;
    if n == MIN_N {
        holds("sl(2) isomorphism evaluated", rep.sl2_isomorphism.is_some())?;
    }
    Ok(())
}
