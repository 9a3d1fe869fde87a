//! Rime families: YBE, Hecke structure, quantum traces, invariance groups and the coefficient
//! equations.

use super::{check, equal, holds, zero, Check, Ctx, Outcome};
use crate::kernel::{powi, rat, Matrix};
use crate::rime::{
    appendix_a_residuals, assemble_rime, eigen_multiplicities, generator_residual, hecke_residual,
    ice_standard_data, invariance_generator, invariance_residual, invariance_y, invariance_y0,
    nonunitary_eigen_residual, quantum_traces, quantum_traces_closed, reversal_residual_nonunitary,
    reversal_residual_unitary, strict_beta, strict_rime_r, unitary_beta, unitary_jordan_residual,
    unitary_rime_r, EigenStructure, GeneratorKind, RimeData,
};
use crate::tensor::yb_residual;

pub(super) const MUTATION_TARGET: &str = "rime.strict.ybe";

pub(super) fn checks() -> Vec<Check> {
    vec![
        check("rime.strict.ybe", "strict rime family solves the braided YBE", strict_ybe),
        check("rime.unitary.ybe", "unitary rime family solves the braided YBE", unitary_ybe),
        check("rime.strict.hecke", "strict rime family is Hecke with multiplicities (n(n+1)/2, n(n-1)/2)", strict_hecke),
        check("rime.strict.jordan", "strict rime family at beta = 2 is a single Jordan type", strict_jordan),
        check("rime.unitary.hecke", "unitary rime family is an involution with multiplicities (n(n+1)/2, n(n-1)/2)", unitary_hecke),
        check("rime.traces.closed", "skew-inverse traces match the closed forms and Q Q~ = (1-beta)^(n-1)", traces_closed),
        check("rime.traces.eigen", "Q acts diagonally on w_a(phi) and as a Jordan block on w_i(mu)", traces_eigen),
        check("rime.invariance.y", "Y(u,v) commutes with R, composes multiplicatively, det = (uv)^(n(n-1)/2)", invariance_y_check),
        check("rime.invariance.y0", "Y0(a) commutes with R and is additive in a", invariance_y0_check),
        check("rime.invariance.generator", "traceless invariance generators commute with R", generators),
        check("rime.reversal", "reversal of the rime families", reversal),
        check("rime.coefficients.strict", "coefficient equations vanish on strict rime data", coefficients_strict),
        check("rime.coefficients.ice", "coefficient equations vanish on standard ice data", coefficients_ice),
        check("rime.coefficients.mutation", "a single altered coefficient breaks the coefficient equations", coefficients_mutation),
    ]
}

fn strict_ybe(cx: &mut Ctx) -> Outcome {
    cx.each_draw(|cx| {
        let phi = cx.sampler.distinct(cx.n);
        let beta = cx.sampler.rational();
        let r = cx.perturb(strict_rime_r(&phi, &beta)?);
        zero("yb_residual", &yb_residual(&r))
    })
}

fn unitary_ybe(cx: &mut Ctx) -> Outcome {
    cx.each_draw(|cx| {
        let mu = cx.sampler.distinct(cx.n);
        zero("yb_residual", &yb_residual(&unitary_rime_r(&mu)?))
    })
}

fn expected_multiplicities(n: usize) -> EigenStructure {
    EigenStructure::Semisimple {
        m1: n * (n + 1) / 2,
        m_beta_minus_1: n * (n - 1) / 2,
    }
}

fn strict_hecke(cx: &mut Ctx) -> Outcome {
    cx.each_draw(|cx| {
        let phi = cx.sampler.distinct(cx.n);
        let beta = cx.sampler.rational_avoiding(&[rat(2)]);
        let r = strict_rime_r(&phi, &beta)?;
        zero("hecke_residual", &hecke_residual(&r, &beta))?;
        equal("multiplicities", &eigen_multiplicities(&r, &beta)?, &expected_multiplicities(cx.n))
    })
}

fn strict_jordan(cx: &mut Ctx) -> Outcome {
    cx.each_draw(|cx| {
        let phi = cx.sampler.distinct(cx.n);
        let r = strict_rime_r(&phi, &rat(2))?;
        equal("eigen structure", &eigen_multiplicities(&r, &rat(2))?, &EigenStructure::Jordan)
    })
}

fn unitary_hecke(cx: &mut Ctx) -> Outcome {
    cx.each_draw(|cx| {
        let mu = cx.sampler.distinct(cx.n);
        let r = unitary_rime_r(&mu)?;
        zero("hecke_residual", &hecke_residual(&r, &rat(0)))?;
        equal("multiplicities", &eigen_multiplicities(&r, &rat(0))?, &expected_multiplicities(cx.n))
    })
}

fn traces_closed(cx: &mut Ctx) -> Outcome {
    cx.each_draw(|cx| {
        let n = cx.n;
        let phi = cx.sampler.distinct(n);
        let beta = cx.sampler.rational_avoiding(&[rat(1), rat(2)]);
        let traces = quantum_traces(&strict_rime_r(&phi, &beta)?)?;
        let closed = quantum_traces_closed(&strict_beta(&phi, &beta)?);
        zero("Q - closed", &(&traces.0 - &closed.0))?;
        zero("Q~ - closed", &(&traces.1 - &closed.1))?;
        let scalar = Matrix::identity(n).scale(&powi(&(rat(1) - &beta), n as i64 - 1));
        zero("Q Q~ - (1-beta)^(n-1) I", &(&(&traces.0 * &traces.1) - &scalar))?;

        let mu = cx.sampler.distinct(n);
        let traces = quantum_traces(&unitary_rime_r(&mu)?)?;
        let closed = quantum_traces_closed(&unitary_beta(&mu)?);
        zero("unitary Q - closed", &(&traces.0 - &closed.0))?;
        zero("unitary Q~ - closed", &(&traces.1 - &closed.1))?;
        zero("unitary Q Q~ - I", &(&(&traces.0 * &traces.1) - &Matrix::identity(n)))
    })
}

fn traces_eigen(cx: &mut Ctx) -> Outcome {
    cx.each_draw(|cx| {
        let phi = cx.sampler.distinct(cx.n);
        let beta = cx.sampler.rational_avoiding(&[rat(1), rat(2)]);
        zero("Q w_a(phi) - (1-beta)^(n-1-a) w_a(phi)", &nonunitary_eigen_residual(&phi, &beta)?)?;
        let mu = cx.sampler.distinct(cx.n);
        zero("Jordan action on w_i(mu)", &unitary_jordan_residual(&mu)?)
    })
}

fn invariance_y_check(cx: &mut Ctx) -> Outcome {
    cx.each_draw(|cx| {
        let n = cx.n;
        let phi = cx.sampler.distinct(n);
        let beta = cx.sampler.rational();
        let r = strict_rime_r(&phi, &beta)?;
        let s = &mut cx.sampler;
        let (u1, v1, u2, v2) = (s.rational(), s.rational(), s.rational(), s.rational());
        let y1 = invariance_y(&phi, &u1, &v1)?;
        let y2 = invariance_y(&phi, &u2, &v2)?;
        zero("invariance residual", &invariance_residual(&r, &y1))?;
        let composed = invariance_y(&phi, &(&u1 * &u2), &(&v1 * &v2))?;
        zero("Y(u1,v1)Y(u2,v2) - Y(u1u2,v1v2)", &(&(&y1 * &y2) - &composed))?;
        let det = powi(&(&u1 * &v1), (n * (n - 1) / 2) as i64);
        zero("det Y - (uv)^(n(n-1)/2)", &(y1.det() - det))
    })
}

fn invariance_y0_check(cx: &mut Ctx) -> Outcome {
    cx.each_draw(|cx| {
        let mu = cx.sampler.distinct(cx.n);
        let r = unitary_rime_r(&mu)?;
        let (a, b) = (cx.sampler.rational(), cx.sampler.rational());
        let ya = invariance_y0(&mu, &a)?;
        let yb = invariance_y0(&mu, &b)?;
        zero("invariance residual", &invariance_residual(&r, &ya))?;
        zero("Y0(a)Y0(b) - Y0(a+b)", &(&(&ya * &yb) - &invariance_y0(&mu, &(&a + &b))?))?;
        zero("det Y0 - 1", &(ya.det() - rat(1)))
    })
}

fn generators(cx: &mut Ctx) -> Outcome {
    cx.each_draw(|cx| {
        let phi = cx.sampler.distinct(cx.n);
        let beta = cx.sampler.rational();
        let eta = invariance_generator(&GeneratorKind::Nonunitary(phi.clone()))?;
        zero("tr eta", &eta.trace())?;
        zero("generator residual", &generator_residual(&strict_rime_r(&phi, &beta)?, &eta))?;
        let mu = cx.sampler.distinct(cx.n);
        let eta0 = invariance_generator(&GeneratorKind::Unitary(mu.clone()))?;
        zero("tr eta0", &eta0.trace())?;
        zero("unitary generator residual", &generator_residual(&unitary_rime_r(&mu)?, &eta0))
    })
}

fn reversal(cx: &mut Ctx) -> Outcome {
    cx.each_draw(|cx| {
        let phi = cx.sampler.distinct(cx.n);
        let beta = cx.sampler.rational();
        zero("non-unitary reversal", &reversal_residual_nonunitary(&phi, &beta)?)?;
        let mu = cx.sampler.distinct(cx.n);
        zero("unitary reversal", &reversal_residual_unitary(&mu)?)
    })
}

fn coefficients_strict(cx: &mut Ctx) -> Outcome {
    cx.each_draw(|cx| {
        let phi = cx.sampler.distinct(cx.n);
        let beta = cx.sampler.rational();
        let data = RimeData::from_operator(&strict_rime_r(&phi, &beta)?);
        zero("coefficient equations", &appendix_a_residuals(&data))?;
        let mu = cx.sampler.distinct(cx.n);
        let data = RimeData::from_operator(&unitary_rime_r(&mu)?);
        zero("unitary coefficient equations", &appendix_a_residuals(&data))
    })
}

fn coefficients_ice(cx: &mut Ctx) -> Outcome {
    cx.each_draw(|cx| {
        let q = cx.sampler.rational();
        let data = ice_standard_data(cx.n, &q)?;
        zero("yb_residual", &yb_residual(&assemble_rime(&data)))?;
        zero("coefficient equations", &appendix_a_residuals(&data))
    })
}

fn coefficients_mutation(cx: &mut Ctx) -> Outcome {
    cx.each_draw(|cx| {
        let n = cx.n;
        let phi = cx.sampler.distinct(n);
        let beta = cx.sampler.rational();
        let base = RimeData::from_operator(&strict_rime_r(&phi, &beta)?);
        let delta = cx.sampler.rational();
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let mut d = base.clone();
                d.beta[(i, j)] += &delta;
                let broken = appendix_a_residuals(&d).values().any(|v| !num::Zero::is_zero(v));
                holds(&format!("beta_{}{} + {} is detected", i + 1, j + 1, delta), broken)?;
            }
        }
        Ok(())
    })
}
