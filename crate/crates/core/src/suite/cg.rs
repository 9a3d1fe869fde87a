//! Cremmer–Gervais matrices and their equivalence with the strict rime family.

use super::{check, zero, Check, Ctx, Outcome};
use crate::cg::{
    cg_equivalence_residual, cg_matrix, cg_plane_relations, cg_symmetry_residual, generating_function_residual,
    phi_transition, rime_plane_relations, sectype_identity_residual, standard_riming, substitute_relations,
    x_change_of_basis, CgParams,
};
use crate::kernel::{rat, Matrix};
use crate::rime::{hecke_residual, strict_rime_r};
use crate::tensor::yb_residual;

pub(super) const MUTATION_TARGET: &str = "cg.ybe";

pub(super) fn checks() -> Vec<Check> {
    vec![
        check("cg.ybe", "twisted Cremmer-Gervais matrix solves the braided YBE and is Hecke", ybe),
        check("cg.equivalence", "strict rime matrix is conjugate to the Cremmer-Gervais matrix by X(phi)", equivalence),
        check("cg.sectype", "symmetric-function identity behind the equivalence, all index tuples", sectype),
        check("cg.change-of-basis", "X(phi) X(phi)^-1 = I", change_of_basis),
        check("cg.phi-transition", "closed form of X(phi') X(phi)^-1 and its action on rime matrices", transition),
        check("cg.generating-function", "derivatives of elementary symmetric functions", generating),
        check("cg.symmetry", "symmetric part of the Cremmer-Gervais matrix", symmetry),
        check("cg.plane", "X(phi) maps the rime quantum plane onto the Cremmer-Gervais plane", plane),
        check("cg.standard-riming", "conjugated standard solution matches the rimed exchange relations", riming),
    ]
}

fn beta_not_one(cx: &mut Ctx) -> crate::kernel::Rational {
    cx.sampler.rational_avoiding(&[rat(1)])
}

fn ybe(cx: &mut Ctx) -> Outcome {
    cx.each_draw(|cx| {
        let params = CgParams {
            n: cx.n,
            qsq_inv: cx.sampler.rational(),
            p: cx.sampler.rational(),
        };
        let r = cx.perturb(cg_matrix(&params)?);
        zero("yb_residual", &yb_residual(&r))?;
        zero("hecke_residual", &hecke_residual(&r, &params.beta()))
    })
}

fn equivalence(cx: &mut Ctx) -> Outcome {
    cx.each_draw(|cx| {
        let phi = cx.sampler.distinct(cx.n);
        let beta = beta_not_one(cx);
        zero("R(phi) (X⊗X) - (X⊗X) R_CG", &cg_equivalence_residual(&phi, &beta)?)
    })
}

fn sectype(cx: &mut Ctx) -> Outcome {
    cx.each_draw(|cx| {
        let n = cx.n;
        let phi = cx.sampler.distinct(n);
        for i in 1..=n {
            for j in (1..=n).filter(|&j| j != i) {
                for k in 1..=n {
                    for l in 1..=n {
                        let r = sectype_identity_residual(&phi, i, j, k, l)?;
                        zero(&format!("(i,j,k,l)=({i},{j},{k},{l})"), &r)?;
                    }
                }
            }
        }
        Ok(())
    })
}

fn change_of_basis(cx: &mut Ctx) -> Outcome {
    cx.each_draw(|cx| {
        let n = cx.n;
        let (x, xi) = x_change_of_basis(&cx.sampler.distinct(n))?;
        zero("X X^-1 - I", &(&(&x * &xi) - &Matrix::identity(n)))?;
        zero("X^-1 X - I", &(&(&xi * &x) - &Matrix::identity(n)))
    })
}

fn transition(cx: &mut Ctx) -> Outcome {
    cx.each_draw(|cx| {
        let n = cx.n;
        let phi = cx.sampler.distinct(n);
        let php = cx.sampler.distinct(n);
        let beta = cx.sampler.rational();
        let t = phi_transition(&phi, &php)?;
        let (x, _) = x_change_of_basis(&php)?;
        let (_, xi) = x_change_of_basis(&phi)?;
        zero("closed form - X(phi') X(phi)^-1", &(&t - &(&x * &xi)))?;
        let moved = strict_rime_r(&phi, &beta)?.conjugate(&t)?;
        zero("T R(phi) T^-1 - R(phi')", &(&moved - &strict_rime_r(&php, &beta)?))
    })
}

fn generating(cx: &mut Ctx) -> Outcome {
    cx.each_draw(|cx| {
        let phi = cx.sampler.distinct(cx.n);
        zero("generating function", &generating_function_residual(&phi)?)
    })
}

fn symmetry(cx: &mut Ctx) -> Outcome {
    cx.each_draw(|cx| {
        let q = cx.sampler.rational();
        zero("symmetric part", &cg_symmetry_residual(cx.n, &q)?)
    })
}

fn plane(cx: &mut Ctx) -> Outcome {
    cx.each_draw(|cx| {
        let phi = cx.sampler.distinct(cx.n);
        let beta = beta_not_one(cx);
        let (x, _) = x_change_of_basis(&phi)?;
        let moved = substitute_relations(&rime_plane_relations(&phi, &beta)?, &x);
        let target = cg_plane_relations(cx.n, &(rat(1) - &beta))?;
        zero("substituted rime plane - CG plane", &(&moved - &target))
    })
}

fn riming(cx: &mut Ctx) -> Outcome {
    cx.each_draw(|cx| {
        let q = cx.sampler.rational();
        zero("riming residual", &standard_riming(cx.n, &q)?.residual)
    })
}
