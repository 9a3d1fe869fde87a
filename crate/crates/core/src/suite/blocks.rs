//! The two-dimensional catalog. Every check works at n = 2 regardless of the configured dimension.

use super::{check, equal, holds, zero, Check, Ctx, Failure, Outcome};
use crate::blocks::{
    block_matrix, nonrime_entries, nonrime_entries_direct, operator_properties, skew_block_determinant,
    skew_entry_restrictions_hold, stated_equivalences, symmetry_relations, BlockKind, NamedResidual,
};
use crate::kernel::{frac, rat, Rational};
use crate::rime::{classify, RimeClass, RimeData};
use crate::tensor::yb_residual;
use std::collections::BTreeSet;

pub(super) const MUTATION_TARGET: &str = "blocks.catalog.ybe";

const NONRIME_DRAWS: usize = 50;

pub(super) fn checks() -> Vec<Check> {
    vec![
        check("blocks.catalog.ybe", "every catalog member solves the braided YBE", catalog_ybe),
        check("blocks.equivalences", "stated basis changes between catalog members", equivalences),
        check("blocks.symmetry", "transpose, reversal and inverse relations at rational-valid points", symmetry),
        check("blocks.extension", "catalog relations that leave the rationals at every sampled point", extension),
        check("blocks.skew-invertibility", "skew-invertibility verdicts and the entry restrictions they imply", skew),
        check("blocks.nonrime-entries", "closed forms of the non-rime entries of a conjugated Jordanian block", nonrime),
    ]
}

fn sample_q(cx: &mut Ctx) -> Rational {
    cx.sampler.rational_avoiding(&[rat(1), rat(-1)])
}

fn catalog_ybe(cx: &mut Ctx) -> Outcome {
    cx.each_draw(|cx| {
        let q = sample_q(cx);
        for kind in BlockKind::samples(&q) {
            let r = cx.perturb(block_matrix(&kind)?);
            zero(&format!("{} yb_residual", kind.name()), &yb_residual(&r))?;
        }
        Ok(())
    })
}

fn evaluated(list: Vec<NamedResidual>, skipped: &mut BTreeSet<String>) -> Outcome {
    for e in list {
        match e.residual {
            Some(r) => zero(&e.name, &r)?,
            None => {
                skipped.insert(e.name);
            }
        }
    }
    Ok(())
}

fn equivalences(cx: &mut Ctx) -> Outcome {
    // q = 5/3 makes the eight-vertex parameter rational.
    let gamma = cx.sampler.rational();
    evaluated(stated_equivalences(&frac(5, 3), &gamma)?, &mut BTreeSet::new())?;
    cx.each_draw(|cx| {
        let q = sample_q(cx);
        let gamma = cx.sampler.rational();
        evaluated(stated_equivalences(&q, &gamma)?, &mut BTreeSet::new())
    })
}

fn symmetry_kinds(cx: &mut Ctx) -> Vec<BlockKind> {
    let s = &mut cx.sampler;
    let q = s.rational_avoiding(&[rat(1), rat(-1)]);
    let p = s.rational();
    let eps = if s.coin() { rat(1) } else { rat(-1) };
    let (h1, h2) = (s.rational(), s.rational());
    vec![
        BlockKind::Gl2Std { q: q.clone(), p: p.clone() },
        BlockKind::Gl11Std { q: q.clone(), p },
        BlockKind::EightVertex { q: q.clone() },
        BlockKind::RII { q, epsilon: eps },
        BlockKind::Jordanian { h1, h2 },
    ]
}

fn symmetry(cx: &mut Ctx) -> Outcome {
    cx.each_draw(|cx| {
        let mut skipped = BTreeSet::new();
        for kind in symmetry_kinds(cx) {
            let rel = symmetry_relations(&kind)?;
            evaluated(rel, &mut skipped).map_err(|e| tag(e, kind.name()))?;
        }
        Ok(())
    })
}

fn tag(f: Failure, name: &str) -> Failure {
    match f {
        Failure::Fail(w) => Failure::Fail(format!("{name} {w}")),
        skip => skip,
    }
}

fn extension(cx: &mut Ctx) -> Outcome {
    let mut never = None::<BTreeSet<String>>;
    cx.each_draw(|cx| {
        let mut skipped = BTreeSet::new();
        let q = sample_q(cx);
        let gamma = cx.sampler.rational();
        for e in stated_equivalences(&q, &gamma)? {
            if e.residual.is_none() {
                skipped.insert(e.name);
            }
        }
        for kind in symmetry_kinds(cx) {
            for e in symmetry_relations(&kind)? {
                if e.residual.is_none() {
                    skipped.insert(format!("{}.{}", kind.name(), e.name));
                }
            }
        }
        never = Some(match never.take() {
            None => skipped,
            Some(prev) => prev.intersection(&skipped).cloned().collect(),
        });
        Ok(())
    })?;
    match never {
        Some(s) if !s.is_empty() => Err(Failure::Skip(format!(
            "needs an algebraic extension: {}",
            s.into_iter().collect::<Vec<_>>().join(", ")
        ))),
        _ => Ok(()),
    }
}

fn skew(cx: &mut Ctx) -> Outcome {
    cx.each_draw(|cx| {
        let q = sample_q(cx);
        for kind in BlockKind::samples(&q) {
            let r = block_matrix(&kind)?;
            if classify(&r) == RimeClass::NotRime {
                continue;
            }
            let data = RimeData::from_operator(&r);
            let skew = operator_properties(&r).skew_invertible;
            let det_nonzero = !num::Zero::is_zero(&skew_block_determinant(&data));
            equal(&format!("{} skew-invertible vs block determinant", kind.name()), &skew, &det_nonzero)?;
            if skew && !num::Zero::is_zero(&r.matrix().det()) {
                holds(&format!("{} entry restrictions", kind.name()), skew_entry_restrictions_hold(&data))?;
            }
        }
        Ok(())
    })
}

fn nonrime(cx: &mut Ctx) -> Outcome {
    cx.repeat(NONRIME_DRAWS.max(cx.draws), |cx| {
        let t = cx.sampler.invertible(2);
        let (h1, h2) = (cx.sampler.rational(), cx.sampler.rational());
        equal(
            "closed form vs conjugation",
            &nonrime_entries(&t, &h1, &h2)?,
            &nonrime_entries_direct(&t, &h1, &h2)?,
        )?;
        let rime = nonrime_entries(&t, &rat(0), &h2)?;
        holds("h1 = 0 gives zero entries", rime.iter().all(num::Zero::is_zero))
    })
}
