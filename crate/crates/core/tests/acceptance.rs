//! Acceptance suite: one line per criterion, exact zero tolerance throughout.
//!
//! Run with `cargo test -p yibre-core --test acceptance`. The process exits non-zero if any
//! criterion fails other than the recorded Rota–Baxter weight deviation.

use std::process::ExitCode;

use yibre::bezout::{rb_source, rb_weight_residual, rota_baxter, RbKind, RbSide};
use yibre::classical::matrix_unit;
use yibre::kernel::{format_rational, rat};
use yibre::suite::{run_check, run_suite, Mutation, Sampler, Status, Suite, SuiteConfig};

const SEED: u64 = 20_240_917;

/// Outcome of one criterion: the first problem found, if any.
type Verdict = Result<(), String>;

type Criterion = (&'static str, fn() -> Verdict);

fn config(suite: Suite, n: usize, draws: usize) -> SuiteConfig {
    SuiteConfig { suite, n, seed: SEED, draws, mutation: None }
}

/// Runs the named checks at every listed dimension and requires each to pass.
fn checks(suite: Suite, names: &[&str], dims: &[usize], draws: usize) -> Verdict {
    for &n in dims {
        for name in names {
            let report = run_check(name, &config(suite, n, draws)).map_err(|e| format!("{name} n={n}: {e}"))?;
            if report.status != Status::Pass {
                let witness = report.residual_witness.unwrap_or_default();
                return Err(format!("{name} n={n}: {:?} {witness}", report.status));
            }
        }
    }
    Ok(())
}

fn c1_rime_ybe() -> Verdict {
    checks(Suite::Rime, &["rime.strict.ybe", "rime.unitary.ybe"], &[2, 3, 4, 5], 10)
}

fn c2_hecke() -> Verdict {
    checks(Suite::Rime, &["rime.strict.hecke"], &[2, 3, 4], 10)
}

fn c3_traces() -> Verdict {
    checks(Suite::Rime, &["rime.traces.closed", "rime.traces.eigen"], &[2, 3, 4], 10)
}

fn c4_invariance() -> Verdict {
    checks(
        Suite::Rime,
        &["rime.invariance.y", "rime.invariance.y0", "rime.invariance.generator"],
        &[2, 3, 4],
        10,
    )
}

fn c5_cg() -> Verdict {
    checks(Suite::Cg, &["cg.equivalence"], &[2, 3, 4, 5], 10)?;
    checks(Suite::Cg, &["cg.sectype", "cg.change-of-basis", "cg.phi-transition"], &[2, 3, 4], 10)
}

fn c6_coefficients() -> Verdict {
    checks(
        Suite::Rime,
        &["rime.coefficients.strict", "rime.coefficients.ice", "rime.coefficients.mutation"],
        &[3],
        10,
    )
}

fn c7_classical() -> Verdict {
    checks(
        Suite::Classical,
        &[
            "classical.cybe",
            "classical.conjugation",
            "classical.limit",
            "classical.carrier",
            "classical.invariance-shift",
            "classical.representation-change",
        ],
        &[2, 3, 4],
        10,
    )?;
    checks(Suite::Classical, &["classical.bd-fork"], &[2], 5)
}

fn c8_bezout() -> Verdict {
    checks(Suite::Bezout, &["bezout.identities"], &[2, 3, 4, 5, 6], 1)?;
    checks(
        Suite::Bezout,
        &[
            "bezout.nhacybe.b0",
            "bezout.nhacybe.b",
            "bezout.nhacybe.rs",
            "bezout.btilde",
            "bezout.recursion",
        ],
        &[2, 3, 4],
        1,
    )?;
    checks(Suite::Bezout, &["bezout.linear-quantization"], &[2, 3, 4], 5)?;
    checks(Suite::Bezout, &["bezout.coproduct.coassociativity"], &[2], 1)
}

/// The weights as listed: −1 for the Bézout operators, +1 for the rime operator.
fn c9_rota_baxter() -> Verdict {
    let mut problems = Vec::new();
    let mut sampler = Sampler::new(SEED);
    for n in 2..=4 {
        let phi = sampler.distinct(n);
        let listed = [
            ("b0", RbKind::B0, rat(-1)),
            ("b", RbKind::B, rat(-1)),
            ("rs", RbKind::RS, rat(-1)),
            ("rime", RbKind::RimePhi(phi), rat(1)),
        ];
        for (name, kind, alpha) in listed {
            let rb = rota_baxter(&rb_source(&kind, n).map_err(|e| e.to_string())?, RbSide::Left);
            let units: Vec<_> = (1..=n).flat_map(|i| (1..=n).map(move |j| matrix_unit(n, i, j))).collect();
            let mut pairs: Vec<_> = units.iter().flat_map(|a| units.iter().map(move |b| (a.clone(), b.clone()))).collect();
            pairs.extend((0..10).map(|_| (sampler.matrix(n), sampler.matrix(n))));
            if let Some((r, c, v)) = pairs.iter().find_map(|(a, b)| rb_weight_residual(&rb, &alpha, a, b).first_nonzero()) {
                problems.push(format!(
                    "({name}, {}) n={n} [{},{}] = {}",
                    format_rational(&alpha),
                    r + 1,
                    c + 1,
                    format_rational(&v)
                ));
                break;
            }
        }
    }
    if let Err(e) = checks(
        Suite::Rota,
        &["rota.closed-forms", "rota.star.associativity", "rota.star.tables", "rota.star.isomorphisms"],
        &[2, 3, 4],
        10,
    ) {
        problems.push(e);
    }
    if problems.is_empty() {
        Ok(())
    } else {
        Err(problems.join("; "))
    }
}

/// The b0 operator satisfies the identity at weight 0 and nothing else in criterion 9 fails.
fn c9_only_known_deviation(detail: &str) -> bool {
    let others_fine = detail.split("; ").all(|p| p.starts_with("(b0, -1)"));
    others_fine && checks(Suite::Rota, &["rota.weight.b0"], &[2, 3, 4], 10).is_ok()
}

fn c10_poisson() -> Verdict {
    checks(Suite::Poisson, &["poisson.pencil.jacobi"], &[3, 4, 5], 25)?;
    checks(
        Suite::Poisson,
        &["poisson.pencil.invariance", "poisson.sl2", "poisson.moves", "poisson.linear"],
        &[3, 4],
        10,
    )?;
    checks(Suite::Poisson, &["poisson.normal-form"], &[3], 20)
}

fn c11_qalg() -> Verdict {
    checks(Suite::Qalg, &["qalg.overlaps.confluent", "qalg.overlaps.mutations"], &[3], 20)?;
    checks(Suite::Qalg, &["qalg.poincare"], &[2, 3, 4], 2)?;
    checks(Suite::Qalg, &["qalg.gl11.window"], &[2], 10)
}

fn c12_blocks() -> Verdict {
    checks(
        Suite::Blocks,
        &["blocks.catalog.ybe", "blocks.equivalences", "blocks.symmetry", "blocks.skew-invertibility"],
        &[2],
        10,
    )?;
    checks(Suite::Blocks, &["blocks.nonrime-entries"], &[2], 50)
}

fn c13_harness() -> Verdict {
    for suite in Suite::MODULES {
        let mut cfg = config(suite, 2, 2);
        cfg.mutation = Some(Mutation::OneEntry);
        let report = run_suite(&cfg).map_err(|e| e.to_string())?;
        let failed = report.failures();
        match failed.as_slice() {
            [one] if one.name == suite.mutation_target() && one.residual_witness.is_some() => {}
            _ => {
                let names: Vec<_> = failed.iter().map(|c| c.name.as_str()).collect();
                return Err(format!("{suite} mutation failed {names:?}"));
            }
        }
        cfg.mutation = None;
        let mut a = run_suite(&cfg).map_err(|e| e.to_string())?;
        let mut b = run_suite(&cfg).map_err(|e| e.to_string())?;
        a.wall_time_ms = 0;
        b.wall_time_ms = 0;
        if a.to_json() != b.to_json() {
            return Err(format!("{suite} report differs between runs"));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        ("rime families solve the YBE", c1_rime_ybe),
        ("Hecke relation and eigenvalue multiplicities", c2_hecke),
        ("quantum traces", c3_traces),
        ("invariance groups", c4_invariance),
        ("Cremmer-Gervais equivalence", c5_cg),
        ("coefficient equations", c6_coefficients),
        ("classical r-matrices", c7_classical),
        ("Bezout operators and nhacYBe", c8_bezout),
        ("Rota-Baxter operators and star products", c9_rota_baxter),
        ("Poisson pencil", c10_poisson),
        ("quadratic algebras", c11_qalg),
        ("two-dimensional catalog", c12_blocks),
        ("harness sanity", c13_harness),
    ];
    let mut unexpected = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let k = i + 1;
        match run() {
            Ok(()) => println!("PASS {k:>2} {title}"),
            Err(detail) => {
                let known = k == 9 && c9_only_known_deviation(&detail);
                let note = if known { " [recorded deviation]" } else { "" };
                println!("FAIL {k:>2} {title}: {detail}{note}");
                if !known {
                    unexpected += 1;
                }
            }
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
