//! Seeded verification suites. Every check evaluates exact residuals on sampled rational
//! parameters and reports pass, fail with the first nonzero entry, or a skip when the identity
//! needs an algebraic extension of the rationals.

mod bezout;
mod blocks;
mod cg;
mod classical;
mod poisson;
mod qalg;
mod rime;
mod rota;
mod sampler;

pub use sampler::{Sampler, MAX_ATTEMPTS};

use crate::error::Error;
use crate::kernel::{format_rational, Matrix, Rational};
use crate::poisson::{PolyBracket, Polynomial};
use crate::tensor::{Operator2, Operator3};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

/// Outcome of one check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    /// Every residual vanished.
    Pass,
    /// Some residual was nonzero or a construction failed.
    Fail,
    /// The identity involves √−1 or another irrational at every sampled point.
    SkippedNeedsExtension,
}

/// One line of a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    /// Dotted check name, unique within the report.
    pub name: String,
    /// Descriptive identifier of the statement being checked.
    pub paper_anchor: String,
    /// Outcome.
    pub status: Status,
    /// Sampled rationals, one entry per draw.
    pub parameter_draws: Vec<String>,
    /// First nonzero residual entry or error for failures; reason for skips.
    pub residual_witness: Option<String>,
}

/// The result of running a suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    /// Suite name.
    pub suite: String,
    /// Dimension.
    pub n: usize,
    /// PRNG seed.
    pub seed: u64,
    /// Number of sampled parameter points per check.
    pub draws: usize,
    /// Checks sorted by name.
    pub checks: Vec<CheckReport>,
    /// Elapsed wall time in milliseconds.
    pub wall_time_ms: u64,
}

impl SuiteReport {
    /// No check failed.
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    /// The failing checks.
    pub fn failures(&self) -> Vec<&CheckReport> {
        self.checks.iter().filter(|c| c.status == Status::Fail).collect()
    }

    /// Pretty-printed JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// The available suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    /// Rime families, Hecke structure, quantum traces, invariance groups, coefficient equations.
    Rime,
    /// The two-dimensional catalog.
    Blocks,
    /// Cremmer–Gervais equivalence.
    Cg,
    /// Classical r-matrices.
    Classical,
    /// Bézout operators.
    Bezout,
    /// Rota–Baxter operators and ★-products.
    Rota,
    /// Poisson pencil.
    Poisson,
    /// Quadratic algebras.
    Qalg,
    /// Every suite above.
    All,
}

impl Suite {
    /// Every suite except `All`, in report order.
    pub const MODULES: [Suite; 8] = [
        Suite::Rime,
        Suite::Blocks,
        Suite::Cg,
        Suite::Classical,
        Suite::Bezout,
        Suite::Rota,
        Suite::Poisson,
        Suite::Qalg,
    ];

    /// Name used on the command line.
    pub fn name(&self) -> &'static str {
        match self {
            Suite::Rime => "rime",
            Suite::Blocks => "blocks",
            Suite::Cg => "cg",
            Suite::Classical => "classical",
            Suite::Bezout => "bezout",
            Suite::Rota => "rota",
            Suite::Poisson => "poisson",
            Suite::Qalg => "qalg",
            Suite::All => "all",
        }
    }

    fn checks(&self) -> Vec<Check> {
        match self {
            Suite::Rime => rime::checks(),
            Suite::Blocks => blocks::checks(),
            Suite::Cg => cg::checks(),
            Suite::Classical => classical::checks(),
            Suite::Bezout => bezout::checks(),
            Suite::Rota => rota::checks(),
            Suite::Poisson => poisson::checks(),
            Suite::Qalg => qalg::checks(),
            Suite::All => Suite::MODULES.iter().flat_map(|s| s.checks()).collect(),
        }
    }

    /// The check perturbed by [`Mutation::OneEntry`].
    pub fn mutation_target(&self) -> &'static str {
        match self {
            Suite::Rime | Suite::All => rime::MUTATION_TARGET,
            Suite::Blocks => blocks::MUTATION_TARGET,
            Suite::Cg => cg::MUTATION_TARGET,
            Suite::Classical => classical::MUTATION_TARGET,
            Suite::Bezout => bezout::MUTATION_TARGET,
            Suite::Rota => rota::MUTATION_TARGET,
            Suite::Poisson => poisson::MUTATION_TARGET,
            Suite::Qalg => qalg::MUTATION_TARGET,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Suite::MODULES
            .iter()
            .chain([Suite::All].iter())
            .find(|x| x.name() == s)
            .copied()
            .ok_or_else(|| Error::InvalidInput(format!("unknown suite {s:?}")))
    }
}

/// Fault injection for harness testing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mutation {
    /// Adds 1 to a single entry of the object built by the suite's target check.
    OneEntry,
}

/// Parameters of a suite run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Which suite.
    pub suite: Suite,
    /// Dimension; checks with a fixed dimension ignore it.
    pub n: usize,
    /// PRNG seed.
    pub seed: u64,
    /// Sampled points per check.
    pub draws: usize,
    /// Optional fault injection.
    pub mutation: Option<Mutation>,
}

/// Smallest and largest accepted dimension.
pub const DIMENSION_RANGE: (usize, usize) = (2, 6);

fn validate(cfg: &SuiteConfig) -> Result<(), Error> {
    let (lo, hi) = DIMENSION_RANGE;
    if cfg.n < lo || cfg.n > hi {
        return Err(Error::InvalidInput(format!("n must lie in {lo}..={hi}")));
    }
    if cfg.draws == 0 {
        return Err(Error::InvalidInput("draws must be positive".into()));
    }
    Ok(())
}

fn execute(c: &Check, cfg: &SuiteConfig, mutate: bool) -> CheckReport {
    let mut cx = Ctx {
        n: cfg.n,
        draws: cfg.draws,
        mutate,
        sampler: Sampler::new(cfg.seed ^ fnv1a(c.name)),
        params: Vec::new(),
    };
    let outcome = (c.run)(&mut cx);
    cx.flush_log();
    let (status, residual_witness) = match outcome {
        Ok(()) => (Status::Pass, None),
        Err(Failure::Fail(w)) => (Status::Fail, Some(w)),
        Err(Failure::Skip(w)) => (Status::SkippedNeedsExtension, Some(w)),
    };
    CheckReport {
        name: c.name.into(),
        paper_anchor: c.anchor.into(),
        status,
        parameter_draws: cx.params,
        residual_witness,
    }
}

/// Runs the configured suite. Checks run in parallel; the report lists them sorted by name.
pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport, Error> {
    validate(cfg)?;
    let start = Instant::now();
    let target = cfg.mutation.map(|_| cfg.suite.mutation_target());
    let mut checks: Vec<CheckReport> = cfg
        .suite
        .checks()
        .into_par_iter()
        .map(|c| execute(&c, cfg, target == Some(c.name)))
        .collect();
    checks.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(SuiteReport {
        suite: cfg.suite.name().into(),
        n: cfg.n,
        seed: cfg.seed,
        draws: cfg.draws,
        checks,
        wall_time_ms: start.elapsed().as_millis() as u64,
    })
}

/// Runs a single check of `cfg.suite` by name; the mutation applies only if it is the suite's target.
pub fn run_check(name: &str, cfg: &SuiteConfig) -> Result<CheckReport, Error> {
    validate(cfg)?;
    let c = cfg
        .suite
        .checks()
        .into_iter()
        .find(|c| c.name == name)
        .ok_or_else(|| Error::InvalidInput(format!("no check {name:?} in suite {}", cfg.suite)))?;
    let mutate = cfg.mutation.is_some() && cfg.suite.mutation_target() == name;
    Ok(execute(&c, cfg, mutate))
}

/// Names and anchors of every check in a suite, sorted by name.
pub fn list_checks(suite: Suite) -> Vec<(&'static str, &'static str)> {
    let mut out: Vec<_> = suite.checks().iter().map(|c| (c.name, c.anchor)).collect();
    out.sort();
    out
}

fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ u64::from(b)).wrapping_mul(0x0000_0100_0000_01b3)
    })
}

/// Why a check did not pass.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Failure {
    Fail(String),
    Skip(String),
}

impl Failure {
    fn at_draw(self, d: usize) -> Self {
        match self {
            Failure::Fail(w) => Failure::Fail(format!("draw {d}: {w}")),
            skip => skip,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Fail(format!("error: {e}"))
    }
}

pub(crate) type Outcome = Result<(), Failure>;

pub(crate) struct Check {
    pub name: &'static str,
    pub anchor: &'static str,
    pub run: fn(&mut Ctx) -> Outcome,
}

pub(crate) const fn check(name: &'static str, anchor: &'static str, run: fn(&mut Ctx) -> Outcome) -> Check {
    Check { name, anchor, run }
}

pub(crate) struct Ctx {
    pub n: usize,
    pub draws: usize,
    pub mutate: bool,
    pub sampler: Sampler,
    pub params: Vec<String>,
}

impl Ctx {
    /// Runs `f` once per draw, tagging failures with the draw index.
    pub fn each_draw(&mut self, f: impl FnMut(&mut Self) -> Outcome) -> Outcome {
        self.repeat(self.draws, f)
    }

    /// Runs `f` for `count` draws regardless of the configured number.
    pub fn repeat(&mut self, count: usize, mut f: impl FnMut(&mut Self) -> Outcome) -> Outcome {
        for d in 0..count {
            let out = f(self);
            self.flush_log();
            out.map_err(|e| e.at_draw(d))?;
        }
        Ok(())
    }

    fn flush_log(&mut self) {
        let log = self.sampler.take_log();
        if !log.is_empty() {
            self.params.push(log);
        }
    }

    /// Adds 1 to the (1,1|1,1) entry when this check is the mutation target.
    pub fn perturb(&self, mut r: Operator2) -> Operator2 {
        if self.mutate {
            r.add_at(1, 1, 1, 1, &Rational::from_integer(1.into()));
        }
        r
    }
}

/// Objects whose vanishing is checked.
pub(crate) trait Residual {
    /// Location and value of the first nonzero entry.
    fn first_nonzero(&self) -> Option<(String, Rational)>;
}

impl Residual for Operator2 {
    fn first_nonzero(&self) -> Option<(String, Rational)> {
        self.witness()
    }
}

impl Residual for Operator3 {
    fn first_nonzero(&self) -> Option<(String, Rational)> {
        self.witness()
    }
}

impl Residual for Matrix {
    fn first_nonzero(&self) -> Option<(String, Rational)> {
        Matrix::first_nonzero(self).map(|(r, c, v)| (format!("{},{}", r + 1, c + 1), v))
    }
}

impl Residual for Rational {
    fn first_nonzero(&self) -> Option<(String, Rational)> {
        (!num::Zero::is_zero(self)).then(|| ("value".into(), self.clone()))
    }
}

impl Residual for Polynomial {
    fn first_nonzero(&self) -> Option<(String, Rational)> {
        self.witness()
    }
}

impl Residual for PolyBracket {
    fn first_nonzero(&self) -> Option<(String, Rational)> {
        let n = self.dim();
        (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .find_map(|(i, j)| self.get(i, j).witness().map(|(m, v)| (format!("{{x{i},x{j}}} {m}"), v)))
    }
}

impl<K: fmt::Debug, R: Residual> Residual for BTreeMap<K, R> {
    fn first_nonzero(&self) -> Option<(String, Rational)> {
        self.iter()
            .find_map(|(k, r)| r.first_nonzero().map(|(at, v)| (format!("{k:?} {at}"), v)))
    }
}

/// Fails with the first nonzero entry of `r`, labelled by `what`.
pub(crate) fn zero<R: Residual>(what: &str, r: &R) -> Outcome {
    match r.first_nonzero() {
        None => Ok(()),
        Some((at, v)) => Err(Failure::Fail(format!("{what} [{at}] = {}", format_rational(&v)))),
    }
}

/// Fails with `what` unless `ok`.
pub(crate) fn holds(what: &str, ok: bool) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(Failure::Fail(format!("{what} does not hold")))
    }
}

/// Fails unless `a == b`, showing both.
pub(crate) fn equal<T: PartialEq + fmt::Debug>(what: &str, a: &T, b: &T) -> Outcome {
    if a == b {
        Ok(())
    } else {
        Err(Failure::Fail(format!("{what}: {a:?} != {b:?}")))
    }
}

#[cfg(test)]
mod tests;
