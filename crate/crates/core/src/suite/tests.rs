use super::*;
use num::Signed;

fn cfg(suite: Suite, n: usize, draws: usize) -> SuiteConfig {
    SuiteConfig {
        suite,
        n,
        seed: 7,
        draws,
        mutation: None,
    }
}

fn assert_passes(report: &SuiteReport) {
    let bad: Vec<_> = report.failures();
    assert!(bad.is_empty(), "n={} {:#?}", report.n, bad);
}

#[test]
fn every_suite_passes_small() {
    for n in 2..=3 {
        for suite in Suite::MODULES {
            assert_passes(&run_suite(&cfg(suite, n, 2)).unwrap());
        }
    }
}

#[test]
fn names_are_unique_and_prefixed() {
    let all = list_checks(Suite::All);
    let mut names: Vec<_> = all.iter().map(|(n, _)| *n).collect();
    names.dedup();
    assert_eq!(names.len(), all.len());
    for suite in Suite::MODULES {
        for (name, _) in list_checks(suite) {
            assert!(name.starts_with(&format!("{}.", suite.name())), "{name}");
        }
        assert!(list_checks(suite).iter().any(|(n, _)| *n == suite.mutation_target()));
    }
}

#[test]
fn mutation_flips_exactly_one_check() {
    for suite in Suite::MODULES {
        let mut c = cfg(suite, 2, 1);
        c.mutation = Some(Mutation::OneEntry);
        let report = run_suite(&c).unwrap();
        let failures = report.failures();
        assert_eq!(failures.len(), 1, "{suite}: {failures:#?}");
        assert_eq!(failures[0].name, suite.mutation_target());
        assert!(failures[0].residual_witness.is_some());
    }
}

#[test]
fn reports_are_deterministic_apart_from_wall_time() {
    let c = cfg(Suite::Cg, 3, 3);
    let mut a = run_suite(&c).unwrap();
    let mut b = run_suite(&c).unwrap();
    a.wall_time_ms = 0;
    b.wall_time_ms = 0;
    assert_eq!(a.to_json(), b.to_json());
    let mut other = c.clone();
    other.seed = 8;
    let mut d = run_suite(&other).unwrap();
    d.wall_time_ms = 0;
    assert_ne!(a.to_json(), d.to_json());
}

#[test]
fn checks_are_sorted_and_record_draws() {
    let report = run_suite(&cfg(Suite::Rime, 2, 3)).unwrap();
    let names: Vec<_> = report.checks.iter().map(|c| c.name.clone()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    let ybe = report.checks.iter().find(|c| c.name == "rime.strict.ybe").unwrap();
    assert_eq!(ybe.parameter_draws.len(), 3);
}

#[test]
fn rejects_bad_configuration() {
    assert!(run_suite(&cfg(Suite::Rime, 1, 1)).is_err());
    assert!(run_suite(&cfg(Suite::Rime, 7, 1)).is_err());
    assert!(run_suite(&cfg(Suite::Rime, 2, 0)).is_err());
    assert!("nope".parse::<Suite>().is_err());
    assert_eq!("qalg".parse::<Suite>().unwrap(), Suite::Qalg);
}

#[test]
fn status_serializes_in_kebab_case() {
    let s = serde_json::to_string(&Status::SkippedNeedsExtension).unwrap();
    assert_eq!(s, "\"skipped-needs-extension\"");
}

#[test]
fn sampler_is_seeded() {
    let mut a = Sampler::new(3);
    let mut b = Sampler::new(3);
    assert_eq!(a.distinct(5), b.distinct(5));
    let x = a.rational();
    assert!(!num::Zero::is_zero(&x));
    assert!(x.numer().clone().abs() <= 12.into());
    assert!(*x.denom() <= 8.into());
}

#[test]
fn single_check_matches_the_suite_run() {
    let c = cfg(Suite::Cg, 2, 2);
    let report = run_suite(&c).unwrap();
    let one = run_check("cg.sectype", &c).unwrap();
    assert_eq!(report.checks.iter().find(|x| x.name == "cg.sectype"), Some(&one));
    assert!(run_check("rime.strict.ybe", &c).is_err());
}
