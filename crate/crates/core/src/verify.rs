//! Sweeps that cross-check the recursion against the oracle and against the
//! known structural theorems.
//!
//! Every suite visits its inputs in `(m, n, p)` order and keeps at most
//! `counterexample_cap` failures, so serial and parallel runs of the same
//! sweep produce identical reports.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::VerifyError;
use crate::jordan::{
    is_standard, standard_predicate_p2, BlockPair, Composition, JordanSolver, Prime,
};
use crate::oracle::{oracle_jordan_partition, OracleLimits};

pub const DEFAULT_COUNTEREXAMPLE_CAP: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Oracle,
    Theorem1,
    Periodicity,
    Reflection,
    Corollary1,
    Invariants,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Oracle,
        Suite::Theorem1,
        Suite::Periodicity,
        Suite::Reflection,
        Suite::Corollary1,
        Suite::Invariants,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Oracle => "oracle",
            Suite::Theorem1 => "theorem1",
            Suite::Periodicity => "periodicity",
            Suite::Reflection => "reflection",
            Suite::Corollary1 => "corollary1",
            Suite::Invariants => "invariants",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| VerifyError::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    #[default]
    Serial,
    Parallel,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepSpec {
    pub m_max: u64,
    pub n_max: u64,
    pub primes: Vec<Prime<u64>>,
    pub suites: Vec<Suite>,
    pub counterexample_cap: usize,
    pub oracle_limits: OracleLimits,
    pub execution: Execution,
}

impl SweepSpec {
    pub fn new(
        m_max: u64,
        n_max: u64,
        primes: Vec<Prime<u64>>,
        suites: Vec<Suite>,
    ) -> Result<Self, VerifyError> {
        if m_max == 0 || m_max > n_max {
            return Err(VerifyError::InvalidSpec(format!(
                "need 1 <= m_max <= n_max (got {m_max}, {n_max})"
            )));
        }
        if suites.is_empty() {
            return Err(VerifyError::InvalidSpec("no suites selected".into()));
        }
        if primes.is_empty() {
            return Err(VerifyError::InvalidSpec("no primes selected".into()));
        }
        Ok(SweepSpec {
            m_max,
            n_max,
            primes,
            suites,
            counterexample_cap: DEFAULT_COUNTEREXAMPLE_CAP,
            oracle_limits: OracleLimits::default(),
            execution: Execution::Serial,
        })
    }

    pub fn with_execution(mut self, execution: Execution) -> Self {
        self.execution = execution;
        self
    }

    pub fn with_counterexample_cap(mut self, cap: usize) -> Self {
        self.counterexample_cap = cap;
        self
    }

    pub fn with_oracle_limits(mut self, limits: OracleLimits) -> Self {
        self.oracle_limits = limits;
        self
    }

    /// All `(m, n, p)` with `m <= min(m_max, n)` and `n <= n_max`, sorted.
    fn triples(&self) -> Vec<(u64, u64, u64, u64)> {
        let mut out = Vec::new();
        for m in 1..=self.m_max {
            for n in m..=self.n_max {
                for p in &self.primes {
                    out.push((m, n, p.get(), 0));
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub m: u64,
    pub n: u64,
    pub p: u64,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub cases_checked: u64,
    pub failures: Vec<Failure>,
    #[serde(rename = "elapsed_ms", serialize_with = "millis")]
    pub elapsed: Duration,
}

fn millis<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_u64(d.as_millis() as u64)
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Combines reports of one suite run over several inputs, keeping the
    /// `(m, n, p)` order of failures and at most `cap` of them.
    pub fn merged(suite: &str, reports: Vec<VerifyReport>, cap: usize) -> VerifyReport {
        let mut failures: Vec<Failure> = reports
            .iter()
            .flat_map(|r| r.failures.iter().cloned())
            .collect();
        failures.sort_by_key(|f| (f.m, f.n, f.p));
        failures.truncate(cap);
        VerifyReport {
            suite: suite.to_string(),
            cases_checked: reports.iter().map(|r| r.cases_checked).sum(),
            failures,
            elapsed: reports.iter().map(|r| r.elapsed).sum(),
        }
    }

    /// Equal up to timing.
    pub fn same_outcome(&self, other: &VerifyReport) -> bool {
        self.suite == other.suite
            && self.cases_checked == other.cases_checked
            && self.failures == other.failures
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {} cases, {} failures, {} ms",
            self.suite,
            self.cases_checked,
            self.failures.len(),
            self.elapsed.as_millis()
        )?;
        for fail in &self.failures {
            writeln!(
                f,
                "  m={} n={} p={}: expected {}, got {}",
                fail.m, fail.n, fail.p, fail.expected, fail.actual
            )?;
        }
        Ok(())
    }
}

type Mismatch = Option<(String, String)>;

/// `(m, n, p, period)`; the period is 0 for suites that do not use one.
type Case = (u64, u64, u64, u64);

fn sweep<F>(
    suite: &str,
    mut cases: Vec<Case>,
    cap: usize,
    execution: Execution,
    check: F,
) -> VerifyReport
where
    F: Fn(u64, u64, u64, u64) -> Mismatch + Sync,
{
    let start = Instant::now();
    cases.sort_unstable();
    let run = |&(m, n, p, extra): &Case| {
        check(m, n, p, extra).map(|(expected, actual)| Failure {
            m,
            n,
            p,
            expected,
            actual,
        })
    };
    let found: Vec<Failure> = match execution {
        Execution::Serial => cases.iter().filter_map(run).collect(),
        Execution::Parallel => cases.par_iter().filter_map(run).collect(),
    };
    VerifyReport {
        suite: suite.to_string(),
        cases_checked: cases.len() as u64,
        failures: found.into_iter().take(cap).collect(),
        elapsed: start.elapsed(),
    }
}

fn prime(p: u64) -> Prime<u64> {
    Prime::new(p).expect("sweep primes are validated")
}

fn err_text(e: impl fmt::Display) -> String {
    format!("error: {e}")
}

/// Recursion against brute-force linear algebra on every triple in range.
pub fn check_oracle_agreement(spec: &SweepSpec) -> VerifyReport {
    let solver = JordanSolver::<u64>::new();
    let cases = spec.triples();
    sweep(
        "oracle",
        cases,
        spec.counterexample_cap,
        spec.execution,
        |m, n, p, _| {
            let pair = BlockPair::new(m, n).ok()?;
            let expected = match oracle_jordan_partition(pair, prime(p), spec.oracle_limits) {
                Ok(dec) => dec,
                Err(e) => return Some((err_text(e), String::new())),
            };
            match solver.jordan_partition(pair, prime(p)) {
                Ok(actual) if actual == expected => None,
                Ok(actual) => Some((expected.to_string(), actual.to_string())),
                Err(e) => Some((expected.to_string(), err_text(e))),
            }
        },
    )
}

/// Standardness of `lambda(m, n, 2)` against the closed-form test.
pub fn check_theorem1(m_max: u64, n_max: u64) -> VerifyReport {
    check_theorem1_with(m_max, n_max, DEFAULT_COUNTEREXAMPLE_CAP, Execution::Serial)
}

pub fn check_theorem1_with(
    m_max: u64,
    n_max: u64,
    cap: usize,
    execution: Execution,
) -> VerifyReport {
    let solver = JordanSolver::<u64>::new();
    let cases: Vec<_> = (1..=m_max)
        .flat_map(|m| (m..=n_max).map(move |n| (m, n, 2, 0)))
        .collect();
    sweep("theorem1", cases, cap, execution, |m, n, p, _| {
        let pair = BlockPair::new(m, n).ok()?;
        let predicted = standard_predicate_p2(pair);
        match solver.jordan_partition(pair, prime(p)) {
            Ok(dec) => {
                let standard = is_standard(&dec, m, n);
                (standard != predicted).then(|| {
                    (
                        format!("standard={predicted}"),
                        format!("standard={standard} ({dec})"),
                    )
                })
            }
            Err(e) => Some((format!("standard={predicted}"), err_text(e))),
        }
    })
}

fn period(p: u64, t: u32, m: u64) -> Result<u64, VerifyError> {
    let q = p
        .checked_pow(t)
        .ok_or(VerifyError::InvalidSpec(format!("{p}^{t} overflows")))?;
    if m == 0 || m > q {
        return Err(VerifyError::Hypothesis { m, p, t });
    }
    Ok(q)
}

fn show(c: &Result<Composition<u64>, crate::JordanError>) -> String {
    match c {
        Ok(c) => format!("({c})"),
        Err(e) => err_text(e),
    }
}

/// `c(m, n, p) = c(m, n + p^t, p)` for `m <= n <= n_max`. Requires `m <= p^t`.
pub fn check_periodicity(
    m: u64,
    t: u32,
    p: Prime<u64>,
    n_max: u64,
) -> Result<VerifyReport, VerifyError> {
    let q = period(p.get(), t, m)?;
    let solver = JordanSolver::<u64>::new();
    let cases = (m..=n_max).map(|n| (m, n, p.get(), q)).collect();
    Ok(sweep(
        "periodicity",
        cases,
        DEFAULT_COUNTEREXAMPLE_CAP,
        Execution::Serial,
        |m, n, p, q| periodicity_mismatch(&solver, m, n, q, p),
    ))
}

fn periodicity_mismatch(solver: &JordanSolver<u64>, m: u64, n: u64, q: u64, p: u64) -> Mismatch {
    let base = solver.composition(m, n, prime(p));
    let shifted = solver.composition(m, n + q, prime(p));
    match (&base, &shifted) {
        (Ok(a), Ok(b)) if a == b => None,
        _ => Some((show(&base), format!("{} at n + {q}", show(&shifted)))),
    }
}

/// Reflection offsets are recorded in the `n` column as `p^t + i`.
fn reflection_mismatch(solver: &JordanSolver<u64>, m: u64, q: u64, i: u64, p: u64) -> Mismatch {
    let left = solver.composition(m, q + i, prime(p));
    let right = solver
        .composition(m, 2 * q - i, prime(p))
        .map(|c| c.reversed());
    match (&left, &right) {
        (Ok(a), Ok(b)) if a == b => None,
        _ => Some((
            show(&left),
            format!("{} = r(c(m, {}))", show(&right), 2 * q - i),
        )),
    }
}

/// `c(m, p^t + i, p) = r(c(m, 2p^t - i, p))` for every `i` in `[0, p^t]`.
pub fn check_reflection(m: u64, t: u32, p: Prime<u64>) -> Result<VerifyReport, VerifyError> {
    let q = period(p.get(), t, m)?;
    let solver = JordanSolver::<u64>::new();
    let cases = (0..=q).map(|i| (m, q + i, p.get(), q)).collect();
    Ok(sweep(
        "reflection",
        cases,
        DEFAULT_COUNTEREXAMPLE_CAP,
        Execution::Serial,
        |m, n, p, q| reflection_mismatch(&solver, m, q, n - q, p),
    ))
}

/// Powers `p^t <= max_period` with `t >= 0`.
fn periods(p: u64, max_period: u64) -> Vec<u64> {
    std::iter::successors(Some(1u64), |q| q.checked_mul(p))
        .take_while(|&q| q <= max_period)
        .collect()
}

/// Periodicity over every `p` in `primes`, every `p^t <= max_period`, every
/// `m <= p^t` and every `m <= n <= n_max`, where `n_max` defaults to `4 p^t`.
pub fn check_periodicity_grid(
    primes: &[Prime<u64>],
    max_period: u64,
    n_max: Option<u64>,
    cap: usize,
    execution: Execution,
) -> VerifyReport {
    let mut cases = Vec::new();
    for p in primes {
        for q in periods(p.get(), max_period) {
            let top = n_max.unwrap_or(4 * q);
            for m in 1..=q {
                cases.extend((m..=top).map(|n| (m, n, p.get(), q)));
            }
        }
    }
    let solver = JordanSolver::<u64>::new();
    sweep("periodicity", cases, cap, execution, |m, n, p, q| {
        periodicity_mismatch(&solver, m, n, q, p)
    })
}

/// Reflection over the same grid as [`check_periodicity_grid`], all
/// `i` in `[0, p^t]`.
pub fn check_reflection_grid(
    primes: &[Prime<u64>],
    max_period: u64,
    cap: usize,
    execution: Execution,
) -> VerifyReport {
    let mut cases = Vec::new();
    for p in primes {
        for q in periods(p.get(), max_period) {
            for m in 1..=q {
                for i in 0..=q {
                    cases.push((m, q + i, p.get(), q));
                }
            }
        }
    }
    let solver = JordanSolver::<u64>::new();
    sweep("reflection", cases, cap, execution, |m, n, p, q| {
        reflection_mismatch(&solver, m, q, n - q, p)
    })
}

/// Expanded-partition standardness against the all-ones composition test.
pub fn check_corollary1(spec: &SweepSpec) -> VerifyReport {
    let solver = JordanSolver::<u64>::new();
    let cases = spec.triples();
    sweep(
        "corollary1",
        cases,
        spec.counterexample_cap,
        spec.execution,
        |m, n, p, _| {
            let pair = BlockPair::new(m, n).ok()?;
            let dec = match solver.jordan_partition(pair, prime(p)) {
                Ok(dec) => dec,
                Err(e) => return Some((String::new(), err_text(e))),
            };
            let by_parts = is_standard(&dec, m, n);
            let by_comp = dec.composition().is_all_ones();
            (by_parts != by_comp).then(|| {
                (
                    format!("all-ones={by_comp}"),
                    format!("standard={by_parts}"),
                )
            })
        },
    )
}

/// First violated structural invariant of `lambda(m, n, p)`, if any.
fn structural_violation(solver: &JordanSolver<u64>, m: u64, n: u64, p: u64) -> Mismatch {
    let fail = |what: &str, detail: String| Some((what.to_string(), detail));
    let comp = match solver.composition(m, n, prime(p)) {
        Ok(c) => c,
        Err(e) => return fail("composition", err_text(e)),
    };
    let parts = comp.parts();
    if parts.contains(&0) || parts.iter().sum::<u64>() != m {
        return fail("positive parts summing to m", format!("({comp})"));
    }
    let dec = match solver.jordan_partition(BlockPair::new(m, n).ok()?, prime(p)) {
        Ok(dec) => dec,
        Err(e) => return fail("decomposition", err_text(e)),
    };
    let pairs = dec.pairs();
    if pairs
        .iter()
        .map(|&(mult, _)| mult)
        .ne(parts.iter().copied())
    {
        return fail("multiplicities equal the composition", dec.to_string());
    }
    if pairs.windows(2).any(|w| w[0].1 <= w[1].1) || pairs.last().is_some_and(|&(_, l)| l == 0) {
        return fail("strictly decreasing positive parts", dec.to_string());
    }
    if pairs.iter().map(|&(mult, l)| mult * l).sum::<u64>() != m * n {
        return fail("mass m * n", dec.to_string());
    }
    let largest = pairs[0].1;
    if largest < n || largest > m + n - 1 {
        return fail("n <= largest <= m + n - 1", dec.to_string());
    }
    let mut before = 0u64;
    for &(mult, part) in pairs {
        let after = m - before - mult;
        let by_suffix = n + after - before;
        let by_prefix = m + n - 2 * before - mult;
        if part != by_suffix || part != by_prefix {
            return fail(
                "both block-size formulas",
                format!("{part} vs {by_suffix} / {by_prefix}"),
            );
        }
        before += mult;
    }
    if is_standard(&dec, m, n) != comp.is_all_ones() {
        return fail("standard iff all-ones composition", dec.to_string());
    }
    None
}

/// Structural invariants on every triple in range.
pub fn check_invariants(spec: &SweepSpec) -> VerifyReport {
    let solver = JordanSolver::<u64>::new();
    let cases = spec.triples();
    sweep(
        "invariants",
        cases,
        spec.counterexample_cap,
        spec.execution,
        |m, n, p, _| structural_violation(&solver, m, n, p),
    )
}

/// Structural invariants on `samples` seeded random triples with
/// `1 <= m <= n <= n_max`.
pub fn sample_invariants(
    seed: u64,
    samples: usize,
    n_max: u64,
    primes: &[Prime<u64>],
    execution: Execution,
) -> Result<VerifyReport, VerifyError> {
    if n_max == 0 || primes.is_empty() {
        return Err(VerifyError::InvalidSpec(
            "need n_max >= 1 and at least one prime".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cases = (0..samples)
        .map(|_| {
            let n = rng.gen_range(1..=n_max);
            let m = rng.gen_range(1..=n);
            let p = primes[rng.gen_range(0..primes.len())].get();
            (m, n, p, 0)
        })
        .collect();
    let solver = JordanSolver::<u64>::new();
    Ok(sweep(
        "invariants",
        cases,
        DEFAULT_COUNTEREXAMPLE_CAP,
        execution,
        |m, n, p, _| structural_violation(&solver, m, n, p),
    ))
}

/// Runs every suite named in `spec`. Periodicity and reflection use the grid
/// with `p^t <= m_max`; periodicity checks `n` up to `n_max`.
pub fn run(spec: &SweepSpec) -> Vec<VerifyReport> {
    spec.suites
        .iter()
        .map(|suite| match suite {
            Suite::Oracle => check_oracle_agreement(spec),
            Suite::Theorem1 => check_theorem1_with(
                spec.m_max,
                spec.n_max,
                spec.counterexample_cap,
                spec.execution,
            ),
            Suite::Periodicity => check_periodicity_grid(
                &spec.primes,
                spec.m_max,
                Some(spec.n_max),
                spec.counterexample_cap,
                spec.execution,
            ),
            Suite::Reflection => check_reflection_grid(
                &spec.primes,
                spec.m_max,
                spec.counterexample_cap,
                spec.execution,
            ),
            Suite::Corollary1 => check_corollary1(spec),
            Suite::Invariants => check_invariants(spec),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn primes(ps: &[u64]) -> Vec<Prime<u64>> {
        ps.iter().map(|&p| Prime::new(p).unwrap()).collect()
    }

    fn spec(m_max: u64, n_max: u64, ps: &[u64], suite: Suite) -> SweepSpec {
        SweepSpec::new(m_max, n_max, primes(ps), vec![suite]).unwrap()
    }

    #[test]
    fn oracle_sweeps() {
        let report = check_oracle_agreement(&spec(16, 16, &[2], Suite::Oracle));
        assert_eq!(report.cases_checked, 136);
        assert!(report.passed(), "{report}");

        let report = check_oracle_agreement(&spec(1, 1, &[2], Suite::Oracle));
        assert_eq!(report.cases_checked, 1);
        assert!(report.passed());

        assert!(check_oracle_agreement(&spec(8, 8, &[3], Suite::Oracle)).passed());
    }

    #[test]
    fn oracle_size_bound_is_a_failure() {
        let sweep =
            spec(3, 3, &[2], Suite::Oracle).with_oracle_limits(OracleLimits { max_dimension: 4 });
        let report = check_oracle_agreement(&sweep);
        assert_eq!(report.cases_checked, 6);
        // (1,1) (1,2) (1,3) (2,2) fit, (2,3) and (3,3) do not
        assert_eq!(report.failures.len(), 2);
        assert!(report.failures[0].expected.starts_with("error:"));
    }

    #[test]
    fn theorem1_sweep() {
        let report = check_theorem1(64, 256);
        assert_eq!(
            report.cases_checked,
            (1..=64u64).map(|m| 257 - m).sum::<u64>()
        );
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn periodicity_examples() {
        let two = Prime::new(2).unwrap();
        assert!(check_periodicity(3, 2, two, 64).unwrap().passed());
        for t in 0..6 {
            assert!(check_periodicity(1, t, two, 40).unwrap().passed());
        }
        let report = check_periodicity(4, 2, two, 30).unwrap();
        assert_eq!(report.cases_checked, 27);
        assert!(report.passed());
        assert_eq!(
            check_periodicity(5, 2, two, 30).unwrap_err(),
            VerifyError::Hypothesis { m: 5, p: 2, t: 2 }
        );
    }

    #[test]
    fn reflection_examples() {
        let two = Prime::new(2).unwrap();
        let report = check_reflection(3, 2, two).unwrap();
        assert_eq!(report.cases_checked, 5);
        assert!(report.passed());
        assert!(check_reflection(2, 1, two).unwrap().passed());
        assert!(check_reflection(3, 1, two).is_err());
        let three = Prime::new(3).unwrap();
        for m in 1..=27 {
            assert!(check_reflection(m, 3, three).unwrap().passed());
        }
    }

    #[test]
    fn corollary1_examples() {
        let report = check_corollary1(&spec(12, 40, &[2, 3, 5], Suite::Corollary1));
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn grids() {
        let ps = primes(&[2, 3]);
        let per = check_periodicity_grid(&ps, 9, None, 100, Execution::Serial);
        assert!(per.passed(), "{per}");
        let refl = check_reflection_grid(&ps, 9, 100, Execution::Serial);
        assert!(refl.passed(), "{refl}");
        // p = 2: periods 1, 2, 4, 8; p = 3: 1, 3, 9
        let expected: u64 = [1u64, 2, 4, 8, 1, 3, 9].iter().map(|&q| q * (q + 1)).sum();
        assert_eq!(refl.cases_checked, expected);
    }

    #[test]
    fn parallel_matches_serial() {
        let serial = spec(10, 30, &[2, 3, 5, 7], Suite::Invariants);
        let parallel = serial.clone().with_execution(Execution::Parallel);
        for (a, b) in run(&serial).iter().zip(run(&parallel).iter()) {
            assert!(a.same_outcome(b));
        }
        let all = SweepSpec::new(6, 12, primes(&[2, 3]), Suite::ALL.to_vec()).unwrap();
        let first = run(&all);
        let second = run(&all.clone().with_execution(Execution::Parallel));
        assert_eq!(first.len(), 6);
        for (a, b) in first.iter().zip(&second) {
            assert!(a.passed(), "{a}");
            assert!(a.same_outcome(b));
        }
    }

    #[test]
    fn failures_are_capped_and_ordered() {
        let cases = vec![(2, 3, 2, 0), (1, 1, 2, 0), (1, 2, 2, 0)];
        let report = sweep("fake", cases, 2, Execution::Parallel, |m, n, _, _| {
            Some((format!("{m}"), format!("{n}")))
        });
        assert_eq!(report.cases_checked, 3);
        assert_eq!(report.failures.len(), 2);
        assert_eq!((report.failures[0].m, report.failures[0].n), (1, 1));
        assert_eq!((report.failures[1].m, report.failures[1].n), (1, 2));
        assert!(!report.passed());
    }

    #[test]
    fn sampled_invariants_are_seeded() {
        let ps = primes(&[2, 3, 5, 7]);
        let a = sample_invariants(7, 500, 1024, &ps, Execution::Serial).unwrap();
        let b = sample_invariants(7, 500, 1024, &ps, Execution::Parallel).unwrap();
        assert!(a.passed(), "{a}");
        assert!(a.same_outcome(&b));
        assert!(sample_invariants(7, 5, 0, &ps, Execution::Serial).is_err());
    }

    #[test]
    fn spec_validation() {
        assert!(SweepSpec::new(5, 4, primes(&[2]), vec![Suite::Oracle]).is_err());
        assert!(SweepSpec::new(0, 4, primes(&[2]), vec![Suite::Oracle]).is_err());
        assert!(SweepSpec::new(2, 4, primes(&[2]), vec![]).is_err());
        assert!(SweepSpec::new(2, 4, vec![], vec![Suite::Oracle]).is_err());
        assert_eq!("theorem1".parse::<Suite>().unwrap(), Suite::Theorem1);
        assert!(matches!(
            "bogus".parse::<Suite>(),
            Err(VerifyError::UnknownSuite(_))
        ));
    }

    #[test]
    fn report_json_schema() {
        let report = VerifyReport {
            suite: "oracle".into(),
            cases_checked: 3,
            failures: vec![Failure {
                m: 2,
                n: 2,
                p: 2,
                expected: "2*2".into(),
                actual: "1*3 1*1".into(),
            }],
            elapsed: Duration::from_millis(1500),
        };
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(
            json,
            serde_json::json!({
                "suite": "oracle",
                "cases_checked": 3,
                "failures": [{"m": 2, "n": 2, "p": 2, "expected": "2*2", "actual": "1*3 1*1"}],
                "elapsed_ms": 1500
            })
        );
    }
}
