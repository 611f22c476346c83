//! Acceptance criteria, one pass/fail line each. Runs without the libtest
//! harness so every line is printed; exits non-zero if any criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use jordan_cli::{run, ComputeRecord};
use jordan_core::jordan::{composition, BlockPair, JordanSolver, Prime};
use jordan_core::oracle::{oracle_run, partition_from_ranks, OracleLimits, RankSequence};
use jordan_core::verify::{self, Execution, DEFAULT_COUNTEREXAMPLE_CAP};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Ranks = Vec<(u64, u64, u64, Vec<usize>)>;
type Criterion = (
    &'static str,
    Option<Duration>,
    Box<dyn FnOnce(&mut Ranks) -> Outcome>,
);

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: true,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: false,
        detail: detail.into(),
    }
}

fn within(outcome: Outcome, elapsed: Duration, limit: Option<Duration>) -> Outcome {
    match limit {
        Some(limit) if outcome.ok && elapsed > limit => fail(format!(
            "{} but took {elapsed:?} > {limit:?}",
            outcome.detail
        )),
        _ => outcome,
    }
}

fn prime(p: u64) -> Prime<u64> {
    Prime::new(p).unwrap()
}

fn golden_vectors() -> Outcome {
    let expected: [&[u64]; 4] = [&[3], &[1, 2], &[1, 1, 1], &[2, 1]];
    for (n, want) in (4..=7u64).zip(expected) {
        let got = composition(3, n, prime(2)).unwrap();
        if got.parts() != want {
            return fail(format!("c(3, {n}, 2) = ({got}), expected {want:?}"));
        }
    }
    pass("c(3, 4..7, 2) = (3), (1,2), (1,1,1), (2,1)")
}

fn power_of_two_family() -> Outcome {
    let mut checked = 0;
    for t in 0..=6u32 {
        let q = 1u64 << t;
        let got = composition(q, q, prime(2)).unwrap();
        if got.parts() != [q] {
            return fail(format!("c({q}, {q}, 2) = ({got})"));
        }
        checked += 1;
        for i in 1..q {
            let got = composition(q, q + i, prime(2)).unwrap();
            if got.parts() != [i, q - i] {
                return fail(format!(
                    "c({q}, {}, 2) = ({got}), expected ({i}+{})",
                    q + i,
                    q - i
                ));
            }
            checked += 1;
        }
    }
    pass(format!("{checked} cases"))
}

fn theorem1() -> Outcome {
    let report = verify::check_theorem1(256, 256);
    if report.passed() {
        pass(format!("{} pairs, 0 mismatches", report.cases_checked))
    } else {
        fail(report.to_string())
    }
}

/// Recursion against the brute-force oracle; keeps every rank sequence for
/// the soundness criterion.
fn oracle_agreement(ranks: &mut Ranks) -> Outcome {
    let solver = JordanSolver::<u64>::new();
    let mut checked = 0;
    let mut mismatches = Vec::new();
    for (p, n_max) in [(2u64, 48u64), (3, 24), (5, 24)] {
        for n in 1..=n_max {
            for m in 1..=n {
                let pair = BlockPair::new(m, n).unwrap();
                let brute = match oracle_run(pair, prime(p), OracleLimits::default()) {
                    Ok(run) => run,
                    Err(e) => return fail(format!("oracle failed on ({m}, {n}, {p}): {e}")),
                };
                let fast = solver.jordan_partition(pair, prime(p)).unwrap();
                if fast != brute.decomposition {
                    mismatches.push(format!(
                        "({m}, {n}, {p}): {fast} vs {}",
                        brute.decomposition
                    ));
                }
                ranks.push((m, n, p, brute.ranks.ranks().to_vec()));
                checked += 1;
            }
        }
    }
    if mismatches.is_empty() {
        pass(format!("{checked} triples, 0 mismatches"))
    } else {
        fail(format!(
            "{} mismatches, first {}",
            mismatches.len(),
            mismatches[0]
        ))
    }
}

fn periodicity() -> Outcome {
    let primes = [prime(2), prime(3)];
    let report = verify::check_periodicity_grid(
        &primes,
        32,
        None,
        DEFAULT_COUNTEREXAMPLE_CAP,
        Execution::Serial,
    );
    if report.passed() {
        pass(format!("{} cases, 0 mismatches", report.cases_checked))
    } else {
        fail(report.to_string())
    }
}

fn reflection() -> Outcome {
    let primes = [prime(2), prime(3)];
    let report =
        verify::check_reflection_grid(&primes, 32, DEFAULT_COUNTEREXAMPLE_CAP, Execution::Serial);
    if report.passed() {
        pass(format!("{} cases, 0 mismatches", report.cases_checked))
    } else {
        fail(report.to_string())
    }
}

fn structural_invariants() -> Outcome {
    let primes: Vec<_> = [2, 3, 5, 7].into_iter().map(prime).collect();
    let report =
        verify::sample_invariants(20_141, 10_000, 1024, &primes, Execution::Serial).unwrap();
    if report.passed() && report.cases_checked >= 10_000 {
        pass(format!(
            "{} random triples, 0 violations",
            report.cases_checked
        ))
    } else {
        fail(report.to_string())
    }
}

fn oracle_soundness(ranks: &[(u64, u64, u64, Vec<usize>)]) -> Outcome {
    if ranks.is_empty() {
        return fail("no oracle runs recorded");
    }
    for (m, n, p, r) in ranks {
        let seq = match RankSequence::new(r.clone()) {
            Ok(seq) => seq,
            Err(e) => return fail(format!("({m}, {n}, {p}): {e}")),
        };
        let strictly_down = r.windows(2).all(|w| w[0] > w[1]) && r.last() == Some(&0);
        let drops: Vec<usize> = r.windows(2).map(|w| w[0] - w[1]).collect();
        let concave = drops.windows(2).all(|w| w[0] >= w[1]);
        let partition = partition_from_ranks(&seq);
        if !strictly_down
            || !concave
            || partition.total() as u64 != m * n
            || partition.parts().len() as u64 != *m
        {
            return fail(format!("({m}, {n}, {p}): ranks {r:?}"));
        }
    }
    let fixture = |p| {
        oracle_run(
            BlockPair::new(2u64, 2).unwrap(),
            prime(p),
            OracleLimits::default(),
        )
        .unwrap()
        .partition
        .parts()
        .to_vec()
    };
    let (even, odd) = (fixture(2), fixture(3));
    if even != [2, 2] || odd != [3, 1] {
        return fail(format!("oracle(2,2,2) = {even:?}, oracle(2,2,3) = {odd:?}"));
    }
    pass(format!(
        "{} rank sequences sound; (2,2,2) -> (2,2), (2,2,3) -> (3,1)",
        ranks.len()
    ))
}

fn cli_contract() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_jordan");
    let code = |args: &[&str]| {
        Command::new(bin)
            .args(args)
            .output()
            .map(|o| o.status.code())
    };
    let checks: [(&[&str], i32); 5] = [
        (&["compute", "--m", "3", "--n", "6", "--p", "2"], 0),
        (
            &[
                "verify", "--suite", "theorem1", "--m-max", "32", "--n-max", "128",
            ],
            0,
        ),
        (
            &[
                "verify",
                "--suite",
                "oracle",
                "--m-max",
                "3",
                "--n-max",
                "3",
                "--max-entries",
                "4",
            ],
            1,
        ),
        (&["compute", "--m", "3", "--n", "6", "--p", "4"], 2),
        (&["verify", "--suite", "unknown"], 2),
    ];
    for (args, want) in checks {
        match code(args) {
            Ok(Some(got)) if got == want => {}
            other => return fail(format!("{args:?}: exit {other:?}, expected {want}")),
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(2014);
    for _ in 0..100 {
        let n = rng.gen_range(1..=1024u64);
        let m = rng.gen_range(1..=n);
        let p = [2u64, 3, 5, 7][rng.gen_range(0..4)];
        let (ms, ns, ps) = (m.to_string(), n.to_string(), p.to_string());
        let call = |format: &str| {
            let mut out = Vec::new();
            let argv = [
                "jordan", "compute", "--m", &ms, "--n", &ns, "--p", &ps, "--format", format,
            ];
            let code = run(argv, &mut out, &mut Vec::new());
            (code, String::from_utf8(out).unwrap())
        };
        let (c1, text) = call("text");
        let (c2, json) = call("json");
        if c1 != 0 || c2 != 0 {
            return fail(format!("compute ({m}, {n}, {p}) exited {c1}/{c2}"));
        }
        let rec: ComputeRecord = match serde_json::from_str(&json) {
            Ok(rec) => rec,
            Err(e) => return fail(format!("bad JSON for ({m}, {n}, {p}): {e}")),
        };
        let line = |key: &str| {
            text.lines()
                .find_map(|l| l.strip_prefix(key))
                .unwrap_or("")
                .to_string()
        };
        let comp: Vec<u64> = line("composition: ")
            .split('+')
            .map(|x| x.parse().unwrap())
            .collect();
        let parts: Vec<u64> = line("partition: ")
            .split(' ')
            .map(|x| x.parse().unwrap())
            .collect();
        if rec.composition != comp || rec.partition != parts {
            return fail(format!("JSON and text disagree for ({m}, {n}, {p})"));
        }
    }
    pass("exit codes 0/1/2; 100 JSON round trips")
}

fn main() -> ExitCode {
    let mut ranks = Vec::new();
    let criteria: Vec<Criterion> = vec![
        (
            "1 golden vectors c(3, n, 2)",
            None,
            Box::new(|_| golden_vectors()),
        ),
        (
            "2 power-of-two family, t <= 6",
            Some(Duration::from_secs(1)),
            Box::new(|_| power_of_two_family()),
        ),
        (
            "3 standardness for p = 2, n <= 256",
            Some(Duration::from_secs(10)),
            Box::new(|_| theorem1()),
        ),
        (
            "4 oracle agreement",
            Some(Duration::from_secs(120)),
            Box::new(oracle_agreement),
        ),
        ("5 periodicity in n", None, Box::new(|_| periodicity())),
        ("6 reflection in n", None, Box::new(|_| reflection())),
        (
            "7 structural invariants",
            Some(Duration::from_secs(30)),
            Box::new(|_| structural_invariants()),
        ),
        (
            "8 oracle soundness",
            None,
            Box::new(|r| oracle_soundness(r)),
        ),
        ("9 CLI contract", None, Box::new(|_| cli_contract())),
    ];
    let mut failed = 0;
    for (name, limit, check) in criteria {
        let start = Instant::now();
        let outcome = check(&mut ranks);
        let elapsed = start.elapsed();
        let outcome = within(outcome, elapsed, limit);
        let tag = if outcome.ok { "PASS" } else { "FAIL" };
        println!("[{tag}] {name}: {} ({:.2?})", outcome.detail, elapsed);
        if !outcome.ok {
            failed += 1;
        }
    }
    if failed == 0 {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
