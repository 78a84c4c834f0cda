//! Acceptance gate. Runs without the libtest harness so that every criterion
//! prints a PASS/FAIL line; exits non-zero if any criterion fails.

use std::process::{Command, ExitCode, Output};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use reciprocity_core::verify::{
    run_identity, run_suite, second_supplement_failures, Identity, SuiteReport,
};
use reciprocity_core::{
    format_poly, odd_primes_up_to, parse_poly, verify_qr_range, verify_supplement_range, BigInt,
    IntPoly, SuiteConfig,
};

const BIN: &str = env!("CARGO_BIN_EXE_reciprocity");

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

/// Every listed identity ran `expected` checks and none failed.
fn tallies(report: &SuiteReport, expected: &[(Identity, usize)]) -> Check {
    let mut parts = Vec::new();
    for &(id, count) in expected {
        let t = report.tally(id).ok_or(format!("{} missing", id.name()))?;
        ensure(
            t.checked == count && t.failed == 0,
            format!(
                "{}: {}/{} passed, expected {count}",
                id.name(),
                t.passed,
                t.checked
            ),
        )?;
        parts.push(format!("{} {}", id.name(), t.checked));
    }
    Ok(parts.join(", "))
}

fn quadratic_reciprocity() -> Check {
    let primes = odd_primes_up_to(97);
    let expected_pairs = primes.len() * (primes.len() - 1) / 2;
    let reports = verify_qr_range(97, 1).map_err(|e| e.to_string())?;
    ensure(
        reports.len() == expected_pairs,
        format!("{} pairs", reports.len()),
    )?;
    let failed: Vec<_> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| (r.p.get(), r.q.get()))
        .collect();
    ensure(failed.is_empty(), format!("failing pairs {failed:?}"))?;
    Ok(format!("{} primes, {} pairs", primes.len(), reports.len()))
}

fn supplement() -> Check {
    let reports = verify_supplement_range(97, 1).map_err(|e| e.to_string())?;
    let failed: Vec<_> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| r.p.get())
        .collect();
    ensure(failed.is_empty(), format!("failing primes {failed:?}"))?;
    let bad = second_supplement_failures(10_000).map_err(|e| e.to_string())?;
    ensure(bad.is_empty(), format!("(2/p) wrong for {bad:?}"))?;
    Ok(format!(
        "{} primes <= 97, (2/p) for {} primes <= 10000",
        reports.len(),
        odd_primes_up_to(10_000).len()
    ))
}

fn grid_pairs() -> (usize, usize) {
    let all = (1..=40u64).map(|n| n - 1).sum::<u64>() as usize;
    let coprime = (1..=40u64)
        .flat_map(|n| (1..n).map(move |m| (m, n)))
        .filter(|&(m, n)| num_gcd(m, n) == 1)
        .count();
    (all, coprime)
}

fn num_gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn trace_machinery(report: &SuiteReport) -> Check {
    let main = tallies(
        report,
        &[
            (Identity::TraceRoundtrip, 200),
            (Identity::GnSharpTrace, 50),
            (Identity::GnSharpValues, 500),
            (Identity::GnSharpSum, 21),
            (Identity::LucasRelation, 21),
        ],
    )?;
    // round trip again with the reciprocal side of degree at most 8
    let small = SuiteConfig {
        degree_cap: 4,
        ..SuiteConfig::default()
    };
    let (t, _) = run_identity(&small, Identity::TraceRoundtrip, 200).map_err(|e| e.to_string())?;
    ensure(
        t.failed == 0,
        format!("small round trip: {} failed", t.failed),
    )?;
    Ok(format!("{main}, trace_roundtrip (deg <= 8) {}", t.checked))
}

fn congruence() -> Check {
    let (t, w) =
        run_identity(&SuiteConfig::default(), Identity::RecModN, 100).map_err(|e| e.to_string())?;
    ensure(t.failed == 0, format!("rec_mod_n witnesses {w:?}"))?;
    let (c, w) = run_identity(&SuiteConfig::default(), Identity::RecModConcrete, 1)
        .map_err(|e| e.to_string())?;
    ensure(c.failed == 0, format!("concrete mod 7 check {w:?}"))?;
    Ok(format!("rec_mod_n {}, Rec(g_7,g_5) mod 7", t.checked))
}

fn random_poly(rng: &mut ChaCha8Rng) -> IntPoly {
    let degree = rng.random_range(0..=12);
    let coeffs = (0..=degree)
        .map(|_| {
            if rng.random_bool(0.1) {
                // occasionally exceed 64 bits
                BigInt::from(rng.random::<i64>()) * BigInt::from(rng.random::<i64>())
            } else {
                BigInt::from(rng.random_range(-20i64..=20))
            }
        })
        .collect();
    IntPoly::new(coeffs)
}

fn run_bin(args: &[&str]) -> Result<Output, String> {
    Command::new(BIN)
        .args(args)
        .output()
        .map_err(|e| e.to_string())
}

fn parser() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for i in 0..500 {
        let p = random_poly(&mut rng);
        let text = format_poly(&p);
        let back = parse_poly(&text).map_err(|e| format!("#{i} `{text}`: {e}"))?;
        ensure(back == p, format!("#{i}: `{text}` parsed to `{back}`"))?;
    }
    for bad in ["x^-1", "x + + 1", "x^2^3"] {
        let out = run_bin(&["trace", bad])?;
        ensure(
            out.status.code() == Some(2),
            format!("`{bad}` exited with {:?}", out.status.code()),
        )?;
    }
    Ok("500 round trips, 3 grammar errors exit 2".into())
}

fn determinism() -> Check {
    let base = [
        "suite", "--seed", "42", "--trials", "200", "--max", "97", "--format", "json",
    ];
    let mut outputs = Vec::new();
    for jobs in ["1", "1", "4"] {
        let mut args = base.to_vec();
        args.extend(["--jobs", jobs]);
        let out = run_bin(&args)?;
        ensure(
            out.status.success(),
            format!("suite exited with {:?}", out.status.code()),
        )?;
        outputs.push(out.stdout);
    }
    ensure(outputs[0] == outputs[1], "two runs with --jobs 1 differ")?;
    ensure(outputs[0] == outputs[2], "--jobs 1 and --jobs 4 differ")?;
    Ok(format!("3 runs, {} identical bytes", outputs[0].len()))
}

fn main() -> ExitCode {
    let report = run_suite(&SuiteConfig::default());
    let suite = |f: &dyn Fn(&SuiteReport) -> Check| match &report {
        Ok(r) => f(r),
        Err(e) => Err(e.to_string()),
    };
    let (grid, coprime) = grid_pairs();

    let results: Vec<(&str, Check)> = vec![
        ("quadratic reciprocity, p, q <= 97", quadratic_reciprocity()),
        ("supplementary laws", supplement()),
        (
            "Res = Rec^2",
            suite(&|r| tallies(r, &[(Identity::ResRecSquare, 200)])),
        ),
        (
            "resultant identities",
            suite(&|r| {
                tallies(
                    r,
                    &[
                        (Identity::Res1, 200),
                        (Identity::Res2, 200),
                        (Identity::Res3, 200),
                        (Identity::Res4, 200),
                        (Identity::BarnettSylvester, 200),
                    ],
                )
            }),
        ),
        (
            "g-family grid and chains",
            suite(&|r| tallies(r, &[(Identity::GGrid, grid), (Identity::GChain, coprime)])),
        ),
        ("trace machinery", suite(&trace_machinery)),
        ("reciprocant congruence", congruence()),
        ("parser", parser()),
        ("determinism", determinism()),
    ];

    let mut all = true;
    for (i, (name, result)) in results.iter().enumerate() {
        match result {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(why) => {
                all = false;
                println!("FAIL {} {name}: {why}", i + 1);
            }
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
