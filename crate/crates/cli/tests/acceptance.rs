//! Acceptance run: one line per criterion, nonzero exit if any fails.
//!
//! Each suite-backed criterion names the checks it relies on; every name must
//! match at least one recorded check and all matches must pass, so a check
//! that silently disappears from a suite fails the criterion.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use paravec::ga::{gamma5, Algebra};
use paravec::verify::{run_suite, SuiteName, SuiteReport};
use paravec::{Multivector, Signature};

struct Outcome {
    pass: bool,
    detail: String,
    elapsed: Duration,
}

fn within(limit_secs: f64, elapsed: Duration) -> Result<(), String> {
    if elapsed.as_secs_f64() < limit_secs {
        Ok(())
    } else {
        Err(format!("took {:.3}s, limit {limit_secs}s", elapsed.as_secs_f64()))
    }
}

/// Checks in `report` whose names contain any of `required`.
fn select(report: &SuiteReport, required: &[&str]) -> Result<String, String> {
    let mut count = 0;
    let mut worst = 0.0f64;
    for needle in required {
        let matched: Vec<_> = report.checks.iter().filter(|c| c.name.contains(needle)).collect();
        if matched.is_empty() {
            return Err(format!("no `{needle}` check in the {} suite", report.suite));
        }
        if let Some(bad) = matched.iter().find(|c| !c.pass) {
            return Err(format!("{}: residual {:e} vs {:e}", bad.name, bad.residual, bad.tolerance));
        }
        count += matched.len();
        worst = matched.iter().filter(|c| c.tolerance > 0.0).map(|c| c.residual / c.tolerance).fold(worst, f64::max);
    }
    Ok(format!("{count} checks, worst residual/tolerance {worst:.1e}"))
}

fn from_suite(report: &SuiteReport, required: &[&str], limit_secs: Option<f64>) -> Outcome {
    let verdict = select(report, required)
        .and_then(|detail| limit_secs.map_or(Ok(()), |l| within(l, report.elapsed)).map(|()| detail));
    let (pass, detail) = match verdict {
        Ok(detail) => (true, detail),
        Err(detail) => (false, detail),
    };
    Outcome { pass, detail, elapsed: report.elapsed }
}

fn generator_relations() -> Outcome {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for a in [Algebra::Cl30, Algebra::Cl13, Algebra::Cl41, Algebra::Cl24] {
        for &i in a.labels() {
            for &j in a.labels() {
                let (gi, gj) = (a.generator(i), a.generator(j));
                let eta = if i == j { a.square(i).expect("labelled") } else { 0.0 };
                let sum = &(&gi * &gj) + &(&gj * &gi);
                worst = worst.max(sum.dist(&Multivector::scalar(a.signature(), 2.0 * eta)));
            }
        }
    }
    let g5 = gamma5();
    worst = worst.max((&g5 * &g5).dist(&Multivector::scalar(Signature::CL13, -1.0)));
    for &mu in Algebra::Cl13.labels() {
        let g = Algebra::Cl13.generator(mu);
        worst = worst.max((&(&g5 * &g) + &(&g * &g5)).max_norm());
    }
    let elapsed = start.elapsed();
    let timing = within(1.0, elapsed);
    let pass = worst == 0.0 && timing.is_ok();
    let detail = timing.err().unwrap_or_else(|| format!("largest deviation {worst:e}"));
    Outcome { pass, detail, elapsed }
}

fn end_to_end() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_paravec");
    let start = Instant::now();
    let text = Command::new(bin).args(["verify", "--suite", "all", "--seed", "42"]).output();
    let elapsed = start.elapsed();
    let json = |_| Command::new(bin).args(["verify", "--suite", "all", "--seed", "42", "--json"]).output();
    let verdict = (|| -> Result<String, String> {
        let text = text.map_err(|e| e.to_string())?;
        if !text.status.success() {
            return Err(format!("exit status {}", text.status));
        }
        within(60.0, elapsed)?;
        let runs: Vec<_> = (0..2).map(json).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
        if runs[0].stdout != runs[1].stdout {
            return Err("JSON reports differ between runs".into());
        }
        let doc: serde_json::Value = serde_json::from_slice(&runs[0].stdout).map_err(|e| e.to_string())?;
        let suites = doc["suites"].as_array().map_or(0, Vec::len);
        if doc["pass"] != true || suites != SuiteName::ALL.len() {
            return Err(format!("report has pass={} over {suites} suites", doc["pass"]));
        }
        Ok(format!("exit 0, {suites} suites, identical JSON across runs"))
    })();
    let (pass, detail) = match verdict {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Outcome { pass, detail, elapsed }
}

fn main() -> ExitCode {
    let seed = 42;
    let reps = run_suite(SuiteName::Reps, seed, 1.0);
    let outcomes = [
        ("generator relations", generator_relations()),
        ("representation fidelity", from_suite(&reps, &["printed table", "anticommute", "homomorphism"], Some(5.0))),
        ("idempotents", from_suite(&reps, &["idempotents", "conjugator similarity", "matrix units"], None)),
        (
            "isomorphisms",
            from_suite(
                &run_suite(SuiteName::Iso, seed, 1.0),
                &["product preserving", "bijective", "dictionary matches", "block formula", "Sp(2,C)", "SU(2,2)"],
                Some(20.0),
            ),
        ),
        (
            "conformal maps",
            from_suite(
                &run_suite(SuiteName::Conformal, seed, 1.0),
                &["Vahlen conditions", "explicit map", "Klein absolute", "kernel elements"],
                Some(10.0),
            ),
        ),
        (
            "conformal algebra",
            from_suite(
                &run_suite(SuiteName::Lie, seed, 1.0),
                &["commutation table", "structure constants", "substitution symmetry", "twice the grade-2 part"],
                Some(10.0),
            ),
        ),
        (
            "twistors",
            from_suite(
                &run_suite(SuiteName::Twistor, seed, 1.0),
                &["projector", "ideal twistor equals", "Penrose form", "incidence vanishes", "fern identity"],
                Some(10.0),
            ),
        ),
        ("end to end", end_to_end()),
    ];
    let mut all = true;
    for (k, (title, outcome)) in outcomes.iter().enumerate() {
        let status = if outcome.pass { "PASS" } else { "FAIL" };
        println!(
            "criterion {} {status}  {title:<24} {:>8.3}s  {}",
            k + 1,
            outcome.elapsed.as_secs_f64(),
            outcome.detail
        );
        all &= outcome.pass;
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
