//! `paravec`: run the invariant suites, print representation tables, apply
//! conformal maps, build twistors and round-trip multivector JSON.

mod show;

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::json;

use paravec::conformal::{act, make_map, ConformalMap, Paravector};
use paravec::ga::{all_grades, random_mv, rng, sample_complex_mv};
use paravec::twistor::{penrose_residual, reference_twistor, WeylSpinor};
use paravec::verify::{run_all, run_suite, SuiteName, SuiteReport};
use paravec::{Multivector, Signature};

/// Exit status for failed checks or undefined evaluations.
const FAILURE: u8 = 1;
/// Exit status for malformed input, matching clap's own usage errors.
const USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "paravec", version, about = "Clifford algebra kernel: verification and inspection")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run invariant suites; exits 0 iff every check passes.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Multiplies every non-exact tolerance.
        #[arg(long, default_value_t = 1.0)]
        tol: f64,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Print the generator images of a representation.
    ShowRep {
        #[arg(value_enum)]
        algebra: show::RepName,
        #[arg(long)]
        json: bool,
    },
    /// Apply a conformal map to a paravector `x0,x1,x2,x3`.
    Apply {
        #[arg(long, value_parser = ConformalMap::NAMES)]
        map: String,
        /// Map parameters: 4 for translation/transvection, 1 for dilation,
        /// 6 for rotation (`b1,b2,b3,r12,r13,r23`), none for inversion.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        param: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Twistor of a point and a Weyl spinor `re1,im1,re2,im2`.
    Twistor {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        xi: String,
    },
    /// Read a multivector as JSON (argument or stdin) and print its canonical form.
    MvIo {
        json: Option<String>,
        /// Emit a seeded random multivector of signature `p,q` instead.
        #[arg(long, conflicts_with = "json")]
        random: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Restrict the random coefficients to real values.
        #[arg(long, requires = "random")]
        real: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Core,
    Reps,
    Iso,
    Conformal,
    Lie,
    Twistor,
}

/// A failure that maps to an exit status.
struct Failure {
    code: u8,
    message: String,
}

fn usage(field: &str, message: impl std::fmt::Display) -> Failure {
    Failure { code: USAGE, message: format!("invalid {field}: {message}") }
}

/// Writes to stdout; a reader that closed the pipe early is not an error.
fn emit(text: &str) {
    let mut stdout = std::io::stdout().lock();
    if let Err(e) = stdout.write_all(text.as_bytes()).and_then(|()| stdout.flush()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: writing output: {e}");
        }
    }
}

fn parse_csv(field: &str, text: &str) -> Result<Vec<f64>, Failure> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|part| part.trim().parse::<f64>().map_err(|_| usage(field, format!("`{}` is not a number", part.trim()))))
        .collect()
}

fn verify(suite: SuiteArg, seed: u64, tol: f64, as_json: bool) -> Result<ExitCode, Failure> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(usage("--tol", format!("scale must be positive, got {tol}")));
    }
    let reports: Vec<SuiteReport> = match suite {
        SuiteArg::All => run_all(seed, tol),
        SuiteArg::Core => vec![run_suite(SuiteName::Core, seed, tol)],
        SuiteArg::Reps => vec![run_suite(SuiteName::Reps, seed, tol)],
        SuiteArg::Iso => vec![run_suite(SuiteName::Iso, seed, tol)],
        SuiteArg::Conformal => vec![run_suite(SuiteName::Conformal, seed, tol)],
        SuiteArg::Lie => vec![run_suite(SuiteName::Lie, seed, tol)],
        SuiteArg::Twistor => vec![run_suite(SuiteName::Twistor, seed, tol)],
    };
    let pass = reports.iter().all(|r| r.pass);
    let mut out = String::new();
    if as_json {
        let doc = json!({ "seed": seed, "tol_scale": tol, "pass": pass, "suites": reports });
        out = serde_json::to_string_pretty(&doc).expect("report serializes") + "\n";
    } else {
        for report in &reports {
            let status = if report.pass { "PASS" } else { "FAIL" };
            let _ = writeln!(
                out,
                "{:<10} {status}  {:>3} checks  {:>8.3}s",
                report.suite,
                report.checks.len(),
                report.elapsed.as_secs_f64()
            );
            for check in report.failures() {
                let _ = writeln!(
                    out,
                    "    failed: {} (residual {:e}, tolerance {:e})",
                    check.name, check.residual, check.tolerance
                );
            }
        }
    }
    emit(&out);
    Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(FAILURE) })
}

fn apply(map: &str, param: &str, x: &str) -> Result<ExitCode, Failure> {
    let param = parse_csv("--param", param)?;
    let x = Paravector::from_slice(&parse_csv("--x", x)?).map_err(|e| usage("--x", e))?;
    let map = ConformalMap::parse(map, &param).map_err(|e| usage("--param", e))?;
    let g = make_map(&map).map_err(|e| usage("--param", e))?;
    let (image, delta) = act(&g, &x).map_err(|e| Failure { code: FAILURE, message: e.to_string() })?;
    let doc = json!({ "x": x.components(), "x_prime": image.components(), "delta": delta });
    emit(&format!("{doc}\n"));
    Ok(ExitCode::SUCCESS)
}

fn pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

fn twistor(x: &str, xi: &str) -> Result<ExitCode, Failure> {
    let x = Paravector::from_slice(&parse_csv("--x", x)?).map_err(|e| usage("--x", e))?;
    let xi = WeylSpinor::from_slice(&parse_csv("--xi", xi)?).map_err(|e| usage("--xi", e))?;
    let t = reference_twistor(&x, &xi);
    let doc = json!({
        "x": x.components(),
        "xi": xi.xi.map(pair),
        "components": t.components.map(pair),
        "penrose_residual": penrose_residual(&t),
    });
    emit(&format!("{doc}\n"));
    Ok(ExitCode::SUCCESS)
}

fn mv_io(input: Option<String>, random: Option<String>, seed: u64, real: bool) -> Result<ExitCode, Failure> {
    let mv = match random {
        Some(sig) => {
            let pq = parse_csv("--random", &sig)?;
            let &[p, q] = pq.as_slice() else {
                return Err(usage("--random", "expected `p,q`"));
            };
            if p < 0.0 || q < 0.0 || p.fract() != 0.0 || q.fract() != 0.0 {
                return Err(usage("--random", "p and q must be non-negative integers"));
            }
            let sig = Signature::new(p as usize, q as usize).map_err(|e| usage("--random", e))?;
            if real {
                random_mv(seed, sig, &all_grades(sig))
            } else {
                sample_complex_mv(&mut rng(seed), sig, &all_grades(sig))
            }
        }
        None => {
            let text = match input {
                Some(text) => text,
                None => {
                    let mut buf = String::new();
                    std::io::stdin().read_to_string(&mut buf).map_err(|e| usage("stdin", e))?;
                    buf
                }
            };
            Multivector::from_json(text.trim()).map_err(|e| usage("input", e))?
        }
    };
    emit(&(mv.to_json() + "\n"));
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Verify { suite, seed, tol, json } => verify(suite, seed, tol, json),
        Command::ShowRep { algebra, json } => {
            emit(&show::render(algebra, json));
            Ok(ExitCode::SUCCESS)
        }
        Command::Apply { map, param, x } => apply(&map, &param, &x),
        Command::Twistor { x, xi } => twistor(&x, &xi),
        Command::MvIo { json, random, seed, real } => mv_io(json, random, seed, real),
    };
    outcome.unwrap_or_else(|failure| {
        eprintln!("error: {}", failure.message);
        ExitCode::from(failure.code)
    })
}
