//! Seeded invariant suites shared by the CLI and the acceptance tests.
//!
//! Every check records a residual against a tolerance. Tolerances are the
//! module defaults multiplied by a single scale factor; checks stated as
//! exact carry tolerance 0 and are unaffected by the scale.

mod algebra;
mod conformal;
mod iso;
mod lie;
pub mod printed;
mod reps;
mod twistor;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ga::rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SuiteName {
    Core,
    Reps,
    Iso,
    Conformal,
    Lie,
    Twistor,
}

impl SuiteName {
    pub const ALL: [SuiteName; 6] =
        [SuiteName::Core, SuiteName::Reps, SuiteName::Iso, SuiteName::Conformal, SuiteName::Lie, SuiteName::Twistor];

    pub fn name(self) -> &'static str {
        match self {
            SuiteName::Core => "core",
            SuiteName::Reps => "reps",
            SuiteName::Iso => "iso",
            SuiteName::Conformal => "conformal",
            SuiteName::Lie => "lie",
            SuiteName::Twistor => "twistor",
        }
    }

    fn salt(self) -> u64 {
        SuiteName::ALL.iter().position(|&s| s == self).expect("listed") as u64 + 1
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for SuiteName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SuiteName::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite `{s}`")))
    }
}

/// Direction of the comparison. Negative controls must exceed their threshold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Bound {
    #[serde(rename = "<=")]
    AtMost,
    #[serde(rename = ">=")]
    AtLeast,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    /// Non-finite when the computation itself failed; serialized as `null`.
    pub residual: f64,
    pub tolerance: f64,
    pub bound: Bound,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: SuiteName,
    pub pass: bool,
    pub checks: Vec<Check>,
    /// Wall time, kept out of the JSON so reports are reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

/// Collects checks for one suite.
pub(crate) struct Recorder {
    scale: f64,
    checks: Vec<Check>,
}

impl Recorder {
    fn new(scale: f64) -> Self {
        Recorder { scale, checks: Vec::new() }
    }

    fn push(&mut self, name: String, residual: f64, tolerance: f64, bound: Bound) {
        let pass = match bound {
            Bound::AtMost => residual <= tolerance,
            Bound::AtLeast => residual >= tolerance,
        };
        self.checks.push(Check { name, residual, tolerance, bound, pass });
    }

    /// `residual ≤ tolerance · scale`.
    pub(crate) fn at_most(&mut self, name: impl Into<String>, residual: f64, tolerance: f64) {
        self.push(name.into(), residual, tolerance * self.scale, Bound::AtMost);
    }

    /// `residual = 0`, independent of the scale.
    pub(crate) fn exact(&mut self, name: impl Into<String>, residual: f64) {
        self.push(name.into(), residual, 0.0, Bound::AtMost);
    }

    /// Negative control: `residual ≥ threshold`.
    pub(crate) fn at_least(&mut self, name: impl Into<String>, residual: f64, threshold: f64) {
        self.push(name.into(), residual, threshold, Bound::AtLeast);
    }

    /// As [`Recorder::at_most`]; an error counts as an infinite residual.
    pub(crate) fn try_at_most(&mut self, name: impl Into<String>, residual: Result<f64>, tolerance: f64) {
        self.at_most(name, residual.unwrap_or(f64::INFINITY), tolerance);
    }
}

/// Running maximum that turns an error into an infinite residual.
pub(crate) fn worst<I: IntoIterator<Item = Result<f64>>>(values: I) -> f64 {
    values.into_iter().map(|r| r.unwrap_or(f64::INFINITY)).fold(0.0, |acc: f64, r| {
        if r.is_nan() {
            f64::INFINITY
        } else {
            acc.max(r)
        }
    })
}

pub(crate) type SuiteRng = ChaCha8Rng;

/// Runs one suite with tolerances multiplied by `tol_scale`.
pub fn run_suite(suite: SuiteName, seed: u64, tol_scale: f64) -> SuiteReport {
    let start = Instant::now();
    let mut rec = Recorder::new(tol_scale);
    let mut draw = rng(seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ suite.salt());
    match suite {
        SuiteName::Core => algebra::run(&mut rec, &mut draw),
        SuiteName::Reps => reps::run(&mut rec, &mut draw),
        SuiteName::Iso => iso::run(&mut rec, &mut draw),
        SuiteName::Conformal => conformal::run(&mut rec, &mut draw),
        SuiteName::Lie => lie::run(&mut rec, &mut draw),
        SuiteName::Twistor => twistor::run(&mut rec, &mut draw),
    }
    let pass = rec.checks.iter().all(|c| c.pass);
    SuiteReport { suite, pass, checks: rec.checks, elapsed: start.elapsed() }
}

pub fn run_all(seed: u64, tol_scale: f64) -> Vec<SuiteReport> {
    SuiteName::ALL.iter().map(|&s| run_suite(s, seed, tol_scale)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in SuiteName::ALL {
            assert_eq!(s.name().parse::<SuiteName>().unwrap(), s);
        }
        assert!("bogus".parse::<SuiteName>().is_err());
    }

    #[test]
    fn recorder_bounds() {
        let mut rec = Recorder::new(10.0);
        rec.at_most("scaled", 5e-12, 1e-12);
        rec.exact("exact", 1e-300);
        rec.at_least("control", 0.5, 1e-3);
        rec.try_at_most("error", Err(Error::Undefined), 1.0);
        let pass: Vec<bool> = rec.checks.iter().map(|c| c.pass).collect();
        assert_eq!(pass, [true, false, true, false]);
        assert_eq!(worst([Ok(1.0), Ok(f64::NAN)]), f64::INFINITY);
    }

    #[test]
    fn every_suite_passes() {
        for report in run_all(42, 1.0) {
            let failed: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
            assert!(report.pass, "{}: {failed:?}", report.suite);
        }
    }
}
