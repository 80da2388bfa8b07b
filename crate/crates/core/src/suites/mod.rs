//! The verification suites behind `verify`.

mod convolution;
mod hecke;
mod koszul;

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Value};
use thiserror::Error;

use crate::dg::Window;
use crate::random::{rng, trial_seed, Rng64};
use crate::report::{Check, Report};

pub use convolution::convolution_checks;
pub use hecke::hecke_checks;
pub use koszul::koszul_checks;

pub const DEFAULT_TYPES: &[&str] = &["A1", "A1xA1", "A2", "B2", "G2"];

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum SuiteError {
    #[error("unknown suite '{0}' (expected hecke, koszul, convolution or all)")]
    UnknownSuite(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteParams {
    /// Root datum labels for the Hecke suite.
    pub types: Vec<String>,
    pub weight_bound: i64,
    /// Ambient dimension; random per trial when absent.
    pub dim: Option<usize>,
    /// Dimension of `F` for the convolution suite; random when absent.
    pub fdim: Option<usize>,
    /// Trial count; each check has its own default when absent.
    pub trials: Option<usize>,
    /// Internal-degree window bounding every truncated computation.
    pub window: Window,
    /// Generator images to verify instead of the default checks.
    pub spec: Option<String>,
}

impl Default for SuiteParams {
    fn default() -> Self {
        Self {
            types: DEFAULT_TYPES.iter().map(|s| s.to_string()).collect(),
            weight_bound: 3,
            dim: None,
            fdim: None,
            trials: None,
            window: Window::bounded(-16, 16),
            spec: None,
        }
    }
}

impl SuiteParams {
    pub fn validate(&self) -> Result<(), SuiteError> {
        let bad = |m: &str| Err(SuiteError::InvalidParams(m.into()));
        if self.weight_bound < 0 {
            return bad("weight bound must be nonnegative");
        }
        if let Some(n) = self.dim {
            if n == 0 || n > 3 {
                return bad("dim must be 1, 2 or 3");
            }
        }
        if let (Some(f), Some(n)) = (self.fdim, self.dim) {
            if f > n {
                return bad("fdim cannot exceed dim");
            }
        }
        if self.fdim.is_some_and(|f| f > 3) {
            return bad("fdim must be at most 3");
        }
        let (Some(lo), Some(hi)) = (self.window.lo, self.window.hi) else {
            return bad("window must be bounded");
        };
        if lo > 0 || hi < 0 {
            return bad("window must contain 0");
        }
        for t in &self.types {
            if !crate::rootdata::RootDatum::LABELS.contains(&t.as_str()) {
                return bad(&format!("unknown root datum type {t}"));
            }
        }
        Ok(())
    }

    fn to_json(&self) -> BTreeMap<String, Value> {
        let mut m = BTreeMap::new();
        m.insert("types".into(), json!(self.types));
        m.insert("weight_bound".into(), json!(self.weight_bound));
        m.insert("dim".into(), json!(self.dim));
        m.insert("fdim".into(), json!(self.fdim));
        m.insert("trials".into(), json!(self.trials));
        m.insert("window".into(), json!([self.window.lo, self.window.hi]));
        m.insert("spec".into(), json!(self.spec));
        m
    }

    pub(crate) fn trials_or(&self, default: usize) -> usize {
        self.trials.unwrap_or(default)
    }

    pub(crate) fn lo(&self) -> i64 {
        self.window.lo.unwrap_or(-16)
    }

    pub(crate) fn hi(&self) -> i64 {
        self.window.hi.unwrap_or(16)
    }
}

pub fn run_suite(name: &str, params: &SuiteParams, seed: u64) -> Result<Report, SuiteError> {
    params.validate()?;
    let checks = match name {
        "hecke" => hecke_checks(params, seed)?,
        "koszul" => koszul_checks(params, seed)?,
        "convolution" => convolution_checks(params, seed)?,
        "all" => {
            let mut c = hecke_checks(params, seed)?;
            c.extend(koszul_checks(params, seed)?);
            c.extend(convolution_checks(params, seed)?);
            c
        }
        other => return Err(SuiteError::UnknownSuite(other.to_string())),
    };
    Ok(Report::new(name, params.to_json(), seed, checks))
}

fn salt(name: &str) -> u64 {
    name.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3))
}

/// Runs `f` on `trials` independently seeded generators in parallel; the
/// witness of a failure is the lowest failing trial.
pub(crate) fn run_trials<F>(name: &str, trials: usize, seed: u64, f: F) -> Check
where
    F: Fn(&mut Rng64) -> Result<(), String> + Sync,
{
    run_indexed(name, trials, seed, |_, r| f(r))
}

/// Like [`run_trials`], also passing the trial index.
pub(crate) fn run_indexed<F>(name: &str, trials: usize, seed: u64, f: F) -> Check
where
    F: Fn(usize, &mut Rng64) -> Result<(), String> + Sync,
{
    let start = Instant::now();
    let base = seed ^ salt(name);
    let first_failure = (0..trials)
        .into_par_iter()
        .filter_map(|i| {
            let mut r = rng(trial_seed(base, i as u64));
            f(i, &mut r).err().map(|w| (i, w))
        })
        .min_by_key(|(i, _)| *i);
    let check = match first_failure {
        None => Check::pass(name),
        Some((i, w)) => Check::fail(name, format!("trial {i}: {w}")),
    };
    check.with_trials(trials).with_elapsed(start.elapsed())
}

/// Like [`run_trials`] for several checks evaluated on one shared sample;
/// `f` returns one result per name.
pub(crate) fn run_trial_group<F>(names: &[String], trials: usize, seed: u64, f: F) -> Vec<Check>
where
    F: Fn(&mut Rng64) -> Vec<Result<(), String>> + Sync,
{
    let start = Instant::now();
    let base = seed ^ salt(&names.join("+"));
    let results: Vec<Vec<Result<(), String>>> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let mut r = rng(trial_seed(base, i as u64));
            let out = f(&mut r);
            assert_eq!(out.len(), names.len(), "one result per check");
            out
        })
        .collect();
    let elapsed = start.elapsed();
    names
        .iter()
        .enumerate()
        .map(|(k, name)| {
            let first = results.iter().enumerate().find_map(|(i, r)| r[k].clone().err().map(|w| (i, w)));
            let check = match first {
                None => Check::pass(name),
                Some((i, w)) => Check::fail(name, format!("trial {i}: {w}")),
            };
            check.with_trials(trials).with_elapsed(elapsed)
        })
        .collect()
}

/// Times a single deterministic check.
pub(crate) fn timed(name: &str, f: impl FnOnce() -> Result<(), String>) -> Check {
    let start = Instant::now();
    Check::from_result(name, f()).with_elapsed(start.elapsed())
}
