//! Verification reports with a stable JSON form.

use std::collections::BTreeMap;
use std::time::Duration;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    /// Present exactly when the check failed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub window: Option<String>,
    /// Wall time; left out of the JSON so that reports are reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl Check {
    pub fn new(name: impl Into<String>, status: Status) -> Self {
        Self { name: name.into(), status, witness: None, trials: None, window: None, elapsed: Duration::ZERO }
    }

    pub fn pass(name: impl Into<String>) -> Self {
        Self::new(name, Status::Pass)
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Self {
        let mut c = Self::new(name, Status::Fail);
        c.witness = Some(witness.into());
        c
    }

    pub fn skipped(name: impl Into<String>) -> Self {
        Self::new(name, Status::Skipped)
    }

    /// Pass, or fail with the witness.
    pub fn from_result(name: impl Into<String>, r: Result<(), String>) -> Self {
        match r {
            Ok(()) => Self::pass(name),
            Err(w) => Self::fail(name, w),
        }
    }

    pub fn with_trials(mut self, n: usize) -> Self {
        self.trials = Some(n);
        self
    }

    pub fn with_window(mut self, w: impl ToString) -> Self {
        self.window = Some(w.to_string());
        self
    }

    pub fn with_elapsed(mut self, d: Duration) -> Self {
        self.elapsed = d;
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub params: BTreeMap<String, Value>,
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: impl Into<String>, params: BTreeMap<String, Value>, seed: u64, mut checks: Vec<Check>) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        Self { suite: suite.into(), params, seed, checks }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }

    /// One line per check.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!("{:<8} {}", c.status.as_str(), c.name));
            if let Some(t) = c.trials {
                out.push_str(&format!(" ({t} trials)"));
            }
            out.push_str(&format!(" [{:.2}s]\n", c.elapsed.as_secs_f64()));
            if let Some(w) = &c.witness {
                out.push_str(&format!("         witness: {w}\n"));
            }
        }
        let failed = self.failures().count();
        out.push_str(&format!("{}: {} checks, {} failed\n", self.suite, self.checks.len(), failed));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checks_are_sorted_and_elapsed_is_omitted() {
        let r = Report::new(
            "x",
            BTreeMap::new(),
            3,
            vec![Check::pass("b").with_elapsed(Duration::from_secs(2)), Check::fail("a", "w")],
        );
        assert_eq!(r.checks[0].name, "a");
        assert!(!r.passed());
        let j = r.to_json();
        assert!(!j.contains("elapsed"));
        assert!(j.contains("\"witness\": \"w\""));
        assert!(j.contains("\"status\": \"fail\""));
    }
}
