//! Outcome of one verification claim, serialized as versioned JSON.

use std::fmt::Display;
use std::time::Instant;

use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "seqlab.report/v1";

/// Counterexamples kept per report; further failures are only counted.
pub const COUNTEREXAMPLE_CAP: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub claim_id: String,
    pub range: String,
    pub status: Status,
    pub counterexamples: Vec<Counterexample>,
    /// Total failures, including those beyond the counterexample cap.
    pub failures: u64,
    /// Number of individual checks performed.
    pub checked: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn status(&self) -> Status {
        self.status
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The report with `elapsed_ms` zeroed, for byte-level comparisons.
    pub fn without_timing(mut self) -> Self {
        self.elapsed_ms = 0;
        self
    }
}

/// Accumulates checks for one claim and yields a [`Report`].
#[derive(Debug)]
pub struct ReportBuilder {
    claim_id: String,
    range: String,
    counterexamples: Vec<Counterexample>,
    failures: u64,
    checked: u64,
    notes: Vec<String>,
    started: Instant,
}

impl ReportBuilder {
    pub fn new(claim_id: impl Into<String>, range: impl Into<String>) -> Self {
        Self {
            claim_id: claim_id.into(),
            range: range.into(),
            counterexamples: Vec::new(),
            failures: 0,
            checked: 0,
            notes: Vec::new(),
            started: Instant::now(),
        }
    }

    /// Records one check; returns `ok` so callers can branch on it.
    pub fn check(
        &mut self,
        ok: bool,
        input: impl Display,
        expected: impl Display,
        actual: impl Display,
    ) -> bool {
        self.checked += 1;
        if !ok {
            self.fail(input, expected, actual);
        }
        ok
    }

    /// Equality check, rendering both sides on failure.
    pub fn check_eq<T: PartialEq + Display>(
        &mut self,
        input: impl Display,
        expected: T,
        actual: T,
    ) -> bool {
        let ok = expected == actual;
        self.check(ok, input, &expected, &actual)
    }

    pub fn fail(&mut self, input: impl Display, expected: impl Display, actual: impl Display) {
        self.failures += 1;
        if self.counterexamples.len() < COUNTEREXAMPLE_CAP {
            self.counterexamples.push(Counterexample {
                input: input.to_string(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn finish(self) -> Report {
        let status = if self.failures == 0 {
            Status::Pass
        } else {
            Status::Fail
        };
        Report {
            schema: SCHEMA.to_string(),
            claim_id: self.claim_id,
            range: self.range,
            status,
            counterexamples: self.counterexamples,
            failures: self.failures,
            checked: self.checked,
            notes: self.notes,
            elapsed_ms: self.started.elapsed().as_millis() as u64,
        }
    }
}

/// A report for a claim that was not run.
pub fn skipped(
    claim_id: impl Into<String>,
    range: impl Into<String>,
    why: impl Into<String>,
) -> Report {
    let mut b = ReportBuilder::new(claim_id, range);
    b.note(why);
    let mut r = b.finish();
    r.status = Status::Skipped;
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_tracks_failures() {
        let mut b = ReportBuilder::new("x", "n <= 3");
        b.check_eq(1, 1, 1);
        let r = b.finish();
        assert!(r.passed());
        assert!(r.counterexamples.is_empty());
        assert_eq!(r.checked, 1);

        let mut b = ReportBuilder::new("x", "n <= 30");
        for i in 0..25 {
            b.check_eq(i, 0, 1);
        }
        let r = b.finish();
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.counterexamples.len(), COUNTEREXAMPLE_CAP);
        assert_eq!(r.failures, 25);
    }

    #[test]
    fn json_shape() {
        let r = ReportBuilder::new("parity", "1 <= n <= 4")
            .finish()
            .without_timing();
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["schema"], SCHEMA);
        assert_eq!(v["claim_id"], "parity");
        assert_eq!(v["status"], "pass");
        assert_eq!(v["elapsed_ms"], 0);
        assert!(v["counterexamples"].as_array().unwrap().is_empty());
        assert!(v.get("notes").is_none());
        let back: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn skipped_report() {
        let r = skipped("x", "-", "not run");
        assert_eq!(r.status, Status::Skipped);
        assert!(r.counterexamples.is_empty());
    }
}
