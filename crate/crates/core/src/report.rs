//! Pass/fail lines emitted by the verification suites.

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    pub n: usize,
    pub p: u64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<Value>,
}

impl Report {
    /// A passing report; `p = 0` when no prime is involved.
    pub fn new(check: impl Into<String>, n: usize, p: u64) -> Report {
        Report { check: check.into(), n, p, pass: true, counterexample: None }
    }

    /// Records the first failure only.
    pub fn fail(&mut self, detail: Value) {
        if self.pass {
            self.pass = false;
            self.counterexample = Some(detail);
        }
    }

    /// Fails with `detail` unless `ok`.
    pub fn require(&mut self, ok: bool, detail: impl FnOnce() -> Value) {
        if !ok {
            self.fail(detail());
        }
    }
}

pub fn all_pass(reports: &[Report]) -> bool {
    reports.iter().all(|r| r.pass)
}
