//! Outcome of an identity sweep: instance count plus the failing instances.

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// At most this many failure payloads are kept; `failure_count` records the rest.
pub const MAX_FAILURES: usize = 25;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub instances: usize,
    pub failure_count: usize,
    pub failures: Vec<Value>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report {
            suite: suite.into(),
            instances: 0,
            failure_count: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    /// Records one instance; `failure` is `Some(payload)` when it failed.
    pub fn record(&mut self, failure: Option<Value>) {
        self.instances += 1;
        if let Some(f) = failure {
            self.failure_count += 1;
            if self.failures.len() < MAX_FAILURES {
                self.failures.push(f);
            }
        }
    }

    /// Records a batch of outcomes in order.
    pub fn extend(&mut self, outcomes: impl IntoIterator<Item = Option<Value>>) {
        for o in outcomes {
            self.record(o);
        }
    }

    pub fn merge(&mut self, other: Report) {
        self.instances += other.instances;
        self.failure_count += other.failure_count;
        for f in other.failures {
            if self.failures.len() < MAX_FAILURES {
                self.failures.push(f);
            }
        }
    }

    /// One-line human summary.
    pub fn summary(&self) -> String {
        format!(
            "{}: {} ({} instances, {} failures)",
            self.suite,
            if self.passed() { "pass" } else { "FAIL" },
            self.instances,
            self.failure_count
        )
    }
}
