//! Executable checks of the identities and inequalities relating chromatic
//! polynomials, list color functions and DP color functions.
//!
//! Each check yields [`CheckReport`]s. Failing reports carry a certificate
//! that reproduces the offending count on its own.

mod checks;

pub use checks::{
    check_characterization, check_even_path_partition, check_even_path_partition_sampled,
    check_known_choosable_examples, check_lemma_count_bound, check_lemma_dp_connection,
    check_lemma_nochord_inequality, check_sandwich, describe_graph, seeded_assignment,
};

use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};

/// Seed used when the caller does not supply one. Sampling uses
/// `ChaCha8Rng::seed_from_u64(seed)`.
pub const DEFAULT_SEED: u64 = 20_240_917;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// Out of budget or outside the statement's range.
    Skipped,
    /// An existence search found nothing within its bounds.
    Inconclusive,
    /// A supplied hypothesis did not hold, so the conclusion was not tested.
    PreconditionFailed,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub check_name: String,
    /// Parameter record; a JSON object.
    pub instance: Value,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
    /// Further exact values, as decimal strings.
    #[serde(skip_serializing_if = "std::collections::BTreeMap::is_empty")]
    pub values: std::collections::BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    pub detail: String,
}

impl CheckReport {
    pub fn new(check_name: &str, instance: Value) -> Self {
        CheckReport {
            check_name: check_name.to_string(),
            instance,
            status: Status::Pass,
            lhs: None,
            rhs: None,
            values: Default::default(),
            seed: None,
            witness: None,
            detail: String::new(),
        }
    }

    fn status(mut self, status: Status, detail: impl Into<String>) -> Self {
        self.status = status;
        self.detail = detail.into();
        self
    }

    fn sides(mut self, lhs: impl ToString, rhs: impl ToString) -> Self {
        self.lhs = Some(lhs.to_string());
        self.rhs = Some(rhs.to_string());
        self
    }

    fn value(mut self, key: &str, v: impl ToString) -> Self {
        self.values.insert(key.to_string(), v.to_string());
        self
    }

    /// Sort key: check name, then the serialized instance.
    pub fn sort_key(&self) -> (String, String) {
        (self.check_name.clone(), self.instance.to_string())
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Runs `body`, turning an exhausted budget into a skipped report.
fn guard(name: &str, instance: Value, body: impl FnOnce() -> Result<CheckReport>) -> Result<CheckReport> {
    match body() {
        Err(Error::BudgetExceeded { what, limit }) => Ok(CheckReport::new(name, instance)
            .status(Status::Skipped, format!("budget exceeded: {what} (limit {limit})"))),
        other => other,
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub inconclusive: usize,
    pub precondition_failed: usize,
}

impl Summary {
    pub fn of(reports: &[CheckReport]) -> Self {
        let mut s = Summary::default();
        for r in reports {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Skipped => s.skipped += 1,
                Status::Inconclusive => s.inconclusive += 1,
                Status::PreconditionFailed => s.precondition_failed += 1,
            }
        }
        s
    }
}

pub fn sort_reports(reports: &mut [CheckReport]) {
    reports.sort_by_cached_key(CheckReport::sort_key);
}

/// One report per line, followed by `{"summary": {...}}`.
pub fn to_json_lines(reports: &[CheckReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&r.to_json_line());
        out.push('\n');
    }
    out.push_str(&serde_json::json!({ "summary": Summary::of(reports) }).to_string());
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn summary_and_order() {
        let mut reports = vec![
            CheckReport::new("b", json!({"m": 2})),
            CheckReport::new("a", json!({"m": 3})).status(Status::Skipped, "x"),
            CheckReport::new("a", json!({"m": 2})).status(Status::Fail, "y"),
        ];
        sort_reports(&mut reports);
        assert_eq!(reports[0].status, Status::Fail);
        assert_eq!(reports[2].check_name, "b");
        let s = Summary::of(&reports);
        assert_eq!((s.pass, s.fail, s.skipped), (1, 1, 1));
        let text = to_json_lines(&reports);
        assert_eq!(text.lines().count(), 4);
        assert!(text.lines().last().unwrap().starts_with("{\"summary\""));
    }

    #[test]
    fn budget_becomes_skip() {
        let r = guard("x", json!({}), || Err(Error::BudgetExceeded { what: "w", limit: 1 })).unwrap();
        assert_eq!(r.status, Status::Skipped);
        assert!(guard("x", json!({}), || Err(Error::Domain("d".into()))).is_err());
    }
}
