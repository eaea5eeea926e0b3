//! Pass/fail records shared by the verification routines and the CLI.

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// A computed value next to the value a closed form predicts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comparison<T> {
    pub computed: T,
    pub expected: T,
    /// The closed form the expected value comes from.
    pub provenance: String,
}

impl<T: PartialEq> Comparison<T> {
    pub fn new(computed: T, expected: T, provenance: impl Into<String>) -> Self {
        Comparison { computed, expected, provenance: provenance.into() }
    }

    pub fn pass(&self) -> bool {
        self.computed == self.expected
    }
}

impl<T: Serialize + PartialEq> Comparison<T> {
    pub fn to_values(&self) -> (Value, Value) {
        (
            serde_json::to_value(&self.computed).expect("serializable"),
            serde_json::to_value(&self.expected).expect("serializable"),
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CaseId {
    pub m: usize,
    pub q: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check_id: String,
    pub case: CaseId,
    pub computed: Value,
    pub expected: Value,
    pub provenance: String,
    pub pass: bool,
    pub elapsed_ms: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckRecord {
    pub fn from_comparison<T: Serialize + PartialEq>(check_id: &str, case: CaseId, cmp: &Comparison<T>) -> Self {
        let (computed, expected) = cmp.to_values();
        CheckRecord {
            check_id: check_id.to_string(),
            case,
            computed,
            expected,
            provenance: cmp.provenance.clone(),
            pass: cmp.pass(),
            elapsed_ms: 0,
            note: None,
        }
    }

    /// A check that could not be carried out; always a failure.
    pub fn error(check_id: &str, case: CaseId, message: String) -> Self {
        CheckRecord {
            check_id: check_id.to_string(),
            case,
            computed: Value::Null,
            expected: Value::Null,
            provenance: String::new(),
            pass: false,
            elapsed_ms: 0,
            note: Some(message),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub records: Vec<CheckRecord>,
    pub summary: Summary,
}

impl VerificationReport {
    /// Sorts records by `(case, check_id)` and recomputes the summary.
    pub fn from_records(mut records: Vec<CheckRecord>) -> Self {
        records.sort_by(|a, b| (a.case, &a.check_id).cmp(&(b.case, &b.check_id)));
        let passed = records.iter().filter(|r| r.pass).count();
        let summary = Summary { total: records.len(), passed, failed: records.len() - passed };
        VerificationReport { records, summary }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }
}
