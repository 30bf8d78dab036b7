//! Run reports and labeled matrices for the command line.

use serde::Serialize;
use serde_json::Value;

use crate::intlin::IntMat;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// A failing `(cone, ray)` or a short description.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn new(name: &str, failure: Option<String>) -> Self {
        Check { name: name.into(), passed: failure.is_none(), witness: failure }
    }

    pub fn from_bool(name: &str, ok: bool, witness: impl FnOnce() -> String) -> Self {
        Check::new(name, (!ok).then(witness))
    }
}

/// A matrix with explicit row and column labels, serialized row-major.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabeledMatrix {
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub data: Vec<Vec<i64>>,
}

impl LabeledMatrix {
    pub fn new(m: &IntMat, rows: Vec<String>, cols: Vec<String>) -> Self {
        assert_eq!((rows.len(), cols.len()), (m.rows(), m.cols()), "label count mismatch");
        LabeledMatrix { rows, cols, data: m.to_rows() }
    }
}

/// `prefix1, ..., prefixN`.
pub fn numbered(prefix: &str, count: usize) -> Vec<String> {
    (1..=count).map(|i| format!("{prefix}{i}")).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Value>,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checks_and_labels() {
        let ok = Check::from_bool("a", true, || unreachable!());
        assert!(ok.passed && ok.witness.is_none());
        let bad = Check::new("b", Some("cone 1, ray 2".into()));
        assert!(!bad.passed);
        let m = LabeledMatrix::new(&IntMat::identity(2), numbered("e", 2), numbered("S", 2));
        let text = serde_json::to_string(&m).unwrap();
        assert_eq!(text, r#"{"rows":["e1","e2"],"cols":["S1","S2"],"data":[[1,0],[0,1]]}"#);
        let r = RunReport {
            command: "x".into(),
            inputs: Value::Null,
            results: Value::Null,
            checks: vec![ok, bad],
            timing: None,
        };
        assert!(!r.passed());
        assert!(!r.to_json().contains("timing"));
    }
}
