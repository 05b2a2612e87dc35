//! One verification outcome, serialized as a JSON line.

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    pub input: Value,
    pub status: Status,
    pub witness: Value,
}

impl Report {
    pub fn new(check: impl Into<String>, input: Value, ok: bool, witness: Value) -> Self {
        let status = if ok { Status::Pass } else { Status::Fail };
        Report { check: check.into(), input, status, witness }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

/// Folds many reports into one, keeping the first failure as witness.
pub fn summarize(check: &str, input: Value, reports: &[Report]) -> Report {
    let failed: Vec<&Report> = reports.iter().filter(|r| !r.passed()).collect();
    let witness = match failed.first() {
        Some(f) => serde_json::json!({ "cases": reports.len(), "failures": failed.len(), "first": f }),
        None => serde_json::json!({ "cases": reports.len() }),
    };
    Report::new(check, input, failed.is_empty(), witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn line_format() {
        let r = Report::new("dims", json!({"r": 1}), true, Value::Null);
        assert_eq!(r.to_line(), r#"{"check":"dims","input":{"r":1},"status":"pass","witness":null}"#);
        let back: Report = serde_json::from_str(&r.to_line()).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn summary_keeps_first_failure() {
        let a = Report::new("x", json!(1), true, Value::Null);
        let b = Report::new("x", json!(2), false, json!("w"));
        let s = summarize("all", Value::Null, &[a.clone(), b]);
        assert!(!s.passed());
        assert_eq!(s.witness["failures"], 1);
        assert!(summarize("all", Value::Null, &[a]).passed());
    }
}
