use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
}

impl Outcome {
    pub fn from_violations(violations: &[String]) -> Self {
        if violations.is_empty() {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }
}

/// Machine-readable verification result.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub instance: String,
    pub verdict: Outcome,
    pub cases: BTreeMap<String, usize>,
    pub violations: Vec<String>,
    pub details: serde_json::Value,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.verdict == Outcome::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}
