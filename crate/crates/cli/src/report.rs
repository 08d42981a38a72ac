//! The structured run report every subcommand emits.

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Outcome class of a run. `Falsified` appears exactly when a Theorem 1
/// claim failed under a satisfied premise; `Mismatch` when a stored record
/// disagreed with its re-audit; `Error` for domain-level failures that
/// still produce a report (for example a failed premise).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Falsified,
    Mismatch,
    Error,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Status::Ok => write!(f, "ok"),
            Status::Falsified => write!(f, "falsified"),
            Status::Mismatch => write!(f, "mismatch"),
            Status::Error => write!(f, "error"),
        }
    }
}

/// One self-describing document per invocation. Identical inputs produce
/// byte-identical serialized reports; nothing time- or host-dependent is
/// included.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Value,
    pub verdicts: Value,
    pub status: Status,
    pub tool_version: String,
}

impl RunReport {
    pub fn new(command: &str, inputs: Value, verdicts: Value, status: Status) -> Self {
        RunReport {
            command: command.to_string(),
            inputs,
            verdicts,
            status,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn report_round_trips_through_json() {
        let report = RunReport::new(
            "verify",
            json!({"t": 9}),
            json!({"claim_iv_ok": false}),
            Status::Falsified,
        );
        let text = report.to_json();
        let back: RunReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
        assert_eq!(back.to_json(), text);
    }
}
