//! Verification records: one per checked claim instance, serialized as JSON.
//!
//! The schema is deliberately small and flat:
//!
//! ```json
//! {
//!   "theorem": "thm.cycles",
//!   "instance": "cycle:5",
//!   "expected": "gp(mu) = 6",
//!   "computed": "direct=6 partition=6 closed=6",
//!   "verdict": "PASS",
//!   "wall_ms": 0
//! }
//! ```
//!
//! `wall_ms` is wall-clock timing and is excluded from golden comparisons;
//! every other field is deterministic for a fixed seed.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "PASS"),
            Verdict::Fail => write!(f, "FAIL"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TheoremRecord {
    /// Stable claim identifier, e.g. "thm.cycles".
    pub theorem: String,
    /// Instance descriptor: a family spec, a graph6 line, or a batch summary.
    pub instance: String,
    /// The expected value or relation, human-readable but stable.
    pub expected: String,
    /// The values each method produced.
    pub computed: String,
    pub verdict: Verdict,
    /// Wall-clock milliseconds; nondeterministic, excluded from goldens.
    pub wall_ms: u128,
}

impl TheoremRecord {
    pub fn new(
        theorem: &str,
        instance: impl Into<String>,
        expected: impl Into<String>,
        computed: impl Into<String>,
        pass: bool,
        started: Instant,
    ) -> TheoremRecord {
        TheoremRecord {
            theorem: theorem.to_string(),
            instance: instance.into(),
            expected: expected.into(),
            computed: computed.into(),
            verdict: if pass { Verdict::Pass } else { Verdict::Fail },
            wall_ms: started.elapsed().as_millis(),
        }
    }

    /// One-line rendering used by `check` output.
    pub fn line(&self) -> String {
        format!(
            "{} | {} | expected {} | computed {} | {}",
            self.theorem, self.instance, self.expected, self.computed, self.verdict
        )
    }
}

/// Serializes records as pretty JSON (stable field order via the struct).
pub fn to_json(records: &[TheoremRecord]) -> String {
    let mut out = serde_json::to_string_pretty(records).expect("plain data serializes");
    out.push('\n');
    out
}

/// Parses and validates a records document. Unknown fields, missing fields,
/// or verdicts outside {PASS, FAIL} are rejected by the schema.
pub fn from_json(text: &str) -> Result<Vec<TheoremRecord>, serde_json::Error> {
    serde_json::from_str(text)
}

// ===========================================================================
// tests
// ===========================================================================
