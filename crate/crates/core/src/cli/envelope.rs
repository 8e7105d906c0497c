use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::ncp::FeasibleSet;
use crate::rational::format_rational;

/// Machine-readable command result. Every number is an exact rational
/// string.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultEnvelope {
    pub command: String,
    /// SHA-256 of the model file bytes.
    pub input_digest: String,
    pub result: Value,
}

impl ResultEnvelope {
    pub fn new(command: &str, input: &[u8], result: Value) -> Self {
        ResultEnvelope {
            command: command.to_owned(),
            input_digest: hex::encode(Sha256::digest(input)),
            result,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("envelope serializes")
    }
}

/// `{"empty": bool, "lo": "p/q" | null, "hi": "p/q" | null, "text": ...}`;
/// a null bound is infinite.
pub fn feasible_set_json(set: &FeasibleSet) -> Value {
    json!({
        "empty": set.is_empty(),
        "lo": set.lo().map(format_rational),
        "hi": set.hi().map(format_rational),
        "text": set.to_string(),
    })
}
