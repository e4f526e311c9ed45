//! Command results and their text/JSON rendering.

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_OVERFLOW: i32 = 3;

/// Machine-readable result of one command on one input.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CommandReport {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub file: Option<String>,
    /// SHA-256 of the input file bytes, concatenated in argument order.
    pub input_digest: Option<String>,
    pub verdict: String,
    pub payload: Value,
    pub exit_code: i32,
    /// Human-readable rendering (stdout in text mode).
    #[serde(skip)]
    pub text: String,
}

impl CommandReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

pub fn digest(inputs: &[&[u8]]) -> String {
    let mut hasher = Sha256::new();
    for bytes in inputs {
        hasher.update(bytes);
    }
    hasher
        .finalize()
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}
