//! Machine-readable result documents.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Bumped whenever a field changes meaning or disappears.
pub const SCHEMA_VERSION: u32 = 1;

/// One command's inputs and results.
///
/// Maps are ordered and timing is opt-in, so a fixed seed gives byte-identical output.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub schema_version: u32,
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<usize>,
    /// Names of the statements whose guarantees were consulted.
    pub guarantee_tags: Vec<String>,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl ResultDocument {
    pub fn new(command: &str) -> Self {
        ResultDocument {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            inputs: BTreeMap::new(),
            seed: None,
            trials: None,
            guarantee_tags: Vec::new(),
            result: Value::Null,
            timing_ms: None,
        }
    }

    pub fn input(mut self, key: &str, value: impl Serialize) -> Self {
        self.inputs.insert(key.to_string(), to_value(value));
        self
    }

    pub fn with_result(mut self, value: impl Serialize) -> Self {
        self.result = to_value(value);
        self
    }

    pub fn tag(&mut self, tag: &str) {
        if !self.guarantee_tags.iter().any(|t| t == tag) {
            self.guarantee_tags.push(tag.to_string());
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("result documents serialize")
    }
}

fn to_value(value: impl Serialize) -> Value {
    serde_json::to_value(value).expect("result values serialize")
}
