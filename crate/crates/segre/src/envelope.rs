use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Bumped whenever a payload changes shape.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub algorithms: Vec<String>,
    pub version: String,
}

/// The top-level JSON document every command emits.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputEnvelope {
    pub schema_version: u32,
    pub command: String,
    pub spec: Vec<u32>,
    pub payload: Value,
    pub provenance: Provenance,
}

impl OutputEnvelope {
    pub fn new(command: &str, spec: &[u32], payload: Value, algorithms: Vec<String>) -> Self {
        OutputEnvelope {
            schema_version: SCHEMA_VERSION,
            command: command.into(),
            spec: spec.to_vec(),
            payload,
            provenance: Provenance { algorithms, version: env!("CARGO_PKG_VERSION").into() },
        }
    }

    /// Pretty JSON with every object's keys in sorted order.
    pub fn to_json(&self) -> serde_json::Result<String> {
        // `Value` objects are ordered maps, so a round trip sorts the keys.
        let value = serde_json::to_value(self)?;
        let mut out = serde_json::to_string_pretty(&value)?;
        out.push('\n');
        Ok(out)
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}
