use serde::Serialize;
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

pub const TOOL_VERSION: &str = concat!(env!("CARGO_PKG_NAME"), " ", env!("CARGO_PKG_VERSION"));

/// Outcome of a command: a JSON payload and whether the analysis answered
/// "yes" (exit 0) or "no" (exit 1).
pub struct Outcome {
    pub payload: Value,
    pub positive: bool,
}

impl Outcome {
    pub fn new(payload: impl Serialize, positive: bool) -> anyhow::Result<Self> {
        Ok(Outcome { payload: serde_json::to_value(payload)?, positive })
    }
}

/// SHA-256 over the canonical JSON of the resolved inputs.
pub fn digest(inputs: &Value) -> String {
    let canonical = serde_json::to_vec(inputs).expect("json value serialises");
    format!("sha256:{}", hex::encode(Sha256::digest(&canonical)))
}

/// Adds the stamp fields to an object payload. Keys come out sorted, so
/// identical inputs give byte-identical reports.
pub fn stamp(command: &str, payload: Value, window: Option<usize>, input_digest: &str) -> Value {
    let mut object = match payload {
        Value::Object(map) => map,
        other => {
            let mut map = Map::new();
            map.insert("result".into(), other);
            map
        }
    };
    object.insert("command".into(), command.into());
    object.insert("tool_version".into(), TOOL_VERSION.into());
    object.insert("input_digest".into(), input_digest.into());
    if let Some(points) = window {
        object.insert("window_points".into(), points.into());
    }
    Value::Object(object)
}

pub fn render(report: &Value, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(report).expect("json value serialises")
    } else {
        serde_json::to_string(report).expect("json value serialises")
    }
}
