//! The JSON report envelope shared by every command.

use serde::Serialize;
use serde_json::Value;

use crate::error::Result;

pub const REPORT_SCHEMA_VERSION: u32 = 1;

/// `{schema_version, command, params, seed?, results, stats}`.
///
/// Object keys inside `params`, `results` and `stats` are emitted in sorted
/// order, so equal reports serialize to identical bytes.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub params: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub results: Vec<Value>,
    pub stats: Value,
}

impl Report {
    pub fn new(command: &str, params: Value) -> Self {
        Report {
            schema_version: REPORT_SCHEMA_VERSION,
            command: command.into(),
            params,
            seed: None,
            results: Vec::new(),
            stats: Value::Object(Default::default()),
        }
    }

    pub fn push<T: Serialize>(&mut self, result: &T) -> Result<()> {
        self.results.push(serde_json::to_value(result)?);
        Ok(())
    }

    pub fn stat<T: Serialize>(&mut self, key: &str, value: T) -> Result<()> {
        let v = serde_json::to_value(value)?;
        if let Value::Object(m) = &mut self.stats {
            m.insert(key.into(), v);
        }
        Ok(())
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }
}
