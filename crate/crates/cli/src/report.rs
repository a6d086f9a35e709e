//! The report envelope shared by every subcommand.

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::fmt::Write;

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    /// SHA-256 of the canonical input text.
    pub digest: String,
    pub results: BTreeMap<String, Value>,
    pub witnesses: BTreeMap<String, Value>,
    pub caps_hit: Vec<String>,
    pub version: &'static str,
}

impl Report {
    pub fn new(command: &str) -> Report {
        Report {
            command: command.to_string(),
            digest: String::new(),
            results: BTreeMap::new(),
            witnesses: BTreeMap::new(),
            caps_hit: Vec::new(),
            version: env!("CARGO_PKG_VERSION"),
        }
    }

    pub fn digest_of(&mut self, input: &str) {
        let hash = Sha256::digest(input.as_bytes());
        self.digest = hash.iter().fold(String::new(), |mut s, b| {
            write!(s, "{b:02x}").unwrap();
            s
        });
    }

    pub fn put<T: Serialize>(&mut self, key: &str, value: T) {
        self.results.insert(key.to_string(), serde_json::to_value(value).unwrap());
    }

    pub fn witness<T: Serialize>(&mut self, key: &str, value: T) {
        self.witnesses.insert(key.to_string(), serde_json::to_value(value).unwrap());
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).unwrap() + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} (digest {})\n", self.command, &self.digest[..16.min(self.digest.len())]);
        let show = |v: &Value| match v {
            Value::String(t) => t.clone(),
            other => other.to_string(),
        };
        for (k, v) in &self.results {
            writeln!(s, "  {k}: {}", show(v)).unwrap();
        }
        for (k, v) in &self.witnesses {
            writeln!(s, "  witness {k}: {}", show(v)).unwrap();
        }
        for c in &self.caps_hit {
            writeln!(s, "  cap hit: {c}").unwrap();
        }
        s
    }
}
