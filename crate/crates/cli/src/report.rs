//! The structured report every campaign produces, and its three renderings.

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct Item {
    pub id: String,
    pub pass: bool,
    /// One line for text output.
    pub summary: String,
    /// A bound certificate, or a marker saying what the item is complete over.
    pub certificate: Value,
    pub data: Value,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub items: usize,
    pub passed: usize,
    pub failed: usize,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub artifact_version: &'static str,
    pub campaign_id: String,
    pub command: String,
    pub config: Value,
    pub items: Vec<Item>,
    pub notes: Vec<String>,
    pub summary: Summary,
    pub duration_ms: u64,
}

impl Report {
    pub fn new(command: &str, config: Value, items: Vec<Item>, notes: Vec<String>) -> Self {
        let passed = items.iter().filter(|i| i.pass).count();
        let summary = Summary { items: items.len(), passed, failed: items.len() - passed, pass: passed == items.len() };
        let canonical = serde_json::json!({ "command": command, "config": &config });
        let campaign_id = hex::encode(Sha256::digest(canonical.to_string().as_bytes()));
        Report {
            schema_version: SCHEMA_VERSION,
            artifact_version: env!("CARGO_PKG_VERSION"),
            campaign_id,
            command: command.to_string(),
            config,
            items,
            notes,
            summary,
            duration_ms: 0,
        }
    }

    /// Overrides the item-derived verdict, for campaigns whose failures are not items.
    pub fn fail(&mut self, note: String) {
        self.summary.pass = false;
        self.notes.push(note);
    }

    /// The JSON document with the duration removed, for comparing runs.
    pub fn comparable_json(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v.as_object_mut().expect("object").remove("duration_ms");
        v
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["campaign_id", "command", "index", "id", "pass", "summary", "certificate", "data"])
            .expect("in-memory write");
        for (i, item) in self.items.iter().enumerate() {
            w.write_record([
                self.campaign_id.as_str(),
                self.command.as_str(),
                &i.to_string(),
                &item.id,
                if item.pass { "PASS" } else { "FAIL" },
                &item.summary,
                &item.certificate.to_string(),
                &item.data.to_string(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} campaign {}\n", self.command, &self.campaign_id[..12]);
        for note in &self.notes {
            out.push_str(&format!("note: {note}\n"));
        }
        for item in &self.items {
            let mark = if item.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("{mark}  {:<28} {}\n", item.id, item.summary));
        }
        let verdict = if self.summary.pass { "PASS" } else { "FAIL" };
        out.push_str(&format!(
            "{verdict}: {} items, {} passed, {} failed ({} ms)\n",
            self.summary.items, self.summary.passed, self.summary.failed, self.duration_ms
        ));
        out
    }
}
