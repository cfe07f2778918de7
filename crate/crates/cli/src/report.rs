use std::fmt::Write as _;

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Item {
    pub label: String,
    /// Main result columns, rendered joined by ` | `.
    pub values: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pass: Option<bool>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Item {
    pub fn new(label: impl Into<String>, values: Vec<String>) -> Self {
        Item {
            label: label.into(),
            values,
            pass: None,
            notes: Vec::new(),
        }
    }

    pub fn with_pass(mut self, pass: bool) -> Self {
        self.pass = Some(pass);
        self
    }
}

/// Output of one command. Contains no timestamps, so reruns with the same
/// arguments produce identical output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    pub version: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub items: Vec<Item>,
    pub pass: bool,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            version: env!("CARGO_PKG_VERSION"),
            seed: None,
            notes: Vec::new(),
            items: Vec::new(),
            pass: true,
        }
    }

    pub fn push(&mut self, item: Item) {
        if item.pass == Some(false) {
            self.pass = false;
        }
        self.items.push(item);
    }

    pub fn exit_code(&self) -> i32 {
        if self.pass {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "tatebal {}: {}", self.version, self.command);
        if let Some(seed) = self.seed {
            let _ = writeln!(out, "seed: {seed}");
        }
        for note in &self.notes {
            let _ = writeln!(out, "note: {note}");
        }
        for item in &self.items {
            let mut cols = item.values.clone();
            if let Some(p) = item.pass {
                cols.push(if p { "pass" } else { "FAIL" }.to_string());
            }
            let _ = writeln!(out, "{}: {}", item.label, cols.join(" | "));
            for note in &item.notes {
                let _ = writeln!(out, "    {note}");
            }
        }
        let _ = writeln!(out, "result: {}", if self.pass { "pass" } else { "FAIL" });
        out
    }
}
