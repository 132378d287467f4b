use motspc::verify::{Failure, SuiteReport};
use serde::Serialize;
use serde_json::Value;

/// Version of the JSON envelope described by `schemas/envelope.v1.schema.json`.
pub const SCHEMA_VERSION: u32 = 1;

/// Machine-readable output of every command.
#[derive(Debug, Serialize)]
pub struct Envelope {
    pub schema_version: u32,
    pub command: String,
    pub parameters: Value,
    pub result: Value,
    pub truncation: Value,
    pub verdicts: Vec<Verdict>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub name: String,
    pub passed: bool,
    pub checks: u64,
    pub failures: Vec<Failure>,
}

impl Verdict {
    pub fn single(name: &str, passed: bool, witness: impl FnOnce() -> String) -> Verdict {
        let failures = if passed { vec![] } else { vec![Failure { invariant: name.to_string(), witness: witness() }] };
        Verdict { name: name.to_string(), passed, checks: 1, failures }
    }
}

impl From<&SuiteReport> for Verdict {
    fn from(r: &SuiteReport) -> Self {
        Verdict { name: r.name.clone(), passed: r.passed, checks: r.checks, failures: r.failures.clone() }
    }
}

/// A finished command: its envelope and the text rendering.
pub struct Report {
    pub envelope: Envelope,
    pub text: String,
}

impl Report {
    pub fn new(command: &str, parameters: Value, result: Value, text: String) -> Self {
        Report {
            envelope: Envelope {
                schema_version: SCHEMA_VERSION,
                command: command.to_string(),
                parameters,
                result,
                truncation: Value::Object(Default::default()),
                verdicts: vec![],
            },
            text,
        }
    }

    pub fn truncation(mut self, t: Value) -> Self {
        self.envelope.truncation = t;
        self
    }

    pub fn verdicts(mut self, v: Vec<Verdict>) -> Self {
        self.envelope.verdicts = v;
        self
    }

    pub fn failed(&self) -> bool {
        self.envelope.verdicts.iter().any(|v| !v.passed)
    }

    /// Text rendering followed by any failed verdict with its witnesses.
    pub fn render_text(&self) -> String {
        let mut s = self.text.clone();
        for v in self.envelope.verdicts.iter().filter(|v| !v.passed) {
            s.push_str(&format!("FAILED {}\n", v.name));
            for f in &v.failures {
                s.push_str(&format!("  {}: {}\n", f.invariant, f.witness));
            }
        }
        s
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.envelope).expect("envelope serializes");
        s.push('\n');
        s
    }
}

/// Left-aligned text table.
pub struct Table {
    headers: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(headers: &[&str]) -> Self {
        Table { headers: headers.iter().map(|h| h.to_string()).collect(), rows: vec![] }
    }

    pub fn row(&mut self, cells: Vec<String>) {
        self.rows.push(cells);
    }

    pub fn render(&self) -> String {
        let cols = self.headers.len();
        let width = |c: usize| {
            self.rows.iter().map(|r| r[c].chars().count()).chain([self.headers[c].chars().count()]).max().unwrap_or(0)
        };
        let widths: Vec<usize> = (0..cols).map(width).collect();
        let line = |cells: &[String]| {
            let parts: Vec<String> = cells
                .iter()
                .zip(&widths)
                .enumerate()
                .map(
                    |(i, (c, w))| {
                        if i + 1 == cols {
                            c.clone()
                        } else {
                            format!("{c}{}", " ".repeat(w - c.chars().count()))
                        }
                    },
                )
                .collect();
            format!("{}\n", parts.join("  ").trim_end())
        };
        let mut s = line(&self.headers);
        for r in &self.rows {
            s.push_str(&line(r));
        }
        s
    }
}
