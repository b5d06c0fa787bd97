//! Machine-readable verification reports.
//!
//! Reports serialize deterministically for a given command and seed;
//! only `elapsed_ms` varies between runs. The JSON layout is pinned by
//! `schema/report.schema.json`.

use caylab::constructions::KnownResult;
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub params: BTreeMap<String, serde_json::Value>,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub histogram: Option<BTreeMap<usize, u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<KnownResult>>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            params: BTreeMap::new(),
            checks: Vec::new(),
            degree: None,
            histogram: None,
            table: None,
            elapsed_ms: 0,
        }
    }

    pub fn param(&mut self, key: &str, value: impl Serialize) {
        self.params.insert(
            key.to_string(),
            serde_json::to_value(value).expect("serializable parameter"),
        );
    }

    pub fn pass(&mut self, name: &str, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            status: CheckStatus::Pass,
            detail: detail.into(),
        });
    }

    pub fn fail(&mut self, name: &str, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            status: CheckStatus::Fail,
            detail: detail.into(),
        });
    }

    pub fn skip(&mut self, name: &str, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            status: CheckStatus::Skipped,
            detail: detail.into(),
        });
    }

    pub fn record(&mut self, name: &str, ok: bool, detail: impl Into<String>) {
        if ok {
            self.pass(name, detail);
        } else {
            self.fail(name, detail);
        }
    }

    /// Overall success: every non-skipped check passed.
    pub fn all_pass(&self) -> bool {
        self.checks
            .iter()
            .all(|c| c.status != CheckStatus::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        for (k, v) in &self.params {
            out.push_str(&format!("  {k} = {v}\n"));
        }
        for c in &self.checks {
            let status = match c.status {
                CheckStatus::Pass => "PASS",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Skipped => "SKIP",
            };
            out.push_str(&format!("[{status}] {:<28} {}\n", c.name, c.detail));
        }
        if let Some(d) = self.degree {
            out.push_str(&format!("degree: {d}\n"));
        }
        if let Some(h) = &self.histogram {
            out.push_str("fiber-size histogram:\n");
            for (size, count) in h {
                out.push_str(&format!("  {size:>4} -> {count}\n"));
            }
        }
        if let Some(t) = &self.table {
            let width = t.iter().map(|e| e.group.len()).max().unwrap_or(8);
            for e in t {
                let kind = match e.kind {
                    caylab::constructions::ValueKind::Exact => "exact",
                    caylab::constructions::ValueKind::UpperBound => "upper-bound",
                };
                out.push_str(&format!(
                    "{:<width$}  {:<11}  {:>3}  {}\n",
                    e.group, kind, e.value, e.provenance
                ));
            }
        }
        out.push_str(&format!("elapsed_ms: {}\n", self.elapsed_ms));
        out
    }
}
