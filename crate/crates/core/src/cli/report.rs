//! Verification reports and their JSON, CSV and text renderings.

use std::fmt::Write as _;
use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};

use crate::check::CheckResult;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    /// Seconds since the Unix epoch.
    pub timestamp: u64,
    pub results: Vec<CheckResult>,
    pub summary: Summary,
}

impl Report {
    pub fn new(results: Vec<CheckResult>) -> Self {
        let timestamp = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map_or(0, |d| d.as_secs());
        Self::with_timestamp(results, timestamp)
    }

    pub fn with_timestamp(results: Vec<CheckResult>, timestamp: u64) -> Self {
        let pass = results.iter().filter(|r| r.passed()).count();
        Self {
            version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp,
            summary: Summary {
                pass,
                fail: results.len() - pass,
            },
            results,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0
    }

    /// Parses a JSON report and checks that the summary matches the records.
    pub fn from_json(text: &str) -> Result<Self> {
        let report: Report =
            serde_json::from_str(text).map_err(|e| Error::Report(e.to_string()))?;
        let pass = report.results.iter().filter(|r| r.passed()).count();
        let tally = Summary {
            pass,
            fail: report.results.len() - pass,
        };
        if tally != report.summary {
            return Err(Error::Report(format!(
                "summary {:?} disagrees with records {tally:?}",
                report.summary
            )));
        }
        Ok(report)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One row per result: `id,status,counterexample`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["id", "status", "counterexample"])
            .expect("in-memory write");
        for r in &self.results {
            let cx = r
                .counterexample
                .as_ref()
                .map(|c| format!("{}: lhs = {}, rhs = {}", c.params, c.lhs, c.rhs))
                .unwrap_or_default();
            w.write_record([r.id.as_str(), &r.status.to_string(), &cx])
                .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("UTF-8 fields")
    }

    pub fn to_text(&self) -> String {
        let width = self.results.iter().map(|r| r.id.len()).max().unwrap_or(0);
        let mut out = String::new();
        for r in &self.results {
            let _ = writeln!(
                out,
                "{:<width$}  {}  [{}]  {} ms",
                r.id, r.status, r.grid, r.millis
            );
            if let Some(c) = &r.counterexample {
                let _ = writeln!(out, "{:<width$}    at {}", "", c.params);
                let _ = writeln!(out, "{:<width$}    lhs = {}", "", c.lhs);
                let _ = writeln!(out, "{:<width$}    rhs = {}", "", c.rhs);
            }
        }
        let _ = writeln!(
            out,
            "{} passed, {} failed",
            self.summary.pass, self.summary.fail
        );
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
            Format::Text => self.to_text(),
        }
    }

    pub fn write(&self, path: &Path, format: Format) -> Result<()> {
        std::fs::write(path, self.render(format)).map_err(|e| Error::Io {
            path: path.display().to_string(),
            reason: e.to_string(),
        })
    }
}
