//! Machine- and human-readable verification reports.
//!
//! A report is a flat list of rows `{id, anchor, status, value, bound,
//! margin, witness}` plus a config echo and summary counts. Reports are
//! deterministic for a fixed config and seed: suites derive all randomness
//! from per-row counters, and serialization has no timestamps or ordering
//! freedom.

use std::fmt::Write as _;

use serde::Serialize;

use freemetric_core::Limits;

#[derive(Serialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Reported measurement with no pass/fail semantics.
    Info,
    Skip,
}

pub fn status(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

/// One named check. `anchor` ties the row to the inequality it exercises
/// (`ng`, `double`, `xyc`, `fmk`, ...), for grepping across reports.
#[derive(Serialize, Clone, Debug)]
pub struct Row {
    pub id: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub anchor: Option<&'static str>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub margin: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Row {
    pub fn new(id: impl Into<String>, status: Status) -> Row {
        Row {
            id: id.into(),
            anchor: None,
            status,
            value: None,
            bound: None,
            margin: None,
            witness: None,
        }
    }

    pub fn anchor(mut self, anchor: &'static str) -> Row {
        self.anchor = Some(anchor);
        self
    }

    pub fn value(mut self, value: f64) -> Row {
        self.value = Some(value);
        self
    }

    pub fn bound(mut self, bound: f64) -> Row {
        self.bound = Some(bound);
        self
    }

    pub fn margin(mut self, margin: f64) -> Row {
        self.margin = Some(margin);
        self
    }

    pub fn witness(mut self, witness: impl Into<String>) -> Row {
        self.witness = Some(witness.into());
        self
    }
}

#[derive(Serialize, Clone, Copy, Debug)]
pub struct LimitsEcho {
    pub ball_radius: usize,
    pub ball_words: u64,
    pub dp_len: usize,
    pub oracle_len: usize,
}

impl From<Limits> for LimitsEcho {
    fn from(l: Limits) -> Self {
        LimitsEcho {
            ball_radius: l.ball_radius,
            ball_words: l.ball_words,
            dp_len: l.dp_len,
            oracle_len: l.oracle_len,
        }
    }
}

/// Echo of everything that determines a report.
#[derive(Serialize, Clone, Debug)]
pub struct ReportConfig {
    pub suite: String,
    pub seed: u64,
    pub rank: usize,
    pub limits: LimitsEcho,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub walk_steps: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub walk_trials: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub walk_exact: Option<bool>,
}

#[derive(Serialize, Clone, Copy, Debug, Default)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub info: usize,
    pub skip: usize,
}

#[derive(Serialize, Clone, Debug)]
pub struct Report {
    pub version: &'static str,
    pub config: ReportConfig,
    pub rows: Vec<Row>,
    pub summary: Summary,
}

impl Report {
    pub fn new(config: ReportConfig, rows: Vec<Row>) -> Report {
        let mut summary = Summary {
            total: rows.len(),
            ..Summary::default()
        };
        for row in &rows {
            match row.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Info => summary.info += 1,
                Status::Skip => summary.skip += 1,
            }
        }
        Report {
            version: env!("CARGO_PKG_VERSION"),
            config,
            rows,
            summary,
        }
    }

    /// 0 when every hard assertion passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.summary.fail == 0 {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer
            .write_record(["id", "anchor", "status", "value", "bound", "margin", "witness"])
            .expect("csv header");
        for row in &self.rows {
            let status = match row.status {
                Status::Pass => "pass",
                Status::Fail => "fail",
                Status::Info => "info",
                Status::Skip => "skip",
            };
            writer
                .write_record([
                    row.id.as_str(),
                    row.anchor.unwrap_or(""),
                    status,
                    &row.value.map(|v| v.to_string()).unwrap_or_default(),
                    &row.bound.map(|v| v.to_string()).unwrap_or_default(),
                    &row.margin.map(|v| v.to_string()).unwrap_or_default(),
                    row.witness.as_deref().unwrap_or(""),
                ])
                .expect("csv row");
        }
        String::from_utf8(writer.into_inner().expect("csv flush")).expect("csv utf8")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite {} (seed {})", self.config.suite, self.config.seed);
        for row in &self.rows {
            let status = match row.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Info => "info",
                Status::Skip => "skip",
            };
            let _ = write!(out, "[{status}] {:<42}", row.id);
            if let Some(anchor) = row.anchor {
                let _ = write!(out, " [{anchor}]");
            }
            if let Some(v) = row.value {
                let _ = write!(out, " value={v}");
            }
            if let Some(b) = row.bound {
                let _ = write!(out, " bound={b}");
            }
            if let Some(m) = row.margin {
                let _ = write!(out, " margin={m}");
            }
            if let Some(w) = &row.witness {
                let _ = write!(out, " witness={w}");
            }
            let _ = writeln!(out);
        }
        let s = self.summary;
        let _ = writeln!(
            out,
            "{} rows: {} pass, {} fail, {} info, {} skip",
            s.total, s.pass, s.fail, s.info, s.skip
        );
        out
    }
}
