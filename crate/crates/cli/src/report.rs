//! Verification reports: a grid of measured-versus-expected points with a
//! deterministic text table and a machine-readable JSON form.

use std::fmt::Write as _;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RowStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct GridRow {
    pub point: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub measured: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    pub status: RowStatus,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub rows: Vec<GridRow>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, rows: Vec<GridRow>) -> Self {
        let passed = rows.iter().filter(|r| r.status == RowStatus::Pass).count();
        let failed = rows.iter().filter(|r| r.status == RowStatus::Fail).count();
        let skipped = rows.iter().filter(|r| r.status == RowStatus::Skipped).count();
        VerificationReport {
            suite: suite.into(),
            rows,
            passed,
            failed,
            skipped,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite: {}", self.suite);
        let width = self
            .rows
            .iter()
            .map(|r| r.point.len())
            .max()
            .unwrap_or(5)
            .max("point".len());
        let point_header = "point";
        let _ = writeln!(
            out,
            "{point_header:width$}  expected  measured  status   witness/detail"
        );
        for row in &self.rows {
            let expected = row
                .expected
                .map(|v| v.to_string())
                .unwrap_or_else(|| "-".into());
            let measured = row
                .measured
                .map(|v| v.to_string())
                .unwrap_or_else(|| "-".into());
            let status = match row.status {
                RowStatus::Pass => "pass",
                RowStatus::Fail => "FAIL",
                RowStatus::Skipped => "skipped",
            };
            let mut tail = row.witness.clone().unwrap_or_default();
            if let Some(detail) = &row.detail {
                if !tail.is_empty() {
                    tail.push_str("  ");
                }
                tail.push_str(detail);
            }
            let _ = writeln!(
                out,
                "{:width$}  {:>8}  {:>8}  {:7}  {}",
                row.point, expected, measured, status, tail
            );
        }
        let _ = writeln!(
            out,
            "summary: {} pass, {} fail, {} skipped",
            self.passed, self.failed, self.skipped
        );
        out
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }
}
