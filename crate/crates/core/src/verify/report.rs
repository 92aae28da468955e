use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub mu: f64,
    pub nu: f64,
    pub x: f64,
    /// Relative margin (negative beyond the error budget).
    pub margin: f64,
}

/// Outcome of sweeping one claim over a grid.
///
/// `min_margin` and violation margins are relative: the signed slack of the
/// claim divided by the magnitude of the compared quantity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub claim_id: String,
    pub passed: bool,
    pub points_checked: usize,
    pub min_margin: f64,
    pub violations: Vec<Violation>,
    /// Bound/target ratio farthest from 1 at the smallest grid x, over the
    /// sides flagged sharp as x ↓ 0.
    pub sharpness_ratio_at_min_x: Option<f64>,
}

impl SweepReport {
    pub(crate) fn new(claim_id: impl Into<String>) -> Self {
        Self {
            claim_id: claim_id.into(),
            passed: true,
            points_checked: 0,
            min_margin: f64::INFINITY,
            violations: Vec::new(),
            sharpness_ratio_at_min_x: None,
        }
    }

    pub(crate) fn record(&mut self, mu: f64, nu: f64, x: f64, margin: f64, violated: bool) {
        self.points_checked += 1;
        if margin < self.min_margin || self.min_margin.is_nan() {
            self.min_margin = margin;
        }
        if violated {
            self.violations.push(Violation { mu, nu, x, margin });
        }
    }

    pub(crate) fn record_sharpness(&mut self, ratio: f64) {
        let worse = match self.sharpness_ratio_at_min_x {
            None => true,
            Some(r) => (ratio - 1.0).abs() > (r - 1.0).abs(),
        };
        if worse {
            self.sharpness_ratio_at_min_x = Some(ratio);
        }
    }

    pub(crate) fn finish(mut self) -> Self {
        self.passed = self.violations.is_empty();
        self
    }
}

/// One CSV row: report columns plus one violation (empty when there is none).
#[derive(Serialize)]
struct CsvRow<'a> {
    claim_id: &'a str,
    passed: bool,
    points_checked: usize,
    min_margin: f64,
    sharpness_ratio_at_min_x: Option<f64>,
    mu: Option<f64>,
    nu: Option<f64>,
    x: Option<f64>,
    margin: Option<f64>,
}

pub fn to_json(reports: &[SweepReport]) -> Result<String> {
    Ok(serde_json::to_string_pretty(reports)?)
}

pub fn write_csv<W: Write>(reports: &[SweepReport], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in reports {
        let base = CsvRow {
            claim_id: &r.claim_id,
            passed: r.passed,
            points_checked: r.points_checked,
            min_margin: r.min_margin,
            sharpness_ratio_at_min_x: r.sharpness_ratio_at_min_x,
            mu: None,
            nu: None,
            x: None,
            margin: None,
        };
        if r.violations.is_empty() {
            w.serialize(&base)?;
        }
        for v in &r.violations {
            w.serialize(CsvRow {
                mu: Some(v.mu),
                nu: Some(v.nu),
                x: Some(v.x),
                margin: Some(v.margin),
                ..base
            })?;
        }
    }
    w.flush()?;
    Ok(())
}

/// Writes reports as JSON or CSV, chosen by the file extension.
pub fn write_reports(reports: &[SweepReport], path: &Path) -> Result<()> {
    match path.extension().and_then(|e| e.to_str()) {
        Some("json") => {
            let mut s = to_json(reports)?;
            s.push('\n');
            std::fs::write(path, s)?;
            Ok(())
        }
        Some("csv") => write_csv(reports, std::fs::File::create(path)?),
        _ => Err(Error::Domain(format!(
            "output path must end in .json or .csv, got {}",
            path.display()
        ))),
    }
}
