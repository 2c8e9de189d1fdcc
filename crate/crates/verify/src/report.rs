//! Check reports, scan tables and their CSV / JSON encodings.

use serde::Serialize;

use crate::config::Format;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

/// Outcome of one check. A check that raised an error carries an infinite
/// residual.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub residual: f64,
    pub tol: f64,
    pub status: Status,
    pub ms: u64,
}

impl CheckReport {
    pub fn new(check: impl Into<String>, residual: f64, tol: f64, ms: u64) -> Self {
        Self {
            check: check.into(),
            residual,
            tol,
            status: Status::from_bool(residual <= tol),
            ms,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// One row of a convergence table. The last row of a scan holds the order
/// estimate in `ratio` and leaves `kappa` and `residual` empty.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanRow {
    pub check: String,
    pub kappa: Option<f64>,
    pub residual: Option<f64>,
    pub ratio: Option<f64>,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanTable {
    pub rows: Vec<ScanRow>,
}

impl ScanTable {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.status == Status::Pass)
    }

    /// The order estimate from the final row.
    pub fn order(&self) -> Option<f64> {
        self.rows.last().and_then(|r| r.ratio)
    }

    pub fn ratios(&self) -> Vec<f64> {
        self.rows.iter().filter(|r| r.kappa.is_some()).filter_map(|r| r.ratio).collect()
    }
}

fn num(x: f64) -> String {
    format!("{x:e}")
}

fn opt(x: Option<f64>) -> String {
    x.map(num).unwrap_or_default()
}

pub fn render_checks(reports: &[CheckReport], format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(reports).expect("reports serialise") + "\n",
        Format::Csv => {
            let mut w = csv::Writer::from_writer(vec![]);
            w.write_record(["check", "residual", "tol", "status", "ms"]).expect("in-memory write");
            for r in reports {
                w.write_record([
                    r.check.clone(),
                    num(r.residual),
                    num(r.tol),
                    r.status.as_str().to_string(),
                    r.ms.to_string(),
                ])
                .expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
        }
    }
}

pub fn render_scan(table: &ScanTable, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(&table.rows).expect("rows serialise") + "\n",
        Format::Csv => {
            let mut w = csv::Writer::from_writer(vec![]);
            w.write_record(["check", "kappa", "residual", "ratio", "status"]).expect("in-memory write");
            for r in &table.rows {
                w.write_record([
                    r.check.clone(),
                    opt(r.kappa),
                    opt(r.residual),
                    opt(r.ratio),
                    r.status.as_str().to_string(),
                ])
                .expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_follows_tolerance() {
        assert!(CheckReport::new("a", 1e-13, 1e-12, 0).passed());
        assert!(CheckReport::new("a", 1e-12, 1e-12, 0).passed());
        assert!(!CheckReport::new("a", 0.0 + 1e-300, 0.0, 0).passed());
        assert!(CheckReport::new("a", 0.0, 0.0, 0).passed());
        assert!(!CheckReport::new("a", f64::INFINITY, 1.0, 0).passed());
        assert!(!CheckReport::new("a", f64::NAN, 1.0, 0).passed());
    }

    #[test]
    fn csv_layout() {
        let out = render_checks(&[CheckReport::new("cybe", 0.0, 1e-14, 0)], Format::Csv);
        assert_eq!(out, "check,residual,tol,status,ms\ncybe,0e0,1e-14,pass,0\n");
        let table = ScanTable {
            rows: vec![ScanRow {
                check: "bch".into(),
                kappa: Some(0.1),
                residual: Some(2e-5),
                ratio: None,
                status: Status::Pass,
            }],
        };
        assert_eq!(render_scan(&table, Format::Csv), "check,kappa,residual,ratio,status\nbch,1e-1,2e-5,,pass\n");
    }
}
