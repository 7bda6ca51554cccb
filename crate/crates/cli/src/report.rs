//! Report serialization. Both formats are byte-stable for fixed inputs.

use std::io::Write;
use std::path::Path;

use emergent_algebra::limits::{ConvergenceReport, Rate};
use emergent_algebra::pansu::DerivativeProbe;
use emergent_algebra::AuditReport;
use serde::Serialize;

use crate::config::{ExperimentConfig, Format};
use crate::error::CliError;

/// Which table the CSV form carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Primary {
    Audit,
    Convergence,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub config: ExperimentConfig,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub audit: Option<AuditReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub convergence: Option<ConvergenceReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub probes: Vec<DerivativeProbe>,
    #[serde(skip)]
    pub primary: Primary,
}

impl Report {
    pub fn audit(config: ExperimentConfig, audit: AuditReport) -> Self {
        Report {
            config,
            passed: audit.all_passed(),
            audit: Some(audit),
            convergence: None,
            probes: Vec::new(),
            primary: Primary::Audit,
        }
    }

    /// The first failed check, or a failed convergence requirement.
    pub fn failure(&self) -> Option<String> {
        if self.passed {
            return None;
        }
        if let Some(c) = self.audit.as_ref().and_then(AuditReport::first_failure) {
            return Some(match &c.witness {
                Some(w) => format!("check `{}` failed: {w}", c.name),
                None => format!("check `{}` failed", c.name),
            });
        }
        Some("convergence requirement not met".into())
    }
}

fn join(v: &[f64]) -> String {
    v.iter().map(f64::to_string).collect::<Vec<_>>().join(" ")
}

fn rate_tag(r: &ConvergenceReport) -> String {
    if r.diverged {
        return "limit[diverged]".into();
    }
    match r.rate {
        Rate::Exact => "limit[exact]".into(),
        Rate::Order(p) => format!("limit[order={p}]"),
        Rate::Undetermined => "limit[undetermined]".into(),
    }
}

fn csv_error(e: csv::Error) -> CliError {
    CliError::Format(format!("csv serialization: {e}"))
}

/// `epsilon,value,residual`, one row per schedule scale, then a summary
/// row carrying the rate tag, the limit and the largest residual.
pub fn convergence_csv(r: &ConvergenceReport) -> Result<Vec<u8>, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["epsilon", "value", "residual"]).map_err(csv_error)?;
    for (j, (eps, value)) in r.epsilons.iter().zip(&r.values).enumerate() {
        let residual = r.residuals.get(j).map(f64::to_string).unwrap_or_default();
        w.write_record([eps.to_string(), join(value), residual]).map_err(csv_error)?;
    }
    let limit = r.limit.as_deref().map(join).unwrap_or_default();
    let sup = if r.residuals.is_empty() {
        String::new()
    } else {
        r.residuals.iter().fold(0.0f64, |m, &x| m.max(x)).to_string()
    };
    w.write_record([rate_tag(r), limit, sup]).map_err(csv_error)?;
    w.into_inner().map_err(|e| CliError::Format(e.to_string()))
}

/// `check,samples,status,witness`, one row per check.
pub fn audit_csv(a: &AuditReport) -> Result<Vec<u8>, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["check", "samples", "status", "witness"]).map_err(csv_error)?;
    for c in &a.checks {
        w.write_record([
            c.name.as_str(),
            &c.samples.to_string(),
            c.status(),
            c.witness.as_deref().unwrap_or(""),
        ])
        .map_err(csv_error)?;
    }
    w.into_inner().map_err(|e| CliError::Format(e.to_string()))
}

pub fn render(report: &Report, format: Format) -> Result<Vec<u8>, CliError> {
    match format {
        Format::Json => {
            let mut bytes = serde_json::to_vec_pretty(report)
                .map_err(|e| CliError::Format(format!("json serialization: {e}")))?;
            bytes.push(b'\n');
            Ok(bytes)
        }
        Format::Csv => match (report.primary, &report.convergence, &report.audit) {
            (Primary::Convergence, Some(c), _) => convergence_csv(c),
            (_, _, Some(a)) => audit_csv(a),
            (_, Some(c), None) => convergence_csv(c),
            (_, None, None) => audit_csv(&AuditReport::new(report.config.seed, 0.0)),
        },
    }
}

/// Writes `bytes` to `path`, or to `stdout` when no path is given.
pub fn write_output(bytes: &[u8], path: Option<&str>, stdout: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(Path::new(p), bytes).map_err(|e| CliError::io(p, e)),
        None => stdout.write_all(bytes).map_err(|e| CliError::io("<stdout>", e)),
    }
}

pub fn emit_report(report: &Report, format: Format, path: Option<&str>, stdout: &mut dyn Write) -> Result<(), CliError> {
    write_output(&render(report, format)?, path, stdout)
}
