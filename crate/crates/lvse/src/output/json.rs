use std::fs;
use std::io::Write as _;
use std::path::Path;

use jsonschema::JSONSchema;

use crate::error::{Error, Result};

/// The report schema shipped with the crate (also on disk under
/// `schemas/report.schema.json`).
pub const REPORT_SCHEMA: &str = include_str!("../../schemas/report.schema.json");

fn compiled_schema() -> &'static JSONSchema {
    static CELL: std::sync::OnceLock<JSONSchema> = std::sync::OnceLock::new();
    CELL.get_or_init(|| {
        let schema: serde_json::Value =
            serde_json::from_str(REPORT_SCHEMA).expect("shipped schema is valid JSON");
        JSONSchema::compile(&schema).expect("shipped schema compiles")
    })
}

/// One measured quantity with its pass criterion.
#[derive(Debug, Clone, serde::Serialize)]
pub struct CheckResult {
    pub name: String,
    pub value: f64,
    pub criterion: String,
    pub pass: bool,
}

impl CheckResult {
    pub fn le(name: &str, value: f64, bound: f64) -> Self {
        CheckResult {
            name: name.to_string(),
            value,
            criterion: format!("<= {bound:e}"),
            pass: value <= bound,
        }
    }

    pub fn ge(name: &str, value: f64, bound: f64) -> Self {
        CheckResult {
            name: name.to_string(),
            value,
            criterion: format!(">= {bound:e}"),
            pass: value >= bound,
        }
    }

    pub fn in_range(name: &str, value: f64, lo: f64, hi: f64) -> Self {
        CheckResult {
            name: name.to_string(),
            value,
            criterion: format!("in [{lo}, {hi}]"),
            pass: (lo..=hi).contains(&value),
        }
    }

    pub fn exactly_zero(name: &str, value: f64) -> Self {
        CheckResult {
            name: name.to_string(),
            value,
            criterion: "= 0".to_string(),
            pass: value == 0.0,
        }
    }

    pub fn positive(name: &str, value: f64) -> Self {
        CheckResult {
            name: name.to_string(),
            value,
            criterion: "> 0".to_string(),
            pass: value > 0.0,
        }
    }

    /// For studies expected to bottom out at machine precision instead of
    /// producing an order.
    pub fn floor_expected(name: &str, hit_floor: bool) -> Self {
        CheckResult {
            name: name.to_string(),
            value: 0.0,
            criterion: "machine-precision floor reached".to_string(),
            pass: hit_floor,
        }
    }
}

/// Validate a report against the shipped schema.
pub fn validate_report(value: &serde_json::Value) -> Result<()> {
    if let Err(errors) = compiled_schema().validate(value) {
        let msgs: Vec<String> = errors.map(|e| e.to_string()).collect();
        return Err(Error::Schema(msgs.join("; ")));
    }
    Ok(())
}

/// Serialize, validate and write a report with a trailing newline. The
/// output is byte-deterministic: struct field order is fixed and floats
/// print in shortest round-trip form.
pub fn write_report<T: serde::Serialize>(report: &T, path: &Path) -> Result<()> {
    let value = serde_json::to_value(report)
        .map_err(|e| Error::Schema(format!("report serialization failed: {e}")))?;
    validate_report(&value)?;
    let mut body = serde_json::to_string_pretty(&value)
        .map_err(|e| Error::Schema(format!("report serialization failed: {e}")))?;
    body.push('\n');
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent)?;
    }
    let mut file = fs::File::create(path)?;
    file.write_all(body.as_bytes())?;
    Ok(())
}
