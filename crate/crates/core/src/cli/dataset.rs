//! CSV and JSON dataset ingestion.
//!
//! CSV: header row with `re_a` and `re_b` required, `im_a`, `im_b` (default
//! 0) and `weight` (default 1) optional, in any order.
//!
//! JSON: `{"a": [[re, im], ...], "b": [[re, im], ...], "w": [...]}` with
//! `w` optional. A bare number is accepted for a real entry.

use std::io::Read;
use std::path::Path;

use serde::Deserialize;

use crate::data::{ComplexScalar, WeightedDataset};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum DataFormat {
    Csv,
    Json,
}

impl DataFormat {
    /// `.json` means JSON, anything else CSV.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("json") => DataFormat::Json,
            _ => DataFormat::Csv,
        }
    }
}

pub fn parse_dataset(path: &Path, format: DataFormat) -> Result<WeightedDataset> {
    let mut text = String::new();
    std::fs::File::open(path)?.read_to_string(&mut text)?;
    match format {
        DataFormat::Csv => parse_csv(&text),
        DataFormat::Json => parse_json(&text),
    }
}

const COLUMNS: [&str; 5] = ["re_a", "im_a", "re_b", "im_b", "weight"];

pub fn parse_csv(text: &str) -> Result<WeightedDataset> {
    if text.trim().is_empty() {
        return Err(Error::parse("line 1", "empty input"));
    }
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let headers = reader.headers().map_err(|e| Error::parse("line 1", e.to_string()))?.clone();
    // Column index of each known field.
    let mut index = [None; 5];
    for (k, name) in headers.iter().enumerate() {
        let Some(slot) = COLUMNS.iter().position(|c| *c == name) else {
            return Err(Error::parse(format!("line 1, field {}", k + 1), format!("unknown column '{name}'")));
        };
        if index[slot].replace(k).is_some() {
            return Err(Error::parse(format!("line 1, field {}", k + 1), format!("duplicate column '{name}'")));
        }
    }
    for required in [0, 2] {
        if index[required].is_none() {
            return Err(Error::parse("line 1", format!("missing column '{}'", COLUMNS[required])));
        }
    }

    let (mut a, mut b, mut w) = (Vec::new(), Vec::new(), Vec::new());
    for record in reader.records() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line());
            Error::parse(format!("line {line}"), e.to_string())
        })?;
        let line = record.position().map_or(0, |p| p.line());
        let field = |slot: usize, default: f64| -> Result<f64> {
            let Some(k) = index[slot] else {
                return Ok(default);
            };
            let raw = record.get(k).unwrap_or("");
            if raw.is_empty() && slot != 0 && slot != 2 {
                return Ok(default);
            }
            raw.parse::<f64>().map_err(|_| {
                Error::parse(format!("line {line}, field {}", COLUMNS[slot]), format!("not a number: '{raw}'"))
            })
        };
        a.push(ComplexScalar::new(field(0, 0.0)?, field(1, 0.0)?));
        b.push(ComplexScalar::new(field(2, 0.0)?, field(3, 0.0)?));
        w.push(field(4, 1.0)?);
    }
    if a.is_empty() {
        return Err(Error::parse("line 2", "no data rows"));
    }
    WeightedDataset::new(a, b, w)
}

#[derive(Deserialize)]
#[serde(untagged)]
enum JsonScalar {
    Real(f64),
    Pair([f64; 2]),
}

impl From<JsonScalar> for ComplexScalar {
    fn from(s: JsonScalar) -> Self {
        match s {
            JsonScalar::Real(re) => ComplexScalar::new(re, 0.0),
            JsonScalar::Pair([re, im]) => ComplexScalar::new(re, im),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonDataset {
    a: Vec<JsonScalar>,
    b: Vec<JsonScalar>,
    w: Option<Vec<f64>>,
}

pub fn parse_json(text: &str) -> Result<WeightedDataset> {
    let raw: JsonDataset = serde_json::from_str(text)
        .map_err(|e| Error::parse(format!("line {}, column {}", e.line(), e.column()), e.to_string()))?;
    let a: Vec<ComplexScalar> = raw.a.into_iter().map(Into::into).collect();
    let b: Vec<ComplexScalar> = raw.b.into_iter().map(Into::into).collect();
    let w = raw.w.unwrap_or_else(|| vec![1.0; a.len()]);
    WeightedDataset::new(a, b, w)
}
