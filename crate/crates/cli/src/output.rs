//! CSV and JSON emission. Numbers carry 17 significant digits so that
//! every f64 survives a round trip; absent values are empty cells.

use std::fs;
use std::io::{self, Write};
use std::path::Path;

use serde::Serialize;

use crate::cli::Format;
use crate::config::RunConfig;
use crate::Failure;

pub fn num(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn opt(x: Option<f64>) -> String {
    x.map(num).unwrap_or_default()
}

/// A header plus rows of preformatted cells.
#[derive(Debug, Default)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: Vec<&'static str>) -> Self {
        Self { header, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> Result<Vec<u8>, Failure> {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
        let write = |w: &mut csv::Writer<Vec<u8>>| -> csv::Result<()> {
            w.write_record(&self.header)?;
            for row in &self.rows {
                w.write_record(row)?;
            }
            w.flush()?;
            Ok(())
        };
        write(&mut w).map_err(|e| Failure::io(e.to_string()))?;
        w.into_inner().map_err(|e| Failure::io(e.to_string()))
    }
}

pub fn to_json<S: Serialize>(value: &S) -> Result<Vec<u8>, Failure> {
    let mut bytes = serde_json::to_vec_pretty(value).map_err(|e| Failure::io(e.to_string()))?;
    bytes.push(b'\n');
    Ok(bytes)
}

/// Writes the report in the configured format to the configured
/// destination.
pub fn emit<S: Serialize>(cfg: &RunConfig, table: &Table, json: &S) -> Result<(), Failure> {
    let bytes = match cfg.format {
        Format::Csv => table.to_csv()?,
        Format::Json => to_json(json)?,
    };
    match &cfg.out {
        Some(path) => write_file(path, &bytes),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(&bytes)?;
            out.flush()?;
            Ok(())
        }
    }
}

pub fn write_file(path: &Path, bytes: &[u8]) -> Result<(), Failure> {
    fs::write(path, bytes).map_err(|e| Failure::io(format!("cannot write {}: {e}", path.display())))
}
