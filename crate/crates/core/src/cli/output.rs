//! CSV and JSON writers. Files are written to a temporary sibling and renamed
//! into place, so readers never see a partial file.

use crate::error::{Error, Result};
use crate::integrators::Trajectory;
use serde::Serialize;
use std::io::Write;
use std::path::Path;

/// Shortest decimal string that parses back to the same `f64`.
///
/// Plain notation for `1e-5 <= |x| < 1e16` and zero, exponent notation
/// otherwise, so no field carries more than 17 significant digits.
pub fn format_float(x: f64) -> String {
    let a = x.abs();
    if x == 0.0 || (1e-5..1e16).contains(&a) || !x.is_finite() {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

fn persist(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| Error::Io(e.error))?;
    Ok(())
}

/// Renders a header and rows of fields as CSV with LF line endings.
pub fn csv_bytes<R, F>(header: &[&str], rows: R) -> Result<Vec<u8>>
where
    R: IntoIterator<Item = Vec<F>>,
    F: AsRef<[u8]>,
{
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    w.into_inner().map_err(|e| Error::Io(e.into_error()))
}

pub fn write_csv<R, F>(path: &Path, header: &[&str], rows: R) -> Result<()>
where
    R: IntoIterator<Item = Vec<F>>,
    F: AsRef<[u8]>,
{
    persist(path, &csv_bytes(header, rows)?)
}

/// `t,x1,...,xd`, one row per grid point.
pub fn trajectory_csv(tr: &Trajectory) -> Result<Vec<u8>> {
    let dim = tr.states.first().map_or(0, |s| s.dimension());
    let names: Vec<String> = std::iter::once("t".to_string()).chain((1..=dim).map(|i| format!("x{i}"))).collect();
    let header: Vec<&str> = names.iter().map(String::as_str).collect();
    let rows =
        tr.times.iter().zip(&tr.states).map(|(&t, s)| std::iter::once(t).chain(s.0.iter().copied()).map(format_float).collect::<Vec<_>>());
    csv_bytes(&header, rows)
}

pub fn write_trajectory_csv(path: &Path, tr: &Trajectory) -> Result<()> {
    persist(path, &trajectory_csv(tr)?)
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut bytes = serde_json::to_vec_pretty(value)?;
    bytes.push(b'\n');
    persist(path, &bytes)
}

/// A numeric CSV as written by this module.
#[derive(Debug, Clone, PartialEq)]
pub struct NumericTable {
    pub header: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl NumericTable {
    pub fn parse(bytes: &[u8]) -> Result<Self> {
        let mut r = csv::ReaderBuilder::new().has_headers(true).from_reader(bytes);
        let header = r.headers()?.iter().map(str::to_string).collect();
        let mut rows = Vec::new();
        for rec in r.records() {
            let rec = rec?;
            let row = rec
                .iter()
                .map(|f| f.parse::<f64>().map_err(|e| Error::Config(format!("bad number `{f}`: {e}"))))
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        Ok(Self { header, rows })
    }

    pub fn to_bytes(&self) -> Result<Vec<u8>> {
        let header: Vec<&str> = self.header.iter().map(String::as_str).collect();
        csv_bytes(&header, self.rows.iter().map(|r| r.iter().copied().map(format_float).collect::<Vec<_>>()))
    }
}
