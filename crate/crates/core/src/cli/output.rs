use std::fs;
use std::path::{Path, PathBuf};

use super::CliError;

/// Nine significant digits in scientific notation; infinities print as `inf`.
pub fn format_number(x: f64) -> String {
    if x.is_infinite() {
        if x > 0.0 { "inf" } else { "-inf" }.to_string()
    } else if x.is_nan() {
        "nan".to_string()
    } else {
        format!("{x:.8e}")
    }
}

/// Writes a header and rows to `dir/name`, checking every row against the header width.
pub(crate) fn write_csv(dir: &Path, name: &str, header: &[String], rows: &[Vec<String>]) -> Result<PathBuf, CliError> {
    let io = |e: &dyn std::fmt::Display| CliError::Output(format!("{}: {e}", dir.join(name).display()));
    fs::create_dir_all(dir).map_err(|e| io(&e))?;
    let path = dir.join(name);
    let mut w = csv::Writer::from_path(&path).map_err(|e| io(&e))?;
    w.write_record(header).map_err(|e| io(&e))?;
    for r in rows {
        if r.len() != header.len() {
            return Err(CliError::Output(format!("{name}: row has {} fields, header has {}", r.len(), header.len())));
        }
        w.write_record(r).map_err(|e| io(&e))?;
    }
    w.flush().map_err(|e| io(&e))?;
    Ok(path)
}

pub(crate) fn write_text(dir: &Path, name: &str, text: &str) -> Result<PathBuf, CliError> {
    let path = dir.join(name);
    fs::create_dir_all(dir)
        .and_then(|_| fs::write(&path, text))
        .map_err(|e| CliError::Output(format!("{}: {e}", path.display())))?;
    Ok(path)
}

/// Column label for a capacitance, e.g. `0.25fF`.
pub(crate) fn cap_label(ff: f64) -> String {
    format!("{ff}fF")
}
