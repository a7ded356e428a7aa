//! CSV serialization of result tables.
//!
//! Plain RFC-4180-style output: a header row followed by numeric rows, all
//! values in scientific notation with 13 significant digits so any reader
//! reconstructs the numbers losslessly and identical runs produce
//! byte-identical files.

use std::fs;
use std::io;
use std::path::Path;

use crate::sweep::SweepResult;

/// Renders columns and rows as a CSV string.
pub fn csv_string<S: AsRef<str>>(columns: &[S], rows: &[Vec<f64>]) -> String {
    let mut out = String::new();
    for (i, c) in columns.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(c.as_ref());
    }
    out.push('\n');
    for row in rows {
        for (i, v) in row.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&format!("{v:.12e}"));
        }
        out.push('\n');
    }
    out
}

/// Renders a sweep result as CSV.
pub fn sweep_csv(result: &SweepResult) -> String {
    csv_string(&result.columns, &result.rows)
}

/// Writes a CSV file in one shot; a half-written file is removed on error.
pub fn write_csv<S: AsRef<str>>(
    path: &Path,
    columns: &[S],
    rows: &[Vec<f64>],
) -> io::Result<()> {
    let body = csv_string(columns, rows);
    match fs::write(path, body) {
        Ok(()) => Ok(()),
        Err(e) => {
            let _ = fs::remove_file(path);
            Err(e)
        }
    }
}
