//! Plot-data CSV: header `x,E,<m>,relerr_<m>,...`, LF line endings, floats
//! in `{:.16e}` form (17 significant digits, locale independent).

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use super::sweep::SweepReport;
use crate::error::{Error, Result};

fn fmt_float(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn header(report: &SweepReport) -> String {
    let mut fields = vec!["x".to_string(), "E".to_string()];
    for c in &report.columns {
        let label = c.method.label();
        fields.push(label.clone());
        fields.push(format!("relerr_{label}"));
    }
    fields.join(",")
}

pub fn write_csv<W: Write>(report: &SweepReport, mut out: W) -> std::io::Result<()> {
    writeln!(out, "{}", header(report))?;
    for (i, x) in report.grid.iter().enumerate() {
        let mut row = vec![fmt_float(*x), fmt_float(report.truth[i])];
        for c in &report.columns {
            row.push(fmt_float(c.values[i]));
            row.push(fmt_float(c.relative_errors[i]));
        }
        writeln!(out, "{}", row.join(","))?;
    }
    out.flush()
}

pub fn to_csv_string(report: &SweepReport) -> Result<String> {
    if report.grid.is_empty() {
        return Err(Error::EmptyReport);
    }
    let mut buf = Vec::new();
    write_csv(report, &mut buf).expect("writing to memory");
    Ok(String::from_utf8(buf).expect("ascii output"))
}

pub fn emit_csv(report: &SweepReport, destination: &Path) -> Result<()> {
    if report.grid.is_empty() {
        return Err(Error::EmptyReport);
    }
    let io_err = |e: std::io::Error| Error::Io {
        path: destination.display().to_string(),
        message: e.to_string(),
    };
    let file = File::create(destination).map_err(io_err)?;
    write_csv(report, BufWriter::new(file)).map_err(io_err)
}
