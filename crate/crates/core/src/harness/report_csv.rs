//! Per-subnode CSV report.
//!
//! One row per `(j, m)` with `m = 0..=r` for every interior piece; nodes
//! shared by neighbouring pieces therefore appear twice. Reals are written
//! in scientific notation with 17 significant digits, so values survive a
//! round trip through `f64` parsing unchanged.

use std::fs::File;
use std::io::Write;
use std::path::Path;

use crate::bounds::{BoundReport, SubnodeRecord};
use crate::error::{Error, Result};

pub const CSV_HEADER: [&str; 11] = [
    "j",
    "m",
    "x",
    "t_m",
    "v_m",
    "u_m",
    "abs_err",
    "thm1_bound",
    "cor4_bound",
    "cor5_bound",
    "turbulent",
];

pub fn format_real(v: f64) -> String {
    format!("{v:.16e}")
}

fn optional(v: Option<f64>) -> String {
    v.map(format_real).unwrap_or_default()
}

fn row(rec: &SubnodeRecord) -> [String; 11] {
    [
        rec.j.to_string(),
        rec.m.to_string(),
        format_real(rec.x),
        format_real(rec.t),
        format_real(rec.v),
        format_real(rec.u),
        format_real(rec.abs_err),
        format_real(rec.thm1),
        optional(rec.cor4),
        optional(rec.cor5),
        u8::from(rec.turbulent).to_string(),
    ]
}

/// Writes the report to any sink.
pub fn write_csv<W: Write>(report: &BoundReport, sink: W) -> csv::Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(sink);
    w.write_record(CSV_HEADER)?;
    for rec in &report.records {
        w.write_record(row(rec))?;
    }
    w.flush()?;
    Ok(())
}

pub fn emit_csv(report: &BoundReport, path: &Path) -> Result<()> {
    let file = File::create(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    write_csv(report, file).map_err(|source| Error::Csv {
        path: path.to_path_buf(),
        source,
    })
}
