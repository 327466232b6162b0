//! Experiment harness: configuration, the end-to-end run, CSV and text
//! reports, and parameter sweeps. [`execute`] is what the command-line
//! binary calls.

mod config;
mod report_csv;
mod run;
mod summary;
mod sweep;

use std::io::Write;
use std::path::{Path, PathBuf};

pub use config::{BoundarySpec, Domain, ExperimentConfig, FluxSpec, InitialData, Outputs};
pub use report_csv::{emit_csv, format_real, write_csv, CSV_HEADER};
pub use run::{run, CostCounters, RunOutput};
pub use summary::summarize;
pub use sweep::{apply_override, parse_sweep, run_sweep, value_label, Sweep};

use crate::error::{Error, Result};

/// Arguments of the `run` command.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct RunRequest {
    pub config: PathBuf,
    pub out_dir: PathBuf,
    pub csv: bool,
    pub summary: bool,
    pub sweep: Option<String>,
}

/// Outcome of [`execute`]: whether every enabled bound check passed in
/// every run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Outcome {
    pub runs: usize,
    pub all_passed: bool,
}

fn sanitize(label: &str) -> String {
    label
        .chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || ".-_".contains(c) {
                c
            } else {
                '_'
            }
        })
        .collect()
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn emit(
    req: &RunRequest,
    cfg_outputs: &Outputs,
    suffix: Option<&str>,
    title: &str,
    out: &RunOutput,
    stdout: &mut dyn Write,
) -> Result<()> {
    let name = |file: &str| -> PathBuf {
        match suffix {
            None => req.out_dir.join(file),
            Some(sfx) => {
                let p = Path::new(file);
                let stem = p.file_stem().and_then(|s| s.to_str()).unwrap_or("report");
                let ext = p.extension().and_then(|s| s.to_str()).unwrap_or("csv");
                req.out_dir.join(format!("{stem}-{sfx}.{ext}"))
            }
        }
    };
    if req.csv {
        emit_csv(&out.report, &name(&cfg_outputs.csv))?;
    }
    let text = summarize(&out.report, &out.counters, &out.cfl());
    if let Some(file) = &cfg_outputs.summary {
        write_file(&name(file), &text)?;
    }
    let verdict = if out.report.all_passed() {
        "all checks passed"
    } else {
        "BOUND VIOLATED"
    };
    let io = |e: std::io::Error| Error::Io {
        path: PathBuf::from("<stdout>"),
        source: e,
    };
    if req.summary {
        writeln!(stdout, "== {title} ==\n{text}").map_err(io)?;
    } else {
        writeln!(stdout, "{title}: {verdict}").map_err(io)?;
    }
    Ok(())
}

/// Loads the configuration, runs it (or each sweep member), writes the
/// requested outputs and reports whether all bounds held.
pub fn execute(req: &RunRequest, stdout: &mut dyn Write) -> Result<Outcome> {
    let text = std::fs::read_to_string(&req.config).map_err(|source| Error::Io {
        path: req.config.clone(),
        source,
    })?;
    let doc: toml::Value =
        toml::from_str(&text).map_err(|e| Error::config("<document>", e.message()))?;
    std::fs::create_dir_all(&req.out_dir).map_err(|source| Error::Io {
        path: req.out_dir.clone(),
        source,
    })?;
    let title = req.config.display().to_string();

    match &req.sweep {
        None => {
            let cfg = ExperimentConfig::from_value(doc)?;
            let out = run(&cfg)?;
            emit(req, &cfg.outputs, None, &title, &out, stdout)?;
            Ok(Outcome {
                runs: 1,
                all_passed: out.report.all_passed(),
            })
        }
        Some(spec) => {
            let sweep = parse_sweep(spec)?;
            let outputs: Outputs = match doc.get("outputs") {
                Some(v) => v
                    .clone()
                    .try_into()
                    .map_err(|e: toml::de::Error| Error::config("outputs", e.message()))?,
                None => Outputs::default(),
            };
            let results = run_sweep(&doc, &sweep);
            let mut all_passed = true;
            for (label, result) in &results {
                let out = result.as_ref().map_err(|e| {
                    Error::config(sweep.key.clone(), format!("sweep value {label}: {e}"))
                })?;
                let suffix = format!("{}={}", sweep.key, sanitize(label));
                let member_title = format!("{title} [{}={label}]", sweep.key);
                emit(req, &outputs, Some(&suffix), &member_title, out, stdout)?;
                all_passed &= out.report.all_passed();
            }
            Ok(Outcome {
                runs: results.len(),
                all_passed,
            })
        }
    }
}
