//! Parameter sweeps: rerun one configuration with a single dotted key
//! (`h`, `flux.a`, `initial.amplitude`, ...) set to each of several values.

use super::config::ExperimentConfig;
use super::run::{run, RunOutput};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Sweep {
    pub key: String,
    pub values: Vec<toml::Value>,
}

fn parse_scalar(text: &str) -> toml::Value {
    let doc = format!("v = {text}");
    toml::from_str::<toml::Table>(&doc)
        .ok()
        .and_then(|mut t| t.remove("v"))
        .unwrap_or_else(|| toml::Value::String(text.to_string()))
}

/// Parses `key=v1,v2,...`.
pub fn parse_sweep(spec: &str) -> Result<Sweep> {
    let (key, list) = spec.split_once('=').ok_or_else(|| {
        Error::config(
            "--sweep",
            format!("expected <param>=<v1,v2,...>, got `{spec}`"),
        )
    })?;
    let key = key.trim();
    if key.is_empty() {
        return Err(Error::config("--sweep", "empty parameter name"));
    }
    let values: Vec<_> = list
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(parse_scalar)
        .collect();
    if values.is_empty() {
        return Err(Error::config("--sweep", "no values given"));
    }
    Ok(Sweep {
        key: key.to_string(),
        values,
    })
}

/// Sets `key` (dot-separated path) in a parsed document.
pub fn apply_override(doc: &mut toml::Value, key: &str, value: toml::Value) -> Result<()> {
    let mut parts = key.split('.').peekable();
    let mut cur = doc;
    while let Some(part) = parts.next() {
        let table = cur
            .as_table_mut()
            .ok_or_else(|| Error::config(key, format!("`{part}` is not inside a table")))?;
        if parts.peek().is_none() {
            table.insert(part.to_string(), value);
            return Ok(());
        }
        cur = table
            .entry(part.to_string())
            .or_insert_with(|| toml::Value::Table(toml::Table::new()));
    }
    Err(Error::config(key, "empty key"))
}

pub fn value_label(v: &toml::Value) -> String {
    match v {
        toml::Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Runs every sweep member concurrently. Results come back in the order of
/// `sweep.values`, each labelled with its value.
pub fn run_sweep(base: &toml::Value, sweep: &Sweep) -> Vec<(String, Result<RunOutput>)> {
    std::thread::scope(|s| {
        let jobs: Vec<_> = sweep
            .values
            .iter()
            .map(|value| {
                let label = value_label(value);
                let handle = s.spawn(move || {
                    let mut doc = base.clone();
                    apply_override(&mut doc, &sweep.key, value.clone())?;
                    let cfg = ExperimentConfig::from_value(doc)?;
                    run(&cfg)
                });
                (label, handle)
            })
            .collect();
        jobs.into_iter()
            .map(|(label, h)| (label, h.join().expect("sweep member panicked")))
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_numbers_and_strings() {
        let s = parse_sweep("h=0.1, 0.05").unwrap();
        assert_eq!(s.key, "h");
        assert_eq!(
            s.values,
            [toml::Value::Float(0.1), toml::Value::Float(0.05)]
        );
        let s = parse_sweep("flux.name=burgers,\"linear\"").unwrap();
        assert_eq!(
            s.values,
            [
                toml::Value::String("burgers".into()),
                toml::Value::String("linear".into())
            ]
        );
        let s = parse_sweep("steps=2,3").unwrap();
        assert_eq!(s.values, [toml::Value::Integer(2), toml::Value::Integer(3)]);
        assert!(parse_sweep("h").is_err());
        assert!(parse_sweep("h=").is_err());
    }

    #[test]
    fn override_nested_key() {
        let mut doc: toml::Value =
            toml::from_str("h = 0.1\n[flux]\nname = \"linear\"\na = 1.0").unwrap();
        apply_override(&mut doc, "flux.a", toml::Value::Float(2.0)).unwrap();
        apply_override(&mut doc, "h", toml::Value::Float(0.05)).unwrap();
        assert_eq!(doc["flux"]["a"].as_float(), Some(2.0));
        assert_eq!(doc["h"].as_float(), Some(0.05));
        assert!(apply_override(&mut doc, "h.x", toml::Value::Float(1.0)).is_err());
    }
}
