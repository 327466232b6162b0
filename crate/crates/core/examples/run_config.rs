//! Runs a TOML experiment file and prints its summary.
//!
//! ```text
//! cargo run --example run_config -- crates/core/configs/linear_stable_table.toml
//! ```

use std::path::PathBuf;

use interpbound::harness::{run, summarize, ExperimentConfig};

fn main() -> interpbound::Result<()> {
    let path = std::env::args_os()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| {
            PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("configs/linear_stable_table.toml")
        });
    let cfg = ExperimentConfig::load(&path)?;
    let out = run(&cfg)?;
    print!("{}", summarize(&out.report, &out.counters, &out.cfl()));
    Ok(())
}
