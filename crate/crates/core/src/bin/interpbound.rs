use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use interpbound::harness::{execute, RunRequest};

#[derive(Parser)]
#[command(
    name = "interpbound",
    version,
    about = "Coarse-grid interpolant vs. fine-grid error bound experiments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one experiment configuration (TOML).
    Run {
        config: PathBuf,
        /// Directory for CSV and summary files.
        #[arg(long, default_value = ".")]
        out: PathBuf,
        /// Write the per-subnode CSV report.
        #[arg(long)]
        csv: bool,
        /// Print the full summary.
        #[arg(long)]
        summary: bool,
        /// Rerun with one parameter swept, e.g. `h=0.1,0.05`.
        #[arg(long, value_name = "PARAM=V1,V2,...")]
        sweep: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let Command::Run {
        config,
        out,
        csv,
        summary,
        sweep,
    } = cli.command;
    let req = RunRequest {
        config,
        out_dir: out,
        csv,
        summary,
        sweep,
    };
    match execute(&req, &mut std::io::stdout().lock()) {
        Ok(outcome) if outcome.all_passed => ExitCode::SUCCESS,
        Ok(_) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
