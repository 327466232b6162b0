//! A small sine crossing zero: intervals where the coarse solution changes
//! sign get the tighter `(3h + 5 eps) / 2` bound.

use interpbound::harness::{run, ExperimentConfig};

fn main() -> interpbound::Result<()> {
    let cfg = ExperimentConfig::load(
        &std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("configs/turbulence_sine.toml"),
    )?;
    let out = run(&cfg)?;
    println!(
        "sign-change intervals: {:?}",
        out.report.turbulent_intervals
    );
    println!("epsilon = {:.3e}", out.report.epsilon.eps);
    for rec in out.report.records.iter().filter(|r| r.turbulent) {
        println!(
            "j = {} m = {}: |v - u| = {:.3e}  bound {:.3e}",
            rec.j,
            rec.m,
            rec.abs_err,
            rec.cor5.unwrap_or(f64::NAN)
        );
    }
    Ok(())
}
