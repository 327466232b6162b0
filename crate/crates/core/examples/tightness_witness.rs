//! Zero data: the interpolant is `6h t(1-t)` on every piece and the error
//! equals the bound at the midpoints.

use interpbound::bounds::theorem1_bound;
use interpbound::harness::{run, ExperimentConfig};

fn main() -> interpbound::Result<()> {
    for h in [0.1, 0.05, 0.025] {
        let cfg = ExperimentConfig::from_toml_str(&format!(
            r#"
            h = {h}
            dt = {dt}
            steps = 2
            refinement = 4
            [domain]
            a = 0.0
            b = 1.0
            [flux]
            name = "burgers"
            [initial]
            kind = "constant"
            value = 0.0
            "#,
            dt = h / 2.0
        ))?;
        let out = run(&cfg)?;
        let bound = theorem1_bound(h, 0.0, 0.0, 2, 4, 0.0)?;
        println!(
            "h = {h:<6} max error {:.12}  bound {:.12}  tightness {:.12}",
            out.report.summary.max_err, bound, out.report.summary.max_tightness
        );
    }
    Ok(())
}
