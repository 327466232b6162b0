//! Error vs. bound across grid steps and refinements for near-constant data.

use interpbound::harness::{run, ExperimentConfig};
use interpbound::BoundFamily;

fn main() -> interpbound::Result<()> {
    println!("flux     h      r  max_err      tightness  all");
    for flux in ["linear\"\na = 1.0", "burgers\""] {
        for h in [0.1, 0.05] {
            for r in [2, 4] {
                let cfg = ExperimentConfig::from_toml_str(&format!(
                    "h = {h}\ndt = {dt}\nsteps = 3\nrefinement = {r}\n\
                     [domain]\na = 0.0\nb = 1.0\n\
                     [flux]\nname = \"{flux}\n\
                     [initial]\nkind = \"sine\"\namplitude = 1e-6\nfreq = 6.283185307179586\noffset = 0.5\n",
                    dt = h / 2.0
                ))?;
                let out = run(&cfg)?;
                let thm1 = out.report.check(BoundFamily::Theorem1).expect("enabled");
                println!(
                    "{:<8} {h:<6} {r}  {:.6e}  {:.6}   {}",
                    out.model.name(),
                    out.report.summary.max_err,
                    out.report.summary.max_tightness,
                    if thm1.all_passed() && out.report.all_passed() {
                        "ok"
                    } else {
                        "FAIL"
                    }
                );
            }
        }
    }
    Ok(())
}
