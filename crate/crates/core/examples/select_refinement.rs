//! Smallest even refinement whose initial smallness requirement is met by
//! the modulus of continuity of `u0`.

use interpbound::bounds::{modulus_probe, theorem2_select_r};

fn main() -> interpbound::Result<()> {
    let steps = 2;
    for (name, amp) in [("flat", 0.0), ("1e-6 sine", 1e-6), ("unit sine", 1.0)] {
        let u0 = |x: f64| amp * (2.0 * std::f64::consts::PI * x).sin();
        for eps in [1e-3, 1e-1] {
            let delta = modulus_probe(u0, 0.0, 1.0, eps, 400);
            let r = theorem2_select_r(u0, 0.0, 1.0, eps, steps, 12)?;
            println!(
                "{name:<10} eps = {eps:<6} delta = {delta:<10.4e} r = {}",
                r.map_or("none up to 12".into(), |r| r.to_string())
            );
        }
    }
    Ok(())
}
