//! One scheme step by hand and a short linear-advection solve.
//!
//! ```text
//! cargo run --example efc_step
//! ```

use interpbound::{solve, step, FluxModel, Grid};

fn main() -> interpbound::Result<()> {
    let linear = FluxModel::linear(1.0)?;
    let row = [1.0, 2.0, 4.0, 3.0, 0.0];
    let next = step(&row, &linear, 0.25, 0.5, row[0], row[4])?;
    println!("linear, dt/2h = 0.25: {row:?} -> {next:?}");

    let burgers = FluxModel::burgers();
    let row = [0.0, 1.0, 2.0, 3.0, 4.0];
    let next = step(&row, &burgers, 0.5, 1.0, row[0], row[4])?;
    println!("burgers, dt/2h = 0.25: {row:?} -> {next:?}");

    let grid = Grid::new(0.0, 1.0, 0.1)?;
    let u0 = grid.sample(|x| (std::f64::consts::PI * x).sin());
    let sol = solve(&u0, &linear, &grid, 0.05, 4, 0.0, u0[10])?;
    for (n, row) in sol.rows().enumerate() {
        let peak = row.iter().cloned().fold(f64::MIN, f64::max);
        println!("n = {n}: max u = {peak:.6}");
    }
    println!("{} interior updates", sol.update_count());
    Ok(())
}
