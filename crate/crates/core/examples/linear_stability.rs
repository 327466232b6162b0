//! Discrete 2-norm growth of the linear scheme under `dt <= (h/a)^2`, and
//! the norm-based error bound that follows.

use interpbound::bounds::corollary4_bound;
use interpbound::solver::{discrete_norm2, linear_stability_params};
use interpbound::{solve, FluxModel, Grid};
use rand::{Rng, SeedableRng};

fn main() -> interpbound::Result<()> {
    let (a, h, dt, steps) = (1.0, 0.1, 0.01, 10);
    let params = linear_stability_params(a, h, steps, dt)?;
    println!(
        "dt_max = {}, C_N = {:.6}, admissible = {}",
        params.dt_max, params.growth, params.admissible
    );

    let grid = Grid::new(0.0, 1.0, h)?;
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    let mut u0: Vec<f64> = (0..grid.len()).map(|_| rng.gen_range(-1.0..1.0)).collect();
    u0[0] = 0.0;
    u0[10] = 0.0;
    let sol = solve(&u0, &FluxModel::linear(a)?, &grid, dt, steps, 0.0, 0.0)?;
    let norm0 = discrete_norm2(sol.row(0), h);
    for (n, row) in sol.rows().enumerate() {
        let limit = (n as f64 * dt / 2.0).exp() * norm0;
        println!(
            "n = {n:2}: |u|_2 = {:.6}  <= {limit:.6}",
            discrete_norm2(row, h)
        );
    }

    println!(
        "bound for N = 2, |u0|_inf = 1, eps = 0: {:.4}",
        corollary4_bound(h, 0.0, 1.0, 2, dt, 1.0, 0.0)
    );
    Ok(())
}
