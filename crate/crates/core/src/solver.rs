//! Explicit Euler-forward / centered-space time stepping with pinned
//! Dirichlet boundaries.
//!
//! One step updates every interior node `1 <= j <= P - 1` as
//!
//! ```text
//! u_j <- u_j - F'(u_j) * dt / (2 h) * (u_{j+1} - u_{j-1})
//! ```
//!
//! and resets the two boundary nodes to `u_a` and `u_b`. The Courant number
//! `|F'(u)| dt / h` is monitored after the fact by [`cfl_report`]; violating
//! configurations still run.

use crate::error::{Error, Result};
use crate::flux::FluxModel;
use crate::grid::Grid;

/// Initial data must match the boundary values to this absolute tolerance.
pub const BOUNDARY_MATCH_TOL: f64 = 1e-9;

/// Full trajectory `u^n_j`, `0 <= n <= N`, of one solve.
#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    grid: Grid,
    dt: f64,
    u_a: f64,
    u_b: f64,
    width: usize,
    values: Vec<f64>,
    update_count: u64,
}

impl Solution {
    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn boundary(&self) -> (f64, f64) {
        (self.u_a, self.u_b)
    }

    /// Number of time steps taken (`N`); there are `N + 1` rows.
    pub fn steps(&self) -> usize {
        self.values.len() / self.width - 1
    }

    pub fn row(&self, n: usize) -> &[f64] {
        &self.values[n * self.width..(n + 1) * self.width]
    }

    pub fn final_row(&self) -> &[f64] {
        self.row(self.steps())
    }

    pub fn rows(&self) -> impl ExactSizeIterator<Item = &[f64]> + '_ {
        self.values.chunks_exact(self.width)
    }

    /// Interior-node updates performed, `N (P - 1)`.
    pub fn update_count(&self) -> u64 {
        self.update_count
    }
}

/// Last row of a solve that did not keep the trajectory.
#[derive(Debug, Clone, PartialEq)]
pub struct FinalState {
    pub row: Vec<f64>,
    pub steps: usize,
    pub update_count: u64,
    pub max_cfl_ratio: f64,
}

/// Advances one step; returns the first interior node whose new value is not
/// finite.
fn advance(
    prev: &[f64],
    next: &mut [f64],
    model: &FluxModel,
    dt: f64,
    h: f64,
    u_a: f64,
    u_b: f64,
) -> Option<usize> {
    let last = prev.len() - 1;
    let half_ratio = dt / (2.0 * h);
    let mut bad = None;
    for j in 1..last {
        let u = prev[j];
        let v = u - model.dflux(u) * half_ratio * (prev[j + 1] - prev[j - 1]);
        if bad.is_none() && !v.is_finite() {
            bad = Some(j);
        }
        next[j] = v;
    }
    next[0] = u_a;
    next[last] = u_b;
    bad
}

fn check_step_params(dt: f64, h: f64) -> Result<()> {
    if !(dt.is_finite() && dt > 0.0) {
        return Err(Error::InvalidArgument {
            name: "dt",
            reason: format!("time step must be positive, got {dt}"),
        });
    }
    if !(h.is_finite() && h > 0.0) {
        return Err(Error::InvalidStep { h });
    }
    Ok(())
}

fn check_finite(row: &[f64]) -> Result<()> {
    match row.iter().position(|v| !v.is_finite()) {
        Some(node) => Err(Error::NonFiniteInput {
            node,
            value: row[node],
        }),
        None => Ok(()),
    }
}

/// Applies one scheme step to `state`, returning the new row.
pub fn step(
    state: &[f64],
    model: &FluxModel,
    dt: f64,
    h: f64,
    u_a: f64,
    u_b: f64,
) -> Result<Vec<f64>> {
    if state.len() < 3 {
        return Err(Error::InvalidArgument {
            name: "state",
            reason: format!("need at least 3 nodes, got {}", state.len()),
        });
    }
    check_step_params(dt, h)?;
    check_finite(state)?;
    let mut next = vec![0.0; state.len()];
    if let Some(node) = advance(state, &mut next, model, dt, h, u_a, u_b) {
        return Err(Error::Unstable { step: 1, node });
    }
    Ok(next)
}

fn check_initial(initial: &[f64], grid: &Grid, u_a: f64, u_b: f64) -> Result<()> {
    if initial.len() != grid.len() {
        return Err(Error::InvalidArgument {
            name: "initial",
            reason: format!(
                "{} samples for a grid of {} nodes",
                initial.len(),
                grid.len()
            ),
        });
    }
    check_finite(initial)?;
    let last = initial.len() - 1;
    for (which, boundary, sample) in [("u_a", u_a, initial[0]), ("u_b", u_b, initial[last])] {
        if !boundary.is_finite() || (boundary - sample).abs() > BOUNDARY_MATCH_TOL {
            return Err(Error::IncompatibleBoundary {
                which,
                boundary,
                initial: sample,
            });
        }
    }
    Ok(())
}

/// Runs `steps` scheme steps from the sampled initial data, keeping every row.
///
/// Row 0 is the initial data with its end values replaced by `u_a`, `u_b`
/// (they already agree to [`BOUNDARY_MATCH_TOL`]).
pub fn solve(
    initial: &[f64],
    model: &FluxModel,
    grid: &Grid,
    dt: f64,
    steps: usize,
    u_a: f64,
    u_b: f64,
) -> Result<Solution> {
    if steps == 0 {
        return Err(Error::InvalidArgument {
            name: "steps",
            reason: "at least one time step is required".into(),
        });
    }
    check_step_params(dt, grid.h())?;
    check_initial(initial, grid, u_a, u_b)?;

    let width = grid.len();
    let mut values = vec![0.0; width * (steps + 1)];
    values[..width].copy_from_slice(initial);
    values[0] = u_a;
    values[width - 1] = u_b;
    for n in 0..steps {
        let (done, rest) = values.split_at_mut((n + 1) * width);
        let prev = &done[n * width..];
        let next = &mut rest[..width];
        if let Some(node) = advance(prev, next, model, dt, grid.h(), u_a, u_b) {
            return Err(Error::Unstable { step: n + 1, node });
        }
    }
    Ok(Solution {
        grid: grid.clone(),
        dt,
        u_a,
        u_b,
        width,
        values,
        update_count: steps as u64 * (width as u64 - 2),
    })
}

/// Same stepping as [`solve`] but keeps only two rows; the CFL ratio is
/// tracked on the fly.
pub fn solve_final(
    initial: &[f64],
    model: &FluxModel,
    grid: &Grid,
    dt: f64,
    steps: usize,
    u_a: f64,
    u_b: f64,
) -> Result<FinalState> {
    if steps == 0 {
        return Err(Error::InvalidArgument {
            name: "steps",
            reason: "at least one time step is required".into(),
        });
    }
    check_step_params(dt, grid.h())?;
    check_initial(initial, grid, u_a, u_b)?;

    let last = initial.len() - 1;
    let mut prev = initial.to_vec();
    prev[0] = u_a;
    prev[last] = u_b;
    let mut next = vec![0.0; prev.len()];
    let mut max_cfl_ratio = max_cfl_in_row(&prev, model, dt, grid.h());
    for n in 0..steps {
        if let Some(node) = advance(&prev, &mut next, model, dt, grid.h(), u_a, u_b) {
            return Err(Error::Unstable { step: n + 1, node });
        }
        std::mem::swap(&mut prev, &mut next);
        max_cfl_ratio = max_cfl_ratio.max(max_cfl_in_row(&prev, model, dt, grid.h()));
    }
    Ok(FinalState {
        row: prev,
        steps,
        update_count: steps as u64 * (last as u64 - 1),
        max_cfl_ratio,
    })
}

fn max_cfl_in_row(row: &[f64], model: &FluxModel, dt: f64, h: f64) -> f64 {
    row.iter()
        .map(|&u| model.dflux(u).abs() * dt / h)
        .fold(0.0, f64::max)
}

/// Largest Courant number `|F'(u^n_j)| dt / h` seen in a solve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CflReport {
    pub max_ratio: f64,
    pub satisfied: bool,
}

impl CflReport {
    pub fn from_ratio(max_ratio: f64) -> Self {
        Self {
            max_ratio,
            satisfied: max_ratio <= 1.0 + 1e-12,
        }
    }
}

pub fn cfl_report(sol: &Solution, model: &FluxModel) -> CflReport {
    let (dt, h) = (sol.dt(), sol.grid().h());
    let max_ratio = sol
        .rows()
        .map(|row| max_cfl_in_row(row, model, dt, h))
        .fold(0.0, f64::max);
    CflReport::from_ratio(max_ratio)
}

/// Step restriction and growth constant of the linear scheme in the
/// discrete 2-norm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearStability {
    /// `(h / a)^2`.
    pub dt_max: f64,
    /// `C_N = exp(N dt / 2)`.
    pub growth: f64,
    /// `dt <= dt_max` and `h <= |a|` (the latter implies the CFL condition).
    pub admissible: bool,
}

pub fn linear_stability_params(a: f64, h: f64, steps: usize, dt: f64) -> Result<LinearStability> {
    if a == 0.0 || !a.is_finite() {
        return Err(Error::ZeroAdvectionSpeed);
    }
    if !(h.is_finite() && h > 0.0) {
        return Err(Error::InvalidStep { h });
    }
    let dt_max = (h / a).powi(2);
    Ok(LinearStability {
        dt_max,
        growth: (steps as f64 * dt / 2.0).exp(),
        admissible: dt <= dt_max && h <= a.abs(),
    })
}

/// `|u|_2 = (h * sum_j u_j^2)^(1/2)`.
pub fn discrete_norm2(row: &[f64], h: f64) -> f64 {
    (h * row.iter().map(|u| u * u).sum::<f64>()).sqrt()
}
