use std::time::{Duration, Instant};

use super::config::ExperimentConfig;
use crate::bounds::{compare, BoundReport, CompareOptions, EpsilonContext};
use crate::error::{Error, Result};
use crate::flux::FluxModel;
use crate::grid::{Grid, RefinedGrid};
use crate::interpolant::build_interpolant;
use crate::solver::{cfl_report, solve, CflReport, Solution};

/// Work done by one experiment. Update counts are exact; wall times are
/// informational only.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CostCounters {
    /// `N (P - 1)`
    pub coarse_updates: u64,
    /// `N r (P r - 1)`
    pub fine_updates: u64,
    /// Pieces built plus subnode evaluations.
    pub interp_ops: u64,
    pub wall_coarse: Duration,
    pub wall_fine: Duration,
}

impl CostCounters {
    /// Update counts predicted for `P` coarse intervals, refinement `r` and
    /// `N` coarse steps.
    pub fn predicted(p: u64, r: u64, steps: u64) -> (u64, u64) {
        (steps * (p - 1), steps * r * (p * r - 1))
    }

    pub fn ratio(&self) -> f64 {
        self.fine_updates as f64 / self.coarse_updates as f64
    }
}

#[derive(Debug, Clone)]
pub struct RunOutput {
    pub model: FluxModel,
    pub grids: RefinedGrid,
    pub coarse: Solution,
    pub fine: Solution,
    pub report: BoundReport,
    pub counters: CostCounters,
    pub cfl_coarse: CflReport,
    pub cfl_fine: CflReport,
}

impl RunOutput {
    pub fn cfl(&self) -> CflReport {
        CflReport::from_ratio(self.cfl_coarse.max_ratio.max(self.cfl_fine.max_ratio))
    }
}

fn solve_error(e: Error) -> Error {
    let field = match e {
        Error::IncompatibleBoundary { .. } => "boundary",
        Error::Unstable { .. } => "dt",
        _ => "initial",
    };
    Error::config(field, e)
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

/// Runs one experiment: coarse and fine solves, interpolant at step `N`,
/// epsilon from the fine initial row, and the bound comparison.
pub fn run(config: &ExperimentConfig) -> Result<RunOutput> {
    config.validate()?;
    let model = config.flux.model()?;
    let grid =
        Grid::new(config.domain.a, config.domain.b, config.h).map_err(|e| Error::config("h", e))?;
    let grids = grid
        .refine(config.refinement)
        .map_err(|e| Error::config("refinement", e))?;
    let r = config.refinement;
    let fine_steps = config.steps * r;
    let (u_a, u_b) = config.boundary_values();

    let coarse_u0 = grids.coarse().sample(|x| config.u0(x));
    let fine_u0 = grids.fine().sample(|x| config.u0(x));

    // the two solves share nothing
    let ((coarse, wall_coarse), (fine, wall_fine)) = std::thread::scope(|s| {
        let fine_job = s.spawn(|| {
            timed(|| {
                solve(
                    &fine_u0,
                    &model,
                    grids.fine(),
                    config.dt / r as f64,
                    fine_steps,
                    u_a,
                    u_b,
                )
            })
        });
        let coarse = timed(|| {
            solve(
                &coarse_u0,
                &model,
                grids.coarse(),
                config.dt,
                config.steps,
                u_a,
                u_b,
            )
        });
        (coarse, fine_job.join().expect("fine solve panicked"))
    });
    let coarse = coarse.map_err(solve_error)?;
    let fine = fine.map_err(solve_error)?;

    let interp = build_interpolant(&coarse)?;
    let ctx = EpsilonContext::from_initial(fine.row(0), fine_steps)
        .map_err(|e| Error::config("steps", e))?;
    let opts = CompareOptions {
        families: config.checks,
        cor3_target: config.cor3_target,
    };
    let report = compare(&grids, &coarse, &fine, &interp, &ctx, &model, &opts)?;

    let counters = CostCounters {
        coarse_updates: coarse.update_count(),
        fine_updates: fine.update_count(),
        interp_ops: interp.pieces().len() as u64 + interp.sample_ops(r),
        wall_coarse,
        wall_fine,
    };
    Ok(RunOutput {
        cfl_coarse: cfl_report(&coarse, &model),
        cfl_fine: cfl_report(&fine, &model),
        model,
        grids,
        coarse,
        fine,
        report,
        counters,
    })
}
