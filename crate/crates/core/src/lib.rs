//! Coarse-grid interpolant solutions for 1D scalar conservation laws
//! `u_t + F(u)_x = 0` with Dirichlet boundaries.
//!
//! The pipeline:
//!
//! 1. [`solver`] advances the equation with the explicit Euler-forward,
//!    centered-space scheme on a coarse grid (step `h`, `N` steps of `dt`)
//!    and on its refinement (step `h / r`, `N r` steps of `dt / r`).
//! 2. [`interpolant`] turns the coarse solution at step `N` into a
//!    piecewise quadratic `v`, one piece per interior coarse interval.
//! 3. [`bounds`] evaluates the a-priori error bounds on `|v - u|` and checks
//!    them against the fine solution `u` subnode by subnode.
//! 4. [`harness`] wires the above to a TOML experiment file, writes a CSV
//!    report and counts the work each solve performs.
//!
//! See the crate's `examples/` directory for one runnable program per
//! capability.

pub mod bounds;
pub mod error;
pub mod flux;
pub mod grid;
pub mod harness;
pub mod interpolant;
pub mod solver;

pub use bounds::{BoundFamily, BoundReport, EpsilonContext};
pub use error::{Error, Result};
pub use flux::FluxModel;
pub use grid::{local_coordinate, Grid, RefinedGrid};
pub use interpolant::{build_interpolant, InterpolantPiece, InterpolantSolution};
pub use solver::{solve, step, Solution};
