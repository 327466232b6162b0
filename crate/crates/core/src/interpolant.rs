//! Piecewise quadratic "interpolant solution" built from a coarse solve.
//!
//! On each interior coarse interval `[x_j, x_{j+1}]` a cubic `q(t)`,
//! `t in [0, 1]`, is fixed by four conditions:
//!
//! ```text
//! q(0) = p1 = x_j        q'(0) = d1 = w_j^N
//! q(1) = p2 = x_{j+1}    q'(1) = d2 = w_{j+1}^N
//! ```
//!
//! The node coordinates enter as values and the coarse solution as slopes.
//! The interpolant solution on the interval is the derivative `v = q'`:
//!
//! ```text
//! v(t) = (6 p1 - 6 p2 + 3 d1 + 3 d2) t^2 + (-6 p1 + 6 p2 - 4 d1 - 2 d2) t + d1
//! ```
//!
//! so that `v(0) = d1` and `v(1) = d2`. Pieces are independent; no continuity
//! is imposed between neighbouring intervals. The boundary intervals `j = 0`
//! and `j = P - 1` carry no piece.

use crate::error::{Error, Result};
use crate::grid::{check_refinement, Grid};
use crate::solver::Solution;

/// `q(t) = a3 t^3 + a2 t^2 + a1 t + a0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CubicCoeffs {
    pub a3: f64,
    pub a2: f64,
    pub a1: f64,
    pub a0: f64,
}

impl CubicCoeffs {
    pub fn eval(&self, t: f64) -> f64 {
        ((self.a3 * t + self.a2) * t + self.a1) * t + self.a0
    }

    pub fn derivative(&self, t: f64) -> f64 {
        (3.0 * self.a3 * t + 2.0 * self.a2) * t + self.a1
    }
}

fn check_finite(values: [(&'static str, f64); 4]) -> Result<()> {
    for (name, v) in values {
        if !v.is_finite() {
            return Err(Error::InvalidArgument {
                name,
                reason: format!("non-finite value {v}"),
            });
        }
    }
    Ok(())
}

/// Closed-form solution of the 4x4 system
/// `d = p1, a + b + c + d = p2, c = d1, 3a + 2b + c = d2`.
pub fn cubic_coefficients(p1: f64, p2: f64, d1: f64, d2: f64) -> Result<CubicCoeffs> {
    check_finite([("p1", p1), ("p2", p2), ("d1", d1), ("d2", d2)])?;
    let a3 = 2.0 * p1 - 2.0 * p2 + d1 + d2;
    let a2 = 3.0 * (p2 - p1) - 2.0 * d1 - d2;
    Ok(CubicCoeffs {
        a3,
        a2,
        a1: d1,
        a0: p1,
    })
}

/// One interval of the interpolant solution, `v(t) = c2 t^2 + c1 t + c0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InterpolantPiece {
    pub j: usize,
    pub p1: f64,
    pub p2: f64,
    pub d1: f64,
    pub d2: f64,
    pub c2: f64,
    pub c1: f64,
    pub c0: f64,
}

impl InterpolantPiece {
    pub fn from_values(j: usize, p1: f64, p2: f64, d1: f64, d2: f64) -> Result<Self> {
        check_finite([("p1", p1), ("p2", p2), ("d1", d1), ("d2", d2)])?;
        if p2 <= p1 {
            return Err(Error::DegenerateInterval { p1, p2 });
        }
        Ok(Self {
            j,
            p1,
            p2,
            d1,
            d2,
            c2: 6.0 * p1 - 6.0 * p2 + 3.0 * d1 + 3.0 * d2,
            c1: -6.0 * p1 + 6.0 * p2 - 4.0 * d1 - 2.0 * d2,
            c0: d1,
        })
    }

    pub fn eval(&self, t: f64) -> f64 {
        (self.c2 * t + self.c1) * t + self.c0
    }

    /// `v_m = v(m / r)` for `m = 0..=r`. The endpoints are returned as `d1`
    /// and `d2` exactly.
    pub fn sample(&self, r: usize) -> Result<Vec<f64>> {
        check_refinement(r)?;
        let mut out: Vec<f64> = (0..=r).map(|m| self.eval(m as f64 / r as f64)).collect();
        out[0] = self.d1;
        out[r] = self.d2;
        Ok(out)
    }

    /// The cubic whose derivative this piece is.
    pub fn cubic(&self) -> CubicCoeffs {
        // p1..d2 were validated at construction
        cubic_coefficients(self.p1, self.p2, self.d1, self.d2).expect("finite piece inputs")
    }
}

/// Convenience alias for [`InterpolantPiece::from_values`].
pub fn piece_from_values(j: usize, p1: f64, p2: f64, d1: f64, d2: f64) -> Result<InterpolantPiece> {
    InterpolantPiece::from_values(j, p1, p2, d1, d2)
}

/// Pieces for all interior intervals `1 <= j <= P - 2` at one time step.
#[derive(Debug, Clone, PartialEq)]
pub struct InterpolantSolution {
    pieces: Vec<InterpolantPiece>,
    step: usize,
    h: f64,
}

impl InterpolantSolution {
    /// Builds from an arbitrary row of node values on `grid`, tagged with
    /// the time step it came from.
    pub fn from_row(grid: &Grid, row: &[f64], step: usize) -> Result<Self> {
        if row.len() != grid.len() {
            return Err(Error::InvalidArgument {
                name: "row",
                reason: format!("{} values for a grid of {} nodes", row.len(), grid.len()),
            });
        }
        let p = grid.intervals();
        let pieces = (1..=p - 2)
            .map(|j| {
                InterpolantPiece::from_values(j, grid.node(j), grid.node(j + 1), row[j], row[j + 1])
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            pieces,
            step,
            h: grid.h(),
        })
    }

    pub fn pieces(&self) -> &[InterpolantPiece] {
        &self.pieces
    }

    /// Coarse time step `N` the pieces were built from.
    pub fn step(&self) -> usize {
        self.step
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    /// Number of `eval` calls needed to sample every piece at `r + 1` points.
    pub fn sample_ops(&self, r: usize) -> u64 {
        (self.pieces.len() * (r + 1)) as u64
    }
}

/// Builds the interpolant from the last row of a coarse solve.
pub fn build_interpolant(sol: &Solution) -> Result<InterpolantSolution> {
    InterpolantSolution::from_row(sol.grid(), sol.final_row(), sol.steps())
}
