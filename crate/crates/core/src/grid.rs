//! Uniform partitions of `[a, b]` and their even refinements.
//!
//! A coarse grid with step `h` is refined by an even factor `r` into a fine
//! grid with step `k = h / r`. Coarse node `j` coincides with fine node
//! `j * r`, and the `r + 1` fine nodes `x_j + m * k` (`0 <= m <= r`) cover the
//! coarse interval `[x_j, x_{j+1}]` with local coordinate `t_m = m / r`.

use crate::error::{Error, Result};

/// Relative tolerance on `(b - a) / h` being an integer.
pub const DIVISIBILITY_TOL: f64 = 1e-9;

/// Uniform partition `x_j = a + j h`, `0 <= j <= P`, with `x_P = b`.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    a: f64,
    b: f64,
    h: f64,
    nodes: Vec<f64>,
}

impl Grid {
    /// Builds the partition of `[a, b]` with step `h`.
    ///
    /// `(b - a) / h` must be within [`DIVISIBILITY_TOL`] (relative) of an
    /// integer `P >= 3`, so that at least two interior intervals exist.
    pub fn new(a: f64, b: f64, h: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite()) || b <= a {
            return Err(Error::InvalidDomain { a, b });
        }
        if !(h.is_finite() && h > 0.0) {
            return Err(Error::InvalidStep { h });
        }
        let ratio = (b - a) / h;
        let p = ratio.round();
        let residual = (ratio - p).abs();
        if residual > DIVISIBILITY_TOL * ratio.max(1.0) {
            return Err(Error::NonDivisibleStep { ratio, residual });
        }
        let p = p as usize;
        if p < 3 {
            return Err(Error::TooFewIntervals { p });
        }
        let mut nodes: Vec<f64> = (0..=p).map(|j| a + j as f64 * h).collect();
        nodes[p] = b;
        Ok(Self { a, b, h, nodes })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    /// Number of intervals `P`; there are `P + 1` nodes.
    pub fn intervals(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn node(&self, j: usize) -> f64 {
        self.nodes[j]
    }

    /// Evaluates `f` at every node.
    pub fn sample<F: Fn(f64) -> f64>(&self, f: F) -> Vec<f64> {
        self.nodes.iter().map(|&x| f(x)).collect()
    }

    /// Refines by the even factor `r`, giving the fine grid with step `h / r`.
    pub fn refine(&self, r: usize) -> Result<RefinedGrid> {
        check_refinement(r)?;
        let k = self.h / r as f64;
        let fine = Grid::new(self.a, self.b, k)?;
        debug_assert_eq!(fine.intervals(), self.intervals() * r);
        Ok(RefinedGrid {
            coarse: self.clone(),
            fine,
            r,
        })
    }
}

pub(crate) fn check_refinement(r: usize) -> Result<()> {
    if r < 2 || !r.is_multiple_of(2) {
        return Err(Error::InvalidRefinement { r });
    }
    Ok(())
}

/// A coarse grid together with its refinement by an even factor `r`.
#[derive(Debug, Clone, PartialEq)]
pub struct RefinedGrid {
    coarse: Grid,
    fine: Grid,
    r: usize,
}

impl RefinedGrid {
    pub fn coarse(&self) -> &Grid {
        &self.coarse
    }

    pub fn fine(&self) -> &Grid {
        &self.fine
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Fine substep `s = (x_{j+1} - x_j) / r`, equal to the fine step `k`.
    pub fn substep(&self) -> f64 {
        self.fine.h()
    }

    /// Fine index of coarse node `j`.
    pub fn fine_index(&self, j: usize) -> usize {
        j * self.r
    }

    /// Fine index of subnode `m` of coarse interval `j`.
    pub fn subnode_index(&self, j: usize, m: usize) -> usize {
        j * self.r + m
    }

    /// Coordinate `x_j + m s` of subnode `m` in coarse interval `j`.
    pub fn subnode(&self, j: usize, m: usize) -> f64 {
        self.fine.node(self.subnode_index(j, m))
    }
}

/// Local coordinate `t_m = m / r` of subnode `m` within a coarse interval.
pub fn local_coordinate(m: usize, r: usize) -> Result<f64> {
    if r == 0 || m > r {
        return Err(Error::SubnodeOutOfRange { m, r });
    }
    Ok(m as f64 / r as f64)
}
