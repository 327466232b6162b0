//! Closed-form a-priori bounds on `|v_m - u_m|` and their empirical checks.
//!
//! `v_m` is the interpolant solution at local coordinate `t_m = m / r` of a
//! coarse interval and `u_m` the fine solution (step `k = h / r`, `M = N r`
//! time steps) at the matching fine node. Most bounds rest on the smallness
//! hypothesis
//!
//! ```text
//! |u^0_i - u^0_{i+1}| <= eps / 3^M   for every adjacent pair of the fine grid
//! ```
//!
//! which [`EpsilonContext`] evaluates for given initial data.

mod checks;
mod report;

pub use checks::{difference_decay, increment_decay, BoundFamily, FamilyCheck, FamilySet};
pub use report::{compare, BoundReport, CompareOptions, ReportSummary, SubnodeRecord};

use crate::error::{Error, Result};

/// Absolute slack for comparing measured errors against bounds.
pub const BOUND_SLACK: f64 = 1e-9;

/// Absolute slack for the difference-decay and `|d1 - d2|` checks.
pub const DIFF_SLACK: f64 = 1e-12;

/// `3^m` in floating point, rejecting overflow.
pub fn pow3(m: usize) -> Result<f64> {
    let v = i32::try_from(m)
        .map(|e| 3f64.powi(e))
        .unwrap_or(f64::INFINITY);
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::PowerOverflow { m })
    }
}

/// `max_i |row[i] - row[i+1]|`.
pub fn max_adjacent_diff(row: &[f64]) -> f64 {
    row.windows(2)
        .map(|w| (w[0] - w[1]).abs())
        .fold(0.0, f64::max)
}

/// The `eps` of the smallness hypothesis for a particular fine-grid initial
/// row and fine step count `M`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EpsilonContext {
    pub fine_steps: usize,
    pub eps: f64,
    pub max_initial_diff: f64,
    pub hypothesis_holds: bool,
}

impl EpsilonContext {
    /// Smallest `eps` for which the hypothesis holds: `3^M * max_i |u0_i - u0_{i+1}|`.
    pub fn from_initial(fine_u0: &[f64], fine_steps: usize) -> Result<Self> {
        let (scale, max_initial_diff) = Self::measure(fine_u0, fine_steps)?;
        let eps = scale * max_initial_diff;
        if !eps.is_finite() {
            return Err(Error::PowerOverflow { m: fine_steps });
        }
        Ok(Self {
            fine_steps,
            eps,
            max_initial_diff,
            hypothesis_holds: true,
        })
    }

    /// Context for a caller-chosen `eps`; the hypothesis may fail.
    pub fn with_eps(fine_u0: &[f64], fine_steps: usize, eps: f64) -> Result<Self> {
        if !(eps.is_finite() && eps >= 0.0) {
            return Err(Error::InvalidArgument {
                name: "eps",
                reason: format!("must be finite and non-negative, got {eps}"),
            });
        }
        let (scale, max_initial_diff) = Self::measure(fine_u0, fine_steps)?;
        Ok(Self {
            fine_steps,
            eps,
            max_initial_diff,
            hypothesis_holds: max_initial_diff * scale <= eps * (1.0 + 1e-12),
        })
    }

    fn measure(fine_u0: &[f64], fine_steps: usize) -> Result<(f64, f64)> {
        if fine_steps == 0 {
            return Err(Error::InvalidArgument {
                name: "fine_steps",
                reason: "M must be at least 1".into(),
            });
        }
        if let Some(node) = fine_u0.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFiniteInput {
                node,
                value: fine_u0[node],
            });
        }
        Ok((pow3(fine_steps)?, max_adjacent_diff(fine_u0)))
    }
}

pub fn epsilon_from_initial(fine_u0: &[f64], fine_steps: usize) -> Result<EpsilonContext> {
    EpsilonContext::from_initial(fine_u0, fine_steps)
}

/// Slack `s in [0, 1]` with `t^2 = t - s / 4`, i.e. `s = 4 (t - t^2)`.
pub fn prop1_s(t: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::InvalidArgument {
            name: "t",
            reason: format!("{t} outside [0, 1]"),
        });
    }
    Ok(4.0 * (t - t * t))
}

/// Bound on `|v_m - v_r|` and `|v_m - v_0|` within one piece.
pub fn prop23_bound(h: f64, d1: f64, d2: f64) -> f64 {
    1.5 * h + 2.0 * (d1 - d2).abs() + 0.75 * (d1 + d2).abs()
}

#[inline]
pub(crate) fn theorem1_formula(h: f64, d1: f64, d2: f64, m: usize, r: usize, eps: f64) -> f64 {
    let near = m.min(r - m) as f64;
    1.5 * h + 0.75 * (d1 + d2).abs() + (near + 3.0) * eps
}

/// `(3/2) h + (3/4) |d1 + d2| + (min(m, r - m) + 3) eps` for `1 <= m <= r`.
pub fn theorem1_bound(h: f64, d1: f64, d2: f64, m: usize, r: usize, eps: f64) -> Result<f64> {
    if m == 0 || m > r {
        return Err(Error::SubnodeOutOfRange { m, r });
    }
    Ok(theorem1_formula(h, d1, d2, m, r, eps))
}

/// Initial-difference threshold `delta = eps / ((min(m, r - m) + 3) 3^M)`
/// under which the bound with a plain `+ eps` term applies.
pub fn corollary3_delta(eps: f64, m: usize, r: usize, fine_steps: usize) -> Result<f64> {
    if m == 0 || m > r {
        return Err(Error::SubnodeOutOfRange { m, r });
    }
    if !(eps.is_finite() && eps >= 0.0) {
        return Err(Error::InvalidArgument {
            name: "eps",
            reason: format!("must be finite and non-negative, got {eps}"),
        });
    }
    let mu = eps / (m.min(r - m) as f64 + 3.0);
    Ok(mu / pow3(fine_steps)?)
}

/// `(3/2) h + (3/4) |d1 + d2| + eps`, the bound once the initial data is
/// below [`corollary3_delta`].
pub fn corollary3_bound(h: f64, d1: f64, d2: f64, eps: f64) -> f64 {
    1.5 * h + 0.75 * (d1 + d2).abs() + eps
}

/// Largest spacing `delta` such that samples of `u0` closer than `delta`
/// differ by at most `eps`, probed on `samples` equispaced points of
/// `[a, b]`. Returns infinity when every sampled pair is within `eps`, and 0
/// when even neighbouring samples are not.
pub fn modulus_probe<F: Fn(f64) -> f64>(u0: F, a: f64, b: f64, eps: f64, samples: usize) -> f64 {
    let n = samples.max(2);
    let dx = (b - a) / (n - 1) as f64;
    let vals: Vec<f64> = (0..n).map(|i| u0(a + i as f64 * dx)).collect();
    let mut best = 0;
    for stride in 1..n {
        let worst = vals[stride..]
            .iter()
            .zip(&vals)
            .map(|(hi, lo)| (hi - lo).abs())
            .fold(0.0, f64::max);
        if worst <= eps {
            best = stride;
        } else {
            break;
        }
    }
    if best == n - 1 {
        f64::INFINITY
    } else {
        best as f64 * dx
    }
}

/// Smallest even `r <= r_max` with `eps / 3^(r N) <= delta(eps)`, where
/// `delta` comes from [`modulus_probe`] on `10 r_max N` samples.
///
/// `Ok(None)` means no admissible `r` was found within `r_max`.
pub fn theorem2_select_r<F: Fn(f64) -> f64>(
    u0: F,
    a: f64,
    b: f64,
    eps: f64,
    steps: usize,
    r_max: usize,
) -> Result<Option<usize>> {
    if !(eps.is_finite() && eps > 0.0) {
        return Err(Error::InvalidArgument {
            name: "eps",
            reason: format!("must be positive, got {eps}"),
        });
    }
    if steps < 2 {
        return Err(Error::InvalidArgument {
            name: "steps",
            reason: format!("N must exceed 1, got {steps}"),
        });
    }
    if !(a.is_finite() && b.is_finite()) || b <= a {
        return Err(Error::InvalidDomain { a, b });
    }
    let delta = modulus_probe(u0, a, b, eps, 10 * r_max.max(2) * steps);
    if delta <= 0.0 {
        return Ok(None);
    }
    for r in (2..=r_max).step_by(2) {
        // an overflowing 3^(rN) drives the threshold to zero
        let threshold = pow3(r * steps).map(|p| eps / p).unwrap_or(0.0);
        if threshold <= delta {
            return Ok(Some(r));
        }
    }
    Ok(None)
}

/// Returns `(A + B, 2 (sum C_j^2)^(1/2))` for `A = values[i]`, `B = values[j]`.
pub fn lemma1_check(values: &[f64], i: usize, j: usize) -> Result<(f64, f64)> {
    if let Some(index) = values.iter().position(|&v| !(v > 0.0 && v.is_finite())) {
        return Err(Error::NonPositive {
            index,
            value: values[index],
        });
    }
    for idx in [i, j] {
        if idx >= values.len() {
            return Err(Error::InvalidArgument {
                name: "index",
                reason: format!("{idx} out of range for {} values", values.len()),
            });
        }
    }
    let rhs = 2.0 * values.iter().map(|c| c * c).sum::<f64>().sqrt();
    Ok((values[i] + values[j], rhs))
}

/// Linear-flux bound
/// `(3/2) [h + ((b - a)/h + 1)^(1/2) exp(N dt / 2) |u0|_inf] + eps`.
pub fn corollary4_bound(
    h: f64,
    a_dom: f64,
    b_dom: f64,
    steps: usize,
    dt: f64,
    u0_sup: f64,
    eps: f64,
) -> f64 {
    let nodes = (b_dom - a_dom) / h + 1.0;
    let growth = (steps as f64 * dt / 2.0).exp();
    1.5 * (h + nodes.sqrt() * growth * u0_sup) + eps
}

/// Intervals `[x_j, x_{j+1}]` where the row changes sign strictly,
/// `row[j] * row[j+1] < 0`.
pub fn detect_turbulence(row: &[f64]) -> Vec<usize> {
    row.windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] * w[1] < 0.0)
        .map(|(j, _)| j)
        .collect()
}

/// Intervals where both end values are exactly zero.
pub fn detect_zero_intervals(row: &[f64]) -> Vec<usize> {
    row.windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] == 0.0 && w[1] == 0.0)
        .map(|(j, _)| j)
        .collect()
}

/// `(3h + 5 eps) / 2`, the bound on a sign-change interval.
pub fn corollary5_bound(h: f64, eps: f64) -> f64 {
    0.5 * (3.0 * h + 5.0 * eps)
}
