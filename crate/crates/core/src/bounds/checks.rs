use std::fmt;

use serde::{Deserialize, Serialize};

use super::{pow3, DIFF_SLACK};
use crate::error::Result;
use crate::solver::Solution;

/// A family of inequalities checked by [`super::compare`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundFamily {
    /// `|v_m - u_m| <= (3/2)h + (3/4)|d1+d2| + (min(m,r-m)+3) eps`.
    Theorem1,
    /// `|v_m - v_r|`, `|v_m - v_0| <= (3/2)h + 2|d1-d2| + (3/4)|d1+d2|`.
    Prop23,
    /// Adjacent differences at step `n` are at most `eps / 3^(T-n)` (fine
    /// grid with `T = M`, coarse grid with `T = N`).
    Prop4,
    /// Per-step increments at step `n` are at most `eps / 3^(T-n)`.
    Prop5,
    /// Coarse initial differences are at most `eps / 3^N`.
    Prop6,
    /// `|d1 - d2| <= eps` at step `N`.
    Cor2,
    /// `|v_0 - u_0| <= eps` and `|v_r - u_r| <= eps`.
    Prop78,
    /// `|u_0 - u_m| <= m eps` (`m <= r/2`), `|u_m - u_r| <= (r-m) eps` (`m >= r/2`).
    Prop910,
    /// `(3/2)h + (3/4)|d1+d2| + target` where the initial data is below the
    /// matching threshold.
    Cor3,
    /// Linear-flux bound through the 2-norm growth constant.
    Cor4,
    /// `(3h + 5 eps)/2` on sign-change intervals.
    Cor5,
}

impl BoundFamily {
    pub const ALL: [BoundFamily; 11] = [
        BoundFamily::Theorem1,
        BoundFamily::Prop23,
        BoundFamily::Prop4,
        BoundFamily::Prop5,
        BoundFamily::Prop6,
        BoundFamily::Cor2,
        BoundFamily::Prop78,
        BoundFamily::Prop910,
        BoundFamily::Cor3,
        BoundFamily::Cor4,
        BoundFamily::Cor5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundFamily::Theorem1 => "theorem1",
            BoundFamily::Prop23 => "prop2_3",
            BoundFamily::Prop4 => "prop4",
            BoundFamily::Prop5 => "prop5",
            BoundFamily::Prop6 => "prop6",
            BoundFamily::Cor2 => "cor2",
            BoundFamily::Prop78 => "prop7_8",
            BoundFamily::Prop910 => "prop9_10",
            BoundFamily::Cor3 => "cor3",
            BoundFamily::Cor4 => "cor4",
            BoundFamily::Cor5 => "cor5",
        }
    }

    /// Whether the family relies on the smallness hypothesis.
    pub fn needs_hypothesis(self) -> bool {
        !matches!(self, BoundFamily::Prop23 | BoundFamily::Cor3)
    }
}

impl fmt::Display for BoundFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which families to evaluate. Everything is on by default.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct FamilySet {
    pub theorem1: bool,
    pub prop2_3: bool,
    pub prop4: bool,
    pub prop5: bool,
    pub prop6: bool,
    pub cor2: bool,
    pub prop7_8: bool,
    pub prop9_10: bool,
    pub cor3: bool,
    pub cor4: bool,
    pub cor5: bool,
}

impl Default for FamilySet {
    fn default() -> Self {
        Self {
            theorem1: true,
            prop2_3: true,
            prop4: true,
            prop5: true,
            prop6: true,
            cor2: true,
            prop7_8: true,
            prop9_10: true,
            cor3: true,
            cor4: true,
            cor5: true,
        }
    }
}

impl FamilySet {
    pub fn enabled(&self, family: BoundFamily) -> bool {
        match family {
            BoundFamily::Theorem1 => self.theorem1,
            BoundFamily::Prop23 => self.prop2_3,
            BoundFamily::Prop4 => self.prop4,
            BoundFamily::Prop5 => self.prop5,
            BoundFamily::Prop6 => self.prop6,
            BoundFamily::Cor2 => self.cor2,
            BoundFamily::Prop78 => self.prop7_8,
            BoundFamily::Prop910 => self.prop9_10,
            BoundFamily::Cor3 => self.cor3,
            BoundFamily::Cor4 => self.cor4,
            BoundFamily::Cor5 => self.cor5,
        }
    }
}

/// Tally of one family: how many instances held and the largest excess
/// `lhs - bound` seen (negative when everything held with room to spare).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FamilyCheck {
    pub family: BoundFamily,
    pub passed: usize,
    pub total: usize,
    pub worst_excess: f64,
}

impl FamilyCheck {
    pub fn new(family: BoundFamily) -> Self {
        Self {
            family,
            passed: 0,
            total: 0,
            worst_excess: f64::NEG_INFINITY,
        }
    }

    /// Records `lhs <= bound + slack * max(1, |bound|)`.
    pub fn record(&mut self, lhs: f64, bound: f64, slack: f64) -> bool {
        let excess = lhs - bound;
        let ok = excess <= slack * bound.abs().max(1.0);
        self.total += 1;
        if ok {
            self.passed += 1;
        }
        if excess > self.worst_excess || excess.is_nan() {
            self.worst_excess = excess;
        }
        ok
    }

    pub fn all_passed(&self) -> bool {
        self.passed == self.total
    }

    pub fn merge(&mut self, other: &FamilyCheck) {
        self.passed += other.passed;
        self.total += other.total;
        if other.worst_excess > self.worst_excess {
            self.worst_excess = other.worst_excess;
        }
    }
}

/// Adjacent differences decay: for `n = 0..=T`,
/// `max_i |u^n_i - u^n_{i+1}| <= eps / 3^(T - n)` where `T` is the
/// solution's step count.
pub fn difference_decay(sol: &Solution, eps: f64) -> Result<FamilyCheck> {
    let total = sol.steps();
    let mut check = FamilyCheck::new(BoundFamily::Prop4);
    for (n, row) in sol.rows().enumerate() {
        let bound = eps / pow3(total - n)?;
        check.record(super::max_adjacent_diff(row), bound, DIFF_SLACK);
    }
    Ok(check)
}

/// Per-step increments decay: for `n = 0..T`,
/// `max_i |u^{n+1}_i - u^n_i| <= eps / 3^(T - n)`.
pub fn increment_decay(sol: &Solution, eps: f64) -> Result<FamilyCheck> {
    let total = sol.steps();
    let mut check = FamilyCheck::new(BoundFamily::Prop5);
    for n in 0..total {
        let bound = eps / pow3(total - n)?;
        let inc = sol
            .row(n + 1)
            .iter()
            .zip(sol.row(n))
            .map(|(next, prev)| (next - prev).abs())
            .fold(0.0, f64::max);
        check.record(inc, bound, DIFF_SLACK);
    }
    Ok(check)
}
