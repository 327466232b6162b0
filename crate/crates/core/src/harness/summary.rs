use std::fmt::Write;

use super::run::CostCounters;
use crate::bounds::BoundReport;
use crate::solver::CflReport;

fn interval_list(js: &[usize]) -> String {
    if js.is_empty() {
        "none".to_string()
    } else {
        js.iter()
            .map(|j| j.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// Human-readable digest of one run.
pub fn summarize(report: &BoundReport, counters: &CostCounters, cfl: &CflReport) -> String {
    let mut out = String::new();
    let eps = &report.epsilon;
    let _ = writeln!(
        out,
        "h = {}, r = {}, M = {}",
        report.h, report.r, eps.fine_steps
    );
    let _ = writeln!(
        out,
        "epsilon: {:.6e} (max initial difference {:.6e}, hypothesis {})",
        eps.eps,
        eps.max_initial_diff,
        if eps.hypothesis_holds {
            "holds"
        } else {
            "fails"
        }
    );
    let _ = writeln!(out, "max error: {:.6e}", report.summary.max_err);
    let _ = writeln!(
        out,
        "max tightness (abs_err / thm1): {:.6}",
        report.summary.max_tightness
    );
    for check in &report.checks {
        let verdict = if check.all_passed() { "PASS" } else { "FAIL" };
        let _ = write!(
            out,
            "{}: {verdict} ({}/{})",
            check.family, check.passed, check.total
        );
        if !check.all_passed() {
            let _ = write!(out, " worst excess {:.3e}", check.worst_excess);
        }
        out.push('\n');
    }
    let _ = writeln!(
        out,
        "turbulent intervals: {}",
        interval_list(&report.turbulent_intervals)
    );
    let _ = writeln!(
        out,
        "zero intervals: {}",
        interval_list(&report.zero_intervals)
    );
    let _ = writeln!(
        out,
        "cost: coarse {} updates, fine {} updates, ratio {:.4} (r^2 = {})",
        counters.coarse_updates,
        counters.fine_updates,
        counters.ratio(),
        report.r * report.r
    );
    let _ = writeln!(
        out,
        "wall time: coarse {:?}, fine {:?}",
        counters.wall_coarse, counters.wall_fine
    );
    if cfl.satisfied {
        let _ = writeln!(out, "CFL: OK (max ratio {:.6})", cfl.max_ratio);
    } else {
        let _ = writeln!(out, "CFL: VIOLATED (max ratio {:.6})", cfl.max_ratio);
    }
    out
}
