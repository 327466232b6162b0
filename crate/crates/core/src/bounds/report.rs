use std::collections::BTreeMap;

use super::checks::{difference_decay, increment_decay, BoundFamily, FamilyCheck, FamilySet};
use super::{
    corollary3_bound, corollary3_delta, corollary4_bound, corollary5_bound, detect_turbulence,
    detect_zero_intervals, pow3, prop23_bound, theorem1_formula, EpsilonContext, BOUND_SLACK,
    DIFF_SLACK,
};
use crate::error::{Error, Result};
use crate::flux::FluxModel;
use crate::grid::RefinedGrid;
use crate::interpolant::InterpolantSolution;
use crate::solver::{linear_stability_params, Solution};

/// Interpolant vs. fine solution at subnode `m` of coarse interval `j`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SubnodeRecord {
    pub j: usize,
    pub m: usize,
    pub x: f64,
    pub t: f64,
    pub v: f64,
    pub u: f64,
    pub abs_err: f64,
    /// Theorem-1 bound; at `m = 0` the same formula with `min(m, r-m) = 0`.
    pub thm1: f64,
    pub cor3: Option<f64>,
    pub cor4: Option<f64>,
    pub cor5: Option<f64>,
    pub turbulent: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReportSummary {
    pub max_err: f64,
    /// `max abs_err / thm1`.
    pub max_tightness: f64,
    pub update_count_coarse: u64,
    pub update_count_fine: u64,
    pub cost_ratio: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub h: f64,
    pub r: usize,
    pub epsilon: EpsilonContext,
    pub records: Vec<SubnodeRecord>,
    pub checks: Vec<FamilyCheck>,
    /// Sign-change intervals of the coarse solution at step `N` (all `j`).
    pub turbulent_intervals: Vec<usize>,
    /// Intervals whose coarse end values at step `N` are both zero.
    pub zero_intervals: Vec<usize>,
    pub summary: ReportSummary,
}

impl BoundReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(FamilyCheck::all_passed)
    }

    pub fn check(&self, family: BoundFamily) -> Option<&FamilyCheck> {
        self.checks.iter().find(|c| c.family == family)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct CompareOptions {
    pub families: FamilySet,
    /// Target accuracy for the `cor3` family; attached wherever the initial
    /// differences fall below the matching threshold.
    pub cor3_target: Option<f64>,
}

fn tally(checks: &mut BTreeMap<BoundFamily, FamilyCheck>, family: BoundFamily) -> &mut FamilyCheck {
    checks
        .entry(family)
        .or_insert_with(|| FamilyCheck::new(family))
}

fn mismatch(msg: String) -> Error {
    Error::GridMismatch(msg)
}

fn validate(
    refined: &RefinedGrid,
    coarse: &Solution,
    fine: &Solution,
    interp: &InterpolantSolution,
    ctx: &EpsilonContext,
) -> Result<()> {
    let r = refined.r();
    let (cg, fg) = (coarse.grid(), fine.grid());
    if cg != refined.coarse() {
        return Err(mismatch(
            "coarse solution is not on the refined grid's coarse level".into(),
        ));
    }
    if fg.intervals() != cg.intervals() * r || (fg.h() * r as f64 - cg.h()).abs() > 1e-12 * cg.h() {
        return Err(mismatch(format!(
            "k != h/r (k = {}, h = {}, r = {r})",
            fg.h(),
            cg.h()
        )));
    }
    if fine.steps() != coarse.steps() * r {
        return Err(mismatch(format!(
            "M != N r (M = {}, N = {}, r = {r})",
            fine.steps(),
            coarse.steps()
        )));
    }
    if (fine.dt() * r as f64 - coarse.dt()).abs() > 1e-12 * coarse.dt() {
        return Err(mismatch(format!(
            "dt r != Dt (dt = {}, Dt = {}, r = {r})",
            fine.dt(),
            coarse.dt()
        )));
    }
    if coarse.boundary() != fine.boundary() {
        return Err(mismatch("coarse and fine boundary values differ".into()));
    }
    if interp.step() != coarse.steps() || interp.pieces().len() != cg.intervals() - 2 {
        return Err(mismatch(format!(
            "interpolant built at step {} with {} pieces, expected step {} with {}",
            interp.step(),
            interp.pieces().len(),
            coarse.steps(),
            cg.intervals() - 2
        )));
    }
    if ctx.fine_steps != fine.steps() {
        return Err(mismatch(format!(
            "epsilon context uses M = {}, fine solve has {}",
            ctx.fine_steps,
            fine.steps()
        )));
    }
    Ok(())
}

/// Evaluates the interpolant against the fine solution at every subnode of
/// every piece and runs all enabled bound families.
///
/// Families that depend on the smallness hypothesis are skipped when
/// `ctx.hypothesis_holds` is false.
pub fn compare(
    refined: &RefinedGrid,
    coarse: &Solution,
    fine: &Solution,
    interp: &InterpolantSolution,
    ctx: &EpsilonContext,
    model: &FluxModel,
    opts: &CompareOptions,
) -> Result<BoundReport> {
    validate(refined, coarse, fine, interp, ctx)?;
    let r = refined.r();
    let h = refined.coarse().h();
    let eps = ctx.eps;
    let steps = coarse.steps();
    let fine_steps = fine.steps();
    let u_final = fine.final_row();
    let w_final = coarse.final_row();

    let run = |family: BoundFamily| {
        opts.families.enabled(family) && (ctx.hypothesis_holds || !family.needs_hypothesis())
    };
    let mut checks: BTreeMap<BoundFamily, FamilyCheck> = BTreeMap::new();

    let turbulent_intervals = detect_turbulence(w_final);
    let zero_intervals = detect_zero_intervals(w_final);

    // linear-flux norm bound applies only on a stability-admissible coarse grid
    let cor4_applies = match model.linear_speed() {
        Some(a) => linear_stability_params(a, h, steps, coarse.dt())?.admissible,
        None => false,
    };
    let u0_sup = fine.row(0).iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
    let (dom_a, dom_b) = (refined.coarse().a(), refined.coarse().b());

    let mut records = Vec::with_capacity(interp.pieces().len() * (r + 1));
    for piece in interp.pieces() {
        let j = piece.j;
        let v = piece.sample(r)?;
        let turbulent = turbulent_intervals.binary_search(&j).is_ok();
        let u_left = u_final[refined.fine_index(j)];
        let u_right = u_final[refined.fine_index(j + 1)];

        if run(BoundFamily::Prop23) {
            let bound = prop23_bound(h, piece.d1, piece.d2);
            for &vm in &v {
                tally(&mut checks, BoundFamily::Prop23).record(
                    (vm - v[r]).abs(),
                    bound,
                    BOUND_SLACK,
                );
                tally(&mut checks, BoundFamily::Prop23).record(
                    (vm - v[0]).abs(),
                    bound,
                    BOUND_SLACK,
                );
            }
        }
        if run(BoundFamily::Prop78) {
            tally(&mut checks, BoundFamily::Prop78).record((v[0] - u_left).abs(), eps, BOUND_SLACK);
            tally(&mut checks, BoundFamily::Prop78).record(
                (v[r] - u_right).abs(),
                eps,
                BOUND_SLACK,
            );
        }

        for m in 0..=r {
            let u = u_final[refined.subnode_index(j, m)];
            let abs_err = (v[m] - u).abs();
            let thm1 = theorem1_formula(h, piece.d1, piece.d2, m, r, eps);
            let near = m.min(r - m) as f64;

            let cor3 = match opts.cor3_target {
                Some(target) if m > 0 => {
                    let delta = corollary3_delta(target, m, r, fine_steps)?;
                    (ctx.max_initial_diff <= delta)
                        .then(|| corollary3_bound(h, piece.d1, piece.d2, target))
                }
                _ => None,
            };
            let cor4 = cor4_applies.then(|| {
                corollary4_bound(
                    h,
                    dom_a,
                    dom_b,
                    steps,
                    coarse.dt(),
                    u0_sup,
                    (near + 3.0) * eps,
                )
            });
            let cor5 = turbulent.then(|| corollary5_bound(h, eps));

            if run(BoundFamily::Theorem1) {
                tally(&mut checks, BoundFamily::Theorem1).record(abs_err, thm1, BOUND_SLACK);
            }
            if run(BoundFamily::Cor3) {
                if let Some(b) = cor3 {
                    tally(&mut checks, BoundFamily::Cor3).record(abs_err, b, BOUND_SLACK);
                }
            }
            if run(BoundFamily::Cor4) {
                if let Some(b) = cor4 {
                    tally(&mut checks, BoundFamily::Cor4).record(abs_err, b, BOUND_SLACK);
                }
            }
            if run(BoundFamily::Cor5) {
                if let Some(b) = cor5 {
                    tally(&mut checks, BoundFamily::Cor5).record(abs_err, b, BOUND_SLACK);
                }
            }
            if run(BoundFamily::Prop910) && m > 0 {
                if 2 * m <= r {
                    tally(&mut checks, BoundFamily::Prop910).record(
                        (u_left - u).abs(),
                        m as f64 * eps,
                        BOUND_SLACK,
                    );
                }
                if 2 * m >= r {
                    tally(&mut checks, BoundFamily::Prop910).record(
                        (u - u_right).abs(),
                        (r - m) as f64 * eps,
                        BOUND_SLACK,
                    );
                }
            }

            records.push(SubnodeRecord {
                j,
                m,
                x: refined.subnode(j, m),
                t: m as f64 / r as f64,
                v: v[m],
                u,
                abs_err,
                thm1,
                cor3,
                cor4,
                cor5,
                turbulent,
            });
        }
    }

    if run(BoundFamily::Cor2) {
        let p = refined.coarse().intervals();
        for j in 1..=p - 2 {
            tally(&mut checks, BoundFamily::Cor2).record(
                (w_final[j] - w_final[j + 1]).abs(),
                eps,
                DIFF_SLACK,
            );
        }
    }
    if run(BoundFamily::Prop4) {
        let mut c = difference_decay(fine, eps)?;
        c.merge(&difference_decay(coarse, eps)?);
        tally(&mut checks, BoundFamily::Prop4).merge(&c);
    }
    if run(BoundFamily::Prop5) {
        let mut c = increment_decay(fine, eps)?;
        c.merge(&increment_decay(coarse, eps)?);
        tally(&mut checks, BoundFamily::Prop5).merge(&c);
    }
    if run(BoundFamily::Prop6) {
        let bound = eps / pow3(steps)?;
        for w in coarse.row(0).windows(2) {
            tally(&mut checks, BoundFamily::Prop6).record((w[0] - w[1]).abs(), bound, DIFF_SLACK);
        }
    }

    let max_err = records.iter().map(|r| r.abs_err).fold(0.0, f64::max);
    let max_tightness = records
        .iter()
        .filter(|r| r.thm1 > 0.0)
        .map(|r| r.abs_err / r.thm1)
        .fold(0.0, f64::max);
    let (uc, uf) = (coarse.update_count(), fine.update_count());

    Ok(BoundReport {
        h,
        r,
        epsilon: *ctx,
        records,
        checks: checks.into_values().collect(),
        turbulent_intervals,
        zero_intervals,
        summary: ReportSummary {
            max_err,
            max_tightness,
            update_count_coarse: uc,
            update_count_fine: uf,
            cost_ratio: uf as f64 / uc as f64,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Grid;
    use crate::interpolant::build_interpolant;
    use crate::solver::solve;

    fn pipeline(
        model: FluxModel,
        h: f64,
        dt: f64,
        steps: usize,
        r: usize,
        u0: impl Fn(f64) -> f64,
    ) -> Result<BoundReport> {
        let g = Grid::new(0.0, 1.0, h)?;
        let rg = g.refine(r)?;
        let cw = g.sample(&u0);
        let fw = rg.fine().sample(&u0);
        let (ua, ub) = (u0(0.0), u0(1.0));
        let coarse = solve(&cw, &model, &g, dt, steps, ua, ub)?;
        let fine = solve(&fw, &model, rg.fine(), dt / r as f64, steps * r, ua, ub)?;
        let interp = build_interpolant(&coarse)?;
        let ctx = EpsilonContext::from_initial(fine.row(0), steps * r)?;
        compare(
            &rg,
            &coarse,
            &fine,
            &interp,
            &ctx,
            &model,
            &CompareOptions::default(),
        )
    }

    #[test]
    fn zero_data_is_equality_case() {
        let rep = pipeline(FluxModel::burgers(), 0.1, 0.05, 2, 4, |_| 0.0).unwrap();
        assert_eq!(rep.epsilon.eps, 0.0);
        let mid: Vec<_> = rep.records.iter().filter(|r| r.m == 2).collect();
        assert_eq!(mid.len(), 8);
        for rec in mid {
            assert!((rec.abs_err - 0.15).abs() < 1e-12);
            assert!((rec.thm1 - 0.15).abs() < 1e-15);
        }
        assert!(rep.all_passed(), "{:?}", rep.checks);
        assert!((rep.summary.max_tightness - 1.0).abs() < 1e-12);
        assert_eq!(rep.zero_intervals.len(), 10);
    }

    #[test]
    fn near_constant_linear_advection_passes() {
        let rep = pipeline(FluxModel::linear(1.0).unwrap(), 0.1, 0.05, 2, 2, |x| {
            0.4 + 1e-6 * (2.0 * std::f64::consts::PI * x).sin()
        })
        .unwrap();
        assert!(rep.epsilon.eps > 0.0);
        assert!(rep.all_passed(), "{:?}", rep.checks);
        assert_eq!(rep.records.len(), 8 * 3);
        for rec in &rep.records {
            assert_eq!(rec.abs_err, (rec.v - rec.u).abs());
        }
    }

    #[test]
    fn cost_ratio_from_update_counts() {
        let rep = pipeline(FluxModel::burgers(), 0.1, 0.05, 5, 4, |_| 0.25).unwrap();
        assert_eq!(rep.summary.update_count_coarse, 45);
        assert_eq!(rep.summary.update_count_fine, 780);
        assert!((rep.summary.cost_ratio - 780.0 / 45.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_mismatched_time_steps() {
        let model = FluxModel::burgers();
        let g = Grid::new(0.0, 1.0, 0.1).unwrap();
        let rg = g.refine(2).unwrap();
        let coarse = solve(&g.sample(|_| 0.0), &model, &g, 0.05, 2, 0.0, 0.0).unwrap();
        let interp = build_interpolant(&coarse).unwrap();
        let fw = rg.fine().sample(|_| 0.0);

        let fine = solve(&fw, &model, rg.fine(), 0.025, 3, 0.0, 0.0).unwrap();
        let ctx = EpsilonContext::from_initial(fine.row(0), 3).unwrap();
        let err = compare(
            &rg,
            &coarse,
            &fine,
            &interp,
            &ctx,
            &model,
            &Default::default(),
        );
        assert!(matches!(err, Err(Error::GridMismatch(ref s)) if s.starts_with("M != N r")));

        let fine = solve(&fw, &model, rg.fine(), 0.05, 4, 0.0, 0.0).unwrap();
        let ctx = EpsilonContext::from_initial(fine.row(0), 4).unwrap();
        let err = compare(
            &rg,
            &coarse,
            &fine,
            &interp,
            &ctx,
            &model,
            &Default::default(),
        );
        assert!(matches!(err, Err(Error::GridMismatch(ref s)) if s.starts_with("dt r != Dt")));

        let other = Grid::new(0.0, 1.0, 0.025).unwrap();
        let fine = solve(&other.sample(|_| 0.0), &model, &other, 0.025, 4, 0.0, 0.0).unwrap();
        let ctx = EpsilonContext::from_initial(fine.row(0), 4).unwrap();
        let err = compare(
            &rg,
            &coarse,
            &fine,
            &interp,
            &ctx,
            &model,
            &Default::default(),
        );
        assert!(matches!(err, Err(Error::GridMismatch(ref s)) if s.starts_with("k != h/r")));
    }

    #[test]
    fn failed_hypothesis_skips_eps_families() {
        let model = FluxModel::linear(1.0).unwrap();
        let g = Grid::new(0.0, 1.0, 0.1).unwrap();
        let rg = g.refine(2).unwrap();
        let u0 = |x: f64| x;
        let coarse = solve(&g.sample(u0), &model, &g, 0.05, 2, 0.0, 1.0).unwrap();
        let fine = solve(&rg.fine().sample(u0), &model, rg.fine(), 0.025, 4, 0.0, 1.0).unwrap();
        let interp = build_interpolant(&coarse).unwrap();
        let ctx = EpsilonContext::with_eps(fine.row(0), 4, 1e-3).unwrap();
        assert!(!ctx.hypothesis_holds);
        let rep = compare(
            &rg,
            &coarse,
            &fine,
            &interp,
            &ctx,
            &model,
            &Default::default(),
        )
        .unwrap();
        let families: Vec<_> = rep.checks.iter().map(|c| c.family).collect();
        assert_eq!(families, [BoundFamily::Prop23]);
    }

    #[test]
    fn cor3_attached_when_target_is_loose_enough() {
        let model = FluxModel::burgers();
        let g = Grid::new(0.0, 1.0, 0.1).unwrap();
        let rg = g.refine(2).unwrap();
        let u0 = |x: f64| 0.3 + 1e-7 * x;
        let (ua, ub) = (u0(0.0), u0(1.0));
        let coarse = solve(&g.sample(u0), &model, &g, 0.05, 2, ua, ub).unwrap();
        let fine = solve(&rg.fine().sample(u0), &model, rg.fine(), 0.025, 4, ua, ub).unwrap();
        let interp = build_interpolant(&coarse).unwrap();
        let ctx = EpsilonContext::from_initial(fine.row(0), 4).unwrap();
        let opts = CompareOptions {
            cor3_target: Some(1e-2),
            ..Default::default()
        };
        let rep = compare(&rg, &coarse, &fine, &interp, &ctx, &model, &opts).unwrap();
        let cor3 = rep.check(BoundFamily::Cor3).unwrap();
        assert_eq!(cor3.total, 8 * 2);
        assert!(cor3.all_passed());

        let opts = CompareOptions {
            cor3_target: Some(1e-9),
            ..Default::default()
        };
        let rep = compare(&rg, &coarse, &fine, &interp, &ctx, &model, &opts).unwrap();
        assert!(rep.check(BoundFamily::Cor3).is_none());
    }
}
