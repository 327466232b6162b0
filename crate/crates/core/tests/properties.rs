use interpbound::bounds::{max_adjacent_diff, prop1_s, prop23_bound, theorem1_bound};
use interpbound::interpolant::cubic_coefficients;
use interpbound::{local_coordinate, solve, FluxModel, Grid, InterpolantPiece};
use proptest::prelude::*;

fn model() -> impl Strategy<Value = FluxModel> {
    prop_oneof![
        (0.1f64..3.0, any::<bool>()).prop_map(|(a, neg)| FluxModel::linear(if neg {
            -a
        } else {
            a
        })
        .unwrap()),
        Just(FluxModel::burgers()),
    ]
}

proptest! {
    #[test]
    fn dflux_matches_central_difference(m in model(), u in -5.0f64..5.0) {
        let e = 1e-5;
        let fd = (m.flux(u + e) - m.flux(u - e)) / (2.0 * e);
        prop_assert!((fd - m.dflux(u)).abs() < 1e-6);
    }

    #[test]
    fn cubic_meets_its_conditions(
        p1 in -5.0f64..5.0,
        gap in 1e-3f64..2.0,
        d1 in -5.0f64..5.0,
        d2 in -5.0f64..5.0,
    ) {
        let p2 = p1 + gap;
        let q = cubic_coefficients(p1, p2, d1, d2).unwrap();
        prop_assert!((q.eval(0.0) - p1).abs() < 1e-12);
        prop_assert!((q.eval(1.0) - p2).abs() < 1e-11);
        prop_assert!((q.derivative(0.0) - d1).abs() < 1e-12);
        prop_assert!((q.derivative(1.0) - d2).abs() < 1e-11);
    }

    #[test]
    fn subnodes_land_on_fine_nodes(p in 3usize..40, half_r in 1usize..5, j_frac in 0.0f64..1.0, m_frac in 0.0f64..=1.0) {
        let r = 2 * half_r;
        let h = 1.0 / p as f64;
        let refined = Grid::new(0.0, 1.0, h).unwrap().refine(r).unwrap();
        let j = ((p - 1) as f64 * j_frac) as usize;
        let m = (r as f64 * m_frac) as usize;
        let t = local_coordinate(m, r).unwrap();
        let x = refined.coarse().node(j) + t * h;
        prop_assert!((refined.subnode(j, m) - x).abs() < 1e-12);
        prop_assert_eq!(refined.subnode_index(j, m), j * r + m);
    }

    #[test]
    fn prop1_slack_identity(t in 0.0f64..=1.0) {
        let s = prop1_s(t).unwrap();
        prop_assert!((0.0..=1.0 + 1e-15).contains(&s));
        prop_assert!((t * t - (t - s / 4.0)).abs() < 1e-15);
    }

    #[test]
    fn theorem1_bound_grows_towards_the_midpoint(
        h in 0.001f64..0.5,
        d1 in -2.0f64..2.0,
        d2 in -2.0f64..2.0,
        half_r in 1usize..8,
        eps in 0.0f64..1.0,
    ) {
        let r = 2 * half_r;
        let b = |m| theorem1_bound(h, d1, d2, m, r, eps).unwrap();
        for m in 1..half_r {
            prop_assert!(b(m) <= b(m + 1));
            prop_assert_eq!(b(m), b(r - m));
        }
        prop_assert!(b(half_r) >= 1.5 * h);
    }

    #[test]
    fn piece_stays_near_its_endpoints(
        p1 in -1.0f64..1.0,
        h in 0.01f64..0.5,
        d1 in -2.0f64..2.0,
        d2 in -2.0f64..2.0,
        half_r in 1usize..8,
    ) {
        let piece = InterpolantPiece::from_values(0, p1, p1 + h, d1, d2).unwrap();
        let r = 2 * half_r;
        let v = piece.sample(r).unwrap();
        let bound = prop23_bound(h, d1, d2);
        for vm in &v {
            prop_assert!((vm - v[0]).abs() <= bound + 1e-12);
            prop_assert!((vm - v[r]).abs() <= bound + 1e-12);
        }
        prop_assert_eq!(v[0], d1);
        prop_assert_eq!(v[r], d2);
    }

    #[test]
    fn constants_are_steady(m in model(), c in -0.9f64..0.9, p in 3usize..30, steps in 1usize..6) {
        let grid = Grid::new(0.0, 1.0, 1.0 / p as f64).unwrap();
        let init = vec![c; grid.len()];
        let sol = solve(&init, &m, &grid, 0.5 * grid.h(), steps, c, c).unwrap();
        prop_assert!(sol.final_row().iter().all(|&u| u == c));
    }

    #[test]
    fn solves_are_deterministic(
        m in model(),
        values in prop::collection::vec(-0.5f64..0.5, 6..20),
        steps in 1usize..5,
    ) {
        let p = values.len() - 1;
        let grid = Grid::new(0.0, 1.0, 1.0 / p as f64).unwrap();
        let dt = 0.1 * grid.h();
        let (ua, ub) = (values[0], values[p]);
        let a = solve(&values, &m, &grid, dt, steps, ua, ub).unwrap();
        let b = solve(&values, &m, &grid, dt, steps, ua, ub).unwrap();
        for (x, y) in a.final_row().iter().zip(b.final_row()) {
            prop_assert_eq!(x.to_bits(), y.to_bits());
        }
    }

    #[test]
    fn linear_differences_decay_under_the_cfl_limit(
        values in prop::collection::vec(-1.0f64..1.0, 6..20),
        courant in 0.05f64..1.0,
    ) {
        // one step can at most triple the largest adjacent difference
        let p = values.len() - 1;
        let grid = Grid::new(0.0, 1.0, 1.0 / p as f64).unwrap();
        let model = FluxModel::linear(1.0).unwrap();
        let sol = solve(&values, &model, &grid, courant * grid.h(), 1, values[0], values[p]).unwrap();
        let before = max_adjacent_diff(sol.row(0));
        let after = max_adjacent_diff(sol.row(1));
        prop_assert!(after <= 3.0 * before + 1e-12);
    }
}
