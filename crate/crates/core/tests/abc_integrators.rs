mod common;

use abc_fab::integrators::{
    bootstrap, classical_ab2, integrate, integrate_full_history, integrate_reference, integrate_two_step, Bootstrap, Grid, Method,
    Trajectory, WeightVariant,
};
use abc_fab::math::Order;
use abc_fab::systems::{builtin_system, exact_tbeta, BuiltinOptions, State, SystemSpec, BUILTIN_NAMES};

fn system(name: &str) -> SystemSpec {
    builtin_system(name, &BuiltinOptions::default()).unwrap()
}

fn tbeta(beta: f64) -> SystemSpec {
    builtin_system("tbeta", &BuiltinOptions::default().with_param("beta", beta)).unwrap()
}

fn diff(a: &Trajectory, b: &Trajectory) -> f64 {
    common::max_abs_diff(&a.component(0), &b.component(0))
}

fn tbeta_error(tr: &Trajectory, order: Order, beta: f64) -> f64 {
    let exact: Vec<f64> = tr.times.iter().map(|&t| exact_tbeta(t, order, beta).unwrap()).collect();
    common::max_abs_diff(&tr.component(0), &exact)
}

#[test]
fn order_one_two_step_is_classical_ab2_on_every_builtin() {
    let grid = Grid::new(1e-3, 1000).unwrap();
    for name in BUILTIN_NAMES {
        let sys = system(name);
        let a = integrate_two_step(&sys, sys.default_ic(), grid, Order::classical(), WeightVariant::Corrected, Bootstrap::Rk4Classical)
            .unwrap();
        let b = classical_ab2(&sys, sys.default_ic(), grid, Bootstrap::Rk4Classical).unwrap();
        assert_eq!(a.len(), b.len(), "{name}");
        for (x, y) in a.states.iter().zip(&b.states) {
            for (p, q) in x.0.iter().zip(&y.0) {
                assert!((p - q).abs() <= 1e-12 * p.abs().max(1.0), "{name}: {p} vs {q}");
            }
        }
    }
}

#[test]
fn full_history_and_reference_agree_better_under_refinement() {
    let order = Order::new(0.8).unwrap();
    for sys in [system("linear_ty"), tbeta(2.0)] {
        let gaps: Vec<f64> = [0.02, 0.01, 0.005]
            .iter()
            .map(|&h| {
                let grid = Grid::with_final_time(h, 2.0).unwrap();
                let fh = integrate_full_history(&sys, sys.default_ic(), grid, order, Bootstrap::Rk4Classical).unwrap();
                let rf = integrate_reference(&sys, sys.default_ic(), grid, order, 8).unwrap();
                diff(&fh, &rf)
            })
            .collect();
        for w in gaps.windows(2) {
            assert!(w[0] / w[1] > 1.8, "{}: {gaps:?}", sys.name());
        }
    }
}

/// The two-step scheme extrapolates one line over the whole memory interval,
/// so on `f = t y / 1000` it settles at a fixed offset from the product
/// schemes instead of converging to them.
#[test]
fn two_step_offset_from_product_schemes_does_not_shrink() {
    let sys = system("linear_ty");
    let order = Order::new(0.8).unwrap();
    let gaps: Vec<f64> = [0.02, 0.01, 0.005]
        .iter()
        .map(|&h| {
            let grid = Grid::with_final_time(h, 5.0).unwrap();
            let ts = integrate_two_step(&sys, sys.default_ic(), grid, order, WeightVariant::Corrected, Bootstrap::Rk4Classical).unwrap();
            let fh = integrate_full_history(&sys, sys.default_ic(), grid, order, Bootstrap::Rk4Classical).unwrap();
            diff(&ts, &fh)
        })
        .collect();
    assert!(gaps.iter().all(|&g| g < 1e-3));
    assert!(gaps[2] > 0.95 * gaps[0], "{gaps:?}");
}

#[test]
fn full_history_converges_on_quadratic_forcing() {
    let order = Order::new(0.7).unwrap();
    let sys = tbeta(2.0);
    let errs: Vec<f64> = [0.04, 0.02, 0.01, 0.005]
        .iter()
        .map(|&h| {
            let tr = integrate_full_history(&sys, sys.default_ic(), Grid::with_final_time(h, 2.0).unwrap(), order, Bootstrap::Rk4Classical)
                .unwrap();
            tbeta_error(&tr, order, 2.0)
        })
        .collect();
    assert!(errs.windows(2).all(|w| w[1] < w[0]), "{errs:?}");
}

#[test]
fn fractional_euler_start_tracks_reference() {
    let order = Order::new(0.5).unwrap();
    let sys = tbeta(1.0);
    let gaps: Vec<f64> = [0.1, 0.05, 0.025]
        .iter()
        .map(|&h| {
            let u1 = bootstrap(sys.default_ic(), &sys, h, order, Bootstrap::FractionalEuler).unwrap();
            let rf = integrate_reference(&sys, sys.default_ic(), Grid::new(h, 1).unwrap(), order, 64).unwrap();
            (u1.0[0] - rf.final_state().0[0]).abs()
        })
        .collect();
    assert!(gaps.windows(2).all(|w| w[1] < w[0]), "{gaps:?}");
    assert!(gaps[2] < 0.025);
}

#[test]
fn reference_at_order_one_is_forward_euler() {
    let sys = tbeta(2.0);
    let h = 0.05;
    let tr = integrate_reference(&sys, sys.default_ic(), Grid::new(h, 40).unwrap(), Order::classical(), 1).unwrap();
    let mut y = 0.0;
    for (n, s) in tr.states.iter().enumerate() {
        assert!((s.0[0] - y).abs() <= 1e-14);
        let t = n as f64 * h;
        y += h * t * t;
    }
}

#[test]
fn weight_variants_give_different_trajectories() {
    let sys = tbeta(1.0);
    let grid = Grid::with_final_time(0.1, 1.0).unwrap();
    let order = Order::new(0.5).unwrap();
    let a = integrate_two_step(&sys, sys.default_ic(), grid, order, WeightVariant::Corrected, Bootstrap::Rk4Classical).unwrap();
    let b = integrate_two_step(&sys, sys.default_ic(), grid, order, WeightVariant::AsPrinted, Bootstrap::Rk4Classical).unwrap();
    assert!(diff(&a, &b) > 1e-6);
}

#[test]
fn chaotic_runs_truncate_cleanly() {
    let order = Order::new(0.75).unwrap();
    let grid = Grid::with_final_time(0.01, 100.0).unwrap();
    for name in ["chaos3d_a", "chaos3d_b", "hyper4d"] {
        let sys = system(name);
        for method in [Method::default(), Method::FullHistory { bootstrap: Bootstrap::Rk4Classical }] {
            let tr = integrate(method, &sys, sys.default_ic(), grid, order).unwrap();
            assert!(tr.states.iter().all(State::is_finite), "{name}");
            assert_eq!(tr.times.len(), tr.len());
            assert!(tr.times.iter().enumerate().all(|(n, &t)| t == grid.t(n)));
            if let Some(cut) = &tr.meta.truncation {
                assert_eq!(cut.step, tr.len());
                assert_eq!(cut.time, grid.t(cut.step));
            }
        }
    }
}

#[test]
fn trajectories_are_deterministic() {
    let sys = system("chaos3d_b");
    let grid = Grid::with_final_time(0.01, 1.0).unwrap();
    let order = Order::new(0.9).unwrap();
    let runs: Vec<Trajectory> = (0..3).map(|_| integrate(Method::default(), &sys, sys.default_ic(), grid, order).unwrap()).collect();
    assert!(runs.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn dimension_mismatch_is_rejected() {
    let sys = system("chaos3d_a");
    let grid = Grid::new(0.01, 10).unwrap();
    assert!(integrate(Method::default(), &sys, &State(vec![1.0]), grid, Order::classical()).is_err());
}
