use crate::error::{Error, Result};
use crate::integrators::{integrate, Grid, Method, Trajectory};
use crate::math::Order;
use crate::systems::{builtin_system, exact_tbeta, BuiltinOptions};
use rayon::prelude::*;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConvergenceRow {
    pub h: f64,
    pub max_abs_error: f64,
    /// Order measured against the previous row.
    pub observed_order: Option<f64>,
    /// False when the run was truncated; the error then covers only the
    /// completed steps.
    pub valid: bool,
}

/// Max over the trajectory's grid points of `|y_n − exact_tbeta(t_n)|`.
pub fn max_error_against_tbeta(tr: &Trajectory, order: Order, beta: f64) -> Result<f64> {
    tr.times.iter().zip(&tr.states).try_fold(0.0f64, |acc, (&t, s)| Ok(acc.max((s.0[0] - exact_tbeta(t, order, beta)?).abs())))
}

/// Integrates `tbeta` to `t_final` once per step size and tabulates the
/// max-norm error. The runs are independent and execute in parallel.
pub fn convergence_table(order: Order, beta: f64, h_list: &[f64], t_final: f64, method: Method) -> Result<Vec<ConvergenceRow>> {
    if h_list.is_empty() {
        return Err(Error::Config("need at least one step size".into()));
    }
    if h_list.windows(2).any(|w| w[1] >= w[0]) {
        return Err(Error::Config("step sizes must be strictly decreasing".into()));
    }
    let system = builtin_system("tbeta", &BuiltinOptions::default().with_param("beta", beta))?;
    let grids = h_list.iter().map(|&h| Grid::with_final_time(h, t_final)).collect::<Result<Vec<_>>>()?;
    let raw = grids
        .par_iter()
        .map(|&grid| {
            let tr = integrate(method, &system, system.default_ic(), grid, order)?;
            Ok((grid.h(), max_error_against_tbeta(&tr, order, beta)?, tr.is_complete()))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut rows: Vec<ConvergenceRow> =
        raw.into_iter().map(|(h, max_abs_error, valid)| ConvergenceRow { h, max_abs_error, observed_order: None, valid }).collect();
    observed_orders(&mut rows);
    Ok(rows)
}

/// Fills `observed_order` from consecutive rows: `log₂` of the error ratio for
/// exact halvings, `log(err ratio)/log(h ratio)` otherwise.
pub fn observed_orders(rows: &mut [ConvergenceRow]) {
    for i in 1..rows.len() {
        let (prev, cur) = (rows[i - 1], rows[i]);
        rows[i].observed_order = (prev.valid && cur.valid && prev.max_abs_error > 0.0 && cur.max_abs_error > 0.0).then(|| {
            let ratio = prev.max_abs_error / cur.max_abs_error;
            let h_ratio = prev.h / cur.h;
            if (h_ratio - 2.0).abs() <= 1e-12 {
                ratio.log2()
            } else {
                ratio.ln() / h_ratio.ln()
            }
        });
    }
}
