use super::{base_meta, bootstrap, Bootstrap, Grid, Recorder, Scheme, Trajectory};
use crate::error::Result;
use crate::math::Order;
use crate::systems::{State, SystemSpec};

/// Plain second-order Adams-Bashforth for `du/dt = f(t, u)`:
/// `u_{n+1} = u_n + 3h/2 f_n − h/2 f_{n−1}`.
///
/// This is the `α = 1` limit of the fractional two-step scheme, coded directly
/// so it can serve as an independent check of that limit.
pub fn classical_ab2(system: &SystemSpec, ic: &State, grid: Grid, start: Bootstrap) -> Result<Trajectory> {
    grid.require_two_steps()?;
    let h = grid.h();
    let mut meta = base_meta(system, grid, Order::classical(), Scheme::TwoStep);
    meta.bootstrap = Some(start);
    meta.notes.push("classical AB2".into());
    let mut rec = Recorder::start(system, ic, grid)?;
    match bootstrap(ic, system, h, Order::classical(), start) {
        Ok(u1) => {
            if !rec.push(u1.0) {
                return Ok(rec.finish(meta));
            }
        }
        Err(e) => {
            rec.truncate(1, e.to_string());
            return Ok(rec.finish(meta));
        }
    }
    for n in 1..grid.n_steps() {
        let (u, f, fp) = (&rec.states[n].0, &rec.rhs[n], &rec.rhs[n - 1]);
        let next = (0..u.len()).map(|i| u[i] + 1.5 * h * f[i] - 0.5 * h * fp[i]).collect();
        if !rec.push(next) {
            break;
        }
    }
    Ok(rec.finish(meta))
}
