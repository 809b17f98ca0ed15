use super::{base_meta, bootstrap, weights, Bootstrap, Grid, Recorder, Scheme, Trajectory, WeightVariant};
use crate::error::Result;
use crate::math::Order;
use crate::systems::{State, SystemSpec};

/// Two-step fractional Adams-Bashforth integration,
/// `u_{n+1} = u_n + ω₁(n,α,h) f(t_n, u_n) + ω₂(n,α,h) f(t_{n−1}, u_{n−1})`,
/// applied componentwise. Cost is O(N).
///
/// `u₁` comes from `start`. The stability diagnostic `‖f_n − f_{n−1}‖∞` is
/// recorded for every completed step.
pub fn integrate_two_step(
    system: &SystemSpec,
    ic: &State,
    grid: Grid,
    order: Order,
    variant: WeightVariant,
    start: Bootstrap,
) -> Result<Trajectory> {
    grid.require_two_steps()?;
    let h = grid.h();
    let mut meta = base_meta(system, grid, order, Scheme::TwoStep);
    meta.variant = Some(variant);
    meta.bootstrap = Some(start);
    let mut rec = Recorder::start(system, ic, grid)?;
    match bootstrap(ic, system, h, order, start) {
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
        let w = weights(n, order, h, variant)?;
        let (u, f, fp) = (&rec.states[n].0, &rec.rhs[n], &rec.rhs[n - 1]);
        let next = (0..u.len()).map(|i| u[i] + w.omega1 * f[i] + w.omega2 * fp[i]).collect();
        if !rec.push(next) {
            break;
        }
    }
    Ok(rec.finish(meta))
}
