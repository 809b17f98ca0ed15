use super::{base_meta, bootstrap, Bootstrap, Grid, Recorder, Scheme, Trajectory};
use crate::error::{Error, Result};
use crate::math::Order;
use crate::systems::{State, SystemSpec};

/// `k^a − (k−1)^a` without cancellation for large `k`.
fn pow_step(k: f64, a: f64) -> f64 {
    if k <= 1.0 {
        return k.powf(a);
    }
    -k.powf(a) * (a * (-1.0 / k).ln_1p()).exp_m1()
}

/// Moments of the kernel `s^{α−1}` against the linear hat functions on
/// `s ∈ [k−1, k]`: `P` weights the left node, `Q` the right node.
///
/// For `k ≥ 8` they are summed from the expansion of `(1 − θ/k)^{α−1}`, which
/// keeps full relative accuracy where the closed form cancels.
fn moments(k: usize, a: f64) -> (f64, f64) {
    let kf = k as f64;
    if k < 8 {
        let d1 = pow_step(kf, a + 1.0) / (a + 1.0);
        let d0 = pow_step(kf, a) / a;
        return (d1 - (kf - 1.0) * d0, kf * d0 - d1);
    }
    let x = 1.0 / kf;
    let (mut p, mut q) = (0.0, 0.0);
    let mut c = 1.0;
    for j in 0..200 {
        let jf = j as f64;
        let tp = c / ((jf + 1.0) * (jf + 2.0));
        p += tp;
        q += c / (jf + 2.0);
        if tp.abs() < 1e-17 * p {
            break;
        }
        c *= x * (jf + 1.0 - a) / (jf + 1.0);
    }
    let scale = kf.powf(a - 1.0);
    (scale * p, scale * q)
}

/// `(P(k+1) − P(k), Q(k+1) − Q(k))` for `k = 1..=n`, index 0 unused.
fn moment_differences(n: usize, a: f64) -> (Vec<f64>, Vec<f64>) {
    let mut dp = vec![0.0; n + 1];
    let mut dq = vec![0.0; n + 1];
    let mut prev = moments(1, a);
    for k in 1..=n {
        let next = moments(k + 1, a);
        dp[k] = next.0 - prev.0;
        dq[k] = next.1 - prev.1;
        prev = next;
    }
    (dp, dq)
}

/// Extrapolation coefficients on `(f_n, f_{n−1})` for the newest interval.
fn newest_interval(a: f64) -> (f64, f64) {
    (2.0 / a - 1.0 / (a + 1.0), -1.0 / (a * (a + 1.0)))
}

/// `u_{n+1} − u_n` of the full-history scheme for a scalar history
/// `f_0, …, f_n` (`n ≥ 1`).
///
/// Each past interval `[t_j, t_{j+1}]` uses the linear interpolant of `f`
/// integrated exactly against `(t − τ)^{α−1}`; the newest interval
/// `[t_n, t_{n+1}]` extrapolates the line through `f_{n−1}, f_n`.
pub fn memory_increment(order: Order, h: f64, history: &[f64]) -> Result<f64> {
    if history.len() < 2 {
        return Err(Error::Precondition("memory increment needs at least f_0 and f_1".into()));
    }
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::Domain(format!("step size must be positive, got {h}")));
    }
    let n = history.len() - 1;
    let (dp, dq) = moment_differences(n, order.alpha());
    Ok(increment(order, h, n, &dp, &dq, |j| history[j]))
}

fn increment(order: Order, h: f64, n: usize, dp: &[f64], dq: &[f64], f: impl Fn(usize) -> f64) -> f64 {
    let a = order.alpha();
    let (e0, e1) = newest_interval(a);
    let mut sum = e0 * f(n) + e1 * f(n - 1);
    for j in 0..n {
        let k = n - j;
        sum += dp[k] * f(j) + dq[k] * f(j + 1);
    }
    order.local_coefficient() * (f(n) - f(n - 1)) + order.memory_coefficient() * h.powf(a) * sum
}

/// Full-history product integration of the Volterra form. Cost O(N²).
pub fn integrate_full_history(system: &SystemSpec, ic: &State, grid: Grid, order: Order, start: Bootstrap) -> Result<Trajectory> {
    grid.require_two_steps()?;
    let h = grid.h();
    let mut meta = base_meta(system, grid, order, Scheme::FullHistory);
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
    let (dp, dq) = moment_differences(grid.n_steps(), order.alpha());
    let dim = system.dimension();
    for n in 1..grid.n_steps() {
        let next = (0..dim).map(|i| rec.states[n].0[i] + increment(order, h, n, &dp, &dq, |j| rec.rhs[j][i])).collect();
        if !rec.push(next) {
            break;
        }
    }
    Ok(rec.finish(meta))
}
