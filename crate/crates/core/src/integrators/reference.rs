use super::{base_meta, Grid, Recorder, Scheme, Trajectory};
use crate::error::{Error, Result};
use crate::math::Order;
use crate::systems::{State, SystemSpec};

const FIXED_POINT_TOL: f64 = 1e-14;
const FIXED_POINT_MAX_ITER: usize = 200;
const NEWTON_TOL: f64 = 1e-12;
const NEWTON_MAX_ITER: usize = 50;

/// Solves `u = base + κ f(t, u)` by fixed-point iteration from `u`, falling
/// back to Newton's method with a forward-difference Jacobian when the
/// iteration does not contract. Returns `false` if neither converges.
fn solve_local(system: &SystemSpec, t: f64, kappa: f64, base: &[f64], u: &mut [f64]) -> bool {
    let dim = u.len();
    let start = u.to_vec();
    let mut f = vec![0.0; dim];
    for _ in 0..FIXED_POINT_MAX_ITER {
        system.eval_into(t, u, &mut f);
        let mut delta: f64 = 0.0;
        let mut size: f64 = 1.0;
        for i in 0..dim {
            let next = base[i] + kappa * f[i];
            delta = delta.max((next - u[i]).abs());
            size = size.max(next.abs());
            u[i] = next;
        }
        if !delta.is_finite() {
            break;
        }
        if delta <= FIXED_POINT_TOL * size {
            return true;
        }
    }
    u.copy_from_slice(&start);
    newton(system, t, kappa, base, u)
}

fn residual(system: &SystemSpec, t: f64, kappa: f64, base: &[f64], u: &[f64], f: &mut [f64], r: &mut [f64]) -> f64 {
    system.eval_into(t, u, f);
    let mut worst: f64 = 0.0;
    for i in 0..u.len() {
        r[i] = u[i] - base[i] - kappa * f[i];
        worst = worst.max(r[i].abs());
    }
    if worst.is_nan() {
        f64::INFINITY
    } else {
        worst
    }
}

/// Damped Newton: each step is halved until the residual norm decreases.
fn newton(system: &SystemSpec, t: f64, kappa: f64, base: &[f64], u: &mut [f64]) -> bool {
    let dim = u.len();
    let mut f = vec![0.0; dim];
    let mut fp = vec![0.0; dim];
    let mut jac = vec![0.0; dim * dim];
    let mut r = vec![0.0; dim];
    let mut trial = vec![0.0; dim];
    let mut r_trial = vec![0.0; dim];
    let mut res = residual(system, t, kappa, base, u, &mut f, &mut r);
    for _ in 0..NEWTON_MAX_ITER {
        if !res.is_finite() {
            return false;
        }
        let size = u.iter().fold(1.0f64, |m, v| m.max(v.abs()));
        if res <= NEWTON_TOL * size {
            return true;
        }
        for c in 0..dim {
            let step = f64::EPSILON.sqrt() * u[c].abs().max(1.0);
            let keep = u[c];
            u[c] += step;
            system.eval_into(t, u, &mut fp);
            u[c] = keep;
            for i in 0..dim {
                let df = (fp[i] - f[i]) / step;
                jac[i * dim + c] = if i == c { 1.0 } else { 0.0 } - kappa * df;
            }
        }
        if !solve_in_place(&mut jac, &mut r, dim) {
            return false;
        }
        let mut lambda = 1.0;
        loop {
            for i in 0..dim {
                trial[i] = u[i] - lambda * r[i];
            }
            let next = residual(system, t, kappa, base, &trial, &mut fp, &mut r_trial);
            if next < res || lambda < 1e-10 {
                u.copy_from_slice(&trial);
                f.copy_from_slice(&fp);
                r.copy_from_slice(&r_trial);
                res = next;
                break;
            }
            lambda *= 0.5;
        }
    }
    false
}

/// Gaussian elimination with partial pivoting; `b` is overwritten by the solution.
fn solve_in_place(a: &mut [f64], b: &mut [f64], n: usize) -> bool {
    for col in 0..n {
        let pivot = (col..n).max_by(|&i, &j| a[i * n + col].abs().total_cmp(&a[j * n + col].abs())).unwrap();
        if a[pivot * n + col] == 0.0 || !a[pivot * n + col].is_finite() {
            return false;
        }
        if pivot != col {
            for k in 0..n {
                a.swap(col * n + k, pivot * n + k);
            }
            b.swap(col, pivot);
        }
        for row in col + 1..n {
            let factor = a[row * n + col] / a[col * n + col];
            for k in col..n {
                a[row * n + k] -= factor * a[col * n + k];
            }
            b[row] -= factor * b[col];
        }
    }
    for row in (0..n).rev() {
        let mut s = b[row];
        for k in row + 1..n {
            s -= a[row * n + k] * b[k];
        }
        b[row] = s / a[row * n + row];
    }
    true
}

/// First-order product-rectangle discretization of the Volterra form on a mesh
/// `refine` times finer than `grid`, sampled back at the grid points.
///
/// On the fine mesh `t_m = m h_f`,
/// `u_m = u_0 + (1−α)/AB f(t_m, u_m) + h_f^α/(AB Γ(α)) Σ_{j<m} b_{m−j} f(t_j, u_j)`
/// with `b_k = k^α − (k−1)^α`. The local term is implicit and is resolved by
/// fixed-point iteration, or Newton's method where that does not contract;
/// failure to converge truncates the run. At `α = 1`
/// the local term vanishes and this is explicit Euler.
pub fn integrate_reference(system: &SystemSpec, ic: &State, grid: Grid, order: Order, refine: usize) -> Result<Trajectory> {
    if refine == 0 {
        return Err(Error::Precondition("refine must be at least 1".into()));
    }
    let mut meta = base_meta(system, grid, order, Scheme::Reference);
    meta.refine = Some(refine);
    let mut rec = Recorder::start(system, ic, grid)?;

    let a = order.alpha();
    let dim = system.dimension();
    let hf = grid.h() / refine as f64;
    let fine_steps = grid.n_steps() * refine;
    let scale = hf.powf(a) / (order.ab_norm() * order.gamma_alpha());
    let kappa = order.local_coefficient();
    let b: Vec<f64> = (0..=fine_steps).map(|k| if k == 0 { 0.0 } else { (k as f64).powf(a) - (k as f64 - 1.0).powf(a) }).collect();

    let u0 = ic.as_slice();
    let mut fhist: Vec<f64> = Vec::with_capacity((fine_steps + 1) * dim);
    fhist.extend_from_slice(&rec.rhs[0]);
    let mut u = u0.to_vec();
    let mut base = vec![0.0; dim];
    let mut f = vec![0.0; dim];

    for m in 1..=fine_steps {
        let t = m as f64 * hf;
        for (i, slot) in base.iter_mut().enumerate() {
            let mut s = 0.0;
            for j in 0..m {
                s += b[m - j] * fhist[j * dim + i];
            }
            *slot = u0[i] + scale * s;
        }
        let converged = if kappa == 0.0 {
            u.copy_from_slice(&base);
            true
        } else {
            solve_local(system, t, kappa, &base, &mut u)
        };
        let step = m.div_ceil(refine);
        if !converged {
            rec.truncate(step, format!("implicit local solve did not converge at t = {t}"));
            break;
        }
        system.eval_into(t, &u, &mut f);
        if !u.iter().chain(&f).all(|v| v.is_finite()) {
            rec.truncate(step, "state became non-finite");
            break;
        }
        fhist.extend_from_slice(&f);
        if m % refine == 0 && !rec.push(u.clone()) {
            break;
        }
    }
    Ok(rec.finish(meta))
}
