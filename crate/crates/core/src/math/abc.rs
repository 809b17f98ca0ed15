//! Trapezoidal quadrature of the ABC derivative
//! `(AB(α)/(1−α)) ∫₀ᵗ u′(ξ) E_α(−α(t−ξ)^α/(1−α)) dξ`.

use super::{mittag_leffler, Order, SeriesControl};
use crate::error::{Error, Result};

const MIN_MESH: usize = 16;

fn check(t: f64, mesh: usize) -> Result<()> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::Domain(format!("evaluation time must be positive, got {t}")));
    }
    if mesh < MIN_MESH {
        return Err(Error::Precondition(format!("quadrature mesh must be at least {MIN_MESH}, got {mesh}")));
    }
    Ok(())
}

/// ABC derivative of `u` at `t`, with `u′` taken from second-order finite
/// differences on the quadrature mesh (one-sided at both ends, so `u` is only
/// sampled on `[0, t]`).
///
/// At `α = 1` the kernel degenerates and the classical derivative `u′(t)` is
/// returned instead.
pub fn abc_derivative_quadrature<U>(u: U, order: Order, t: f64, mesh: usize) -> Result<f64>
where
    U: Fn(f64) -> f64,
{
    check(t, mesh)?;
    let dx = t / mesh as f64;
    let samples: Vec<f64> = (0..=mesh).map(|i| u(i as f64 * dx)).collect();
    if let Some(i) = samples.iter().position(|v| !v.is_finite()) {
        return Err(Error::Evaluation(format!("u({}) is not finite", i as f64 * dx)));
    }
    let n = mesh;
    let mut du = vec![0.0; n + 1];
    du[0] = (-3.0 * samples[0] + 4.0 * samples[1] - samples[2]) / (2.0 * dx);
    du[n] = (3.0 * samples[n] - 4.0 * samples[n - 1] + samples[n - 2]) / (2.0 * dx);
    for i in 1..n {
        du[i] = (samples[i + 1] - samples[i - 1]) / (2.0 * dx);
    }
    integrate(&du, order, t)
}

/// ABC derivative at `t` given the analytic derivative `du` of the signal.
pub fn abc_derivative_quadrature_with<D>(du: D, order: Order, t: f64, mesh: usize) -> Result<f64>
where
    D: Fn(f64) -> f64,
{
    check(t, mesh)?;
    let dx = t / mesh as f64;
    let samples: Vec<f64> = (0..=mesh).map(|i| du(i as f64 * dx)).collect();
    if let Some(i) = samples.iter().position(|v| !v.is_finite()) {
        return Err(Error::Evaluation(format!("u'({}) is not finite", i as f64 * dx)));
    }
    integrate(&samples, order, t)
}

fn integrate(du: &[f64], order: Order, t: f64) -> Result<f64> {
    let n = du.len() - 1;
    if order.is_classical() {
        return Ok(du[n]);
    }
    let alpha = order.alpha();
    let scale = alpha / (1.0 - alpha);
    let dx = t / n as f64;
    let ctrl = SeriesControl::default();
    let mut acc = 0.0;
    for (i, &d) in du.iter().enumerate() {
        if d == 0.0 {
            continue;
        }
        // Distance to t measured in mesh cells keeps the last node exactly at 0.
        let lag = (n - i) as f64 * dx;
        let kernel = mittag_leffler(alpha, -scale * lag.powf(alpha), ctrl)?;
        let w = if i == 0 || i == n { 0.5 } else { 1.0 };
        acc += w * d * kernel;
    }
    let value = order.ab_norm() / (1.0 - alpha) * acc * dx;
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Evaluation("ABC derivative quadrature produced a non-finite value".into()))
    }
}
