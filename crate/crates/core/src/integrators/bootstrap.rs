use super::Bootstrap;
use crate::error::{Error, Result};
use crate::math::Order;
use crate::systems::{State, SystemSpec};

/// Produces `u₁ ≈ u(h)` from `u₀ = u(0)`.
///
/// `Rk4Classical` takes one classical RK4 step of `du/dt = f(t, u)`, which is
/// only a local approximation when `α < 1`. `FractionalEuler` takes one
/// explicit product-rectangle step of the Volterra form,
/// `u₁ = u₀ + [(1−α)/AB + α h^α/(AB Γ(α+1))] f(0, u₀)`, which is explicit Euler
/// at `α = 1`.
pub fn bootstrap(u0: &State, system: &SystemSpec, h: f64, order: Order, method: Bootstrap) -> Result<State> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::Domain(format!("step size must be positive, got {h}")));
    }
    let x = u0.as_slice();
    let u1 = match method {
        Bootstrap::Rk4Classical => {
            let axpy = |a: &[f64], s: f64, b: &[f64]| -> Vec<f64> { a.iter().zip(b).map(|(p, q)| p + s * q).collect() };
            let k1 = system.eval(0.0, x);
            let k2 = system.eval(0.5 * h, &axpy(x, 0.5 * h, &k1));
            let k3 = system.eval(0.5 * h, &axpy(x, 0.5 * h, &k2));
            let k4 = system.eval(h, &axpy(x, h, &k3));
            (0..x.len()).map(|i| x[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i])).collect::<Vec<_>>()
        }
        Bootstrap::FractionalEuler => {
            // α h^α / (AB Γ(α+1)) = h^α/(AB Γ(α)) · α/α
            let w = order.local_coefficient() + order.memory_coefficient() * h.powf(order.alpha()) / order.alpha();
            let f0 = system.eval(0.0, x);
            x.iter().zip(&f0).map(|(u, f)| u + w * f).collect()
        }
    };
    if u1.iter().all(|v| v.is_finite()) {
        Ok(State(u1))
    } else {
        Err(Error::Evaluation("bootstrap step produced a non-finite state".into()))
    }
}
