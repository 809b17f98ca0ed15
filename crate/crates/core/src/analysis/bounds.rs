use crate::error::{Error, Result};
use crate::math::{gamma_fn, Order};
use serde::Serialize;

/// The constant value the literature asserts for `Φ(n, 1)`. The closed form
/// implemented by [`phi_factor`] does not reduce to it; see
/// [`phi_at_order_one`].
pub const PHI_CLAIMED_AT_ORDER_ONE: f64 = 5.0 / 12.0;

/// The step- and order-dependent factor of the local truncation bound,
///
/// `Φ(n,α) = |α{2α n^{2+α} + (n+1)^{α+2}(2 − αn)
///            + (2+α)(n−1)[−2α n^{α+1} + (αn − 1)(n+1)^α]}|`,
///
/// evaluated exactly as written.
pub fn phi_factor(n: usize, order: Order) -> Result<f64> {
    if n == 0 {
        return Err(Error::Precondition("phi_factor needs n >= 1".into()));
    }
    let a = order.alpha();
    let n = n as f64;
    let np1 = n + 1.0;
    let inner = 2.0 * a * n.powf(2.0 + a)
        + np1.powf(a + 2.0) * (2.0 - a * n)
        + (2.0 + a) * (n - 1.0) * (-2.0 * a * n.powf(a + 1.0) + (a * n - 1.0) * np1.powf(a));
    Ok((a * inner).abs())
}

/// `Φ(n, 1)` in polynomial form, `|−n⁴ − 2n³ + 6n² + 2n + 5|`, computed in
/// exact integer arithmetic.
pub fn phi_at_order_one(n: u64) -> u128 {
    let n = i128::from(n);
    (-n.pow(4) - 2 * n.pow(3) + 6 * n.pow(2) + 2 * n + 5).unsigned_abs()
}

/// `M h^{α+2} Φ(n,α) / (2 Γ(α+3))`.
pub fn remainder_bound(m: f64, h: f64, n: usize, order: Order) -> Result<f64> {
    check_bound_inputs(m, h)?;
    let a = order.alpha();
    Ok(m * h.powf(a + 2.0) * phi_factor(n, order)? / (2.0 * gamma_fn(a + 3.0)?))
}

/// The classical Adams-Bashforth local bound `5 M h³ / 12`.
pub fn classical_ab2_bound(m: f64, h: f64) -> Result<f64> {
    check_bound_inputs(m, h)?;
    Ok(5.0 * m * h.powi(3) / 12.0)
}

fn check_bound_inputs(m: f64, h: f64) -> Result<()> {
    if !(m >= 0.0 && m.is_finite()) {
        return Err(Error::Domain(format!("second-derivative bound must be non-negative, got {m}")));
    }
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::Domain(format!("step size must be positive, got {h}")));
    }
    Ok(())
}

/// One row of the `(n, α)` grid of `Φ` and `Φ h^{α+2}/2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhiRow {
    pub n: usize,
    pub alpha: f64,
    pub phi: f64,
    pub bound: f64,
}

/// `Φ(n, α)` and `Φ(n, α) h^{α+2}/2` for `n = 1..=n_max` and each `α`,
/// ordered by `α` then `n`.
pub fn phi_grid(n_max: usize, alphas: &[f64], h: f64) -> Result<Vec<PhiRow>> {
    if n_max == 0 {
        return Err(Error::Precondition("phi grid needs n_max >= 1".into()));
    }
    check_bound_inputs(0.0, h)?;
    let mut rows = Vec::with_capacity(n_max * alphas.len());
    for &alpha in alphas {
        let order = Order::new(alpha)?;
        for n in 1..=n_max {
            let phi = phi_factor(n, order)?;
            rows.push(PhiRow { n, alpha, phi, bound: phi * h.powf(alpha + 2.0) / 2.0 });
        }
    }
    Ok(rows)
}

/// The fractional remainder bound next to the classical one, per step.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundRow {
    pub n: usize,
    pub alpha: f64,
    pub h: f64,
    pub m: f64,
    pub fractional: f64,
    pub classical: f64,
}

pub fn bound_comparison(m: f64, h: f64, n_max: usize, order: Order) -> Result<Vec<BoundRow>> {
    let classical = classical_ab2_bound(m, h)?;
    (1..=n_max).map(|n| Ok(BoundRow { n, alpha: order.alpha(), h, m, fractional: remainder_bound(m, h, n, order)?, classical })).collect()
}
