use crate::error::{Error, Result};
use crate::math::{gamma_fn, Order};
use serde::Serialize;

/// Outcome of the uniqueness check on `[0, c]`.
///
/// Uniqueness holds when
/// `c < min{((AB/L + α − 1)Γ(α))^{1/α}, ((AB b/M + α − 1)Γ(α))^{1/α}}`.
/// A threshold is `None` when its radicand is not positive, in which case the
/// theorem gives no guarantee on any interval.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ContractionReport {
    pub lipschitz_l: f64,
    pub sup_m: f64,
    pub radius_b: f64,
    pub alpha: Order,
    pub c_contraction: Option<f64>,
    pub c_welldefined: Option<f64>,
    pub c_max: Option<f64>,
    /// The interval length that was asked about, if any.
    pub satisfied_at: Option<f64>,
    /// Whether uniqueness is guaranteed on `[0, satisfied_at]`.
    pub guaranteed: Option<bool>,
    /// `L/AB·(1 − α + c^α/Γ(α))` at `c = satisfied_at`; below 1 the mapping contracts.
    pub contraction_constant: Option<f64>,
    pub note: Option<String>,
}

pub fn contraction_check(l: f64, m: f64, b: f64, order: Order, interval_c: Option<f64>) -> Result<ContractionReport> {
    for (name, v) in [("L", l), ("M", m), ("b", b)] {
        if !(v > 0.0 && v.is_finite()) {
            return Err(Error::Domain(format!("{name} must be positive and finite, got {v}")));
        }
    }
    if let Some(c) = interval_c {
        if !(c > 0.0 && c.is_finite()) {
            return Err(Error::Domain(format!("interval length must be positive and finite, got {c}")));
        }
    }
    let a = order.alpha();
    let ab = order.ab_norm();
    let g = order.gamma_alpha();
    let threshold = |ratio: f64| {
        let radicand = (ratio + a - 1.0) * g;
        (radicand > 0.0).then(|| radicand.powf(1.0 / a))
    };
    let c_contraction = threshold(ab / l);
    let c_welldefined = threshold(ab * b / m);
    let c_max = match (c_contraction, c_welldefined) {
        (Some(x), Some(y)) => Some(x.min(y)),
        _ => None,
    };
    let note = match (c_contraction, c_welldefined) {
        (None, None) => Some("both radicands are non-positive: no guarantee".to_string()),
        (None, _) => Some("AB/L + α − 1 is non-positive: no guarantee".to_string()),
        (_, None) => Some("AB b/M + α − 1 is non-positive: no guarantee".to_string()),
        _ => None,
    };
    let guaranteed = interval_c.map(|c| c_max.is_some_and(|cm| c < cm));
    let contraction_constant = interval_c.map(|c| l / ab * (1.0 - a + c.powf(a) / g));
    Ok(ContractionReport {
        lipschitz_l: l,
        sup_m: m,
        radius_b: b,
        alpha: order,
        c_contraction,
        c_welldefined,
        c_max,
        satisfied_at: interval_c,
        guaranteed,
        contraction_constant,
        note,
    })
}

/// Contraction constant of the Picard mapping for `f(t, y) = t y / 1000` on
/// `[0, 10]`: `k = (1/100)[(1−α)/AB + α 10^α/(AB Γ(α+1))]`.
pub fn linear_ty_contraction_constant(order: Order) -> Result<f64> {
    let a = order.alpha();
    let ab = order.ab_norm();
    Ok(((1.0 - a) / ab + a * 10f64.powf(a) / (ab * gamma_fn(a + 1.0)?)) / 100.0)
}
