//! Special functions and fractional-operator primitives.
//!
//! Everything here is a pure function of its inputs. The fractional order is
//! carried around as an [`Order`], which caches the normalization
//! `AB(α) = 1 − α + α/Γ(α)` and `Γ(α)` so the integrators never recompute them
//! inside their inner loops.

mod abc;
mod mittag_leffler;

pub use abc::{abc_derivative_quadrature, abc_derivative_quadrature_with};
pub use mittag_leffler::{mittag_leffler, SeriesControl};

use crate::error::{Error, Result};
use serde::Serialize;

/// Γ(x) for positive finite `x`.
///
/// Integral arguments up to 171 are computed as exact factorial products, so
/// `Γ(1) == 1.0` and `Γ(5) == 24.0` hold bit for bit. Everything else goes
/// through the Lanczos approximation in `statrs`.
pub fn gamma_fn(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!("gamma requires a positive finite argument, got {x}")));
    }
    if x.fract() == 0.0 && x <= 171.0 {
        let n = x as u32;
        return Ok((1..n).fold(1.0, |acc, k| acc * f64::from(k)));
    }
    Ok(statrs::function::gamma::gamma(x))
}

/// ln Γ(x) for positive `x`.
pub(crate) fn ln_gamma(x: f64) -> f64 {
    statrs::function::gamma::ln_gamma(x)
}

/// The Atangana-Baleanu normalization `AB(α) = 1 − α + α/Γ(α)`.
///
/// `AB(1)` is returned as exactly `1.0`.
pub fn ab_norm(alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    if alpha == 1.0 {
        return Ok(1.0);
    }
    Ok(1.0 - alpha + alpha / gamma_fn(alpha)?)
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha.is_finite() && alpha > 0.0 && alpha <= 1.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("fractional order must lie in (0, 1], got {alpha}")))
    }
}

/// A fractional order `α ∈ (0, 1]` with its cached normalization.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Order {
    alpha: f64,
    ab_norm: f64,
    #[serde(skip)]
    gamma_alpha: f64,
}

impl Order {
    pub fn new(alpha: f64) -> Result<Self> {
        let ab_norm = ab_norm(alpha)?;
        let gamma_alpha = gamma_fn(alpha)?;
        Ok(Self { alpha, ab_norm, gamma_alpha })
    }

    /// The integer-order limit `α = 1`.
    pub fn classical() -> Self {
        Self { alpha: 1.0, ab_norm: 1.0, gamma_alpha: 1.0 }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn ab_norm(&self) -> f64 {
        self.ab_norm
    }

    /// Γ(α).
    pub fn gamma_alpha(&self) -> f64 {
        self.gamma_alpha
    }

    pub fn is_classical(&self) -> bool {
        self.alpha == 1.0
    }

    /// `(1 − α)/AB(α)`, the weight of the local term in the Volterra form.
    pub fn local_coefficient(&self) -> f64 {
        (1.0 - self.alpha) / self.ab_norm
    }

    /// `α/(AB(α)Γ(α))`, the weight of the memory integral in the Volterra form.
    pub fn memory_coefficient(&self) -> f64 {
        self.alpha / (self.ab_norm * self.gamma_alpha)
    }
}
