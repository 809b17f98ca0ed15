use super::ln_gamma;
use crate::error::{Error, Result};

/// Truncation control for power-series evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesControl {
    tol: f64,
    max_terms: usize,
}

impl SeriesControl {
    pub fn new(tol: f64, max_terms: usize) -> Result<Self> {
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(Error::Domain(format!("series tolerance must be positive, got {tol}")));
        }
        if max_terms == 0 {
            return Err(Error::Domain("series needs at least one term".into()));
        }
        Ok(Self { tol, max_terms })
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }
}

impl Default for SeriesControl {
    fn default() -> Self {
        Self { tol: 1e-17, max_terms: 1000 }
    }
}

// Largest term magnitude tolerated before alternating cancellation eats more
// than ~6 significant digits of an O(1) result.
const MAX_PEAK_TERM: f64 = 1e6;

/// One-parameter Mittag-Leffler function `E_α(z) = Σ z^s / Γ(αs + 1)` for real `z`.
///
/// Evaluated by direct summation; summation stops at the first term whose
/// magnitude drops below `ctrl.tol() · max(1, |partial sum|)`. Terms are
/// formed in log space, so large `s` never overflows Γ. Negative arguments
/// whose partial sums would cancel catastrophically (peak term above 1e6) are
/// rejected with
/// [`Error::Evaluation`], since only small and moderate `|z|` are in reach of
/// the plain series.
pub fn mittag_leffler(alpha: f64, z: f64, ctrl: SeriesControl) -> Result<f64> {
    if !(alpha > 0.0 && alpha.is_finite()) {
        return Err(Error::Domain(format!("Mittag-Leffler order must be positive, got {alpha}")));
    }
    if !z.is_finite() {
        return Err(Error::Domain(format!("Mittag-Leffler argument must be finite, got {z}")));
    }
    if z == 0.0 {
        return Ok(1.0);
    }
    let ln_abs = z.abs().ln();
    let negative = z < 0.0;
    let mut sum = 0.0;
    let mut peak: f64 = 0.0;
    for s in 0..ctrl.max_terms {
        let sf = s as f64;
        let magnitude = (sf * ln_abs - ln_gamma(alpha * sf + 1.0)).exp();
        if !magnitude.is_finite() {
            return Err(Error::Evaluation(format!("Mittag-Leffler term overflow at z = {z}")));
        }
        peak = peak.max(magnitude);
        if negative && peak > MAX_PEAK_TERM {
            return Err(Error::Evaluation(format!("|z| = {} too large for the Mittag-Leffler power series at α = {alpha}", z.abs())));
        }
        let term = if negative && s % 2 == 1 { -magnitude } else { magnitude };
        sum += term;
        if magnitude < ctrl.tol * sum.abs().max(1.0) {
            return Ok(sum);
        }
    }
    Err(Error::Convergence { partial: sum, terms: ctrl.max_terms })
}
