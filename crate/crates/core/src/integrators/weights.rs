//! Step coefficients `(ω₁, ω₂)` of the two-step fractional Adams-Bashforth
//! update `u_{n+1} = u_n + ω₁ f(t_n, u_n) + ω₂ f(t_{n−1}, u_{n−1})`.

use super::WeightVariant;
use crate::error::{Error, Result};
use crate::math::Order;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SchemeWeights {
    pub omega1: f64,
    pub omega2: f64,
    pub n: usize,
    pub variant: WeightVariant,
}

/// Weights for step `n ≥ 1` on a uniform grid of spacing `h`.
///
/// The corrected variant integrates the linear interpolant through
/// `(t_{n−1}, f_{n−1})`, `(t_n, f_n)` against the power kernel on `[0, t_{n+1}]`
/// and `[0, t_n]` and takes the difference:
///
/// ```text
/// ω₁ =  (1−α)/AB + [(t_{n+1}^{α+1}/(α+1) − t_{n−1} t_{n+1}^α) − (t_n^{α+1}/(α+1) − t_{n−1} t_n^α)] / (hΓ(α)AB)
/// ω₂ = −(1−α)/AB − [(t_{n+1}^{α+1}/(α+1) − t_n t_{n+1}^α)     − (t_n^{α+1}/(α+1) − t_n^{α+1})]    / (hΓ(α)AB)
/// ```
///
/// Both brackets are differences of `O(n^{α+1})` terms, so they are evaluated
/// in a rearranged form (see [`corrected_brackets`]) that stays accurate to a
/// few ulps for `n` in the tens of thousands. At `α = 1` this gives exactly
/// the classical Adams-Bashforth pair `(3h/2, −h/2)`.
///
/// The as-printed variant reproduces the original closed form verbatim,
/// including its dimensionally inconsistent `n^{α+1}/(AB Γ(α) h)` term; it is
/// kept for diagnosis only.
pub fn weights(n: usize, order: Order, h: f64, variant: WeightVariant) -> Result<SchemeWeights> {
    if n == 0 {
        return Err(Error::Precondition("two-step weights are undefined for n = 0".into()));
    }
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::Domain(format!("step size must be positive, got {h}")));
    }
    let (omega1, omega2) = match variant {
        WeightVariant::Corrected => corrected(n, order, h),
        WeightVariant::AsPrinted => as_printed(n, order, h),
    };
    Ok(SchemeWeights { omega1, omega2, n, variant })
}

fn corrected(n: usize, order: Order, h: f64) -> (f64, f64) {
    let (w1, w2) = corrected_brackets(n, order.alpha());
    let scale = h.powf(order.alpha()) / (order.gamma_alpha() * order.ab_norm());
    let local = order.local_coefficient();
    (local + scale * w1, -local - scale * w2)
}

/// Dimensionless brackets `W₁, W₂` with `ω₁ = (1−α)/AB + h^α W₁/(Γ(α)AB)` and
/// `ω₂ = −(1−α)/AB − h^α W₂/(Γ(α)AB)`.
///
/// With `x = 1/n` and `g(x) = ((1+x)^α − 1 − αx)/x²`:
///
/// ```text
/// (α+1) W₁ = n^α (1−α²) + n^{α−1} [(2+α)(α + x g) − α g]
/// (α+1) W₂ = n^α (1−α²) + n^{α−1} [α + x g − α g]
/// ```
pub(crate) fn corrected_brackets(n: usize, alpha: f64) -> (f64, f64) {
    let nf = n as f64;
    let x = 1.0 / nf;
    let g = binomial_remainder(alpha, x);
    let lead = nf.powf(alpha) * (1.0 - alpha * alpha);
    let tail = nf.powf(alpha - 1.0);
    let w1 = (lead + tail * ((2.0 + alpha) * (alpha + x * g) - alpha * g)) / (alpha + 1.0);
    let w2 = (lead + tail * (alpha + x * g - alpha * g)) / (alpha + 1.0);
    (w1, w2)
}

/// `((1+x)^α − 1 − αx)/x²` for `0 < x ≤ 1`, via the binomial series when `x` is small.
fn binomial_remainder(alpha: f64, x: f64) -> f64 {
    if x > 0.25 {
        return ((1.0 + x).powf(alpha) - 1.0 - alpha * x) / (x * x);
    }
    // Σ_{k≥2} C(α,k) x^{k−2}
    let mut coef = alpha * (alpha - 1.0) / 2.0;
    let mut pow = 1.0;
    let mut sum = 0.0;
    for k in 2..200 {
        let term = coef * pow;
        sum += term;
        if term.abs() <= 1e-18 * sum.abs() || coef == 0.0 {
            break;
        }
        coef *= (alpha - k as f64) / (k as f64 + 1.0);
        pow *= x;
    }
    sum
}

fn as_printed(n: usize, order: Order, h: f64) -> (f64, f64) {
    let a = order.alpha();
    let ab = order.ab_norm();
    let g = order.gamma_alpha();
    let nf = n as f64;
    let np1 = nf + 1.0;
    let c = a / (ab * g) * h.powf(a);
    let omega1 =
        (1.0 - a) / ab - c * (2.0 * np1.powf(a) / a - np1.powf(a + 1.0) / (a + 1.0)) - c * (nf.powf(a) / a - nf.powf(a + 1.0) / (a + 1.0));
    let omega2 = (a - 1.0) / ab - c * (np1.powf(a) / a - np1.powf(a + 1.0) / (a + 1.0) + nf.powf(a + 1.0) / (ab * g * h));
    (omega1, omega2)
}
