#![allow(dead_code)]

//! Brute-force quadrature oracles shared by the integration and acceptance tests.
//!
//! Nothing here calls into the library's weight or moment code. Γ comes
//! straight from `statrs`.

use rayon::prelude::*;

pub fn gamma(x: f64) -> f64 {
    statrs::function::gamma::gamma(x)
}

/// `(1−α)/AB(α)` and `α/(AB(α)Γ(α))`.
pub fn volterra_coefficients(alpha: f64) -> (f64, f64) {
    let g = gamma(alpha);
    let ab = 1.0 - alpha + alpha / g;
    ((1.0 - alpha) / ab, alpha / (ab * g))
}

/// Composite trapezoid on `m` panels, refined once and Richardson-extrapolated.
fn trapezoid_richardson<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, m: usize) -> f64 {
    let fine = 2 * m;
    let dx = (hi - lo) / fine as f64;
    let mut even = 0.5 * (f(lo) + f(hi));
    let mut odd = 0.0;
    for i in 1..fine {
        let v = f(lo + i as f64 * dx);
        if i % 2 == 0 {
            even += v;
        } else {
            odd += v;
        }
    }
    let coarse = even * 2.0 * dx;
    let refined = (even + odd) * dx;
    (4.0 * refined - coarse) / 3.0
}

/// `∫_a^b (T−τ)^{α−1} {1, τ} dτ` with `b ≤ T`.
///
/// The substitution `T − τ = s^{2/α}` turns the kernel into `(2/α) s`, which
/// removes the endpoint singularity.
pub fn interval_moments(t_end: f64, a: f64, b: f64, alpha: f64, panels: usize) -> (f64, f64) {
    let q = 2.0 / alpha;
    let lo = (t_end - b).max(0.0).powf(alpha / 2.0);
    let hi = (t_end - a).powf(alpha / 2.0);
    let m0 = trapezoid_richardson(|s| q * s, lo, hi, panels);
    let m1 = trapezoid_richardson(|s| q * s * (t_end - s.powf(q)), lo, hi, panels);
    (m0, m1)
}

/// Moments of `(t_m − τ)^{α−1}` over every `[t_j, t_{j+1}]`, `j < m ≤ m_max`.
pub struct MomentTable {
    pub alpha: f64,
    pub h: f64,
    /// `m0[m][j]`, `m1[m][j]`.
    pub m0: Vec<Vec<f64>>,
    pub m1: Vec<Vec<f64>>,
}

impl MomentTable {
    pub fn new(alpha: f64, h: f64, m_max: usize, panels: usize) -> Self {
        let rows: Vec<(Vec<f64>, Vec<f64>)> = (0..=m_max)
            .into_par_iter()
            .map(|m| {
                let t_end = m as f64 * h;
                (0..m).map(|j| interval_moments(t_end, j as f64 * h, (j + 1) as f64 * h, alpha, panels)).unzip()
            })
            .collect();
        let (m0, m1) = rows.into_iter().unzip();
        Self { alpha, h, m0, m1 }
    }

    fn t(&self, j: usize) -> f64 {
        j as f64 * self.h
    }

    /// `∫_0^{t_m} (t_m−τ)^{α−1} ℓ(τ) dτ` for `ℓ(τ) = c0 + c1 τ`.
    fn integrate_line(&self, m: usize, c0: f64, c1: f64) -> f64 {
        (0..m).map(|j| c0 * self.m0[m][j] + c1 * self.m1[m][j]).sum()
    }

    /// Two-step weights obtained by extracting the coefficients of `f_n`, `f_{n−1}`
    /// from the Volterra increment with `f` replaced by the line through
    /// `(t_{n−1}, f_{n−1})`, `(t_n, f_n)` on all of `[0, t_{n+1}]`.
    pub fn two_step_weights(&self, n: usize) -> (f64, f64) {
        let (kappa, mem) = volterra_coefficients(self.alpha);
        let h = self.h;
        // ℓ_n(τ) = (τ − t_{n−1})/h and ℓ_{n−1}(τ) = (t_n − τ)/h.
        let (a0, a1) = (-self.t(n - 1) / h, 1.0 / h);
        let (b0, b1) = (self.t(n) / h, -1.0 / h);
        let w1 = kappa + mem * (self.integrate_line(n + 1, a0, a1) - self.integrate_line(n, a0, a1));
        let w2 = -kappa + mem * (self.integrate_line(n + 1, b0, b1) - self.integrate_line(n, b0, b1));
        (w1, w2)
    }

    /// Coefficients of `f_0, …, f_n` in `u_{n+1} − u_n` for piecewise-linear
    /// interpolation on every past interval and linear extrapolation from
    /// `f_{n−1}, f_n` on `[t_n, t_{n+1}]`.
    pub fn full_history_coefficients(&self, n: usize) -> Vec<f64> {
        let (kappa, mem) = volterra_coefficients(self.alpha);
        let h = self.h;
        let mut c = vec![0.0; n + 1];
        c[n] += kappa;
        c[n - 1] -= kappa;
        for (m, sign) in [(n + 1, 1.0), (n, -1.0)] {
            for j in 0..m {
                let (m0, m1) = (self.m0[m][j], self.m1[m][j]);
                let (left, right) = if j == n { (n - 1, n) } else { (j, j + 1) };
                let (tl, tr) = (self.t(left), self.t(right));
                // Line through (t_left, f_left), (t_right, f_right).
                c[left] += sign * mem * (tr * m0 - m1) / h;
                c[right] += sign * mem * (m1 - tl * m0) / h;
            }
        }
        c
    }
}

/// Max over `ts` of `|y(t) − exact(t)|`.
pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}
