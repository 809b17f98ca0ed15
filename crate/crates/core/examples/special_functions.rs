//! Mittag-Leffler values and the ABC derivative of the closed-form solution,
//! which should return the forcing t^β.
//!
//!     cargo run --release --example special_functions

use abc_fab::math::{abc_derivative_quadrature, gamma_fn, mittag_leffler, SeriesControl};
use abc_fab::systems::exact_tbeta;
use abc_fab::Order;

fn main() -> abc_fab::Result<()> {
    println!("Γ(0.5)² = {:.15} (π = {:.15})", gamma_fn(0.5)?.powi(2), std::f64::consts::PI);
    println!("\nE_α(z):");
    for alpha in [0.5, 0.8, 1.0] {
        for z in [-2.0, -0.5, 0.5, 2.0] {
            println!("  E_{alpha}({z:>4}) = {:.15}", mittag_leffler(alpha, z, SeriesControl::default())?);
        }
    }
    match mittag_leffler(0.3, -6.0, SeriesControl::default()) {
        Ok(v) => println!("  E_0.3(-6) = {v}"),
        Err(e) => println!("  E_0.3(-6): {e}"),
    }

    println!("\nABC derivative of y(t) = exact_tbeta(t), mesh 2^14:");
    for alpha in [0.6, 0.8] {
        let order = Order::new(alpha)?;
        for beta in [1.0, 2.0] {
            for t in [0.5, 1.0, 2.0] {
                let d = abc_derivative_quadrature(|s| exact_tbeta(s, order, beta).unwrap(), order, t, 1 << 14)?;
                println!("  α={alpha} β={beta} t={t}: {d:.8} vs t^β = {:.8}", t.powf(beta));
            }
        }
    }
    Ok(())
}
