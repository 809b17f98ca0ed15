//! Two-step weights ω₁, ω₂ for a few orders, in both closed forms.
//!
//!     cargo run --example weights -- [h]

use abc_fab::integrators::{weights, WeightVariant};
use abc_fab::Order;

fn main() -> abc_fab::Result<()> {
    let h: f64 = std::env::args().nth(1).map_or(0.1, |s| s.parse().expect("h"));
    println!("h = {h}; at α = 1 both weights reduce to (3h/2, −h/2) = ({}, {})", 1.5 * h, -0.5 * h);
    for alpha in [0.3, 0.5, 0.7, 0.9, 1.0] {
        let order = Order::new(alpha)?;
        println!("\nα = {alpha}  AB(α) = {:.6}", order.ab_norm());
        println!("{:>5}  {:>13} {:>13}  {:>13} {:>13}", "n", "ω₁ corrected", "ω₂ corrected", "ω₁ printed", "ω₂ printed");
        for n in [1, 2, 5, 10, 100, 1000] {
            let c = weights(n, order, h, WeightVariant::Corrected)?;
            let p = weights(n, order, h, WeightVariant::AsPrinted)?;
            println!("{n:>5}  {:>13.6e} {:>13.6e}  {:>13.6e} {:>13.6e}", c.omega1, c.omega2, p.omega1, p.omega2);
        }
    }
    Ok(())
}
