//! Uniqueness intervals from the contraction argument.
//!
//!     cargo run --example uniqueness

use abc_fab::analysis::{contraction_check, linear_ty_contraction_constant};
use abc_fab::Order;

fn main() -> abc_fab::Result<()> {
    // f(t, y) = t y / 1000 on t ∈ [0, 10], |y − 1| ≤ 1: L = 0.01, M = 0.02.
    println!("f(t, y) = t y / 1000 on [0, 10]");
    println!("{:>5}  {:>10}  {:>11}  {:>11}  {:>11}  guaranteed", "α", "k", "c (L)", "c (M, b)", "c max");
    for k in 1..=10 {
        let order = Order::new(k as f64 / 10.0)?;
        let r = contraction_check(0.01, 0.02, 1.0, order, Some(10.0))?;
        let show = |v: Option<f64>| v.map_or("none".to_string(), |x| format!("{x:.4e}"));
        println!(
            "{:>5}  {:>10.6}  {:>11}  {:>11}  {:>11}  {}",
            order.alpha(),
            linear_ty_contraction_constant(order)?,
            show(r.c_contraction),
            show(r.c_welldefined),
            show(r.c_max),
            r.guaranteed.unwrap_or(false)
        );
    }

    println!("\nLarge Lipschitz constant:");
    let r = contraction_check(1e6, 1.0, 1.0, Order::new(0.5)?, Some(0.1))?;
    println!("{}", serde_json::to_string_pretty(&r)?);
    Ok(())
}
