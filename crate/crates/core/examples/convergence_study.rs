//! Error tables against the closed-form solution of `D^α y = t^β` for all
//! three integrators.
//!
//!     cargo run --release --example convergence_study -- [alpha] [beta]

use abc_fab::analysis::convergence_table;
use abc_fab::integrators::{Bootstrap, Method, WeightVariant};
use abc_fab::Order;

fn main() -> abc_fab::Result<()> {
    let args: Vec<f64> = std::env::args().skip(1).map(|s| s.parse().expect("number")).collect();
    let alpha = args.first().copied().unwrap_or(0.7);
    let beta = args.get(1).copied().unwrap_or(2.0);
    let order = Order::new(alpha)?;
    let hs = [0.04, 0.02, 0.01, 0.005, 0.0025];

    let methods = [
        ("two-step, corrected", Method::TwoStep { variant: WeightVariant::Corrected, bootstrap: Bootstrap::Rk4Classical }),
        ("two-step, as printed", Method::TwoStep { variant: WeightVariant::AsPrinted, bootstrap: Bootstrap::Rk4Classical }),
        ("full history", Method::FullHistory { bootstrap: Bootstrap::Rk4Classical }),
        ("reference, refine 4", Method::Reference { refine: 4 }),
    ];
    println!("D^α y = t^β, α = {alpha}, β = {beta}, T = 2");
    for (name, method) in methods {
        println!("\n{name}");
        println!("{:>8}  {:>12}  {:>6}", "h", "max error", "order");
        for row in convergence_table(order, beta, &hs, 2.0, method)? {
            let p = row.observed_order.map_or(String::from("-"), |p| format!("{p:.2}"));
            println!("{:>8}  {:>12.4e}  {:>6}{}", row.h, row.max_abs_error, p, if row.valid { "" } else { "  (truncated)" });
        }
    }
    Ok(())
}
