//! The truncation factor Φ(n, α), the local remainder bound and the
//! classical Adams-Bashforth bound, plus a CSV grid of Φ h^{α+2}/2.
//!
//!     cargo run --example error_bounds

use abc_fab::analysis::{bound_comparison, phi_at_order_one, phi_factor, phi_grid, PHI_CLAIMED_AT_ORDER_ONE};
use abc_fab::cli::{format_float, write_csv};
use abc_fab::Order;

fn main() -> abc_fab::Result<()> {
    println!("Φ(n, 1) from the closed form vs the constant {PHI_CLAIMED_AT_ORDER_ONE:.5} it is said to equal:");
    for n in 1..=8u64 {
        println!("  n = {n}: {}", phi_at_order_one(n));
    }

    println!("\nΦ(n, α):");
    print!("{:>5}", "n");
    let alphas = [0.1, 0.3, 0.5, 0.7, 0.9, 1.0];
    for a in alphas {
        print!("{:>14}", format!("α={a}"));
    }
    println!();
    for n in [1, 2, 3, 5, 10, 50, 100] {
        print!("{n:>5}");
        for a in alphas {
            print!("{:>14.5e}", phi_factor(n, Order::new(a)?)?);
        }
        println!();
    }

    println!("\nM = 1, h = 0.01, α = 0.8: fractional remainder bound vs 5Mh³/12");
    for row in bound_comparison(1.0, 0.01, 10, Order::new(0.8)?)? {
        println!("  n = {:>2}: {:.4e}  vs  {:.4e}", row.n, row.fractional, row.classical);
    }

    let alphas: Vec<f64> = (1..=10).map(|k| k as f64 / 10.0).collect();
    let rows = phi_grid(100, &alphas, 0.01)?;
    let out = std::env::temp_dir().join("phi_grid.csv");
    let body = rows.iter().map(|r| vec![r.n.to_string(), format_float(r.alpha), format_float(r.phi), format_float(r.bound)]);
    write_csv(&out, &["n", "alpha", "phi", "bound"], body)?;
    println!("\n{} rows -> {}", rows.len(), out.display());
    Ok(())
}
