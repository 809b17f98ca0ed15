//! Registers a user-defined right-hand side and compares the integrators on it.
//!
//!     cargo run --release --example custom_system

use abc_fab::integrators::{integrate, Bootstrap, Grid, Method, WeightVariant};
use abc_fab::{Order, SystemSpec};

fn main() -> abc_fab::Result<()> {
    // Damped oscillator with slow forcing.
    let sys = SystemSpec::custom("forced_oscillator", vec![1.0, 0.0], |t, x, out| {
        out[0] = x[1];
        out[1] = -x[0] - 0.2 * x[1] + 0.1 * t.sin();
    })?;
    let order = Order::new(0.9)?;
    let grid = Grid::with_final_time(0.01, 10.0)?;
    let methods = [
        ("two-step", Method::TwoStep { variant: WeightVariant::Corrected, bootstrap: Bootstrap::Rk4Classical }),
        ("full history", Method::FullHistory { bootstrap: Bootstrap::Rk4Classical }),
        ("reference x8", Method::Reference { refine: 8 }),
    ];
    for (name, m) in methods {
        let tr = integrate(m, &sys, sys.default_ic(), grid, order)?;
        let x = tr.final_state();
        println!("{name:>13}: x(10) = ({:+.6}, {:+.6}), complete = {}", x.0[0], x.0[1], tr.is_complete());
    }
    Ok(())
}
