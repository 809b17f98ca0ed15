//! Integrates one of the chaotic test systems and writes the trajectory CSV
//! plus manifest, the same way `fab simulate` does.
//!
//!     cargo run --release --example simulate_chaos -- [system] [alpha] [t_final] [scheme]
//!
//! Defaults: chaos3d_b, α = 0.95, T = 100, two_step. Output goes to the
//! system temp directory.

use abc_fab::cli::{manifest_path, simulate_to_files, FileConfig, RunConfig};
use abc_fab::integrators::Scheme;

fn main() -> abc_fab::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let system = args.first().cloned().unwrap_or_else(|| "chaos3d_b".into());
    let alpha: f64 = args.get(1).map_or(0.95, |s| s.parse().expect("alpha"));
    let t_final: f64 = args.get(2).map_or(100.0, |s| s.parse().expect("t_final"));
    let scheme = match args.get(3).map(String::as_str) {
        None | Some("two_step") => Scheme::TwoStep,
        Some("full_history") => Scheme::FullHistory,
        Some("reference") => Scheme::Reference,
        Some(other) => panic!("unknown scheme {other}"),
    };
    let out = std::env::temp_dir().join(format!("{system}_a{alpha}.csv"));

    let cfg = RunConfig::resolve(FileConfig {
        system: Some(system),
        alpha: Some(alpha),
        h: Some(0.01),
        t_final: Some(t_final),
        scheme: Some(scheme),
        refine: Some(1),
        out: Some(out.clone()),
        ..Default::default()
    })?;
    let tr = simulate_to_files(&cfg)?;

    println!("{} rows -> {}", tr.len(), out.display());
    println!("manifest -> {}", manifest_path(&out).display());
    match &tr.meta.truncation {
        None => println!("completed; final state {:?}", tr.final_state().0),
        Some(t) => println!("truncated at step {} (t = {}): {}", t.step, t.time, t.reason),
    }
    println!("max ‖f_n − f_(n−1)‖∞ = {:.4e}", tr.max_stability());
    for (i, _) in tr.final_state().0.iter().enumerate() {
        let c = tr.component(i);
        let (lo, hi) = c.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &v| (a.min(v), b.max(v)));
        println!("x{} range [{lo:.4e}, {hi:.4e}]", i + 1);
    }
    Ok(())
}
