//! Solvers for initial-value problems with the Atangana-Baleanu fractional
//! derivative in the Caputo sense,
//!
//! ```text
//! ᴬᴮᶜD^α u(t) = f(t, u(t)),   u(0) = u₀,   0 < α ≤ 1,
//! ```
//!
//! built around the two-step fractional Adams-Bashforth scheme
//! `u_{n+1} = u_n + ω₁ f_n + ω₂ f_{n−1}`.
//!
//! * [`math`]: Γ, the AB normalization, Mittag-Leffler series, and a quadrature
//!   evaluation of the ABC derivative.
//! * [`systems`]: the chaotic and hyperchaotic test systems and scalar benchmarks.
//! * [`integrators`]: the two-step scheme, a full-history product scheme and a
//!   product-rectangle reference solver.
//! * [`analysis`]: truncation-error factors, the uniqueness check, convergence tables.
//! * [`cli`]: the `fab` command-line front end and its CSV/JSON writers.
//!
//! ```
//! use abc_fab::integrators::{integrate, Grid, Method};
//! use abc_fab::math::Order;
//! use abc_fab::systems::{builtin_system, BuiltinOptions};
//!
//! let sys = builtin_system("chaos3d_b", &BuiltinOptions::default()).unwrap();
//! let grid = Grid::with_final_time(0.01, 1.0).unwrap();
//! let tr = integrate(Method::default(), &sys, sys.default_ic(), grid, Order::new(0.95).unwrap()).unwrap();
//! assert_eq!(tr.len(), 101);
//! ```

pub mod analysis;
pub mod cli;
pub mod error;
pub mod integrators;
pub mod math;
pub mod systems;

pub use error::{Error, Result};
pub use integrators::{integrate, Grid, Method, Trajectory};
pub use math::Order;
pub use systems::{builtin_system, BuiltinOptions, State, SystemSpec};
