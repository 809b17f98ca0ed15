//! Time-steppers for the Volterra form
//! `u(t) − u(0) = (1−α)/AB·f(t, u) + α/(AB Γ(α)) ∫₀ᵗ (t−τ)^{α−1} f(τ, u(τ)) dτ`.
//!
//! Three integrators are provided:
//!
//! * [`integrate_two_step`] — the two-step fractional Adams-Bashforth scheme, O(N).
//! * [`integrate_full_history`] — piecewise-linear product integration over the
//!   whole memory, O(N²).
//! * [`integrate_reference`] — first-order product-rectangle rule on a refined
//!   mesh, used as an independent low-order oracle.
//!
//! Runs that produce a non-finite state stop early; the returned
//! [`Trajectory`] then holds every finite state and records where and why it
//! stopped. Chaotic systems routinely do this for some `(α, h)`.

mod bootstrap;
mod classical;
mod full_history;
mod reference;
mod two_step;
mod weights;

pub use bootstrap::bootstrap;
pub use classical::classical_ab2;
pub use full_history::{integrate_full_history, memory_increment};
pub use reference::integrate_reference;
pub use two_step::integrate_two_step;
pub use weights::{weights, SchemeWeights};

use crate::error::{Error, Result};
use crate::math::Order;
use crate::systems::{State, SystemSpec};
use serde::{Deserialize, Serialize};

/// Which closed form the two-step weights come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
pub enum WeightVariant {
    /// Assembled from the corrected memory-integral displays.
    #[default]
    Corrected,
    /// The originally published closed form, verbatim.
    AsPrinted,
}

/// How `u₁` is produced before a two-step scheme can start.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
pub enum Bootstrap {
    /// One classical RK4 step on `du/dt = f(t, u)`.
    #[default]
    Rk4Classical,
    /// One explicit product-rectangle step of the Volterra form.
    FractionalEuler,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
pub enum Scheme {
    #[default]
    TwoStep,
    FullHistory,
    Reference,
}

/// A fully specified integrator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    TwoStep { variant: WeightVariant, bootstrap: Bootstrap },
    FullHistory { bootstrap: Bootstrap },
    Reference { refine: usize },
}

impl Default for Method {
    fn default() -> Self {
        Method::TwoStep { variant: WeightVariant::Corrected, bootstrap: Bootstrap::Rk4Classical }
    }
}

/// Runs `method` on `system` from `ic`.
pub fn integrate(method: Method, system: &SystemSpec, ic: &State, grid: Grid, order: Order) -> Result<Trajectory> {
    match method {
        Method::TwoStep { variant, bootstrap } => integrate_two_step(system, ic, grid, order, variant, bootstrap),
        Method::FullHistory { bootstrap } => integrate_full_history(system, ic, grid, order, bootstrap),
        Method::Reference { refine } => integrate_reference(system, ic, grid, order, refine),
    }
}

/// Uniform mesh `t_n = n h`, `n = 0..=n_steps`, anchored at `t₀ = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Grid {
    h: f64,
    n_steps: usize,
}

impl Grid {
    pub fn new(h: f64, n_steps: usize) -> Result<Self> {
        if !(h > 0.0 && h.is_finite()) {
            return Err(Error::Domain(format!("step size must be positive and finite, got {h}")));
        }
        if n_steps == 0 {
            return Err(Error::Precondition("a grid needs at least one step".into()));
        }
        Ok(Self { h, n_steps })
    }

    /// Grid reaching `t_final`, which must be an integer multiple of `h`.
    pub fn with_final_time(h: f64, t_final: f64) -> Result<Self> {
        if !(t_final > 0.0 && t_final.is_finite()) {
            return Err(Error::Domain(format!("final time must be positive and finite, got {t_final}")));
        }
        if !(h > 0.0 && h.is_finite()) {
            return Err(Error::Domain(format!("step size must be positive and finite, got {h}")));
        }
        let ratio = t_final / h;
        let steps = ratio.round();
        if (ratio - steps).abs() > 4.0 * f64::EPSILON * ratio.max(1.0) || steps < 1.0 {
            return Err(Error::Config(format!("t_final = {t_final} is not an integer multiple of h = {h}")));
        }
        Self::new(h, steps as usize)
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn n_steps(&self) -> usize {
        self.n_steps
    }

    pub fn t(&self, n: usize) -> f64 {
        n as f64 * self.h
    }

    pub fn t_final(&self) -> f64 {
        self.t(self.n_steps)
    }

    pub(crate) fn require_two_steps(&self) -> Result<()> {
        if self.n_steps < 2 {
            return Err(Error::Precondition(format!("two-step schemes need at least 2 steps, grid has {}", self.n_steps)));
        }
        Ok(())
    }
}

/// Why and where a run stopped early.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Truncation {
    /// Index of the first step that could not be completed.
    pub step: usize,
    pub time: f64,
    pub reason: String,
}

/// Provenance of a trajectory.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunMeta {
    pub system: String,
    pub alpha: f64,
    pub h: f64,
    pub n_steps: usize,
    pub scheme: Scheme,
    pub variant: Option<WeightVariant>,
    pub bootstrap: Option<Bootstrap>,
    pub refine: Option<usize>,
    pub truncation: Option<Truncation>,
    pub notes: Vec<String>,
}

/// Time-indexed states produced by an integrator.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub times: Vec<f64>,
    pub states: Vec<State>,
    /// `‖f_n − f_{n−1}‖∞` for `n = 1..len`; entry `k` belongs to step `k + 1`.
    pub stability: Vec<f64>,
    pub meta: RunMeta,
}

impl Trajectory {
    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn is_complete(&self) -> bool {
        self.meta.truncation.is_none()
    }

    pub fn final_state(&self) -> &State {
        self.states.last().expect("trajectories always hold the initial state")
    }

    /// Largest stability diagnostic seen, or 0 for single-point runs.
    pub fn max_stability(&self) -> f64 {
        self.stability.iter().copied().fold(0.0, f64::max)
    }

    /// Component `i` of every state.
    pub fn component(&self, i: usize) -> Vec<f64> {
        self.states.iter().map(|s| s.0[i]).collect()
    }
}

/// Accumulates states and `f` values, and stops at the first non-finite state.
pub(crate) struct Recorder<'a> {
    system: &'a SystemSpec,
    grid: Grid,
    pub(crate) states: Vec<State>,
    pub(crate) rhs: Vec<Vec<f64>>,
    stability: Vec<f64>,
    truncation: Option<Truncation>,
}

impl<'a> Recorder<'a> {
    pub(crate) fn start(system: &'a SystemSpec, ic: &State, grid: Grid) -> Result<Self> {
        if ic.dimension() != system.dimension() {
            return Err(Error::Config(format!(
                "initial state has {} components, system `{}` has {}",
                ic.dimension(),
                system.name(),
                system.dimension()
            )));
        }
        if !ic.is_finite() {
            return Err(Error::Evaluation("initial state is not finite".into()));
        }
        let mut rec = Self {
            system,
            grid,
            states: Vec::with_capacity(grid.n_steps() + 1),
            rhs: Vec::with_capacity(grid.n_steps() + 1),
            stability: Vec::with_capacity(grid.n_steps()),
            truncation: None,
        };
        let f0 = system.eval(0.0, ic.as_slice());
        if !f0.iter().all(|v| v.is_finite()) {
            return Err(Error::Evaluation("right-hand side is not finite at the initial state".into()));
        }
        rec.states.push(ic.clone());
        rec.rhs.push(f0);
        Ok(rec)
    }

    /// Records the state at the next grid point. Returns `false` (and marks the
    /// run truncated) if the state or its right-hand side is not finite.
    pub(crate) fn push(&mut self, state: Vec<f64>) -> bool {
        let n = self.states.len();
        let t = self.grid.t(n);
        if !state.iter().all(|v| v.is_finite()) {
            self.truncate(n, "state became non-finite");
            return false;
        }
        let f = self.system.eval(t, &state);
        if !f.iter().all(|v| v.is_finite()) {
            self.truncate(n, "right-hand side became non-finite");
            return false;
        }
        let prev = &self.rhs[n - 1];
        let diff = f.iter().zip(prev).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        self.stability.push(diff);
        self.states.push(State(state));
        self.rhs.push(f);
        true
    }

    pub(crate) fn truncate(&mut self, step: usize, reason: impl Into<String>) {
        self.truncation = Some(Truncation { step, time: self.grid.t(step), reason: reason.into() });
    }

    pub(crate) fn finish(self, meta: RunMeta) -> Trajectory {
        let times = (0..self.states.len()).map(|n| self.grid.t(n)).collect();
        Trajectory { times, states: self.states, stability: self.stability, meta: RunMeta { truncation: self.truncation, ..meta } }
    }
}

pub(crate) fn base_meta(system: &SystemSpec, grid: Grid, order: Order, scheme: Scheme) -> RunMeta {
    RunMeta {
        system: system.name().to_string(),
        alpha: order.alpha(),
        h: grid.h(),
        n_steps: grid.n_steps(),
        scheme,
        variant: None,
        bootstrap: None,
        refine: None,
        truncation: None,
        notes: system.notes().to_vec(),
    }
}
