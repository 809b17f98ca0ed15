//! Right-hand sides: the chaotic and hyperchaotic test systems and the scalar
//! benchmark problems, each carrying its default parameters and initial data.

use crate::error::{Error, Result};
use crate::math::{gamma_fn, Order};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

/// A state vector.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct State(pub Vec<f64>);

impl State {
    pub fn dimension(&self) -> usize {
        self.0.len()
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|v| v.is_finite())
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }
}

impl From<Vec<f64>> for State {
    fn from(v: Vec<f64>) -> Self {
        State(v)
    }
}

/// Evaluation contract `(t, state, out)`; writes `f(t, state)` into `out`.
pub type RhsFn = dyn Fn(f64, &[f64], &mut [f64]) + Send + Sync;

/// A named right-hand side `f(t, u)` with its parameters and default initial state.
#[derive(Clone)]
pub struct SystemSpec {
    name: String,
    dimension: usize,
    params: Vec<(String, f64)>,
    rhs: Arc<RhsFn>,
    default_ic: State,
    description: String,
    notes: Vec<String>,
}

impl fmt::Debug for SystemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SystemSpec")
            .field("name", &self.name)
            .field("dimension", &self.dimension)
            .field("params", &self.params)
            .field("default_ic", &self.default_ic)
            .finish_non_exhaustive()
    }
}

impl SystemSpec {
    /// Registers a user-supplied right-hand side.
    pub fn custom<F>(name: impl Into<String>, default_ic: Vec<f64>, rhs: F) -> Result<Self>
    where
        F: Fn(f64, &[f64], &mut [f64]) + Send + Sync + 'static,
    {
        if default_ic.is_empty() {
            return Err(Error::Config("a system needs at least one component".into()));
        }
        Ok(Self {
            name: name.into(),
            dimension: default_ic.len(),
            params: Vec::new(),
            rhs: Arc::new(rhs),
            default_ic: State(default_ic),
            description: "user-supplied right-hand side".into(),
            notes: Vec::new(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn params(&self) -> &[(String, f64)] {
        &self.params
    }

    pub fn param(&self, key: &str) -> Option<f64> {
        self.params.iter().find(|(k, _)| k == key).map(|&(_, v)| v)
    }

    pub fn default_ic(&self) -> &State {
        &self.default_ic
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    /// Modelling choices worth carrying into run manifests.
    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    /// Evaluates `f(t, state)` into `out`.
    pub fn eval_into(&self, t: f64, state: &[f64], out: &mut [f64]) {
        debug_assert_eq!(state.len(), self.dimension);
        debug_assert_eq!(out.len(), self.dimension);
        (self.rhs)(t, state, out)
    }

    pub fn eval(&self, t: f64, state: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.dimension];
        self.eval_into(t, state, &mut out);
        out
    }
}

/// Reading of the cross term in the third equation of the four-wing system,
/// which is misprinted in the source as `x−1(t)x₁²(t)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Hyper4dF3 {
    /// `f₃ = −ψx₃ + x₂x₁² + x₁`
    #[default]
    X2X1sq,
    /// `f₃ = −ψx₃ + x₁x₂ + x₁`
    X1X2,
    /// `f₃ = −ψx₃ + x₁² + x₁`
    X1sq,
}

impl Hyper4dF3 {
    pub fn as_str(&self) -> &'static str {
        match self {
            Hyper4dF3::X2X1sq => "x2_x1sq",
            Hyper4dF3::X1X2 => "x1_x2",
            Hyper4dF3::X1sq => "x1sq",
        }
    }

    fn formula(&self) -> &'static str {
        match self {
            Hyper4dF3::X2X1sq => "-psi*x3 + x2*x1^2 + x1",
            Hyper4dF3::X1X2 => "-psi*x3 + x1*x2 + x1",
            Hyper4dF3::X1sq => "-psi*x3 + x1^2 + x1",
        }
    }
}

impl FromStr for Hyper4dF3 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "x2_x1sq" => Ok(Hyper4dF3::X2X1sq),
            "x1_x2" => Ok(Hyper4dF3::X1X2),
            "x1sq" => Ok(Hyper4dF3::X1sq),
            other => Err(Error::Config(format!("unknown hyper4d f3 variant `{other}` (expected x2_x1sq, x1_x2 or x1sq)"))),
        }
    }
}

/// Options accepted by [`builtin_system`].
#[derive(Debug, Clone, Default)]
pub struct BuiltinOptions {
    /// Parameter overrides; every key must name an existing parameter.
    pub overrides: Vec<(String, f64)>,
    pub hyper4d_f3: Hyper4dF3,
}

impl BuiltinOptions {
    pub fn with_param(mut self, key: &str, value: f64) -> Self {
        self.overrides.push((key.to_string(), value));
        self
    }
}

/// Names accepted by [`builtin_system`].
pub const BUILTIN_NAMES: [&str; 6] = ["chaos3d_a", "chaos3d_b", "hyper4d", "tbeta", "linear_ty", "zero"];

fn resolve(name: &str, defaults: &[(&str, f64)], overrides: &[(String, f64)]) -> Result<Vec<(String, f64)>> {
    let mut params: Vec<(String, f64)> = defaults.iter().map(|&(k, v)| (k.to_string(), v)).collect();
    for (key, value) in overrides {
        let slot =
            params.iter_mut().find(|(k, _)| k == key).ok_or_else(|| Error::Config(format!("system `{name}` has no parameter `{key}`")))?;
        if !value.is_finite() {
            return Err(Error::Config(format!("parameter `{key}` must be finite")));
        }
        slot.1 = *value;
    }
    Ok(params)
}

/// Looks up a system from the registry, applying parameter overrides.
///
/// | name        | dim | right-hand side                                          | defaults                                 |
/// |-------------|-----|----------------------------------------------------------|------------------------------------------|
/// | `chaos3d_a` | 3   | φ(x₂−x₁)+σx₂x₃, ϕx₁−x₁x₃, x₁x₂−ψx₃+δx₂²                  | φ=12 ϕ=16 ψ=5 σ=96 δ=10, IC (0.2,0.1,0.2) |
/// | `chaos3d_b` | 3   | φ(x₂−x₁), x₁−x₁x₃, 50−ϕx₁²−ψx₃                            | φ=2.6 ϕ=0.5 ψ=0.4, IC (0.6,0.5,0.4)        |
/// | `hyper4d`   | 4   | φx₁−x₂x₃+x₄, −ϕx₂+x₁x₃+x₄, see [`Hyper4dF3`], σx₁         | φ=8 ϕ=33 ψ=16 σ=1.25, IC (0.2,0.4,0.2,0.7) |
/// | `tbeta`     | 1   | t^β                                                      | β=1, IC 0                                |
/// | `linear_ty` | 1   | k·t·y                                                    | k=1/1000, IC 1                           |
/// | `zero`      | 1   | 0                                                        | IC 1                                     |
pub fn builtin_system(name: &str, opts: &BuiltinOptions) -> Result<SystemSpec> {
    let ov = &opts.overrides;
    let spec = match name {
        "chaos3d_a" => {
            let params = resolve(name, &[("phi", 12.0), ("varphi", 16.0), ("psi", 5.0), ("sigma", 96.0), ("delta", 10.0)], ov)?;
            let [a, b, c, s, d] = values::<5>(&params);
            SystemSpec {
                name: name.into(),
                dimension: 3,
                rhs: Arc::new(move |_t, x: &[f64], out: &mut [f64]| {
                    out[0] = a * (x[1] - x[0]) + s * x[1] * x[2];
                    out[1] = b * x[0] - x[0] * x[2];
                    out[2] = x[0] * x[1] - c * x[2] + d * x[1] * x[1];
                }),
                params,
                default_ic: State(vec![0.2, 0.1, 0.2]),
                description: "highly chaotic three-dimensional attractor".into(),
                notes: Vec::new(),
            }
        }
        "chaos3d_b" => {
            let params = resolve(name, &[("phi", 2.6), ("varphi", 0.5), ("psi", 0.4)], ov)?;
            let [a, b, c] = values::<3>(&params);
            SystemSpec {
                name: name.into(),
                dimension: 3,
                rhs: Arc::new(move |_t, x: &[f64], out: &mut [f64]| {
                    out[0] = a * (x[1] - x[0]);
                    out[1] = x[0] - x[0] * x[2];
                    out[2] = 50.0 - b * x[0] * x[0] - c * x[2];
                }),
                params,
                default_ic: State(vec![0.6, 0.5, 0.4]),
                description: "six-term dissipative chaotic system".into(),
                notes: Vec::new(),
            }
        }
        "hyper4d" => {
            let params = resolve(name, &[("phi", 8.0), ("varphi", 33.0), ("psi", 16.0), ("sigma", 1.25)], ov)?;
            let [a, b, c, s] = values::<4>(&params);
            let variant = opts.hyper4d_f3;
            SystemSpec {
                name: name.into(),
                dimension: 4,
                rhs: Arc::new(move |_t, x: &[f64], out: &mut [f64]| {
                    let cross = match variant {
                        Hyper4dF3::X2X1sq => x[1] * x[0] * x[0],
                        Hyper4dF3::X1X2 => x[0] * x[1],
                        Hyper4dF3::X1sq => x[0] * x[0],
                    };
                    out[0] = a * x[0] - x[1] * x[2] + x[3];
                    out[1] = -b * x[1] + x[0] * x[2] + x[3];
                    out[2] = -c * x[2] + cross + x[0];
                    out[3] = s * x[0];
                }),
                params,
                default_ic: State(vec![0.2, 0.4, 0.2, 0.7]),
                description: "four-wing hyperchaotic system".into(),
                notes: vec![format!(
                    "hyper4d third equation read as f3 = {} (variant {}); the printed cross term is ambiguous",
                    variant.formula(),
                    variant.as_str()
                )],
            }
        }
        "tbeta" => {
            let params = resolve(name, &[("beta", 1.0)], ov)?;
            let [beta] = values::<1>(&params);
            if beta < 0.0 {
                return Err(Error::Config(format!("tbeta needs beta >= 0, got {beta}")));
            }
            SystemSpec {
                name: name.into(),
                dimension: 1,
                rhs: Arc::new(move |t, _x: &[f64], out: &mut [f64]| out[0] = t.powf(beta)),
                params,
                default_ic: State(vec![0.0]),
                description: "state-independent forcing t^beta with closed-form solution".into(),
                notes: Vec::new(),
            }
        }
        "linear_ty" => {
            let params = resolve(name, &[("k", 1e-3)], ov)?;
            let [k] = values::<1>(&params);
            SystemSpec {
                name: name.into(),
                dimension: 1,
                rhs: Arc::new(move |t, x: &[f64], out: &mut [f64]| out[0] = k * t * x[0]),
                params,
                default_ic: State(vec![1.0]),
                description: "linear time-varying problem f(t, y) = k t y".into(),
                notes: Vec::new(),
            }
        }
        "zero" => SystemSpec {
            name: name.into(),
            dimension: 1,
            rhs: Arc::new(|_t, _x: &[f64], out: &mut [f64]| out.fill(0.0)),
            params: resolve(name, &[], ov)?,
            default_ic: State(vec![1.0]),
            description: "identically zero right-hand side".into(),
            notes: Vec::new(),
        },
        other => return Err(Error::UnknownSystem(other.to_string())),
    };
    Ok(spec)
}

fn values<const N: usize>(params: &[(String, f64)]) -> [f64; N] {
    std::array::from_fn(|i| params[i].1)
}

/// Closed-form solution of `ᴬᴮᶜD^α y = t^β`, `y(0) = 0`:
/// `y(t) = (1−α)/AB(α)·t^β + α t^{α+β} Γ(β+1) / (AB(α) Γ(α+β+1))`.
pub fn exact_tbeta(t: f64, order: Order, beta: f64) -> Result<f64> {
    if !(t >= 0.0 && t.is_finite()) {
        return Err(Error::Domain(format!("exact_tbeta needs t >= 0, got {t}")));
    }
    if !(beta >= 0.0 && beta.is_finite()) {
        return Err(Error::Domain(format!("exact_tbeta needs beta >= 0, got {beta}")));
    }
    let a = order.alpha();
    let ab = order.ab_norm();
    let memory = a * t.powf(a + beta) * gamma_fn(beta + 1.0)? / (ab * gamma_fn(a + beta + 1.0)?);
    Ok(order.local_coefficient() * t.powf(beta) + memory)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn defaults(name: &str) -> SystemSpec {
        builtin_system(name, &BuiltinOptions::default()).unwrap()
    }

    #[test]
    fn tbeta_is_state_independent() {
        let sys = builtin_system("tbeta", &BuiltinOptions::default().with_param("beta", 1.0)).unwrap();
        for x in [-3.0, 0.0, 17.0] {
            assert_eq!(sys.eval(2.0, &[x]), vec![2.0]);
        }
    }

    #[test]
    fn chaos3d_a_at_initial_state() {
        let sys = defaults("chaos3d_a");
        let f = sys.eval(0.0, sys.default_ic().as_slice());
        for (got, want) in f.iter().zip([0.72, 3.16, -0.88]) {
            assert_relative_eq!(*got, want, max_relative = 1e-12);
        }
    }

    #[test]
    fn chaos3d_b_at_initial_state() {
        let sys = defaults("chaos3d_b");
        let f = sys.eval(0.0, sys.default_ic().as_slice());
        for (got, want) in f.iter().zip([-0.26, 0.36, 49.66]) {
            assert_relative_eq!(*got, want, max_relative = 1e-12);
        }
    }

    #[test]
    fn paper_defaults() {
        let a = defaults("chaos3d_a");
        assert_eq!(a.params().iter().map(|p| p.1).collect::<Vec<_>>(), vec![12.0, 16.0, 5.0, 96.0, 10.0]);
        assert_eq!(a.default_ic().0, vec![0.2, 0.1, 0.2]);
        let b = defaults("chaos3d_b");
        assert_eq!(b.params().iter().map(|p| p.1).collect::<Vec<_>>(), vec![2.6, 0.5, 0.4]);
        let h = defaults("hyper4d");
        assert_eq!(h.params().iter().map(|p| p.1).collect::<Vec<_>>(), vec![8.0, 33.0, 16.0, 1.25]);
        assert_eq!(h.default_ic().0, vec![0.2, 0.4, 0.2, 0.7]);
        assert!(h.notes()[0].contains("x2_x1sq"));
    }

    #[test]
    fn hyper4d_variants_differ_only_in_third_component() {
        let x = [0.3, -0.7, 1.1, 0.4];
        let base = defaults("hyper4d").eval(0.0, &x);
        for v in [Hyper4dF3::X1X2, Hyper4dF3::X1sq] {
            let opts = BuiltinOptions { hyper4d_f3: v, ..Default::default() };
            let other = builtin_system("hyper4d", &opts).unwrap().eval(0.0, &x);
            assert_eq!(base[0], other[0]);
            assert_eq!(base[1], other[1]);
            assert_ne!(base[2], other[2]);
            assert_eq!(base[3], other[3]);
        }
        let want = -16.0 * 1.1 + (-0.7) * 0.3 * 0.3 + 0.3;
        assert_relative_eq!(base[2], want, max_relative = 1e-14);
        assert_eq!("x1_x2".parse::<Hyper4dF3>().unwrap(), Hyper4dF3::X1X2);
        assert!("x-1".parse::<Hyper4dF3>().is_err());
    }

    #[test]
    fn overrides_leave_other_defaults_untouched() {
        let sys = builtin_system("chaos3d_a", &BuiltinOptions::default().with_param("sigma", 50.0)).unwrap();
        assert_eq!(sys.param("sigma"), Some(50.0));
        assert_eq!(sys.param("phi"), Some(12.0));
        assert_eq!(sys.param("delta"), Some(10.0));
    }

    #[test]
    fn lookup_errors() {
        assert!(matches!(builtin_system("lorenz", &BuiltinOptions::default()), Err(Error::UnknownSystem(_))));
        let bad = BuiltinOptions::default().with_param("rho", 1.0);
        assert!(matches!(builtin_system("chaos3d_b", &bad), Err(Error::Config(_))));
    }

    #[test]
    fn rhs_is_pure() {
        for name in BUILTIN_NAMES {
            let sys = defaults(name);
            let x: Vec<f64> = (0..sys.dimension()).map(|i| 0.3 + 0.1 * i as f64).collect();
            let a = sys.eval(1.25, &x);
            let b = sys.eval(1.25, &x);
            assert_eq!(a.len(), sys.dimension());
            assert!(a.iter().zip(&b).all(|(p, q)| p.to_bits() == q.to_bits()));
            assert_eq!(sys.default_ic().dimension(), sys.dimension());
        }
    }

    #[test]
    fn exact_tbeta_values() {
        let any = Order::new(0.4).unwrap();
        assert_eq!(exact_tbeta(0.0, any, 2.0).unwrap(), 0.0);
        assert_relative_eq!(exact_tbeta(1.0, Order::classical(), 1.0).unwrap(), 0.5, max_relative = 1e-15);
        let half = Order::new(0.5).unwrap();
        let want = (0.5 * 2.0 + 0.5 * 2f64.powf(1.5) / gamma_fn(2.5).unwrap()) / half.ab_norm();
        assert_relative_eq!(exact_tbeta(2.0, half, 1.0).unwrap(), want, max_relative = 1e-14);
        assert!(exact_tbeta(-1.0, half, 1.0).is_err());
    }
}
