//! Run configuration for `fab simulate`, from flags and an optional TOML file.
//!
//! ```toml
//! system = "hyper4d"
//! alpha = 0.93
//! h = 0.01
//! t_final = 150.0
//! scheme = "two_step"          # two_step | full_history | reference
//! variant = "corrected"        # corrected | as_printed
//! bootstrap = "rk4_classical"  # rk4_classical | fractional_euler
//! refine = 8                   # reference scheme only
//! hyper4d_f3 = "x2_x1sq"       # x2_x1sq | x1_x2 | x1sq
//! ic = [0.2, 0.4, 0.2, 0.7]
//! out = "hyper4d.csv"
//!
//! [params]
//! phi = 8.0
//! ```
//!
//! Flags given on the command line override the file.

use crate::error::{Error, Result};
use crate::integrators::{Bootstrap, Grid, Method, Scheme, WeightVariant};
use crate::math::Order;
use crate::systems::{builtin_system, BuiltinOptions, Hyper4dF3, State, SystemSpec};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

pub const DEFAULT_REFINE: usize = 8;

/// Contents of a config file; every key is optional.
#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub system: Option<String>,
    #[serde(default)]
    pub params: BTreeMap<String, f64>,
    pub alpha: Option<f64>,
    pub h: Option<f64>,
    pub t_final: Option<f64>,
    pub scheme: Option<Scheme>,
    pub variant: Option<WeightVariant>,
    pub bootstrap: Option<Bootstrap>,
    pub refine: Option<usize>,
    pub hyper4d_f3: Option<Hyper4dF3>,
    pub ic: Option<Vec<f64>>,
    pub out: Option<PathBuf>,
}

impl FileConfig {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// Overlays `other` on `self`; keys present in `other` win.
    pub fn overlay(mut self, other: FileConfig) -> Self {
        self.params.extend(other.params);
        macro_rules! take {
            ($($f:ident),*) => { $( if other.$f.is_some() { self.$f = other.$f; } )* };
        }
        take!(system, alpha, h, t_final, scheme, variant, bootstrap, refine, hyper4d_f3, ic, out);
        self
    }
}

/// A fully resolved simulation request.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub system: String,
    pub params: BTreeMap<String, f64>,
    pub alpha: f64,
    pub h: f64,
    pub t_final: f64,
    pub scheme: Scheme,
    pub variant: WeightVariant,
    pub bootstrap: Bootstrap,
    pub refine: usize,
    pub hyper4d_f3: Hyper4dF3,
    pub ic: Option<Vec<f64>>,
    pub out: PathBuf,
}

impl RunConfig {
    pub fn resolve(c: FileConfig) -> Result<Self> {
        let missing = |k: &str| Error::Config(format!("missing required setting `{k}`"));
        let cfg = Self {
            system: c.system.ok_or_else(|| missing("system"))?,
            params: c.params,
            alpha: c.alpha.ok_or_else(|| missing("alpha"))?,
            h: c.h.ok_or_else(|| missing("h"))?,
            t_final: c.t_final.ok_or_else(|| missing("t_final"))?,
            scheme: c.scheme.unwrap_or_default(),
            variant: c.variant.unwrap_or_default(),
            bootstrap: c.bootstrap.unwrap_or_default(),
            refine: c.refine.unwrap_or(DEFAULT_REFINE),
            hyper4d_f3: c.hyper4d_f3.unwrap_or_default(),
            ic: c.ic,
            out: c.out.ok_or_else(|| missing("out"))?,
        };
        cfg.order()?;
        cfg.grid()?;
        let sys = cfg.system_spec()?;
        cfg.initial_state(&sys)?;
        if cfg.refine == 0 {
            return Err(Error::Config("refine must be at least 1".into()));
        }
        Ok(cfg)
    }

    pub fn order(&self) -> Result<Order> {
        Order::new(self.alpha)
    }

    pub fn grid(&self) -> Result<Grid> {
        Grid::with_final_time(self.h, self.t_final)
    }

    pub fn method(&self) -> Method {
        match self.scheme {
            Scheme::TwoStep => Method::TwoStep { variant: self.variant, bootstrap: self.bootstrap },
            Scheme::FullHistory => Method::FullHistory { bootstrap: self.bootstrap },
            Scheme::Reference => Method::Reference { refine: self.refine },
        }
    }

    pub fn system_spec(&self) -> Result<SystemSpec> {
        let opts = BuiltinOptions { overrides: self.params.iter().map(|(k, v)| (k.clone(), *v)).collect(), hyper4d_f3: self.hyper4d_f3 };
        builtin_system(&self.system, &opts)
    }

    pub fn initial_state(&self, sys: &SystemSpec) -> Result<State> {
        match &self.ic {
            None => Ok(sys.default_ic().clone()),
            Some(v) if v.len() == sys.dimension() => Ok(State(v.clone())),
            Some(v) => {
                Err(Error::Config(format!("initial state has {} components, system `{}` has {}", v.len(), sys.name(), sys.dimension())))
            }
        }
    }
}
