//! Experiment configuration, read from TOML.
//!
//! ```toml
//! h = 0.1            # coarse step
//! dt = 0.05          # coarse time step
//! steps = 2          # N
//! refinement = 2     # r (even)
//! cor3_target = 0.01 # optional
//!
//! [domain]
//! a = 0.0
//! b = 1.0
//!
//! [flux]
//! name = "linear"    # or "burgers"
//! a = 1.0
//!
//! [initial]
//! kind = "sine"      # constant | affine | sine | table
//! amplitude = 1e-6
//! freq = 6.283185307179586
//! offset = 0.4
//!
//! [boundary]
//! mode = "from_u0"   # or "explicit" with u_a, u_b
//!
//! [checks]           # every family defaults to true
//! cor4 = false
//!
//! [outputs]
//! csv = "report.csv"
//! ```

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::bounds::FamilySet;
use crate::error::{Error, Result};
use crate::flux::FluxModel;
use crate::grid::{check_refinement, Grid};
use crate::solver::BOUNDARY_MATCH_TOL;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Domain {
    pub a: f64,
    pub b: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "lowercase", deny_unknown_fields)]
pub enum FluxSpec {
    Linear { a: f64 },
    Burgers,
}

impl FluxSpec {
    pub fn model(&self) -> Result<FluxModel> {
        match *self {
            FluxSpec::Linear { a } => FluxModel::linear(a).map_err(|e| Error::config("flux.a", e)),
            FluxSpec::Burgers => Ok(FluxModel::burgers()),
        }
    }
}

/// Initial profile `u0(x)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum InitialData {
    Constant {
        value: f64,
    },
    /// `c0 + c1 x`
    Affine {
        c0: f64,
        c1: f64,
    },
    /// `amplitude sin(freq x) + offset`
    Sine {
        amplitude: f64,
        freq: f64,
        #[serde(default)]
        offset: f64,
    },
    /// Samples on equispaced points spanning the domain, linearly
    /// interpolated in between.
    Table {
        values: Vec<f64>,
    },
}

impl InitialData {
    pub fn eval(&self, x: f64, domain: Domain) -> f64 {
        match self {
            InitialData::Constant { value } => *value,
            InitialData::Affine { c0, c1 } => c0 + c1 * x,
            InitialData::Sine {
                amplitude,
                freq,
                offset,
            } => amplitude * (freq * x).sin() + offset,
            InitialData::Table { values } => {
                let last = values.len() - 1;
                let pos = (x - domain.a) / (domain.b - domain.a) * last as f64;
                let pos = pos.clamp(0.0, last as f64);
                let i = (pos.floor() as usize).min(last - 1);
                let frac = pos - i as f64;
                values[i] + frac * (values[i + 1] - values[i])
            }
        }
    }

    fn validate(&self) -> Result<()> {
        let finite = |field: &str, v: f64| {
            if v.is_finite() {
                Ok(())
            } else {
                Err(Error::config(field, format!("non-finite value {v}")))
            }
        };
        match self {
            InitialData::Constant { value } => finite("initial.value", *value),
            InitialData::Affine { c0, c1 } => {
                finite("initial.c0", *c0)?;
                finite("initial.c1", *c1)
            }
            InitialData::Sine {
                amplitude,
                freq,
                offset,
            } => {
                finite("initial.amplitude", *amplitude)?;
                finite("initial.freq", *freq)?;
                finite("initial.offset", *offset)
            }
            InitialData::Table { values } => {
                if values.len() < 2 {
                    return Err(Error::config("initial.values", "need at least two samples"));
                }
                values.iter().try_for_each(|&v| finite("initial.values", v))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case", deny_unknown_fields)]
pub enum BoundarySpec {
    #[default]
    FromU0,
    Explicit {
        u_a: f64,
        u_b: f64,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Outputs {
    /// CSV file name, relative to the output directory.
    pub csv: String,
    /// Optional summary file name, relative to the output directory.
    pub summary: Option<String>,
}

impl Default for Outputs {
    fn default() -> Self {
        Self {
            csv: "report.csv".into(),
            summary: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub h: f64,
    pub dt: f64,
    /// Coarse step count `N`.
    pub steps: usize,
    /// Refinement factor `r`.
    pub refinement: usize,
    #[serde(default)]
    pub cor3_target: Option<f64>,
    pub domain: Domain,
    pub flux: FluxSpec,
    pub initial: InitialData,
    #[serde(default)]
    pub boundary: BoundarySpec,
    #[serde(default)]
    pub checks: FamilySet,
    #[serde(default)]
    pub outputs: Outputs,
}

impl ExperimentConfig {
    pub fn from_toml_str(text: &str) -> Result<Self> {
        let value: toml::Value =
            toml::from_str(text).map_err(|e| Error::config("<document>", e.message()))?;
        Self::from_value(value)
    }

    /// Deserializes and validates an already parsed document.
    pub fn from_value(value: toml::Value) -> Result<Self> {
        let cfg: ExperimentConfig = value
            .try_into()
            .map_err(|e: toml::de::Error| Error::config("<document>", e.message()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::from_toml_str(&text)
    }

    pub fn u0(&self, x: f64) -> f64 {
        self.initial.eval(x, self.domain)
    }

    /// `(u_a, u_b)` after applying the boundary mode.
    pub fn boundary_values(&self) -> (f64, f64) {
        match self.boundary {
            BoundarySpec::FromU0 => (self.u0(self.domain.a), self.u0(self.domain.b)),
            BoundarySpec::Explicit { u_a, u_b } => (u_a, u_b),
        }
    }

    /// Re-checks every solver precondition, naming the offending field.
    pub fn validate(&self) -> Result<()> {
        let Domain { a, b } = self.domain;
        if !(a.is_finite() && b.is_finite()) || b <= a {
            return Err(Error::config(
                "domain",
                format!("need a < b, got [{a}, {b}]"),
            ));
        }
        Grid::new(a, b, self.h).map_err(|e| Error::config("h", e))?;
        check_refinement(self.refinement).map_err(|e| Error::config("refinement", e))?;
        if self.steps == 0 {
            return Err(Error::config(
                "steps",
                "at least one coarse step is required",
            ));
        }
        if !(self.dt.is_finite() && self.dt > 0.0) {
            return Err(Error::config(
                "dt",
                format!("must be positive, got {}", self.dt),
            ));
        }
        self.flux.model()?;
        self.initial.validate()?;
        if let Some(t) = self.cor3_target {
            if !(t.is_finite() && t > 0.0) {
                return Err(Error::config(
                    "cor3_target",
                    format!("must be positive, got {t}"),
                ));
            }
        }
        if let BoundarySpec::Explicit { u_a, u_b } = self.boundary {
            for (side, given, x) in [("u_a", u_a, a), ("u_b", u_b, b)] {
                let init = self.u0(x);
                if !given.is_finite() || (given - init).abs() > BOUNDARY_MATCH_TOL {
                    return Err(Error::config(
                        format!("boundary.{side}"),
                        format!("{given} does not match u0 = {init} within {BOUNDARY_MATCH_TOL:e}"),
                    ));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const BASE: &str = r#"
        h = 0.1
        dt = 0.05
        steps = 2
        refinement = 2

        [domain]
        a = 0.0
        b = 1.0

        [flux]
        name = "linear"
        a = 1.0

        [initial]
        kind = "affine"
        c0 = 0.5
        c1 = 1e-6
    "#;

    fn with(extra: &str) -> String {
        format!("{BASE}\n{extra}")
    }

    #[test]
    fn parses_minimal_config() {
        let cfg = ExperimentConfig::from_toml_str(BASE).unwrap();
        assert_eq!(cfg.flux, FluxSpec::Linear { a: 1.0 });
        assert_eq!(cfg.boundary, BoundarySpec::FromU0);
        assert_eq!(cfg.checks, FamilySet::default());
        assert_eq!(cfg.outputs.csv, "report.csv");
        let (ua, ub) = cfg.boundary_values();
        assert_eq!(ua, 0.5);
        assert!((ub - 0.500001).abs() < 1e-15);
    }

    #[test]
    fn names_the_bad_field() {
        let field_of = |text: &str| match ExperimentConfig::from_toml_str(text) {
            Err(Error::Config { field, .. }) => field,
            other => panic!("expected config error, got {other:?}"),
        };
        assert_eq!(field_of(&BASE.replace("h = 0.1", "h = 0.3")), "h");
        assert_eq!(
            field_of(&BASE.replace("refinement = 2", "refinement = 3")),
            "refinement"
        );
        assert_eq!(field_of(&BASE.replace("steps = 2", "steps = 0")), "steps");
        assert_eq!(field_of(&BASE.replace("dt = 0.05", "dt = -1.0")), "dt");
        assert_eq!(field_of(&BASE.replace("a = 1.0", "a = 0.0")), "flux.a");
        assert_eq!(
            field_of(&with(
                "[boundary]\nmode = \"explicit\"\nu_a = 0.4\nu_b = 0.5"
            )),
            "boundary.u_a"
        );
        assert_eq!(field_of(&with("bogus = 1")), "<document>");
    }

    #[test]
    fn explicit_boundary_must_match() {
        let cfg = ExperimentConfig::from_toml_str(&with(
            "[boundary]\nmode = \"explicit\"\nu_a = 0.5\nu_b = 0.500001",
        ))
        .unwrap();
        assert_eq!(cfg.boundary_values(), (0.5, 0.500001));
    }

    #[test]
    fn table_is_piecewise_linear() {
        let d = Domain { a: 0.0, b: 2.0 };
        let t = InitialData::Table {
            values: vec![0.0, 1.0, 0.0],
        };
        assert_eq!(t.eval(0.0, d), 0.0);
        assert_eq!(t.eval(0.5, d), 0.5);
        assert_eq!(t.eval(1.0, d), 1.0);
        assert_eq!(t.eval(1.5, d), 0.5);
        assert_eq!(t.eval(2.0, d), 0.0);
    }

    #[test]
    fn checks_flags_default_true() {
        let cfg = ExperimentConfig::from_toml_str(&with("[checks]\ncor4 = false")).unwrap();
        assert!(!cfg.checks.cor4);
        assert!(cfg.checks.theorem1);
    }
}
