use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::engine::SolveSettings;
use crate::error::{Error, Result};
use crate::problems::ProblemSpec;
use crate::reference::{MAX_TAYLOR_ORDER, MIN_TAYLOR_ORDER};

/// Default density of the solution CSV: 401 samples per unit interval.
pub const SAMPLES_PER_UNIT: usize = 401;

/// Which iteration is run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    /// Linear part kept in the kernel.
    #[default]
    Extended,
    /// Classical Picard, `A = 0`.
    Standard,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReferenceMethod {
    Rk8,
    Taylor,
}

/// Integrator used as the reference for the error report.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReferenceSpec {
    pub method: ReferenceMethod,
    /// Taylor order (ignored for RK8).
    #[serde(default = "default_order")]
    pub order: usize,
    pub step: f64,
}

fn default_order() -> usize {
    10
}

impl Default for ReferenceSpec {
    fn default() -> Self {
        ReferenceSpec { method: ReferenceMethod::Rk8, order: default_order(), step: 0.01 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct OutputSpec {
    /// Directory receiving the three CSV files; created if missing.
    pub dir: PathBuf,
    pub solution: String,
    pub errors: String,
    pub convergence: String,
    pub samples_per_unit: usize,
}

impl Default for OutputSpec {
    fn default() -> Self {
        OutputSpec {
            dir: PathBuf::from("out"),
            solution: "solution.csv".into(),
            errors: "errors.csv".into(),
            convergence: "convergence.csv".into(),
            samples_per_unit: SAMPLES_PER_UNIT,
        }
    }
}

/// One experiment: problem, interval, solver settings, reference and outputs.
///
/// ```toml
/// interval = [0.0, 10.0]
///
/// [problem]
/// name = "glycolysis"
/// params = { a = 0.4, b = 0.6 }
/// initial = [1.0, 1.0]
///
/// [settings]
/// h = 0.1
/// n_iter = 3
/// fit_degree = 3
///
/// [reference]
/// method = "rk8"
/// step = 0.01
///
/// [output]
/// dir = "out/glycolysis"
/// ```
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub interval: [f64; 2],
    #[serde(default)]
    pub variant: Variant,
    pub problem: ProblemSpec,
    #[serde(default)]
    pub settings: SolveSettings,
    #[serde(default)]
    pub reference: ReferenceSpec,
    #[serde(default)]
    pub output: OutputSpec,
}

impl ExperimentConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        let cfg: ExperimentConfig = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        Self::from_toml(&text)
    }

    pub fn to_toml(&self) -> Result<String> {
        toml::to_string(self).map_err(|e| Error::Config(e.to_string()))
    }

    /// Checks every field against the chosen problem before anything runs.
    pub fn validate(&self) -> Result<()> {
        let [a, b] = self.interval;
        if !(a.is_finite() && b.is_finite() && b > a) {
            return Err(Error::Config(format!("interval [{a}, {b}] must be finite and increasing")));
        }
        self.problem.validate()?;
        self.settings.validate().map_err(|e| match e {
            Error::InvalidArgument(m) => Error::Config(m),
            other => other,
        })?;
        let r = &self.reference;
        if !(r.step.is_finite() && r.step > 0.0) {
            return Err(Error::Config(format!("reference step must be positive, got {}", r.step)));
        }
        if r.method == ReferenceMethod::Taylor && !(MIN_TAYLOR_ORDER..=MAX_TAYLOR_ORDER).contains(&r.order) {
            return Err(Error::Config(format!("Taylor reference order must be 2..=10, got {}", r.order)));
        }
        if self.output.samples_per_unit < 2 {
            return Err(Error::Config("samples_per_unit must be at least 2".into()));
        }
        Ok(())
    }
}
