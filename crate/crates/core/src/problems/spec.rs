use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::engine::OdeSystem;
use crate::error::{Error, Result};
use crate::linalg::VecN;

use super::{
    bratu_quadratic_system, brusselator_system, brusselator_w_system, duffing_system, glycolysis_system,
    mathieu_system,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProblemKind {
    Mathieu,
    Duffing,
    Bratu,
    Glycolysis,
    Brusselator,
    BrusselatorW,
}

impl ProblemKind {
    pub const ALL: [ProblemKind; 6] = [
        ProblemKind::Mathieu,
        ProblemKind::Duffing,
        ProblemKind::Bratu,
        ProblemKind::Glycolysis,
        ProblemKind::Brusselator,
        ProblemKind::BrusselatorW,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProblemKind::Mathieu => "mathieu",
            ProblemKind::Duffing => "duffing",
            ProblemKind::Bratu => "bratu",
            ProblemKind::Glycolysis => "glycolysis",
            ProblemKind::Brusselator => "brusselator",
            ProblemKind::BrusselatorW => "brusselator-w",
        }
    }

    pub fn required_params(self) -> &'static [&'static str] {
        match self {
            ProblemKind::Mathieu => &["q", "r"],
            ProblemKind::Duffing => &["a"],
            ProblemKind::Bratu => &["alpha"],
            ProblemKind::Glycolysis | ProblemKind::Brusselator | ProblemKind::BrusselatorW => &["a", "b"],
        }
    }

    /// Interval of the benchmark runs.
    pub fn benchmark_interval(self) -> (f64, f64) {
        match self {
            ProblemKind::Mathieu => (0.0, 2.0 * std::f64::consts::PI),
            ProblemKind::Duffing => (0.0, 7.0),
            ProblemKind::Bratu => (0.0, 1.0),
            ProblemKind::Glycolysis => (0.0, 40.0),
            ProblemKind::Brusselator | ProblemKind::BrusselatorW => (0.0, 15.0),
        }
    }

    /// Parameters and initial value used by the benchmark runs.
    pub fn benchmark(self) -> ProblemSpec {
        let (params, y0): (&[(&str, f64)], [f64; 2]) = match self {
            ProblemKind::Mathieu => (&[("q", 0.05), ("r", 1.0)], [1.0, 0.0]),
            ProblemKind::Duffing => (&[("a", 0.5)], [1.0, 0.0]),
            ProblemKind::Bratu => (&[("alpha", 1.0)], [0.0, 0.549249]),
            ProblemKind::Glycolysis => (&[("a", 0.4), ("b", 0.6)], [1.0, 1.0]),
            ProblemKind::Brusselator => (&[("a", 1.0), ("b", 2.5)], [1.8, 1.2]),
            ProblemKind::BrusselatorW => (&[("a", 1.0), ("b", 2.5)], [3.0, -0.8]),
        };
        ProblemSpec {
            kind: self,
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            initial: y0.to_vec(),
        }
    }
}

impl fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProblemKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ProblemKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown problem `{s}`")))
    }
}

/// A named benchmark with its parameters and initial value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemSpec {
    #[serde(rename = "name")]
    pub kind: ProblemKind,
    #[serde(default)]
    pub params: BTreeMap<String, f64>,
    pub initial: Vec<f64>,
}

impl ProblemSpec {
    pub fn param(&self, key: &str) -> Result<f64> {
        self.params
            .get(key)
            .copied()
            .ok_or_else(|| Error::Config(format!("problem `{}` needs parameter `{key}`", self.kind)))
    }

    pub fn validate(&self) -> Result<()> {
        for key in self.kind.required_params() {
            let v = self.param(key)?;
            if !v.is_finite() {
                return Err(Error::Config(format!("parameter `{key}` must be finite")));
            }
        }
        for key in self.params.keys() {
            if !self.kind.required_params().contains(&key.as_str()) {
                return Err(Error::Config(format!("problem `{}` has no parameter `{key}`", self.kind)));
            }
        }
        match self.kind {
            ProblemKind::Glycolysis | ProblemKind::Brusselator | ProblemKind::BrusselatorW => {
                if self.param("a")? <= 0.0 || self.param("b")? <= 0.0 {
                    return Err(Error::Config("a and b must be positive".into()));
                }
            }
            ProblemKind::Bratu if self.param("alpha")? <= 0.0 => {
                return Err(Error::Config("alpha must be positive".into()));
            }
            ProblemKind::Duffing if self.param("a")? < 0.0 => {
                return Err(Error::Config("a must be non-negative".into()));
            }
            _ => {}
        }
        if self.initial.len() != 2 {
            return Err(Error::Config(format!("initial value must have 2 components, got {}", self.initial.len())));
        }
        if self.initial.iter().any(|v| !v.is_finite()) {
            return Err(Error::Config("initial value must be finite".into()));
        }
        Ok(())
    }

    pub fn initial_value(&self) -> VecN {
        VecN::from_column_slice(&self.initial)
    }

    /// The split system of this problem.
    pub fn system(&self) -> Result<OdeSystem> {
        self.validate()?;
        match self.kind {
            ProblemKind::Mathieu => mathieu_system(self.param("r")?, self.param("q")?),
            ProblemKind::Duffing => duffing_system(self.param("a")?),
            ProblemKind::Bratu => bratu_quadratic_system(self.param("alpha")?),
            ProblemKind::Glycolysis => glycolysis_system(self.param("a")?, self.param("b")?),
            ProblemKind::Brusselator => brusselator_system(self.param("a")?, self.param("b")?),
            ProblemKind::BrusselatorW => brusselator_w_system(self.param("a")?, self.param("b")?),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for k in ProblemKind::ALL {
            assert_eq!(k.name().parse::<ProblemKind>().unwrap(), k);
        }
        assert!("lorenz".parse::<ProblemKind>().is_err());
    }

    #[test]
    fn benchmarks_validate() {
        for k in ProblemKind::ALL {
            let spec = k.benchmark();
            spec.validate().unwrap();
            assert_eq!(spec.system().unwrap().dim(), 2);
        }
    }

    #[test]
    fn missing_or_bad_params() {
        let mut spec = ProblemKind::Glycolysis.benchmark();
        spec.params.remove("b");
        assert!(matches!(spec.validate(), Err(Error::Config(_))));
        let mut spec = ProblemKind::Brusselator.benchmark();
        spec.params.insert("a".into(), -1.0);
        assert!(spec.validate().is_err());
        let mut spec = ProblemKind::Duffing.benchmark();
        spec.params.insert("q".into(), 1.0);
        assert!(spec.validate().is_err());
    }
}
