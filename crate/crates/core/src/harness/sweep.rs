use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::config::ExperimentConfig;
use super::run::run;

/// Grid of solver settings explored by [`sweep`]; empty lists keep the base value.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SweepSpec {
    pub h: Vec<f64>,
    pub n_iter: Vec<usize>,
    pub fit_degree: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub h: f64,
    pub n_iter: usize,
    pub fit_degree: usize,
    /// Mean-square error of the first component.
    pub error: f64,
}

/// Expands the grid into one configuration per point, each writing into its
/// own subdirectory of the base output directory.
pub fn sweep_configs(base: &ExperimentConfig, spec: &SweepSpec) -> Vec<ExperimentConfig> {
    let s = &base.settings;
    let or = |v: &Vec<f64>, d: f64| if v.is_empty() { vec![d] } else { v.clone() };
    let oru = |v: &Vec<usize>, d: usize| if v.is_empty() { vec![d] } else { v.clone() };
    let mut out = Vec::new();
    for h in or(&spec.h, s.h) {
        for n in oru(&spec.n_iter, s.n_iter) {
            for d in oru(&spec.fit_degree, s.fit_degree) {
                let mut cfg = base.clone();
                cfg.settings.h = h;
                cfg.settings.n_iter = n;
                cfg.settings.fit_degree = d;
                cfg.output.dir = base.output.dir.join(format!("h{h}_n{n}_d{d}"));
                out.push(cfg);
            }
        }
    }
    out
}

/// Runs every grid point (concurrently; each writes only its own files) and
/// returns the summary in grid order.
pub fn sweep(base: &ExperimentConfig, spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    let configs = sweep_configs(base, spec);
    for c in &configs {
        c.validate()?;
    }
    configs
        .par_iter()
        .map(|c| {
            let s = &c.settings;
            let art = run(c).map_err(|e| e.context(format!("sweep point h={} n_iter={} fit_degree={}", s.h, s.n_iter, s.fit_degree)))?;
            let error = *art.outcome.errors.first().ok_or_else(|| Error::Io("no error recorded".into()))?;
            Ok(SweepRow { h: s.h, n_iter: s.n_iter, fit_degree: s.fit_degree, error })
        })
        .collect()
}

/// Header `h,n_iter,fit_degree,error`.
pub fn write_sweep_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["h", "n_iter", "fit_degree", "error"])?;
    for r in rows {
        w.write_record([r.h.to_string(), r.n_iter.to_string(), r.fit_degree.to_string(), format!("{:.6e}", r.error)])?;
    }
    w.flush()?;
    Ok(())
}
