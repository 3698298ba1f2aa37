use std::fs::{self, File};
use std::io::{BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use crate::analysis::l2_mean_error;
use crate::engine::{solve_segmented_with_reports, ConvergenceReport, PiecewiseCurve};
use crate::error::{Error, Result};
use crate::reference::{rk8_solve, taylor_solve};

use super::config::{ExperimentConfig, ReferenceMethod, Variant};

/// In-memory results of one experiment.
#[derive(Debug, Clone)]
pub struct RunOutcome {
    pub solution: PiecewiseCurve,
    pub reference: PiecewiseCurve,
    /// Mean-square error against the reference, per component.
    pub errors: Vec<f64>,
    /// Convergence record of every segment.
    pub reports: Vec<ConvergenceReport>,
}

/// Files written by [`run`] together with the in-memory outcome.
#[derive(Debug, Clone)]
pub struct RunArtifacts {
    pub solution_path: PathBuf,
    pub errors_path: PathBuf,
    pub convergence_path: PathBuf,
    pub outcome: RunOutcome,
}

/// Solves the configured experiment without touching the file system.
pub fn execute(config: &ExperimentConfig) -> Result<RunOutcome> {
    config.validate()?;
    let sys = config.problem.system()?;
    let sys = match config.variant {
        Variant::Extended => sys,
        Variant::Standard => sys.standard_split(),
    };
    let y0 = config.problem.initial_value();
    let [a, b] = config.interval;
    let (solution, reports) = solve_segmented_with_reports(&sys, a, b, &y0, &config.settings)?;
    let r = &config.reference;
    let reference = match r.method {
        ReferenceMethod::Rk8 => rk8_solve(&sys, a, b, &y0, r.step),
        ReferenceMethod::Taylor => taylor_solve(&sys, a, b, &y0, r.step, r.order),
    }
    .map_err(|e| e.context("reference solve"))?;
    let errors = (0..sys.dim())
        .map(|i| l2_mean_error(&reference, &solution, a, b, i))
        .collect::<Result<Vec<_>>>()?;
    Ok(RunOutcome { solution, reference, errors, reports })
}

/// Runs the experiment and writes the solution, error and convergence CSVs
/// into the configured output directory.
pub fn run(config: &ExperimentConfig) -> Result<RunArtifacts> {
    let outcome = execute(config)?;
    let out = &config.output;
    fs::create_dir_all(&out.dir)?;
    let solution_path = out.dir.join(&out.solution);
    let errors_path = out.dir.join(&out.errors);
    let convergence_path = out.dir.join(&out.convergence);
    let [a, b] = config.interval;

    write_solution_csv(&outcome.solution, a, b, out.samples_per_unit, create(&solution_path)?)?;
    write_errors_csv(&outcome.errors, &reference_label(config), create(&errors_path)?)?;
    write_convergence_csv(&outcome.reports, create(&convergence_path)?)?;
    Ok(RunArtifacts { solution_path, errors_path, convergence_path, outcome })
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn reference_label(config: &ExperimentConfig) -> String {
    let r = &config.reference;
    match r.method {
        ReferenceMethod::Rk8 => format!("rk8 step {}", r.step),
        ReferenceMethod::Taylor => format!("taylor-{} step {}", r.order, r.step),
    }
}

/// Abscissas of the solution file: `samples_per_unit` points per unit
/// length (so a spacing of `1 / (samples_per_unit - 1)`), endpoints included.
pub fn sample_abscissas(a: f64, b: f64, samples_per_unit: usize) -> Vec<f64> {
    let intervals = (((b - a) * (samples_per_unit - 1) as f64).round() as usize).max(1);
    (0..=intervals)
        .map(|i| if i == intervals { b } else { a + (b - a) * i as f64 / intervals as f64 })
        .collect()
}

/// Header `x,y1,...,yN`; every value with 17 significant digits.
pub fn write_solution_csv<W: Write>(curve: &PiecewiseCurve, a: f64, b: f64, samples_per_unit: usize, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["x".to_string()];
    header.extend((1..=curve.dim()).map(|i| format!("y{i}")));
    w.write_record(&header)?;
    for x in sample_abscissas(a, b, samples_per_unit) {
        let y = curve.eval(x);
        let mut rec = vec![format!("{x:.16e}")];
        rec.extend(y.iter().map(|v| format!("{v:.16e}")));
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}

/// Parses a solution CSV back into `(x, y)` rows.
pub fn read_solution_csv<R: Read>(input: R) -> Result<Vec<(f64, Vec<f64>)>> {
    let mut r = csv::Reader::from_reader(input);
    let dim = r.headers()?.len().saturating_sub(1);
    let mut rows = Vec::new();
    for rec in r.records() {
        let rec = rec?;
        let vals = rec
            .iter()
            .map(|s| s.parse::<f64>().map_err(|e| Error::Io(format!("bad number `{s}`: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        if vals.len() != dim + 1 {
            return Err(Error::Io(format!("row has {} fields, expected {}", vals.len(), dim + 1)));
        }
        rows.push((vals[0], vals[1..].to_vec()));
    }
    Ok(rows)
}

/// Header `component,reference,error`.
pub fn write_errors_csv<W: Write>(errors: &[f64], reference: &str, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["component", "reference", "error"])?;
    for (i, e) in errors.iter().enumerate() {
        w.write_record([format!("y{}", i + 1), reference.to_string(), format!("{e:.16e}")])?;
    }
    w.flush()?;
    Ok(())
}

/// Header `segment,x0,x1,k,sup_diff,bound,bound_holds,m_est,k_est,h_est`,
/// one row per segment and iteration.
pub fn write_convergence_csv<W: Write>(reports: &[ConvergenceReport], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["segment", "x0", "x1", "k", "sup_diff", "bound", "bound_holds", "m_est", "k_est", "h_est"])?;
    for (s, r) in reports.iter().enumerate() {
        for k in 1..=r.sup_diffs.len() {
            w.write_record([
                s.to_string(),
                format!("{:.16e}", r.x0),
                format!("{:.16e}", r.x1),
                k.to_string(),
                format!("{:.6e}", r.sup_diff(k)),
                format!("{:.6e}", r.bound(k)),
                r.bound_holds[k - 1].to_string(),
                format!("{:.6e}", r.m_est),
                format!("{:.6e}", r.k_est),
                format!("{:.6e}", r.h_est),
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abscissa_density() {
        let xs = sample_abscissas(0.0, 1.0, 401);
        assert_eq!(xs.len(), 401);
        assert_eq!(xs[400], 1.0);
        assert!((xs[1] - 0.0025).abs() < 1e-18);
        assert_eq!(sample_abscissas(0.0, 10.0, 401).len(), 4001);
    }
}
