use std::f64::consts::PI;
use std::fmt;
use std::io::Write;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::metrics::{l2_error, l2_error_fn, ErrorNorm};
use super::roots::{try_root_find_scalar, RootSearch};
use crate::engine::{solve_segmented, OdeSystem, PiecewiseCurve, SeedRule, SolveSettings};
use crate::error::{Error, Result};
use crate::linalg::VecN;
use crate::problems::{
    bratu_exact, bratu_exact_theta, bratu_quadratic_system, bratu_shoot, bratu_shoot_settings,
    bratu_vim_reference, mathieu_char_series, mathieu_char_values, percent_deviation, ProblemKind,
    ProblemSpec,
};
use crate::reference::{rk8_solve, taylor_solve};

/// The thirteen benchmark tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TableId {
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    T7,
    T8,
    T9,
    T10,
    T11,
    T12,
    T13,
}

impl TableId {
    pub const ALL: [TableId; 13] = [
        TableId::T1,
        TableId::T2,
        TableId::T3,
        TableId::T4,
        TableId::T5,
        TableId::T6,
        TableId::T7,
        TableId::T8,
        TableId::T9,
        TableId::T10,
        TableId::T11,
        TableId::T12,
        TableId::T13,
    ];

    pub fn number(self) -> usize {
        self as usize + 1
    }

    pub fn problem(self) -> ProblemKind {
        use TableId::*;
        match self {
            T1 | T2 | T3 => ProblemKind::Mathieu,
            T4 | T5 => ProblemKind::Duffing,
            T6 => ProblemKind::Bratu,
            T7 | T8 | T9 => ProblemKind::Glycolysis,
            T10 | T11 => ProblemKind::Brusselator,
            T12 | T13 => ProblemKind::BrusselatorW,
        }
    }

    pub fn description(self) -> &'static str {
        use TableId::*;
        match self {
            T1 => "Mathieu, Taylor orders 2-5",
            T2 => "Mathieu, segmented extended Picard",
            T3 => "Mathieu characteristic values, percent deviation from the series",
            T4 => "quintic Duffing, Taylor orders 2-5",
            T5 => "quintic Duffing, segmented extended Picard",
            T6 => "Bratu, errors against the exact solution",
            T7 => "glycolysis, Taylor orders 2-5",
            T8 => "glycolysis, segmented extended Picard",
            T9 => "glycolysis, segmented standard Picard",
            T10 => "Brusselator, Taylor orders 2-5",
            T11 => "Brusselator, segmented extended Picard",
            T12 => "Brusselator w-form, Taylor orders 2-5",
            T13 => "Brusselator w-form, segmented extended Picard",
        }
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{}", self.number())
    }
}

impl FromStr for TableId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let digits = s.strip_prefix(['T', 't']).unwrap_or(s);
        digits
            .parse::<usize>()
            .ok()
            .and_then(|n| n.checked_sub(1))
            .and_then(|i| TableId::ALL.get(i).copied())
            .ok_or_else(|| Error::Config(format!("unknown table `{s}` (expected T1..T13)")))
    }
}

/// One cell of an error table. Columns that do not apply are `None`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ErrorRow {
    pub method: String,
    pub h: Option<f64>,
    pub iterations: Option<usize>,
    pub degree: Option<usize>,
    pub error: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ErrorTable {
    pub id: TableId,
    pub problem: ProblemKind,
    pub interval: (f64, f64),
    pub reference: String,
    pub rows: Vec<ErrorRow>,
}

impl ErrorTable {
    /// Error of the first row matching every given coordinate.
    pub fn lookup(&self, method: &str, h: Option<f64>, iterations: Option<usize>, degree: Option<usize>) -> Option<f64> {
        self.rows
            .iter()
            .find(|r| {
                r.method == method
                    && h.is_none_or(|h| r.h.is_some_and(|rh| (rh - h).abs() < 1e-12))
                    && (iterations.is_none() || r.iterations == iterations)
                    && (degree.is_none() || r.degree == degree)
            })
            .map(|r| r.error)
    }

    /// CSV with header `method,h,iterations,degree,error`; absent columns are empty.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["method", "h", "iterations", "degree", "error"])?;
        for r in &self.rows {
            w.write_record([
                r.method.clone(),
                r.h.map(|h| h.to_string()).unwrap_or_default(),
                r.iterations.map(|n| n.to_string()).unwrap_or_default(),
                r.degree.map(|d| d.to_string()).unwrap_or_default(),
                format!("{:.6e}", r.error),
            ])?;
        }
        w.flush()?;
        Ok(())
    }
}

/// Replacements for the documented table configuration.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct TableOverrides {
    pub reference_step: Option<f64>,
    pub h_values: Option<Vec<f64>>,
    pub iterations: Option<Vec<usize>>,
    pub degrees: Option<Vec<usize>>,
    pub taylor_orders: Option<Vec<usize>>,
}

/// Fixed configuration of a trajectory table.
#[derive(Debug, Clone, PartialEq)]
pub struct TableSetup {
    pub spec: ProblemSpec,
    pub interval: (f64, f64),
    pub reference_step: f64,
    pub h_values: Vec<f64>,
    pub iterations: Vec<usize>,
    pub degrees: Vec<usize>,
    pub taylor_orders: Vec<usize>,
    pub seed: SeedRule,
}

impl TableSetup {
    /// The documented configuration for `id`; `None` for T3 and T6, which are
    /// not trajectory comparisons.
    pub fn documented(id: TableId) -> Option<TableSetup> {
        use TableId::*;
        let problem = id.problem();
        let (reference_step, h_values) = match problem {
            ProblemKind::Mathieu => (1e-3, vec![0.1, 0.5]),
            ProblemKind::Duffing => (1e-2, vec![0.1, 0.5]),
            ProblemKind::Glycolysis | ProblemKind::Brusselator | ProblemKind::BrusselatorW => (1e-2, vec![0.1]),
            ProblemKind::Bratu => return None,
        };
        let interval = problem.benchmark_interval();
        if matches!(id, T3 | T6) {
            return None;
        }
        let seed = if matches!(id, T8 | T9) { SeedRule::InitialValue } else { SeedRule::Homogeneous };
        Some(TableSetup {
            spec: problem.benchmark(),
            interval,
            reference_step,
            h_values,
            iterations: vec![2, 3, 4, 5],
            degrees: vec![1, 3],
            taylor_orders: vec![2, 3, 4, 5],
            seed,
        })
    }

    fn apply(&mut self, o: &TableOverrides) {
        if let Some(s) = o.reference_step {
            self.reference_step = s;
        }
        if let Some(h) = &o.h_values {
            self.h_values = h.clone();
        }
        if let Some(n) = &o.iterations {
            self.iterations = n.clone();
        }
        if let Some(d) = &o.degrees {
            self.degrees = d.clone();
        }
        if let Some(p) = &o.taylor_orders {
            self.taylor_orders = p.clone();
        }
    }
}

#[derive(Debug, Clone, Copy)]
enum Cell {
    Taylor { h: f64, order: usize },
    Picard { h: f64, n_iter: usize, degree: usize, standard: bool },
}

impl Cell {
    fn label(&self) -> String {
        match *self {
            Cell::Taylor { h, order } => format!("taylor-{order} h={h}"),
            Cell::Picard { h, n_iter, degree, standard } => {
                let m = if standard { "sp" } else { "ep" };
                format!("{m} h={h} iterations={n_iter} degree={degree}")
            }
        }
    }
}

/// Rebuilds table `id`. Independent cells run concurrently; rows come back
/// in a fixed order (h, then iterations, then degree; Taylor by h then order).
pub fn reproduce_table(id: TableId, overrides: &TableOverrides) -> Result<ErrorTable> {
    match id {
        TableId::T3 => mathieu_eigen_table(overrides),
        TableId::T6 => bratu_table(overrides),
        _ => {
            let mut setup = TableSetup::documented(id).expect("trajectory table");
            setup.apply(overrides);
            trajectory_table(id, &setup)
        }
    }
}

fn trajectory_table(id: TableId, setup: &TableSetup) -> Result<ErrorTable> {
    use TableId::*;
    let sys = setup.spec.system()?;
    let y0 = setup.spec.initial_value();
    let (a, b) = setup.interval;
    let reference = rk8_solve(&sys, a, b, &y0, setup.reference_step).map_err(|e| e.context(format!("{id} reference")))?;

    let mut cells = Vec::new();
    match id {
        T1 | T4 | T7 | T10 | T12 => {
            for &h in &setup.h_values {
                for &order in &setup.taylor_orders {
                    cells.push(Cell::Taylor { h, order });
                }
            }
        }
        _ => {
            let standard = id == T9;
            for &h in &setup.h_values {
                for &n_iter in &setup.iterations {
                    for &degree in &setup.degrees {
                        cells.push(Cell::Picard { h, n_iter, degree, standard });
                    }
                }
            }
        }
    }

    let rows = cells
        .par_iter()
        .map(|cell| {
            let candidate = match *cell {
                Cell::Taylor { h, order } => taylor_solve(&sys, a, b, &y0, h, order),
                Cell::Picard { h, n_iter, degree, standard } => {
                    let settings = SolveSettings::poly_fit(h, n_iter, degree).with_seed(setup.seed);
                    let target = if standard { sys.standard_split() } else { sys.clone() };
                    solve_segmented(&target, a, b, &y0, &settings)
                }
            }
            .and_then(|c| l2_error(&reference, &c, a, b, 0, ErrorNorm::Mean))
            .map_err(|e| e.context(format!("{id} cell {}", cell.label())))?;
            Ok(match *cell {
                Cell::Taylor { h, order } => ErrorRow {
                    method: format!("taylor-{order}"),
                    h: Some(h),
                    iterations: None,
                    degree: None,
                    error: candidate,
                },
                Cell::Picard { h, n_iter, degree, standard } => ErrorRow {
                    method: if standard { "sp" } else { "ep" }.to_string(),
                    h: Some(h),
                    iterations: Some(n_iter),
                    degree: Some(degree),
                    error: candidate,
                },
            })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(ErrorTable {
        id,
        problem: setup.spec.kind,
        interval: setup.interval,
        reference: format!("rk8 step {}", setup.reference_step),
        rows,
    })
}

/// q used for the characteristic-value table.
pub const EIGEN_TABLE_Q: f64 = 0.1;

fn mathieu_eigen_table(overrides: &TableOverrides) -> Result<ErrorTable> {
    let iterations = overrides.iterations.clone().unwrap_or_else(|| vec![1, 2, 3]);
    let per_iter = iterations
        .par_iter()
        .map(|&n| {
            mathieu_char_values(EIGEN_TABLE_Q, n, 5).map_err(|e| e.context(format!("T3 iterations={n}")))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut rows = Vec::new();
    for (&n, values) in iterations.iter().zip(&per_iter) {
        for (k, r) in values.iter().enumerate() {
            let series = mathieu_char_series(EIGEN_TABLE_Q, k + 1)?;
            rows.push(ErrorRow {
                method: format!("r{}", k + 1),
                h: Some(PI),
                iterations: Some(n),
                degree: None,
                error: percent_deviation(*r, series),
            });
        }
    }
    Ok(ErrorTable {
        id: TableId::T3,
        problem: ProblemKind::Mathieu,
        interval: (0.0, PI),
        reference: "small-q series".into(),
        rows,
    })
}

/// Slope quoted with the closed-form variational iterate.
pub const BRATU_VIM_K: f64 = 0.546936690480377;
/// Step used by the fixed-step integrators in the Bratu comparison.
pub const BRATU_REFERENCE_STEP: f64 = 0.1;

/// Slope `u` with `y(1; u) = 0` for an arbitrary integrator.
fn shoot_with(solve: impl Fn(f64) -> Result<PiecewiseCurve>) -> Result<PiecewiseCurve> {
    let u = try_root_find_scalar(
        |u| solve(u).map(|c| c.end_value()[0]),
        RootSearch::Seeds(crate::problems::SHOOT_SEEDS.0, crate::problems::SHOOT_SEEDS.1),
        crate::problems::SHOOT_TOL,
        crate::problems::SHOOT_MAX_STEPS,
    )
    .map_err(|e| match e {
        Error::RootNotFound(m) => Error::ShootingFailure(m),
        other => other,
    })?;
    solve(u)
}

fn bratu_table(overrides: &TableOverrides) -> Result<ErrorTable> {
    let alpha = 1.0;
    let n_iter = overrides.iterations.as_ref().and_then(|v| v.first().copied()).unwrap_or(2);
    let step = overrides.reference_step.unwrap_or(BRATU_REFERENCE_STEP);
    let theta = *bratu_exact_theta(alpha)?
        .first()
        .ok_or_else(|| Error::RootNotFound("no exact Bratu solution".into()))?;
    let exact = |x: f64| bratu_exact(theta, x);
    let sys: OdeSystem = bratu_quadratic_system(alpha)?;
    let start = |u: f64| VecN::from_vec(vec![0.0, u]);
    let curve_error = |c: &PiecewiseCurve| l2_error_fn(exact, |x| c.eval(x)[0], 0.0, 1.0, ErrorNorm::Integral);

    let methods = ["ep", "vim", "rk8", "taylor-10"];
    let rows = methods
        .par_iter()
        .map(|&m| {
            let (h, iterations, error) = match m {
                "ep" => {
                    let (_, c) = bratu_shoot(alpha, n_iter, &bratu_shoot_settings(n_iter))?;
                    (Some(1.0), Some(n_iter), curve_error(&c))
                }
                "vim" => (None, Some(2), l2_error_fn(exact, |x| bratu_vim_reference(x, BRATU_VIM_K), 0.0, 1.0, ErrorNorm::Integral)),
                "rk8" => {
                    let c = shoot_with(|u| rk8_solve(&sys, 0.0, 1.0, &start(u), step))?;
                    (Some(step), None, curve_error(&c))
                }
                _ => {
                    let c = shoot_with(|u| taylor_solve(&sys, 0.0, 1.0, &start(u), step, 10))?;
                    (Some(step), None, curve_error(&c))
                }
            };
            Ok(ErrorRow { method: m.to_string(), h, iterations, degree: None, error })
        })
        .collect::<Result<Vec<_>>>()
        .map_err(|e: Error| e.context("T6"))?;
    Ok(ErrorTable {
        id: TableId::T6,
        problem: ProblemKind::Bratu,
        interval: (0.0, 1.0),
        reference: "exact solution".into(),
        rows,
    })
}

/// Errors of single-segment iterations (no subdivision) on the whole
/// interval, computed with the quadrature backend and the homogeneous seed.
pub fn unsegmented_errors(
    spec: &ProblemSpec,
    interval: (f64, f64),
    iterations: &[usize],
    quad_points: usize,
    reference_step: f64,
) -> Result<Vec<ErrorRow>> {
    let sys = spec.system()?;
    let y0 = spec.initial_value();
    let (a, b) = interval;
    let reference = rk8_solve(&sys, a, b, &y0, reference_step)?;
    iterations
        .par_iter()
        .map(|&n| {
            let settings = SolveSettings::quadrature(b - a, n, quad_points);
            let c = solve_segmented(&sys, a, b, &y0, &settings)?;
            Ok(ErrorRow {
                method: "ep-global".into(),
                h: Some(b - a),
                iterations: Some(n),
                degree: None,
                error: l2_error(&reference, &c, a, b, 0, ErrorNorm::Mean)?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_ids_parse() {
        for id in TableId::ALL {
            assert_eq!(id.to_string().parse::<TableId>().unwrap(), id);
        }
        assert_eq!("t7".parse::<TableId>().unwrap(), TableId::T7);
        assert!("T14".parse::<TableId>().is_err());
        assert!("T0".parse::<TableId>().is_err());
    }

    #[test]
    fn csv_schema() {
        let t = ErrorTable {
            id: TableId::T1,
            problem: ProblemKind::Mathieu,
            interval: (0.0, 1.0),
            reference: "x".into(),
            rows: vec![ErrorRow { method: "taylor-2".into(), h: Some(0.1), iterations: None, degree: None, error: 1.5e-5 }],
        };
        let mut buf = Vec::new();
        t.write_csv(&mut buf).unwrap();
        let s = String::from_utf8(buf).unwrap();
        assert_eq!(s, "method,h,iterations,degree,error\ntaylor-2,0.1,,,1.500000e-5\n");
    }
}
