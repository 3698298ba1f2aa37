use crate::error::{Error, Result};
use crate::linalg::{ensure_finite_vec, expm_unchecked, VecN, VecPoly};
use crate::quadrature::{chebyshev_gauss_nodes, chebyshev_lobatto_nodes, gauss_legendre};

use super::curve::{ChebyshevSegment, Flow, PiecewiseCurve, Segment};
use super::diagnostic::{convergence_diagnostic, ConvergenceReport};
use super::fit::fit_forcing_polynomial;
use super::settings::{Backend, SeedRule, SolveSettings};
use super::system::OdeSystem;

/// Iterates with magnitude above this are treated as a blow-up.
pub const DIVERGENCE_LIMIT: f64 = 1e8;

/// All iterates computed on one segment; `iterates[0]` is the seed.
#[derive(Debug, Clone)]
pub struct SegmentRun {
    pub x0: f64,
    pub x1: f64,
    pub iterates: Vec<Segment>,
}

impl SegmentRun {
    pub fn last(&self) -> &Segment {
        self.iterates.last().expect("a run always holds its seed")
    }

    pub fn n_iter(&self) -> usize {
        self.iterates.len() - 1
    }

    pub fn curve(&self) -> PiecewiseCurve {
        PiecewiseCurve::from_parts_unchecked(vec![self.x0, self.x1], vec![self.last().clone()])
    }
}

/// Runs the iteration on `[x0, x1]` from the initial value `y0`.
///
/// `previous` is the final iterate of the preceding segment, used only by
/// [`SeedRule::PreviousSegment`]. `index` labels divergence errors.
pub fn iterate_segment(
    sys: &OdeSystem,
    x0: f64,
    y0: &VecN,
    x1: f64,
    settings: &SolveSettings,
    previous: Option<&Segment>,
    index: usize,
) -> Result<SegmentRun> {
    settings.validate()?;
    if !(x1 > x0) || !x0.is_finite() || !x1.is_finite() {
        return Err(Error::InvalidArgument(format!("segment [{x0}, {x1}] is empty or non-finite")));
    }
    if y0.len() != sys.dim() {
        return Err(Error::DimensionMismatch { expected: sys.dim(), got: y0.len() });
    }
    ensure_finite_vec(y0)?;

    let seed = match (settings.seed, previous) {
        (SeedRule::InitialValue, _) => Segment::Poly(VecPoly::constant(x0, y0.clone())?),
        (SeedRule::PreviousSegment, Some(prev)) => prev.clone(),
        _ => Segment::Flow(Flow::homogeneous(x0, sys.linear().clone(), y0.clone())),
    };

    let mut iterates = Vec::with_capacity(settings.n_iter + 1);
    iterates.push(seed);
    for k in 1..=settings.n_iter {
        let prev = &iterates[k - 1];
        let next = match settings.backend {
            Backend::PolyFit => poly_fit_step(sys, x0, y0, x1, settings, prev),
            Backend::Quadrature => quadrature_step(sys, x0, y0, x1, settings, prev),
        }
        .map_err(|e| match e {
            Error::Divergence { .. } => Error::Divergence { segment: index, iteration: k },
            other => other,
        })?;
        iterates.push(next);
    }
    Ok(SegmentRun { x0, x1, iterates })
}

fn check_bounded(v: &VecN) -> Result<()> {
    if v.iter().all(|c| c.is_finite() && c.abs() <= DIVERGENCE_LIMIT) {
        Ok(())
    } else {
        Err(Error::Divergence { segment: 0, iteration: 0 })
    }
}

fn poly_fit_step(
    sys: &OdeSystem,
    x0: f64,
    y0: &VecN,
    x1: f64,
    settings: &SolveSettings,
    prev: &Segment,
) -> Result<Segment> {
    let nodes = chebyshev_gauss_nodes(settings.fit_samples, x0, x1);
    let mut samples = Vec::with_capacity(nodes.len());
    for s in nodes {
        let y = prev.eval(s);
        check_bounded(&y)?;
        let g = sys.nonlinear(s, &y);
        if g.iter().any(|c| !c.is_finite()) {
            return Err(Error::Divergence { segment: 0, iteration: 0 });
        }
        samples.push((s, g));
    }
    let forcing = fit_forcing_polynomial(&samples, settings.fit_degree, x0)?;
    let flow = Flow::new(x0, sys.linear().clone(), y0.clone(), &forcing);
    check_bounded(&flow.eval(x1))?;
    Ok(Segment::Flow(flow))
}

fn quadrature_step(
    sys: &OdeSystem,
    x0: f64,
    y0: &VecN,
    x1: f64,
    settings: &SolveSettings,
    prev: &Segment,
) -> Result<Segment> {
    let npts = settings.quad_points;
    let (gl_x, gl_w) = gauss_legendre(npts);
    let a = sys.linear();
    let nodes = chebyshev_lobatto_nodes(npts, x0, x1);
    let mut values = Vec::with_capacity(npts);
    for (i, &x) in nodes.iter().enumerate() {
        if i == 0 {
            values.push(y0.clone());
            continue;
        }
        let mut v = expm_unchecked(&(a * (x - x0))) * y0;
        let half = 0.5 * (x - x0);
        let mid = 0.5 * (x + x0);
        for (t, w) in gl_x.iter().zip(&gl_w) {
            let s = mid + half * t;
            let ys = prev.eval(s);
            check_bounded(&ys)?;
            let g = sys.nonlinear(s, &ys);
            v += expm_unchecked(&(a * (x - s))) * g * (w * half);
        }
        check_bounded(&v)?;
        values.push(v);
    }
    Ok(Segment::Chebyshev(ChebyshevSegment::new(x0, x1, values)?))
}

/// One segment of the iteration, returned as a curve on `[x0, x1]` with its
/// convergence record.
pub fn picard_iterate_segment(
    sys: &OdeSystem,
    x0: f64,
    y0: &VecN,
    x1: f64,
    settings: &SolveSettings,
) -> Result<(PiecewiseCurve, ConvergenceReport)> {
    let run = iterate_segment(sys, x0, y0, x1, settings, None, 0)?;
    let report = convergence_diagnostic(sys, &run);
    Ok((run.curve(), report))
}

/// Classical Picard: the same iteration with the linear part set to zero.
pub fn standard_picard_iterate_segment(
    sys: &OdeSystem,
    x0: f64,
    y0: &VecN,
    x1: f64,
    settings: &SolveSettings,
) -> Result<PiecewiseCurve> {
    let run = iterate_segment(&sys.standard_split(), x0, y0, x1, settings, None, 0)?;
    Ok(run.curve())
}

/// Segment boundaries `a = x_0 < ... < x_m = b` of width `h`, the last one
/// truncated at `b`.
pub fn segment_nodes(a: f64, b: f64, h: f64) -> Vec<f64> {
    let ratio = (b - a) / h;
    let m = ((ratio - 1e-9 * ratio.max(1.0)).ceil() as usize).max(1);
    let mut nodes: Vec<f64> = (0..m).map(|s| a + s as f64 * h).collect();
    nodes.push(b);
    nodes
}

/// Segmentary integration over `[a, b]`: each segment starts from the end
/// value of the previous one.
pub fn solve_segmented(
    sys: &OdeSystem,
    a: f64,
    b: f64,
    y_a: &VecN,
    settings: &SolveSettings,
) -> Result<PiecewiseCurve> {
    solve_segmented_impl(sys, a, b, y_a, settings, false).map(|(c, _)| c)
}

/// [`solve_segmented`] plus the convergence record of every segment.
pub fn solve_segmented_with_reports(
    sys: &OdeSystem,
    a: f64,
    b: f64,
    y_a: &VecN,
    settings: &SolveSettings,
) -> Result<(PiecewiseCurve, Vec<ConvergenceReport>)> {
    solve_segmented_impl(sys, a, b, y_a, settings, true)
}

fn solve_segmented_impl(
    sys: &OdeSystem,
    a: f64,
    b: f64,
    y_a: &VecN,
    settings: &SolveSettings,
    with_reports: bool,
) -> Result<(PiecewiseCurve, Vec<ConvergenceReport>)> {
    settings.validate()?;
    if !(b > a) || !a.is_finite() || !b.is_finite() {
        return Err(Error::InvalidArgument(format!("interval [{a}, {b}] is empty or non-finite")));
    }
    let nodes = segment_nodes(a, b, settings.h);
    let mut segments: Vec<Segment> = Vec::with_capacity(nodes.len() - 1);
    let mut reports = Vec::new();
    let mut y = y_a.clone();
    for (s, w) in nodes.windows(2).enumerate() {
        let run = iterate_segment(sys, w[0], &y, w[1], settings, segments.last(), s)?;
        if with_reports {
            reports.push(convergence_diagnostic(sys, &run));
        }
        let last = run.last().clone();
        y = last.eval(w[1]);
        segments.push(last);
    }
    Ok((PiecewiseCurve::from_parts_unchecked(nodes, segments), reports))
}
