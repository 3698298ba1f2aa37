//! The iteration `y_k' = A y_k + G(x, y_{k-1})` on one segment, its
//! segmentary extension, the classical Picard variant, and convergence
//! diagnostics.

mod curve;
mod diagnostic;
mod fit;
mod iterate;
mod settings;
mod system;

pub use curve::{ChebyshevSegment, Flow, PiecewiseCurve, Segment};
pub use diagnostic::{convergence_diagnostic, ConvergenceReport, DIAGNOSTIC_GRID};
pub use fit::fit_forcing_polynomial;
pub use iterate::{
    iterate_segment, picard_iterate_segment, segment_nodes, solve_segmented,
    solve_segmented_with_reports, standard_picard_iterate_segment, SegmentRun, DIVERGENCE_LIMIT,
};
pub use settings::{Backend, SeedRule, SolveSettings};
pub use system::{split_system, FnRhs, OdeSystem, Rhs, VectorField};

/// The homogeneous solution `x -> e^{(x-x0)A} y0` as a curve on `[x0, x1]`.
pub fn homogeneous_seed(
    sys: &OdeSystem,
    x0: f64,
    y0: &crate::linalg::VecN,
    x1: f64,
) -> crate::error::Result<PiecewiseCurve> {
    if y0.len() != sys.dim() {
        return Err(crate::error::Error::DimensionMismatch { expected: sys.dim(), got: y0.len() });
    }
    crate::linalg::ensure_finite_vec(y0)?;
    PiecewiseCurve::single(x0, x1, Segment::Flow(Flow::homogeneous(x0, sys.linear().clone(), y0.clone())))
}
