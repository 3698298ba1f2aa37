//! Extended Picard iteration for first-order nonlinear ODE systems.
//!
//! A system `y' = F(x, y)` is split as `y' = A y + G(x, y)` with a constant
//! matrix `A`. Each iterate solves `y_k' = A y_k + G(x, y_{k-1})` exactly:
//! the homogeneous part through the matrix exponential and the particular
//! part either by a least-squares polynomial fit of the forcing (integrated
//! in closed form) or by quadrature. Long intervals are covered segment by
//! segment, each segment starting from the previous end value.
//!
//! Besides the engine the crate carries fixed-step reference integrators
//! (an eighth-order Runge–Kutta and a Taylor-series method of selectable
//! order), the benchmark problems (Mathieu, quintic Duffing, Bratu,
//! glycolysis and the Brusselator in two formulations), error metrics and
//! drivers that regenerate the benchmark error tables.

pub mod analysis;
pub mod engine;
pub mod error;
pub mod harness;
pub mod jet;
pub mod linalg;
pub mod problems;
pub mod quadrature;
pub mod reference;

pub use engine::{
    picard_iterate_segment, solve_segmented, standard_picard_iterate_segment, Backend,
    ConvergenceReport, OdeSystem, PiecewiseCurve, SeedRule, SolveSettings,
};
pub use error::{Error, Result};
pub use linalg::{MatN, VecN, VecPoly};
