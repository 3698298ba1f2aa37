//! Benchmark problems with their linear splits, closed-form references,
//! characteristic-value and shooting drivers, and fixed-point stability.

mod bratu;
mod chemistry;
mod duffing;
mod mathieu;
mod spec;

pub use bratu::{
    bratu_critical_alpha, bratu_exact, bratu_exact_slope, bratu_exact_theta, bratu_quadratic_system, bratu_shoot,
    bratu_shoot_settings, bratu_vim_reference, bratu_vim_reference_k, bratu_vim_second_iterate,
    bratu_vim_second_iterate_k, BratuQuadratic, SHOOT_MAX_STEPS, SHOOT_SEEDS, SHOOT_TOL,
};
pub use chemistry::{
    brusselator_stability, brusselator_system, brusselator_w_initial, brusselator_w_system, glycolysis_hopf_band,
    glycolysis_stability, glycolysis_system, Brusselator, BrusselatorW, Glycolysis, Stability, StabilityReport,
};
pub use duffing::{duffing_system, Duffing};
pub use mathieu::{
    mathieu_char_series, mathieu_char_values, mathieu_eigen_settings, mathieu_shooting_residual, mathieu_system,
    percent_deviation, Mathieu, EIGEN_SCAN_MAX, EIGEN_SCAN_STEP,
};
pub use spec::{ProblemKind, ProblemSpec};
