//! Fixed points and linear stability of the glycolysis and Brusselator
//! models, checked against long runs of the iteration.
//!
//! `cargo run --release --example stability`

use picard::engine::{solve_segmented, SolveSettings};
use picard::linalg::VecN;
use picard::problems::{
    brusselator_stability, brusselator_system, glycolysis_hopf_band, glycolysis_stability, glycolysis_system,
};

fn main() -> picard::Result<()> {
    let settings = SolveSettings::poly_fit(0.1, 3, 3);
    let y0 = VecN::from_vec(vec![1.0, 1.0]);

    if let Some((lo, hi)) = glycolysis_hopf_band(0.08) {
        println!("glycolysis a = 0.08: unstable for {lo:.4} < b < {hi:.4}");
    }
    for b in [0.3, 0.6, 1.2] {
        let report = glycolysis_stability(0.08, b)?;
        let end = solve_segmented(&glycolysis_system(0.08, b)?, 0.0, 100.0, &y0, &settings)?.end_value();
        let distance = (&end - &report.fixed_point).norm();
        println!(
            "  b = {b}: {:?}, trace {:+.4}, |y(100) - fixed point| = {distance:.2e}",
            report.classification, report.jacobian_trace
        );
    }

    println!("brusselator a = 1: unstable for b > 2");
    for b in [1.5, 2.5] {
        let report = brusselator_stability(1.0, b)?;
        let end = solve_segmented(&brusselator_system(1.0, b)?, 0.0, 60.0, &y0, &settings)?.end_value();
        let distance = (&end - &report.fixed_point).norm();
        println!(
            "  b = {b}: {:?}, trace {:+.4}, |y(60) - fixed point| = {distance:.2e}",
            report.classification, report.jacobian_trace
        );
    }
    Ok(())
}
