//! Inspects how fast the iterates settle on a single segment: the sup-norm
//! gap between successive iterates and the factorial bound built from the
//! segment's Lipschitz and magnitude estimates.
//!
//! `cargo run --release --example convergence_diagnostic`

use picard::engine::{convergence_diagnostic, iterate_segment, SolveSettings};
use picard::linalg::VecN;
use picard::problems::duffing_system;

fn main() -> picard::Result<()> {
    let sys = duffing_system(0.5)?;
    let y0 = VecN::from_vec(vec![1.0, 0.0]);
    for h in [0.25, 1.0, 2.0] {
        let run = iterate_segment(&sys, 0.0, &y0, h, &SolveSettings::quadrature(h, 6, 24), None, 0)?;
        let report = convergence_diagnostic(&sys, &run);
        println!(
            "segment [0, {h}]: M = {:.3}, K = {:.3}, contracting = {}",
            report.m_est,
            report.k_est,
            report.is_contracting()
        );
        for k in 1..=report.sup_diffs.len() {
            println!(
                "  k = {k}: sup|y_k - y_(k-1)| = {:.3e}  bound {:.3e}  holds {}",
                report.sup_diff(k),
                report.bound(k),
                report.bound_holds[k - 1]
            );
        }
    }
    Ok(())
}
