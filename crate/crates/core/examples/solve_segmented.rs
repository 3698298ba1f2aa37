//! Solves a user-defined system by segmented Extended Picard iteration and
//! compares it with the eighth-order Runge-Kutta reference.
//!
//! The damped pendulum `y'' + 0.2 y' + sin y = 0` is split around its
//! linearisation, so the iteration only has to handle `sin y - y`.
//!
//! `cargo run --release --example solve_segmented`

use picard::analysis::l2_mean_error;
use picard::engine::{solve_segmented, split_system, FnRhs, SolveSettings};
use picard::linalg::{MatN, VecN};
use picard::reference::rk8_solve;

fn main() -> picard::Result<()> {
    let rhs = FnRhs::new(2, |_x, y: &VecN| VecN::from_vec(vec![y[1], -0.2 * y[1] - y[0].sin()]));
    let linear = MatN::from_row_slice(2, 2, &[0.0, 1.0, -1.0, -0.2]);
    let sys = split_system(rhs, 2, linear)?;
    let y0 = VecN::from_vec(vec![1.0, 0.0]);
    let (a, b) = (0.0, 20.0);

    let reference = rk8_solve(&sys, a, b, &y0, 0.01)?;
    println!("{:>6} {:>3} {:>3} {:>12}", "h", "n", "deg", "mean error");
    for h in [0.5, 0.2, 0.1] {
        for n in [2, 3] {
            for degree in [1, 3] {
                let curve = solve_segmented(&sys, a, b, &y0, &SolveSettings::poly_fit(h, n, degree))?;
                let err = l2_mean_error(&reference, &curve, a, b, 0)?;
                println!("{h:>6} {n:>3} {degree:>3} {err:>12.3e}");
            }
        }
    }

    let curve = solve_segmented(&sys, a, b, &y0, &SolveSettings::quadrature(0.5, 6, 24))?;
    println!("quadrature backend, h = 0.5, 6 iterations: y(20) = {:.10}", curve.end_value()[0]);
    println!("reference:                                  y(20) = {:.10}", reference.end_value()[0]);
    Ok(())
}
