//! The reference integrators on their own: the eighth-order Runge-Kutta
//! method and fixed-step Taylor methods of orders 2 to 10.
//!
//! Right-hand sides written as a `VectorField` work with both; the Taylor
//! method evaluates them on truncated power series.
//!
//! `cargo run --release --example reference_solvers`

use picard::engine::{split_system, VectorField};
use picard::jet::OdeScalar;
use picard::linalg::{MatN, VecN};
use picard::reference::{rk8_solve, taylor_solve};

/// `y'' = -y`, whose solution from (1, 0) is (cos x, -sin x).
struct Oscillator;

impl VectorField for Oscillator {
    fn dim(&self) -> usize {
        2
    }

    fn apply<T: OdeScalar>(&self, _x: &T, y: &[T]) -> Vec<T> {
        vec![y[1].clone(), -y[0].clone()]
    }
}

fn main() -> picard::Result<()> {
    let sys = split_system(Oscillator, 2, MatN::zeros(2, 2))?;
    let y0 = VecN::from_vec(vec![1.0, 0.0]);
    let b = 10.0;
    let exact = b.cos();

    for step in [0.5, 0.25, 0.1] {
        let y = rk8_solve(&sys, 0.0, b, &y0, step)?.end_value();
        println!("rk8 step {step:<5} error at x = 10: {:.3e}", (y[0] - exact).abs());
    }
    for order in [2, 4, 6, 8, 10] {
        let y = taylor_solve(&sys, 0.0, b, &y0, 0.1, order)?.end_value();
        println!("taylor-{order:<2} step 0.1 error at x = 10: {:.3e}", (y[0] - exact).abs());
    }

    // Dense output between steps.
    let curve = rk8_solve(&sys, 0.0, b, &y0, 0.5)?;
    let x = 3.3;
    println!("rk8 dense output at x = {x}: {:.3e}", (curve.eval(x)[0] - x.cos()).abs());
    Ok(())
}
