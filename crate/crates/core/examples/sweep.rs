//! Explores segment width, iteration count and fit degree for one problem
//! and prints the error summary as CSV.
//!
//! `cargo run --release --example sweep`

use picard::harness::{sweep, write_sweep_csv, ExperimentConfig, SweepSpec};
use picard::problems::ProblemKind;

fn main() -> picard::Result<()> {
    let kind = ProblemKind::Duffing;
    let (a, b) = kind.benchmark_interval();
    let mut base = ExperimentConfig::from_toml(&format!(
        "interval = [{a:?}, {b:?}]\n[problem]\nname = \"{kind}\"\nparams = {{ a = 0.5 }}\ninitial = [1.0, 0.0]\n"
    ))?;
    base.output.dir = "out/sweep".into();
    let spec = SweepSpec { h: vec![0.5, 0.2, 0.1], n_iter: vec![2, 3, 4], fit_degree: vec![1, 3] };
    let rows = sweep(&base, &spec)?;
    write_sweep_csv(&rows, std::io::stdout())?;
    Ok(())
}
