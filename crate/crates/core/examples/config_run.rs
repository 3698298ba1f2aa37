//! Runs an experiment described in TOML and writes its solution, error and
//! convergence CSV files.
//!
//! `cargo run --release --example config_run [experiment.toml]`

use picard::harness::{run, ExperimentConfig};

const DEFAULT: &str = r#"
interval = [0.0, 15.0]

[problem]
name = "brusselator-w"
params = { a = 1.0, b = 2.5 }
initial = [3.0, -0.8]

[settings]
h = 0.1
n_iter = 5
fit_degree = 3

[reference]
method = "taylor"
order = 10
step = 0.01

[output]
dir = "out/config_run"
"#;

fn main() -> picard::Result<()> {
    let config = match std::env::args().nth(1) {
        Some(path) => ExperimentConfig::load(path.as_ref())?,
        None => ExperimentConfig::from_toml(DEFAULT)?,
    };
    let artifacts = run(&config)?;
    for (i, e) in artifacts.outcome.errors.iter().enumerate() {
        println!("mean-square error y{}: {e:.3e}", i + 1);
    }
    println!("wrote {}", artifacts.solution_path.display());
    println!("wrote {}", artifacts.errors_path.display());
    println!("wrote {}", artifacts.convergence_path.display());
    Ok(())
}
