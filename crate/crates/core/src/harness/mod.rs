//! Experiment configuration (TOML), execution, and CSV output for single
//! runs and parameter sweeps.

mod config;
mod run;
mod sweep;

pub use config::{ExperimentConfig, OutputSpec, ReferenceMethod, ReferenceSpec, Variant, SAMPLES_PER_UNIT};
pub use run::{
    execute, read_solution_csv, run, sample_abscissas, write_convergence_csv, write_errors_csv, write_solution_csv,
    RunArtifacts, RunOutcome,
};
pub use sweep::{sweep, sweep_configs, write_sweep_csv, SweepRow, SweepSpec};
