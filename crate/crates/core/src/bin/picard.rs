use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use picard::analysis::{reproduce_table, TableId, TableOverrides};
use picard::engine::{Backend, SeedRule};
use picard::harness::{
    run, sweep, write_solution_csv, write_sweep_csv, ExperimentConfig, OutputSpec, ReferenceMethod, ReferenceSpec,
    SweepSpec, Variant,
};
use picard::problems::{
    bratu_exact, bratu_exact_slope, bratu_exact_theta, bratu_shoot, bratu_shoot_settings, mathieu_char_series,
    mathieu_char_values, percent_deviation, ProblemKind,
};
use picard::{Error, Result};

/// Extended Picard iteration: solver runs and benchmark tables.
#[derive(Parser)]
#[command(name = "picard", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one configured experiment and write solution, error and convergence CSVs.
    Solve(ExperimentArgs),
    /// Regenerate one benchmark error table (T1..T13) as CSV.
    Table {
        id: String,
        /// Write the CSV here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        reference_step: Option<f64>,
        #[arg(long, value_delimiter = ',')]
        h: Option<Vec<f64>>,
        #[arg(long, value_delimiter = ',')]
        iterations: Option<Vec<usize>>,
        #[arg(long, value_delimiter = ',')]
        degrees: Option<Vec<usize>>,
    },
    /// Characteristic values of the Mathieu equation from the iterates.
    MathieuEigen {
        #[arg(long, default_value_t = 0.1)]
        q: f64,
        #[arg(long, default_value_t = 3)]
        iterations: usize,
        #[arg(long, default_value_t = 5)]
        count: usize,
    },
    /// Shooting solution of the Bratu problem compared with the exact one.
    Bratu {
        #[arg(long, default_value_t = 1.0)]
        alpha: f64,
        #[arg(long, default_value_t = 2)]
        iterations: usize,
        /// Also write the shot solution as CSV.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run an experiment over a grid of segment widths, iteration counts and fit degrees.
    Sweep {
        #[command(flatten)]
        base: ExperimentArgs,
        #[arg(long = "h-values", value_delimiter = ',')]
        h_values: Vec<f64>,
        #[arg(long = "n-iter-values", value_delimiter = ',')]
        n_iter_values: Vec<usize>,
        #[arg(long = "fit-degree-values", value_delimiter = ',')]
        fit_degree_values: Vec<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BackendArg {
    PolyFit,
    Quadrature,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeedArg {
    Homogeneous,
    InitialValue,
    PreviousSegment,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Extended,
    Standard,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReferenceArg {
    Rk8,
    Taylor,
}

/// Experiment definition: a TOML file, flags, or both (flags win).
#[derive(Args, Clone)]
struct ExperimentArgs {
    #[arg(long)]
    config: Option<PathBuf>,
    /// Benchmark problem; its default parameters, initial value and interval apply.
    #[arg(long)]
    problem: Option<String>,
    /// Problem parameter as `name=value`; repeatable.
    #[arg(long = "param")]
    params: Vec<String>,
    #[arg(long, value_delimiter = ',')]
    initial: Option<Vec<f64>>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    interval: Option<Vec<f64>>,
    #[arg(long)]
    h: Option<f64>,
    #[arg(long)]
    n_iter: Option<usize>,
    #[arg(long)]
    fit_degree: Option<usize>,
    #[arg(long)]
    fit_samples: Option<usize>,
    #[arg(long, value_enum)]
    backend: Option<BackendArg>,
    #[arg(long)]
    quad_points: Option<usize>,
    #[arg(long, value_enum)]
    seed: Option<SeedArg>,
    #[arg(long, value_enum)]
    variant: Option<VariantArg>,
    #[arg(long, value_enum)]
    reference: Option<ReferenceArg>,
    #[arg(long)]
    reference_order: Option<usize>,
    #[arg(long)]
    reference_step: Option<f64>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    samples_per_unit: Option<usize>,
}

impl ExperimentArgs {
    fn build(&self) -> Result<ExperimentConfig> {
        let mut cfg = match (&self.config, &self.problem) {
            (Some(path), _) => ExperimentConfig::load(path)?,
            (None, Some(name)) => {
                let kind: ProblemKind = name.parse()?;
                let (a, b) = kind.benchmark_interval();
                ExperimentConfig {
                    interval: [a, b],
                    variant: Variant::default(),
                    problem: kind.benchmark(),
                    settings: Default::default(),
                    reference: ReferenceSpec::default(),
                    output: OutputSpec::default(),
                }
            }
            (None, None) => return Err(Error::Config("give --config or --problem".into())),
        };
        if let (Some(_), Some(name)) = (&self.config, &self.problem) {
            let kind: ProblemKind = name.parse()?;
            if kind != cfg.problem.kind {
                cfg.problem = kind.benchmark();
            }
        }
        for p in &self.params {
            let (k, v) = p
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("--param expects name=value, got `{p}`")))?;
            let v: f64 = v.trim().parse().map_err(|_| Error::Config(format!("bad value in `{p}`")))?;
            cfg.problem.params.insert(k.trim().to_string(), v);
        }
        if let Some(y0) = &self.initial {
            cfg.problem.initial = y0.clone();
        }
        if let Some(iv) = &self.interval {
            match iv.as_slice() {
                [a, b] => cfg.interval = [*a, *b],
                _ => return Err(Error::Config("--interval expects a,b".into())),
            }
        }
        let s = &mut cfg.settings;
        if let Some(h) = self.h {
            s.h = h;
        }
        if let Some(n) = self.n_iter {
            s.n_iter = n;
        }
        if let Some(d) = self.fit_degree {
            s.fit_degree = d;
        }
        if let Some(m) = self.fit_samples {
            s.fit_samples = m;
        }
        if let Some(b) = self.backend {
            s.backend = match b {
                BackendArg::PolyFit => Backend::PolyFit,
                BackendArg::Quadrature => Backend::Quadrature,
            };
        }
        if let Some(q) = self.quad_points {
            s.quad_points = q;
        }
        if let Some(seed) = self.seed {
            s.seed = match seed {
                SeedArg::Homogeneous => SeedRule::Homogeneous,
                SeedArg::InitialValue => SeedRule::InitialValue,
                SeedArg::PreviousSegment => SeedRule::PreviousSegment,
            };
        }
        if let Some(v) = self.variant {
            cfg.variant = match v {
                VariantArg::Extended => Variant::Extended,
                VariantArg::Standard => Variant::Standard,
            };
        }
        if let Some(r) = self.reference {
            cfg.reference.method = match r {
                ReferenceArg::Rk8 => ReferenceMethod::Rk8,
                ReferenceArg::Taylor => ReferenceMethod::Taylor,
            };
        }
        if let Some(o) = self.reference_order {
            cfg.reference.order = o;
        }
        if let Some(st) = self.reference_step {
            cfg.reference.step = st;
        }
        if let Some(dir) = &self.out {
            cfg.output.dir = dir.clone();
        }
        if let Some(n) = self.samples_per_unit {
            cfg.output.samples_per_unit = n;
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

fn open_output(path: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(io::BufWriter::new(File::create(p)?)),
        None => Box::new(io::stdout().lock()),
    })
}

fn execute(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Solve(args) => {
            let cfg = args.build()?;
            let art = run(&cfg)?;
            for (i, e) in art.outcome.errors.iter().enumerate() {
                println!("error y{} = {e:.6e}", i + 1);
            }
            println!("solution: {}", art.solution_path.display());
            println!("errors: {}", art.errors_path.display());
            println!("convergence: {}", art.convergence_path.display());
        }
        Command::Table { id, out, reference_step, h, iterations, degrees } => {
            let id: TableId = id.parse()?;
            let overrides = TableOverrides { reference_step, h_values: h, iterations, degrees, taylor_orders: None };
            let table = reproduce_table(id, &overrides)?;
            table.write_csv(open_output(&out)?)?;
        }
        Command::MathieuEigen { q, iterations, count } => {
            let values = mathieu_char_values(q, iterations, count)
                .map_err(|e| match e {
                    Error::InvalidArgument(m) => Error::Config(m),
                    other => other,
                })?;
            let mut w = csv::Writer::from_writer(io::stdout().lock());
            w.write_record(["index", "r", "series", "percent_deviation"])?;
            for (k, r) in values.iter().enumerate() {
                let s = mathieu_char_series(q, k + 1)?;
                w.write_record([
                    (k + 1).to_string(),
                    format!("{r:.12}"),
                    format!("{s:.12}"),
                    format!("{:.6e}", percent_deviation(*r, s)),
                ])?;
            }
            w.flush()?;
        }
        Command::Bratu { alpha, iterations, out } => {
            if !(alpha.is_finite() && alpha > 0.0) {
                return Err(Error::Config(format!("alpha must be positive, got {alpha}")));
            }
            let (u, curve) = bratu_shoot(alpha, iterations, &bratu_shoot_settings(iterations))?;
            println!("alpha = {alpha}");
            println!("slope u = {u:.12}");
            match bratu_exact_theta(alpha)?.first() {
                Some(&theta) => {
                    let err = picard::analysis::l2_error_fn(
                        |x| bratu_exact(theta, x),
                        |x| curve.eval(x)[0],
                        0.0,
                        1.0,
                        picard::analysis::ErrorNorm::Integral,
                    );
                    println!("theta = {theta:.12}");
                    println!("exact slope = {:.12}", bratu_exact_slope(theta));
                    println!("error = {err:.6e}");
                }
                None => println!("no exact solution for this alpha"),
            }
            if let Some(path) = out {
                write_solution_csv(&curve, 0.0, 1.0, picard::harness::SAMPLES_PER_UNIT, File::create(path)?)?;
            }
        }
        Command::Sweep { base, h_values, n_iter_values, fit_degree_values } => {
            let cfg = base.build()?;
            let spec = SweepSpec { h: h_values, n_iter: n_iter_values, fit_degree: fit_degree_values };
            let rows = sweep(&cfg, &spec)?;
            std::fs::create_dir_all(&cfg.output.dir)?;
            let path = cfg.output.dir.join("sweep.csv");
            write_sweep_csv(&rows, File::create(&path)?)?;
            write_sweep_csv(&rows, io::stdout().lock())?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            match e.root_cause() {
                Error::Divergence { segment, iteration } => {
                    eprintln!("diverged on segment {segment} (iteration {iteration})");
                    ExitCode::from(3)
                }
                Error::Config(_) | Error::InvalidArgument(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
