//! `cosmax`: collinearity report for a correlation matrix or a data file.
//!
//! Exit codes: 0 success, 1 numerical failure, 2 unreadable or malformed
//! input, 3 exact collinearity, 4 invalid configuration.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, ValueEnum};
use cosmax_core::data::generate_example4_with_noise;
use cosmax_core::report::{
    exit_code, render_structured, render_text, run, InputKind, OutputFormat, PartialQuery, RunConfig, SyntheticSpec,
    EXIT_INVALID_CONFIG,
};
use cosmax_core::{Error, Thresholds};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "cosmax", version, about = "Identify collinear sets of regressors")]
#[command(group(ArgGroup::new("input").required(true).args(["correlation", "data", "synthetic"])))]
#[command(after_help = "EXIT CODES\n  0  success\n  1  numerical failure\n  2  unreadable or malformed input\n  3  exact collinearity\n  4  invalid configuration")]
struct Cli {
    /// Correlation matrix: header of names, then one row per variable.
    #[arg(long, value_name = "FILE")]
    correlation: Option<PathBuf>,

    /// Raw observations: header of names, then one row per observation.
    #[arg(long, value_name = "FILE")]
    data: Option<PathBuf>,

    /// Simulate data with two overlapping collinearities.
    #[arg(long)]
    synthetic: bool,

    /// Seed for --synthetic.
    #[arg(long, default_value_t = 1)]
    seed: u64,

    /// Number of simulated observations for --synthetic.
    #[arg(long, default_value_t = 100)]
    n: usize,

    /// Noise scale of the planted collinearities for --synthetic.
    #[arg(long, default_value_t = cosmax_core::data::EXAMPLE4_NOISE)]
    noise: f64,

    /// Write the simulated data as CSV to FILE before analysing it.
    #[arg(long, value_name = "FILE", requires = "synthetic")]
    write_data: Option<PathBuf>,

    #[arg(long, default_value_t = 5.0)]
    vif_threshold: f64,

    /// Cos-max loading |a_ji| that puts X_j in anchor X_i's set.
    #[arg(long, default_value_t = 0.75)]
    loading_threshold: f64,

    /// Condition index (largest eigenvalue over λ_j) that flags a direction.
    #[arg(long, default_value_t = 100.0)]
    cond_threshold: f64,

    /// Eigenvector loading that puts a variable in a direction's set.
    #[arg(long, default_value_t = 0.26)]
    eigen_cutoff: f64,

    #[arg(long, default_value_t = 0.5)]
    vdp_threshold: f64,

    /// Relative window for pooling competing condition indices.
    #[arg(long, default_value_t = 0.25)]
    pool_window: f64,

    /// Report each flagged VDP row on its own instead of pooling.
    #[arg(long)]
    no_pool: bool,

    /// Smallest R² gain for entry in a stepwise regression.
    #[arg(long, default_value_t = 0.01)]
    min_gain: f64,

    #[arg(long, value_name = "COUNT")]
    max_steps: Option<usize>,

    /// Comma-separated dependents for stepwise regressions; defaults to
    /// every variable with a VIF above the threshold.
    #[arg(long, value_name = "NAMES", value_delimiter = ',')]
    stepwise: Option<Vec<String>>,

    /// Partial correlation query `i,j|k,l`; may be repeated.
    #[arg(long, value_name = "QUERY")]
    partial: Vec<String>,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Observations behind a correlation matrix; enables F-tests.
    #[arg(long, value_name = "N")]
    n_obs: Option<usize>,

    /// Entry significance level for stepwise regressions; needs --n-obs.
    #[arg(long)]
    alpha: Option<f64>,
}

impl Cli {
    fn config(&self) -> Result<RunConfig<f64>, Error> {
        let input_kind = if self.correlation.is_some() {
            InputKind::Correlation
        } else if self.data.is_some() {
            InputKind::RawData
        } else {
            InputKind::Synthetic
        };
        let partials = self
            .partial
            .iter()
            .map(|q| q.parse::<PartialQuery>())
            .collect::<Result<_, _>>()?;
        let stepwise_targets = self
            .stepwise
            .as_ref()
            .map(|names| names.iter().map(|n| n.trim().to_string()).filter(|n| !n.is_empty()).collect());
        Ok(RunConfig {
            input_kind,
            thresholds: Thresholds {
                vif: self.vif_threshold,
                loading: self.loading_threshold,
                condition_index: self.cond_threshold,
                eigen_cutoff: self.eigen_cutoff,
                vdp: self.vdp_threshold,
                pool_window: self.pool_window,
                ..Thresholds::default()
            },
            min_gain: self.min_gain,
            aggregate_vdp: !self.no_pool,
            output_format: match self.format {
                Format::Text => OutputFormat::Text,
                Format::Json => OutputFormat::Structured,
            },
            stepwise_targets,
            max_steps: self.max_steps,
            partials,
            synthetic: SyntheticSpec {
                n: self.n,
                seed: self.seed,
                noise: self.noise,
            },
            n_obs: self.n_obs,
            alpha: self.alpha,
        })
    }

    fn execute(&self) -> Result<String, Error> {
        let config = self.config()?;
        config.validate()?;
        if let Some(path) = &self.write_data {
            let s = &config.synthetic;
            let data = generate_example4_with_noise::<f64>(s.n, s.seed, s.noise)?;
            let header = format!(
                "# simulated: seed {}, n {}, noise {}\n# regenerate: cosmax --synthetic --seed {} --n {} --noise {} --write-data FILE\n",
                s.seed, s.n, s.noise, s.seed, s.n, s.noise
            );
            std::fs::write(path, header + &data.to_csv())?;
        }
        let path = self.correlation.as_ref().or(self.data.as_ref());
        let text = match path {
            Some(p) => Some(
                std::fs::read_to_string(p).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?,
            ),
            None => None,
        };
        let report = run(&config, text.as_deref())?;
        Ok(match config.output_format {
            OutputFormat::Text => render_text(&report),
            OutputFormat::Structured => render_structured(&report),
        })
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_INVALID_CONFIG as u8),
            };
        }
    };
    match cli.execute() {
        Ok(out) => {
            print!("{out}");
            if !out.ends_with('\n') {
                println!();
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
