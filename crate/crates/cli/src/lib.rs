//! Command-line front end: `generate`, `verify` and `plot`.
//!
//! Exit codes are a stable contract: 0 success, 1 verification or I/O
//! failure, 2 usage error.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use splinequad::{Extended, Family};

pub mod format;
pub mod plot;
pub mod selection;
pub mod verify;

use format::OutputFormat;
use selection::{ClassArg, DeltaSignArg, Selection, VariantArg};
use verify::{Scope, Tolerances};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Failure(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failure(_) | CliError::Io { .. } => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "splinequad",
    version,
    about = "Gaussian quadrature rules for C0 and C1 splines"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the nodes and weights of one rule.
    Generate(GenerateArgs),
    /// Check rules against the reference tables and the spline oracle.
    Verify(VerifyArgs),
    /// Draw the weights of a rule as an SVG stem chart plus a CSV.
    Plot(PlotArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Precision {
    Double,
    Extended,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long, value_enum)]
    pub class: ClassArg,
    /// Spline degree; together with the class it selects the family.
    #[arg(long)]
    pub degree: usize,
    /// Odd-degree C1 only; defaults to the endpoint rule.
    #[arg(long, value_enum)]
    pub variant: Option<VariantArg>,
    /// Even-degree C0 only; `minus` gives the mirrored rule.
    #[arg(long, value_enum)]
    pub delta_sign: Option<DeltaSignArg>,
    #[arg(long, value_enum, default_value_t = Precision::Extended)]
    pub precision: Precision,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    /// Output file; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Scope::All)]
    pub scope: Scope,
    /// Largest family index `n` in the exactness suite.
    #[arg(long, default_value_t = 12)]
    pub max_n: usize,
    /// Overrides both tolerances.
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long, default_value_t = 1e-13)]
    pub golden_tol: f64,
    #[arg(long, default_value_t = 1e-11)]
    pub exactness_tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PlotVariant {
    Endpoint,
    Interior,
    Both,
}

#[derive(Debug, Args)]
pub struct PlotArgs {
    #[arg(long, value_enum)]
    pub class: ClassArg,
    #[arg(long)]
    pub degree: usize,
    /// Odd-degree C1 only; both variants are overlaid by default.
    #[arg(long, value_enum)]
    pub variant: Option<PlotVariant>,
    #[arg(long, value_enum)]
    pub delta_sign: Option<DeltaSignArg>,
    /// SVG path; the CSV is written next to it with a `.csv` extension.
    #[arg(long)]
    pub out: PathBuf,
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn generate(args: &GenerateArgs) -> Result<String, CliError> {
    let sel = Selection::resolve(args.class, args.degree, args.variant, args.delta_sign)?;
    Ok(match args.precision {
        Precision::Double => format::render(&sel.build::<f64>()?, args.format),
        Precision::Extended => format::render(&sel.build::<Extended>()?, args.format),
    })
}

fn cmd_generate(args: &GenerateArgs) -> Result<(), CliError> {
    let text = generate(args)?;
    match &args.out {
        Some(path) => write_file(path, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_verify(args: &VerifyArgs) -> Result<(), CliError> {
    let tol = Tolerances {
        golden: args.tol.unwrap_or(args.golden_tol),
        exactness: args.tol.unwrap_or(args.exactness_tol),
    };
    let rows = verify::run(args.scope, args.max_n, tol);
    print!("{}", verify::table(&rows));
    match verify::worst_offender(&rows) {
        None => Ok(()),
        Some(r) => Err(CliError::Failure(format!(
            "verification failed; worst offender {} ({} suite, {}): {}",
            r.worst,
            r.suite,
            r.family.slug(),
            match &r.error {
                Some(e) => e.clone(),
                None => format!(
                    "error {:.3e} exceeds tolerance {:.0e}",
                    r.max_error, r.tolerance
                ),
            }
        ))),
    }
}

/// Rules drawn by `plot`; odd-degree C1 overlays both variants unless one is
/// chosen.
pub fn plot_series(args: &PlotArgs) -> Result<Vec<plot::Series>, CliError> {
    let odd_c1 = args.class == ClassArg::C1 && args.degree % 2 == 1;
    let variants: Vec<Option<VariantArg>> = match args.variant {
        None | Some(PlotVariant::Both) if odd_c1 => {
            vec![Some(VariantArg::Endpoint), Some(VariantArg::Interior)]
        }
        Some(PlotVariant::Both) => {
            return Err(CliError::Usage(
                "--variant applies only to odd-degree c1 rules".into(),
            ))
        }
        None => vec![None],
        Some(PlotVariant::Endpoint) => vec![Some(VariantArg::Endpoint)],
        Some(PlotVariant::Interior) => vec![Some(VariantArg::Interior)],
    };
    variants
        .into_iter()
        .map(|v| {
            let sel = Selection::resolve(args.class, args.degree, v, args.delta_sign)?;
            let rule = sel.build::<f64>()?;
            let label = if sel.family == Family::C0Even && args.delta_sign.is_some() {
                format!("{} ({:?})", rule.name(), sel.delta_sign).to_lowercase()
            } else {
                rule.name()
            };
            Ok(plot::Series { label, rule })
        })
        .collect()
}

fn cmd_plot(args: &PlotArgs) -> Result<(), CliError> {
    let series = plot_series(args)?;
    write_file(&args.out, &plot::svg(&series))?;
    write_file(&args.out.with_extension("csv"), &plot::csv(&series))
}

pub fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Generate(a) => cmd_generate(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Plot(a) => cmd_plot(a),
    }
}
