//! `quintic`: run the verification suites, single-prime reports and sweeps.

mod cache;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use quintic::claims::{run_target, Target};
use quintic::config::{Config, OutputFormat};
use quintic::data::DataBundle;
use quintic::frobenius::{frobenius_report, sweep, FrobeniusContext, GroupModel};
use quintic::modforms::n3_table;
use quintic::{Error, Result};

#[derive(Parser, Debug)]
#[command(name = "quintic", version, about = "Finite checks around the splitting field of X^5 - X - 1")]
struct Cli {
    /// Upper bound for prime sweeps.
    #[arg(long, global = true)]
    pmax: Option<u64>,
    /// Number of q-series coefficients.
    #[arg(long, global = true)]
    truncation: Option<usize>,
    /// Seed for the character-table solver.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Tolerance for floating comparisons.
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Calibration cache file; rebuilt silently when stale or corrupt.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    /// Directory holding f5.poly, g.poly and h.poly (default: built-in copies).
    #[arg(long, global = true)]
    data_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum TargetArg {
    Table1,
    Table2,
    Inertia,
    PropAsai,
    CorAsai,
    N3,
    N4,
    Disc,
    CorInt2,
    All,
}

impl From<TargetArg> for Target {
    fn from(t: TargetArg) -> Target {
        match t {
            TargetArg::Table1 => Target::Table1,
            TargetArg::Table2 => Target::Table2,
            TargetArg::Inertia => Target::Inertia,
            TargetArg::PropAsai => Target::PropAsai,
            TargetArg::CorAsai => Target::CorAsai,
            TargetArg::N3 => Target::N3,
            TargetArg::N4 => Target::N4,
            TargetArg::Disc => Target::Disc,
            TargetArg::CorInt2 => Target::CorInt2,
            TargetArg::All => Target::All,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a verification suite; exits 0 only if every check passes.
    Verify {
        #[arg(value_enum)]
        target: TargetArg,
    },
    /// Frobenius report for one prime.
    Report { p: u64 },
    /// One row per unramified prime up to PMAX, plus class frequencies.
    Sweep {
        #[arg(value_name = "PMAX")]
        bound: Option<u64>,
    },
    /// Coefficients of the level-23 form and Delta mod 23, as CSV.
    N3Table,
}

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_DATA: u8 = 3;
const EXIT_RAMIFIED: u8 = 4;
const EXIT_INTERNAL: u8 = 5;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Verification(_) => EXIT_FAILED,
        Error::Domain(_) => EXIT_USAGE,
        Error::Io(_) | Error::Data(_) | Error::Parse(_) => EXIT_DATA,
        Error::Ramified(_) => EXIT_RAMIFIED,
        Error::Numerical(_) | Error::Internal(_) => EXIT_INTERNAL,
    }
}

impl Cli {
    fn config(&self) -> Config {
        let d = Config::default();
        let pmax = match &self.command {
            Command::Sweep { bound: Some(p) } => *p,
            _ => self.pmax.unwrap_or(d.pmax),
        };
        Config {
            pmax,
            truncation: self.truncation.unwrap_or(d.truncation),
            tol: self.tol.unwrap_or(d.tol),
            seed: self.seed.unwrap_or(d.seed),
            format: match self.format {
                None | Some(Format::Text) => OutputFormat::Text,
                Some(Format::Json) => OutputFormat::Json,
                Some(Format::Csv) => OutputFormat::Csv,
            },
            cache: self.cache.clone(),
            data_dir: self.data_dir.clone(),
        }
    }
}

fn load_data(config: &Config) -> Result<DataBundle> {
    match &config.data_dir {
        Some(dir) => DataBundle::load(dir),
        None => DataBundle::embedded(),
    }
}

fn context(config: &Config) -> Result<FrobeniusContext> {
    let data = load_data(config)?;
    let model = GroupModel::build()?;
    let calibration = cache::load_or_calibrate(config.cache.as_deref(), &model, &data)?;
    Ok(FrobeniusContext::from_parts(model, data, calibration))
}

/// Rendered output and whether every check passed.
fn run(cli: &Cli, config: &Config) -> Result<(String, Option<String>)> {
    match &cli.command {
        Command::Verify { target } => {
            let target = Target::from(*target);
            let ctx = if target.needs_polynomials() { Some(context(config)?) } else { None };
            let runs = run_target(target, config, ctx.as_ref())?;
            let text = match config.format {
                OutputFormat::Text => output::verify_text(config, &runs),
                OutputFormat::Json => output::verify_json(config, &runs)?,
                OutputFormat::Csv => output::verify_csv(config, &runs)?,
            };
            let failure = runs.iter().find_map(|r| r.ensure_passed().err()).map(|e| e.to_string());
            Ok((text, failure))
        }
        Command::Report { p } => {
            let ctx = context(config)?;
            let r = frobenius_report(&ctx, *p)?;
            let text = match config.format {
                OutputFormat::Text => output::report_text(config, &r),
                OutputFormat::Json => output::report_json(config, &r)?,
                OutputFormat::Csv => output::report_csv(config, &r)?,
            };
            let failure = r.as_verify_report().ensure_passed().err().map(|e| e.to_string());
            Ok((text, failure))
        }
        Command::Sweep { .. } => {
            let ctx = context(config)?;
            let s = sweep(&ctx, config.pmax)?;
            let text = match config.format {
                OutputFormat::Text => output::sweep_text(config, &s),
                OutputFormat::Json => output::sweep_json(config, &s)?,
                OutputFormat::Csv => output::sweep_csv(config, &s)?,
            };
            Ok((text, s.ensure_passed().err().map(|e| e.to_string())))
        }
        Command::N3Table => Ok((output::n3_csv(config, &n3_table(config.truncation)?)?, None)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = cli.config();
    match run(&cli, &config) {
        Ok((text, failure)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(EXIT_INTERNAL);
            }
            match failure {
                None => ExitCode::SUCCESS,
                Some(f) => {
                    eprintln!("verification failed: {f}");
                    ExitCode::from(EXIT_FAILED)
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
