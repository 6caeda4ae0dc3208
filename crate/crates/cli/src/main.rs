//! `finosc`: representations, spectra, wavefunctions, figures and
//! verification suites for the finite oscillator with an equidistant
//! position spectrum.
//!
//! Exit codes: 0 success, 1 verification or numerical failure, 2 usage or
//! domain error.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod commands;
mod config;
mod presets;
mod svg;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use config::{Deformation, Format, KindArg, Levels, Real, RunConfig};
use finosc_core::Error;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failure(String),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        Self::Usage(msg.into())
    }

    pub fn failure(msg: impl Into<String>) -> Self {
        Self::Failure(msg.into())
    }

    fn exit_code(&self) -> u8 {
        match self {
            Self::Failure(_) => 1,
            Self::Usage(_) => 2,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Inadmissible(_)
            | Error::OutOfRange { .. }
            | Error::InvalidArgument(_)
            | Error::Incompatible(_)
            | Error::Boundary(_) => Self::Usage(e.to_string()),
            _ => Self::Failure(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        Self::Failure(format!("i/o error: {e}"))
    }
}

#[derive(Parser, Debug)]
#[command(name = "finosc", version, about = "Finite oscillator with an equidistant position spectrum")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct ParamArgs {
    /// Twice the spin; the dimension is two_j + 1
    #[arg(long = "two-j")]
    two_j: Option<u32>,
    /// Deformation c~ = c / (2j+1), |c~| < 1; accepts decimals or p/q
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["c"])]
    ctilde: Option<Real>,
    /// Deformation parameter c (with --epsilon)
    #[arg(long, allow_hyphen_values = true)]
    c: Option<Real>,
    /// Sign epsilon = ±1 (with --c)
    #[arg(long, allow_hyphen_values = true, requires = "c")]
    epsilon: Option<i64>,
}

impl ParamArgs {
    fn deformation(&self) -> Result<Deformation, CliError> {
        Deformation::from_flags(self.ctilde.clone(), self.c.clone(), self.epsilon)
    }

    fn two_j(&self) -> Result<u32, CliError> {
        self.two_j.ok_or_else(|| CliError::usage("--two-j is required"))
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Matrices of J0, J±, P for one representation
    Rep {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Build in exact arithmetic and check the relations before writing
        #[arg(long)]
        exact: bool,
    },
    /// Eigenvalues of position, momentum or the Hamiltonian
    Spectrum {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value = "position")]
        kind: SpectrumKind,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Bisection tolerance of the eigenvalue oracle
        #[arg(long, default_value_t = 1e-13)]
        tol: f64,
    },
    /// Discrete wavefunctions on the grid -j..j
    Wavefunctions {
        #[command(flatten)]
        params: ParamArgs,
        /// Levels, e.g. 0,1,2,10-12
        #[arg(long, default_value = "0")]
        levels: Levels,
        #[arg(long, value_enum, default_value = "position")]
        kind: KindArg,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Output file, or output directory for presets
        #[arg(long)]
        out: Option<PathBuf>,
        /// Bundled figure parameter sets
        #[arg(long, value_enum, conflicts_with_all = ["two_j", "ctilde", "c", "epsilon"])]
        preset: Option<presets::Preset>,
        /// Largest accepted norm or parity defect of a row
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Run verification suites; exit 1 if any check fails
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: verify::Suite,
        /// Largest two_j in the built-in parameter grids
        #[arg(long = "two-j-max", default_value_t = 16)]
        two_j_max: u32,
        /// Also run the rational-arithmetic checks
        #[arg(long)]
        exact: bool,
        /// Tolerance of the equidistance checks
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Adds 1 to the squared off-diagonal entry k of every
        /// representation in the algebra suite
        #[arg(long = "corrupt-offdiag", hide = true)]
        corrupt_offdiag: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SpectrumKind {
    Position,
    Momentum,
    Hamiltonian,
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Rep {
            params,
            format,
            out,
            exact,
        } => {
            let cfg = RunConfig {
                two_j: params.two_j()?,
                deformation: params.deformation()?,
                levels: Vec::new(),
                kind: finosc_core::Kind::Position,
                format,
                out,
                tol: 0.0,
                exact,
            };
            commands::cmd_rep(&cfg)
        }
        Command::Spectrum {
            params,
            kind,
            format,
            out,
            tol,
        } => {
            let two_j = params.two_j()?;
            let deformation = params.deformation()?;
            let cfg = RunConfig {
                two_j,
                deformation,
                levels: Vec::new(),
                kind: finosc_core::Kind::Position,
                format,
                out,
                tol,
                exact: false,
            };
            match kind {
                SpectrumKind::Hamiltonian => commands::cmd_hamiltonian(&cfg),
                SpectrumKind::Position => commands::cmd_spectrum(&cfg, finosc_core::Kind::Position),
                SpectrumKind::Momentum => commands::cmd_spectrum(&cfg, finosc_core::Kind::Momentum),
            }
        }
        Command::Wavefunctions {
            params,
            levels,
            kind,
            format,
            out,
            preset,
            tol,
        } => {
            if let Some(p) = preset {
                return presets::run(p, out, tol);
            }
            let cfg = RunConfig {
                two_j: params.two_j()?,
                deformation: params.deformation()?,
                levels: levels.0,
                kind: kind.into(),
                format,
                out,
                tol,
                exact: false,
            };
            commands::cmd_wavefunctions(&cfg)
        }
        Command::Verify {
            suite,
            two_j_max,
            exact,
            tol,
            corrupt_offdiag,
        } => {
            let opts = verify::Options {
                two_j_max,
                exact,
                tol,
                corrupt_offdiag,
            };
            let report = verify::run(suite, &opts)?;
            print!("{}", report.render());
            if report.all_pass() {
                Ok(())
            } else {
                Err(CliError::failure(format!("{} check(s) failed", report.failures())))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let (CliError::Usage(msg) | CliError::Failure(msg)) = &e;
            eprintln!("finosc: {msg}");
            ExitCode::from(e.exit_code())
        }
    }
}
