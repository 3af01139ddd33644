//! `grasscurv` — command-line front end for constructing, verifying,
//! transforming, and classifying constant-curvature holomorphic maps of the
//! sphere into complex Grassmannians G(m, n).
//!
//! The binary is a thin wrapper over [`run`], which takes the argument list
//! and an output sink so the whole surface is testable in-process.  Exit
//! codes: `0` success, `1` negative verification or search outcome (or a
//! numeric failure on valid input), `2` input error (bad flags, malformed
//! document, bad environment).

mod commands;
pub mod document;
pub mod report;

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

/// Failure of a subcommand, tagged with how it maps to an exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Unusable input: bad flag values, malformed or ill-shaped documents,
    /// an invalid environment variable.  Exit code 2.
    Input(String),
    /// A computation on well-formed input failed: degenerate map, no gauge,
    /// degree overflow, write failure.  Exit code 1.
    Numeric(String),
}

impl CliError {
    fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }

    fn numeric(msg: impl Into<String>) -> Self {
        CliError::Numeric(msg.into())
    }

    fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Numeric(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) | CliError::Numeric(msg) => f.write_str(msg),
        }
    }
}

impl std::error::Error for CliError {}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Numeric(format!("cannot write output: {e}"))
    }
}

/// Which parametrization `veronese` emits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Parametrization {
    /// Polynomial frame of m derivative columns.
    Frame,
    /// Gauge-fixed (𝕀; K) form — the (n−m)×m matrix K.
    Macfarlane,
}

#[derive(Parser)]
#[command(
    name = "grasscurv",
    version,
    about = "Constant-curvature holomorphic maps of the sphere into complex Grassmannians",
    arg_required_else_help = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the canonical Veronese constant-curvature map for G(m, n)
    Veronese {
        /// Ambient dimension n
        #[arg(long)]
        n: usize,
        /// Subspace dimension m (1 ≤ m < n)
        #[arg(long, default_value_t = 1)]
        m: usize,
        /// Output parametrization
        #[arg(long, value_enum, default_value_t = Parametrization::Frame)]
        parametrization: Parametrization,
    },
    /// Certify whether a documented map has constant Gaussian curvature
    Check {
        /// Map document (JSON)
        file: PathBuf,
        /// Certification tolerance
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Exit 1 if the map is not constant-curvature
        #[arg(long)]
        expect_constant: bool,
    },
    /// Sample energy density and Gaussian curvature on a grid (CSV)
    Curvature {
        /// Map document (JSON)
        file: PathBuf,
        /// Square grid over [LO, HI]² with STEPS points per side
        #[arg(long, num_args = 3, value_names = ["LO", "HI", "STEPS"], allow_negative_numbers = true, required = true)]
        grid: Vec<String>,
    },
    /// Search for a constant-curvature map into G(2, n) with 𝒦 = 4/r
    Solve {
        /// Ambient dimension n (≥ 4)
        #[arg(long)]
        n: usize,
        /// Target determinant exponent r (curvature 4/r)
        #[arg(long)]
        r: u32,
        /// RNG seed (overrides GRASSCURV_SEED; default 42)
        #[arg(long)]
        seed: Option<u64>,
        /// Multistart restarts per branch
        #[arg(long, default_value_t = 100)]
        restarts: u32,
    },
    /// Classify every exponent r = 1..=rmax for maps into G(2, n)
    Classify {
        /// Ambient dimension n (≥ 3)
        #[arg(long)]
        n: usize,
        /// Largest exponent to classify
        #[arg(long)]
        rmax: u32,
        /// RNG seed (overrides GRASSCURV_SEED; default 42)
        #[arg(long)]
        seed: Option<u64>,
        /// Multistart restarts per branch
        #[arg(long, default_value_t = 100)]
        restarts: u32,
    },
    /// Rewrite a documented map into G(m, n) as its dual into G(n−m, n)
    Duality {
        /// Map document (JSON)
        file: PathBuf,
    },
    /// Pad a documented map with a zero row, embedding it into G(m, n+1)
    Embed {
        /// Map document (JSON)
        file: PathBuf,
    },
}

/// Parses `args` (without the program name) and runs the selected subcommand,
/// writing its report to `out`.  Returns the process exit code; diagnostics go
/// to standard error.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv = std::iter::once(OsString::from("grasscurv"))
        .chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are not errors; usage problems are
            // input errors.
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };

    let outcome = match cli.command {
        Command::Veronese {
            n,
            m,
            parametrization,
        } => commands::veronese(n, m, parametrization, out),
        Command::Check {
            file,
            tol,
            expect_constant,
        } => commands::check(&file, tol, expect_constant, out),
        Command::Curvature { file, grid } => commands::curvature(&file, &grid, out),
        Command::Solve {
            n,
            r,
            seed,
            restarts,
        } => commands::solve(n, r, seed, restarts, out),
        Command::Classify {
            n,
            rmax,
            seed,
            restarts,
        } => commands::classify(n, rmax, seed, restarts, out),
        Command::Duality { file } => commands::duality(&file, out),
        Command::Embed { file } => commands::embed(&file, out),
    };

    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
