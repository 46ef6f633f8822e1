mod commands;
mod formats;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "pappa", version, about = "Verification and evaluation tools for the parafermion planar para algebra")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// N as a value (3), an inclusive range (2..5) or a list (2,4)
    #[arg(long = "N", global = true)]
    pub n: Option<String>,
    /// Number of strands m, in the same forms as --N
    #[arg(long = "m", global = true)]
    pub m: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Exact)]
    pub mode: ModeArg,
    /// 1, -1 or both; only matters for even N
    #[arg(long = "zeta-sign", global = true, default_value = "both", allow_hyphen_values = true)]
    pub zeta_sign: String,
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    #[arg(long, global = true, default_value_t = 7)]
    pub seed: u64,
    /// Write the JSON output here instead of standard output
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Cyclotomic order L used in exact mode
    #[arg(long, global = true)]
    pub order: Option<u32>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeArg {
    Exact,
    Approx,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run identity suites and report one record per identity
    Verify {
        /// pf, jw, tl, sft, pauli, quadratic, braid, clifford, rp, tangle or all
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Evaluate a slice word read from a file or given inline
    EvalTangle {
        #[arg(long, conflicts_with = "word")]
        input: Option<PathBuf>,
        /// Slices separated by newlines or semicolons
        #[arg(long)]
        word: Option<String>,
    },
    /// Reflection positivity of one coupling matrix or of a random ensemble
    Rp {
        #[arg(long, conflicts_with = "ensemble")]
        input: Option<PathBuf>,
        /// Comma-separated inverse temperatures
        #[arg(long, value_delimiter = ',', default_values_t = pappa::rp::DEFAULT_BETAS.to_vec())]
        betas: Vec<f64>,
        /// Number of random couplings to test against the J0 criterion
        #[arg(long)]
        ensemble: Option<usize>,
        /// JSON list of test elements; defaults to the monomial basis
        #[arg(long)]
        xs: Option<PathBuf>,
    },
    /// Export the Pauli matrices X, Y, Z
    Pauli {
        #[arg(long, default_value = "q")]
        version: String,
    },
    /// Export the braid matrices b+ and b-
    Braid,
    /// Export F and G, or enumerate the projective Clifford group
    Clifford {
        #[arg(long)]
        enumerate: bool,
        #[arg(long, default_value_t = 100_000)]
        cap: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Verify { suite } => commands::verify(&cli.global, &suite),
        Command::EvalTangle { input, word } => commands::eval_tangle(&cli.global, input.as_deref(), word.as_deref()),
        Command::Rp { input, betas, ensemble, xs } => {
            commands::rp(&cli.global, input.as_deref(), &betas, ensemble, xs.as_deref())
        }
        Command::Pauli { version } => commands::pauli(&cli.global, &version),
        Command::Braid => commands::braid(&cli.global),
        Command::Clifford { enumerate, cap } => commands::clifford(&cli.global, enumerate, cap),
    };
    match result {
        Ok(commands::Outcome::Pass) => ExitCode::SUCCESS,
        Ok(commands::Outcome::Fail) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::from(1)
        }
    }
}
