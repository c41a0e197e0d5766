//! `serrewt`: enumeration, verification and graph export for the
//! combinatorics of Serre weights of tame parameters.
//!
//! Exit codes: 0 success, 2 precondition refusal, 3 resource budget,
//! 4 verification failure. Refusals are printed to stderr as one JSON object.

mod commands;
mod parse;

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::{CliError, Output};

#[derive(Parser, Debug)]
#[command(
    name = "serrewt",
    version,
    about = "Serre weight combinatorics for tame parameters of Res GL_n",
    propagate_version = true
)]
struct Cli {
    /// Worker threads; 0 or unset uses every core.
    #[arg(long, global = true, env = "SERREWT_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The predicted weight set of a tame parameter, with its extremal weights.
    Wset(ParamArgs),
    /// Jordan-Holder factors of a Deligne-Lusztig representation.
    Jh(ParamArgs),
    /// The weight-connectivity graph on the predicted set.
    Graph(ParamArgs),
    /// An elimination certificate for a weight outside the predicted set.
    Eliminate(EliminateArgs),
    /// Runs the brute-force sweeps and writes a report.
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Clone)]
pub struct DatumArgs {
    /// Rank of GL_n.
    #[arg(long)]
    pub n: usize,
    /// Number of embeddings.
    #[arg(long, default_value_t = 1)]
    pub f: usize,
    /// The prime.
    #[arg(long)]
    pub p: i64,
}

#[derive(Args, Debug, Clone)]
pub struct ParamArgs {
    #[command(flatten)]
    pub datum: DatumArgs,
    /// Permutation in one-line notation per embedding, joined by ';' (e.g. "231").
    #[arg(long)]
    pub s: String,
    /// Weight as a comma list per embedding, joined by ';' (e.g. "20,10,0").
    #[arg(long)]
    pub mu: String,
    /// Output format; dot is accepted by graph only.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct EliminateArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// The weight to eliminate: a comma list, a JSON array of rows, or
    /// `{"lambda": [[...]]}`.
    #[arg(long)]
    pub sigma: String,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    /// Rank of GL_n.
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    /// Number of embeddings.
    #[arg(long, default_value_t = 1)]
    pub f: usize,
    /// The prime.
    #[arg(long, default_value_t = 7)]
    pub p: i64,
    /// Translation box radius of the element domains.
    #[arg(long)]
    pub radius: Option<i64>,
    /// Length bound of the order comparisons.
    #[arg(long)]
    pub order_length: Option<usize>,
    /// Parameters drawn for the weight sweeps.
    #[arg(long)]
    pub samples: Option<usize>,
    /// Break one hypothesis on purpose; the run must then fail.
    #[arg(long)]
    pub mutate: Option<String>,
    /// Run only these sweeps (comma separated).
    #[arg(long, value_delimiter = ',')]
    pub sweep: Vec<String>,
    /// Print the full JSON report on stdout instead of the summary table.
    #[arg(long)]
    pub json: bool,
    /// Report file, written on every run.
    #[arg(long, short, default_value = "serrewt-report.json")]
    pub output: PathBuf,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Dot,
}

fn run(cli: Cli) -> Result<Output, CliError> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| CliError::usage(format!("thread pool: {e}")))?;
    }
    match cli.command {
        Command::Wset(a) => commands::wset(&a),
        Command::Jh(a) => commands::jh(&a),
        Command::Graph(a) => commands::graph(&a),
        Command::Eliminate(a) => commands::eliminate(&a),
        Command::Verify(a) => commands::verify(&a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            if let Err(e) = out.emit() {
                let err = CliError::usage(format!("cannot write output: {e}"));
                eprintln!("{}", err.to_json());
                return ExitCode::from(err.code);
            }
            ExitCode::from(out.code)
        }
        Err(err) => {
            let mut stderr = std::io::stderr().lock();
            let _ = writeln!(stderr, "{}", err.to_json());
            ExitCode::from(err.code)
        }
    }
}
