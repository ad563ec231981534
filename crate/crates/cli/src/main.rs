mod commands;
mod input;
mod predict;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Failed(_) => 1,
            CliError::Input(_) => 2,
        }
    }
}

pub type CliResult = Result<(), CliError>;

#[derive(Parser)]
#[command(name = "ragraph", version, about = "RA matrices of graphs: divisors, products, constructions and a group oracle")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ProductOp {
    Cartesian,
    Tensor,
    Strong,
    Join,
    DisjointUnion,
    Pyramid,
    Prism,
    Complement,
}

#[derive(Subcommand)]
enum Command {
    /// Classify graph6 input: a string, a file, or stdin when omitted or `-`.
    Analyze {
        input: Option<String>,
        /// One JSON object per line.
        #[arg(long, conflicts_with = "tsv")]
        json: bool,
        /// Tab-separated columns with a header line.
        #[arg(long)]
        tsv: bool,
        /// Include per-vertex axis multiples in text and TSV output.
        #[arg(long)]
        axis: bool,
    },
    /// Print a named family member as graph6.
    Gen {
        family: String,
        params: Vec<usize>,
    },
    /// Combine graph6 inputs; unary ops take a single graph.
    Product {
        op: ProductOp,
        a: String,
        b: Option<String>,
    },
    /// Build a graph with prescribed nontrivial divisors and nullity.
    Construct {
        /// Comma separated divisibility chain, e.g. `2,4`.
        #[arg(long, value_delimiter = ',')]
        divisors: Vec<u64>,
        #[arg(long, default_value_t = 0)]
        nullity: usize,
        #[arg(long)]
        json: bool,
    },
    /// Girth and category counts over a graph6 file (stdin for `-`).
    Batch {
        file: String,
        /// Table layout; only `girth-category` exists.
        #[arg(long, default_value = "girth-category")]
        summary: String,
        /// Worker threads; 0 uses every core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        json: bool,
    },
    /// Predict the nontrivial divisor from a closed form.
    Predict(predict::PredictArgs),
    /// Basis of the kernel of the RA matrix modulo a prime.
    Kernel {
        #[arg(long = "mod")]
        modulus: u64,
        graph: String,
    },
    /// Enumerate graph and matrix powers of small finite groups.
    Oracle(OracleArgs),
    /// Run a verification suite and print a TSV report.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        /// Include the large Kneser entries.
        #[arg(long)]
        slow: bool,
    },
}

#[derive(Args)]
struct OracleArgs {
    #[command(subcommand)]
    command: OracleCommand,
}

#[derive(Subcommand)]
pub enum OracleCommand {
    /// `G^Γ`, the G-RA test, the intersection order and `Comm_b`.
    Graph {
        /// `heisenberg:P`, `dihedral:N` or `cyclic:N`.
        #[arg(long)]
        group: String,
        graph: String,
        #[arg(long, default_value_t = ragraph::group_oracle::DEFAULT_CAP)]
        cap: u64,
    },
    /// `G^M` for an integer matrix given as `1,0;0,4`.
    Matrix {
        #[arg(long)]
        group: String,
        #[arg(long, allow_hyphen_values = true)]
        rows: String,
        #[arg(long, default_value_t = ragraph::group_oracle::DEFAULT_CAP)]
        cap: u64,
    },
    /// Order, abelianization and element-order histogram of a group.
    Group {
        #[arg(long)]
        group: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze {
            input,
            json,
            tsv,
            axis,
        } => commands::analyze(input.as_deref(), commands::Format::new(json, tsv), axis),
        Command::Gen { family, params } => commands::gen(&family, &params),
        Command::Product { op, a, b } => commands::product(op, &a, b.as_deref()),
        Command::Construct {
            divisors,
            nullity,
            json,
        } => commands::construct(&divisors, nullity, json),
        Command::Batch {
            file,
            summary,
            jobs,
            json,
        } => commands::batch(&file, &summary, jobs, json),
        Command::Predict(args) => predict::run(&args),
        Command::Kernel { modulus, graph } => commands::kernel(modulus, &graph),
        Command::Oracle(args) => commands::oracle(&args.command),
        Command::Verify { suite, slow } => commands::verify(&suite, slow),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
