use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "qec",
    version,
    about = "Error correction with noisy ancillas from classical GF(2)/GF(4) codes"
)]
pub struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Emit JSON on stdout instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Code to use: a file path or `catalog:<name>`.
    #[arg(long, global = true, value_name = "FILE|catalog:NAME")]
    pub code: Option<String>,

    /// Scheme construction. Defaults to the one matching the code's field.
    #[arg(long, global = true, value_enum)]
    pub variant: Option<VariantArg>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    /// Quaternary construction (GF(4) codes).
    Q4,
    /// Binary construction (GF(2) codes).
    Q2,
    /// Hadamard-rotated version of the field's default construction.
    Dual,
    #[value(name = "dual-q4")]
    DualQ4,
    #[value(name = "dual-q2")]
    DualQ2,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the built-in codes.
    Codes,
    /// Print the parity-check blocks of the scheme.
    Build,
    /// Run every verification suite against the scheme.
    Verify(VerifyArgs),
    /// Build a syndrome table and optionally write it to a file.
    Table(TableArgs),
    /// Estimate the failure rate by Monte Carlo.
    Simulate(SimulateArgs),
    /// Entanglement-assisted parameters and the Singleton bound.
    Params,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Random multi-qubit errors checked against the statevector simulator.
    #[arg(long, default_value_t = 1000)]
    pub random_errors: usize,
    /// Random input states per correctable error.
    #[arg(long, default_value_t = 10)]
    pub states_per_error: usize,
    /// Cases with untolerated ancilla errors.
    #[arg(long, default_value_t = 100)]
    pub negative_cases: usize,
    /// Random vectors for the trace identity when exhaustive checking is too large.
    #[arg(long, default_value_t = 10_000)]
    pub random_vectors: usize,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// Correction radius; defaults to floor((d-1)/2).
    #[arg(long)]
    pub radius: Option<usize>,
    /// Write the table in binary form to this file.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("noise").required(true).args(["adversarial", "iid"])))]
pub struct SimulateArgs {
    /// Uniform errors of weight at most T.
    #[arg(long, value_name = "T")]
    pub adversarial: Option<usize>,
    /// Independent errors: X, Y and Z each with probability P per data qubit.
    #[arg(long, value_name = "P")]
    pub iid: Option<f64>,
    /// Probability of the tolerated ancilla error; defaults to the --iid value.
    #[arg(long, value_name = "P", requires = "iid")]
    pub p_anc: Option<f64>,
    #[arg(long, default_value_t = 10_000)]
    pub trials: u64,
    /// Worker threads; defaults to one per core.
    #[arg(long)]
    pub threads: Option<usize>,
    /// Use a table written by `qec table --out` instead of building one.
    #[arg(long)]
    pub table: Option<PathBuf>,
}
