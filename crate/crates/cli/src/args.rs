use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use shiftbin::Method;

#[derive(Debug, Parser)]
#[command(
    name = "shiftbin",
    version,
    about = "Exact Poisson-binomial laws, shifted binomial approximation, distances and bounds"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub input: InputArgs,

    /// Approximation: poisson, shifted-poisson, binomial1, binomial2, normal, shifted-binomial.
    #[arg(long, global = true, value_parser = parse_method)]
    pub method: Option<Method>,

    /// Distance to report.
    #[arg(long, global = true, value_enum, default_value_t = Metric::Tv)]
    pub metric: Metric,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Comma-separated success probabilities.
    #[arg(long, global = true, value_delimiter = ',', num_args = 1..)]
    pub probs: Option<Vec<f64>>,

    /// File with one probability per line (`#` comments allowed).
    #[arg(long, global = true)]
    pub probs_file: Option<PathBuf>,

    /// Use p_i = i * M / (m + 1), i = 1..m.
    #[arg(long, global = true)]
    pub uniform_spread: bool,

    /// Number of summands for the generator and the sweep.
    #[arg(long, global = true)]
    pub m: Option<usize>,

    /// Maximum-probability parameter M of the generator.
    #[arg(long, global = true)]
    pub max_prob: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the exact law of W as `k,mass` rows.
    Exact,
    /// Fit an approximation and print its parameters and PMF.
    Approx,
    /// Print the exact distance between W and an approximation.
    Distance,
    /// Print every bound constituent and bound value.
    Bounds {
        /// Emit a header and one CSV row instead of a table.
        #[arg(long)]
        csv: bool,
    },
    /// TV error of all six approximations over a grid of M values.
    Sweep {
        /// Grid of M values as START:END:COUNT.
        #[arg(long, default_value = "0.05:1.0:20")]
        grid: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Metric {
    Tv,
    Loc,
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse()
}
