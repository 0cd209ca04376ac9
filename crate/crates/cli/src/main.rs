//! `mixedrep`: count, scan, compare and verify mixed sums of squares and
//! triangular numbers.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 usage or parse error,
//! 3 internal error (e.g. arithmetic overflow).

mod commands;

use clap::{Parser, Subcommand, ValueEnum};
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(
    name = "mixedrep",
    version,
    about = "Verification toolkit for mixed sums of squares and triangular numbers"
)]
pub struct Cli {
    /// Emit one JSON object per report (line-delimited).
    #[arg(long, global = true)]
    pub json: bool,
    /// Suppress progress messages on stderr.
    #[arg(long, global = true)]
    pub quiet: bool,
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true, env = "MIXEDREP_THREADS")]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Count representations of n by a form, e.g. `count "s+t+t" 2 --split-slot 0`.
    Count {
        form: String,
        n: u64,
        /// Split the count by parity of this (square) slot's index.
        #[arg(long)]
        split_slot: Option<usize>,
    },
    /// List every n ≤ bound the form does not represent.
    Scan {
        form: String,
        #[arg(long)]
        bound: u64,
        /// Print `n,representable` rows instead of a report.
        #[arg(long, conflicts_with = "json")]
        csv: bool,
    },
    /// Compare the value sets of two forms up to a bound.
    Equiv {
        form1: String,
        form2: String,
        #[arg(long)]
        bound: u64,
    },
    /// Eliminate coefficient vectors in a box by their least non-represented value.
    Eliminate {
        #[arg(long, value_enum)]
        pattern: Pattern,
        /// Upper bounds `a,b,c` for the three coefficients.
        #[arg(long = "box", value_parser = parse_box)]
        coefficient_box: [u64; 3],
        #[arg(long, default_value_t = 2000)]
        rep_bound: u64,
        /// Ordering constraint; defaults to a<=b (sst), b>=c (stt), a<=b<=c (ttt).
        #[arg(long, value_enum)]
        order: Option<OrderArg>,
    },
    /// Check one theta-function identity coefficientwise.
    Series {
        #[arg(long)]
        identity: String,
        #[arg(long, default_value_t = 20_000)]
        order: usize,
    },
    /// Run a named check, or `all` of them in a fixed order.
    Verify {
        check: String,
        /// Main bound of the named check (not allowed with `all`).
        #[arg(long)]
        bound: Option<u64>,
        #[arg(long)]
        series_order: Option<usize>,
        #[arg(long)]
        hurwitz_odd: Option<u64>,
        #[arg(long)]
        theorem1i_bound: Option<u64>,
        #[arg(long)]
        theorem1ii_bound: Option<u64>,
        #[arg(long)]
        theorem1iii_m: Option<u64>,
        #[arg(long)]
        rep_bound: Option<u64>,
        #[arg(long)]
        essential_bound: Option<u64>,
        #[arg(long)]
        conjecture1_bound: Option<u64>,
        #[arg(long)]
        conjecture23_bound: Option<u64>,
        #[arg(long)]
        dickson_bound: Option<u64>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pattern {
    Sst,
    Stt,
    Ttt,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderArg {
    None,
    #[value(name = "a<=b")]
    FirstAtMostSecond,
    #[value(name = "b>=c")]
    SecondAtLeastThird,
    #[value(name = "a<=b<=c")]
    NonDecreasing,
}

fn parse_box(s: &str) -> Result<[u64; 3], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let nums: Vec<u64> = parts
        .iter()
        .map(|p| p.parse::<u64>().map_err(|e| format!("'{p}': {e}")))
        .collect::<Result<_, _>>()?;
    <[u64; 3]>::try_from(nums)
        .map_err(|v| format!("expected three comma-separated bounds, got {}", v.len()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(k) = cli.threads {
        if k == 0 {
            eprintln!("error: --threads must be at least 1");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global()
        {
            eprintln!("error: cannot start worker pool: {e}");
            return ExitCode::from(3);
        }
    }
    ExitCode::from(commands::run(&cli))
}
