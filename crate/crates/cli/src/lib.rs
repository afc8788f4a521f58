//! Command-line front end for `runs-core`.
//!
//! All positions printed are 1-based and inclusive. Output is TSV with LF
//! line endings; diagnostics go to stderr.

mod format;
mod input;

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use runs_core::oracle::ORACLE_MAX_LEN;
use runs_core::{compute_runs, diff_against_oracle, Family, GenSpec, OrderSpec, RunsComputation, Text};

pub use format::{parse_runs_tsv, trunc1, write_nss, write_runs, RunRecord};
pub use input::{parse_order, parse_permutation_file, read_input};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error(transparent)]
    Core(#[from] runs_core::Error),
    #[error("{0}")]
    Usage(String),
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;

#[derive(Debug, Parser)]
#[command(name = "runs", version, about = "All runs of a text in linear time over a general ordered alphabet")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print every run as `start<TAB>end<TAB>period`.
    Runs {
        #[command(flatten)]
        input: InputArgs,
        /// Append a final stats line to stderr.
        #[arg(long)]
        stats: bool,
        /// Add a fourth column, `dec` or `inc`.
        #[arg(long)]
        direction: bool,
    },
    /// Print `i<TAB>nss[i]<TAB>λ[i]` for every position.
    Nss {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Compare every table and run against the brute-force oracles.
    /// Exit 0 on agreement, 1 with a diff on mismatch, 2 if the input is too long.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = ORACLE_MAX_LEN)]
        max_oracle_n: usize,
    },
    /// Write a generated text as raw bytes.
    Gen {
        /// `fib:<order>`, `tm:<order>`, `random`, or `periodic:<p>`.
        #[arg(long)]
        family: String,
        /// Length for `random` and `periodic`; truncates `fib` and `tm`.
        #[arg(long)]
        len: Option<usize>,
        #[arg(long, default_value_t = 2)]
        sigma: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; standard output if omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Time the full pipeline on each file: name, n, runs/100n, median MiB/s, comparisons/n.
    Bench {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long, default_value_t = 5)]
        repeat: usize,
        #[arg(long, default_value = "natural")]
        order: String,
    },
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Input file; standard input if omitted or `-`.
    pub path: Option<PathBuf>,
    /// `natural`, `reversed`, or `perm:<file>` (256 lines of byte ranks).
    #[arg(long, default_value = "natural")]
    pub order: String,
}

impl InputArgs {
    fn load(&self, stdin: &mut dyn Read) -> Result<(Text, OrderSpec)> {
        let order = parse_order(&self.order)?;
        Ok((read_input(self.path.as_deref(), stdin)?, order))
    }
}

/// Runs one command. The returned value is the process exit code.
pub fn run(cli: Cli, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> Result<u8> {
    let io_err = |source| CliError::Io { path: "<output>".into(), source };
    match cli.command {
        Command::Runs { input, stats, direction } => {
            let (text, order) = input.load(stdin)?;
            let start = Instant::now();
            let computed = compute_runs(&text, &order);
            let secs = start.elapsed().as_secs_f64();
            write_runs(out, &computed.runs, direction).map_err(io_err)?;
            if stats {
                let n = text.len();
                let per_100n = if n == 0 { 0.0 } else { 100.0 * computed.runs.len() as f64 / n as f64 };
                writeln!(
                    err,
                    "n={n} runs={} runs_per_100n={} comparisons={} mibps={}",
                    computed.runs.len(),
                    trunc1(per_100n),
                    computed.comparisons,
                    trunc1(mibps(n, secs)),
                )
                .map_err(io_err)?;
            }
            Ok(0)
        }
        Command::Nss { input } => {
            let (text, order) = input.load(stdin)?;
            let computed = compute_runs(&text, &order);
            write_nss(out, &computed.passes[0].nss).map_err(io_err)?;
            Ok(0)
        }
        Command::Verify { input, max_oracle_n } => {
            let (text, order) = input.load(stdin)?;
            let cap = max_oracle_n.min(ORACLE_MAX_LEN);
            if text.len() > cap {
                writeln!(err, "refusing to verify: n = {} exceeds the oracle cap {cap}", text.len()).map_err(io_err)?;
                return Ok(2);
            }
            let computed = compute_runs(&text, &order);
            verify_report(&text, &order, &computed, out, err)
        }
        Command::Gen { family, len, sigma, seed, output } => {
            let text = generate(&family, len, sigma, seed)?;
            match output {
                Some(path) => std::fs::write(&path, text.as_bytes())
                    .map_err(|source| CliError::Io { path: path.display().to_string(), source })?,
                None => out.write_all(text.as_bytes()).map_err(io_err)?,
            }
            Ok(0)
        }
        Command::Bench { files, repeat, order } => {
            if repeat == 0 {
                return Err(CliError::Usage("--repeat must be at least 1".into()));
            }
            let order = parse_order(&order)?;
            writeln!(out, "name\tn\truns/100n\tMiB/s\tcomparisons/n").map_err(io_err)?;
            let mut failed = false;
            for path in &files {
                match bench_file(path, repeat, &order) {
                    Ok(row) => writeln!(out, "{row}").map_err(io_err)?,
                    Err(e) => {
                        failed = true;
                        writeln!(err, "{e}").map_err(io_err)?;
                    }
                }
            }
            Ok(u8::from(failed))
        }
    }
}

/// Prints every oracle mismatch in `computed` as one TSV line on `out`.
/// Returns 0 if there were none, 1 otherwise, or 2 if the oracle refused
/// the input.
pub fn verify_report(
    text: &Text,
    order: &OrderSpec,
    computed: &RunsComputation,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<u8> {
    let io_err = |source| CliError::Io { path: "<output>".into(), source };
    let diff = match diff_against_oracle(text, order, computed) {
        Ok(diff) => diff,
        Err(e @ runs_core::Error::OracleInputTooLarge { .. }) => {
            writeln!(err, "refusing to verify: {e}").map_err(io_err)?;
            return Ok(2);
        }
        Err(e) => return Err(e.into()),
    };
    for mismatch in &diff {
        writeln!(out, "{mismatch}").map_err(io_err)?;
    }
    if diff.is_empty() {
        writeln!(err, "ok: n={} runs={}", text.len(), computed.runs.len()).map_err(io_err)?;
        Ok(0)
    } else {
        writeln!(err, "{} mismatches", diff.len()).map_err(io_err)?;
        Ok(1)
    }
}

fn generate(family: &str, len: Option<usize>, sigma: usize, seed: u64) -> Result<Text> {
    let (name, arg) = family.split_once(':').unwrap_or((family, ""));
    let number = |what: &str| -> Result<u64> {
        arg.parse().map_err(|_| CliError::Usage(format!("--family {name}:<{what}> needs a number, got {arg:?}")))
    };
    let need_len = || len.ok_or_else(|| CliError::Usage(format!("--family {name} needs --len")));
    let order_of = |v: u64| u32::try_from(v).map_err(|_| CliError::Usage(format!("order {v} out of range")));
    let family = match name {
        "fib" => Family::Fibonacci { order: order_of(number("order")?)? },
        "tm" => Family::ThueMorse { order: order_of(number("order")?)? },
        "random" => Family::Random { len: need_len()?, sigma, seed },
        "periodic" => Family::Periodic { len: need_len()?, period: number("period")? as usize },
        _ => return Err(CliError::Usage(format!("unknown family {family:?}; expected fib:<k>, tm:<k>, random, periodic:<p>"))),
    };
    let truncate = matches!(family, Family::Fibonacci { .. } | Family::ThueMorse { .. });
    let text = GenSpec::new(family).generate()?;
    Ok(match len {
        Some(len) if truncate => {
            let mut bytes = text.into_bytes();
            bytes.truncate(len);
            Text::new(bytes)
        }
        _ => text,
    })
}

fn mibps(n: usize, secs: f64) -> f64 {
    if secs > 0.0 {
        n as f64 / (1024.0 * 1024.0) / secs
    } else {
        0.0
    }
}

fn bench_file(path: &std::path::Path, repeat: usize, order: &OrderSpec) -> Result<String> {
    let text = read_input(Some(path), &mut io::empty())?;
    let n = text.len();
    let mut times = Vec::with_capacity(repeat);
    let mut last = None;
    for _ in 0..repeat {
        let start = Instant::now();
        let computed = compute_runs(&text, order);
        times.push(start.elapsed().as_secs_f64());
        last = Some(computed);
    }
    let computed = last.expect("repeat ≥ 1");
    times.sort_by(f64::total_cmp);
    let mid = times.len() / 2;
    let median = if times.len() % 2 == 1 { times[mid] } else { (times[mid - 1] + times[mid]) / 2.0 };
    let ratio = |x: f64| if n == 0 { 0.0 } else { x / n as f64 };
    let name = path.file_name().map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned());
    Ok(format!(
        "{name}\t{n}\t{}\t{}\t{}",
        trunc1(ratio(100.0 * computed.runs.len() as f64)),
        trunc1(mibps(n, median)),
        trunc1(ratio(computed.comparisons as f64)),
    ))
}
