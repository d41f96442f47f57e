//! Command-line benchmark and verification harness for the selection
//! routines.
//!
//! Without a subcommand the binary runs a comparison-counting benchmark:
//! it generates the requested input family at each size, selects the target
//! rank over repeated trials, and prints the aggregated counter columns as
//! an aligned table or CSV. The `verify` subcommands check the
//! probabilistic guarantees backing the sampling strategy.

use std::io::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use frselect::bench::{render, run, Algorithm, BenchConfig, Format};
use frselect::generators::Family;
use frselect::riselect::RiselectConfig;
use frselect::sampling::SampleStrategy;
use frselect::select::SelectConfig;
use frselect::verify::{check_lemma_bounds, hyper_tail, tail_grid_queries};
use frselect::{Error, Rng};

#[derive(Parser)]
#[command(
    name = "frselect-bench",
    version,
    about = "Comparison-counting benchmarks for in-place selection"
)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,
    #[command(flatten)]
    bench: BenchArgs,
}

#[derive(Args)]
struct BenchArgs {
    /// Algorithm: select | select-sort | riselect
    #[arg(long, default_value = "select")]
    algorithm: String,
    /// Input family: random | onezero | sorted | rotated | organpipe |
    /// m3killer | twofaced
    #[arg(long, default_value = "random")]
    sequence: String,
    /// Input size; repeat the flag to benchmark several sizes
    #[arg(long = "n", default_values_t = [1_000_000usize])]
    n: Vec<usize>,
    /// 1-based target rank (default: lower median, ceil(n/2))
    #[arg(long)]
    k: Option<usize>,
    /// Trials per (sequence, n); randomized families get fresh instances
    #[arg(long, default_value_t = 20)]
    trials: usize,
    /// Master seed for input generation and algorithm randomness
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Sampling strategy: fr | fr-lns | fr-lneps | fr-sn23 | reischuk
    #[arg(long, default_value = "fr")]
    strategy: String,
    /// Sample-size factor
    #[arg(long, default_value_t = 0.5)]
    alpha: f64,
    /// Gap factor
    #[arg(long, default_value_t = 0.25)]
    beta: f64,
    /// Log-argument factor for fr-lns
    #[arg(long, default_value_t = 1.0)]
    theta: f64,
    /// Log-power exponent for fr-lneps (>= 1)
    #[arg(long = "eps-l", default_value_t = 1.0)]
    eps_l: f64,
    /// Sample-size exponent for reischuk (default: (2 + eps)/3)
    #[arg(long = "eps-s")]
    eps_s: Option<f64>,
    /// Gap exponent for reischuk
    #[arg(long, default_value_t = 0.25)]
    eps: f64,
    /// Cutoff length below which the small-segment routine takes over
    #[arg(long, default_value_t = 600)]
    ncut: usize,
    /// Output format: table | csv
    #[arg(long, default_value = "table")]
    format: String,
    /// Write the report to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Check the probabilistic guarantees behind the sampling strategy
    Verify {
        #[command(subcommand)]
        what: VerifyCommand,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Exact hypergeometric tails over the standard grid, each checked
    /// against the cap exp(-2 g^2 / s)
    TailGrid,
    /// Empirical first-pass cost and shrink frequencies on random
    /// permutations, against the joint bound 1 - 4 exp(-2 g^2 / s)
    Lemma {
        /// Input size
        #[arg(long, default_value_t = 10_000)]
        n: usize,
        /// 1-based target rank (default: lower median)
        #[arg(long)]
        k: Option<usize>,
        /// Number of fresh random permutations
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn parse_strategy(args: &BenchArgs) -> frselect::Result<SampleStrategy> {
    match args.strategy.as_str() {
        "fr" => SampleStrategy::fr(args.alpha, args.beta),
        "fr-lns" => SampleStrategy::fr_lns(args.alpha, args.beta, args.theta),
        "fr-lneps" => SampleStrategy::fr_lneps(args.alpha, args.beta, args.eps_l),
        "fr-sn23" => SampleStrategy::fr_sn23(args.alpha, args.beta),
        "reischuk" => {
            let eps_s = args.eps_s.unwrap_or((2.0 + args.eps) / 3.0);
            SampleStrategy::reischuk(args.alpha, args.beta, eps_s, args.eps)
        }
        other => Err(Error::InvalidArgument(format!(
            "unknown strategy '{other}'"
        ))),
    }
}

fn run_bench(args: &BenchArgs) -> frselect::Result<()> {
    let cfg = BenchConfig {
        algorithm: args.algorithm.parse::<Algorithm>()?,
        family: args.sequence.parse::<Family>()?,
        ns: args.n.clone(),
        k: args.k,
        trials: args.trials,
        seed: args.seed,
        select_config: SelectConfig {
            strategy: parse_strategy(args)?,
            n_cut: args.ncut,
            ..SelectConfig::default()
        },
        riselect_config: RiselectConfig::default(),
    };
    let format = args.format.parse::<Format>()?;
    let report = render(&run(&cfg)?, format);
    match &args.out {
        Some(path) => {
            let mut f = std::fs::File::create(path)
                .map_err(|e| Error::Config(format!("cannot write {}: {e}", path.display())))?;
            f.write_all(report.as_bytes())
                .map_err(|e| Error::Config(format!("cannot write {}: {e}", path.display())))?;
        }
        None => print!("{report}"),
    }
    Ok(())
}

fn run_tail_grid() -> frselect::Result<()> {
    let queries = tail_grid_queries();
    let mut violations = 0usize;
    let mut worst_ratio = 0.0f64;
    for q in &queries {
        let tail = hyper_tail(q)?;
        let cap = (-2.0 * q.g * q.g / q.s as f64).exp();
        let ratio = if cap > 0.0 { tail / cap } else { 0.0 };
        worst_ratio = worst_ratio.max(ratio);
        if tail > cap {
            violations += 1;
            eprintln!(
                "VIOLATION n={} r={} s={} g={:.1}: tail {tail:.3e} > cap {cap:.3e}",
                q.n, q.r, q.s, q.g
            );
        }
    }
    println!(
        "tail-grid: {} points checked, {violations} violations, worst tail/cap ratio {worst_ratio:.4}",
        queries.len()
    );
    if violations > 0 {
        return Err(Error::Domain(format!(
            "{violations} grid points exceeded the tail cap"
        )));
    }
    Ok(())
}

fn run_lemma(n: usize, k: Option<usize>, trials: usize, seed: u64) -> frselect::Result<()> {
    let k1 = k.unwrap_or(n.div_ceil(2));
    let mut rng = Rng::new(seed);
    let report = check_lemma_bounds(n, k1, &SampleStrategy::default(), trials, &mut rng)?;
    println!(
        "lemma: n={n} k={k1} trials={trials}: cost within bound {:.4}, shrink within bound {:.4}, joint bound {:.4}",
        report.frac_c_ok, report.frac_shrink_ok, report.bound
    );
    if report.frac_c_ok < report.bound || report.frac_shrink_ok < report.bound {
        return Err(Error::Domain(
            "observed frequency fell below the theoretical bound".into(),
        ));
    }
    println!("PASS");
    Ok(())
}

fn main() {
    let cli = Cli::parse();
    let result = match &cli.command {
        None => run_bench(&cli.bench),
        Some(Command::Verify { what }) => match what {
            VerifyCommand::TailGrid => run_tail_grid(),
            VerifyCommand::Lemma { n, k, trials, seed } => run_lemma(*n, *k, *trials, *seed),
        },
    };
    if let Err(e) = result {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
