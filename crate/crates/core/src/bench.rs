//! Benchmark runner: generates inputs, runs an algorithm over repeated
//! trials, and renders the aggregated counter columns.

use std::time::Instant;

use crate::generators::{generate, Family, SequenceSpec};
use crate::riselect::{riselect, RiselectConfig};
use crate::rng::{splitmix64, Rng};
use crate::select::{select, SelectConfig, SelectMode};
use crate::stats::{aggregate, AggregateStats, RunStats};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    /// The sampling-based selection with recursive pivot search.
    Select,
    /// The variant that sorts the sample and, after one good pass, the
    /// survivors.
    SelectSort,
    /// The baseline quickselect.
    Riselect,
}

impl Algorithm {
    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::Select => "select",
            Algorithm::SelectSort => "select-sort",
            Algorithm::Riselect => "riselect",
        }
    }
}

impl std::fmt::Display for Algorithm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "select" => Ok(Algorithm::Select),
            "select-sort" => Ok(Algorithm::SelectSort),
            "riselect" => Ok(Algorithm::Riselect),
            other => Err(Error::InvalidArgument(format!("unknown algorithm '{other}'"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub algorithm: Algorithm,
    pub family: Family,
    pub ns: Vec<usize>,
    /// 1-based target rank; `None` selects the lower median `ceil(n/2)`.
    pub k: Option<usize>,
    pub trials: usize,
    pub seed: u64,
    pub select_config: SelectConfig,
    pub riselect_config: RiselectConfig,
}

/// One aggregated report line for a `(sequence, n)` pair.
#[derive(Debug, Clone, PartialEq)]
pub struct ReportRow {
    pub algorithm: Algorithm,
    pub family: Family,
    pub n: usize,
    /// 1-based rank that was selected.
    pub k: usize,
    pub trials: usize,
    pub seed: u64,
    pub agg: AggregateStats,
    pub time_ms_avg: f64,
}

/// Deterministic per-trial seed: a SplitMix64 fold of the master seed with
/// the family, the size, and the stream index. Streams `2t` feed the input
/// generator and `2t + 1` the algorithm's own randomness, so the two never
/// overlap.
pub fn derive_seed(master: u64, family: Family, n: u64, stream: u64) -> u64 {
    let mut state = master;
    for field in [family as u64 + 1, n, stream] {
        state = splitmix64(&mut state) ^ field.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    }
    splitmix64(&mut state)
}

pub fn run(cfg: &BenchConfig) -> Result<Vec<ReportRow>> {
    if cfg.trials < 1 {
        return Err(Error::Config("need at least one trial".into()));
    }
    let mut rows = Vec::new();
    for &n in &cfg.ns {
        if n < 1 {
            return Err(Error::InvalidArgument("n must be positive".into()));
        }
        let k1 = cfg.k.unwrap_or(n.div_ceil(2));
        if k1 < 1 || k1 > n {
            return Err(Error::InvalidArgument(format!(
                "rank {k1} outside 1..={n}"
            )));
        }
        let k0 = k1 - 1;
        let randomized = cfg.family.is_randomized();
        // Deterministic families run the identical (instance, seed) pair
        // every trial, so only the timing can vary.
        let mut trial_stats = Vec::with_capacity(cfg.trials);
        let mut total_ms = 0.0f64;
        for t in 0..cfg.trials {
            let stream = if randomized { t as u64 } else { 0 };
            let gen_seed = derive_seed(cfg.seed, cfg.family, n as u64, 2 * stream);
            let alg_seed = derive_seed(cfg.seed, cfg.family, n as u64, 2 * stream + 1);
            let mut x = generate(&SequenceSpec {
                family: cfg.family,
                n,
                seed: gen_seed,
            })?;
            let mut stats = RunStats::new();
            let mut rng = Rng::new(alg_seed);
            let start = Instant::now();
            match cfg.algorithm {
                Algorithm::Select => {
                    select(&mut x, 0, n - 1, k0, &cfg.select_config, &mut rng, &mut stats)?;
                }
                Algorithm::SelectSort => {
                    let sc = SelectConfig {
                        mode: SelectMode::NonrecursiveSort,
                        ..cfg.select_config
                    };
                    select(&mut x, 0, n - 1, k0, &sc, &mut rng, &mut stats)?;
                }
                Algorithm::Riselect => {
                    riselect(&mut x, 0, n - 1, k0, &cfg.riselect_config, &mut rng, &mut stats)?;
                }
            }
            total_ms += start.elapsed().as_secs_f64() * 1e3;
            if !randomized && t > 0 {
                assert_eq!(
                    stats, trial_stats[0],
                    "deterministic repeat diverged on {} n={n}",
                    cfg.family
                );
            }
            trial_stats.push(stats);
        }
        rows.push(ReportRow {
            algorithm: cfg.algorithm,
            family: cfg.family,
            n,
            k: k1,
            trials: cfg.trials,
            seed: cfg.seed,
            agg: aggregate(&trial_stats, n as u64, k1 as u64)?,
            time_ms_avg: total_ms / cfg.trials as f64,
        });
    }
    Ok(rows)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Table,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" => Ok(Format::Table),
            "csv" => Ok(Format::Csv),
            other => Err(Error::InvalidArgument(format!("unknown format '{other}'"))),
        }
    }
}

/// Renders report rows. Counter columns use the customary normalizations:
/// comparisons and partitioned length in units of `n`, partition and
/// cutoff-call counts in units of `ln n`, the sample sum as a percentage
/// of `n`. Rendering is deterministic: identical rows give identical text.
pub fn render(rows: &[ReportRow], format: Format) -> String {
    match format {
        Format::Csv => render_csv(rows),
        Format::Table => render_table(rows),
    }
}

pub const CSV_HEADER: &str = "algorithm,sequence,n,k,trials,seed,C_avg,C_max,C_min,gamma_avg,L_avg,P_avg,N_avg,p_avg,s_avg_pct,N_rnd,time_ms_avg";

fn render_csv(rows: &[ReportRow]) -> String {
    let mut out = String::new();
    out.push_str(CSV_HEADER);
    out.push('\n');
    for row in rows {
        let a = &row.agg;
        out.push_str(&format!(
            "{},{},{},{},{},{},{:.6},{:.6},{:.6},{:.4},{:.6},{:.4},{:.4},{:.4},{:.4},{:.4},{:.3}\n",
            row.algorithm,
            row.family,
            row.n,
            row.k,
            row.trials,
            row.seed,
            a.c_avg_per_n(),
            a.c_max_per_n(),
            a.c_min_per_n(),
            a.gamma_avg,
            a.l_avg_per_n(),
            a.p_avg_per_ln_n(),
            a.n_avg_per_ln_n(),
            a.p_frac_avg(),
            a.s_avg_pct(),
            a.n_rnd_avg,
            row.time_ms_avg,
        ));
    }
    out
}

fn render_table(rows: &[ReportRow]) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{:<12} {:<10} {:>10} {:>10} {:>3} {:>7} {:>7} {:>7} {:>7} {:>6} {:>6} {:>6} {:>6} {:>6} {:>6} {:>9}\n",
        "algorithm", "sequence", "n", "k", "T", "Cavg/n", "Cmax/n", "Cmin/n",
        "gamma", "L/n", "P/lnn", "N/lnn", "p", "s%n", "Nrnd", "ms"
    ));
    for row in rows {
        let a = &row.agg;
        out.push_str(&format!(
            "{:<12} {:<10} {:>10} {:>10} {:>3} {:>7.3} {:>7.3} {:>7.3} {:>7.2} {:>6.2} {:>6.2} {:>6.2} {:>6.2} {:>6.2} {:>6.2} {:>9.1}\n",
            row.algorithm.name(),
            row.family.name(),
            row.n,
            row.k,
            row.trials,
            a.c_avg_per_n(),
            a.c_max_per_n(),
            a.c_min_per_n(),
            a.gamma_avg,
            a.l_avg_per_n(),
            a.p_avg_per_ln_n(),
            a.n_avg_per_ln_n(),
            a.p_frac_avg(),
            a.s_avg_pct(),
            a.n_rnd_avg,
            row.time_ms_avg,
        ));
    }
    out
}
