//! Run counters and their aggregation into normalized report columns.

use std::cmp::Ordering;

use crate::sampling::f_of_n;
use crate::{Error, Result};

/// Counters for one selection run.
///
/// A `RunStats` is owned by a single run and threaded through the calls; the
/// only thing that counts as a comparison is an element-vs-element order
/// query made through [`RunStats::cmp`]. Index arithmetic and swaps are free.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RunStats {
    /// Element comparisons `C`.
    pub comparisons: u64,
    /// Sum of the sizes of all partitioned segments `L` (main partitions and
    /// the cutoff routine's alike).
    pub partitioned_length_sum: u64,
    /// Main-loop partition passes `P`.
    pub select_partitions: u64,
    /// Calls into the small-segment cutoff routine `N`.
    pub sselect_calls: u64,
    /// Partition passes made inside the cutoff routine.
    pub sselect_partitions: u64,
    /// Sum of sample sizes drawn, over all passes.
    pub sample_size_sum: u64,
    /// Number of sampling passes (exceeds the partition count when a pass
    /// re-samples instead of partitioning).
    pub sample_passes: u64,
    /// Pivot-candidate randomizations (baseline quickselect only) `N_rnd`.
    pub randomizations: u64,
    /// Re-sample events of the sorting-based variant.
    pub resamples: u64,
    /// Times the re-sample cap or depth bound forced a full sort.
    pub fallback_sorts: u64,
}

impl RunStats {
    pub fn new() -> Self {
        Self::default()
    }

    /// Counted three-way comparison. One call = one comparison, regardless
    /// of how the ordering is used afterwards.
    #[inline]
    pub fn cmp<T: Ord>(&mut self, a: &T, b: &T) -> Ordering {
        self.comparisons += 1;
        a.cmp(b)
    }
}

/// `gamma_avg := (C_avg - 1.5 n) / f(n)`, the empirical constant in front of
/// the `f(n)` lower-order term for the median case `k = ceil(n/2)`. The
/// normalization is fixed at `1.5 n` for every `k`; negative values are
/// meaningful (inputs cheaper than random).
pub fn gamma_avg(c_avg: f64, n: u64, k: u64) -> Result<f64> {
    if k < 1 || k > n {
        return Err(Error::InvalidArgument(format!(
            "rank k={k} outside 1..={n}"
        )));
    }
    Ok((c_avg - 1.5 * n as f64) / f_of_n(n)?)
}

/// Per-column averages and extremes over a set of trials, with the
/// table-style normalizations available as methods: `C` in units of `n`,
/// `L` in `n`, `P` and `N` in `ln n`, the sample sum as a percentage of `n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AggregateStats {
    pub n: u64,
    pub k: u64,
    pub trials: usize,
    pub c_avg: f64,
    pub c_max: u64,
    pub c_min: u64,
    pub gamma_avg: f64,
    pub l_avg: f64,
    pub p_avg: f64,
    pub n_sselect_avg: f64,
    pub sselect_partitions_avg: f64,
    pub s_sum_avg: f64,
    pub sample_passes_avg: f64,
    pub n_rnd_avg: f64,
    pub resamples_avg: f64,
    pub fallback_sorts_avg: f64,
}

impl AggregateStats {
    pub fn c_avg_per_n(&self) -> f64 {
        self.c_avg / self.n as f64
    }

    pub fn c_max_per_n(&self) -> f64 {
        self.c_max as f64 / self.n as f64
    }

    pub fn c_min_per_n(&self) -> f64 {
        self.c_min as f64 / self.n as f64
    }

    pub fn l_avg_per_n(&self) -> f64 {
        self.l_avg / self.n as f64
    }

    pub fn p_avg_per_ln_n(&self) -> f64 {
        self.p_avg / (self.n as f64).ln()
    }

    pub fn n_avg_per_ln_n(&self) -> f64 {
        self.n_sselect_avg / (self.n as f64).ln()
    }

    /// Average cutoff-routine partitions per cutoff call, `p`.
    pub fn p_frac_avg(&self) -> f64 {
        if self.n_sselect_avg == 0.0 {
            0.0
        } else {
            self.sselect_partitions_avg / self.n_sselect_avg
        }
    }

    /// Average sample-size sum as a percentage of `n`.
    pub fn s_avg_pct(&self) -> f64 {
        100.0 * self.s_sum_avg / self.n as f64
    }
}

/// Collapses per-trial counters into [`AggregateStats`] for a run at size
/// `n`, rank `k`. `gamma_avg` is computed from the unrounded `C_avg`.
pub fn aggregate(trials: &[RunStats], n: u64, k: u64) -> Result<AggregateStats> {
    if trials.is_empty() {
        return Err(Error::InvalidArgument("no trials to aggregate".into()));
    }
    let t = trials.len() as f64;
    let avg = |f: fn(&RunStats) -> u64| trials.iter().map(f).sum::<u64>() as f64 / t;
    let c_avg = avg(|s| s.comparisons);
    Ok(AggregateStats {
        n,
        k,
        trials: trials.len(),
        c_avg,
        c_max: trials.iter().map(|s| s.comparisons).max().unwrap(),
        c_min: trials.iter().map(|s| s.comparisons).min().unwrap(),
        gamma_avg: gamma_avg(c_avg, n, k)?,
        l_avg: avg(|s| s.partitioned_length_sum),
        p_avg: avg(|s| s.select_partitions),
        n_sselect_avg: avg(|s| s.sselect_calls),
        sselect_partitions_avg: avg(|s| s.sselect_partitions),
        s_sum_avg: avg(|s| s.sample_size_sum),
        sample_passes_avg: avg(|s| s.sample_passes),
        n_rnd_avg: avg(|s| s.randomizations),
        resamples_avg: avg(|s| s.resamples),
        fallback_sorts_avg: avg(|s| s.fallback_sorts),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cmp_counts_every_call() {
        let mut st = RunStats::new();
        assert_eq!(st.cmp(&1, &2), Ordering::Less);
        assert_eq!(st.cmp(&2, &2), Ordering::Equal);
        assert_eq!(st.cmp(&3, &2), Ordering::Greater);
        assert_eq!(st.comparisons, 3);
    }

    #[test]
    fn gamma_avg_reference_points() {
        let n = 1_000_000u64;
        assert_eq!(gamma_avg(1.5 * n as f64, n, n / 2).unwrap(), 0.0);
        let g = gamma_avg(1.59 * n as f64, n, n / 2).unwrap();
        assert!((g - 3.75).abs() < 0.01, "gamma = {g}");
        // negative values allowed
        assert!(gamma_avg(1.4 * n as f64, n, n / 2).unwrap() < 0.0);
        assert!(gamma_avg(1.0, n, 0).is_err());
        assert!(gamma_avg(1.0, n, n + 1).is_err());
    }

    #[test]
    fn aggregate_bounds_and_normalizations() {
        let mk = |c: u64| RunStats {
            comparisons: c,
            partitioned_length_sum: 2 * c,
            select_partitions: 3,
            sselect_calls: 2,
            sselect_partitions: 10,
            sample_size_sum: 50,
            sample_passes: 3,
            ..RunStats::default()
        };
        let agg = aggregate(&[mk(100), mk(200), mk(150)], 1000, 500).unwrap();
        assert_eq!(agg.c_avg, 150.0);
        assert_eq!(agg.c_max, 200);
        assert_eq!(agg.c_min, 100);
        assert!(agg.c_min as f64 <= agg.c_avg && agg.c_avg <= agg.c_max as f64);
        assert_eq!(agg.c_avg_per_n(), 0.15);
        assert_eq!(agg.l_avg_per_n(), 0.3);
        assert!((agg.p_avg_per_ln_n() - 3.0 / 1000f64.ln()).abs() < 1e-12);
        assert_eq!(agg.p_frac_avg(), 5.0);
        assert_eq!(agg.s_avg_pct(), 5.0);
        assert!(aggregate(&[], 10, 5).is_err());
    }

    #[test]
    fn p_frac_zero_when_no_cutoff_calls() {
        let agg = aggregate(&[RunStats::default()], 10, 5).unwrap();
        assert_eq!(agg.p_frac_avg(), 0.0);
    }
}
