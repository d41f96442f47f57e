//! In-place selection of the k-th smallest element with comparison counting.
//!
//! The main entry point is [`select::select`], a sampling-based two-pivot
//! selection routine that partitions the array into five blocks per pass and
//! reports the equal range of the answer. A classic median-of-3 quickselect
//! ([`riselect::riselect`]) is included as a baseline, together with the
//! input families ([`generators`]) and the benchmark harness ([`bench`])
//! used to compare them by exact comparison counts.
//!
//! All index arithmetic in this crate is 0-based. Where a routine mirrors a
//! 1-based description (closed interval `x[l:r]`), the translation is a
//! uniform shift by one; formulas that mix indices with lengths are written
//! out explicitly at the call site.

pub mod bench;
pub mod generators;
pub mod partition;
pub mod riselect;
pub mod rng;
pub mod sampling;
pub mod select;
pub mod stats;
pub mod verify;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A caller-supplied argument is out of range (bad rank, bad bounds).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// A numeric operation was queried outside its domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// Strategy or harness configuration is inconsistent.
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub use bench::{derive_seed, render, run as run_bench, Algorithm, BenchConfig, Format, ReportRow};
pub use generators::{generate, Family, SequenceSpec};
pub use partition::{PartitionBounds, PreparedLayout};
pub use riselect::{median3_sorted, riselect, RiselectConfig};
pub use rng::Rng;
pub use sampling::{f_of_n, phi_eps, place_sample, SampleParams, SampleStrategy};
pub use select::{
    pivot_ranks, select, select_nonrecursive_sort, sselect, PivotRanks, SelectConfig, SelectMode,
    SelectionResult,
};
pub use stats::{aggregate, gamma_avg, AggregateStats, RunStats};
pub use verify::{
    check_lemma_bounds, hyper_tail, sort_oracle, tail_grid_queries, LemmaReport, TailQuery,
};
