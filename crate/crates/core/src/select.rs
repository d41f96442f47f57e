//! The sampling-based selection algorithm and its variants.
//!
//! One pass on a segment of length `m`: draw a random sample of size `s`,
//! recursively select two pivots `u <= v` from the sample whose ranks
//! bracket the target rank by a gap `g`, partition the whole segment around
//! both pivots in a single quintary sweep, and iterate on the surviving
//! block (usually of size about `4gm/s`). Segments at or below `n_cut` are
//! finished by [`sselect`], a plain ternary-partition loop pivoting on
//! `x_k`.

use crate::partition::{
    prepare_quintary, quintary_left, quintary_right, ternary_from_layout, ternary_partition,
};
use crate::rng::Rng;
use crate::sampling::{ceil_guard, place_sample, SampleParams};
use crate::stats::RunStats;
use crate::{Error, Result, SampleStrategy};

/// How the main routine realizes the per-pass pivot search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SelectMode {
    /// Pivots by true recursion into the sample; the surviving block loops.
    Recursive,
    /// Pivots by sorting the sample; the surviving block is sorted outright
    /// (re-sampling first if the pass failed to shrink enough).
    NonrecursiveSort,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SelectConfig {
    pub strategy: SampleStrategy,
    /// Segments of at most this length go to [`sselect`].
    pub n_cut: usize,
    pub mode: SelectMode,
    /// Collapse to a single pivot when the target rank is within `gm/s` of
    /// either end of the segment.
    pub single_pivot_clamp: bool,
}

impl Default for SelectConfig {
    fn default() -> Self {
        SelectConfig {
            strategy: SampleStrategy::default(),
            n_cut: 600,
            mode: SelectMode::Recursive,
            single_pivot_clamp: true,
        }
    }
}

/// The selected value together with its equal range: after a call,
/// `x_m < value` for `l <= m < k_minus`, `x_m = value` for
/// `k_minus <= m <= k_plus`, and `x_m > value` for `k_plus < m <= r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SelectionResult<T> {
    pub k_minus: usize,
    pub k_plus: usize,
    pub value: T,
}

/// Pivot ranks for one pass, all 1-based and segment-relative: `i_u`/`i_v`
/// index into the sample (which occupies the segment prefix, so they are
/// also the pivot positions within the segment), `k_l`/`k_r` bound the
/// target's possible rank after a successful pass.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PivotRanks {
    pub i_u: usize,
    pub i_v: usize,
    pub k_l: usize,
    pub k_r: usize,
}

/// Computes the sample ranks of the two pivots for target rank `i` in a
/// segment of length `m` with sample size `s` and gap `g`:
/// `i_u = max(ceil(is/m - g), 1)`, `i_v = min(ceil(is/m + g), s)`. With
/// `single_pivot_clamp`, a target within `gm/s` of either end collapses
/// both ranks onto the inner one. Also reports the bounding ranks
/// `k_l = max(ceil(i - 2gm/s), 1)` and `k_r = min(ceil(i + 2gm/s), m)`.
pub fn pivot_ranks(i: usize, m: usize, s: usize, g: f64, single_pivot_clamp: bool) -> PivotRanks {
    assert!(1 <= i && i <= m && 1 <= s && s < m && g > 0.0);
    let (ifl, mf, sf) = (i as f64, m as f64, s as f64);
    let t = ifl * sf / mf;
    let mut i_u = ceil_guard(t - g).max(1.0) as usize;
    let mut i_v = (ceil_guard(t + g).min(sf) as usize).min(s);
    let gms = g * mf / sf;
    if single_pivot_clamp {
        if ifl <= gms {
            i_u = i_v;
        }
        if mf < ifl + gms {
            i_v = i_u;
        }
    }
    let k_l = ceil_guard(ifl - 2.0 * gms).max(1.0) as usize;
    let k_r = (ceil_guard(ifl + 2.0 * gms).min(mf) as usize).min(m);
    PivotRanks { i_u, i_v, k_l, k_r }
}

fn validate<T>(x: &[T], l: usize, r: usize, k: usize) -> Result<()> {
    if r >= x.len() || l > r {
        return Err(Error::InvalidArgument(format!(
            "segment [{l}, {r}] invalid for array of length {}",
            x.len()
        )));
    }
    if k < l || k > r {
        return Err(Error::InvalidArgument(format!(
            "rank {k} outside segment [{l}, {r}]"
        )));
    }
    Ok(())
}

/// Selects the `k`-th smallest (0-based, absolute) of `x[l..=r]`, permuting
/// the segment so that the answer's equal range ends up at
/// `[k_minus, k_plus]` with everything smaller to its left and everything
/// larger to its right.
pub fn select<T: Ord + Clone>(
    x: &mut [T],
    l: usize,
    r: usize,
    k: usize,
    config: &SelectConfig,
    rng: &mut Rng,
    stats: &mut RunStats,
) -> Result<SelectionResult<T>> {
    validate(x, l, r, k)?;
    if config.n_cut < 1 {
        return Err(Error::Config("n_cut must be at least 1".into()));
    }
    let res = match config.mode {
        SelectMode::Recursive => select_inner(x, l, r, k, config, rng, stats),
        SelectMode::NonrecursiveSort => nonrec_inner(x, l, r, k, config, rng, stats),
    };
    debug_assert!(check_selection(x, l, r, k, &res));
    Ok(res)
}

/// [`select`] with the sorting-based pivot search forced on.
pub fn select_nonrecursive_sort<T: Ord + Clone>(
    x: &mut [T],
    l: usize,
    r: usize,
    k: usize,
    config: &SelectConfig,
    rng: &mut Rng,
    stats: &mut RunStats,
) -> Result<SelectionResult<T>> {
    let config = SelectConfig {
        mode: SelectMode::NonrecursiveSort,
        ..*config
    };
    select(x, l, r, k, &config, rng, stats)
}

/// Small-segment selection: a loop of ternary partitions pivoting on the
/// element currently at the target position.
pub fn sselect<T: Ord + Clone>(
    x: &mut [T],
    l: usize,
    r: usize,
    k: usize,
    stats: &mut RunStats,
) -> Result<SelectionResult<T>> {
    validate(x, l, r, k)?;
    stats.sselect_calls += 1;
    let (a, d) = sselect_loop(x, l, r, k, stats);
    let res = result_at(x, k, a, d);
    debug_assert!(check_selection(x, l, r, k, &res));
    Ok(res)
}

fn result_at<T: Clone>(x: &[T], k: usize, k_minus: usize, k_plus: usize) -> SelectionResult<T> {
    SelectionResult {
        k_minus,
        k_plus,
        value: x[k].clone(),
    }
}

fn sselect_loop<T: Ord + Clone>(
    x: &mut [T],
    mut l: usize,
    mut r: usize,
    k: usize,
    stats: &mut RunStats,
) -> (usize, usize) {
    loop {
        if l == r {
            return (k, k);
        }
        stats.sselect_partitions += 1;
        stats.partitioned_length_sum += (r - l + 1) as u64;
        let (a, d) = ternary_partition(x, l, r, k, stats);
        if a <= k && k <= d {
            return (a, d);
        }
        if k < a {
            r = a - 1;
        } else {
            l = d + 1;
        }
    }
}

fn select_inner<T: Ord + Clone>(
    x: &mut [T],
    mut l: usize,
    mut r: usize,
    k: usize,
    cfg: &SelectConfig,
    rng: &mut Rng,
    stats: &mut RunStats,
) -> SelectionResult<T> {
    loop {
        let m = r - l + 1;
        if m == 1 {
            return result_at(x, k, k, k);
        }
        if m <= cfg.n_cut {
            stats.sselect_calls += 1;
            let (a, d) = sselect_loop(x, l, r, k, stats);
            return result_at(x, k, a, d);
        }
        // Step 2: sample into the segment prefix.
        let SampleParams { s, g } = cfg.strategy.sample_params(m);
        stats.sample_passes += 1;
        stats.sample_size_sum += s as u64;
        place_sample(&mut x[l..=r], s, rng).expect("sample size fits the segment");
        let r_s = l + s - 1;
        // Step 3: pivots from the sample by recursion.
        let pr = pivot_ranks(k - l + 1, m, s, g, cfg.single_pivot_clamp);
        let k_u = l + pr.i_u - 1;
        let k_v = l + pr.i_v - 1;
        let ru = select_inner(x, l, r_s, k_u, cfg, rng, stats);
        if ru.k_plus >= k_v {
            // Both ranks fall in one equal run: a single pivot v = u,
            // with the run split at k_v so the layout stays six-part.
            let lay = prepare_quintary(x, l, r, r_s, ru.k_minus, k_v, k_v, ru.k_plus);
            stats.select_partitions += 1;
            stats.partitioned_length_sum += m as u64;
            let (a, d) = ternary_from_layout(x, &lay, &ru.value, stats);
            if a <= k && k <= d {
                return result_at(x, k, a, d);
            }
            if k < a {
                r = a - 1;
            } else {
                l = d + 1;
            }
        } else {
            let rv = select_inner(x, ru.k_plus + 1, r_s, k_v, cfg, rng, stats);
            let lay = prepare_quintary(x, l, r, r_s, ru.k_minus, ru.k_plus + 1, rv.k_minus, rv.k_plus);
            stats.select_partitions += 1;
            stats.partitioned_length_sum += m as u64;
            // Step 4: quintary pass, oriented by which half holds the target.
            let pb = if k < (l + r) / 2 {
                quintary_left(x, &lay, &ru.value, &rv.value, stats)
            } else {
                quintary_right(x, &lay, &ru.value, &rv.value, stats)
            };
            // Steps 5-6: done if the target sits in a pivot block, else
            // shrink to the block containing it.
            if pb.a <= k && k < pb.b {
                return result_at(x, k, pb.a, pb.b - 1);
            }
            if pb.c < k && k <= pb.d {
                return result_at(x, k, pb.c + 1, pb.d);
            }
            if k < pb.a {
                r = pb.a - 1;
            } else if k > pb.d {
                l = pb.d + 1;
            } else {
                l = pb.b;
                r = pb.c;
            }
        }
    }
}

fn nonrec_inner<T: Ord + Clone>(
    x: &mut [T],
    mut l: usize,
    mut r: usize,
    k: usize,
    cfg: &SelectConfig,
    rng: &mut Rng,
    stats: &mut RunStats,
) -> SelectionResult<T> {
    let mut resamples = 0usize;
    loop {
        let m = r - l + 1;
        if m == 1 {
            return result_at(x, k, k, k);
        }
        if m <= cfg.n_cut {
            stats.sselect_calls += 1;
            let (a, d) = sselect_loop(x, l, r, k, stats);
            return result_at(x, k, a, d);
        }
        let SampleParams { s, g } = cfg.strategy.sample_params(m);
        stats.sample_passes += 1;
        stats.sample_size_sum += s as u64;
        place_sample(&mut x[l..=r], s, rng).expect("sample size fits the segment");
        let r_s = l + s - 1;
        // Pivot search by sorting the sample.
        merge_sort_counted(&mut x[l..=r_s], stats);
        let pr = pivot_ranks(k - l + 1, m, s, g, cfg.single_pivot_clamp);
        let k_u = l + pr.i_u - 1;
        let k_v = l + pr.i_v - 1;
        let (ku_minus, ku_plus) = equal_range_scan(x, l, r_s, k_u, stats);
        if ku_plus >= k_v {
            let v = x[k_u].clone();
            let lay = prepare_quintary(x, l, r, r_s, ku_minus, k_v, k_v, ku_plus);
            stats.select_partitions += 1;
            stats.partitioned_length_sum += m as u64;
            let (a, d) = ternary_from_layout(x, &lay, &v, stats);
            if a <= k && k <= d {
                return result_at(x, k, a, d);
            }
            if k < a {
                r = a - 1;
            } else {
                l = d + 1;
            }
        } else {
            let (kv_minus, kv_plus) = equal_range_scan(x, l, r_s, k_v, stats);
            let u = x[k_u].clone();
            let v = x[k_v].clone();
            let lay = prepare_quintary(x, l, r, r_s, ku_minus, ku_plus + 1, kv_minus, kv_plus);
            stats.select_partitions += 1;
            stats.partitioned_length_sum += m as u64;
            let pb = if k < (l + r) / 2 {
                quintary_left(x, &lay, &u, &v, stats)
            } else {
                quintary_right(x, &lay, &u, &v, stats)
            };
            if pb.a <= k && k < pb.b {
                return result_at(x, k, pb.a, pb.b - 1);
            }
            if pb.c < k && k <= pb.d {
                return result_at(x, k, pb.c + 1, pb.d);
            }
            if k < pb.a {
                r = pb.a - 1;
            } else if k > pb.d {
                l = pb.d + 1;
            } else {
                l = pb.b;
                r = pb.c;
            }
        }
        // The pass failed to pin the target. If it shrank the segment
        // enough, finish by sorting; otherwise take a fresh sample.
        let n_hat = (r - l + 1) as f64;
        if n_hat >= 4.0 * g * m as f64 / s as f64 {
            if resamples < 20 {
                resamples += 1;
                stats.resamples += 1;
                continue;
            }
            // Pathologically unlucky (or a broken generator): sort anyway.
            stats.fallback_sorts += 1;
        }
        merge_sort_counted(&mut x[l..=r], stats);
        let (a, d) = equal_range_scan(x, l, r, k, stats);
        return result_at(x, k, a, d);
    }
}

/// Expands the maximal equal range around position `pos` of a sorted
/// region `x[lo..=hi]`, one counted comparison per probe.
fn equal_range_scan<T: Ord>(
    x: &[T],
    lo: usize,
    hi: usize,
    pos: usize,
    stats: &mut RunStats,
) -> (usize, usize) {
    let mut a = pos;
    while a > lo && stats.cmp(&x[a - 1], &x[pos]) == std::cmp::Ordering::Equal {
        a -= 1;
    }
    let mut d = pos;
    while d < hi && stats.cmp(&x[d + 1], &x[pos]) == std::cmp::Ordering::Equal {
        d += 1;
    }
    (a, d)
}

/// Stable top-down merge sort with counted comparisons (at most
/// `n log2 n`, i.e. sort constant `1/ln 2` in natural-log units).
pub(crate) fn merge_sort_counted<T: Ord + Clone>(x: &mut [T], stats: &mut RunStats) {
    let n = x.len();
    if n <= 1 {
        return;
    }
    let mid = n / 2;
    merge_sort_counted(&mut x[..mid], stats);
    merge_sort_counted(&mut x[mid..], stats);
    let left = x[..mid].to_vec();
    let right = x[mid..].to_vec();
    let (mut i, mut j) = (0usize, 0usize);
    for slot in x.iter_mut() {
        if i < left.len()
            && (j >= right.len() || stats.cmp(&left[i], &right[j]) != std::cmp::Ordering::Greater)
        {
            *slot = left[i].clone();
            i += 1;
        } else {
            *slot = right[j].clone();
            j += 1;
        }
    }
}

/// Linear-scan check of the [`SelectionResult`] contract; debug/test only.
pub(crate) fn check_selection<T: Ord>(
    x: &[T],
    l: usize,
    r: usize,
    k: usize,
    res: &SelectionResult<T>,
) -> bool {
    l <= res.k_minus
        && res.k_minus <= k
        && k <= res.k_plus
        && res.k_plus <= r
        && x[l..res.k_minus].iter().all(|e| *e < res.value)
        && x[res.k_minus..=res.k_plus].iter().all(|e| *e == res.value)
        && x[res.k_plus + 1..=r].iter().all(|e| *e > res.value)
}
