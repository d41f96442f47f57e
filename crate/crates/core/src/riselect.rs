//! Baseline quickselect with sorted median-of-3 pivoting.
//!
//! Each pass sorts the first, middle and last elements of the segment in
//! place, partitions around the middle one with a two-way scan, and keeps
//! the side holding the target. The three candidates are exchanged with
//! randomly chosen elements only when the segment fails to shrink fast
//! enough, which defeats adversarial orderings while leaving benign inputs
//! (sorted, organ-pipe) on the cheap deterministic path.

use std::cmp::Ordering::{Greater, Less};

use crate::rng::Rng;
use crate::select::merge_sort_counted;
use crate::stats::RunStats;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RiselectConfig {
    /// Randomize the pivot candidates when the surviving segment exceeds
    /// this fraction of the previous length.
    pub shrink_threshold: f64,
    /// Depth-bounded safety net: after far more partitions than a balanced
    /// run needs, sort the remaining segment outright. Off by default; the
    /// event is counted when it fires.
    pub fallback: bool,
}

impl Default for RiselectConfig {
    fn default() -> Self {
        RiselectConfig {
            shrink_threshold: 7.0 / 8.0,
            fallback: false,
        }
    }
}

/// Sorts positions `i < j < m` of `x` in place with at most three counted
/// comparisons.
pub fn median3_sorted<T: Ord>(x: &mut [T], i: usize, j: usize, m: usize, stats: &mut RunStats) {
    debug_assert!(i < j && j < m && m < x.len());
    if stats.cmp(&x[j], &x[i]) == Less {
        x.swap(i, j);
    }
    if stats.cmp(&x[m], &x[j]) == Less {
        x.swap(j, m);
        if stats.cmp(&x[j], &x[i]) == Less {
            x.swap(i, j);
        }
    }
}

/// Moves the `k`-th smallest (0-based, absolute) of `x[l..=r]` to position
/// `k`, with `x_i <= x_k` to its left and `x_i >= x_k` to its right.
/// Returns `k`.
pub fn riselect<T: Ord + Clone>(
    x: &mut [T],
    l: usize,
    r: usize,
    k: usize,
    config: &RiselectConfig,
    rng: &mut Rng,
    stats: &mut RunStats,
) -> Result<usize> {
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
    if !(config.shrink_threshold > 0.0 && config.shrink_threshold < 1.0) {
        return Err(Error::Config(format!(
            "shrink_threshold must lie in (0, 1), got {}",
            config.shrink_threshold
        )));
    }
    let mut l = l;
    let mut r = r;
    let mut prev_len = usize::MAX;
    // A balanced run needs about log2 of the length partitions; allow a
    // generous multiple before declaring the run degenerate.
    let depth_limit = 4 * (usize::BITS - (r - l + 1).leading_zeros()) as usize + 8;
    let mut depth = 0usize;
    loop {
        let m = r - l + 1;
        if m == 1 {
            return Ok(k);
        }
        if m == 2 {
            if stats.cmp(&x[l], &x[r]) == Greater {
                x.swap(l, r);
            }
            return Ok(k);
        }
        if config.fallback && depth > depth_limit {
            stats.fallback_sorts += 1;
            merge_sort_counted(&mut x[l..=r], stats);
            return Ok(k);
        }
        let mid = (l + r) / 2;
        if m as f64 > config.shrink_threshold * prev_len as f64 {
            stats.randomizations += 1;
            for pos in [l, mid, r] {
                let other = l + rng.rand_below((r - l) as u64) as usize;
                x.swap(pos, other);
            }
        }
        median3_sorted(x, l, mid, r, stats);
        stats.select_partitions += 1;
        stats.partitioned_length_sum += m as u64;
        prev_len = m;
        depth += 1;
        if m == 3 {
            return Ok(k);
        }
        // Stash the pivot next to the upper sentinel and scan inward; the
        // sorted candidates x_l <= pivot <= x_r serve as sentinels, so the
        // inner loops need no bounds tests.
        x.swap(mid, r - 1);
        let pivot = x[r - 1].clone();
        let mut i = l;
        let mut j = r - 1;
        loop {
            loop {
                i += 1;
                if stats.cmp(&x[i], &pivot) != Less {
                    break;
                }
            }
            loop {
                j -= 1;
                if stats.cmp(&x[j], &pivot) != Greater {
                    break;
                }
            }
            if i >= j {
                break;
            }
            x.swap(i, j);
        }
        x.swap(i, r - 1);
        if k == i {
            return Ok(k);
        }
        if k < i {
            r = i - 1;
        } else {
            l = i + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::Rng;
    use proptest::prelude::*;

    #[test]
    fn median3_all_permutations() {
        for perm in [
            [1, 2, 3],
            [1, 3, 2],
            [2, 1, 3],
            [2, 3, 1],
            [3, 1, 2],
            [3, 2, 1],
        ] {
            let mut x = perm;
            let mut st = RunStats::new();
            median3_sorted(&mut x, 0, 1, 2, &mut st);
            assert_eq!(x, [1, 2, 3], "from {perm:?}");
            assert!(st.comparisons <= 3);
        }
        let mut x = [1, 1, 1];
        let mut st = RunStats::new();
        median3_sorted(&mut x, 0, 1, 2, &mut st);
        assert_eq!(x, [1, 1, 1]);
    }

    #[test]
    fn singleton_costs_nothing() {
        let mut x = vec![1];
        let mut st = RunStats::new();
        assert_eq!(
            riselect(
                &mut x,
                0,
                0,
                0,
                &RiselectConfig::default(),
                &mut Rng::new(1),
                &mut st
            )
            .unwrap(),
            0
        );
        assert_eq!(st.comparisons, 0);
    }

    #[test]
    fn sorted_input_is_one_cheap_pass() {
        let n = 100_000usize;
        let mut x: Vec<i64> = (1..=n as i64).collect();
        let mut st = RunStats::new();
        let k = (n + 1) / 2 - 1; // lower median
        riselect(
            &mut x,
            0,
            n - 1,
            k,
            &RiselectConfig::default(),
            &mut Rng::new(1),
            &mut st,
        )
        .unwrap();
        assert_eq!(x[k], k as i64 + 1);
        // one partition pass over n elements, then tiny leftovers
        assert!(st.comparisons as f64 <= 1.10 * n as f64, "{}", st.comparisons);
        assert_eq!(st.randomizations, 0);
    }

    #[test]
    fn bad_arguments_rejected() {
        let mut x = vec![3, 1, 2];
        let mut st = RunStats::new();
        let cfg = RiselectConfig::default();
        assert!(riselect(&mut x, 0, 3, 1, &cfg, &mut Rng::new(1), &mut st).is_err());
        assert!(riselect(&mut x, 0, 2, 3, &cfg, &mut Rng::new(1), &mut st).is_err());
        let bad = RiselectConfig {
            shrink_threshold: 1.5,
            ..cfg
        };
        assert!(riselect(&mut x, 0, 2, 1, &bad, &mut Rng::new(1), &mut st).is_err());
    }

    #[test]
    fn fallback_fires_on_rigged_threshold() {
        // A threshold so tight that every pass "fails" to shrink still
        // selects correctly; with fallback on, long runs end in a sort.
        let cfg = RiselectConfig {
            shrink_threshold: 0.05,
            fallback: true,
        };
        let mut x: Vec<i64> = (0..4000).map(|i| (i * 37) % 101).collect();
        let mut sorted = x.clone();
        sorted.sort();
        let mut st = RunStats::new();
        riselect(&mut x, 0, 3999, 2000, &cfg, &mut Rng::new(5), &mut st).unwrap();
        assert_eq!(x[2000], sorted[2000]);
    }

    proptest! {
        #[test]
        fn matches_oracle(
            x in prop::collection::vec(0i64..10, 1..200),
            k in 0usize..200,
            seed in 0u64..1000,
        ) {
            let mut x = x;
            let r = x.len() - 1;
            let k = k % x.len();
            let mut sorted = x.clone();
            sorted.sort();
            let mut st = RunStats::new();
            riselect(&mut x, 0, r, k, &RiselectConfig::default(), &mut Rng::new(seed), &mut st).unwrap();
            prop_assert_eq!(&x[k], &sorted[k]);
            prop_assert!(x[..k].iter().all(|e| *e <= x[k]));
            prop_assert!(x[k + 1..].iter().all(|e| *e >= x[k]));
            let mut after = x.clone();
            after.sort();
            prop_assert_eq!(after, sorted);
        }
    }
}
