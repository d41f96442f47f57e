//! In-place ternary (three-block) and quintary (five-block) partitioning.
//!
//! The quintary scheme partitions a segment around two pivots `u < v` into
//! `x < u | x = u | u < x < v | x = v | x > v` in one pass, re-using the
//! already-classified pivot blocks produced by the recursive sample calls so
//! that no sample element is ever compared twice. The ternary scheme is the
//! single-pivot (`u = v`) degenerate case.
//!
//! All code here is 0-based. The index formulas below come from a 1-based
//! description over closed intervals `x[l:r]`; every formula used is a sum
//! of indices minus a sum of the same number of indices (plus a constant),
//! so the uniform shift by one cancels and the formulas carry over verbatim.
//! Closed 1-based ranges `x[a:b]` become half-open `[a-1, b)` exactly once,
//! in the `vector_swap` call sites.

use std::cmp::Ordering::{Equal, Greater, Less};

use crate::stats::RunStats;

/// Block delimiters of the five-way arrangement on a segment `[l, r]`:
/// `x_m < u` for `l <= m < a`, `x_m = u` for `a <= m < b`, `u < x_m < v`
/// for `b <= m <= c`, `x_m = v` for `c < m <= d`, `x_m > v` for
/// `d < m <= r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartitionBounds {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

/// The six-part arrangement handed to the quintary schemes:
/// `x < u` on `[l, l_bar)`, `x = u` on `[l_bar, p_bar)`, `u < x < v` on
/// `[p_bar, kv_minus)`, unclassified on `[kv_minus, q_bar]`, `x = v` on
/// `(q_bar, r_bar]`, `x > v` on `(r_bar, r]`.
///
/// When `u = v` the strictly-between part is empty (`p_bar = kv_minus`) and
/// the layout doubles as the ternary scheme's starting state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PreparedLayout {
    pub l: usize,
    pub r: usize,
    pub l_bar: usize,
    pub p_bar: usize,
    pub kv_minus: usize,
    pub q_bar: usize,
    pub r_bar: usize,
}

/// Exchanges the first `d := min(mid-a, end-mid)` elements of `x[a..end]`
/// with its last `d` elements, pairing `x[a+t]` with `x[end-d+t]`. This is
/// the block-swap primitive of the cleanup steps: it moves a block of length
/// `mid-a` past a block of length `end-mid` in `d` swaps instead of a
/// rotation. No comparisons are made.
pub fn vector_swap<T>(x: &mut [T], a: usize, mid: usize, end: usize) {
    assert!(a <= mid && mid <= end && end <= x.len());
    let d = (mid - a).min(end - mid);
    for t in 0..d {
        x.swap(a + t, end - d + t);
    }
}

/// Three-way partition of `x[l..=r]` around `v := x[k]` (steps A1-A5).
///
/// Returns `(a, d)` with `x_m < v` for `m < a`, `x_m = v` for
/// `a <= m <= d`, `x_m > v` for `m > d` within the segment. Step A1 plants
/// `v` at both ends of the scan region, so the inner loops need no bounds
/// tests.
pub fn ternary_partition<T: Ord + Clone>(
    x: &mut [T],
    l: usize,
    r: usize,
    k: usize,
    stats: &mut RunStats,
) -> (usize, usize) {
    assert!(l <= k && k <= r && r < x.len());
    if l == r {
        return (l, l);
    }
    // A1
    let v = x[k].clone();
    x.swap(l, k);
    let mut l_bar = l;
    let mut r_bar = r;
    let p = l + 1;
    let q = r - 1;
    match stats.cmp(&v, &x[r]) {
        Less => r_bar = q,
        Greater => {
            x.swap(l, r);
            l_bar = p;
        }
        Equal => {}
    }
    let (a, d) = ternary_scan(
        x,
        l_bar,
        r_bar,
        p as isize,
        q as isize,
        l as isize,
        r as isize,
        l as isize,
        &v,
        stats,
    );
    debug_assert!(check_ternary(x, l, r, a, d, &v));
    (a, d)
}

/// Ternary partition entered from a prepared layout with `u = v` (step A1
/// omitted): the equal block `[l_bar, p_bar)` plays the left sentinel and
/// `(q_bar, r_bar]` the right one.
pub fn ternary_from_layout<T: Ord>(
    x: &mut [T],
    lay: &PreparedLayout,
    v: &T,
    stats: &mut RunStats,
) -> (usize, usize) {
    debug_assert_eq!(lay.p_bar, lay.kv_minus);
    let (a, d) = ternary_scan(
        x,
        lay.l_bar,
        lay.r_bar,
        lay.p_bar as isize,
        lay.q_bar as isize,
        lay.p_bar as isize - 1,
        lay.q_bar as isize + 1,
        lay.l as isize,
        v,
        stats,
    );
    debug_assert!(check_ternary(x, lay.l, lay.r, a, d, v));
    (a, d)
}

/// Steps A2-A5 shared by both ternary entries. `floor` is the segment start:
/// the layout entry can lack a left sentinel when both the `x < u` prefix
/// and the equal block are empty (a clamped single pivot at the segment
/// minimum), so the down-scan stops unconditionally at `floor`; the scratch
/// entry always has a sentinel and never takes that branch.
#[allow(clippy::too_many_arguments)]
fn ternary_scan<T: Ord>(
    x: &mut [T],
    l_bar: usize,
    r_bar: usize,
    mut p: isize,
    mut q: isize,
    mut i: isize,
    mut j: isize,
    floor: isize,
    v: &T,
    stats: &mut RunStats,
) -> (usize, usize) {
    loop {
        // A2: increase i until x_i >= v.
        let ord_i = loop {
            i += 1;
            let o = stats.cmp(&x[i as usize], v);
            if o != Less {
                break o;
            }
        };
        // A3: decrease j until x_j <= v.
        let ord_j = loop {
            j -= 1;
            if j < floor {
                break Less;
            }
            let o = stats.cmp(&x[j as usize], v);
            if o != Greater {
                break o;
            }
        };
        // A4: exchange.
        if i < j {
            x.swap(i as usize, j as usize);
            // The orderings are already known from the scans: after the
            // exchange, x_i is the old x_j and x_j the old x_i.
            if ord_j == Equal {
                x.swap(i as usize, p as usize);
                p += 1;
            }
            if ord_i == Equal {
                x.swap(j as usize, q as usize);
                q -= 1;
            }
        } else {
            if i == j {
                // x_i = x_j = v
                i += 1;
                j -= 1;
            }
            break;
        }
    }
    // A5: cleanup.
    let a = l_bar as isize + j - p + 1;
    let d = r_bar as isize - q + i - 1;
    vector_swap(x, l_bar, p as usize, (j + 1) as usize);
    vector_swap(x, i as usize, (q + 1) as usize, r_bar + 1);
    (a as usize, d as usize)
}

/// Rearranges the post-recursion sample layout
/// `x<u | x=u | u<x<v | x=v | x>v` on `[l, r_s]` plus unclassified tail
/// `(r_s, r]` into the [`PreparedLayout`] arrangement, by two block swaps
/// and no comparisons. `p_bar` is one past the `x = u` block (for a reused
/// single pivot, pass the split point of the equal run).
#[allow(clippy::too_many_arguments)]
pub fn prepare_quintary<T>(
    x: &mut [T],
    l: usize,
    r: usize,
    r_s: usize,
    l_bar: usize,
    p_bar: usize,
    kv_minus: usize,
    kv_plus: usize,
) -> PreparedLayout {
    debug_assert!(l <= l_bar && l_bar <= p_bar && p_bar <= kv_minus);
    debug_assert!(kv_minus <= kv_plus && kv_plus <= r_s && r_s < r && r < x.len());
    let r_bar = r - r_s + kv_plus;
    let q_bar = (r_bar - kv_plus - 1) + kv_minus;
    vector_swap(x, kv_plus + 1, r_s + 1, r + 1);
    vector_swap(x, kv_minus, kv_plus + 1, r_bar + 1);
    PreparedLayout {
        l,
        r,
        l_bar,
        p_bar,
        kv_minus,
        q_bar,
        r_bar,
    }
}

/// Quintary partition, left-oriented variant (steps B1-B5): unclassified
/// elements are compared with `v` first, then with `u` only if smaller.
/// Used when the target rank lies in the left half. Requires `u < v`.
pub fn quintary_left<T: Ord>(
    x: &mut [T],
    lay: &PreparedLayout,
    u: &T,
    v: &T,
    stats: &mut RunStats,
) -> PartitionBounds {
    debug_assert!(u < v);
    let l_bar = lay.l_bar as isize;
    let r_bar = lay.r_bar as isize;
    let mut p_bar = lay.p_bar as isize;
    // B1
    let mut p = lay.kv_minus as isize;
    let mut q = lay.q_bar as isize;
    let mut i = p - 1;
    let mut j = q + 1;
    loop {
        // B2: increase i until x_i >= v, routing u <= x_i < v on the way.
        let ord_i_v = loop {
            i += 1;
            let ov = stats.cmp(&x[i as usize], v);
            if ov != Less {
                break ov;
            }
            match stats.cmp(&x[i as usize], u) {
                Less => continue,
                Greater => x.swap(i as usize, p as usize),
                Equal => {
                    x.swap(i as usize, p as usize);
                    x.swap(p as usize, p_bar as usize);
                    p_bar += 1;
                }
            }
            p += 1;
        };
        // B3: decrease j until x_j < v.
        loop {
            j -= 1;
            match stats.cmp(&x[j as usize], v) {
                Greater => continue,
                Equal => {
                    x.swap(j as usize, q as usize);
                    q -= 1;
                }
                Less => break,
            }
        }
        // B4: exchange.
        if i >= j {
            break;
        }
        x.swap(i as usize, j as usize);
        // New x_i is the old x_j, known < v; one fresh comparison with u.
        match stats.cmp(&x[i as usize], u) {
            Greater => {
                x.swap(i as usize, p as usize);
                p += 1;
            }
            Equal => {
                x.swap(i as usize, p as usize);
                x.swap(p as usize, p_bar as usize);
                p_bar += 1;
                p += 1;
            }
            Less => {}
        }
        // New x_j is the old x_i, whose ordering against v is recorded.
        if ord_i_v == Equal {
            x.swap(j as usize, q as usize);
            q -= 1;
        }
    }
    // B5: cleanup.
    let a = l_bar + i - p;
    let b = a + p_bar - l_bar;
    let d = r_bar - q + j;
    let c = d - r_bar + q;
    vector_swap(x, p_bar as usize, p as usize, (j + 1) as usize);
    vector_swap(x, lay.l_bar, p_bar as usize, b as usize);
    vector_swap(x, i as usize, (q + 1) as usize, lay.r_bar + 1);
    let bounds = PartitionBounds {
        a: a as usize,
        b: b as usize,
        c: c as usize,
        d: d as usize,
    };
    debug_assert!(check_quintary(x, lay.l, lay.r, &bounds, u, v));
    bounds
}

/// Quintary partition, right-oriented variant (steps C1-C5): the mirror
/// image of [`quintary_left`] — unclassified elements are compared with `u`
/// first. Used when the target rank lies in the right half. Requires
/// `u < v`.
pub fn quintary_right<T: Ord>(
    x: &mut [T],
    lay: &PreparedLayout,
    u: &T,
    v: &T,
    stats: &mut RunStats,
) -> PartitionBounds {
    debug_assert!(u < v);
    let l_bar = lay.l_bar as isize;
    let r_bar = lay.r_bar as isize;
    let mut q_bar = lay.q_bar as isize;
    // C1: move the strictly-between block up against the x = v block.
    let mut p = lay.p_bar as isize;
    let mut q = lay.q_bar as isize - lay.kv_minus as isize + lay.p_bar as isize;
    vector_swap(x, lay.p_bar, lay.kv_minus, lay.q_bar + 1);
    let mut i = p - 1;
    let mut j = q + 1;
    loop {
        // C2: increase i until x_i > u.
        loop {
            i += 1;
            match stats.cmp(&x[i as usize], u) {
                Less => continue,
                Equal => {
                    x.swap(i as usize, p as usize);
                    p += 1;
                }
                Greater => break,
            }
        }
        // C3: decrease j until x_j <= u, routing u < x_j <= v on the way.
        let ord_j_u = loop {
            j -= 1;
            let ou = stats.cmp(&x[j as usize], u);
            if ou != Greater {
                break ou;
            }
            match stats.cmp(&x[j as usize], v) {
                Greater => continue,
                Less => x.swap(j as usize, q as usize),
                Equal => {
                    x.swap(j as usize, q as usize);
                    x.swap(q as usize, q_bar as usize);
                    q_bar -= 1;
                }
            }
            q -= 1;
        };
        // C4: exchange.
        if i >= j {
            break;
        }
        x.swap(i as usize, j as usize);
        // New x_i is the old x_j, known <= u from the scan.
        if ord_j_u == Equal {
            x.swap(i as usize, p as usize);
            p += 1;
        }
        // New x_j is the old x_i, known > u; one fresh comparison with v.
        match stats.cmp(&x[j as usize], v) {
            Less => {
                x.swap(j as usize, q as usize);
                q -= 1;
            }
            Equal => {
                x.swap(j as usize, q as usize);
                x.swap(q as usize, q_bar as usize);
                q_bar -= 1;
                q -= 1;
            }
            Greater => {}
        }
    }
    // C5: cleanup.
    let a = l_bar + i - p;
    let b = a + p - l_bar;
    let d = r_bar - q + j;
    let c = d - r_bar + q_bar;
    vector_swap(x, lay.l_bar, p as usize, (j + 1) as usize);
    vector_swap(x, i as usize, (q + 1) as usize, (q_bar + 1) as usize);
    vector_swap(x, (c + 1) as usize, (q_bar + 1) as usize, lay.r_bar + 1);
    let bounds = PartitionBounds {
        a: a as usize,
        b: b as usize,
        c: c as usize,
        d: d as usize,
    };
    debug_assert!(check_quintary(x, lay.l, lay.r, &bounds, u, v));
    bounds
}

/// Linear-scan check of the three-block contract; used in debug assertions
/// and tests only.
pub(crate) fn check_ternary<T: Ord>(
    x: &[T],
    l: usize,
    r: usize,
    a: usize,
    d: usize,
    v: &T,
) -> bool {
    l <= a
        && a <= d
        && d <= r
        && x[l..a].iter().all(|e| e < v)
        && x[a..=d].iter().all(|e| e == v)
        && x[d + 1..=r].iter().all(|e| e > v)
}

/// Linear-scan check of the five-block contract; used in debug assertions
/// and tests only.
pub(crate) fn check_quintary<T: Ord>(
    x: &[T],
    l: usize,
    r: usize,
    pb: &PartitionBounds,
    u: &T,
    v: &T,
) -> bool {
    let PartitionBounds { a, b, c, d } = *pb;
    l <= a
        && a < b
        && b <= c + 1
        && c < d
        && d <= r
        && x[l..a].iter().all(|e| e < u)
        && x[a..b].iter().all(|e| e == u)
        && x[b..=c].iter().all(|e| u < e && e < v)
        && x[c + 1..=d].iter().all(|e| e == v)
        && x[d + 1..=r].iter().all(|e| e > v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sorted_copy<T: Ord + Clone>(x: &[T]) -> Vec<T> {
        let mut s = x.to_vec();
        s.sort();
        s
    }

    #[test]
    fn vector_swap_hand_traces() {
        let mut x = [1, 2, 9];
        vector_swap(&mut x, 0, 2, 3);
        assert_eq!(x, [9, 2, 1]);

        let mut x = [1, 2, 3, 4, 5];
        vector_swap(&mut x, 0, 2, 5);
        assert_eq!(x, [4, 5, 3, 1, 2]);

        // empty left block: no-op
        let mut x = [1, 2, 3, 4, 5];
        vector_swap(&mut x, 0, 0, 5);
        assert_eq!(x, [1, 2, 3, 4, 5]);
    }

    #[test]
    fn ternary_all_equal() {
        for k in 0..3 {
            let mut x = [2, 2, 2];
            let mut st = RunStats::new();
            let (a, d) = ternary_partition(&mut x, 0, 2, k, &mut st);
            assert_eq!((a, d), (0, 2));
        }
    }

    #[test]
    fn ternary_three_distinct() {
        let mut x = [3, 1, 2];
        let mut st = RunStats::new();
        let (a, d) = ternary_partition(&mut x, 0, 2, 2, &mut st);
        assert_eq!((a, d), (1, 1));
        assert_eq!(x, [1, 2, 3]);
    }

    #[test]
    fn ternary_onezero() {
        let mut x = [1, 0, 1, 0];
        let mut st = RunStats::new();
        let (a, d) = ternary_partition(&mut x, 0, 3, 1, &mut st);
        assert_eq!((a, d), (0, 1));
        assert_eq!(x, [0, 0, 1, 1]);
    }

    #[test]
    fn ternary_subsegment_untouched_outside() {
        let mut x = [9, 3, 1, 2, 0];
        let mut st = RunStats::new();
        let (a, d) = ternary_partition(&mut x, 1, 3, 3, &mut st);
        assert!(check_ternary(&x, 1, 3, a, d, &2));
        assert_eq!(x[0], 9);
        assert_eq!(x[4], 0);
    }

    /// Builds the six-part prepared arrangement directly from block
    /// contents, returning the array and its layout descriptor.
    fn build_layout(
        lt: &[i32],
        eq_u: &[i32],
        mid: &[i32],
        unknown: &[i32],
        eq_v: &[i32],
        gt: &[i32],
    ) -> (Vec<i32>, PreparedLayout) {
        let mut x = Vec::new();
        x.extend_from_slice(lt);
        x.extend_from_slice(eq_u);
        x.extend_from_slice(mid);
        x.extend_from_slice(unknown);
        x.extend_from_slice(eq_v);
        x.extend_from_slice(gt);
        let l_bar = lt.len();
        let p_bar = l_bar + eq_u.len();
        let kv_minus = p_bar + mid.len();
        let q_bar = kv_minus + unknown.len() - 1; // may wrap to kv_minus-1 when empty
        let r_bar = kv_minus + unknown.len() + eq_v.len() - 1;
        let lay = PreparedLayout {
            l: 0,
            r: x.len() - 1,
            l_bar,
            p_bar,
            kv_minus,
            q_bar,
            r_bar,
        };
        (x, lay)
    }

    #[test]
    fn quintary_left_example() {
        let (mut x, lay) = build_layout(&[], &[2], &[3], &[5, 2, 4, 1, 3, 2, 4], &[4], &[]);
        let mut st = RunStats::new();
        let before = sorted_copy(&x);
        let pb = quintary_left(&mut x, &lay, &2, &4, &mut st);
        assert!(check_quintary(&x, 0, 9, &pb, &2, &4));
        assert_eq!(sorted_copy(&x), before);
        assert_eq!((pb.a, pb.b, pb.c, pb.d), (1, 4, 5, 8));
        assert_eq!(x, [1, 2, 2, 2, 3, 3, 4, 4, 4, 5]);
    }

    #[test]
    fn quintary_right_same_blocks() {
        let (mut x, lay) = build_layout(&[], &[2], &[3], &[5, 2, 4, 1, 3, 2, 4], &[4], &[]);
        let mut st = RunStats::new();
        let pb = quintary_right(&mut x, &lay, &2, &4, &mut st);
        assert!(check_quintary(&x, 0, 9, &pb, &2, &4));
        assert_eq!((pb.a, pb.b, pb.c, pb.d), (1, 4, 5, 8));
    }

    #[test]
    fn quintary_empty_unknown_region() {
        let (mut x, lay) = build_layout(&[1], &[2, 2], &[3], &[], &[4], &[5, 6]);
        let mut st = RunStats::new();
        let pb = quintary_left(&mut x, &lay, &2, &4, &mut st);
        assert!(check_quintary(&x, 0, 6, &pb, &2, &4));
        let (mut x, lay) = build_layout(&[1], &[2, 2], &[3], &[], &[4], &[5, 6]);
        let pb = quintary_right(&mut x, &lay, &2, &4, &mut st);
        assert!(check_quintary(&x, 0, 6, &pb, &2, &4));
    }

    #[test]
    fn prepare_quintary_example() {
        // (x<u)(x=u)(u<x<v)(x=v)(x>v) on the sample prefix, then the
        // unclassified tail.
        let mut x = vec![1, 2, 2, 3, 4, 4, 5, 6, 9, 0, 7, 3];
        //              <u  ==u==  mid ==v== >v.....  tail......
        let lay = prepare_quintary(&mut x, 0, 11, 7, 1, 3, 4, 5);
        assert_eq!(lay.l_bar, 1);
        assert_eq!(lay.p_bar, 3);
        assert_eq!(lay.kv_minus, 4);
        assert_eq!(lay.r_bar, 11 - 7 + 5);
        assert_eq!(lay.q_bar, lay.r_bar - 5 + 4 - 1);
        // blocks around the unknown region
        assert!(x[..1].iter().all(|&e| e < 2));
        assert!(x[1..3].iter().all(|&e| e == 2));
        assert!(x[3..4].iter().all(|&e| e == 3));
        assert!(x[lay.q_bar + 1..=lay.r_bar].iter().all(|&e| e == 4));
        assert!(x[lay.r_bar + 1..].iter().all(|&e| e > 4));
        let mut unk = x[lay.kv_minus..=lay.q_bar].to_vec();
        unk.sort();
        assert_eq!(unk, [0, 3, 7, 9]);
    }

    #[test]
    fn ternary_from_layout_reused_pivot() {
        // u = v = 2: the equal run is split at p_bar, third part empty.
        let (mut x, lay) = build_layout(&[1], &[2], &[], &[0, 2, 3, 2, 1], &[2], &[4]);
        let mut st = RunStats::new();
        let (a, d) = ternary_from_layout(&mut x, &lay, &2, &mut st);
        assert!(check_ternary(&x, 0, 8, a, d, &2));
        assert_eq!((a, d), (3, 6));
    }

    #[test]
    fn ternary_from_layout_no_left_sentinel() {
        // Both the x<u prefix and the equal block are empty: the guard in
        // the down-scan must stop at the segment start.
        let (mut x, lay) = build_layout(&[], &[], &[], &[5, 3, 4], &[2], &[]);
        let mut st = RunStats::new();
        let (a, d) = ternary_from_layout(&mut x, &lay, &2, &mut st);
        assert!(check_ternary(&x, 0, 3, a, d, &2));
        assert_eq!((a, d), (0, 0));
    }

    fn block(range: std::ops::RangeInclusive<i32>, max_len: usize) -> BoxedStrategy<Vec<i32>> {
        prop::collection::vec(range, 0..=max_len).boxed()
    }

    proptest! {
        #[test]
        fn ternary_fuzz(mut x in prop::collection::vec(0i32..10, 1..200), k in 0usize..200) {
            let r = x.len() - 1;
            let k = k % x.len();
            let v = x[k];
            let before = sorted_copy(&x);
            let mut st = RunStats::new();
            let (a, d) = ternary_partition(&mut x, 0, r, k, &mut st);
            prop_assert!(check_ternary(&x, 0, r, a, d, &v));
            prop_assert_eq!(sorted_copy(&x), before);
            // one comparison per scan probe plus the sentinel test
            prop_assert!(st.comparisons <= x.len() as u64 + 2);
        }

        #[test]
        fn quintary_fuzz(
            lt in block(0..=9, 8),
            eq_u in block(10..=10, 8),
            mid in block(11..=19, 8),
            unknown in block(0..=30, 60),
            eq_v in block(20..=20, 8),
            gt in block(21..=30, 8),
            right in any::<bool>(),
        ) {
            let mut eq_u = eq_u;
            let mut eq_v = eq_v;
            eq_u.push(10); // pivot blocks are never empty
            eq_v.push(20);
            let (mut x, lay) = build_layout(&lt, &eq_u, &mid, &unknown, &eq_v, &gt);
            let before = sorted_copy(&x);
            let mut st = RunStats::new();
            let pb = if right {
                quintary_right(&mut x, &lay, &10, &20, &mut st)
            } else {
                quintary_left(&mut x, &lay, &10, &20, &mut st)
            };
            prop_assert!(check_quintary(&x, lay.l, lay.r, &pb, &10, &20));
            prop_assert_eq!(sorted_copy(&x), before);
            // every unknown element costs at most 2 comparisons, plus the
            // occasional re-probe where the scans meet
            prop_assert!(st.comparisons <= 2 * unknown.len() as u64 + 4);
        }

        #[test]
        fn prepare_then_partition_fuzz(
            lt in block(0..=9, 6),
            eq_u in block(10..=10, 4),
            mid in block(11..=19, 6),
            eq_v in block(20..=20, 4),
            gt in block(21..=30, 6),
            tail in block(0..=30, 40),
            right in any::<bool>(),
        ) {
            let mut eq_u = eq_u;
            let mut eq_v = eq_v;
            let mut tail = tail;
            eq_u.push(10);
            eq_v.push(20);
            tail.push(15); // the sample is a strict prefix: tail nonempty
            // sample-order arrangement: <u, =u, mid, =v, >v, then the tail
            let mut x = Vec::new();
            x.extend_from_slice(&lt);
            x.extend_from_slice(&eq_u);
            x.extend_from_slice(&mid);
            x.extend_from_slice(&eq_v);
            x.extend_from_slice(&gt);
            let r_s = x.len() - 1;
            x.extend_from_slice(&tail);
            let r = x.len() - 1;
            let l_bar = lt.len();
            let p_bar = l_bar + eq_u.len();
            let kv_minus = p_bar + mid.len();
            let kv_plus = kv_minus + eq_v.len() - 1;
            let before = sorted_copy(&x);

            let lay = prepare_quintary(&mut x, 0, r, r_s, l_bar, p_bar, kv_minus, kv_plus);
            prop_assert_eq!(sorted_copy(&x), before.clone());
            prop_assert!(x[..lay.l_bar].iter().all(|&e| e < 10));
            prop_assert!(x[lay.l_bar..lay.p_bar].iter().all(|&e| e == 10));
            prop_assert!(x[lay.p_bar..lay.kv_minus].iter().all(|&e| 10 < e && e < 20));
            prop_assert!(x[lay.q_bar + 1..=lay.r_bar].iter().all(|&e| e == 20));
            prop_assert!(x[lay.r_bar + 1..].iter().all(|&e| e > 20));
            prop_assert_eq!(
                sorted_copy(&x[lay.kv_minus..=lay.q_bar]),
                sorted_copy(&tail)
            );

            let mut st = RunStats::new();
            let pb = if right {
                quintary_right(&mut x, &lay, &10, &20, &mut st)
            } else {
                quintary_left(&mut x, &lay, &10, &20, &mut st)
            };
            prop_assert!(check_quintary(&x, 0, r, &pb, &10, &20));
            prop_assert_eq!(sorted_copy(&x), before);
        }

        #[test]
        fn left_right_same_bounds(
            lt in block(0..=9, 6),
            eq_u in block(10..=10, 4),
            mid in block(11..=19, 6),
            unknown in block(0..=30, 40),
            eq_v in block(20..=20, 4),
            gt in block(21..=30, 6),
        ) {
            let mut eq_u = eq_u;
            let mut eq_v = eq_v;
            eq_u.push(10);
            eq_v.push(20);
            let (mut xl, lay) = build_layout(&lt, &eq_u, &mid, &unknown, &eq_v, &gt);
            let mut xr = xl.clone();
            let mut st = RunStats::new();
            let pl = quintary_left(&mut xl, &lay, &10, &20, &mut st);
            let pr = quintary_right(&mut xr, &lay, &10, &20, &mut st);
            prop_assert_eq!(pl, pr);
            // identical block boundaries and, per block, identical contents
            // up to order
            prop_assert_eq!(sorted_copy(&xl[..pl.a]), sorted_copy(&xr[..pl.a]));
            prop_assert_eq!(sorted_copy(&xl[pl.b..=pl.c]), sorted_copy(&xr[pl.b..=pl.c]));
            prop_assert_eq!(sorted_copy(&xl[pl.d + 1..]), sorted_copy(&xr[pl.d + 1..]));
        }
    }
}
