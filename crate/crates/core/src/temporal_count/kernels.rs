//! Per-(ordering, orientation) triangle counting kernels.
//!
//! Each kernel counts the triples `(t1, t2, t3) in S1 x S2 x S3` with
//! `t1 < t2 < t3`, `t2 - t1 <= d12`, `t3 - t2 <= d23`, `t3 - t1 <= d13`,
//! where `Si` is the ascending timestamp sequence at time position `i`.
//! Ties never count: equal timestamps cannot appear inside one temporal
//! triangle, so every window encoding time order has a strict endpoint
//! while plain gap bounds stay closed.
//!
//! The sequence on the `{v,w}` pair is never scanned linearly; it is only
//! touched through binary searches and the two prefix arrays, which keeps
//! the per-triangle work proportional to the multiplicities on the two
//! pairs incident to the source vertex.

use super::classify::{PairRole, TemporalOrdering};
use super::prefix::{PrefixCounts, PrefixKind};
use super::windows::{add_delta, count_gt, count_le, count_lt, sub_delta};
use super::{DeltaTriple, Orientation};
use crate::temporal_graph::PairIndex;
use crate::triangle_enum::SourceTriangle;
use crate::VertexId;

/// Reusable per-worker buffers for the kernels, plus instrumentation.
///
/// The two prefix buffers grow to the largest multiplicity encountered and
/// are reused across triangles and all 48 ordering/orientation cells.
#[derive(Debug, Default)]
pub struct CountScratch {
    prefix_a: PrefixCounts,
    prefix_b: PrefixCounts,
    /// Temporal edges touched by linear scans (prefix builds and edge
    /// loops); binary searches are not counted.
    pub scan_touches: u64,
}

impl CountScratch {
    pub fn new() -> CountScratch {
        CountScratch::default()
    }
}

/// The three timestamp sequences of one (triangle, ordering, orientation)
/// cell: position i holds the sequence of the pair `ordering.role_at(i)`
/// taken in the direction the orientation assigns to that pair. Missing
/// pairs resolve to empty sequences.
pub fn resolve_sequences<'a>(
    tri: &SourceTriangle,
    ordering: TemporalOrdering,
    orientation: Orientation,
    index: &'a PairIndex,
) -> [&'a [i64]; 3] {
    [1u8, 2, 3].map(|pos| {
        let role = ordering.role_at(pos);
        let (lo, hi) = role_endpoints(tri, role);
        let (src, dst) = if orientation.reversed(role) {
            (hi, lo)
        } else {
            (lo, hi)
        };
        index.sequence(src, dst)
    })
}

fn role_endpoints(tri: &SourceTriangle, role: PairRole) -> (VertexId, VertexId) {
    match role {
        PairRole::UV => (tri.u, tri.v),
        PairRole::UW => (tri.u, tri.w),
        PairRole::VW => (tri.v, tri.w),
    }
}

/// Counting kernel for orderings 1-2 (`{v,w}` in time position 3).
pub fn count_vw3(
    tri: &SourceTriangle,
    ordering: TemporalOrdering,
    orientation: Orientation,
    delta: DeltaTriple,
    index: &PairIndex,
    scratch: &mut CountScratch,
) -> u64 {
    debug_assert_eq!(ordering.vw_position(), 3);
    let [s1, s2, s3] = resolve_sequences(tri, ordering, orientation, index);
    count_vw3_seqs(s1, s2, s3, delta, scratch)
}

/// Counting kernel for orderings 3-4 (`{v,w}` in time position 2).
pub fn count_vw2(
    tri: &SourceTriangle,
    ordering: TemporalOrdering,
    orientation: Orientation,
    delta: DeltaTriple,
    index: &PairIndex,
    scratch: &mut CountScratch,
) -> u64 {
    debug_assert_eq!(ordering.vw_position(), 2);
    let [s1, s2, s3] = resolve_sequences(tri, ordering, orientation, index);
    count_vw2_seqs(s1, s2, s3, delta, scratch)
}

/// Counting kernel for orderings 5-6 (`{v,w}` in time position 1).
pub fn count_vw1(
    tri: &SourceTriangle,
    ordering: TemporalOrdering,
    orientation: Orientation,
    delta: DeltaTriple,
    index: &PairIndex,
    scratch: &mut CountScratch,
) -> u64 {
    debug_assert_eq!(ordering.vw_position(), 1);
    let [s1, s2, s3] = resolve_sequences(tri, ordering, orientation, index);
    count_vw1_seqs(s1, s2, s3, delta, scratch)
}

/// `{v,w}` sequence is `s3`: enumerate `s2`, cumulate over `s1`.
///
/// Per `t2`, the eligible `t1` lie in `[t2 - d12, t2)`. Those with
/// `t1 <= t2 - (d13 - d23)` bound `t3` by `t1 + d13`, handled by the
/// `[t, t+d13]` and `[t, inf)` prefix difference plus a `(t2, inf)`
/// correction; the rest bound `t3` by `t2 + d23`, a per-`t2` constant.
pub fn count_vw3_seqs(
    s1: &[i64],
    s2: &[i64],
    s3: &[i64],
    delta: DeltaTriple,
    scratch: &mut CountScratch,
) -> u64 {
    if s1.is_empty() || s2.is_empty() || s3.is_empty() {
        return 0;
    }
    let delta = delta.normalized();
    scratch
        .prefix_a
        .rebuild(s1, s3, PrefixKind::LeadClosed(delta.d13));
    scratch.prefix_b.rebuild(s1, s3, PrefixKind::FromHere);
    scratch.scan_touches += 2 * s1.len() as u64 + s2.len() as u64;
    let theta_gap = delta.d13 - delta.d23;
    let mut acc: i128 = 0;
    for &t2 in s2 {
        let lo = count_lt(s1, sub_delta(t2, delta.d12));
        let hi = count_lt(s1, t2);
        if lo >= hi {
            continue;
        }
        let mid = count_le(s1, sub_delta(t2, theta_gap)).min(hi);
        debug_assert!(mid >= lo);
        let after_t2 = count_gt(s3, t2) as i128;
        let within_d23 = (count_le(s3, add_delta(t2, delta.d23)) - count_le(s3, t2)) as i128;
        let cell = scratch.prefix_a.range(lo, mid) as i128
            - scratch.prefix_b.range(lo, mid) as i128
            + (mid - lo) as i128 * after_t2
            + (hi - mid) as i128 * within_d23;
        debug_assert!(cell >= 0);
        acc += cell;
    }
    debug_assert!(acc >= 0);
    acc as u64
}

/// `{v,w}` sequence is `s2`: enumerate `s1`, cumulate over `s3` into `s2`
/// counts.
///
/// Per `t1`, the eligible `t3` in `(t1, t1 + d13]` split at
/// `t1 + min(d12, d23)` and `t1 + max(d12, d23)`: below the first
/// threshold `t2` ranges over `(t1, t3)`; between them the count depends
/// only on whichever of d12/d23 is smaller; above, `t2` ranges over
/// `[t3 - d23, t1 + d12]`.
pub fn count_vw2_seqs(
    s1: &[i64],
    s2: &[i64],
    s3: &[i64],
    delta: DeltaTriple,
    scratch: &mut CountScratch,
) -> u64 {
    if s1.is_empty() || s2.is_empty() || s3.is_empty() {
        return 0;
    }
    let delta = delta.normalized();
    scratch.prefix_a.rebuild(s3, s2, PrefixKind::Before);
    scratch
        .prefix_b
        .rebuild(s3, s2, PrefixKind::TrailOpen(delta.d23));
    scratch.scan_touches += 2 * s3.len() as u64 + s1.len() as u64;
    let d_lo = delta.d12.min(delta.d23);
    let d_hi = delta.d12.max(delta.d23);
    let mut acc: i128 = 0;
    for &t1 in s1 {
        let start = count_le(s3, t1);
        let end = count_le(s3, add_delta(t1, delta.d13));
        if start >= end {
            continue;
        }
        let a_end = count_le(s3, add_delta(t1, d_lo));
        let b_end = count_le(s3, add_delta(t1, d_hi));
        debug_assert!(start <= a_end && a_end <= b_end && b_end <= end);
        let le_t1 = count_le(s2, t1);
        let le_t1_d12 = count_le(s2, add_delta(t1, delta.d12));
        // low range: t2 in (t1, t3)
        acc +=
            scratch.prefix_a.range(start, a_end) as i128 - (a_end - start) as i128 * le_t1 as i128;
        // middle range: bound independent of t3 when d12 <= d23, else a
        // trailing window of t3
        if delta.d12 <= delta.d23 {
            acc += (b_end - a_end) as i128 * (le_t1_d12 - le_t1) as i128;
        } else {
            acc += scratch.prefix_b.range(a_end, b_end) as i128;
        }
        // high range: t2 in [t3 - d23, t1 + d12]
        acc += scratch.prefix_b.range(b_end, end) as i128
            - scratch.prefix_a.range(b_end, end) as i128
            + (end - b_end) as i128 * le_t1_d12 as i128;
    }
    debug_assert!(acc >= 0);
    acc as u64
}

/// `{v,w}` sequence is `s1`: enumerate `s2`, cumulate over `s3` into `s1`
/// counts.
///
/// Per `t2`, the eligible `t3` lie in `(t2, t2 + d23]`. Below
/// `t2 + (d13 - d12)` the `t1` window is `[t2 - d12, t2)`, a per-`t2`
/// constant; from there on it is `[t3 - d13, t2)`, handled by the
/// `[t - d13, t)` and `(-inf, t)` prefix difference.
pub fn count_vw1_seqs(
    s1: &[i64],
    s2: &[i64],
    s3: &[i64],
    delta: DeltaTriple,
    scratch: &mut CountScratch,
) -> u64 {
    if s1.is_empty() || s2.is_empty() || s3.is_empty() {
        return 0;
    }
    let delta = delta.normalized();
    scratch
        .prefix_a
        .rebuild(s3, s1, PrefixKind::TrailOpen(delta.d13));
    scratch.prefix_b.rebuild(s3, s1, PrefixKind::Before);
    scratch.scan_touches += 2 * s3.len() as u64 + s2.len() as u64;
    let phi_gap = delta.d13 - delta.d12;
    let mut acc: i128 = 0;
    for &t2 in s2 {
        let start = count_le(s3, t2);
        let end = count_le(s3, add_delta(t2, delta.d23));
        if start >= end {
            continue;
        }
        let split = count_lt(s3, add_delta(t2, phi_gap)).clamp(start, end);
        let before_t2 = count_lt(s1, t2);
        if split > start {
            let near = before_t2 - count_lt(s1, sub_delta(t2, delta.d12));
            acc += (split - start) as i128 * near as i128;
        }
        if end > split {
            acc += scratch.prefix_a.range(split, end) as i128
                - scratch.prefix_b.range(split, end) as i128
                + (end - split) as i128 * before_t2 as i128;
        }
    }
    debug_assert!(acc >= 0);
    acc as u64
}
