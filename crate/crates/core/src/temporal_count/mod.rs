//! Exact per-type temporal triangle counting.
//!
//! For every static triangle, all 6 temporal orderings x 8 orientations
//! are counted with the binary-search kernels and accumulated into the
//! eight type counters through the ordering/orientation classification.
//! Each valid edge triple has strictly increasing timestamps, so exactly
//! one cell counts it.

mod classify;
mod kernels;
mod prefix;
mod windows;

pub use classify::{classify, Orientation, PairRole, TemporalOrdering, TypeCode};
pub use kernels::{
    count_vw1, count_vw1_seqs, count_vw2, count_vw2_seqs, count_vw3, count_vw3_seqs,
    resolve_sequences, CountScratch,
};
pub use prefix::{PrefixCounts, PrefixKind};
pub use windows::{add_delta, count_le, count_lt, edge_count, sub_delta, Window};

use crate::degeneracy::OrientedGraph;
use crate::temporal_graph::{PairIndex, StaticGraph};
use crate::triangle_enum::{enumerate_source_triangles, triangles_of_source, SourceTriangle};
use serde::Serialize;
use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};
use thiserror::Error;

/// The three time gap bounds: `d13` for the whole triangle, `d12` between
/// the first two edges, `d23` between the last two.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DeltaTriple {
    pub d12: u64,
    pub d13: u64,
    pub d23: u64,
}

impl DeltaTriple {
    pub fn new(d13: u64, d12: u64, d23: u64) -> DeltaTriple {
        DeltaTriple { d12, d13, d23 }
    }

    /// Clamps the bounds into the canonical form the kernels assume:
    /// `d12 <= d13`, `d23 <= d13`, `d13 <= d12 + d23`.
    ///
    /// Counting is invariant under this: a gap between two of the three
    /// ordered timestamps can never exceed the whole span, and the span
    /// never exceeds the sum of the two gaps.
    pub fn normalized(self) -> DeltaTriple {
        let d12 = self.d12.min(self.d13);
        let d23 = self.d23.min(self.d13);
        let d13 = self.d13.min(d12.saturating_add(d23));
        DeltaTriple { d12, d13, d23 }
    }

    pub fn is_normalized(self) -> bool {
        self.d12 <= self.d13
            && self.d23 <= self.d13
            && self.d13 <= self.d12.saturating_add(self.d23)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CountError {
    #[error("temporal triangle counter overflowed 64 bits")]
    Overflow,
}

/// The eight per-type counters plus their running total, all overflow
/// checked.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TypeCounts {
    per_type: [u64; 8],
    total: u64,
}

impl TypeCounts {
    pub fn new() -> TypeCounts {
        TypeCounts::default()
    }

    pub fn add(&mut self, code: TypeCode, n: u64) -> Result<(), CountError> {
        let slot = &mut self.per_type[code.code() as usize];
        *slot = slot.checked_add(n).ok_or(CountError::Overflow)?;
        self.total = self.total.checked_add(n).ok_or(CountError::Overflow)?;
        Ok(())
    }

    pub fn merge(&mut self, other: &TypeCounts) -> Result<(), CountError> {
        for code in TypeCode::ALL {
            self.add(code, other.get(code))?;
        }
        Ok(())
    }

    pub fn get(&self, code: TypeCode) -> u64 {
        self.per_type[code.code() as usize]
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn per_type(&self) -> &[u64; 8] {
        &self.per_type
    }

    pub fn cyclic_total(&self) -> u64 {
        TypeCode::ALL
            .iter()
            .filter(|c| c.is_cyclic())
            .map(|&c| self.get(c))
            .sum()
    }

    pub fn acyclic_total(&self) -> u64 {
        TypeCode::ALL
            .iter()
            .filter(|c| !c.is_cyclic())
            .map(|&c| self.get(c))
            .sum()
    }
}

/// Run statistics from a counting pass.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CountStats {
    pub static_triangles: u64,
    /// Temporal edges touched by linear scans across all kernels.
    pub scan_touches: u64,
}

/// Counts all eight temporal triangle types for the whole graph.
///
/// `delta` is normalized first; results are identical for raw and
/// normalized bounds.
pub fn count_all(
    index: &PairIndex,
    static_graph: &StaticGraph,
    dag: &OrientedGraph,
    delta: DeltaTriple,
) -> Result<TypeCounts, CountError> {
    count_all_with_stats(index, static_graph, dag, delta).map(|(counts, _)| counts)
}

/// Like [`count_all`], also returning triangle and instrumentation
/// counters.
pub fn count_all_with_stats(
    index: &PairIndex,
    static_graph: &StaticGraph,
    dag: &OrientedGraph,
    delta: DeltaTriple,
) -> Result<(TypeCounts, CountStats), CountError> {
    let delta = delta.normalized();
    let mut counts = TypeCounts::new();
    let mut scratch = CountScratch::new();
    let mut failure: Option<CountError> = None;
    let triangles = enumerate_source_triangles(dag, static_graph, |tri| {
        if failure.is_some() {
            return;
        }
        if let Err(e) = count_triangle_into(&tri, index, delta, &mut scratch, &mut counts) {
            failure = Some(e);
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok((
            counts,
            CountStats {
                static_triangles: triangles,
                scan_touches: scratch.scan_touches,
            },
        )),
    }
}

/// Counts one static triangle across all 48 ordering/orientation cells.
fn count_triangle_into(
    tri: &SourceTriangle,
    index: &PairIndex,
    delta: DeltaTriple,
    scratch: &mut CountScratch,
    counts: &mut TypeCounts,
) -> Result<(), CountError> {
    for ordering in TemporalOrdering::ALL {
        for orientation in Orientation::ALL {
            let [s1, s2, s3] = resolve_sequences(tri, ordering, orientation, index);
            if s1.is_empty() || s2.is_empty() || s3.is_empty() {
                continue;
            }
            let cell = match ordering.vw_position() {
                3 => count_vw3_seqs(s1, s2, s3, delta, scratch),
                2 => count_vw2_seqs(s1, s2, s3, delta, scratch),
                _ => count_vw1_seqs(s1, s2, s3, delta, scratch),
            };
            if cell > 0 {
                counts.add(classify(ordering, orientation), cell)?;
            }
        }
    }
    Ok(())
}

/// Parallel variant: source vertices are sharded over `threads` workers,
/// each with private counters and scratch; partial counts merge with
/// checked additions. `threads <= 1` falls back to the sequential path.
pub fn count_all_parallel(
    index: &PairIndex,
    static_graph: &StaticGraph,
    dag: &OrientedGraph,
    delta: DeltaTriple,
    threads: usize,
) -> Result<(TypeCounts, CountStats), CountError> {
    if threads <= 1 {
        return count_all_with_stats(index, static_graph, dag, delta);
    }
    let delta = delta.normalized();
    let n = dag.vertex_count();
    let chunk = (n / (threads * 8)).max(64);
    let cursor = AtomicUsize::new(0);

    let results: Vec<Result<(TypeCounts, CountStats), CountError>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|_| {
                scope.spawn(|| {
                    let mut counts = TypeCounts::new();
                    let mut scratch = CountScratch::new();
                    let mut triangles = 0u64;
                    loop {
                        let start = cursor.fetch_add(chunk, AtomicOrdering::Relaxed);
                        if start >= n {
                            break;
                        }
                        let end = (start + chunk).min(n);
                        for u in start as u32..end as u32 {
                            let mut failure = None;
                            triangles += triangles_of_source(dag, static_graph, u, |tri| {
                                if failure.is_some() {
                                    return;
                                }
                                if let Err(e) = count_triangle_into(
                                    &tri,
                                    index,
                                    delta,
                                    &mut scratch,
                                    &mut counts,
                                ) {
                                    failure = Some(e);
                                }
                            });
                            if let Some(e) = failure {
                                return Err(e);
                            }
                        }
                    }
                    Ok((
                        counts,
                        CountStats {
                            static_triangles: triangles,
                            scan_touches: scratch.scan_touches,
                        },
                    ))
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });

    let mut counts = TypeCounts::new();
    let mut stats = CountStats::default();
    for result in results {
        let (partial, partial_stats) = result?;
        counts.merge(&partial)?;
        stats.static_triangles += partial_stats.static_triangles;
        stats.scan_touches += partial_stats.scan_touches;
    }
    Ok((counts, stats))
}
