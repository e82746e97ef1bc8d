//! Degeneracy ordering of the static graph and its DAG orientation.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::temporal_graph::StaticGraph;
use crate::VertexId;

/// The removal order of a minimum-degree peeling, plus the degeneracy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegeneracyOrdering {
    /// `rank[v]` = position of `v` in the removal order (0-based).
    pub rank: Vec<u32>,
    /// Max degree observed at removal time (= max core number).
    pub kappa: u32,
}

/// Computes the degeneracy ordering by repeatedly removing a vertex of
/// minimum remaining degree.
///
/// Ties among minimum-degree vertices break toward the smallest vertex id,
/// so the ordering is reproducible. Implemented as a lazy priority queue
/// keyed on `(degree, id)`: stale entries (degree has since dropped) are
/// skipped on pop.
pub fn degeneracy_order(graph: &StaticGraph) -> DegeneracyOrdering {
    let n = graph.vertex_count();
    let mut deg: Vec<u32> = (0..n).map(|v| graph.degree(v as VertexId) as u32).collect();
    let mut heap: BinaryHeap<Reverse<(u32, u32)>> = (0..n as u32)
        .map(|v| Reverse((deg[v as usize], v)))
        .collect();
    let mut removed = vec![false; n];
    let mut rank = vec![0u32; n];
    let mut kappa = 0u32;
    let mut next_rank = 0u32;

    while let Some(Reverse((d, v))) = heap.pop() {
        if removed[v as usize] || d != deg[v as usize] {
            continue;
        }
        removed[v as usize] = true;
        kappa = kappa.max(d);
        rank[v as usize] = next_rank;
        next_rank += 1;
        for &x in graph.neighbors(v) {
            if !removed[x as usize] {
                deg[x as usize] -= 1;
                heap.push(Reverse((deg[x as usize], x)));
            }
        }
    }
    debug_assert_eq!(next_rank as usize, n);
    DegeneracyOrdering { rank, kappa }
}

/// The static graph oriented along a vertex ordering: `u -> v` iff
/// `rank[u] < rank[v]`. Out-neighbor lists are sorted by rank ascending.
#[derive(Clone, Debug)]
pub struct OrientedGraph {
    offsets: Vec<usize>,
    targets: Vec<VertexId>,
}

impl OrientedGraph {
    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn out(&self, v: VertexId) -> &[VertexId] {
        &self.targets[self.offsets[v as usize]..self.offsets[v as usize + 1]]
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.out(v).len()
    }

    pub fn max_out_degree(&self) -> usize {
        (0..self.vertex_count())
            .map(|v| self.out_degree(v as VertexId))
            .max()
            .unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.targets.len()
    }
}

/// Orients every static edge from the lower-ranked endpoint to the higher.
///
/// The result is acyclic with out-degrees bounded by the ordering's kappa
/// when `ordering` came from `degeneracy_order` on the same graph.
pub fn orient(graph: &StaticGraph, ordering: &DegeneracyOrdering) -> OrientedGraph {
    let n = graph.vertex_count();
    let rank = &ordering.rank;
    let mut out_deg = vec![0usize; n];
    for v in 0..n as u32 {
        for &x in graph.neighbors(v) {
            if rank[v as usize] < rank[x as usize] {
                out_deg[v as usize] += 1;
            }
        }
    }
    let mut offsets = Vec::with_capacity(n + 1);
    let mut acc = 0usize;
    offsets.push(0);
    for d in &out_deg {
        acc += d;
        offsets.push(acc);
    }
    let mut fill = offsets.clone();
    let mut targets = vec![0 as VertexId; acc];
    for v in 0..n as u32 {
        for &x in graph.neighbors(v) {
            if rank[v as usize] < rank[x as usize] {
                targets[fill[v as usize]] = x;
                fill[v as usize] += 1;
            }
        }
    }
    for v in 0..n {
        targets[offsets[v]..offsets[v + 1]].sort_unstable_by_key(|&x| rank[x as usize]);
    }
    OrientedGraph { offsets, targets }
}
