//! Shared setup for the counting benchmarks.

use ttc_core::synthetic::{fan_temporal_edges, random_temporal_edges};
use ttc_core::{PreparedGraph, TemporalGraph};

/// A prepared fan graph: degeneracy 2, `(2 * path_len - 1) * multiplicity`
/// temporal edges.
pub fn prepared_fan(path_len: u32, multiplicity: usize) -> PreparedGraph {
    let edges = fan_temporal_edges(7, path_len, multiplicity, 1_000_000);
    PreparedGraph::build(&TemporalGraph::from_edges(edges))
}

/// A prepared dense random multigraph.
pub fn prepared_random(n: u32, m: usize) -> PreparedGraph {
    let edges = random_temporal_edges(7, n, m, 1_000_000, 5);
    PreparedGraph::build(&TemporalGraph::from_edges(edges))
}
