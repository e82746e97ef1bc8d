//! Exact counting of directed temporal triangles in timestamped multigraphs.
//!
//! A temporal triangle is a triple of directed temporal edges on three
//! distinct vertex pairs forming a (static) triangle, with strictly
//! increasing timestamps `t1 < t2 < t3` satisfying three gap constraints:
//! `t2 - t1 <= d12`, `t3 - t2 <= d23`, and `t3 - t1 <= d13`. Taking edge
//! directions into account there are eight triangle types, two of them
//! directed 3-cycles.
//!
//! The counting pipeline:
//!
//! 1. [`parse_edge_list`] / [`read_edge_list`] ingest a whitespace-separated
//!    `src dst timestamp` edge list into a [`TemporalGraph`].
//! 2. [`build_pair_index`] groups timestamps by ordered vertex pair (CSR
//!    layout, per-pair ascending).
//! 3. [`extract_static_graph`] collapses the multigraph to its undirected
//!    static graph.
//! 4. [`degeneracy_order`] + [`orient`] turn the static graph into a DAG
//!    whose out-degrees are bounded by the degeneracy `kappa`.
//! 5. [`enumerate_source_triangles`] lists each static triangle once, rooted
//!    at its lowest-ranked vertex.
//! 6. [`count_all`] counts temporal triangles per type by combining binary
//!    searches and cumulative range counts over the pair timestamp
//!    sequences, doing `O((sigma_uv + sigma_uw) log sigma_max)` work per
//!    static triangle.
//!
//! [`oracle_count`] is an independent brute-force counter used to validate
//! the fast path on small inputs.

pub mod degeneracy;
pub mod oracle;
pub mod synthetic;
pub mod temporal_count;
pub mod temporal_graph;
pub mod triangle_enum;

pub use degeneracy::{degeneracy_order, orient, DegeneracyOrdering, OrientedGraph};
pub use oracle::{oracle_count, oracle_count_triangle, OracleError, DEFAULT_ORACLE_BUDGET};
pub use temporal_count::{
    classify, count_all, count_all_parallel, count_all_with_stats, count_vw1, count_vw1_seqs,
    count_vw2, count_vw2_seqs, count_vw3, count_vw3_seqs, edge_count, resolve_sequences,
    CountError, CountScratch, CountStats, DeltaTriple, Orientation, PairRole, PrefixCounts,
    PrefixKind, TemporalOrdering, TypeCode, TypeCounts, Window,
};
pub use temporal_graph::{
    build_pair_index, extract_static_graph, parse_edge_list, read_edge_list, IngestReport,
    PairIndex, ParseError, StaticGraph, TemporalEdge, TemporalGraph,
};
pub use triangle_enum::{enumerate_source_triangles, triangles_of_source, SourceTriangle};

/// Dense vertex identifier assigned at ingestion.
pub type VertexId = u32;

/// The fully prepared counting pipeline for one temporal graph.
///
/// Bundles the immutable structures that every counting call needs. All
/// fields are safe to share across threads once built.
pub struct PreparedGraph {
    pub index: PairIndex,
    pub static_graph: StaticGraph,
    pub ordering: DegeneracyOrdering,
    pub dag: OrientedGraph,
}

impl PreparedGraph {
    pub fn build(graph: &TemporalGraph) -> Self {
        let index = build_pair_index(graph);
        let static_graph = extract_static_graph(&index);
        let ordering = degeneracy_order(&static_graph);
        let dag = orient(&static_graph, &ordering);
        PreparedGraph {
            index,
            static_graph,
            ordering,
            dag,
        }
    }
}
