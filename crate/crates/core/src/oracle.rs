//! Brute-force reference counter.
//!
//! Evaluates the temporal triangle definition literally: for every static
//! triangle, iterate the full cross product of directed temporal edges on
//! its three pairs, sort each triple by timestamp, test the three gap
//! bounds, and classify. Deliberately shares no range-counting machinery
//! with the fast path — only the triangle enumerator and the type code
//! encoder — so agreement between the two is meaningful evidence.

use thiserror::Error;

use crate::degeneracy::OrientedGraph;
use crate::temporal_count::{CountError, DeltaTriple, TypeCode, TypeCounts};
use crate::temporal_graph::{PairIndex, StaticGraph};
use crate::triangle_enum::{enumerate_source_triangles, SourceTriangle};
use crate::VertexId;

/// Default cap on the summed per-triangle cross-product sizes.
pub const DEFAULT_ORACLE_BUDGET: u64 = 1_000_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error(
        "oracle work {required} exceeds budget {budget}; the brute-force path is for small graphs"
    )]
    BudgetExceeded { required: u128, budget: u64 },
    #[error(transparent)]
    Count(#[from] CountError),
}

fn directed_edges_on_pair(
    index: &PairIndex,
    a: VertexId,
    b: VertexId,
) -> Vec<((VertexId, VertexId), i64)> {
    let mut edges = Vec::new();
    for &t in index.sequence(a, b) {
        edges.push(((a, b), t));
    }
    for &t in index.sequence(b, a) {
        edges.push(((b, a), t));
    }
    edges
}

/// Brute-force count for one static triangle; `delta` may be raw.
pub fn oracle_count_triangle(
    tri: &SourceTriangle,
    delta: DeltaTriple,
    index: &PairIndex,
) -> Result<TypeCounts, CountError> {
    let uv = directed_edges_on_pair(index, tri.u, tri.v);
    let uw = directed_edges_on_pair(index, tri.u, tri.w);
    let vw = directed_edges_on_pair(index, tri.v, tri.w);
    let mut counts = TypeCounts::new();
    for &(euv, tuv) in &uv {
        for &(euw, tuw) in &uw {
            for &(evw, tvw) in &vw {
                let mut triple = [(tuv, euv), (tuw, euw), (tvw, evw)];
                triple.sort_by_key(|&(t, _)| t);
                let [(t1, e1), (t2, e2), (t3, e3)] = triple;
                // equal timestamps cannot be strictly ordered
                if t1 == t2 || t2 == t3 {
                    continue;
                }
                if (t2 as i128 - t1 as i128) <= delta.d12 as i128
                    && (t3 as i128 - t2 as i128) <= delta.d23 as i128
                    && (t3 as i128 - t1 as i128) <= delta.d13 as i128
                {
                    counts.add(TypeCode::from_time_ordered_edges(e1, e2, e3), 1)?;
                }
            }
        }
    }
    Ok(counts)
}

/// Brute-force count over the whole graph.
///
/// Refuses up front when the summed cross-product work over all static
/// triangles exceeds `budget`.
pub fn oracle_count(
    index: &PairIndex,
    static_graph: &StaticGraph,
    dag: &OrientedGraph,
    delta: DeltaTriple,
    budget: u64,
) -> Result<TypeCounts, OracleError> {
    let mut required: u128 = 0;
    enumerate_source_triangles(dag, static_graph, |tri| {
        let suv = (index.multiplicity(tri.u, tri.v) + index.multiplicity(tri.v, tri.u)) as u128;
        let suw = (index.multiplicity(tri.u, tri.w) + index.multiplicity(tri.w, tri.u)) as u128;
        let svw = (index.multiplicity(tri.v, tri.w) + index.multiplicity(tri.w, tri.v)) as u128;
        required = required.saturating_add(suv.saturating_mul(suw).saturating_mul(svw));
    });
    if required > budget as u128 {
        return Err(OracleError::BudgetExceeded { required, budget });
    }

    let mut counts = TypeCounts::new();
    let mut failure: Option<CountError> = None;
    enumerate_source_triangles(dag, static_graph, |tri| {
        if failure.is_some() {
            return;
        }
        match oracle_count_triangle(&tri, delta, index) {
            Ok(partial) => {
                if let Err(e) = counts.merge(&partial) {
                    failure = Some(e);
                }
            }
            Err(e) => failure = Some(e),
        }
    });
    match failure {
        Some(e) => Err(e.into()),
        None => Ok(counts),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::temporal_graph::TemporalGraph;
    use crate::PreparedGraph;

    fn triangle_fixture() -> (PreparedGraph, SourceTriangle) {
        // one directed edge per pair: u->v @10, u->w @15, v->w @20
        let graph = TemporalGraph::from_edges([(0u32, 1u32, 10i64), (0, 2, 15), (1, 2, 20)]);
        let p = PreparedGraph::build(&graph);
        (p, SourceTriangle { u: 0, v: 1, w: 2 })
    }

    #[test]
    fn single_triple_within_bounds() {
        let (p, tri) = triangle_fixture();
        let counts = oracle_count_triangle(&tri, DeltaTriple::new(15, 10, 10), &p.index).unwrap();
        assert_eq!(counts.total(), 1);
    }

    #[test]
    fn span_bound_excludes() {
        let (p, tri) = triangle_fixture();
        let counts = oracle_count_triangle(&tri, DeltaTriple::new(9, 10, 10), &p.index).unwrap();
        assert_eq!(counts.total(), 0);
    }

    #[test]
    fn small_cross_product_is_bounded() {
        let edges = [
            (0u32, 1u32, 3i64),
            (1, 0, 8),
            (0, 1, 12),
            (0, 2, 5),
            (2, 0, 9),
            (0, 2, 14),
            (1, 2, 2),
            (2, 1, 7),
            (1, 2, 11),
        ];
        let graph = TemporalGraph::from_edges(edges);
        let p = PreparedGraph::build(&graph);
        let tri = SourceTriangle { u: 0, v: 1, w: 2 };
        let delta = DeltaTriple::new(10, 6, 6);
        let counts = oracle_count_triangle(&tri, delta, &p.index).unwrap();
        assert!(counts.total() <= 27);

        // independently written triple loop over the same directed edges
        let mut expected = 0u64;
        let all = [
            directed_edges_on_pair(&p.index, 0, 1),
            directed_edges_on_pair(&p.index, 0, 2),
            directed_edges_on_pair(&p.index, 1, 2),
        ];
        for &(_, ta) in &all[0] {
            for &(_, tb) in &all[1] {
                for &(_, tc) in &all[2] {
                    let mut ts = [ta, tb, tc];
                    ts.sort_unstable();
                    if ts[0] < ts[1]
                        && ts[1] < ts[2]
                        && ts[1] - ts[0] <= 6
                        && ts[2] - ts[1] <= 6
                        && ts[2] - ts[0] <= 10
                    {
                        expected += 1;
                    }
                }
            }
        }
        assert_eq!(counts.total(), expected);
    }

    #[test]
    fn empty_graph_counts_zero() {
        let graph = TemporalGraph::from_edges(std::iter::empty());
        let p = PreparedGraph::build(&graph);
        let counts = oracle_count(
            &p.index,
            &p.static_graph,
            &p.dag,
            DeltaTriple::new(5, 5, 5),
            DEFAULT_ORACLE_BUDGET,
        )
        .unwrap();
        assert_eq!(counts, TypeCounts::new());
    }

    #[test]
    fn whole_graph_matches_per_triangle() {
        let (p, tri) = triangle_fixture();
        let delta = DeltaTriple::new(15, 10, 10);
        let whole = oracle_count(
            &p.index,
            &p.static_graph,
            &p.dag,
            delta,
            DEFAULT_ORACLE_BUDGET,
        )
        .unwrap();
        let single = oracle_count_triangle(&tri, delta, &p.index).unwrap();
        assert_eq!(whole, single);
    }

    #[test]
    fn budget_refusal() {
        let (p, _) = triangle_fixture();
        let err = oracle_count(
            &p.index,
            &p.static_graph,
            &p.dag,
            DeltaTriple::new(15, 10, 10),
            0,
        )
        .unwrap_err();
        assert!(matches!(err, OracleError::BudgetExceeded { .. }));
    }
}
