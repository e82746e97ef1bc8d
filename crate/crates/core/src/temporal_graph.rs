//! Edge-list ingestion, the ordered-pair timestamp index, and the
//! underlying static graph.

use std::collections::{HashMap, HashSet};
use std::fs::File;
use std::io::{self, BufRead, BufReader};
use std::path::Path;
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::VertexId;

/// A directed edge `src -> dst` carrying an integer timestamp.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TemporalEdge {
    pub src: VertexId,
    pub dst: VertexId,
    pub timestamp: i64,
    /// Position among the kept edges, in input order.
    pub index: u64,
}

/// A directed temporal multigraph with densely relabeled vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TemporalGraph {
    edges: Vec<TemporalEdge>,
    /// Dense id -> original label, in first-appearance order.
    labels: Vec<String>,
    time_span: Option<(i64, i64)>,
}

impl TemporalGraph {
    /// Number of distinct vertices (labels) seen during ingestion.
    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    /// Number of temporal edges kept (self-loops excluded).
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[TemporalEdge] {
        &self.edges
    }

    pub fn label_of(&self, v: VertexId) -> &str {
        &self.labels[v as usize]
    }

    /// `(min, max)` timestamp over all kept edges, `None` when empty.
    pub fn time_span(&self) -> Option<(i64, i64)> {
        self.time_span
    }

    /// Builds a graph from in-memory `(src, dst, timestamp)` triples.
    ///
    /// Ids are relabeled densely in first-appearance order, exactly as
    /// `parse_edge_list` does for textual labels; self-loops are skipped.
    pub fn from_edges(edges: impl IntoIterator<Item = (u32, u32, i64)>) -> TemporalGraph {
        let mut ids: HashMap<u32, VertexId> = HashMap::new();
        let mut labels = Vec::new();
        let mut kept: Vec<TemporalEdge> = Vec::new();
        let mut span: Option<(i64, i64)> = None;
        for (s, d, t) in edges {
            let src = intern_raw(s, &mut ids, &mut labels);
            let dst = intern_raw(d, &mut ids, &mut labels);
            if src == dst {
                continue;
            }
            span = Some(match span {
                None => (t, t),
                Some((lo, hi)) => (lo.min(t), hi.max(t)),
            });
            kept.push(TemporalEdge {
                src,
                dst,
                timestamp: t,
                index: kept.len() as u64,
            });
        }
        TemporalGraph {
            edges: kept,
            labels,
            time_span: span,
        }
    }
}

fn intern_raw(raw: u32, ids: &mut HashMap<u32, VertexId>, labels: &mut Vec<String>) -> VertexId {
    *ids.entry(raw).or_insert_with(|| {
        let id = labels.len() as VertexId;
        labels.push(raw.to_string());
        id
    })
}

/// Ingestion diagnostics, serialized as JSON by the CLI.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IngestReport {
    pub edges_kept: u64,
    pub lines_read: u64,
    pub parse_ms: u64,
    pub self_loops_dropped: u64,
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: expected 3 whitespace-separated fields, found {found}")]
    FieldCount { line: u64, found: usize },
    #[error("line {line}: timestamp `{token}` is not a signed 64-bit integer")]
    BadTimestamp { line: u64, token: String },
    #[error("vertex capacity exceeded: more than 2^32 distinct labels")]
    TooManyVertices,
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

/// Parses a whitespace-separated `src dst timestamp` edge list.
///
/// Lines starting with `#` are comments; blank lines are skipped. Labels
/// are arbitrary tokens and get dense ids in first-appearance order (the
/// endpoints of dropped self-loops still register). Edges need not be
/// sorted by time.
pub fn parse_edge_list<R: BufRead>(reader: R) -> Result<(TemporalGraph, IngestReport), ParseError> {
    let start = Instant::now();
    let mut ids: HashMap<String, VertexId> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut edges: Vec<TemporalEdge> = Vec::new();
    let mut span: Option<(i64, i64)> = None;
    let mut report = IngestReport::default();

    for (line_idx, line) in reader.lines().enumerate() {
        let line = line?;
        let line_no = line_idx as u64 + 1;
        report.lines_read += 1;
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut fields = trimmed.split_ascii_whitespace();
        let (src_tok, dst_tok, ts_tok) = match (fields.next(), fields.next(), fields.next()) {
            (Some(a), Some(b), Some(c)) => (a, b, c),
            (a, b, _) => {
                let found = [a, b].iter().filter(|f| f.is_some()).count();
                return Err(ParseError::FieldCount {
                    line: line_no,
                    found,
                });
            }
        };
        let extra = fields.count();
        if extra > 0 {
            return Err(ParseError::FieldCount {
                line: line_no,
                found: 3 + extra,
            });
        }
        let timestamp: i64 = ts_tok.parse().map_err(|_| ParseError::BadTimestamp {
            line: line_no,
            token: ts_tok.to_string(),
        })?;

        let src = intern_label(src_tok, &mut ids, &mut labels)?;
        let dst = intern_label(dst_tok, &mut ids, &mut labels)?;
        if src == dst {
            report.self_loops_dropped += 1;
            continue;
        }
        span = Some(match span {
            None => (timestamp, timestamp),
            Some((lo, hi)) => (lo.min(timestamp), hi.max(timestamp)),
        });
        edges.push(TemporalEdge {
            src,
            dst,
            timestamp,
            index: edges.len() as u64,
        });
    }

    report.edges_kept = edges.len() as u64;
    report.parse_ms = start.elapsed().as_millis() as u64;
    Ok((
        TemporalGraph {
            edges,
            labels,
            time_span: span,
        },
        report,
    ))
}

fn intern_label(
    token: &str,
    ids: &mut HashMap<String, VertexId>,
    labels: &mut Vec<String>,
) -> Result<VertexId, ParseError> {
    if let Some(&id) = ids.get(token) {
        return Ok(id);
    }
    if labels.len() > u32::MAX as usize {
        return Err(ParseError::TooManyVertices);
    }
    let id = labels.len() as VertexId;
    ids.insert(token.to_string(), id);
    labels.push(token.to_string());
    Ok(id)
}

/// Opens an edge-list file, transparently decompressing gzip input
/// (detected by the `1f 8b` magic bytes).
pub fn read_edge_list(path: &Path) -> Result<(TemporalGraph, IngestReport), ParseError> {
    let file = File::open(path)?;
    let mut reader = BufReader::new(file);
    let head = reader.fill_buf()?;
    let gzipped = head.len() >= 2 && head[0] == 0x1f && head[1] == 0x8b;
    if gzipped {
        parse_edge_list(BufReader::new(flate2::bufread::MultiGzDecoder::new(reader)))
    } else {
        parse_edge_list(reader)
    }
}

fn pack_pair(a: VertexId, b: VertexId) -> u64 {
    (a as u64) << 32 | b as u64
}

/// Timestamps grouped by ordered vertex pair, each group ascending.
///
/// CSR layout: `offsets[s]..offsets[s+1]` delimits the timestamps of the
/// `s`-th ordered pair inside `times`; `lookup` maps a packed `(src, dst)`
/// key to its slot. The total number of stored timestamps equals the
/// temporal edge count.
#[derive(Clone, Debug)]
pub struct PairIndex {
    n: usize,
    pairs: Vec<(VertexId, VertexId)>,
    offsets: Vec<usize>,
    times: Vec<i64>,
    lookup: HashMap<u64, u32>,
    max_multiplicity: usize,
}

impl PairIndex {
    /// Vertex count of the graph this index was built from.
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// The ascending timestamp sequence of `src -> dst`; empty if the pair
    /// never occurs.
    pub fn sequence(&self, src: VertexId, dst: VertexId) -> &[i64] {
        match self.lookup.get(&pack_pair(src, dst)) {
            Some(&slot) => {
                let s = slot as usize;
                &self.times[self.offsets[s]..self.offsets[s + 1]]
            }
            None => &[],
        }
    }

    /// Temporal multiplicity `sigma(src, dst)`.
    pub fn multiplicity(&self, src: VertexId, dst: VertexId) -> usize {
        self.sequence(src, dst).len()
    }

    /// Largest multiplicity over all ordered pairs.
    pub fn max_multiplicity(&self) -> usize {
        self.max_multiplicity
    }

    /// Total stored timestamps (= temporal edge count).
    pub fn total_edges(&self) -> usize {
        self.times.len()
    }

    /// Ordered pairs with at least one edge, sorted by `(src, dst)`.
    pub fn ordered_pairs(&self) -> impl Iterator<Item = (VertexId, VertexId, &[i64])> {
        self.pairs
            .iter()
            .enumerate()
            .map(move |(s, &(a, b))| (a, b, &self.times[self.offsets[s]..self.offsets[s + 1]]))
    }
}

/// Groups the graph's timestamps by ordered pair and sorts each group.
///
/// The sort is stable, so edges with equal timestamps on one pair keep
/// their input order.
pub fn build_pair_index(graph: &TemporalGraph) -> PairIndex {
    let edges = graph.edges();
    let mut order: Vec<u32> = (0..edges.len() as u32).collect();
    order.sort_by_key(|&i| {
        let e = &edges[i as usize];
        (e.src, e.dst, e.timestamp)
    });

    let mut pairs = Vec::new();
    let mut offsets = vec![0usize];
    let mut times = Vec::with_capacity(order.len());
    let mut lookup = HashMap::new();
    let mut i = 0;
    while i < order.len() {
        let e = &edges[order[i] as usize];
        let key = (e.src, e.dst);
        lookup.insert(pack_pair(e.src, e.dst), pairs.len() as u32);
        pairs.push(key);
        while i < order.len() {
            let e2 = &edges[order[i] as usize];
            if (e2.src, e2.dst) != key {
                break;
            }
            times.push(e2.timestamp);
            i += 1;
        }
        offsets.push(times.len());
    }
    let max_multiplicity = (0..pairs.len())
        .map(|s| offsets[s + 1] - offsets[s])
        .max()
        .unwrap_or(0);
    PairIndex {
        n: graph.vertex_count(),
        pairs,
        offsets,
        times,
        lookup,
        max_multiplicity,
    }
}

/// The undirected simple graph underlying a temporal multigraph.
///
/// Adjacency is CSR with id-sorted neighbor lists; `{a, b}` membership is
/// answered in expected constant time by a hash set keyed on the unordered
/// pair.
#[derive(Clone, Debug)]
pub struct StaticGraph {
    n: usize,
    offsets: Vec<usize>,
    neighbors: Vec<VertexId>,
    edge_set: HashSet<u64>,
}

impl StaticGraph {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of undirected static edges.
    pub fn edge_count(&self) -> usize {
        self.edge_set.len()
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.neighbors[self.offsets[v as usize]..self.offsets[v as usize + 1]]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.neighbors(v).len()
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        self.edge_set.contains(&pack_pair(lo, hi))
    }

    /// Builds a static graph directly from undirected edges (test support).
    pub fn from_undirected_edges(n: usize, edges: &[(VertexId, VertexId)]) -> StaticGraph {
        let mut edge_set = HashSet::new();
        for &(a, b) in edges {
            assert!(a != b, "self-loop in static edge list");
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            edge_set.insert(pack_pair(lo, hi));
        }
        build_static_from_set(n, edge_set)
    }
}

/// Collapses the ordered-pair index into the undirected static graph.
pub fn extract_static_graph(index: &PairIndex) -> StaticGraph {
    let mut edge_set = HashSet::new();
    for (a, b, _) in index.ordered_pairs() {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        edge_set.insert(pack_pair(lo, hi));
    }
    build_static_from_set(index.vertex_count(), edge_set)
}

fn build_static_from_set(n: usize, edge_set: HashSet<u64>) -> StaticGraph {
    let mut keys: Vec<u64> = edge_set.iter().copied().collect();
    keys.sort_unstable();
    let mut degree = vec![0usize; n];
    for key in &keys {
        degree[(key >> 32) as usize] += 1;
        degree[(key & 0xffff_ffff) as usize] += 1;
    }
    let mut offsets = Vec::with_capacity(n + 1);
    let mut acc = 0usize;
    offsets.push(0);
    for d in &degree {
        acc += d;
        offsets.push(acc);
    }
    let mut fill = offsets.clone();
    let mut neighbors = vec![0 as VertexId; acc];
    for key in keys {
        let lo = (key >> 32) as VertexId;
        let hi = (key & 0xffff_ffff) as VertexId;
        neighbors[fill[lo as usize]] = hi;
        fill[lo as usize] += 1;
        neighbors[fill[hi as usize]] = lo;
        fill[hi as usize] += 1;
    }
    // keys are sorted, so every list comes out id-sorted already; assert in
    // debug rather than re-sorting
    debug_assert!((0..n).all(|v| neighbors[offsets[v]..offsets[v + 1]]
        .windows(2)
        .all(|w| w[0] < w[1])));
    StaticGraph {
        n,
        offsets,
        neighbors,
        edge_set,
    }
}
