//! Command implementations behind the `ttc` binary.
//!
//! Each command returns typed reports; rendering to JSON/TSV/CSV is
//! separate so the machine-readable stdout stays byte-deterministic for
//! identical inputs and flags. Timing and ingestion diagnostics go to
//! stderr.

use std::collections::BTreeMap;
use std::path::Path;
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use ttc_core::{
    count_all_parallel, enumerate_source_triangles, oracle_count, read_edge_list, CountError,
    DeltaTriple, IngestReport, OracleError, ParseError, PreparedGraph, TemporalGraph, TypeCode,
    TypeCounts,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Overflow(#[from] CountError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("invalid sweep: {0}")]
    InvalidSweep(String),
}

impl CliError {
    /// Distinct exit codes: 2 usage, 3 parse, 4 i/o, 5 overflow, 6 budget.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(ParseError::Io(_)) | CliError::Io(_) => 4,
            CliError::Parse(_) => 3,
            CliError::Overflow(_) | CliError::Oracle(OracleError::Count(_)) => 5,
            CliError::Oracle(OracleError::BudgetExceeded { .. }) => 6,
            CliError::InvalidSweep(_) => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum OutputFormat {
    #[default]
    Json,
    Tsv,
}

/// Parses a duration flag: a raw integer in the dataset's native time
/// unit, or with an `s`/`m`/`h`/`d` suffix interpreted in seconds.
pub fn parse_duration(text: &str) -> Result<u64, String> {
    let text = text.trim();
    let (digits, unit) = match text.as_bytes().last() {
        Some(b's') => (&text[..text.len() - 1], 1u64),
        Some(b'm') => (&text[..text.len() - 1], 60),
        Some(b'h') => (&text[..text.len() - 1], 3600),
        Some(b'd') => (&text[..text.len() - 1], 86400),
        _ => (text, 1),
    };
    let value: u64 = digits
        .parse()
        .map_err(|_| format!("`{text}` is not an integer duration (suffixes: s, m, h, d)"))?;
    value
        .checked_mul(unit)
        .ok_or_else(|| format!("`{text}` overflows 64 bits"))
}

/// Summary statistics of one dataset. Field order is the JSON key order
/// (alphabetical).
#[derive(Clone, Debug, Serialize)]
pub struct DatasetStats {
    pub degeneracy: u32,
    pub max_multiplicity: u64,
    pub static_edges: u64,
    pub static_triangles: u64,
    pub temporal_edges: u64,
    pub time_span: u64,
    pub time_span_years: f64,
    pub vertices: u64,
}

/// Per-type counting report shared by `count` and `oracle`.
#[derive(Clone, Debug, Serialize)]
pub struct CountReport {
    pub counts: BTreeMap<&'static str, u64>,
    /// Normalized bounds actually used.
    pub delta: DeltaTriple,
    /// Bounds as given on the command line.
    pub delta_raw: DeltaTriple,
    pub oracle: bool,
    pub total: u64,
}

pub fn build_count_report(raw: DeltaTriple, counts: &TypeCounts, oracle: bool) -> CountReport {
    CountReport {
        counts: TypeCode::ALL
            .iter()
            .map(|&code| (code.label(), counts.get(code)))
            .collect(),
        delta: raw.normalized(),
        delta_raw: raw,
        oracle,
        total: counts.total(),
    }
}

/// Which delta component a sweep varies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum DeltaComponent {
    D13,
    D12,
    D23,
}

impl DeltaComponent {
    pub fn name(self) -> &'static str {
        match self {
            DeltaComponent::D13 => "d13",
            DeltaComponent::D12 => "d12",
            DeltaComponent::D23 => "d23",
        }
    }
}

/// A sweep over one delta component with the other two held fixed.
#[derive(Clone, Copy, Debug)]
pub struct SweepSpec {
    pub vary: DeltaComponent,
    pub from: u64,
    pub to: u64,
    pub step: u64,
    /// Fixed components; the varied slot is overwritten per point.
    pub base: DeltaTriple,
    /// Also report cyclic/acyclic subtotals per row.
    pub split_cyclic: bool,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.step == 0 {
            return Err(CliError::InvalidSweep("step must be positive".into()));
        }
        if self.from > self.to {
            return Err(CliError::InvalidSweep(format!(
                "empty range: from {} > to {}",
                self.from, self.to
            )));
        }
        Ok(())
    }

    pub fn values(&self) -> Vec<u64> {
        let mut values = Vec::new();
        let mut v = self.from;
        loop {
            values.push(v);
            match v.checked_add(self.step) {
                Some(next) if next <= self.to => v = next,
                _ => break,
            }
        }
        values
    }

    pub fn delta_at(&self, value: u64) -> DeltaTriple {
        let mut d = self.base;
        match self.vary {
            DeltaComponent::D13 => d.d13 = value,
            DeltaComponent::D12 => d.d12 = value,
            DeltaComponent::D23 => d.d23 = value,
        }
        d
    }
}

fn load(input: &Path) -> Result<(TemporalGraph, IngestReport), CliError> {
    Ok(read_edge_list(input)?)
}

/// `stats`: ingest, build the pipeline, and report dataset statistics.
pub fn cmd_stats(input: &Path) -> Result<(DatasetStats, IngestReport), CliError> {
    let (graph, ingest) = load(input)?;
    let prepared = PreparedGraph::build(&graph);
    let triangles = enumerate_source_triangles(&prepared.dag, &prepared.static_graph, |_| ());
    let span = match graph.time_span() {
        Some((lo, hi)) => (hi as i128 - lo as i128) as u64,
        None => 0,
    };
    Ok((
        DatasetStats {
            degeneracy: prepared.ordering.kappa,
            max_multiplicity: prepared.index.max_multiplicity() as u64,
            static_edges: prepared.static_graph.edge_count() as u64,
            static_triangles: triangles,
            temporal_edges: graph.edge_count() as u64,
            time_span: span,
            time_span_years: span as f64 / (365.25 * 86400.0),
            vertices: graph.vertex_count() as u64,
        },
        ingest,
    ))
}

/// Result of a counting command plus its diagnostics.
pub struct CountOutcome {
    pub report: CountReport,
    pub ingest: IngestReport,
    /// Pipeline build + count time, excluding parsing.
    pub wall_ms: u64,
}

/// `count`: the degeneracy-ordered counting pipeline.
pub fn cmd_count(
    input: &Path,
    delta: DeltaTriple,
    threads: usize,
) -> Result<CountOutcome, CliError> {
    let (graph, ingest) = load(input)?;
    let start = Instant::now();
    let prepared = PreparedGraph::build(&graph);
    let (counts, _) = count_all_parallel(
        &prepared.index,
        &prepared.static_graph,
        &prepared.dag,
        delta,
        threads,
    )?;
    Ok(CountOutcome {
        report: build_count_report(delta, &counts, false),
        ingest,
        wall_ms: start.elapsed().as_millis() as u64,
    })
}

/// `oracle`: brute-force reference count, budget-guarded.
pub fn cmd_oracle(input: &Path, delta: DeltaTriple, budget: u64) -> Result<CountOutcome, CliError> {
    let (graph, ingest) = load(input)?;
    let start = Instant::now();
    let prepared = PreparedGraph::build(&graph);
    let counts = oracle_count(
        &prepared.index,
        &prepared.static_graph,
        &prepared.dag,
        delta,
        budget,
    )?;
    Ok(CountOutcome {
        report: build_count_report(delta, &counts, true),
        ingest,
        wall_ms: start.elapsed().as_millis() as u64,
    })
}

/// One sweep row: the varied value and its counts.
pub struct SweepRow {
    pub value: u64,
    pub counts: TypeCounts,
}

/// `sweep`: one counting pass per point, pipeline built once.
pub fn cmd_sweep(
    input: &Path,
    spec: &SweepSpec,
    threads: usize,
) -> Result<(Vec<SweepRow>, IngestReport, u64), CliError> {
    spec.validate()?;
    let (graph, ingest) = load(input)?;
    let start = Instant::now();
    let prepared = PreparedGraph::build(&graph);
    let mut rows = Vec::new();
    for value in spec.values() {
        let (counts, _) = count_all_parallel(
            &prepared.index,
            &prepared.static_graph,
            &prepared.dag,
            spec.delta_at(value),
            threads,
        )?;
        rows.push(SweepRow { value, counts });
    }
    Ok((rows, ingest, start.elapsed().as_millis() as u64))
}

pub fn render_stats(stats: &DatasetStats, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => serde_json::to_string_pretty(stats).expect("stats serialize"),
        OutputFormat::Tsv => {
            let header = [
                "degeneracy",
                "max_multiplicity",
                "static_edges",
                "static_triangles",
                "temporal_edges",
                "time_span",
                "time_span_years",
                "vertices",
            ]
            .join("\t");
            let row = format!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                stats.degeneracy,
                stats.max_multiplicity,
                stats.static_edges,
                stats.static_triangles,
                stats.temporal_edges,
                stats.time_span,
                stats.time_span_years,
                stats.vertices
            );
            format!("{header}\n{row}")
        }
    }
}

pub fn render_count(report: &CountReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => serde_json::to_string_pretty(report).expect("report serialize"),
        OutputFormat::Tsv => {
            let mut header: Vec<String> = TypeCode::ALL
                .iter()
                .map(|c| c.label().to_string())
                .collect();
            header.extend(
                [
                    "total", "d13", "d12", "d23", "d13_raw", "d12_raw", "d23_raw", "oracle",
                ]
                .map(String::from),
            );
            let mut row: Vec<String> = TypeCode::ALL
                .iter()
                .map(|c| report.counts[c.label()].to_string())
                .collect();
            row.extend([
                report.total.to_string(),
                report.delta.d13.to_string(),
                report.delta.d12.to_string(),
                report.delta.d23.to_string(),
                report.delta_raw.d13.to_string(),
                report.delta_raw.d12.to_string(),
                report.delta_raw.d23.to_string(),
                report.oracle.to_string(),
            ]);
            format!("{}\n{}", header.join("\t"), row.join("\t"))
        }
    }
}

/// Renders sweep rows as CSV with the fixed header
/// `delta_varied,value,<8 type columns>,total[,cyclic,acyclic]`.
pub fn sweep_csv(spec: &SweepSpec, rows: &[SweepRow]) -> String {
    let mut out = String::from("delta_varied,value");
    for code in TypeCode::ALL {
        out.push(',');
        out.push_str(code.label());
    }
    out.push_str(",total");
    if spec.split_cyclic {
        out.push_str(",cyclic,acyclic");
    }
    out.push('\n');
    for row in rows {
        out.push_str(spec.vary.name());
        out.push(',');
        out.push_str(&row.value.to_string());
        for code in TypeCode::ALL {
            out.push(',');
            out.push_str(&row.counts.get(code).to_string());
        }
        out.push(',');
        out.push_str(&row.counts.total().to_string());
        if spec.split_cyclic {
            out.push(',');
            out.push_str(&row.counts.cyclic_total().to_string());
            out.push(',');
            out.push_str(&row.counts.acyclic_total().to_string());
        }
        out.push('\n');
    }
    out
}
