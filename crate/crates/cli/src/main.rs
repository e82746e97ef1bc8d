use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ttc_cli::{
    cmd_count, cmd_oracle, cmd_stats, cmd_sweep, parse_duration, render_count, render_stats,
    sweep_csv, CliError, DeltaComponent, OutputFormat, SweepSpec,
};
use ttc_core::{DeltaTriple, IngestReport, DEFAULT_ORACLE_BUDGET};

/// Temporal triangle counting for timestamped directed multigraphs.
#[derive(Parser)]
#[command(name = "ttc", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dataset statistics: vertices, edges, triangles, degeneracy, ...
    Stats {
        /// Edge-list file (`src dst timestamp` per line; gzip detected)
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Count the eight temporal triangle types under (d13, d12, d23)
    Count {
        #[arg(long)]
        input: PathBuf,
        /// Max gap between first and last edge (int, or s/m/h/d suffix)
        #[arg(long, value_parser = parse_duration, default_value = "1h")]
        d13: u64,
        /// Max gap between first and second edge
        #[arg(long, value_parser = parse_duration, default_value = "1h")]
        d12: u64,
        /// Max gap between second and third edge
        #[arg(long, value_parser = parse_duration, default_value = "1h")]
        d23: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
        /// Worker threads for the counting stage
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Sweep one delta component and emit one CSV row per point
    Sweep {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_parser = parse_duration, default_value = "1h")]
        d13: u64,
        #[arg(long, value_parser = parse_duration, default_value = "1h")]
        d12: u64,
        #[arg(long, value_parser = parse_duration, default_value = "1h")]
        d23: u64,
        /// Component to vary; its --dXX value is ignored
        #[arg(long, value_enum)]
        vary: DeltaComponent,
        #[arg(long, value_parser = parse_duration)]
        from: u64,
        #[arg(long, value_parser = parse_duration)]
        to: u64,
        #[arg(long, value_parser = parse_duration)]
        step: u64,
        /// Add cyclic/acyclic subtotal columns
        #[arg(long)]
        split_cyclic: bool,
        /// Write CSV here instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Brute-force reference count (small inputs; budget-guarded)
    Oracle {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_parser = parse_duration, default_value = "1h")]
        d13: u64,
        #[arg(long, value_parser = parse_duration, default_value = "1h")]
        d12: u64,
        #[arg(long, value_parser = parse_duration, default_value = "1h")]
        d23: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
        /// Max summed per-triangle cross-product size before refusing
        #[arg(long, default_value_t = DEFAULT_ORACLE_BUDGET)]
        oracle_budget: u64,
    },
}

fn emit_diagnostics(ingest: &IngestReport, wall_ms: Option<u64>) {
    eprintln!(
        "{}",
        serde_json::to_string(ingest).expect("diagnostics serialize")
    );
    if let Some(ms) = wall_ms {
        eprintln!("{{\"wall_ms\":{ms}}}");
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Stats { input, format } => {
            let (stats, ingest) = cmd_stats(&input)?;
            emit_diagnostics(&ingest, None);
            println!("{}", render_stats(&stats, format));
        }
        Command::Count {
            input,
            d13,
            d12,
            d23,
            format,
            threads,
        } => {
            let outcome = cmd_count(&input, DeltaTriple::new(d13, d12, d23), threads)?;
            emit_diagnostics(&outcome.ingest, Some(outcome.wall_ms));
            println!("{}", render_count(&outcome.report, format));
        }
        Command::Sweep {
            input,
            d13,
            d12,
            d23,
            vary,
            from,
            to,
            step,
            split_cyclic,
            output,
            threads,
        } => {
            let spec = SweepSpec {
                vary,
                from,
                to,
                step,
                base: DeltaTriple::new(d13, d12, d23),
                split_cyclic,
            };
            let (rows, ingest, wall_ms) = cmd_sweep(&input, &spec, threads)?;
            emit_diagnostics(&ingest, Some(wall_ms));
            let csv = sweep_csv(&spec, &rows);
            match output {
                Some(path) => fs::write(path, csv)?,
                None => print!("{csv}"),
            }
        }
        Command::Oracle {
            input,
            d13,
            d12,
            d23,
            format,
            oracle_budget,
        } => {
            let outcome = cmd_oracle(&input, DeltaTriple::new(d13, d12, d23), oracle_budget)?;
            emit_diagnostics(&outcome.ingest, Some(outcome.wall_ms));
            println!("{}", render_count(&outcome.report, format));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
