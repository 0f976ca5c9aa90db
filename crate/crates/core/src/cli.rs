//! Command-line front end. Exit codes: 0 success, 1 validation or parse
//! error, 2 I/O error.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::datagen::{generate, load_dataset, project_properties, save_dataset, GeneratorConfig};
use crate::harness::{
    emit_plot_data, read_partition_csv, read_ranking_csv, run_grid, write_partition_csv,
    write_quality_csv, write_ranking_csv, GridSpec, HarnessError, SortStrategy,
};
use crate::mcda::{rank, VikorParams};
use crate::metrics::evaluate_selection;
use crate::model::{Method, Selection};

#[derive(Debug, Parser)]
#[command(name = "sensor-mcda", version, about = "Rank sensor pools and score selections against Pareto fronts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a synthetic sensor dataset (CSV plus criteria descriptor).
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Rank a dataset with one method.
    Rank {
        #[arg(long)]
        data: PathBuf,
        #[arg(long)]
        method: Method,
        #[arg(long)]
        props: usize,
        #[arg(long, default_value_t = 0.5)]
        v: f64,
        #[arg(long, value_delimiter = ',')]
        weights: Option<Vec<f64>>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Sort a dataset into Pareto fronts.
    Pareto {
        #[arg(long)]
        data: PathBuf,
        #[arg(long)]
        props: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Score the top-k of a ranking against a partition.
    Eval {
        #[arg(long)]
        ranking: PathBuf,
        #[arg(long)]
        partition: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a full experiment grid.
    Grid {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        ks: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        props: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        methods: Vec<Method>,
        #[arg(long, value_delimiter = ',', required = true)]
        seeds: Vec<u64>,
        #[arg(long, default_value_t = 0.5)]
        v: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Turn results.csv into per-figure tables.
    Plotdata {
        #[arg(long)]
        results: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn execute(command: Command) -> Result<(), HarnessError> {
    match command {
        Command::Gen { n, seed, out } => {
            let matrix = generate(&GeneratorConfig::new(n, seed))?;
            save_dataset(&matrix, &out)?;
        }
        Command::Rank {
            data,
            method,
            props,
            v,
            weights,
            out,
        } => {
            let mut matrix = project_properties(&load_dataset(&data)?, props)?;
            if let Some(w) = weights {
                matrix = matrix.with_weights(&w)?;
            }
            let ranking = rank(&matrix, method, VikorParams::new(v)?);
            write_ranking_csv(&ranking, matrix.option_ids(), &out)?;
        }
        Command::Pareto { data, props, out } => {
            let matrix = project_properties(&load_dataset(&data)?, props)?;
            let partition = SortStrategy::Auto.sort(&matrix);
            write_partition_csv(&partition, matrix.option_ids(), &out)?;
        }
        Command::Eval {
            ranking,
            partition,
            k,
            out,
        } => {
            let entries = read_ranking_csv(&ranking)?;
            let (ids, parts) = read_partition_csv(&partition)?;
            let index: std::collections::HashMap<&str, usize> =
                ids.iter().enumerate().map(|(i, id)| (id.as_str(), i)).collect();
            let picked = entries
                .iter()
                .take(k)
                .map(|e| {
                    index.get(e.option_id.as_str()).copied().ok_or_else(|| {
                        HarnessError::Spec(format!(
                            "ranked option `{}` is missing from {}",
                            e.option_id,
                            partition.display()
                        ))
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            let quality = evaluate_selection(&Selection::new(picked, k), &parts)?;
            write_quality_csv(&quality, &out)?;
        }
        Command::Grid {
            n,
            ks,
            props,
            methods,
            seeds,
            v,
            out,
        } => {
            let spec = GridSpec {
                n_sensors: n,
                methods,
                ks,
                property_counts: props,
                seeds,
                vikor_v: v,
            };
            let results = run_grid(&spec, None, &out)?;
            for r in &results {
                eprintln!(
                    "{} k={} props={} seed={}: rank {:.1} ms, sort {:.1} ms, evaluate {:.3} ms",
                    r.method,
                    r.k,
                    r.n_properties,
                    r.seed,
                    r.timings.rank_ms,
                    r.timings.sort_ms,
                    r.timings.evaluate_ms
                );
            }
        }
        Command::Plotdata { results, out } => {
            emit_plot_data(&results, &out)?;
        }
    }
    Ok(())
}
