//! End-to-end evaluation workflow: project, rank, select top-k, sort the
//! full pool into Pareto fronts, and measure how the selection covers them.

mod files;
mod grid;
mod plot;

pub use files::{
    read_partition_csv, read_ranking_csv, write_partition_csv, write_quality_csv,
    write_ranking_csv, RankedEntry,
};
pub use grid::{execute_grid, run_grid, GridRun, GridSpec};
pub use plot::emit_plot_data;

use std::collections::HashMap;
use std::io;
use std::path::PathBuf;
use std::time::Instant;

use thiserror::Error;

use crate::datagen::{project_properties, DatasetError};
use crate::mcda::{rank, McdaError, VikorParams};
use crate::metrics::{evaluate_selection, MetricsError, SelectionQuality};
use crate::model::{DecisionMatrix, Method, ModelError, Ranking};
use crate::pareto::{efficient_non_dominated_sort, fast_non_dominated_sort, ParetoPartition};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("invalid grid spec: {0}")]
    Spec(String),
    #[error(transparent)]
    Dataset(#[from] DatasetError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Mcda(#[from] McdaError),
    #[error(transparent)]
    Metrics(#[from] MetricsError),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("{path}:{line}: {message}")]
    Parse {
        path: PathBuf,
        line: u64,
        message: String,
    },
    #[error("cell (method={method}, k={k}, n_properties={n_properties}, seed={seed}): {source}")]
    Cell {
        method: Method,
        k: usize,
        n_properties: usize,
        seed: u64,
        #[source]
        source: Box<HarnessError>,
    },
}

impl HarnessError {
    pub(crate) fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        HarnessError::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit code: 2 for I/O failures, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            HarnessError::Io { .. } => 2,
            HarnessError::Dataset(e) if e.is_io() => 2,
            HarnessError::Cell { source, .. } => source.exit_code(),
            _ => 1,
        }
    }
}

/// Which non-dominated sorter backs the partition stage.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SortStrategy {
    /// Domination-count sort up to [`FAST_SORT_LIMIT`] options, the
    /// low-memory presort variant above it.
    #[default]
    Auto,
    Fast,
    Efficient,
}

/// Largest pool sorted with the domination-count sorter under
/// [`SortStrategy::Auto`]; its dominated sets grow quadratically.
pub const FAST_SORT_LIMIT: usize = 20_000;

impl SortStrategy {
    pub fn sort(self, matrix: &DecisionMatrix) -> ParetoPartition {
        match self {
            SortStrategy::Fast => fast_non_dominated_sort(matrix),
            SortStrategy::Efficient => efficient_non_dominated_sort(matrix),
            SortStrategy::Auto if matrix.n_options() <= FAST_SORT_LIMIT => {
                fast_non_dominated_sort(matrix)
            }
            SortStrategy::Auto => efficient_non_dominated_sort(matrix),
        }
    }
}

/// Coordinates of one grid cell on a fixed dataset.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CellSpec {
    pub method: Method,
    pub k: usize,
    pub n_properties: usize,
    pub vikor_v: f64,
}

/// Wall time of each stage in milliseconds. Cached stages report 0.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct StageTimings {
    pub rank_ms: f64,
    pub sort_ms: f64,
    pub evaluate_ms: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentResult {
    pub method: Method,
    pub n_sensors: usize,
    pub k: usize,
    pub n_properties: usize,
    pub seed: u64,
    pub quality: SelectionQuality,
    pub timings: StageTimings,
}

fn elapsed_ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

/// All cells that share one dataset. Projections, partitions and rankings
/// are computed once per `n_properties` (and method) and reused, so every
/// method sees identical front data.
pub struct CellFamily<'a> {
    matrix: &'a DecisionMatrix,
    seed: u64,
    strategy: SortStrategy,
    projections: HashMap<usize, DecisionMatrix>,
    partitions: HashMap<usize, ParetoPartition>,
    rankings: HashMap<(Method, usize, u64), Ranking>,
}

impl<'a> CellFamily<'a> {
    pub fn new(matrix: &'a DecisionMatrix, seed: u64) -> Self {
        Self::with_strategy(matrix, seed, SortStrategy::Auto)
    }

    pub fn with_strategy(matrix: &'a DecisionMatrix, seed: u64, strategy: SortStrategy) -> Self {
        Self {
            matrix,
            seed,
            strategy,
            projections: HashMap::new(),
            partitions: HashMap::new(),
            rankings: HashMap::new(),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    fn projection(&mut self, n_properties: usize) -> Result<&DecisionMatrix, HarnessError> {
        if !self.projections.contains_key(&n_properties) {
            let p = project_properties(self.matrix, n_properties)?;
            self.projections.insert(n_properties, p);
        }
        Ok(&self.projections[&n_properties])
    }

    /// Partition of the projected full pool, with the time spent computing
    /// it (0 when cached).
    pub fn partition(
        &mut self,
        n_properties: usize,
    ) -> Result<(&ParetoPartition, f64), HarnessError> {
        let mut ms = 0.0;
        if !self.partitions.contains_key(&n_properties) {
            let strategy = self.strategy;
            let projected = self.projection(n_properties)?;
            let start = Instant::now();
            let partition = strategy.sort(projected);
            ms = elapsed_ms(start);
            self.partitions.insert(n_properties, partition);
        }
        Ok((&self.partitions[&n_properties], ms))
    }

    fn ranking(
        &mut self,
        method: Method,
        n_properties: usize,
        params: VikorParams,
    ) -> Result<(&Ranking, f64), HarnessError> {
        let key = (method, n_properties, params.v().to_bits());
        let mut ms = 0.0;
        if !self.rankings.contains_key(&key) {
            let projected = self.projection(n_properties)?;
            let start = Instant::now();
            let ranking = rank(projected, method, params);
            ms = elapsed_ms(start);
            self.rankings.insert(key, ranking);
        }
        Ok((&self.rankings[&key], ms))
    }

    pub fn run_cell(&mut self, cell: &CellSpec) -> Result<ExperimentResult, HarnessError> {
        self.run_cell_inner(cell).map_err(|source| HarnessError::Cell {
            method: cell.method,
            k: cell.k,
            n_properties: cell.n_properties,
            seed: self.seed,
            source: Box::new(source),
        })
    }

    fn run_cell_inner(&mut self, cell: &CellSpec) -> Result<ExperimentResult, HarnessError> {
        let m = self.matrix.n_options();
        if cell.k == 0 || cell.k > m {
            return Err(HarnessError::Spec(format!(
                "k must be in 1..={m}, got {}",
                cell.k
            )));
        }
        let params = VikorParams::new(cell.vikor_v)?;
        let (ranking, rank_ms) = self.ranking(cell.method, cell.n_properties, params)?;
        let selection = ranking.top_k(cell.k);
        let (partition, sort_ms) = self.partition(cell.n_properties)?;
        let start = Instant::now();
        let quality = evaluate_selection(&selection, partition)?;
        let evaluate_ms = elapsed_ms(start);
        Ok(ExperimentResult {
            method: cell.method,
            n_sensors: m,
            k: cell.k,
            n_properties: cell.n_properties,
            seed: self.seed,
            quality,
            timings: StageTimings {
                rank_ms,
                sort_ms,
                evaluate_ms,
            },
        })
    }
}

/// One-off cell without a shared cache. The seed column is recorded as 0.
pub fn run_cell(
    matrix: &DecisionMatrix,
    method: Method,
    k: usize,
    n_properties: usize,
    vikor_v: f64,
) -> Result<ExperimentResult, HarnessError> {
    CellFamily::new(matrix, 0).run_cell(&CellSpec {
        method,
        k,
        n_properties,
        vikor_v,
    })
}
