//! Multi-criteria ranking of sensor pools (SAW, TOPSIS, VIKOR) and a
//! Pareto-front harness that measures how much of each non-dominated front a
//! top-k selection recovers.
//!
//! The pipeline is: [`datagen`] builds or loads a [`model::DecisionMatrix`],
//! [`mcda`] ranks it, [`pareto`] sorts the full pool into fronts, and
//! [`metrics`] scores the top-k against those fronts. [`harness`] wires the
//! stages into experiment grids and CSV outputs; [`cli`] exposes them as
//! subcommands.

pub mod cli;
pub mod datagen;
pub mod harness;
pub mod mcda;
pub mod metrics;
pub mod model;
pub mod pareto;

pub use mcda::{saw_rank, topsis_rank, vikor_compromise, vikor_rank, VikorParams};
pub use model::{CriteriaSet, CriterionSpec, DecisionMatrix, Direction, Method, Ranking, Selection};
pub use pareto::{fast_non_dominated_sort, naive_front_sort, ParetoPartition};
