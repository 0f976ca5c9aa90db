//! Core domain types: criteria, decision matrices, rankings and selections.
//!
//! A [`DecisionMatrix`] holds `M` options (rows) scored on `N` criteria
//! (columns). Every constructor validates its input, so a matrix that exists
//! is always finite and dimensionally consistent.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Optimisation direction of a criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    #[serde(rename = "max")]
    Maximize,
    #[serde(rename = "min")]
    Minimize,
}

impl Direction {
    pub fn flipped(self) -> Self {
        match self {
            Direction::Maximize => Direction::Minimize,
            Direction::Minimize => Direction::Maximize,
        }
    }

    /// Returns true when `a` is strictly preferable to `b` under this direction.
    #[inline]
    pub fn better(self, a: f64, b: f64) -> bool {
        match self {
            Direction::Maximize => a > b,
            Direction::Minimize => a < b,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Maximize => "max",
            Direction::Minimize => "min",
        })
    }
}

/// One criterion column: name, direction and (non-negative) weight.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriterionSpec {
    pub name: String,
    pub direction: Direction,
    pub weight: f64,
}

impl CriterionSpec {
    pub fn new(name: impl Into<String>, direction: Direction, weight: f64) -> Self {
        Self {
            name: name.into(),
            direction,
            weight,
        }
    }

    pub fn maximize(name: impl Into<String>, weight: f64) -> Self {
        Self::new(name, Direction::Maximize, weight)
    }

    pub fn minimize(name: impl Into<String>, weight: f64) -> Self {
        Self::new(name, Direction::Minimize, weight)
    }
}

/// Ordered, validated list of criteria.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct CriteriaSet {
    criteria: Vec<CriterionSpec>,
}

impl CriteriaSet {
    pub fn new(criteria: Vec<CriterionSpec>) -> Result<Self, ModelError> {
        let violations = criteria_violations(&criteria);
        if !violations.is_empty() {
            return Err(ModelError::Invalid(ValidationReport { violations }));
        }
        Ok(Self { criteria })
    }

    /// Builds a set with every weight set to `1/N`.
    pub fn equal_weights(specs: &[(&str, Direction)]) -> Result<Self, ModelError> {
        let w = 1.0 / specs.len().max(1) as f64;
        Self::new(
            specs
                .iter()
                .map(|(name, dir)| CriterionSpec::new(*name, *dir, w))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.criteria.len()
    }

    pub fn is_empty(&self) -> bool {
        self.criteria.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, CriterionSpec> {
        self.criteria.iter()
    }

    pub fn get(&self, j: usize) -> &CriterionSpec {
        &self.criteria[j]
    }

    pub fn as_slice(&self) -> &[CriterionSpec] {
        &self.criteria
    }

    pub fn weights(&self) -> Vec<f64> {
        self.criteria.iter().map(|c| c.weight).collect()
    }

    pub fn directions(&self) -> Vec<Direction> {
        self.criteria.iter().map(|c| c.direction).collect()
    }

    pub fn names(&self) -> Vec<&str> {
        self.criteria.iter().map(|c| c.name.as_str()).collect()
    }

    /// Replaces the weights, keeping names and directions.
    pub fn with_weights(&self, weights: &[f64]) -> Result<Self, ModelError> {
        if weights.len() != self.criteria.len() {
            return Err(ModelError::WeightCount {
                expected: self.criteria.len(),
                got: weights.len(),
            });
        }
        Self::new(
            self.criteria
                .iter()
                .zip(weights)
                .map(|(c, &w)| CriterionSpec::new(c.name.clone(), c.direction, w))
                .collect(),
        )
    }
}

impl<'de> Deserialize<'de> for CriteriaSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let criteria = Vec::<CriterionSpec>::deserialize(d)?;
        CriteriaSet::new(criteria).map_err(serde::de::Error::custom)
    }
}

impl<'a> IntoIterator for &'a CriteriaSet {
    type Item = &'a CriterionSpec;
    type IntoIter = std::slice::Iter<'a, CriterionSpec>;

    fn into_iter(self) -> Self::IntoIter {
        self.criteria.iter()
    }
}

/// A single invariant violation found by [`validate_parts`] / [`validate_matrix`].
#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    NoOptions,
    NoCriteria,
    NonFiniteCell { row: usize, col: usize, value: f64 },
    RaggedRow { row: usize, len: usize, expected: usize },
    ColumnCountMismatch { columns: usize, criteria: usize },
    RowCountMismatch { rows: usize, option_ids: usize },
    EmptyCriterionName { index: usize },
    DuplicateCriterion { name: String },
    InvalidWeight { name: String, weight: f64 },
    DuplicateOptionId { id: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NoOptions => write!(f, "matrix has no options"),
            Violation::NoCriteria => write!(f, "at least one criterion is required"),
            Violation::NonFiniteCell { row, col, value } => {
                write!(f, "cell ({row},{col}) is not finite: {value}")
            }
            Violation::RaggedRow { row, len, expected } => {
                write!(f, "row {row} has {len} values, expected {expected}")
            }
            Violation::ColumnCountMismatch { columns, criteria } => {
                write!(f, "matrix has {columns} columns but {criteria} criteria")
            }
            Violation::RowCountMismatch { rows, option_ids } => {
                write!(f, "matrix has {rows} rows but {option_ids} option ids")
            }
            Violation::EmptyCriterionName { index } => {
                write!(f, "criterion {index} has an empty name")
            }
            Violation::DuplicateCriterion { name } => write!(f, "duplicate criterion `{name}`"),
            Violation::InvalidWeight { name, weight } => {
                write!(f, "criterion `{name}` has invalid weight {weight}")
            }
            Violation::DuplicateOptionId { id } => write!(f, "duplicate option id `{id}`"),
        }
    }
}

/// Every violation found in a candidate matrix; empty means valid.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum ModelError {
    #[error("invalid decision matrix: {0}")]
    Invalid(ValidationReport),
    #[error("expected {expected} weights, got {got}")]
    WeightCount { expected: usize, got: usize },
    #[error("column index {index} out of range for {columns} columns")]
    ColumnOutOfRange { index: usize, columns: usize },
}

fn criteria_violations(criteria: &[CriterionSpec]) -> Vec<Violation> {
    let mut out = Vec::new();
    if criteria.is_empty() {
        out.push(Violation::NoCriteria);
    }
    let mut seen = HashSet::new();
    for (index, c) in criteria.iter().enumerate() {
        if c.name.is_empty() {
            out.push(Violation::EmptyCriterionName { index });
        } else if !seen.insert(c.name.as_str()) {
            out.push(Violation::DuplicateCriterion {
                name: c.name.clone(),
            });
        }
        if !(c.weight.is_finite() && c.weight >= 0.0) {
            out.push(Violation::InvalidWeight {
                name: c.name.clone(),
                weight: c.weight,
            });
        }
    }
    out
}

/// Checks raw matrix parts against every [`DecisionMatrix`] invariant.
///
/// Violations are returned as data; nothing here fails.
pub fn validate_parts(
    rows: &[Vec<f64>],
    criteria: &[CriterionSpec],
    option_ids: &[String],
) -> ValidationReport {
    let mut violations = Vec::new();
    if rows.is_empty() {
        violations.push(Violation::NoOptions);
    }
    violations.extend(criteria_violations(criteria));

    let columns = rows.first().map_or(criteria.len(), Vec::len);
    if columns != criteria.len() {
        violations.push(Violation::ColumnCountMismatch {
            columns,
            criteria: criteria.len(),
        });
    }
    for (i, row) in rows.iter().enumerate() {
        if row.len() != columns {
            violations.push(Violation::RaggedRow {
                row: i,
                len: row.len(),
                expected: columns,
            });
        }
        for (j, &value) in row.iter().enumerate() {
            if !value.is_finite() {
                violations.push(Violation::NonFiniteCell { row: i, col: j, value });
            }
        }
    }
    if rows.len() != option_ids.len() {
        violations.push(Violation::RowCountMismatch {
            rows: rows.len(),
            option_ids: option_ids.len(),
        });
    }
    let mut seen = HashSet::new();
    for id in option_ids {
        if !seen.insert(id.as_str()) {
            violations.push(Violation::DuplicateOptionId { id: id.clone() });
        }
    }
    ValidationReport { violations }
}

/// Re-checks a constructed matrix. Always empty for matrices built by this module.
pub fn validate_matrix(matrix: &DecisionMatrix) -> ValidationReport {
    let rows: Vec<Vec<f64>> = matrix.rows().map(<[f64]>::to_vec).collect();
    validate_parts(&rows, matrix.criteria.as_slice(), &matrix.option_ids)
}

/// `M` options by `N` criteria of finite values, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DecisionMatrix {
    values: Vec<f64>,
    n_options: usize,
    criteria: CriteriaSet,
    option_ids: Vec<String>,
}

impl DecisionMatrix {
    pub fn new(
        rows: Vec<Vec<f64>>,
        criteria: CriteriaSet,
        option_ids: Vec<String>,
    ) -> Result<Self, ModelError> {
        let report = validate_parts(&rows, criteria.as_slice(), &option_ids);
        if !report.is_valid() {
            return Err(ModelError::Invalid(report));
        }
        let n_options = rows.len();
        Ok(Self {
            values: rows.into_iter().flatten().collect(),
            n_options,
            criteria,
            option_ids,
        })
    }

    /// Like [`DecisionMatrix::new`] with ids `o0`, `o1`, ...
    pub fn from_rows(rows: Vec<Vec<f64>>, criteria: CriteriaSet) -> Result<Self, ModelError> {
        let ids = (0..rows.len()).map(|i| format!("o{i}")).collect();
        Self::new(rows, criteria, ids)
    }

    pub fn n_options(&self) -> usize {
        self.n_options
    }

    pub fn n_criteria(&self) -> usize {
        self.criteria.len()
    }

    pub fn criteria(&self) -> &CriteriaSet {
        &self.criteria
    }

    pub fn option_ids(&self) -> &[String] {
        &self.option_ids
    }

    #[inline]
    pub fn value(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.criteria.len() + j]
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[f64] {
        let n = self.criteria.len();
        &self.values[i * n..(i + 1) * n]
    }

    pub fn rows(&self) -> std::slice::ChunksExact<'_, f64> {
        self.values.chunks_exact(self.criteria.len())
    }

    pub fn column(&self, j: usize) -> impl Iterator<Item = f64> + '_ {
        self.rows().map(move |r| r[j])
    }

    /// Sub-matrix of the given columns, in the given order.
    pub fn select_columns(&self, columns: &[usize]) -> Result<Self, ModelError> {
        let n = self.n_criteria();
        if let Some(&index) = columns.iter().find(|&&c| c >= n) {
            return Err(ModelError::ColumnOutOfRange { index, columns: n });
        }
        let criteria = CriteriaSet::new(
            columns
                .iter()
                .map(|&c| self.criteria.get(c).clone())
                .collect(),
        )?;
        let rows = self
            .rows()
            .map(|r| columns.iter().map(|&c| r[c]).collect())
            .collect();
        Self::new(rows, criteria, self.option_ids.clone())
    }

    pub fn with_criteria(&self, criteria: CriteriaSet) -> Result<Self, ModelError> {
        let rows = self.rows().map(<[f64]>::to_vec).collect();
        Self::new(rows, criteria, self.option_ids.clone())
    }

    pub fn with_weights(&self, weights: &[f64]) -> Result<Self, ModelError> {
        Ok(Self {
            criteria: self.criteria.with_weights(weights)?,
            ..self.clone()
        })
    }
}

/// The MCDA method that produced a ranking.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Saw,
    Topsis,
    Vikor,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Saw, Method::Topsis, Method::Vikor];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Saw => "saw",
            Method::Topsis => "topsis",
            Method::Vikor => "vikor",
        }
    }

    /// Whether larger scores rank first.
    pub fn higher_is_better(self) -> bool {
        !matches!(self, Method::Vikor)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "saw" => Ok(Method::Saw),
            "topsis" => Ok(Method::Topsis),
            "vikor" => Ok(Method::Vikor),
            other => Err(format!("unknown method `{other}` (expected saw, topsis or vikor)")),
        }
    }
}

/// Intermediate quantities recorded by a ranking method.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct MethodTrace {
    pub normalized: Option<Vec<Vec<f64>>>,
    pub ideal_positive: Option<Vec<f64>>,
    pub ideal_negative: Option<Vec<f64>>,
    pub dist_positive: Option<Vec<f64>>,
    pub dist_negative: Option<Vec<f64>>,
    pub utility: Option<Vec<f64>>,
    pub regret: Option<Vec<f64>>,
    pub group_utility: Option<Vec<f64>>,
}

/// Options ordered best first, with the per-option scores that produced the order.
#[derive(Debug, Clone, PartialEq)]
pub struct Ranking {
    order: Vec<usize>,
    scores: Vec<f64>,
    method: Method,
    trace: MethodTrace,
}

impl Ranking {
    /// Sorts options by score in the method's direction, ties by ascending index.
    pub fn from_scores(method: Method, scores: Vec<f64>, trace: MethodTrace) -> Self {
        let order = order_by_scores(&scores, method.higher_is_better());
        Self {
            order,
            scores,
            method,
            trace,
        }
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn scores(&self) -> &[f64] {
        &self.scores
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn trace(&self) -> &MethodTrace {
        &self.trace
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// The first `min(k, M)` options of the ranking.
    pub fn top_k(&self, k: usize) -> Selection {
        Selection::new(self.order.iter().take(k).copied().collect(), k)
    }
}

/// Stable argsort of `scores`; equal scores keep ascending index order.
pub fn order_by_scores(scores: &[f64], descending: bool) -> Vec<usize> {
    let mut order: Vec<usize> = (0..scores.len()).collect();
    if descending {
        order.sort_by(|&a, &b| scores[b].total_cmp(&scores[a]));
    } else {
        order.sort_by(|&a, &b| scores[a].total_cmp(&scores[b]));
    }
    order
}

/// A top-k pick from a ranking, kept in rank order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Selection {
    indices: Vec<usize>,
    k: usize,
}

impl Selection {
    pub fn new(indices: Vec<usize>, k: usize) -> Self {
        Self { indices, k }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}
