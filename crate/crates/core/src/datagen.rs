//! Seeded synthetic sensor pools and dataset persistence.
//!
//! # Random stream
//!
//! Generation uses ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded through
//! `SeedableRng::seed_from_u64`, whose output is value-stable across
//! platforms and crate releases. Cells are drawn row by row, one 64-bit word
//! per cell: the top 53 bits give `u` in `[0, 1)` and the cell is
//! `low + u * (high - low)`, capped at `high`.
//!
//! # Files
//!
//! A dataset is a CSV file with header `id,<criterion>,...` plus a JSON
//! descriptor next to it (`data.csv` -> `data.criteria.json`) holding
//! `[{"name", "direction": "max"|"min", "weight"}, ...]` in column order.
//! Values are written with the shortest representation that parses back to
//! the same `f64`.

use std::collections::HashSet;
use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use thiserror::Error;

use crate::model::{CriteriaSet, CriterionSpec, DecisionMatrix, Direction, ModelError};

/// Value range of one generated attribute.
#[derive(Debug, Clone, PartialEq)]
pub struct AttributeRange {
    pub name: String,
    pub direction: Direction,
    pub low: f64,
    pub high: f64,
    pub unit: String,
}

impl AttributeRange {
    pub fn new(name: &str, direction: Direction, low: f64, high: f64, unit: &str) -> Self {
        Self {
            name: name.to_owned(),
            direction,
            low,
            high,
            unit: unit.to_owned(),
        }
    }
}

/// The six sensor context properties, in the order used for projections.
pub fn canonical_attributes() -> Vec<AttributeRange> {
    use Direction::{Maximize, Minimize};
    vec![
        AttributeRange::new("battery", Maximize, 0.0, 100.0, "%"),
        AttributeRange::new("price", Minimize, 1.0, 1000.0, "currency"),
        AttributeRange::new("drift", Minimize, 0.0, 10.0, "%"),
        AttributeRange::new("frequency", Maximize, 0.1, 100.0, "Hz"),
        AttributeRange::new("energy_consumption", Minimize, 1.0, 500.0, "mW"),
        AttributeRange::new("response_time", Minimize, 1.0, 5000.0, "ms"),
    ]
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorConfig {
    pub n_sensors: usize,
    pub seed: u64,
    pub attributes: Vec<AttributeRange>,
}

impl GeneratorConfig {
    /// `n_sensors` sensors over the canonical attributes.
    pub fn new(n_sensors: usize, seed: u64) -> Self {
        Self {
            n_sensors,
            seed,
            attributes: canonical_attributes(),
        }
    }

    fn validate(&self) -> Result<(), DatasetError> {
        if self.n_sensors == 0 {
            return Err(DatasetError::Config("n_sensors must be at least 1".into()));
        }
        if self.attributes.is_empty() {
            return Err(DatasetError::Config("at least one attribute is required".into()));
        }
        let mut names = HashSet::new();
        for a in &self.attributes {
            if !names.insert(a.name.as_str()) {
                return Err(DatasetError::Config(format!("duplicate attribute `{}`", a.name)));
            }
            if !(a.low.is_finite() && a.high.is_finite() && a.low < a.high) {
                return Err(DatasetError::Config(format!(
                    "attribute `{}` needs finite low < high, got [{}, {}]",
                    a.name, a.low, a.high
                )));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum DatasetError {
    #[error("invalid generator config: {0}")]
    Config(String),
    #[error("n_properties must be in 2..={max}, got {got}")]
    PropertyCount { got: usize, max: usize },
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("missing criteria descriptor {0}")]
    MissingDescriptor(PathBuf),
    #[error("{path}: malformed criteria descriptor: {message}")]
    Descriptor { path: PathBuf, message: String },
    #[error("{path}:{line}:{column}: {message}")]
    Parse {
        path: PathBuf,
        line: u64,
        column: usize,
        message: String,
    },
    #[error("criterion names differ: CSV header has [{header}], descriptor has [{descriptor}]")]
    NameMismatch { header: String, descriptor: String },
}

impl DatasetError {
    fn io(path: &Path, source: io::Error) -> Self {
        DatasetError::Io {
            path: path.to_owned(),
            source,
        }
    }

    pub fn is_io(&self) -> bool {
        matches!(self, DatasetError::Io { .. } | DatasetError::MissingDescriptor(_))
    }
}

#[inline]
fn unit_interval(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Draws every cell independently and uniformly from its attribute range.
///
/// Criteria carry equal weights `1/N`; ids are `s000000`, `s000001`, ...
pub fn generate(config: &GeneratorConfig) -> Result<DecisionMatrix, DatasetError> {
    config.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let rows = (0..config.n_sensors)
        .map(|_| {
            config
                .attributes
                .iter()
                .map(|a| (a.low + unit_interval(&mut rng) * (a.high - a.low)).min(a.high))
                .collect()
        })
        .collect();
    let w = 1.0 / config.attributes.len() as f64;
    let criteria = CriteriaSet::new(
        config
            .attributes
            .iter()
            .map(|a| CriterionSpec::new(a.name.clone(), a.direction, w))
            .collect(),
    )?;
    let ids = (0..config.n_sensors).map(|i| format!("s{i:06}")).collect();
    Ok(DecisionMatrix::new(rows, criteria, ids)?)
}

/// Keeps the first `n_properties` columns.
pub fn project_properties(
    matrix: &DecisionMatrix,
    n_properties: usize,
) -> Result<DecisionMatrix, DatasetError> {
    let max = matrix.n_criteria();
    if !(2..=max).contains(&n_properties) {
        return Err(DatasetError::PropertyCount {
            got: n_properties,
            max,
        });
    }
    if n_properties == max {
        return Ok(matrix.clone());
    }
    let columns: Vec<usize> = (0..n_properties).collect();
    Ok(matrix.select_columns(&columns)?)
}

/// Sidecar descriptor path for a dataset CSV.
pub fn descriptor_path(csv_path: &Path) -> PathBuf {
    csv_path.with_extension("criteria.json")
}

pub fn save_dataset(matrix: &DecisionMatrix, path: &Path) -> Result<(), DatasetError> {
    let file = File::create(path).map_err(|e| DatasetError::io(path, e))?;
    let mut w = csv::Writer::from_writer(BufWriter::new(file));
    let csv_err = |e: csv::Error| DatasetError::io(path, e.into());

    let mut header = vec!["id".to_owned()];
    header.extend(matrix.criteria().iter().map(|c| c.name.clone()));
    w.write_record(&header).map_err(csv_err)?;
    let mut record = Vec::with_capacity(header.len());
    for (id, row) in matrix.option_ids().iter().zip(matrix.rows()) {
        record.clear();
        record.push(id.clone());
        record.extend(row.iter().map(f64::to_string));
        w.write_record(&record).map_err(csv_err)?;
    }
    w.flush().map_err(|e| DatasetError::io(path, e))?;

    let desc = descriptor_path(path);
    let json = serde_json::to_string_pretty(matrix.criteria()).expect("criteria serialize");
    let mut f = File::create(&desc).map_err(|e| DatasetError::io(&desc, e))?;
    f.write_all(json.as_bytes())
        .and_then(|_| f.write_all(b"\n"))
        .map_err(|e| DatasetError::io(&desc, e))?;
    Ok(())
}

pub fn load_dataset(path: &Path) -> Result<DecisionMatrix, DatasetError> {
    let desc = descriptor_path(path);
    let desc_file = match File::open(&desc) {
        Ok(f) => f,
        Err(e) if e.kind() == io::ErrorKind::NotFound => {
            return Err(DatasetError::MissingDescriptor(desc))
        }
        Err(e) => return Err(DatasetError::io(&desc, e)),
    };
    let criteria: CriteriaSet = serde_json::from_reader(BufReader::new(desc_file))
        .map_err(|e| DatasetError::Descriptor {
            path: desc.clone(),
            message: e.to_string(),
        })?;

    let file = File::open(path).map_err(|e| DatasetError::io(path, e))?;
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .from_reader(BufReader::new(file));
    let parse_err = |line: u64, column: usize, message: String| DatasetError::Parse {
        path: path.to_owned(),
        line,
        column,
        message,
    };

    let mut records = reader.records();
    let header = match records.next() {
        Some(r) => r.map_err(|e| parse_err(1, 1, e.to_string()))?,
        None => return Err(parse_err(1, 1, "empty file, expected a header row".into())),
    };
    if header.get(0) != Some("id") {
        return Err(parse_err(1, 1, "first header column must be `id`".into()));
    }
    let header_names: Vec<&str> = header.iter().skip(1).collect();
    if header_names != criteria.names() {
        return Err(DatasetError::NameMismatch {
            header: header_names.join(","),
            descriptor: criteria.names().join(","),
        });
    }

    let mut ids = Vec::new();
    let mut rows = Vec::new();
    for record in records {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line());
            parse_err(line, 1, e.to_string())
        })?;
        let line = record.position().map_or(0, |p| p.line());
        if record.len() != header.len() {
            return Err(parse_err(
                line,
                record.len().min(header.len()) + 1,
                format!("expected {} fields, found {}", header.len(), record.len()),
            ));
        }
        ids.push(record[0].to_owned());
        let row = record
            .iter()
            .enumerate()
            .skip(1)
            .map(|(col, field)| {
                field
                    .trim()
                    .parse::<f64>()
                    .map_err(|e| parse_err(line, col + 1, format!("`{field}`: {e}")))
            })
            .collect::<Result<Vec<f64>, _>>()?;
        rows.push(row);
    }
    Ok(DecisionMatrix::new(rows, criteria, ids)?)
}
