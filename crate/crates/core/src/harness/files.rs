//! CSV files exchanged between the single-stage CLI commands.

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::Path;

use super::HarnessError;
use crate::metrics::SelectionQuality;
use crate::model::Ranking;
use crate::pareto::ParetoPartition;

/// Writes `rank,option_id,score`, rank 1 first.
pub fn write_ranking_csv(
    ranking: &Ranking,
    option_ids: &[String],
    path: &Path,
) -> Result<(), HarnessError> {
    let mut w = Writer::create(path)?;
    w.line("rank,option_id,score")?;
    for (pos, &i) in ranking.order().iter().enumerate() {
        w.line(&format!("{},{},{}", pos + 1, option_ids[i], ranking.scores()[i]))?;
    }
    w.finish()
}

/// Writes `option_id,front` in option order.
pub fn write_partition_csv(
    partition: &ParetoPartition,
    option_ids: &[String],
    path: &Path,
) -> Result<(), HarnessError> {
    let mut w = Writer::create(path)?;
    w.line("option_id,front")?;
    for (id, f) in option_ids.iter().zip(partition.front_of()) {
        w.line(&format!("{id},{f}"))?;
    }
    w.finish()
}

/// Writes `front,front_size,selected_in_front,onvgr,fronts_spanned`.
pub fn write_quality_csv(quality: &SelectionQuality, path: &Path) -> Result<(), HarnessError> {
    let mut w = Writer::create(path)?;
    w.line("front,front_size,selected_in_front,onvgr,fronts_spanned")?;
    for c in &quality.coverages {
        w.line(&format!(
            "{},{},{},{},{}",
            c.front_index, c.front_size, c.selected_in_front, c.onvgr, quality.fronts_spanned
        ))?;
    }
    w.finish()
}

#[derive(Debug, Clone, PartialEq)]
pub struct RankedEntry {
    pub rank: usize,
    pub option_id: String,
    pub score: f64,
}

/// Reads a ranking file back, sorted by rank.
pub fn read_ranking_csv(path: &Path) -> Result<Vec<RankedEntry>, HarnessError> {
    let rows = read_table(path, &["rank", "option_id", "score"])?;
    let mut entries = rows
        .into_iter()
        .map(|(line, r)| {
            Ok(RankedEntry {
                rank: parse_field(path, line, "rank", &r[0])?,
                option_id: r[1].clone(),
                score: parse_field(path, line, "score", &r[2])?,
            })
        })
        .collect::<Result<Vec<_>, HarnessError>>()?;
    entries.sort_by_key(|e| e.rank);
    Ok(entries)
}

/// Reads `option_id,front` into ids (file order) and a partition.
pub fn read_partition_csv(path: &Path) -> Result<(Vec<String>, ParetoPartition), HarnessError> {
    let rows = read_table(path, &["option_id", "front"])?;
    let mut ids = Vec::with_capacity(rows.len());
    let mut fronts = Vec::with_capacity(rows.len());
    for (line, r) in rows {
        ids.push(r[0].clone());
        fronts.push(parse_field::<usize>(path, line, "front", &r[1])?);
    }
    let partition = ParetoPartition::from_front_indices(fronts).map_err(|message| {
        HarnessError::Parse {
            path: path.to_owned(),
            line: 0,
            message,
        }
    })?;
    Ok((ids, partition))
}

pub(crate) fn parse_field<T: std::str::FromStr>(
    path: &Path,
    line: u64,
    name: &str,
    raw: &str,
) -> Result<T, HarnessError>
where
    T::Err: std::fmt::Display,
{
    raw.trim().parse().map_err(|e: T::Err| HarnessError::Parse {
        path: path.to_owned(),
        line,
        message: format!("{name} `{raw}`: {e}"),
    })
}

/// Reads a headed CSV, checking the header and field count of every row.
/// Returns `(line, fields)` pairs.
pub(crate) fn read_table(
    path: &Path,
    header: &[&str],
) -> Result<Vec<(u64, Vec<String>)>, HarnessError> {
    let file = File::open(path).map_err(|e| HarnessError::io(path, e))?;
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(BufReader::new(file));
    let parse = |line: u64, message: String| HarnessError::Parse {
        path: path.to_owned(),
        line,
        message,
    };
    let mut records = reader.records();
    let first = match records.next() {
        Some(r) => r.map_err(|e| parse(1, e.to_string()))?,
        None => return Err(parse(1, format!("empty file, expected header `{}`", header.join(",")))),
    };
    if first.iter().collect::<Vec<_>>() != header {
        return Err(parse(1, format!("expected header `{}`", header.join(","))));
    }
    let mut out = Vec::new();
    for record in records {
        let record = record.map_err(|e| {
            parse(e.position().map_or(0, |p| p.line()), e.to_string())
        })?;
        let line = record.position().map_or(0, |p| p.line());
        if record.len() != header.len() {
            return Err(parse(
                line,
                format!("expected {} fields, found {}", header.len(), record.len()),
            ));
        }
        out.push((line, record.iter().map(str::to_owned).collect()));
    }
    Ok(out)
}

/// Buffered line writer that reports the file path on failure.
pub(crate) struct Writer<'p> {
    path: &'p Path,
    inner: BufWriter<File>,
}

impl<'p> Writer<'p> {
    pub(crate) fn create(path: &'p Path) -> Result<Self, HarnessError> {
        let file = File::create(path).map_err(|e| HarnessError::io(path, e))?;
        Ok(Self {
            path,
            inner: BufWriter::new(file),
        })
    }

    pub(crate) fn line(&mut self, s: &str) -> Result<(), HarnessError> {
        self.inner
            .write_all(s.as_bytes())
            .and_then(|_| self.inner.write_all(b"\n"))
            .map_err(|e| HarnessError::io(self.path, e))
    }

    pub(crate) fn finish(mut self) -> Result<(), HarnessError> {
        self.inner.flush().map_err(|e| HarnessError::io(self.path, e))
    }
}
