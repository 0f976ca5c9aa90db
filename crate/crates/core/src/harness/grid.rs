use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use super::files::Writer;
use super::{CellFamily, CellSpec, ExperimentResult, HarnessError, SortStrategy};
use crate::datagen::{generate, load_dataset, GeneratorConfig};
use crate::model::{DecisionMatrix, Method};

/// Factors and levels of an experiment grid.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    pub n_sensors: usize,
    pub methods: Vec<Method>,
    pub ks: Vec<usize>,
    pub property_counts: Vec<usize>,
    pub seeds: Vec<u64>,
    pub vikor_v: f64,
}

impl GridSpec {
    /// 100,000 sensors; 1,000 / 5,000 / 10,000 selected; 2..=6 properties;
    /// all three methods; one seed.
    pub fn paper() -> Self {
        Self {
            n_sensors: 100_000,
            methods: Method::ALL.to_vec(),
            ks: vec![1_000, 5_000, 10_000],
            property_counts: vec![2, 3, 4, 5, 6],
            seeds: vec![1],
            vikor_v: 0.5,
        }
    }

    /// The paper grid scaled to 10,000 sensors (same 1% / 5% / 10% picks)
    /// and repeated over seeds 1..=10.
    pub fn desk() -> Self {
        Self {
            n_sensors: 10_000,
            ks: vec![100, 500, 1_000],
            seeds: (1..=10).collect(),
            ..Self::paper()
        }
    }

    /// Cells per seed.
    pub fn cell_count(&self) -> usize {
        self.methods.len() * self.ks.len() * self.property_counts.len()
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        let fail = |m: String| Err(HarnessError::Spec(m));
        if self.n_sensors == 0 {
            return fail("n_sensors must be at least 1".into());
        }
        for (name, empty) in [
            ("methods", self.methods.is_empty()),
            ("ks", self.ks.is_empty()),
            ("property counts", self.property_counts.is_empty()),
            ("seeds", self.seeds.is_empty()),
        ] {
            if empty {
                return fail(format!("{name} must not be empty"));
            }
        }
        if let Some(k) = self.ks.iter().find(|&&k| k == 0 || k > self.n_sensors) {
            return fail(format!("k = {k} outside 1..={}", self.n_sensors));
        }
        if let Some(p) = self.property_counts.iter().find(|&&p| !(2..=6).contains(&p)) {
            return fail(format!("property count {p} outside 2..=6"));
        }
        if !(0.0..=1.0).contains(&self.vikor_v) {
            return fail(format!("v = {} outside [0, 1]", self.vikor_v));
        }
        if has_duplicates(&self.methods)
            || has_duplicates(&self.ks)
            || has_duplicates(&self.property_counts)
            || has_duplicates(&self.seeds)
        {
            return fail("grid levels must not repeat".into());
        }
        Ok(())
    }
}

fn has_duplicates<T: Ord + Clone>(xs: &[T]) -> bool {
    let mut v = xs.to_vec();
    v.sort();
    v.windows(2).any(|w| w[0] == w[1])
}

/// Everything a grid run produces, before it is written out.
#[derive(Debug, Clone, PartialEq)]
pub struct GridRun {
    /// Sorted by (method, k, n_properties, seed).
    pub results: Vec<ExperimentResult>,
    /// Front sizes per (n_properties, seed).
    pub front_sizes: BTreeMap<(usize, u64), Vec<usize>>,
}

/// Runs every cell for every seed without touching the filesystem (except
/// to load `dataset` when given).
///
/// Without a dataset, each seed generates its own `n_sensors` pool. A loaded
/// dataset stands in for exactly one seed, which labels its rows.
pub fn execute_grid(spec: &GridSpec, dataset: Option<&Path>) -> Result<GridRun, HarnessError> {
    spec.validate()?;
    let loaded = match dataset {
        Some(path) => {
            if spec.seeds.len() != 1 {
                return Err(HarnessError::Spec(
                    "a loaded dataset takes exactly one seed label".into(),
                ));
            }
            Some(load_dataset(path)?)
        }
        None => None,
    };

    let mut results = Vec::with_capacity(spec.cell_count() * spec.seeds.len());
    let mut front_sizes = BTreeMap::new();
    for &seed in &spec.seeds {
        let generated;
        let matrix: &DecisionMatrix = match &loaded {
            Some(m) => m,
            None => {
                generated = generate(&GeneratorConfig::new(spec.n_sensors, seed))?;
                &generated
            }
        };
        let mut family = CellFamily::with_strategy(matrix, seed, SortStrategy::Auto);
        for &n_properties in &spec.property_counts {
            for &method in &spec.methods {
                for &k in &spec.ks {
                    results.push(family.run_cell(&CellSpec {
                        method,
                        k,
                        n_properties,
                        vikor_v: spec.vikor_v,
                    })?);
                }
            }
            let (partition, _) = family.partition(n_properties)?;
            front_sizes.insert((n_properties, seed), partition.front_sizes());
        }
    }
    results.sort_by(|a, b| {
        (a.method, a.k, a.n_properties, a.seed).cmp(&(b.method, b.k, b.n_properties, b.seed))
    });
    Ok(GridRun {
        results,
        front_sizes,
    })
}

/// Runs the grid and writes `results.csv`, `fronts_<n>.csv` and
/// `summary.csv` into `out_dir`. The directory is checked for writability
/// before any computation starts.
pub fn run_grid(
    spec: &GridSpec,
    dataset: Option<&Path>,
    out_dir: &Path,
) -> Result<Vec<ExperimentResult>, HarnessError> {
    spec.validate()?;
    prepare_out_dir(out_dir)?;
    let run = execute_grid(spec, dataset)?;
    run.write(out_dir)?;
    Ok(run.results)
}

pub(crate) fn prepare_out_dir(dir: &Path) -> Result<(), HarnessError> {
    fs::create_dir_all(dir).map_err(|e| HarnessError::io(dir, e))?;
    let probe = dir.join(".write-probe");
    fs::write(&probe, b"").map_err(|e| HarnessError::io(&probe, e))?;
    fs::remove_file(&probe).map_err(|e| HarnessError::io(&probe, e))
}

pub const RESULTS_HEADER: &str =
    "method,n_sensors,k,n_properties,seed,front,front_size,selected_in_front,onvgr,fronts_spanned";

impl GridRun {
    pub fn write(&self, out_dir: &Path) -> Result<(), HarnessError> {
        let path = out_dir.join("results.csv");
        let mut w = Writer::create(&path)?;
        w.line(RESULTS_HEADER)?;
        for r in &self.results {
            for c in &r.quality.coverages {
                w.line(&format!(
                    "{},{},{},{},{},{},{},{},{},{}",
                    r.method,
                    r.n_sensors,
                    r.k,
                    r.n_properties,
                    r.seed,
                    c.front_index,
                    c.front_size,
                    c.selected_in_front,
                    c.onvgr,
                    r.quality.fronts_spanned
                ))?;
            }
        }
        w.finish()?;

        let mut by_props: BTreeMap<usize, Vec<(u64, &Vec<usize>)>> = BTreeMap::new();
        for ((p, seed), sizes) in &self.front_sizes {
            by_props.entry(*p).or_default().push((*seed, sizes));
        }
        for (p, seeds) in by_props {
            let path = out_dir.join(format!("fronts_{p}.csv"));
            let mut w = Writer::create(&path)?;
            w.line("seed,front,front_size")?;
            for (seed, sizes) in seeds {
                for (f, size) in sizes.iter().enumerate() {
                    w.line(&format!("{seed},{},{size}", f + 1))?;
                }
            }
            w.finish()?;
        }

        let path = out_dir.join("summary.csv");
        let mut w = Writer::create(&path)?;
        w.line(
            "method,n_sensors,k,n_properties,n_seeds,front1_onvgr_mean,front1_onvgr_std,\
             fronts_spanned_mean,fronts_spanned_std",
        )?;
        for (key, group) in self.cells() {
            let (method, n_sensors, k, n_properties) = key;
            let onvgr: Vec<f64> = group.iter().map(|r| r.quality.front1_onvgr()).collect();
            let spanned: Vec<f64> = group
                .iter()
                .map(|r| r.quality.fronts_spanned as f64)
                .collect();
            let (om, os) = mean_std(&onvgr);
            let (sm, ss) = mean_std(&spanned);
            w.line(&format!(
                "{method},{n_sensors},{k},{n_properties},{},{om},{os},{sm},{ss}",
                group.len()
            ))?;
        }
        w.finish()
    }

    /// Results grouped by cell across seeds, in output order.
    pub fn cells(&self) -> Vec<((Method, usize, usize, usize), Vec<&ExperimentResult>)> {
        let mut groups: BTreeMap<(Method, usize, usize, usize), Vec<&ExperimentResult>> =
            BTreeMap::new();
        for r in &self.results {
            groups
                .entry((r.method, r.n_sensors, r.k, r.n_properties))
                .or_default()
                .push(r);
        }
        let mut out: Vec<_> = groups.into_iter().collect();
        out.sort_by_key(|((m, n, k, p), _)| (*m, *k, *p, *n));
        out
    }
}

/// Mean and sample standard deviation (0 for a single value).
fn mean_std(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    if xs.len() < 2 {
        return (mean, 0.0);
    }
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, var.sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny() -> GridSpec {
        GridSpec {
            n_sensors: 50,
            methods: vec![Method::Saw],
            ks: vec![5],
            property_counts: vec![3],
            seeds: vec![4],
            vikor_v: 0.5,
        }
    }

    #[test]
    fn paper_grid_has_45_cells() {
        assert_eq!(GridSpec::paper().cell_count(), 45);
        assert_eq!(GridSpec::desk().cell_count(), 45);
        assert_eq!(tiny().cell_count(), 1);
    }

    #[test]
    fn spec_validation() {
        assert!(tiny().validate().is_ok());
        let mut s = tiny();
        s.ks = vec![51];
        assert!(s.validate().is_err());
        let mut s = tiny();
        s.property_counts = vec![7];
        assert!(s.validate().is_err());
        let mut s = tiny();
        s.seeds = vec![];
        assert!(s.validate().is_err());
        let mut s = tiny();
        s.methods = vec![Method::Saw, Method::Saw];
        assert!(s.validate().is_err());
        let mut s = tiny();
        s.vikor_v = -0.1;
        assert!(s.validate().is_err());
    }

    #[test]
    fn mean_std_values() {
        assert_eq!(mean_std(&[2.0]), (2.0, 0.0));
        let (m, s) = mean_std(&[1.0, 2.0, 3.0]);
        assert_eq!(m, 2.0);
        assert!((s - 1.0).abs() < 1e-15);
    }

    #[test]
    fn single_cell_grid() {
        let run = execute_grid(&tiny(), None).unwrap();
        assert_eq!(run.results.len(), 1);
        assert_eq!(run.results[0].quality.total_selected(), 5);
        assert_eq!(run.front_sizes.len(), 1);
    }

    #[test]
    fn unwritable_out_dir_fails_first() {
        let dir = tempfile::tempdir().unwrap();
        let blocker = dir.path().join("file");
        std::fs::write(&blocker, b"x").unwrap();
        let err = run_grid(&tiny(), None, &blocker.join("sub")).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }
}
