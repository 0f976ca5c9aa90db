use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};

use super::files::{parse_field, read_table, Writer};
use super::grid::{prepare_out_dir, RESULTS_HEADER};
use super::HarnessError;
use crate::model::Method;

struct Row {
    method: Method,
    k: usize,
    n_properties: usize,
    seed: u64,
    front: usize,
    front_size: usize,
    selected: usize,
    onvgr: f64,
}

#[derive(Default)]
struct Figure {
    seeds: BTreeSet<u64>,
    methods: BTreeSet<Method>,
    max_front: usize,
    /// (front, method) -> summed selected / summed onvgr over seeds
    sums: BTreeMap<(usize, Method), (f64, f64)>,
    /// front -> seed -> size
    sizes: BTreeMap<usize, BTreeMap<u64, usize>>,
}

/// Turns `results.csv` into tidy per-figure tables.
///
/// For every `(n_properties, k)` two files are written: `fronts_p<n>_k<k>.csv`
/// (`front,method,selected_in_front,front_size`) and `onvgr_p<n>_k<k>.csv`
/// (`front,method,onvgr`). Each has one row per front up to the deepest
/// front any method reaches, for every method. Values are means over seeds;
/// a front a method never reached counts as 0 selected. `fronts.csv` and
/// `onvgr.csv` hold the same rows for all figures, keyed by `n_properties,k`.
pub fn emit_plot_data(results_path: &Path, out_dir: &Path) -> Result<Vec<PathBuf>, HarnessError> {
    let header: Vec<&str> = RESULTS_HEADER.split(',').collect();
    let table = read_table(results_path, &header)?;
    prepare_out_dir(out_dir)?;

    let p = results_path;
    let mut figures: BTreeMap<(usize, usize), Figure> = BTreeMap::new();
    for (line, f) in table {
        let method = f[0].parse::<Method>().map_err(|message| HarnessError::Parse {
            path: p.to_owned(),
            line,
            message,
        })?;
        let row = Row {
            method,
            k: parse_field(p, line, "k", &f[2])?,
            n_properties: parse_field(p, line, "n_properties", &f[3])?,
            seed: parse_field(p, line, "seed", &f[4])?,
            front: parse_field(p, line, "front", &f[5])?,
            front_size: parse_field(p, line, "front_size", &f[6])?,
            selected: parse_field(p, line, "selected_in_front", &f[7])?,
            onvgr: parse_field(p, line, "onvgr", &f[8])?,
        };
        let fig = figures.entry((row.n_properties, row.k)).or_default();
        fig.seeds.insert(row.seed);
        fig.methods.insert(row.method);
        fig.max_front = fig.max_front.max(row.front);
        let s = fig.sums.entry((row.front, row.method)).or_default();
        s.0 += row.selected as f64;
        s.1 += row.onvgr;
        fig.sizes
            .entry(row.front)
            .or_default()
            .insert(row.seed, row.front_size);
    }

    let mut written = Vec::new();
    let all_fronts = out_dir.join("fronts.csv");
    let all_onvgr = out_dir.join("onvgr.csv");
    let mut fronts_all = Writer::create(&all_fronts)?;
    let mut onvgr_all = Writer::create(&all_onvgr)?;
    fronts_all.line("n_properties,k,front,method,selected_in_front,front_size")?;
    onvgr_all.line("n_properties,k,front,method,onvgr")?;

    for ((n_properties, k), fig) in &figures {
        let fronts_path = out_dir.join(format!("fronts_p{n_properties}_k{k}.csv"));
        let onvgr_path = out_dir.join(format!("onvgr_p{n_properties}_k{k}.csv"));
        let mut fw = Writer::create(&fronts_path)?;
        let mut ow = Writer::create(&onvgr_path)?;
        fw.line("front,method,selected_in_front,front_size")?;
        ow.line("front,method,onvgr")?;
        let n_seeds = fig.seeds.len() as f64;
        for front in 1..=fig.max_front {
            let size = fig.sizes.get(&front).map_or(0.0, |by_seed| {
                by_seed.values().map(|&s| s as f64).sum::<f64>() / by_seed.len() as f64
            });
            for &method in &fig.methods {
                let (sel, onvgr) = fig.sums.get(&(front, method)).copied().unwrap_or_default();
                let (sel, onvgr) = (sel / n_seeds, onvgr / n_seeds);
                fw.line(&format!("{front},{method},{sel},{size}"))?;
                ow.line(&format!("{front},{method},{onvgr}"))?;
                fronts_all.line(&format!("{n_properties},{k},{front},{method},{sel},{size}"))?;
                onvgr_all.line(&format!("{n_properties},{k},{front},{method},{onvgr}"))?;
            }
        }
        fw.finish()?;
        ow.finish()?;
        written.push(fronts_path);
        written.push(onvgr_path);
    }
    fronts_all.finish()?;
    onvgr_all.finish()?;
    written.push(all_fronts);
    written.push(all_onvgr);
    Ok(written)
}
