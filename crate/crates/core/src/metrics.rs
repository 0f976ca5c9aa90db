//! How well a top-k selection covers the Pareto fronts of the full pool.

use thiserror::Error;

use crate::model::Selection;
use crate::pareto::ParetoPartition;

/// Coverage of one front: `onvgr = selected_in_front / front_size`.
#[derive(Debug, Clone, PartialEq)]
pub struct FrontCoverage {
    pub front_index: usize,
    pub front_size: usize,
    pub selected_in_front: usize,
    pub onvgr: f64,
}

/// Per-front coverage from front 1 down to the deepest front the selection
/// reaches. Fronts in between with nothing selected are kept with ONVGR 0.
#[derive(Debug, Clone, PartialEq)]
pub struct SelectionQuality {
    pub coverages: Vec<FrontCoverage>,
    pub fronts_spanned: usize,
}

impl SelectionQuality {
    pub fn per_front_selected_counts(&self) -> Vec<usize> {
        self.coverages.iter().map(|c| c.selected_in_front).collect()
    }

    pub fn total_selected(&self) -> usize {
        self.coverages.iter().map(|c| c.selected_in_front).sum()
    }

    /// ONVGR of front 1.
    pub fn front1_onvgr(&self) -> f64 {
        self.coverages.first().map_or(0.0, |c| c.onvgr)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MetricsError {
    #[error("selection is empty; k must be at least 1")]
    EmptySelection,
    #[error("selected option {index} is outside the partition of {n_options} options")]
    IndexOutOfRange { index: usize, n_options: usize },
    #[error("option {0} is selected more than once")]
    DuplicateIndex(usize),
}

pub fn evaluate_selection(
    selection: &Selection,
    partition: &ParetoPartition,
) -> Result<SelectionQuality, MetricsError> {
    if selection.is_empty() {
        return Err(MetricsError::EmptySelection);
    }
    let n_options = partition.n_options();
    let front_of = partition.front_of();
    let mut counts = vec![0usize; partition.n_fronts()];
    let mut seen = vec![false; n_options];
    for &index in selection.indices() {
        if index >= n_options {
            return Err(MetricsError::IndexOutOfRange { index, n_options });
        }
        if std::mem::replace(&mut seen[index], true) {
            return Err(MetricsError::DuplicateIndex(index));
        }
        counts[front_of[index] - 1] += 1;
    }

    let fronts_spanned = counts.iter().rposition(|&c| c > 0).map_or(0, |p| p + 1);
    let coverages = partition.fronts()[..fronts_spanned]
        .iter()
        .zip(&counts)
        .enumerate()
        .map(|(f, (members, &selected))| FrontCoverage {
            front_index: f + 1,
            front_size: members.len(),
            selected_in_front: selected,
            onvgr: selected as f64 / members.len() as f64,
        })
        .collect();
    Ok(SelectionQuality {
        coverages,
        fronts_spanned,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn partition() -> ParetoPartition {
        // fronts: {0,1,2,3}, {4,5}, {6}
        ParetoPartition::from_front_indices(vec![1, 1, 1, 1, 2, 2, 3]).unwrap()
    }

    #[test]
    fn full_selection_covers_everything() {
        let p = partition();
        let q = evaluate_selection(&Selection::new((0..7).collect(), 7), &p).unwrap();
        assert_eq!(q.fronts_spanned, 3);
        assert!(q.coverages.iter().all(|c| c.onvgr == 1.0));
        assert_eq!(q.total_selected(), 7);
    }

    #[test]
    fn half_of_front_one() {
        let q = evaluate_selection(&Selection::new(vec![2, 0], 2), &partition()).unwrap();
        assert_eq!(
            q.coverages,
            vec![FrontCoverage {
                front_index: 1,
                front_size: 4,
                selected_in_front: 2,
                onvgr: 0.5
            }]
        );
        assert_eq!(q.fronts_spanned, 1);
    }

    #[test]
    fn skipped_front_is_reported_as_zero() {
        let q = evaluate_selection(&Selection::new(vec![6, 1], 2), &partition()).unwrap();
        assert_eq!(q.fronts_spanned, 3);
        assert_eq!(q.per_front_selected_counts(), vec![1, 0, 1]);
        assert_eq!(q.coverages[1].onvgr, 0.0);
        assert_eq!(q.front1_onvgr(), 0.25);
    }

    #[test]
    fn error_paths() {
        let p = partition();
        assert_eq!(
            evaluate_selection(&Selection::new(vec![], 0), &p),
            Err(MetricsError::EmptySelection)
        );
        assert_eq!(
            evaluate_selection(&Selection::new(vec![9], 1), &p),
            Err(MetricsError::IndexOutOfRange { index: 9, n_options: 7 })
        );
        assert_eq!(
            evaluate_selection(&Selection::new(vec![1, 1], 2), &p),
            Err(MetricsError::DuplicateIndex(1))
        );
    }
}
