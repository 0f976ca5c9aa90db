use crate::model::{DecisionMatrix, Direction, Method, MethodTrace, Ranking};

/// Min-max normalises every column into `[0, 1]`, 1 being the preferred end.
///
/// Constant columns map to 0 for every option.
pub fn saw_normalize(matrix: &DecisionMatrix) -> Vec<Vec<f64>> {
    let n = matrix.n_criteria();
    let bounds: Vec<(f64, f64)> = (0..n)
        .map(|j| {
            matrix
                .column(j)
                .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), x| {
                    (lo.min(x), hi.max(x))
                })
        })
        .collect();

    matrix
        .rows()
        .map(|row| {
            row.iter()
                .zip(&bounds)
                .zip(matrix.criteria())
                .map(|((&q, &(lo, hi)), c)| {
                    let span = hi - lo;
                    if span == 0.0 {
                        return 0.0;
                    }
                    let x = match c.direction {
                        Direction::Maximize => (q - lo) / span,
                        Direction::Minimize => (hi - q) / span,
                    };
                    x.clamp(0.0, 1.0)
                })
                .collect()
        })
        .collect()
}

/// Weighted sum of the normalised row, ranked descending.
pub fn saw_rank(matrix: &DecisionMatrix) -> Ranking {
    let normalized = saw_normalize(matrix);
    let weights = matrix.criteria().weights();
    let scores = normalized
        .iter()
        .map(|row| row.iter().zip(&weights).map(|(q, w)| w * q).sum())
        .collect();
    Ranking::from_scores(
        Method::Saw,
        scores,
        MethodTrace {
            normalized: Some(normalized),
            ..MethodTrace::default()
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{CriteriaSet, CriterionSpec};

    fn single(dir: Direction, values: &[f64]) -> DecisionMatrix {
        let crit = CriteriaSet::new(vec![CriterionSpec::new("c", dir, 1.0)]).unwrap();
        DecisionMatrix::from_rows(values.iter().map(|&v| vec![v]).collect(), crit).unwrap()
    }

    fn col(grid: &[Vec<f64>]) -> Vec<f64> {
        grid.iter().map(|r| r[0]).collect()
    }

    #[test]
    fn normalize_maximize_and_minimize() {
        let m = single(Direction::Maximize, &[1.0, 3.0, 2.0]);
        assert_eq!(col(&saw_normalize(&m)), vec![0.0, 1.0, 0.5]);
        let m = single(Direction::Minimize, &[1.0, 3.0, 2.0]);
        assert_eq!(col(&saw_normalize(&m)), vec![1.0, 0.0, 0.5]);
    }

    #[test]
    fn constant_column_maps_to_zero() {
        for dir in [Direction::Maximize, Direction::Minimize] {
            let m = single(dir, &[5.0, 5.0, 5.0]);
            assert_eq!(col(&saw_normalize(&m)), vec![0.0; 3]);
        }
    }

    #[test]
    fn single_criterion_rank() {
        let r = saw_rank(&single(Direction::Maximize, &[1.0, 3.0, 2.0]));
        assert_eq!(r.scores(), &[0.0, 1.0, 0.5]);
        assert_eq!(r.order(), &[1, 2, 0]);
        assert!(r.trace().normalized.is_some());
    }

    #[test]
    fn symmetric_options_tie_by_index() {
        let crit =
            CriteriaSet::equal_weights(&[("x", Direction::Maximize), ("y", Direction::Maximize)])
                .unwrap();
        let m = DecisionMatrix::from_rows(vec![vec![0.0, 10.0], vec![10.0, 0.0]], crit).unwrap();
        let r = saw_rank(&m);
        assert_eq!(r.scores()[0], r.scores()[1]);
        assert_eq!(r.order(), &[0, 1]);
    }

    // Expected values computed independently (numpy, step by step).
    #[test]
    fn mixed_directions_frozen_oracle() {
        let crit = CriteriaSet::new(vec![
            CriterionSpec::maximize("a", 0.5),
            CriterionSpec::minimize("b", 0.3),
            CriterionSpec::maximize("c", 0.2),
        ])
        .unwrap();
        let m = DecisionMatrix::from_rows(
            vec![
                vec![7.0, 120.0, 3.5],
                vec![9.0, 300.0, 1.0],
                vec![4.0, 80.0, 4.0],
                vec![6.5, 150.0, 2.5],
                vec![9.0, 95.0, 0.5],
            ],
            crit,
        )
        .unwrap();
        let r = saw_rank(&m);
        let expected = [
            0.7168831168831168,
            0.5285714285714286,
            0.5,
            0.5688311688311688,
            0.7795454545454545,
        ];
        for (got, want) in r.scores().iter().zip(expected) {
            assert!((got - want).abs() < 1e-12, "{got} vs {want}");
        }
        assert_eq!(r.order(), &[4, 0, 3, 1, 2]);
    }
}
