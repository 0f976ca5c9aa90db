use crate::model::{DecisionMatrix, Direction, Method, MethodTrace, Ranking};

/// Relative closeness to the ideal point, ranked descending.
///
/// Columns are vector-normalised (an all-zero column stays 0), weights are
/// applied inside the Euclidean distances, and closeness is
/// `s- / (s+ + s-)`. An option sitting on both ideals at once, which only
/// happens when every column is constant, gets 0.5.
pub fn topsis_rank(matrix: &DecisionMatrix) -> Ranking {
    let n = matrix.n_criteria();
    let criteria = matrix.criteria();

    let norms: Vec<f64> = (0..n)
        .map(|j| matrix.column(j).map(|q| q * q).sum::<f64>().sqrt())
        .collect();
    let normalized: Vec<Vec<f64>> = matrix
        .rows()
        .map(|row| {
            row.iter()
                .zip(&norms)
                .map(|(&q, &norm)| if norm == 0.0 { 0.0 } else { q / norm })
                .collect()
        })
        .collect();

    let mut ideal_positive = Vec::with_capacity(n);
    let mut ideal_negative = Vec::with_capacity(n);
    for (j, c) in criteria.iter().enumerate() {
        let (lo, hi) = normalized
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), r| {
                (lo.min(r[j]), hi.max(r[j]))
            });
        let (best, worst) = match c.direction {
            Direction::Maximize => (hi, lo),
            Direction::Minimize => (lo, hi),
        };
        ideal_positive.push(best);
        ideal_negative.push(worst);
    }

    let weights = criteria.weights();
    let distance = |row: &[f64], ideal: &[f64]| -> f64 {
        row.iter()
            .zip(ideal)
            .zip(&weights)
            .map(|((q, p), w)| {
                let d = w * q - w * p;
                d * d
            })
            .sum::<f64>()
            .sqrt()
    };
    let dist_positive: Vec<f64> = normalized.iter().map(|r| distance(r, &ideal_positive)).collect();
    let dist_negative: Vec<f64> = normalized.iter().map(|r| distance(r, &ideal_negative)).collect();

    let closeness = dist_positive
        .iter()
        .zip(&dist_negative)
        .map(|(&sp, &sn)| {
            let total = sp + sn;
            if total == 0.0 {
                0.5
            } else {
                sn / total
            }
        })
        .collect();

    Ranking::from_scores(
        Method::Topsis,
        closeness,
        MethodTrace {
            normalized: Some(normalized),
            ideal_positive: Some(ideal_positive),
            ideal_negative: Some(ideal_negative),
            dist_positive: Some(dist_positive),
            dist_negative: Some(dist_negative),
            ..MethodTrace::default()
        },
    )
}
