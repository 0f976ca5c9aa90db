use crate::model::{DecisionMatrix, Direction, Method, MethodTrace, Ranking};

use super::McdaError;

/// Weight `v` of the majority-of-criteria strategy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VikorParams {
    v: f64,
}

impl VikorParams {
    pub fn new(v: f64) -> Result<Self, McdaError> {
        if (0.0..=1.0).contains(&v) {
            Ok(Self { v })
        } else {
            Err(McdaError::InvalidV(v))
        }
    }

    pub fn v(&self) -> f64 {
        self.v
    }
}

impl Default for VikorParams {
    fn default() -> Self {
        Self { v: 0.5 }
    }
}

/// Gap between `x` and `y` mapped onto `[0, 1]`; a zero span contributes 0.
fn scaled(x: f64, best: f64, span: f64) -> f64 {
    if span == 0.0 {
        0.0
    } else {
        (x - best) / span
    }
}

/// Group utility `S`, individual regret `R` and compromise index `Q`.
///
/// Ranked ascending by `Q` (smaller is better). Constant columns add nothing
/// to `S` or `R`; when every option shares the same `S` (or `R`) that term
/// of `Q` is 0.
pub fn vikor_rank(matrix: &DecisionMatrix, params: VikorParams) -> Ranking {
    let n = matrix.n_criteria();
    let criteria = matrix.criteria();

    let mut best = Vec::with_capacity(n);
    let mut worst = Vec::with_capacity(n);
    for (j, c) in criteria.iter().enumerate() {
        let (lo, hi) = matrix
            .column(j)
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), x| {
                (lo.min(x), hi.max(x))
            });
        match c.direction {
            Direction::Maximize => {
                best.push(hi);
                worst.push(lo);
            }
            Direction::Minimize => {
                best.push(lo);
                worst.push(hi);
            }
        }
    }
    let spans: Vec<f64> = best.iter().zip(&worst).map(|(b, w)| (b - w).abs()).collect();
    let weights = criteria.weights();

    let mut utility = Vec::with_capacity(matrix.n_options());
    let mut regret = Vec::with_capacity(matrix.n_options());
    for row in matrix.rows() {
        let mut s = 0.0;
        let mut r = 0.0f64;
        for j in 0..n {
            let term = if spans[j] == 0.0 {
                0.0
            } else {
                weights[j] * (best[j] - row[j]).abs() / spans[j]
            };
            s += term;
            r = r.max(term);
        }
        utility.push(s);
        regret.push(r);
    }

    let (s_best, s_worst) = min_max(&utility);
    let (r_best, r_worst) = min_max(&regret);
    let v = params.v();
    let group_utility = utility
        .iter()
        .zip(&regret)
        .map(|(&s, &r)| {
            let q = v * scaled(s, s_best, s_worst - s_best)
                + (1.0 - v) * scaled(r, r_best, r_worst - r_best);
            q.clamp(0.0, 1.0)
        })
        .collect::<Vec<_>>();

    Ranking::from_scores(
        Method::Vikor,
        group_utility.clone(),
        MethodTrace {
            ideal_positive: Some(best),
            ideal_negative: Some(worst),
            utility: Some(utility),
            regret: Some(regret),
            group_utility: Some(group_utility),
            ..MethodTrace::default()
        },
    )
}

fn min_max(xs: &[f64]) -> (f64, f64) {
    xs.iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| {
            (lo.min(x), hi.max(x))
        })
}

/// VIKOR's recommended compromise: one option, or a short list when the
/// leader lacks an acceptable advantage (C1) or stability (C2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompromiseSet {
    pub members: Vec<usize>,
    pub condition_c1_satisfied: bool,
    pub condition_c2_satisfied: bool,
}

/// Applies the acceptable-advantage and acceptable-stability tests.
///
/// With `DQ = 1/(M-1)`: C1 holds when the second-best `Q` trails the best by
/// at least `DQ`; C2 holds when the best-`Q` option also attains the minimum
/// `S` or the minimum `R`. A single-option ranking yields that option with
/// both conditions vacuously satisfied.
pub fn vikor_compromise(ranking: &Ranking) -> Result<CompromiseSet, McdaError> {
    if ranking.method() != Method::Vikor {
        return Err(McdaError::NotVikor(ranking.method()));
    }
    let trace = ranking.trace();
    let q = trace
        .group_utility
        .as_ref()
        .ok_or(McdaError::MissingTrace("group utility Q"))?;
    let s = trace.utility.as_ref().ok_or(McdaError::MissingTrace("utility S"))?;
    let r = trace.regret.as_ref().ok_or(McdaError::MissingTrace("regret R"))?;

    let order = ranking.order();
    let leader = order[0];
    if order.len() == 1 {
        return Ok(CompromiseSet {
            members: vec![leader],
            condition_c1_satisfied: true,
            condition_c2_satisfied: true,
        });
    }

    let dq = 1.0 / (order.len() - 1) as f64;
    let runner_up = order[1];
    let c1 = q[runner_up] - q[leader] >= dq;
    let (s_min, _) = min_max(s);
    let (r_min, _) = min_max(r);
    let c2 = s[leader] <= s_min || r[leader] <= r_min;

    let members = match (c1, c2) {
        (true, true) => vec![leader],
        (true, false) => vec![leader, runner_up],
        (false, _) => order
            .iter()
            .copied()
            .take_while(|&i| q[i] - q[leader] < dq)
            .collect(),
    };
    Ok(CompromiseSet {
        members,
        condition_c1_satisfied: c1,
        condition_c2_satisfied: c2,
    })
}
