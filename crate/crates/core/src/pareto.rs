//! Pareto dominance and non-dominated front sorting.
//!
//! Three sorters produce the same [`ParetoPartition`]:
//!
//! * [`fast_non_dominated_sort`]: domination counts plus dominated sets, each
//!   pair compared once. `O(M^2 N)` time and up to `O(M^2)` memory for the
//!   dominated sets.
//! * [`efficient_non_dominated_sort`]: lexicographic presort followed by a
//!   binary search over the fronts built so far. `O(M)` extra memory, used
//!   for pools too large to hold the dominated sets.
//! * [`naive_front_sort`]: repeated peeling of the non-dominated set. Only
//!   meant as a reference.
//!
//! Weights never influence dominance. Identical rows do not dominate each
//! other and therefore share a front.

use std::cmp::Ordering;

use crate::model::{CriteriaSet, DecisionMatrix, Direction};

/// Returns true iff `x` is at least as good as `y` on every criterion and
/// strictly better on at least one.
///
/// # Panics
///
/// If either row length differs from the number of criteria.
pub fn dominates(x: &[f64], y: &[f64], criteria: &CriteriaSet) -> bool {
    assert_eq!(x.len(), criteria.len(), "row length must match criteria");
    assert_eq!(y.len(), criteria.len(), "row length must match criteria");
    let mut strictly = false;
    for ((&a, &b), c) in x.iter().zip(y).zip(criteria) {
        if c.direction.better(b, a) {
            return false;
        }
        if c.direction.better(a, b) {
            strictly = true;
        }
    }
    strictly
}

/// Front membership of every option. Front indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParetoPartition {
    front_of: Vec<usize>,
    fronts: Vec<Vec<usize>>,
}

impl ParetoPartition {
    /// Builds a partition from per-option front indices (1-based, no gaps).
    pub fn from_front_indices(front_of: Vec<usize>) -> Result<Self, String> {
        let n_fronts = front_of.iter().copied().max().unwrap_or(0);
        let mut fronts = vec![Vec::new(); n_fronts];
        for (i, &f) in front_of.iter().enumerate() {
            if f == 0 {
                return Err(format!("option {i} has front index 0; fronts are 1-based"));
            }
            fronts[f - 1].push(i);
        }
        if let Some(pos) = fronts.iter().position(Vec::is_empty) {
            return Err(format!("front {} is empty", pos + 1));
        }
        Ok(Self { front_of, fronts })
    }

    fn from_fronts(n: usize, mut fronts: Vec<Vec<usize>>) -> Self {
        let mut front_of = vec![0; n];
        for (f, members) in fronts.iter_mut().enumerate() {
            members.sort_unstable();
            for &i in members.iter() {
                front_of[i] = f + 1;
            }
        }
        debug_assert!(front_of.iter().all(|&f| f > 0));
        Self { front_of, fronts }
    }

    /// Front index (1-based) of every option, in option order.
    pub fn front_of(&self) -> &[usize] {
        &self.front_of
    }

    /// Members of every front, ascending by option index.
    pub fn fronts(&self) -> &[Vec<usize>] {
        &self.fronts
    }

    /// Members of front `f` (1-based).
    pub fn front(&self, f: usize) -> &[usize] {
        &self.fronts[f - 1]
    }

    pub fn front_sizes(&self) -> Vec<usize> {
        self.fronts.iter().map(Vec::len).collect()
    }

    pub fn n_fronts(&self) -> usize {
        self.fronts.len()
    }

    pub fn n_options(&self) -> usize {
        self.front_of.len()
    }
}

/// Row-major copy where every column is "larger is better".
struct Oriented {
    values: Vec<f64>,
    n: usize,
}

impl Oriented {
    fn new(matrix: &DecisionMatrix) -> Self {
        let dirs = matrix.criteria().directions();
        let values = matrix
            .rows()
            .flat_map(|row| {
                row.iter().zip(&dirs).map(|(&q, d)| match d {
                    Direction::Maximize => q,
                    Direction::Minimize => -q,
                })
            })
            .collect();
        Self {
            values,
            n: matrix.n_criteria(),
        }
    }

    #[inline]
    fn row(&self, i: usize) -> &[f64] {
        &self.values[i * self.n..(i + 1) * self.n]
    }

    /// `Less` when `a` dominates `b`, `Greater` when `b` dominates `a`,
    /// `Equal` when neither does.
    #[inline]
    fn compare(&self, a: usize, b: usize) -> Ordering {
        let (mut a_better, mut b_better) = (false, false);
        for (x, y) in self.row(a).iter().zip(self.row(b)) {
            if x > y {
                a_better = true;
            } else if y > x {
                b_better = true;
            }
            if a_better && b_better {
                return Ordering::Equal;
            }
        }
        match (a_better, b_better) {
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Greater,
            _ => Ordering::Equal,
        }
    }

    #[inline]
    fn dominates(&self, a: usize, b: usize) -> bool {
        self.compare(a, b) == Ordering::Less
    }
}

/// Reference sorter: peel off the non-dominated set until nothing is left.
pub fn naive_front_sort(matrix: &DecisionMatrix) -> ParetoPartition {
    let m = matrix.n_options();
    let criteria = matrix.criteria();
    let mut remaining: Vec<usize> = (0..m).collect();
    let mut fronts = Vec::new();
    while !remaining.is_empty() {
        let (front, rest): (Vec<usize>, Vec<usize>) = remaining.iter().partition(|&&y| {
            !remaining
                .iter()
                .any(|&x| dominates(matrix.row(x), matrix.row(y), criteria))
        });
        fronts.push(front);
        remaining = rest;
    }
    ParetoPartition::from_fronts(m, fronts)
}

/// Domination-count sort: each pair is compared once, recording who
/// dominates whom; options nobody dominates form front 1, and releasing a
/// front decrements the counts of everything it dominates.
pub fn fast_non_dominated_sort(matrix: &DecisionMatrix) -> ParetoPartition {
    let m = matrix.n_options();
    let pts = Oriented::new(matrix);
    let mut dominated: Vec<Vec<u32>> = vec![Vec::new(); m];
    let mut count = vec![0u32; m];

    for p in 0..m {
        for q in p + 1..m {
            match pts.compare(p, q) {
                Ordering::Less => {
                    dominated[p].push(q as u32);
                    count[q] += 1;
                }
                Ordering::Greater => {
                    dominated[q].push(p as u32);
                    count[p] += 1;
                }
                Ordering::Equal => {}
            }
        }
    }

    let mut current: Vec<usize> = (0..m).filter(|&i| count[i] == 0).collect();
    let mut fronts = Vec::new();
    while !current.is_empty() {
        let mut next = Vec::new();
        for &p in &current {
            for &q in &dominated[p] {
                let q = q as usize;
                count[q] -= 1;
                if count[q] == 0 {
                    next.push(q);
                }
            }
        }
        fronts.push(std::mem::replace(&mut current, next));
    }
    ParetoPartition::from_fronts(m, fronts)
}

/// Presort-and-insert sorter with `O(M)` extra memory.
///
/// Options are visited in decreasing lexicographic order of their oriented
/// rows, so nothing visited later can dominate anything visited earlier.
/// If some member of front `k` dominates the new option then so does some
/// member of every front before `k`; that monotonicity allows a binary search
/// for the first front with no dominator.
pub fn efficient_non_dominated_sort(matrix: &DecisionMatrix) -> ParetoPartition {
    let m = matrix.n_options();
    let pts = Oriented::new(matrix);
    let mut visit: Vec<usize> = (0..m).collect();
    visit.sort_by(|&a, &b| {
        pts.row(b)
            .iter()
            .zip(pts.row(a))
            .map(|(x, y)| x.partial_cmp(y).unwrap_or(Ordering::Equal))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
            .then(a.cmp(&b))
    });

    let mut fronts: Vec<Vec<usize>> = Vec::new();
    for &i in &visit {
        let dominated_by = |front: &Vec<usize>| front.iter().rev().any(|&p| pts.dominates(p, i));
        let (mut lo, mut hi) = (0, fronts.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            if dominated_by(&fronts[mid]) {
                lo = mid + 1;
            } else {
                hi = mid;
            }
        }
        if lo == fronts.len() {
            fronts.push(vec![i]);
        } else {
            fronts[lo].push(i);
        }
    }
    ParetoPartition::from_fronts(m, fronts)
}
