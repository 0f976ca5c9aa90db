//! Test-only helpers: seeded random matrices and straight-from-the-formulas
//! reference rankers that share no code with the library.

#![allow(dead_code)]

pub mod reference;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use sensor_mcda::model::{CriteriaSet, CriterionSpec, DecisionMatrix, Direction};

pub struct TestRng(ChaCha8Rng);

impl TestRng {
    pub fn new(seed: u64) -> Self {
        Self(ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn unit(&mut self) -> f64 {
        (self.0.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    pub fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + self.unit() * (hi - lo)
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.0.next_u64() % n as u64) as usize
    }

    pub fn coin(&mut self) -> bool {
        self.0.next_u64() & 1 == 1
    }
}

/// `m x n` matrix with random directions, weights in (0.05, 1] and values in
/// [-50, 150]. `grid` > 0 snaps values to a coarse lattice so ties and
/// duplicates show up.
pub fn random_matrix(rng: &mut TestRng, m: usize, n: usize, grid: usize) -> DecisionMatrix {
    let criteria = CriteriaSet::new(
        (0..n)
            .map(|j| {
                let dir = if rng.coin() {
                    Direction::Maximize
                } else {
                    Direction::Minimize
                };
                CriterionSpec::new(format!("c{j}"), dir, rng.range(0.05, 1.0))
            })
            .collect(),
    )
    .unwrap();
    let rows = (0..m)
        .map(|_| {
            (0..n)
                .map(|_| {
                    if grid > 0 {
                        rng.below(grid) as f64
                    } else {
                        rng.range(-50.0, 150.0)
                    }
                })
                .collect()
        })
        .collect();
    DecisionMatrix::from_rows(rows, criteria).unwrap()
}

/// Positive-valued variant (TOPSIS vector normalisation expects magnitudes).
pub fn random_positive_matrix(rng: &mut TestRng, m: usize, n: usize) -> DecisionMatrix {
    let base = random_matrix(rng, m, n, 0);
    let rows = base
        .rows()
        .map(|r| r.iter().map(|v| v + 60.0).collect())
        .collect();
    DecisionMatrix::from_rows(rows, base.criteria().clone()).unwrap()
}

/// Raw parts of a matrix: values, maximise flags, weights.
pub fn raw(m: &DecisionMatrix) -> (Vec<Vec<f64>>, Vec<bool>, Vec<f64>) {
    let values = m.rows().map(|r| r.to_vec()).collect();
    let maximize = m
        .criteria()
        .iter()
        .map(|c| c.direction == Direction::Maximize)
        .collect();
    let weights = m.criteria().iter().map(|c| c.weight).collect();
    (values, maximize, weights)
}
