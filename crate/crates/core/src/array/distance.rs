//! Hamming distances, minimal distance and irredundancy.

use std::collections::{BTreeMap, HashSet};

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use super::MixedArray;
use crate::error::{param, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistanceSpectrum {
    /// `N + 1` for a one-row array.
    pub min_distance: usize,
    /// Number of unordered row pairs at each attained distance.
    pub counts: BTreeMap<usize, u64>,
}

impl DistanceSpectrum {
    pub fn distances(&self) -> Vec<usize> {
        self.counts.keys().copied().collect()
    }
}

pub fn hamming(x: &[u16], y: &[u16]) -> usize {
    x.iter().zip(y).filter(|(a, b)| a != b).count()
}

/// Exact pairwise distances over all `C(r, 2)` row pairs.
pub fn distance_spectrum(a: &MixedArray) -> DistanceSpectrum {
    let r = a.runs();
    let counts = (0..r)
        .into_par_iter()
        .fold(BTreeMap::new, |mut acc: BTreeMap<usize, u64>, i| {
            let x = a.row(i);
            for j in i + 1..r {
                *acc.entry(hamming(x, a.row(j))).or_default() += 1;
            }
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        });
    let min_distance = counts.keys().next().copied().unwrap_or(a.cols() + 1);
    DistanceSpectrum { min_distance, counts }
}

/// Minimal distance; `N + 1` for a one-row array.
pub fn min_distance(a: &MixedArray) -> usize {
    let r = a.runs();
    (0..r)
        .into_par_iter()
        .map(|i| {
            let x = a.row(i);
            (i + 1..r).map(|j| hamming(x, a.row(j))).min().unwrap_or(usize::MAX)
        })
        .min()
        .filter(|&m| m != usize::MAX)
        .unwrap_or(a.cols() + 1)
}

/// True when every pair of rows is at distance at least `w`.
pub fn has_min_distance(a: &MixedArray, w: usize) -> bool {
    let r = a.runs();
    (0..r).into_par_iter().all(|i| {
        let x = a.row(i);
        (i + 1..r).all(|j| hamming(x, a.row(j)) >= w)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IrredundancyCriterion {
    /// Minimal distance at least `k + 1`.
    MinimumDistance,
    /// Rows are distinct on every `(N - k)`-column subarray.
    DirectEnumeration,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrredundancyCertificate {
    pub k: usize,
    pub holds: bool,
    pub criterion: IrredundancyCriterion,
    pub min_distance: Option<usize>,
    /// Columns of the first `(N - k)`-subarray with a repeated row (direct mode).
    pub witness_columns: Option<Vec<usize>>,
}

fn check_k(a: &MixedArray, k: usize) -> Result<()> {
    if k == 0 || k >= a.cols() {
        return param(format!("irredundancy needs 1 <= k < N, got k={k}, N={}", a.cols()));
    }
    Ok(())
}

/// Irredundancy at strength `k` via `MD >= k + 1`.
pub fn is_irredundant(a: &MixedArray, k: usize) -> Result<IrredundancyCertificate> {
    check_k(a, k)?;
    let md = min_distance(a);
    Ok(IrredundancyCertificate {
        k,
        holds: md > k,
        criterion: IrredundancyCriterion::MinimumDistance,
        min_distance: Some(md),
        witness_columns: None,
    })
}

/// Irredundancy by checking row distinctness on every `(N - k)`-column subarray.
pub fn is_irredundant_direct(a: &MixedArray, k: usize) -> Result<IrredundancyCertificate> {
    check_k(a, k)?;
    let bad = (0..a.cols()).combinations(a.cols() - k).find(|cols| {
        let mut seen = HashSet::with_capacity(a.runs());
        !a.rows().all(|row| seen.insert(cols.iter().map(|&c| row[c]).collect::<Vec<u16>>()))
    });
    Ok(IrredundancyCertificate {
        k,
        holds: bad.is_none(),
        criterion: IrredundancyCriterion::DirectEnumeration,
        min_distance: None,
        witness_columns: bad,
    })
}

/// Number of columns that can be deleted in any combination while keeping
/// irredundancy at strength `k`.
pub fn guaranteed_deletion_budget(a: &MixedArray, k: usize) -> usize {
    min_distance(a).saturating_sub(k + 1)
}
