//! Strength verification by exact tuple counting.

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use super::MixedArray;
use crate::error::{param, Result};

/// Why a column subset fails the balance condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessKind {
    /// The run count is not a multiple of the subset's level product.
    Indivisible { product: u64 },
    /// `tuple` occurs `count` times instead of `expected`.
    Imbalanced {
        tuple: Vec<u16>,
        count: u64,
        expected: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrengthWitness {
    pub columns: Vec<usize>,
    #[serde(flatten)]
    pub kind: WitnessKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrengthReport {
    pub strength_checked: usize,
    pub holds: bool,
    /// Common count per tuple, when it is the same for every subset.
    pub index: Option<u64>,
    pub subsets_checked: usize,
    /// First failing subset in lexicographic order.
    pub witness: Option<StrengthWitness>,
}

/// Checks one column subset. `Ok(lambda)` when balanced.
pub fn check_subset(a: &MixedArray, cols: &[usize]) -> std::result::Result<u64, WitnessKind> {
    let r = a.runs() as u64;
    let mut product: u64 = 1;
    for &c in cols {
        product = match product.checked_mul(a.level(c) as u64) {
            Some(p) if p <= r => p,
            // A product above r cannot divide r.
            _ => return Err(WitnessKind::Indivisible { product: product.saturating_mul(a.level(c) as u64) }),
        };
    }
    if r % product != 0 {
        return Err(WitnessKind::Indivisible { product });
    }
    let expected = r / product;
    let mut counts = vec![0u64; product as usize];
    for row in a.rows() {
        let mut idx = 0usize;
        for &c in cols {
            idx = idx * a.level(c) as usize + row[c] as usize;
        }
        counts[idx] += 1;
    }
    match counts.iter().position(|&n| n != expected) {
        None => Ok(expected),
        Some(pos) => {
            let mut tuple = vec![0u16; cols.len()];
            let mut rest = pos;
            for (slot, &c) in cols.iter().enumerate().rev() {
                let d = a.level(c) as usize;
                tuple[slot] = (rest % d) as u16;
                rest /= d;
            }
            Err(WitnessKind::Imbalanced {
                tuple,
                count: counts[pos],
                expected,
            })
        }
    }
}

/// Verifies that every `k`-column subarray contains each tuple equally often.
pub fn verify_strength(a: &MixedArray, k: usize) -> Result<StrengthReport> {
    if k > a.cols() {
        return param(format!("strength {k} exceeds column count {}", a.cols()));
    }
    if k == 0 {
        return Ok(StrengthReport {
            strength_checked: 0,
            holds: true,
            index: Some(a.runs() as u64),
            subsets_checked: 1,
            witness: None,
        });
    }
    let subsets: Vec<Vec<usize>> = (0..a.cols()).combinations(k).collect();
    let total = subsets.len();
    let failure = subsets
        .par_iter()
        .find_map_first(|s| check_subset(a, s).err().map(|kind| StrengthWitness { columns: s.clone(), kind }));
    if let Some(w) = failure {
        return Ok(StrengthReport {
            strength_checked: k,
            holds: false,
            index: None,
            subsets_checked: total,
            witness: Some(w),
        });
    }
    let first: u64 = subsets[0].iter().map(|&c| a.level(c) as u64).product();
    let uniform = subsets
        .iter()
        .all(|s| s.iter().map(|&c| a.level(c) as u64).product::<u64>() == first);
    Ok(StrengthReport {
        strength_checked: k,
        holds: true,
        index: uniform.then(|| a.runs() as u64 / first),
        subsets_checked: total,
        witness: None,
    })
}

/// Largest `k` at which the array has strength `k`.
pub fn max_strength(a: &MixedArray) -> usize {
    let mut k = 0;
    while k < a.cols() && verify_strength(a, k + 1).map(|r| r.holds).unwrap_or(false) {
        k += 1;
    }
    k
}
