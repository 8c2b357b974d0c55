//! States built from arrays: one product ket per row, equal amplitudes.
//!
//! Reduced density matrices are computed combinatorially. Rows are grouped
//! by their values outside the kept parties; only rows in the same group
//! interfere, so the ambient Hilbert space is never formed.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use itertools::Itertools;
use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;

use crate::array::MixedArray;
use crate::error::{param, Result};

/// An unweighted superposition of product kets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseState {
    levels: Vec<u32>,
    kets: Vec<Vec<u16>>,
}

/// One ket per row, in row order.
pub fn emit_state(a: &MixedArray) -> SparseState {
    SparseState { levels: a.levels().to_vec(), kets: a.rows().map(<[u16]>::to_vec).collect() }
}

impl SparseState {
    pub fn levels(&self) -> &[u32] {
        &self.levels
    }

    pub fn kets(&self) -> &[Vec<u16>] {
        &self.kets
    }

    pub fn len(&self) -> usize {
        self.kets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.kets.is_empty()
    }

    /// True when some ket appears more than once.
    pub fn has_duplicates(&self) -> bool {
        self.kets.iter().duplicates().next().is_some()
    }

    pub fn to_array(&self) -> Result<MixedArray> {
        MixedArray::from_rows(self.levels.clone(), &self.kets)
    }

    /// Kets sorted, for comparisons that ignore term order.
    pub fn sorted_kets(&self) -> Vec<Vec<u16>> {
        let mut k = self.kets.clone();
        k.sort();
        k
    }
}

impl fmt::Display for SparseState {
    /// `|a b c⟩ + |d e f⟩ + ...`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, ket) in self.kets.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "|{}⟩", ket.iter().join(" "))?;
        }
        Ok(())
    }
}

/// A reduced density matrix with exact rational entries, stored sparsely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityMatrix {
    subset: Vec<usize>,
    dim: usize,
    entries: BTreeMap<(usize, usize), Ratio<u64>>,
}

impl DensityMatrix {
    pub fn subset(&self) -> &[usize] {
        &self.subset
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, a: usize, b: usize) -> Ratio<u64> {
        self.entries.get(&(a, b)).copied().unwrap_or_else(|| Ratio::from_integer(0))
    }

    /// Nonzero entries in row-major order.
    pub fn nonzero(&self) -> impl Iterator<Item = ((usize, usize), Ratio<u64>)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn trace(&self) -> Ratio<u64> {
        self.entries.iter().filter(|((a, b), _)| a == b).map(|(_, &v)| v).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.entries.iter().all(|(&(a, b), &v)| self.get(b, a) == v)
    }

    /// `rho == I / dim`.
    pub fn is_maximally_mixed(&self) -> bool {
        self.first_defect().is_none()
    }

    /// The first entry, in row-major order, that differs from `I / dim`.
    pub fn first_defect(&self) -> Option<((usize, usize), Ratio<u64>)> {
        let target = Ratio::new(1, self.dim as u64);
        let zero = Ratio::from_integer(0);
        for a in 0..self.dim {
            // Off-diagonal entries of row `a` that come before the diagonal.
            for (&(x, b), &v) in self.entries.range((a, 0)..(a, a)) {
                if v != zero {
                    return Some(((x, b), v));
                }
            }
            let d = self.get(a, a);
            if d != target {
                return Some(((a, a), d));
            }
            for (&(x, b), &v) in self.entries.range((a, a + 1)..(a + 1, 0)) {
                if v != zero {
                    return Some(((x, b), v));
                }
            }
        }
        None
    }

    /// Dense form, for small dimensions.
    pub fn to_dense(&self) -> Vec<Vec<Ratio<u64>>> {
        let mut m = vec![vec![Ratio::from_integer(0); self.dim]; self.dim];
        for (&(a, b), &v) in &self.entries {
            m[a][b] = v;
        }
        m
    }
}

fn check_subset_arg(a: &MixedArray, subset: &[usize]) -> Result<()> {
    if subset.is_empty() || subset.len() >= a.cols() {
        return param(format!("the party subset must be nonempty and proper, got {} of {}", subset.len(), a.cols()));
    }
    if subset.windows(2).any(|w| w[0] >= w[1]) || subset.iter().any(|&c| c >= a.cols()) {
        return param("the party subset must be strictly increasing and in range");
    }
    Ok(())
}

/// `rho_S(a, b) = (1/r) #{(x, y) : x|S = a, y|S = b, x|S^c = y|S^c}`.
///
/// `subset` is a strictly increasing list of 0-based parties. Indices into
/// the matrix are mixed-radix over the kept parties, first party most
/// significant.
pub fn reduced_density(a: &MixedArray, subset: &[usize]) -> Result<DensityMatrix> {
    check_subset_arg(a, subset)?;
    let dim = subset.iter().try_fold(1usize, |acc, &c| acc.checked_mul(a.level(c) as usize));
    let Some(dim) = dim.filter(|&d| d <= 1 << 40) else {
        return param("the reduced dimension is too large");
    };
    let counts = pair_counts(a, subset);
    let r = a.runs() as u64;
    let entries = counts.into_iter().map(|(k, n)| (k, Ratio::new(n, r))).collect();
    Ok(DensityMatrix { subset: subset.to_vec(), dim, entries })
}

fn pair_counts(a: &MixedArray, subset: &[usize]) -> BTreeMap<(usize, usize), u64> {
    let mut keep = vec![false; a.cols()];
    for &c in subset {
        keep[c] = true;
    }
    let rest: Vec<usize> = (0..a.cols()).filter(|&c| !keep[c]).collect();
    let mut groups: HashMap<Vec<u16>, Vec<usize>> = HashMap::new();
    for row in a.rows() {
        let key: Vec<u16> = rest.iter().map(|&c| row[c]).collect();
        let idx = subset.iter().fold(0usize, |acc, &c| acc * a.level(c) as usize + row[c] as usize);
        groups.entry(key).or_default().push(idx);
    }
    let mut counts = BTreeMap::new();
    for members in groups.values() {
        for &x in members {
            for &y in members {
                *counts.entry((x, y)).or_insert(0u64) += 1;
            }
        }
    }
    counts
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UniformityWitness {
    pub subset: Vec<usize>,
    pub entry: (usize, usize),
    /// The offending entry as `n/d`.
    pub value: String,
    pub expected: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UniformityReport {
    pub k: usize,
    pub holds: bool,
    pub subsets_checked: usize,
    pub subsets_passed: usize,
    /// First failing subset in lexicographic order.
    pub witness: Option<UniformityWitness>,
}

fn subset_defect(a: &MixedArray, subset: &[usize]) -> Option<UniformityWitness> {
    let rho = reduced_density(a, subset).expect("subset validated by caller");
    rho.first_defect().map(|(entry, v)| UniformityWitness {
        subset: subset.to_vec(),
        entry,
        value: v.to_string(),
        expected: if entry.0 == entry.1 { Ratio::new(1, rho.dim as u64).to_string() } else { "0".into() },
    })
}

/// Checks that every `k`-party reduction is `I / D_S` exactly.
pub fn verify_k_uniform(a: &MixedArray, k: usize) -> Result<UniformityReport> {
    if k == 0 || k >= a.cols() {
        return param(format!("k must lie in 1..{}", a.cols()));
    }
    let subsets: Vec<Vec<usize>> = (0..a.cols()).combinations(k).collect();
    let results: Vec<Option<UniformityWitness>> = subsets.par_iter().map(|s| subset_defect(a, s)).collect();
    let passed = results.iter().filter(|w| w.is_none()).count();
    let witness = results.into_iter().flatten().next();
    Ok(UniformityReport {
        k,
        holds: witness.is_none(),
        subsets_checked: subsets.len(),
        subsets_passed: passed,
        witness,
    })
}

/// Absolutely maximally entangled: uniform at `floor(N / 2)`.
pub fn is_ame(a: &MixedArray) -> Result<bool> {
    if a.cols() < 2 {
        return param("an AME state needs at least two parties");
    }
    Ok(verify_k_uniform(a, a.cols() / 2)?.holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::trivial_moa;

    #[test]
    fn factorial_is_a_product_state() {
        // Equal superposition of all four kets is |+>|+>, so the marginal is
        // a pure projector rather than I/2.
        let a = trivial_moa(&[2, 2]).unwrap();
        let rho = reduced_density(&a, &[0]).unwrap();
        assert_eq!(rho.get(0, 0), Ratio::new(1, 2));
        assert_eq!(rho.get(0, 1), Ratio::new(1, 2));
        assert!(!rho.is_maximally_mixed());
        assert!(!is_ame(&a).unwrap());
    }

    #[test]
    fn distinct_complements_give_identity() {
        let a = MixedArray::from_rows(vec![2, 2], &[[0, 0], [1, 1]]).unwrap();
        assert!(reduced_density(&a, &[0]).unwrap().is_maximally_mixed());
        assert!(is_ame(&a).unwrap());
    }

    #[test]
    fn off_diagonal_mass() {
        // Both rows agree on party 1, so they interfere on party 0.
        let a = MixedArray::from_rows(vec![2, 2], &[[0, 0], [1, 0]]).unwrap();
        let rho = reduced_density(&a, &[0]).unwrap();
        assert_eq!(rho.get(0, 1), Ratio::new(1, 2));
        assert_eq!(rho.trace(), Ratio::from_integer(1));
        assert!(rho.is_symmetric());
        assert!(!rho.is_maximally_mixed());
    }

    #[test]
    fn duplicates_break_normalization() {
        let a = MixedArray::from_rows(vec![2, 2], &[[0, 0], [0, 0]]).unwrap();
        let rho = reduced_density(&a, &[0]).unwrap();
        assert_eq!(rho.trace(), Ratio::from_integer(2));
        assert!(emit_state(&a).has_duplicates());
    }

    #[test]
    fn ket_rendering() {
        let a = MixedArray::from_rows(vec![3, 2], &[[0, 1], [2, 0]]).unwrap();
        assert_eq!(emit_state(&a).to_string(), "|0 1⟩ + |2 0⟩");
    }
}
