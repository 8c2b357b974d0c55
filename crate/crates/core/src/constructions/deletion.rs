//! Column deletion that keeps the minimal distance above a floor.

use serde::Serialize;

use crate::array::MixedArray;
use crate::error::{param, Result};

/// How a family chooses which columns to drop once the guaranteed budget is
/// not enough.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DeletionStrategy {
    /// Drop the last columns; only valid inside the guaranteed budget.
    AnyWithinBudget,
    /// Drop host-side columns first, then scheme columns from the end.
    MoaPartFirst,
    /// Backtracking search over candidate subsets.
    Search { budget: u64 },
    /// Try the three above in order.
    Auto,
}

/// Rows pairs that could fall below `floor` once `count` of `candidates` are
/// removed, with the candidate columns each pair differs in.
struct Pairs {
    /// Current distance of each tracked pair.
    dist: Vec<usize>,
    /// For each candidate position, the tracked pairs it separates.
    hits: Vec<Vec<u32>>,
}

fn tracked_pairs(a: &MixedArray, candidates: &[usize], count: usize, floor: usize) -> Option<Pairs> {
    let mut is_cand = vec![usize::MAX; a.cols()];
    for (pos, &c) in candidates.iter().enumerate() {
        is_cand[c] = pos;
    }
    let mut dist = Vec::new();
    let mut hits = vec![Vec::new(); candidates.len()];
    let mut here = Vec::new();
    for i in 0..a.runs() {
        let x = a.row(i);
        for j in i + 1..a.runs() {
            let y = a.row(j);
            here.clear();
            let mut d = 0;
            for c in 0..x.len() {
                if x[c] != y[c] {
                    d += 1;
                    if is_cand[c] != usize::MAX {
                        here.push(is_cand[c]);
                    }
                }
            }
            if d < floor {
                return None;
            }
            if d - here.len().min(count) >= floor {
                continue;
            }
            let id = dist.len() as u32;
            dist.push(d);
            for &p in &here {
                hits[p].push(id);
            }
        }
    }
    Some(Pairs { dist, hits })
}

impl Pairs {
    /// Removes candidate `p`; false (and no change) if a pair would drop below `floor`.
    fn take(&mut self, p: usize, floor: usize) -> bool {
        if self.hits[p].iter().any(|&id| self.dist[id as usize] <= floor) {
            return false;
        }
        for &id in &self.hits[p] {
            self.dist[id as usize] -= 1;
        }
        true
    }

    fn restore(&mut self, p: usize) {
        for &id in &self.hits[p] {
            self.dist[id as usize] += 1;
        }
    }
}

/// Finds `count` columns among `candidates` whose removal leaves minimal
/// distance at least `k + 1`.
///
/// The last `count` candidates are tried first, then subsets in
/// lexicographic order of candidate position. `budget` caps the number of
/// search nodes; `Ok(None)` means nothing was found within it.
pub fn delete_for_distance(
    a: &MixedArray,
    candidates: &[usize],
    count: usize,
    k: usize,
    budget: u64,
) -> Result<Option<Vec<usize>>> {
    if count > candidates.len() {
        return param(format!("cannot delete {count} of {} candidate columns", candidates.len()));
    }
    if candidates.iter().any(|&c| c >= a.cols()) {
        return param("candidate column out of range");
    }
    if count >= a.cols() {
        return param("cannot delete every column");
    }
    let floor = k + 1;
    let Some(mut pairs) = tracked_pairs(a, candidates, count, floor) else {
        return Ok(None);
    };

    let tail: Vec<usize> = (candidates.len() - count..candidates.len()).collect();
    let mut taken = Vec::new();
    for &p in &tail {
        if !pairs.take(p, floor) {
            break;
        }
        taken.push(p);
    }
    if taken.len() == count {
        return Ok(Some(tail.iter().map(|&p| candidates[p]).collect()));
    }
    for &p in taken.iter().rev() {
        pairs.restore(p);
    }

    let mut nodes = 0u64;
    let mut chosen = Vec::with_capacity(count);
    let found = dfs(&mut pairs, candidates.len(), count, floor, 0, &mut chosen, &mut nodes, budget);
    Ok(found.then(|| chosen.iter().map(|&p| candidates[p]).collect()))
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    pairs: &mut Pairs,
    n: usize,
    count: usize,
    floor: usize,
    from: usize,
    chosen: &mut Vec<usize>,
    nodes: &mut u64,
    budget: u64,
) -> bool {
    if chosen.len() == count {
        return true;
    }
    let need = count - chosen.len();
    for p in from..=n - need {
        *nodes += 1;
        if *nodes > budget {
            return false;
        }
        if !pairs.take(p, floor) {
            continue;
        }
        chosen.push(p);
        if dfs(pairs, n, count, floor, p + 1, chosen, nodes, budget) {
            return true;
        }
        chosen.pop();
        pairs.restore(p);
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::hadamard01_auto;
    use crate::array::distance::min_distance;

    #[test]
    fn tail_is_preferred() {
        let a = hadamard01_auto(12).unwrap().scheme(2).unwrap().expand();
        let cols: Vec<usize> = (0..12).collect();
        let got = delete_for_distance(&a, &cols, 3, 2, 1000).unwrap().unwrap();
        assert_eq!(got, vec![9, 10, 11]);
        assert!(min_distance(&a.delete_columns(&got).unwrap()) >= 3);
    }

    #[test]
    fn impossible_floor() {
        let a = hadamard01_auto(4).unwrap().scheme(2).unwrap().expand();
        let cols: Vec<usize> = (0..4).collect();
        assert_eq!(delete_for_distance(&a, &cols, 1, 2, 1000).unwrap(), None);
    }
}
