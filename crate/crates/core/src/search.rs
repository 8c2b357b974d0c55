//! Backtracking search for small mixed orthogonal arrays and partitions.
//!
//! Columns are filled one at a time, top to bottom. Every partial column is
//! checked against tuple counters for the column subsets it completes, and
//! against the distance floor using the columns still to come. Two
//! symmetries are broken: the first row is all zeros and rows stay in
//! lexicographic order.

use serde::Serialize;

use crate::array::strength::verify_strength;
use crate::array::distance::min_distance;
use crate::array::MixedArray;
use crate::constructions::feasibility::feasibility_5col;
use crate::constructions::OrthogonalPartition;
use crate::error::{param, Result};

pub const DEFAULT_BUDGET: u64 = 50_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchSpec {
    pub runs: usize,
    pub levels: Vec<u32>,
    pub strength: usize,
    /// Every pair of rows must differ in at least this many columns.
    pub min_distance: Option<usize>,
    /// Maximum number of cell assignments tried.
    pub budget: u64,
}

impl SearchSpec {
    pub fn new(runs: usize, levels: Vec<u32>, strength: usize) -> Self {
        Self { runs, levels, strength, min_distance: None, budget: DEFAULT_BUDGET }
    }

    pub fn with_min_distance(mut self, w: usize) -> Self {
        self.min_distance = Some(w);
        self
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    /// Why no array can exist, if a divisibility condition already fails.
    fn infeasibility(&self) -> Option<String> {
        let n = self.levels.len();
        let k = self.strength.min(n);
        if k == 0 {
            return None;
        }
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let p: u128 = idx.iter().map(|&c| self.levels[c] as u128).product();
            if self.runs as u128 % p != 0 {
                return Some(format!("{} runs are not a multiple of the level product {p} of columns {idx:?}", self.runs));
            }
            let Some(pos) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
                return None;
            };
            idx[pos] += 1;
            for i in pos + 1..k {
                idx[i] = idx[i - 1] + 1;
            }
        }
    }

    fn validate(&self) -> Result<()> {
        if self.runs == 0 || self.levels.is_empty() {
            return param("a search needs at least one run and one column");
        }
        if self.levels.iter().any(|&d| !(2..=u16::MAX as u32).contains(&d)) {
            return param("levels must lie in 2..=65535");
        }
        if self.strength > self.levels.len() {
            return param("strength exceeds the number of columns");
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SearchOutcome {
    Found { array: MixedArray, nodes: u64 },
    NotFoundWithinBudget { nodes: u64 },
    /// The whole symmetry-reduced space was exhausted.
    ProvedNonexistent { nodes: u64 },
    /// A divisibility condition rules the parameters out before searching.
    Infeasible { reason: String },
}

impl SearchOutcome {
    pub fn array(&self) -> Option<&MixedArray> {
        match self {
            SearchOutcome::Found { array, .. } => Some(array),
            _ => None,
        }
    }
}

struct Counter {
    cols: Vec<usize>,
    /// Mixed-radix weights of the earlier columns; the new column has weight 1.
    weights: Vec<usize>,
    limit: u32,
    counts: Vec<u32>,
}

struct Search<'a> {
    spec: &'a SearchSpec,
    r: usize,
    n: usize,
    /// Column-major cells.
    cells: Vec<u16>,
    /// Rows tied with the previous row on all completed columns.
    tied: Vec<bool>,
    dist: Vec<u16>,
    floor: usize,
    nodes: u64,
    exhausted_budget: bool,
}

impl<'a> Search<'a> {
    fn cell(&self, i: usize, j: usize) -> u16 {
        self.cells[j * self.r + i]
    }

    fn counters_for(&self, j: usize) -> Vec<Counter> {
        let k = self.spec.strength.min(j + 1);
        if k == 0 {
            return Vec::new();
        }
        let mut out = Vec::new();
        let others = k - 1;
        let mut idx: Vec<usize> = (0..others).collect();
        loop {
            if idx.iter().all(|&c| c < j) {
                let mut weights = vec![0; others];
                let mut w = self.spec.levels[j] as usize;
                for t in (0..others).rev() {
                    weights[t] = w;
                    w *= self.spec.levels[idx[t]] as usize;
                }
                let product = w;
                out.push(Counter {
                    cols: idx.clone(),
                    weights,
                    limit: (self.r / product) as u32,
                    counts: vec![0; product],
                });
            }
            if others == 0 {
                break;
            }
            let Some(pos) = (0..others).rev().find(|&i| idx[i] < j - others + i) else {
                break;
            };
            idx[pos] += 1;
            for i in pos + 1..others {
                idx[i] = idx[i - 1] + 1;
            }
        }
        out
    }

    fn slot(&self, c: &Counter, i: usize, v: u16) -> usize {
        c.cols.iter().zip(&c.weights).map(|(&col, &w)| self.cell(i, col) as usize * w).sum::<usize>() + v as usize
    }

    fn run(&mut self) -> bool {
        self.column(0)
    }

    fn column(&mut self, j: usize) -> bool {
        if j == self.n {
            return true;
        }
        let mut counters = self.counters_for(j);
        self.fill(j, 0, &mut counters)
    }

    fn fill(&mut self, j: usize, i: usize, counters: &mut [Counter]) -> bool {
        if i == self.r {
            let saved: Vec<bool> = self.tied.clone();
            for row in 1..self.r {
                self.tied[row] = self.tied[row] && self.cell(row, j) == self.cell(row - 1, j);
            }
            if self.column(j + 1) {
                return true;
            }
            self.tied = saved;
            return false;
        }
        let d = self.spec.levels[j] as u16;
        let lo = if i > 0 && self.tied[i] { self.cell(i - 1, j) } else { 0 };
        let hi = if i == 0 { 0 } else { d - 1 };
        let remaining_after = (self.n - j - 1) as u16;
        for v in lo..=hi {
            self.nodes += 1;
            if self.nodes > self.spec.budget {
                self.exhausted_budget = true;
                return false;
            }
            let slots: Vec<usize> = counters.iter().map(|c| self.slot(c, i, v)).collect();
            if counters.iter().zip(&slots).any(|(c, &s)| c.counts[s] >= c.limit) {
                continue;
            }
            self.cells[j * self.r + i] = v;
            let mut ok = true;
            if self.floor > 0 {
                for p in 0..i {
                    let add = (self.cell(p, j) != v) as u16;
                    if (self.dist[p * self.r + i] + add + remaining_after) < self.floor as u16 {
                        ok = false;
                        break;
                    }
                }
            }
            if !ok {
                continue;
            }
            for (c, &s) in counters.iter_mut().zip(&slots) {
                c.counts[s] += 1;
            }
            for p in 0..i {
                self.dist[p * self.r + i] += (self.cell(p, j) != v) as u16;
            }
            if self.fill(j, i + 1, counters) {
                return true;
            }
            for p in 0..i {
                self.dist[p * self.r + i] -= (self.cell(p, j) != v) as u16;
            }
            for (c, &s) in counters.iter_mut().zip(&slots) {
                c.counts[s] -= 1;
            }
            if self.exhausted_budget {
                return false;
            }
        }
        false
    }
}

/// Depth-first search for an array meeting `spec`. The first array in the
/// search order is returned, so results are reproducible.
pub fn search_moa(spec: &SearchSpec) -> Result<SearchOutcome> {
    spec.validate()?;
    if let Some(reason) = spec.infeasibility() {
        return Ok(SearchOutcome::Infeasible { reason });
    }
    let (r, n) = (spec.runs, spec.levels.len());
    let floor = spec.min_distance.unwrap_or(0);
    if floor > n {
        return Ok(SearchOutcome::Infeasible { reason: format!("distance {floor} exceeds {n} columns") });
    }
    let mut s = Search {
        spec,
        r,
        n,
        cells: vec![0; r * n],
        tied: vec![true; r],
        dist: vec![0; r * r],
        floor,
        nodes: 0,
        exhausted_budget: false,
    };
    if s.run() {
        let array = MixedArray::from_fn(r, spec.levels.clone(), |i, j| s.cell(i, j))?;
        // The search never certifies itself.
        debug_assert!(verify_strength(&array, spec.strength)?.holds);
        if !verify_strength(&array, spec.strength)?.holds || (floor > 0 && r > 1 && min_distance(&array) < floor) {
            return Err(crate::Error::Verification("search produced an array that fails its own spec".into()));
        }
        return Ok(SearchOutcome::Found { array, nodes: s.nodes });
    }
    Ok(if s.exhausted_budget {
        SearchOutcome::NotFoundWithinBudget { nodes: s.nodes }
    } else {
        SearchOutcome::ProvedNonexistent { nodes: s.nodes }
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum NonexistenceVerdict {
    ProvedNonexistent { reason: String },
    FoundCounterexample { array: MixedArray },
    Inconclusive { nodes: u64 },
}

/// Bounded attempt to show that no array of strength `k` with minimal
/// distance at least `k + 1` exists for `spec`.
pub fn exhaustive_nonexistence(spec: &SearchSpec) -> Result<NonexistenceVerdict> {
    spec.validate()?;
    let k = spec.strength;
    if spec.levels.len() == 5 && k == 2 {
        if let crate::constructions::Feasibility::Impossible(reason) = feasibility_5col(&spec.levels)? {
            return Ok(NonexistenceVerdict::ProvedNonexistent { reason });
        }
    }
    let floor = spec.min_distance.unwrap_or(k + 1).max(k + 1);
    let full = spec.clone().with_min_distance(floor);
    Ok(match search_moa(&full)? {
        SearchOutcome::Found { array, .. } => NonexistenceVerdict::FoundCounterexample { array },
        SearchOutcome::Infeasible { reason } => NonexistenceVerdict::ProvedNonexistent { reason },
        SearchOutcome::ProvedNonexistent { nodes } => NonexistenceVerdict::ProvedNonexistent {
            reason: format!("search space exhausted after {nodes} assignments"),
        },
        SearchOutcome::NotFoundWithinBudget { nodes } => NonexistenceVerdict::Inconclusive { nodes },
    })
}

/// Splits the rows of `a` into `blocks` equal blocks of strength 1.
pub fn search_partition(a: &MixedArray, blocks: usize, budget: u64) -> Result<Option<OrthogonalPartition>> {
    if blocks == 0 || a.runs() % blocks != 0 {
        return param(format!("{} runs cannot be split into {blocks} equal blocks", a.runs()));
    }
    let size = a.runs() / blocks;
    if let Some(&d) = a.levels().iter().find(|&&d| size % d as usize != 0) {
        return param(format!("block size {size} is not a multiple of level {d}"));
    }
    // counts[b][col][symbol]
    let offsets: Vec<usize> = a.levels().iter().scan(0, |acc, &d| {
        let o = *acc;
        *acc += d as usize;
        Some(o)
    }).collect();
    let width: usize = a.levels().iter().map(|&d| d as usize).sum();
    let mut counts = vec![0usize; blocks * width];
    let mut fill = vec![0usize; blocks];
    let mut assign = vec![usize::MAX; a.runs()];
    let mut nodes = 0u64;

    #[allow(clippy::too_many_arguments)]
    fn go(
        a: &MixedArray,
        i: usize,
        size: usize,
        offsets: &[usize],
        width: usize,
        counts: &mut [usize],
        fill: &mut [usize],
        assign: &mut [usize],
        nodes: &mut u64,
        budget: u64,
    ) -> Option<bool> {
        if i == a.runs() {
            return Some(true);
        }
        let opened = fill.iter().take_while(|&&f| f > 0).count();
        for b in 0..(opened + 1).min(fill.len()) {
            *nodes += 1;
            if *nodes > budget {
                return None;
            }
            if fill[b] == size {
                continue;
            }
            let row = a.row(i);
            let ok = row.iter().enumerate().all(|(c, &v)| {
                counts[b * width + offsets[c] + v as usize] < size / a.level(c) as usize
            });
            if !ok {
                continue;
            }
            for (c, &v) in row.iter().enumerate() {
                counts[b * width + offsets[c] + v as usize] += 1;
            }
            fill[b] += 1;
            assign[i] = b;
            match go(a, i + 1, size, offsets, width, counts, fill, assign, nodes, budget) {
                Some(true) => return Some(true),
                None => return None,
                Some(false) => {}
            }
            fill[b] -= 1;
            for (c, &v) in row.iter().enumerate() {
                counts[b * width + offsets[c] + v as usize] -= 1;
            }
        }
        Some(false)
    }

    match go(a, 0, size, &offsets, width, &mut counts, &mut fill, &mut assign, &mut nodes, budget) {
        Some(true) => {
            let mut parts = vec![Vec::new(); blocks];
            for (i, &b) in assign.iter().enumerate() {
                parts[b].push(i);
            }
            OrthogonalPartition::new(a, parts).map(Some)
        }
        _ => Ok(None),
    }
}
