//! The [`MixedArray`] carrier and the definitional predicates built on it.

pub mod distance;
pub mod format;
pub mod strength;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{malformed, param, Result};

/// An `r x N` symbol matrix where column `j` takes values in `0..levels[j]`.
///
/// Cells are stored row-major. The type guarantees `r >= 1`, `N >= 1`,
/// every level `>= 2` and every cell below its column's level.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MixedArray {
    runs: usize,
    levels: Vec<u32>,
    cells: Vec<u16>,
}

impl MixedArray {
    /// Builds an array from row-major cells.
    pub fn new(levels: Vec<u32>, cells: Vec<u16>) -> Result<Self> {
        if levels.is_empty() {
            return malformed("an array needs at least one column");
        }
        if let Some(&d) = levels.iter().find(|&&d| !(2..=u16::MAX as u32 + 1).contains(&d)) {
            return malformed(format!("level {d} is outside 2..=65536"));
        }
        let n = levels.len();
        if cells.is_empty() || cells.len() % n != 0 {
            return malformed(format!(
                "{} cells do not fill whole rows of {n} columns",
                cells.len()
            ));
        }
        for (idx, &v) in cells.iter().enumerate() {
            let j = idx % n;
            if v as u32 >= levels[j] {
                return malformed(format!(
                    "cell ({}, {j}) = {v} is not below level {}",
                    idx / n,
                    levels[j]
                ));
            }
        }
        Ok(Self {
            runs: cells.len() / n,
            levels,
            cells,
        })
    }

    /// Builds an array from a list of rows.
    pub fn from_rows<R: AsRef<[u16]>>(levels: Vec<u32>, rows: &[R]) -> Result<Self> {
        let n = levels.len();
        let mut cells = Vec::with_capacity(rows.len() * n);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return malformed(format!("row {i} has {} entries, expected {n}", row.len()));
            }
            cells.extend_from_slice(row);
        }
        Self::new(levels, cells)
    }

    /// Builds an array cell by cell.
    pub fn from_fn(runs: usize, levels: Vec<u32>, mut f: impl FnMut(usize, usize) -> u16) -> Result<Self> {
        let n = levels.len();
        let mut cells = Vec::with_capacity(runs * n);
        for i in 0..runs {
            for j in 0..n {
                cells.push(f(i, j));
            }
        }
        Self::new(levels, cells)
    }

    /// The single column `(d)` listing the symbols `0..d`.
    pub fn column(d: u32) -> Result<Self> {
        Self::from_fn(d as usize, vec![d], |i, _| i as u16)
    }

    /// An all-zero array.
    pub fn zeros(runs: usize, levels: Vec<u32>) -> Result<Self> {
        let len = runs * levels.len();
        Self::new(levels, vec![0; len])
    }

    pub fn runs(&self) -> usize {
        self.runs
    }

    pub fn cols(&self) -> usize {
        self.levels.len()
    }

    pub fn levels(&self) -> &[u32] {
        &self.levels
    }

    pub fn level(&self, j: usize) -> u32 {
        self.levels[j]
    }

    pub fn cells(&self) -> &[u16] {
        &self.cells
    }

    pub fn cell(&self, i: usize, j: usize) -> u16 {
        self.cells[i * self.levels.len() + j]
    }

    pub fn row(&self, i: usize) -> &[u16] {
        let n = self.levels.len();
        &self.cells[i * n..(i + 1) * n]
    }

    pub fn rows(&self) -> impl ExactSizeIterator<Item = &[u16]> + '_ {
        self.cells.chunks_exact(self.levels.len())
    }

    pub fn column_values(&self, j: usize) -> impl Iterator<Item = u16> + '_ {
        self.rows().map(move |r| r[j])
    }

    /// The level multiset, e.g. `3^1 2^16`.
    pub fn profile(&self) -> LevelProfile {
        LevelProfile::from_levels(&self.levels)
    }

    /// Keeps the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Result<Self> {
        if cols.is_empty() {
            return param("cannot select zero columns");
        }
        if let Some(&c) = cols.iter().find(|&&c| c >= self.cols()) {
            return param(format!("column {c} out of range for {} columns", self.cols()));
        }
        let levels = cols.iter().map(|&c| self.levels[c]).collect();
        let mut cells = Vec::with_capacity(self.runs * cols.len());
        for row in self.rows() {
            cells.extend(cols.iter().map(|&c| row[c]));
        }
        Self::new(levels, cells)
    }

    /// Removes the given columns and keeps the rest in order.
    pub fn delete_columns(&self, cols: &[usize]) -> Result<Self> {
        let mut drop = vec![false; self.cols()];
        for &c in cols {
            if c >= self.cols() {
                return param(format!("column {c} out of range for {} columns", self.cols()));
            }
            drop[c] = true;
        }
        let keep: Vec<usize> = (0..self.cols()).filter(|&c| !drop[c]).collect();
        if keep.is_empty() {
            return param("cannot delete every column");
        }
        self.select_columns(&keep)
    }

    /// Columnwise juxtaposition `[self, other]`.
    pub fn concat_columns(&self, other: &Self) -> Result<Self> {
        if self.runs != other.runs {
            return param(format!(
                "run counts differ: {} vs {}",
                self.runs, other.runs
            ));
        }
        let mut levels = self.levels.clone();
        levels.extend_from_slice(&other.levels);
        let mut cells = Vec::with_capacity(self.cells.len() + other.cells.len());
        for (a, b) in self.rows().zip(other.rows()) {
            cells.extend_from_slice(a);
            cells.extend_from_slice(b);
        }
        Self::new(levels, cells)
    }

    /// Vertical stacking of arrays with identical levels.
    pub fn stack_rows(blocks: &[Self]) -> Result<Self> {
        let Some(first) = blocks.first() else {
            return param("nothing to stack");
        };
        if let Some(b) = blocks.iter().find(|b| b.levels != first.levels) {
            return param(format!(
                "level mismatch while stacking: {:?} vs {:?}",
                first.levels, b.levels
            ));
        }
        let cells = blocks.iter().flat_map(|b| b.cells.iter().copied()).collect();
        Self::new(first.levels.clone(), cells)
    }

    /// Keeps the given rows, in the given order.
    pub fn select_rows(&self, rows: &[usize]) -> Result<Self> {
        if let Some(&i) = rows.iter().find(|&&i| i >= self.runs) {
            return param(format!("row {i} out of range for {} rows", self.runs));
        }
        let cells = rows.iter().flat_map(|&i| self.row(i).iter().copied()).collect();
        Self::new(self.levels.clone(), cells)
    }

    /// Applies `perm[j]` as a symbol relabeling to column `j`.
    pub fn relabel(&self, perms: &[Vec<u16>]) -> Result<Self> {
        if perms.len() != self.cols() {
            return param("one relabeling per column is required");
        }
        for (j, p) in perms.iter().enumerate() {
            let mut seen = vec![false; self.levels[j] as usize];
            if p.len() != seen.len() || p.iter().any(|&v| (v as usize) >= seen.len() || std::mem::replace(&mut seen[v as usize], true)) {
                return param(format!("relabeling of column {j} is not a permutation"));
            }
        }
        let n = self.cols();
        let cells = self
            .cells
            .iter()
            .enumerate()
            .map(|(idx, &v)| perms[idx % n][v as usize])
            .collect();
        Self::new(self.levels.clone(), cells)
    }

    /// Rows sorted lexicographically; used to compare arrays up to row order.
    pub fn sorted_rows(&self) -> Vec<Vec<u16>> {
        let mut rows: Vec<Vec<u16>> = self.rows().map(<[u16]>::to_vec).collect();
        rows.sort();
        rows
    }

    /// Sets one cell. Fails if the value is not below the column level.
    pub fn set(&mut self, i: usize, j: usize, v: u16) -> Result<()> {
        if i >= self.runs || j >= self.cols() {
            return param(format!("cell ({i}, {j}) out of range"));
        }
        if v as u32 >= self.levels[j] {
            return param(format!("value {v} not below level {}", self.levels[j]));
        }
        let n = self.cols();
        self.cells[i * n + j] = v;
        Ok(())
    }
}

impl fmt::Display for MixedArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(u16::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Level multiset in exponent notation, highest level first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LevelProfile {
    pub parts: Vec<(u32, usize)>,
}

impl LevelProfile {
    pub fn from_levels(levels: &[u32]) -> Self {
        let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
        for &d in levels {
            *counts.entry(d).or_default() += 1;
        }
        Self {
            parts: counts.into_iter().rev().collect(),
        }
    }

    /// Identifier form, e.g. `3^5x2^36`.
    pub fn id(&self) -> String {
        self.parts
            .iter()
            .map(|(d, n)| format!("{d}^{n}"))
            .collect::<Vec<_>>()
            .join("x")
    }

    pub fn cols(&self) -> usize {
        self.parts.iter().map(|p| p.1).sum()
    }
}

impl fmt::Display for LevelProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|(d, n)| format!("{d}^{n}")).collect();
        f.write_str(&s.join(" "))
    }
}

/// Serializes as `{runs, levels, rows}`.
impl serde::Serialize for MixedArray {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let rows: Vec<&[u16]> = self.rows().collect();
        let mut st = s.serialize_struct("MixedArray", 3)?;
        st.serialize_field("runs", &self.runs())?;
        st.serialize_field("levels", self.levels())?;
        st.serialize_field("rows", &rows)?;
        st.end()
    }
}


#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> MixedArray {
        MixedArray::from_rows(vec![3, 2], &[[0, 0], [1, 1], [2, 0]]).unwrap()
    }

    #[test]
    fn rejects_out_of_range_cells() {
        assert!(MixedArray::from_rows(vec![2], &[[2]]).is_err());
        assert!(MixedArray::new(vec![], vec![]).is_err());
        assert!(MixedArray::new(vec![2], vec![]).is_err());
        assert!(MixedArray::new(vec![1], vec![0]).is_err());
    }

    #[test]
    fn select_and_delete() {
        let a = small();
        assert_eq!(a.delete_columns(&[]).unwrap(), a);
        let b = a.delete_columns(&[0]).unwrap();
        assert_eq!(b.levels(), &[2]);
        assert_eq!(b.column_values(0).collect::<Vec<_>>(), vec![0, 1, 0]);
        assert!(a.delete_columns(&[0, 1]).is_err());
        assert!(a.delete_columns(&[5]).is_err());
    }

    #[test]
    fn concat_checks_runs() {
        let a = small();
        let c = a.concat_columns(&a).unwrap();
        assert_eq!(c.cols(), 4);
        assert_eq!(c.row(1), &[1, 1, 1, 1]);
        assert!(a.concat_columns(&MixedArray::column(2).unwrap()).is_err());
    }

    #[test]
    fn profile_notation() {
        let a = MixedArray::zeros(1, vec![2, 3, 2, 2]).unwrap();
        assert_eq!(a.profile().to_string(), "3^1 2^3");
        assert_eq!(a.profile().id(), "3^1x2^3");
    }
}
