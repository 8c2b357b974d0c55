//! Expansive replacement: each symbol of a `d`-level column is replaced by
//! the corresponding row of a `d`-run array.

use super::{Construction, PredictedDistance};
use crate::array::distance::min_distance;
use crate::array::MixedArray;
use crate::error::{param, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnReplacement {
    pub column: usize,
    /// Row `i` replaces symbol `i`.
    pub with: MixedArray,
    /// Columns of `with` to keep, in order. `None` keeps all of them.
    pub keep: Option<Vec<usize>>,
}

impl ColumnReplacement {
    pub fn full(column: usize, with: MixedArray) -> Self {
        Self { column, with, keep: None }
    }

    pub fn keeping(column: usize, with: MixedArray, keep: Vec<usize>) -> Self {
        Self { column, with, keep: Some(keep) }
    }

    fn is_full(&self) -> bool {
        self.keep
            .as_ref()
            .is_none_or(|k| k.len() == self.with.cols() && k.iter().enumerate().all(|(i, &c)| i == c))
    }

    fn kept(&self) -> Result<Option<MixedArray>> {
        match &self.keep {
            None => Ok(Some(self.with.clone())),
            Some(k) if k.is_empty() => Ok(None),
            Some(k) => self.with.select_columns(k).map(Some),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReplacementPlan {
    pub replacements: Vec<ColumnReplacement>,
}

impl ReplacementPlan {
    pub fn single(r: ColumnReplacement) -> Self {
        Self { replacements: vec![r] }
    }
}

/// Applies a replacement plan to a host of strength `k`.
///
/// Fully replaced columns keep every pairwise distance as long as the
/// replacement has distinct rows; partially kept columns may lose it. The
/// certificate therefore predicts `MD >= MD(host without partial columns)`
/// when every full replacement has distinct rows, and makes no prediction
/// otherwise.
pub fn expansive_replace(a: &MixedArray, k: usize, plan: &ReplacementPlan) -> Result<Construction> {
    if plan.replacements.is_empty() {
        return param("the replacement plan is empty");
    }
    let mut by_col: Vec<Option<&ColumnReplacement>> = vec![None; a.cols()];
    for r in &plan.replacements {
        if r.column >= a.cols() {
            return param(format!("column {} out of range", r.column));
        }
        if by_col[r.column].is_some() {
            return param(format!("column {} is replaced twice", r.column));
        }
        if r.with.runs() != a.level(r.column) as usize {
            return param(format!(
                "column {} has {} levels but its replacement has {} runs",
                r.column,
                a.level(r.column),
                r.with.runs()
            ));
        }
        by_col[r.column] = Some(r);
    }

    let mut pieces: Vec<MixedArray> = Vec::new();
    let mut partial = Vec::new();
    let mut full_distinct = true;
    for (c, rep) in by_col.iter().enumerate() {
        let col = a.select_columns(&[c])?;
        match rep {
            None => pieces.push(col),
            Some(r) => {
                if r.is_full() {
                    full_distinct &= min_distance(&r.with) >= 1;
                } else {
                    partial.push(c);
                }
                if let Some(kept) = r.kept()? {
                    let rows: Vec<usize> = col.column_values(0).map(usize::from).collect();
                    pieces.push(kept.select_rows(&rows)?);
                }
            }
        }
    }
    let Some((first, rest)) = pieces.split_first() else {
        return param("the plan removes every column");
    };
    let out = rest.iter().try_fold(first.clone(), |acc, p| acc.concat_columns(p))?;

    let predicted = if full_distinct && partial.len() < a.cols() {
        let base = a.delete_columns(&partial)?;
        let md = min_distance(&base);
        Some(PredictedDistance::at_least(
            format!("MD of the {} undisturbed or fully replaced columns", base.cols()),
            md,
        ))
    } else {
        None
    };
    let claims = predicted.as_ref().is_some_and(|p| p.value > k);
    let cols: Vec<String> = plan.replacements.iter().map(|r| r.column.to_string()).collect();
    let name = format!("expansive replacement of column(s) {}", cols.join(","));
    Ok(Construction::new(out, name, k, claims, predicted))
}
