//! Kronecker sums, stacking notation and the product construction.

use super::group::AbelianGroup;
use crate::array::MixedArray;
use crate::error::{param, Result};

fn check_group(a: &MixedArray, group: AbelianGroup) -> Result<()> {
    let d = group.order();
    match a.levels().iter().find(|&&l| l != d) {
        Some(l) => param(format!("level {l} does not match group order {d}")),
        None => Ok(()),
    }
}

/// General Kronecker sum: block `(i, j)` is `a(i, j) + b`.
pub fn kronecker_sum(a: &MixedArray, b: &MixedArray, group: AbelianGroup) -> Result<MixedArray> {
    check_group(a, group)?;
    check_group(b, group)?;
    let (rb, nb) = (b.runs(), b.cols());
    let n = a.cols() * nb;
    MixedArray::from_fn(a.runs() * rb, vec![group.order(); n], |i, j| {
        group.add(a.cell(i / rb, j / nb) as u32, b.cell(i % rb, j % nb) as u32) as u16
    })
}

/// `D + (d)`: row `i*d + g` is row `i` of `D` shifted by `g`.
pub fn expand(d: &MixedArray, group: AbelianGroup) -> Result<MixedArray> {
    kronecker_sum(d, &MixedArray::column(group.order())?, group)
}

/// `A + 0_d`: every row repeated `d` times. Works for any levels.
pub fn replicate_zero(a: &MixedArray, d: usize) -> Result<MixedArray> {
    repeat_rows_each(a, d)
}

/// `A (x) 1_r`: each row repeated `r` times in place.
pub fn repeat_rows_each(a: &MixedArray, r: usize) -> Result<MixedArray> {
    if r == 0 {
        return param("repeat count must be positive");
    }
    let rows: Vec<usize> = (0..a.runs()).flat_map(|i| std::iter::repeat(i).take(r)).collect();
    a.select_rows(&rows)
}

/// `1_r (x) A`: the whole array tiled `r` times.
pub fn tile_rows(a: &MixedArray, r: usize) -> Result<MixedArray> {
    if r == 0 {
        return param("tile count must be positive");
    }
    let rows: Vec<usize> = (0..r).flat_map(|_| 0..a.runs()).collect();
    a.select_rows(&rows)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StackMode {
    /// `(A_[1..u], r)`: stack of `A_i (x) 1_r`.
    RepeatEach,
    /// `(r, A_[1..u])`: stack of `1_r (x) A_i`.
    Tile,
}

pub fn partition_stack(blocks: &[MixedArray], r: usize, mode: StackMode) -> Result<MixedArray> {
    let parts = blocks
        .iter()
        .map(|b| match mode {
            StackMode::RepeatEach => repeat_rows_each(b, r),
            StackMode::Tile => tile_rows(b, r),
        })
        .collect::<Result<Vec<_>>>()?;
    MixedArray::stack_rows(&parts)
}

/// Rows `(i, j)`, column `c` carrying `a(i,c) * d_b(c) + b(j,c)`; the wider
/// input is truncated to the narrower one's column count.
pub fn product_construction(a: &MixedArray, b: &MixedArray) -> Result<MixedArray> {
    let n = a.cols().min(b.cols());
    let levels: Vec<u32> = (0..n).map(|c| a.level(c) * b.level(c)).collect();
    if let Some(l) = levels.iter().find(|&&l| l > u16::MAX as u32 + 1) {
        return param(format!("paired level {l} is too large"));
    }
    let rb = b.runs();
    MixedArray::from_fn(a.runs() * rb, levels, |i, c| {
        (a.cell(i / rb, c) as u32 * b.level(c) + b.cell(i % rb, c) as u32) as u16
    })
}
