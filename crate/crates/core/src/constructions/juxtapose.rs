//! Juxtaposition of a host array with an expanded difference scheme, and of
//! two orthogonal arrays along strength-1 partitions.

use num_integer::Integer;

use super::{Construction, PredictedDistance};
use crate::algebra::kron::{partition_stack, replicate_zero, tile_rows, StackMode};
use crate::algebra::DifferenceScheme;
use crate::array::distance::min_distance;
use crate::array::strength::verify_strength;
use crate::array::MixedArray;
use crate::error::{param, Result};

/// `[A + 0_d, D + (d)]` for any scheme with as many rows as `a`.
pub fn scheme_juxtapose(a: &MixedArray, b: &DifferenceScheme) -> Result<MixedArray> {
    if a.runs() != b.rows() {
        return param(format!("host has {} rows but the scheme has {}", a.runs(), b.rows()));
    }
    replicate_zero(a, b.order() as usize)?.concat_columns(&b.expand())
}

/// `C = [A + 0_d, B + (d)]` for a strength-2 host and a square scheme.
///
/// The certificate predicts `MD(C) = min{r, MD(A) + r - r/d}`.
pub fn lemma1_juxtapose(a: &MixedArray, b: &DifferenceScheme) -> Result<Construction> {
    if !b.is_square() {
        return param(format!("the scheme must be square, got {}x{}", b.rows(), b.cols()));
    }
    if b.strength() < 2 {
        return param("the scheme must have strength at least 2");
    }
    if a.cols() < 2 || !verify_strength(a, 2)?.holds {
        return param("the host must be an orthogonal array of strength 2");
    }
    let c = scheme_juxtapose(a, b)?;
    let (r, d) = (b.rows(), b.order() as usize);
    let md_a = min_distance(a);
    let value = r.min(md_a + r - r / d);
    let predicted = PredictedDistance::exact(format!("min{{{r}, {md_a} + {r} - {r}/{d}}}"), value);
    let name = format!("juxtapose {}-run host with D({r},{r},{d})", a.runs());
    Ok(Construction::new(c, name, 2, value >= 3, Some(predicted)))
}

/// A partition of an array's rows into equal blocks of strength 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalPartition {
    blocks: Vec<Vec<usize>>,
}

impl OrthogonalPartition {
    pub fn new(parent: &MixedArray, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let Some(size) = blocks.first().map(Vec::len) else {
            return param("a partition needs at least one block");
        };
        let mut seen = vec![false; parent.runs()];
        for b in &blocks {
            if b.len() != size {
                return param("blocks have different sizes");
            }
            for &i in b {
                if i >= parent.runs() || std::mem::replace(&mut seen[i], true) {
                    return param(format!("row {i} is out of range or repeated"));
                }
            }
        }
        if seen.contains(&false) {
            return param("blocks do not cover every row");
        }
        for (n, b) in blocks.iter().enumerate() {
            if !verify_strength(&parent.select_rows(b)?, 1)?.holds {
                return param(format!("block {n} does not have strength 1"));
            }
        }
        Ok(Self { blocks })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_size(&self) -> usize {
        self.blocks[0].len()
    }

    pub fn block_arrays(&self, parent: &MixedArray) -> Result<Vec<MixedArray>> {
        self.blocks.iter().map(|b| parent.select_rows(b)).collect()
    }
}

/// The blocks `a_i + (d)` of an expanded scheme, one per scheme row.
pub fn partition_from_scheme(ds: &DifferenceScheme) -> Result<OrthogonalPartition> {
    let d = ds.order() as usize;
    let blocks = (0..ds.rows()).map(|i| (i * d..(i + 1) * d).collect()).collect();
    OrthogonalPartition::new(&ds.expand(), blocks)
}

fn symmetric_level(a: &MixedArray, what: &str) -> Result<u32> {
    let d = a.level(0);
    if a.levels().iter().any(|&l| l != d) {
        return param(format!("{what} must be symmetric"));
    }
    Ok(d)
}

/// `M = (1_{h/u} (x) (A_[1..u], d''), 1_{h/v} (x) (d', B_[1..v]))`.
///
/// Both inputs must be symmetric orthogonal arrays of strength at least 3
/// whose partitions have blocks of exactly `d'` and `d''` rows, with `u <= v`.
pub fn lemma3_juxtapose(
    a: &MixedArray,
    pa: &OrthogonalPartition,
    b: &MixedArray,
    pb: &OrthogonalPartition,
) -> Result<Construction> {
    let d1 = symmetric_level(a, "the first array")?;
    let d2 = symmetric_level(b, "the second array")?;
    let (u, v) = (pa.len(), pb.len());
    if pa.block_size() != d1 as usize || pb.block_size() != d2 as usize {
        return param("partition blocks must have as many rows as the array has levels");
    }
    if pa.block_size() * u != a.runs() || pb.block_size() * v != b.runs() {
        return param("partitions do not belong to these arrays");
    }
    if u > v {
        return param(format!("the first partition has more blocks ({u}) than the second ({v})"));
    }
    for (x, name) in [(a, "first"), (b, "second")] {
        if x.cols() < 3 || !verify_strength(x, 3)?.holds {
            return param(format!("the {name} array must have strength at least 3"));
        }
    }
    let h = u.lcm(&v);
    let left = tile_rows(&partition_stack(&pa.block_arrays(a)?, d2 as usize, StackMode::RepeatEach)?, h / u)?;
    let right = tile_rows(&partition_stack(&pb.block_arrays(b)?, d1 as usize, StackMode::Tile)?, h / v)?;
    let m = left.concat_columns(&right)?;

    let (w1, w2) = (min_distance(a), min_distance(b));
    let (n1, n2) = (a.cols(), b.cols());
    let predicted = if u == v {
        PredictedDistance::at_least(format!("min{{{w1} + {w2}, {n1}, {n2}}}"), (w1 + w2).min(n1).min(n2))
    } else if v % u == 0 {
        PredictedDistance::at_least(format!("min{{{n1}, {w2}}}"), n1.min(w2))
    } else {
        PredictedDistance::at_least(format!("min{{{w1}, {w2}}}"), w1.min(w2))
    };
    let claims = predicted.value >= 4;
    let name = format!("partition juxtapose OA({},{n1},{d1},3) with OA({},{n2},{d2},3)", a.runs(), b.runs());
    Ok(Construction::new(m, name, 3, claims, Some(predicted)))
}
