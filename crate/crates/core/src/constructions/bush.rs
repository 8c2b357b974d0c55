//! Polynomial-evaluation arrays over GF(q) and full-factorial arrays.

use crate::algebra::FiniteField;
use crate::array::MixedArray;
use crate::error::{param, Result};

/// OA(q^k, q+1, q, k): rows are polynomials of degree below `k`, columns
/// evaluate them at each field element, and the last column holds the
/// coefficient of `x^(k-1)`. Distinct rows differ in at least `q + 2 - k`
/// columns.
pub fn bush_oa(q: u32, k: u32) -> Result<MixedArray> {
    bush_oa_truncated(q, k, q as usize + 1)
}

/// The first `cols` columns of [`bush_oa`].
pub fn bush_oa_truncated(q: u32, k: u32, cols: usize) -> Result<MixedArray> {
    let f = FiniteField::new(q)?;
    if k == 0 {
        return param("k must be at least 1");
    }
    if k > q + 1 {
        return param(format!("k = {k} exceeds q + 1 = {}", q + 1));
    }
    if cols == 0 || cols > q as usize + 1 {
        return param(format!("cannot take {cols} of {} columns", q + 1));
    }
    let runs = (q as usize).checked_pow(k).filter(|&r| r <= 1 << 24).map_or_else(
        || param(format!("{q}^{k} runs is too large")),
        Ok,
    )?;
    let coeffs = |mut i: usize| -> Vec<u32> {
        (0..k)
            .map(|_| {
                let c = (i % q as usize) as u32;
                i /= q as usize;
                c
            })
            .collect()
    };
    let mut cells = Vec::with_capacity(runs * cols);
    for i in 0..runs {
        let c = coeffs(i);
        for x in 0..cols as u32 {
            let v = if x == q {
                c[k as usize - 1]
            } else {
                c.iter().rev().fold(0, |acc, &ci| f.add(f.mul(acc, x), ci))
            };
            cells.push(v as u16);
        }
    }
    MixedArray::new(vec![q; cols], cells)
}

/// Full factorial over `levels`, first column varying slowest.
pub fn trivial_moa(levels: &[u32]) -> Result<MixedArray> {
    let runs = levels
        .iter()
        .try_fold(1usize, |acc, &d| acc.checked_mul(d as usize))
        .filter(|&r| r <= 1 << 24)
        .map_or_else(|| param("the full factorial is too large"), Ok)?;
    MixedArray::from_fn(runs, levels.to_vec(), |i, j| {
        let stride: usize = levels[j + 1..].iter().map(|&d| d as usize).product();
        ((i / stride) % levels[j] as usize) as u16
    })
}

/// Full factorial with a declared run count that must match.
pub fn trivial_moa_with_runs(runs: usize, levels: &[u32]) -> Result<MixedArray> {
    let product: usize = levels.iter().map(|&d| d as usize).product();
    if product != runs {
        return param(format!("levels multiply to {product}, not {runs}"));
    }
    trivial_moa(levels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::array::distance::min_distance;
    use crate::array::strength::verify_strength;

    #[test]
    fn bush_small() {
        let a = bush_oa(3, 2).unwrap();
        assert_eq!((a.runs(), a.cols()), (9, 4));
        assert!(verify_strength(&a, 2).unwrap().holds);
        assert_eq!(min_distance(&a), 3);
        assert!(bush_oa(2, 4).is_err());
        assert!(bush_oa_truncated(3, 3, 6).is_err());
    }

    #[test]
    fn trivial_examples() {
        let a = trivial_moa(&[7, 4, 2]).unwrap();
        assert_eq!(a.runs(), 56);
        assert_eq!(a.row(3), &[0, 1, 1]);
        let rep = verify_strength(&a, 3).unwrap();
        assert_eq!(rep.index, Some(1));
        assert_eq!(trivial_moa(&[2]).unwrap(), MixedArray::column(2).unwrap());
        assert!(trivial_moa_with_runs(56, &[28, 3]).is_err());
    }
}
