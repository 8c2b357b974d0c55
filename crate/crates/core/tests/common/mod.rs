//! Brute-force reference implementations, written without the library's
//! code paths, plus a pool of small arrays for randomized tests.

#![allow(dead_code)]

use std::collections::HashMap;

use itertools::Itertools;
use num_rational::Ratio;
use oakit::algebra::{ds_linear, ds_poly3, hadamard01_auto};
use oakit::catalog::seeds::{ame_6_3_2, moa_12_3x2_4, moa_12_6x2_2, moa_8_4x2_4};
use oakit::catalog::FIXTURES;
use oakit::constructions::{bush_oa, bush_oa_truncated, trivial_moa};
use oakit::MixedArray;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn rows(a: &MixedArray) -> Vec<Vec<u16>> {
    (0..a.runs()).map(|i| (0..a.cols()).map(|j| a.cell(i, j)).collect()).collect()
}

/// Every tuple over every `k` columns appears equally often.
pub fn naive_strength(a: &MixedArray, k: usize) -> bool {
    let rs = rows(a);
    (0..a.cols()).combinations(k).all(|cols| {
        let cells: usize = cols.iter().map(|&c| a.level(c) as usize).product();
        if a.runs() % cells != 0 {
            return false;
        }
        let mut seen: HashMap<Vec<u16>, usize> = HashMap::new();
        for r in &rs {
            *seen.entry(cols.iter().map(|&c| r[c]).collect()).or_default() += 1;
        }
        seen.len() == cells && seen.values().all(|&n| n == a.runs() / cells)
    })
}

pub fn naive_min_distance(a: &MixedArray) -> usize {
    let rs = rows(a);
    let mut best = a.cols() + 1;
    for i in 0..rs.len() {
        for j in i + 1..rs.len() {
            best = best.min(rs[i].iter().zip(&rs[j]).filter(|(x, y)| x != y).count());
        }
    }
    best
}

/// All rows are distinct after deleting any `k` columns.
pub fn naive_irredundant(a: &MixedArray, k: usize) -> bool {
    let rs = rows(a);
    (0..a.cols()).combinations(a.cols() - k).all(|cols| {
        rs.iter().map(|r| cols.iter().map(|&c| r[c]).collect::<Vec<_>>()).all_unique()
    })
}

/// Reduced density matrix by summing over every basis state of the
/// discarded parties, using a dense amplitude table over the full space.
pub fn dense_reduced(a: &MixedArray, keep: &[usize]) -> Vec<Vec<Ratio<i64>>> {
    let levels = a.levels();
    let rest: Vec<usize> = (0..a.cols()).filter(|c| !keep.contains(c)).collect();
    let mut amp: HashMap<Vec<u16>, i64> = HashMap::new();
    for r in rows(a) {
        *amp.entry(r).or_default() += 1;
    }
    let keep_space: Vec<Vec<u16>> =
        keep.iter().map(|&c| 0..levels[c] as u16).multi_cartesian_product().collect();
    let rest_space: Vec<Vec<u16>> = if rest.is_empty() {
        vec![vec![]]
    } else {
        rest.iter().map(|&c| 0..levels[c] as u16).multi_cartesian_product().collect()
    };
    let full = |x: &[u16], y: &[u16]| {
        let mut v = vec![0u16; a.cols()];
        for (&c, &s) in keep.iter().zip(x) {
            v[c] = s;
        }
        for (&c, &s) in rest.iter().zip(y) {
            v[c] = s;
        }
        v
    };
    let r = a.runs() as i64;
    let dim = keep_space.len();
    let mut m = vec![vec![Ratio::from_integer(0); dim]; dim];
    for (i, x) in keep_space.iter().enumerate() {
        for (j, y) in keep_space.iter().enumerate() {
            let mut s = 0;
            for z in &rest_space {
                s += amp.get(&full(x, z)).unwrap_or(&0) * amp.get(&full(y, z)).unwrap_or(&0);
            }
            m[i][j] = Ratio::new(s, r);
        }
    }
    m
}

pub fn is_scaled_identity(m: &[Vec<Ratio<i64>>]) -> bool {
    let target = Ratio::new(1, m.len() as i64);
    m.iter().enumerate().all(|(i, row)| {
        row.iter().enumerate().all(|(j, &v)| if i == j { v == target } else { v == 0.into() })
    })
}

/// Small, mostly structured arrays: at most 72 runs, at most 12 columns,
/// levels at most 6 (9 for one entry used only where noted).
pub fn pool() -> Vec<MixedArray> {
    let mut v = vec![
        trivial_moa(&[2, 3]).unwrap(),
        trivial_moa(&[2, 2, 2]).unwrap(),
        trivial_moa(&[3, 3]).unwrap(),
        trivial_moa(&[2, 2, 3]).unwrap(),
        trivial_moa(&[4, 3]).unwrap(),
        trivial_moa(&[2, 2, 2, 2, 2, 2]).unwrap(),
        bush_oa(3, 2).unwrap(),
        bush_oa(4, 2).unwrap(),
        bush_oa(5, 2).unwrap(),
        bush_oa_truncated(4, 2, 4).unwrap(),
        ds_linear(3, 2).unwrap().expand(),
        ds_poly3(3).unwrap().expand(),
        moa_12_3x2_4().unwrap().clone(),
        moa_12_6x2_2().unwrap().clone(),
        moa_8_4x2_4().unwrap().clone(),
        ame_6_3_2().unwrap().clone(),
        MixedArray::from_rows(vec![2, 2], &[[0, 0], [1, 1]]).unwrap(),
        MixedArray::from_rows(vec![3, 3, 3], &[[0, 0, 0], [1, 1, 1], [2, 2, 2]]).unwrap(),
    ];
    for n in [4, 8, 12, 20, 24, 36] {
        let a = hadamard01_auto(n).unwrap().scheme(2).unwrap().expand();
        let cols: Vec<usize> = (0..a.cols().min(12)).collect();
        v.push(a.select_columns(&cols).unwrap());
    }
    for f in FIXTURES.iter().filter(|f| f.kets.len() <= 72 && f.profile.iter().map(|p| p.1).sum::<usize>() <= 12) {
        v.push(f.array().unwrap());
    }
    v
}

/// Random column subset, symbol relabeling and row shuffle.
pub fn scramble(a: &MixedArray, rng: &mut impl Rng) -> MixedArray {
    let n = rng.gen_range(2.min(a.cols())..=a.cols().min(12));
    let mut cols: Vec<usize> = (0..a.cols()).collect();
    cols.shuffle(rng);
    cols.truncate(n);
    let b = a.select_columns(&cols).unwrap();
    let perms: Vec<Vec<u16>> = b
        .levels()
        .iter()
        .map(|&l| {
            let mut p: Vec<u16> = (0..l as u16).collect();
            p.shuffle(rng);
            p
        })
        .collect();
    let b = b.relabel(&perms).unwrap();
    let mut order: Vec<usize> = (0..b.runs()).collect();
    order.shuffle(rng);
    b.select_rows(&order).unwrap()
}

/// Changes one cell or overwrites one row with another.
pub fn corrupt(a: &MixedArray, rng: &mut impl Rng) -> MixedArray {
    let mut b = a.clone();
    let i = rng.gen_range(0..a.runs());
    if rng.gen_bool(0.5) || a.runs() < 2 {
        let j = rng.gen_range(0..a.cols());
        let l = a.level(j) as u16;
        if l > 1 {
            let v = (a.cell(i, j) + rng.gen_range(1..l)) % l;
            b.set(i, j, v).unwrap();
        }
    } else {
        let src = (i + rng.gen_range(1..a.runs())) % a.runs();
        for j in 0..a.cols() {
            b.set(i, j, a.cell(src, j)).unwrap();
        }
    }
    b
}
