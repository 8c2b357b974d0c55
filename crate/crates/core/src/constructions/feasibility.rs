//! Counting test for irredundant strength-2 arrays with five columns.
//!
//! Strength 2 forces the run count to be a multiple of every pairwise level
//! product; irredundancy forces all rows to be distinct on every 3 columns,
//! so the run count is at most the smallest triple product. When the lcm of
//! the pair products exceeds that triple product, no such array exists.

use std::collections::BTreeMap;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{param, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "reason", rename_all = "snake_case")]
pub enum Feasibility {
    Impossible(String),
    NotRuledOut(String),
}

impl Feasibility {
    pub fn is_impossible(&self) -> bool {
        matches!(self, Feasibility::Impossible(_))
    }
}

/// Exponent pattern such as `a^2b^3`, letters assigned by first appearance
/// of each level in descending multiplicity order.
fn pattern(levels: &[u32]) -> String {
    let mut mult: BTreeMap<u32, usize> = BTreeMap::new();
    for &d in levels {
        *mult.entry(d).or_default() += 1;
    }
    let mut parts: Vec<usize> = mult.values().copied().collect();
    parts.sort_unstable();
    parts
        .iter()
        .zip("abcde".chars())
        .map(|(m, ch)| format!("{ch}^{m}"))
        .collect()
}

/// Decides whether an irredundant strength-2 array with these five levels is
/// ruled out by counting.
pub fn feasibility_5col(levels: &[u32]) -> Result<Feasibility> {
    if levels.len() != 5 {
        return param(format!("expected five levels, got {}", levels.len()));
    }
    if levels.iter().any(|&d| d < 2) {
        return param("levels must be at least 2");
    }
    let pat = pattern(levels);
    if levels.iter().all(|&d| d == levels[0]) {
        return Ok(Feasibility::NotRuledOut("hypothesis unmet: all levels equal".into()));
    }
    let mut distinct: Vec<u32> = levels.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    for (i, &x) in distinct.iter().enumerate() {
        for &y in &distinct[i + 1..] {
            if x.gcd(&y) != 1 {
                return Ok(Feasibility::NotRuledOut(format!(
                    "hypothesis unmet: levels {x} and {y} are not coprime"
                )));
            }
        }
    }

    let l: Vec<u64> = levels.iter().map(|&d| d as u64).collect();
    let mut lcm = 1u64;
    for i in 0..5 {
        for j in i + 1..5 {
            lcm = lcm.lcm(&(l[i] * l[j]));
        }
    }
    let mut min3 = u64::MAX;
    for i in 0..5 {
        for j in i + 1..5 {
            for h in j + 1..5 {
                min3 = min3.min(l[i] * l[j] * l[h]);
            }
        }
    }
    if lcm > min3 {
        Ok(Feasibility::Impossible(format!(
            "pattern {pat}: strength 2 needs a multiple of {lcm} runs, distinct rows on 3 columns allow at most {min3}"
        )))
    } else {
        Ok(Feasibility::NotRuledOut(format!(
            "pattern {pat}: {lcm} runs satisfy both the divisibility and the distinct-row bound"
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdicts() {
        assert!(!feasibility_5col(&[2, 3, 3, 3, 3]).unwrap().is_impossible());
        assert!(feasibility_5col(&[3, 2, 2, 2, 2]).unwrap().is_impossible());
        assert!(feasibility_5col(&[2, 2, 3, 3, 3]).unwrap().is_impossible());
        assert!(feasibility_5col(&[5, 5, 5, 2, 3]).unwrap().is_impossible());
        assert!(feasibility_5col(&[2, 3, 5, 7, 11]).unwrap().is_impossible());
        assert!(feasibility_5col(&[2, 2, 2, 2]).is_err());
        let unmet = feasibility_5col(&[2, 4, 4, 4, 4]).unwrap();
        assert!(matches!(unmet, Feasibility::NotRuledOut(ref s) if s.contains("hypothesis")));
    }

    #[test]
    fn pattern_names() {
        assert_eq!(pattern(&[2, 2, 3, 3, 3]), "a^2b^3");
        assert_eq!(pattern(&[2, 3, 3, 3, 3]), "a^1b^4");
    }
}
