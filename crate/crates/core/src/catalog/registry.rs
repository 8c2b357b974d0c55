//! Stable family ids and how to build each one.

use serde::Serialize;

use super::seeds;
use crate::algebra::field::prime_power;
use crate::algebra::{AbelianGroup, DifferenceScheme};
use crate::array::distance::min_distance;
use crate::array::format::{ArrayKind, MoaDocument};
use crate::array::strength::verify_strength;
use crate::constructions::families::{
    cor_dn_family, generated_scheme, thm1_family, thm2_family, thm3_family, thm4_family, thm7_family, thm8_family,
};
use crate::constructions::{columns_with_level, delete_for_distance, Construction, PredictedDistance};
use crate::error::{param, Error, Result};

/// Which column replaces the index column of the 24-run host.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IndexReplacement {
    None,
    /// `MOA(12,5,3^1 2^4,2)`, all columns.
    Ternary,
    /// `MOA(12,3,6^1 2^2,2)`, all columns.
    Senary,
    /// `MOA(12,2,4^1 3^1,2)`, all columns.
    FourThree,
    /// `MOA(12,2,4^1 3^1,2)`, the 4-level column only.
    FourOnly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "pipeline", rename_all = "snake_case")]
pub enum Pipeline {
    Thm1 { m: usize, n: usize },
    Thm2 { d: u32, m: usize, n: usize },
    Thm3 { m: usize, n: usize },
    Thm4 { d: u32, m: usize, n: usize },
    Thm7 { k: u32, factors: Vec<u32>, replacements: Vec<Vec<u32>> },
    /// The 24-run host `[(12) + 0_2, H_12 + (2)]`, a replacement, then `trim`
    /// binary columns removed.
    Table3 { replace: IndexReplacement, trim: usize },
    CorDn { d: u32, n: u32, sublevels: Vec<u32> },
    Ame,
    /// A searched seed with `trim` binary columns removed.
    SearchedMoa { seed: &'static str, trim: usize },
    /// Needs an imported seed; `trim` binary columns are removed from it.
    ImportMoa { seed: &'static str, trim: usize },
    /// Needs an imported scheme `D(N, M, d)`; builds `[(N) + 0_d, D + (d)]`.
    ImportScheme { seed: &'static str, rows: usize, cols: usize, d: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub runs: usize,
    /// Profile id such as `3^1x2^8`.
    pub profile: String,
    pub strength: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyEntry {
    pub id: String,
    pub pipeline: Pipeline,
    pub expected: Expected,
    /// Seed that must be imported before building, if any.
    pub requires: Option<&'static str>,
}

fn entry(id: &str, pipeline: Pipeline, runs: usize, strength: usize) -> FamilyEntry {
    let requires = match &pipeline {
        Pipeline::ImportMoa { seed, .. } | Pipeline::ImportScheme { seed, .. } => Some(*seed),
        _ => None,
    };
    let profile = id.split_once('/').map_or(id, |(_, p)| p).to_string();
    FamilyEntry { id: id.to_string(), pipeline, expected: Expected { runs, profile, strength }, requires }
}

/// Every registered family, in a fixed order.
pub fn catalog_list() -> Vec<FamilyEntry> {
    use IndexReplacement as R;
    use Pipeline as P;
    let mut v = Vec::new();
    for n in [9, 10, 13, 16] {
        v.push(entry(&format!("thm1/3^1x2^{n}"), P::Thm1 { m: 1, n }, 24, 2));
    }
    v.push(entry("thm1/3^1x2^20", P::Thm1 { m: 1, n: 20 }, 48, 2));
    for n in [7, 12] {
        v.push(entry(&format!("thm2/4^1x2^{n}"), P::Thm2 { d: 4, m: 1, n }, 16, 2));
    }
    v.push(entry("thm2/4^1x2^20", P::Thm2 { d: 4, m: 1, n: 20 }, 32, 2));
    v.push(entry("thm3/3^5x2^36", P::Thm3 { m: 5, n: 36 }, 216, 3));
    v.push(entry("thm3/3^4x2^36", P::Thm3 { m: 4, n: 36 }, 216, 3));
    v.push(entry("thm3/3^5x2^22", P::Thm3 { m: 5, n: 22 }, 216, 3));
    v.push(entry("thm3/3^4x2^22", P::Thm3 { m: 4, n: 22 }, 216, 3));
    v.push(entry("thm3/3^5x2^16", P::Thm3 { m: 5, n: 16 }, 216, 3));
    v.push(entry("thm3/3^4x2^16", P::Thm3 { m: 4, n: 16 }, 216, 3));
    v.push(entry("thm4/5^5x2^100", P::Thm4 { d: 5, m: 5, n: 100 }, 1000, 3));
    v.push(entry("thm4/5^4x2^54", P::Thm4 { d: 5, m: 4, n: 54 }, 1000, 3));
    v.push(entry(
        "thm7/12^3x4^1x3^1",
        P::Thm7 { k: 2, factors: vec![3, 4], replacements: vec![vec![4, 3]] },
        144,
        2,
    ));
    v.push(entry("thm7/7^8", P::Thm7 { k: 4, factors: vec![7], replacements: vec![] }, 2401, 4));
    for e in 8..=12 {
        v.push(entry(&format!("table3/12^1x2^{e}"), P::Table3 { replace: R::None, trim: 12 - e }, 24, 2));
    }
    for e in 8..=16 {
        v.push(entry(&format!("table3/3^1x2^{e}"), P::Table3 { replace: R::Ternary, trim: 16 - e }, 24, 2));
    }
    for e in 9..=14 {
        v.push(entry(&format!("table3/6^1x2^{e}"), P::Table3 { replace: R::Senary, trim: 14 - e }, 24, 2));
    }
    for e in 9..=12 {
        v.push(entry(&format!("table3/4^1x3^1x2^{e}"), P::Table3 { replace: R::FourThree, trim: 12 - e }, 24, 2));
        v.push(entry(&format!("table3/4^1x2^{e}"), P::Table3 { replace: R::FourOnly, trim: 12 - e }, 24, 2));
    }
    for e in [13, 20] {
        v.push(entry(
            &format!("table3/4^1x2^{e}"),
            P::ImportMoa { seed: "MOA(24,21,4^1 2^20,2)", trim: 20 - e },
            24,
            2,
        ));
    }
    for e in 8..=11 {
        v.push(entry(
            &format!("table3/6^1x4^1x2^{e}"),
            P::SearchedMoa { seed: "MOA(24,13,6^1 4^1 2^11,2)", trim: 11 - e },
            24,
            2,
        ));
    }
    v.push(entry(
        "table3/4^1x3^1x2^13",
        P::ImportMoa { seed: "MOA(24,15,4^1 3^1 2^13,2)", trim: 0 },
        24,
        2,
    ));
    v.push(entry(
        "table4/12^1x3^12",
        P::ImportScheme { seed: "D(12,12,3)", rows: 12, cols: 12, d: 3 },
        36,
        2,
    ));
    v.push(entry(
        "table5/12^1x6^6",
        P::ImportScheme { seed: "D(12,6,6)", rows: 12, cols: 6, d: 6 },
        72,
        2,
    ));
    v.push(entry("cor_dn/4^1x2^9", P::CorDn { d: 2, n: 3, sublevels: vec![4, 2] }, 16, 2));
    v.push(entry("cor_dn/3^11", P::CorDn { d: 3, n: 2, sublevels: vec![3, 3] }, 27, 2));
    v.push(entry("ame/6^1x3^1x2^1", P::Ame, 6, 1));
    v
}

pub fn find_entry(id: &str) -> Result<FamilyEntry> {
    catalog_list()
        .into_iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::Parameter(format!("unknown catalog id {id:?}; see `catalog list`")))
}

fn table3(replace: IndexReplacement, trim: usize) -> Result<Construction> {
    let scheme = generated_scheme(12, 2)?;
    let replacement = match replace {
        IndexReplacement::None => None,
        IndexReplacement::Ternary => Some((seeds::moa_12_3x2_4()?.clone(), None)),
        IndexReplacement::Senary => Some((seeds::moa_12_6x2_2()?.clone(), None)),
        IndexReplacement::FourThree => Some((seeds::moa_12_4x3()?, None)),
        IndexReplacement::FourOnly => Some((seeds::moa_12_4x3()?, Some(vec![0]))),
    };
    thm8_family(&scheme, 12, replacement, trim)
}

/// Builds a registry entry that needs no imported seed.
pub fn catalog_build(id: &str) -> Result<Construction> {
    let e = find_entry(id)?;
    let built = match &e.pipeline {
        Pipeline::Thm1 { m, n } => thm1_family(*m, *n)?,
        Pipeline::Thm2 { d, m, n } => thm2_family(*d, *m, *n)?,
        Pipeline::Thm3 { m, n } => thm3_family(*m, *n)?,
        Pipeline::Thm4 { d, m, n } => thm4_family(*d, *m, *n)?,
        Pipeline::Thm7 { k, factors, replacements } => thm7_family(*k, factors, replacements)?,
        Pipeline::Table3 { replace, trim } => table3(*replace, *trim)?,
        Pipeline::CorDn { d, n, sublevels } => cor_dn_family(*d, *n, &crate::constructions::trivial_moa(sublevels)?)?,
        Pipeline::Ame => Construction::new(
            seeds::ame_6_3_2()?.clone(),
            "searched MOA(6,3,6^1 3^1 2^1,1) with distance floor 2",
            1,
            true,
            Some(PredictedDistance::at_least("search floor", 2)),
        )
        .verify()?,
        Pipeline::SearchedMoa { seed, trim } => {
            let a = match *seed {
                "MOA(24,13,6^1 4^1 2^11,2)" => seeds::moa_24_6x4x2_11()?,
                other => return Err(Error::MissingSeed(format!("no search recipe for {other}"))),
            };
            trim_binary(a, &format!("searched {seed}"), *trim)?
        }
        Pipeline::ImportMoa { seed, .. } | Pipeline::ImportScheme { seed, .. } => {
            return Err(Error::MissingSeed(format!(
                "{id} needs {seed}, which is cited but not printed; pass it with --seed"
            )))
        }
    };
    check_expected(&e, built)
}

/// Builds an import-backed entry from a user-supplied seed document.
pub fn catalog_build_with_seed(id: &str, seed: &MoaDocument) -> Result<Construction> {
    let e = find_entry(id)?;
    let built = match &e.pipeline {
        Pipeline::ImportMoa { seed: name, trim } => {
            let a = &seed.array;
            if a.levels() != find_seed_levels(name)?.as_slice() {
                return param(format!("the imported array has levels {}, expected {name}", a.profile()));
            }
            if !verify_strength(a, 2)?.holds {
                return Err(Error::Verification(format!("the imported {name} does not have strength 2")));
            }
            trim_binary(a, &format!("imported {name}"), *trim)?
        }
        Pipeline::ImportScheme { seed: name, rows, cols, d } => {
            let group = match seed.kind {
                Some(ArrayKind::DifferenceScheme { d: sd, .. }) if sd != *d => {
                    return param(format!("the imported scheme is over {sd} symbols, expected {d}"));
                }
                _ if prime_power(*d as u64).is_some_and(|(_, m)| m > 1) => AbelianGroup::for_order(*d)?,
                _ => AbelianGroup::Cyclic(*d),
            };
            if seed.array.runs() != *rows || seed.array.cols() != *cols {
                return param(format!("{name} must be {rows}x{cols}"));
            }
            let ds = DifferenceScheme::new(seed.array.clone(), group, 2)?;
            thm8_family(&ds, *cols, None, 0)?
        }
        _ => return catalog_build(id),
    };
    check_expected(&e, built)
}

/// Levels named by a seed id such as `MOA(24,21,4^1 2^20,2)`.
fn find_seed_levels(name: &str) -> Result<Vec<u32>> {
    let profile = name.split(',').nth(2).ok_or_else(|| Error::Parameter(format!("bad seed id {name}")))?;
    let mut levels = Vec::new();
    for part in profile.split_whitespace() {
        let (d, n) = part.split_once('^').ok_or_else(|| Error::Parameter(format!("bad seed id {name}")))?;
        let (d, n): (u32, usize) = (d.parse().map_err(|_| Error::Parameter(name.into()))?, n.parse().map_err(|_| Error::Parameter(name.into()))?);
        levels.extend(std::iter::repeat(d).take(n));
    }
    Ok(levels)
}

/// Drops `trim` binary columns, last ones first when the distance allows it.
fn trim_binary(a: &crate::array::MixedArray, name: &str, trim: usize) -> Result<Construction> {
    let base = Construction::new(a.clone(), name, 2, false, None);
    let binary = columns_with_level(a, 2);
    if trim >= binary.len() {
        return param(format!("cannot drop {trim} of {} binary columns", binary.len()));
    }
    let md = min_distance(a);
    let cols = if trim + 3 <= md {
        binary[binary.len() - trim..].to_vec()
    } else {
        delete_for_distance(a, &binary, trim, 2, 2_000_000)?
            .ok_or_else(|| Error::Verification("no deletion set found within the search budget".into()))?
    };
    Construction::new(
        a.delete_columns(&cols)?,
        format!("delete {trim} binary columns"),
        2,
        true,
        Some(PredictedDistance::at_least("distance floor", 3)),
    )
    .after(&base)
    .verify()
}

fn check_expected(e: &FamilyEntry, built: Construction) -> Result<Construction> {
    let got = (built.array.runs(), built.array.profile().id(), built.certificate.strength);
    let want = (e.expected.runs, e.expected.profile.clone(), e.expected.strength);
    if got != want || !built.is_verified() {
        return Err(Error::Verification(format!("{}: built {got:?}, expected {want:?}", e.id)));
    }
    Ok(built.with_step(format!("catalog entry {}", e.id)))
}
