//! Seed arrays. Printed matrices are embedded verbatim; small arrays that
//! are only cited are found once by search and cached.

use std::sync::OnceLock;

use serde::Serialize;

use crate::algebra::{AbelianGroup, DifferenceScheme};
use crate::array::MixedArray;
use crate::constructions::trivial_moa;
use crate::error::{Error, Result};
use crate::search::{search_moa, SearchOutcome, SearchSpec};

/// `D(3,3,3)` as printed, rows `000`, `012`, `021`.
const D_3_3_3: [[u16; 3]; 3] = [[0, 0, 0], [0, 1, 2], [0, 2, 1]];

/// `D_3(18,5,3)`, one row per block `a_i` (the printed matrix is its transpose).
const D3_18_5_3: [[u16; 5]; 18] = [
    [0, 0, 0, 0, 1],
    [1, 1, 1, 1, 0],
    [1, 1, 2, 2, 2],
    [1, 0, 1, 0, 2],
    [0, 2, 2, 0, 1],
    [0, 1, 1, 0, 2],
    [0, 1, 0, 1, 2],
    [0, 0, 2, 2, 0],
    [2, 2, 1, 1, 1],
    [2, 2, 0, 0, 2],
    [2, 0, 1, 0, 0],
    [2, 0, 2, 1, 2],
    [0, 2, 0, 1, 0],
    [1, 2, 0, 1, 1],
    [1, 0, 2, 1, 1],
    [2, 1, 1, 0, 1],
    [1, 2, 2, 0, 2],
    [0, 2, 1, 2, 2],
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeedSource {
    Embedded,
    Generated,
    Searched,
    ImportRequired,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct SeedInfo {
    pub id: &'static str,
    pub source: SeedSource,
    pub note: &'static str,
}

pub const SEEDS: &[SeedInfo] = &[
    SeedInfo { id: "D(3,3,3)", source: SeedSource::Embedded, note: "printed square scheme over Z_3" },
    SeedInfo { id: "D3(18,5,3)", source: SeedSource::Embedded, note: "printed strength-3 scheme over Z_3" },
    SeedInfo { id: "MOA(12,5,3^1 2^4,2)", source: SeedSource::Searched, note: "first array in search order" },
    SeedInfo { id: "MOA(8,5,4^1 2^4,2)", source: SeedSource::Searched, note: "first array in search order" },
    SeedInfo { id: "MOA(12,3,6^1 2^2,2)", source: SeedSource::Searched, note: "first array in search order" },
    SeedInfo { id: "MOA(12,2,4^1 3^1,2)", source: SeedSource::Generated, note: "full factorial" },
    SeedInfo { id: "MOA(6,3,6^1 3^1 2^1,1) MD>=2", source: SeedSource::Searched, note: "first array in search order" },
    SeedInfo { id: "MOA(24,21,4^1 2^20,2)", source: SeedSource::ImportRequired, note: "cited from the Warren Kuhfeld OA library" },
    SeedInfo { id: "MOA(24,13,6^1 4^1 2^11,2)", source: SeedSource::Searched, note: "first array in search order; cited from the Warren Kuhfeld OA library" },
    SeedInfo { id: "MOA(24,15,4^1 3^1 2^13,2)", source: SeedSource::ImportRequired, note: "cited from the Warren Kuhfeld OA library" },
    SeedInfo { id: "D(12,6,6)", source: SeedSource::ImportRequired, note: "cited from the Warren Kuhfeld OA library" },
    SeedInfo { id: "D(12,12,3)", source: SeedSource::ImportRequired, note: "cited from the Warren Kuhfeld OA library" },
];

pub fn d_3_3_3() -> Result<DifferenceScheme> {
    DifferenceScheme::new(MixedArray::from_rows(vec![3; 3], &D_3_3_3)?, AbelianGroup::Cyclic(3), 2)
}

pub fn d3_18_5_3() -> Result<&'static DifferenceScheme> {
    static CELL: OnceLock<std::result::Result<DifferenceScheme, String>> = OnceLock::new();
    CELL.get_or_init(|| {
        MixedArray::from_rows(vec![3; 5], &D3_18_5_3)
            .and_then(|a| DifferenceScheme::new(a, AbelianGroup::Cyclic(3), 3))
            .map_err(|e| e.to_string())
    })
    .as_ref()
    .map_err(|e| Error::Verification(format!("D3(18,5,3): {e}")))
}

fn searched(
    cell: &'static OnceLock<std::result::Result<MixedArray, String>>,
    id: &str,
    spec: impl FnOnce() -> SearchSpec,
) -> Result<&'static MixedArray> {
    cell.get_or_init(|| match search_moa(&spec()) {
        Ok(SearchOutcome::Found { array, .. }) => Ok(array),
        Ok(other) => Err(format!("{other:?}")),
        Err(e) => Err(e.to_string()),
    })
    .as_ref()
    .map_err(|e| Error::MissingSeed(format!("{id}: search failed ({e})")))
}

pub fn moa_12_3x2_4() -> Result<&'static MixedArray> {
    static CELL: OnceLock<std::result::Result<MixedArray, String>> = OnceLock::new();
    searched(&CELL, "MOA(12,5,3^1 2^4,2)", || SearchSpec::new(12, vec![3, 2, 2, 2, 2], 2))
}

pub fn moa_8_4x2_4() -> Result<&'static MixedArray> {
    static CELL: OnceLock<std::result::Result<MixedArray, String>> = OnceLock::new();
    searched(&CELL, "MOA(8,5,4^1 2^4,2)", || SearchSpec::new(8, vec![4, 2, 2, 2, 2], 2))
}

pub fn moa_12_6x2_2() -> Result<&'static MixedArray> {
    static CELL: OnceLock<std::result::Result<MixedArray, String>> = OnceLock::new();
    searched(&CELL, "MOA(12,3,6^1 2^2,2)", || SearchSpec::new(12, vec![6, 2, 2], 2))
}

pub fn moa_24_6x4x2_11() -> Result<&'static MixedArray> {
    static CELL: OnceLock<std::result::Result<MixedArray, String>> = OnceLock::new();
    searched(&CELL, "MOA(24,13,6^1 4^1 2^11,2)", || {
        let mut levels = vec![6, 4];
        levels.extend([2; 11]);
        SearchSpec::new(24, levels, 2)
    })
}

pub fn moa_12_4x3() -> Result<MixedArray> {
    trivial_moa(&[4, 3])
}

/// The three-party AME seed: strength 1 with all rows at distance 2 or more.
pub fn ame_6_3_2() -> Result<&'static MixedArray> {
    static CELL: OnceLock<std::result::Result<MixedArray, String>> = OnceLock::new();
    searched(&CELL, "MOA(6,3,6^1 3^1 2^1,1)", || SearchSpec::new(6, vec![6, 3, 2], 1).with_min_distance(2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::array::distance::min_distance;
    use crate::array::strength::verify_strength;

    #[test]
    fn embedded_schemes_verify() {
        let d = d3_18_5_3().unwrap();
        let a = d.expand();
        let rep = verify_strength(&a, 3).unwrap();
        assert!(rep.holds);
        assert_eq!(rep.index, Some(2));
        assert_eq!(d_3_3_3().unwrap().expand().runs(), 9);
    }

    #[test]
    fn searched_seeds() {
        assert!(verify_strength(moa_12_3x2_4().unwrap(), 2).unwrap().holds);
        assert!(verify_strength(moa_8_4x2_4().unwrap(), 2).unwrap().holds);
        assert!(verify_strength(moa_12_6x2_2().unwrap(), 2).unwrap().holds);
        assert!(min_distance(ame_6_3_2().unwrap()) >= 2);
        let a = moa_24_6x4x2_11().unwrap();
        assert!(verify_strength(a, 2).unwrap().holds);
        assert!(min_distance(a) >= 3);
    }
}
