//! Known states, seed arrays and the registry of buildable families.

pub mod fixtures;
pub mod registry;
pub mod seeds;

use crate::array::distance::min_distance;
use crate::array::strength::verify_strength;
use crate::array::MixedArray;
use crate::error::{malformed, Error, Result};
use crate::quantum::{emit_state, SparseState};

pub use fixtures::{KetFixture, FIXTURES};
pub use registry::{catalog_build, catalog_build_with_seed, catalog_list, find_entry, FamilyEntry, Pipeline};

impl KetFixture {
    pub fn levels(&self) -> Vec<u32> {
        self.profile.iter().flat_map(|&(d, n)| std::iter::repeat(d).take(n)).collect()
    }

    /// The kets as array rows, one digit per party.
    pub fn array(&self) -> Result<MixedArray> {
        let levels = self.levels();
        let rows = self
            .kets
            .iter()
            .map(|k| {
                let row: Option<Vec<u16>> = k.chars().map(|c| c.to_digit(36).map(|v| v as u16)).collect();
                match row {
                    Some(r) if r.len() == levels.len() => Ok(r),
                    _ => malformed(format!("{}: bad ket {k:?}", self.id)),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        MixedArray::from_rows(levels, &rows)
    }
}

/// Every embedded fixture as a state.
pub fn fixture_states() -> Result<Vec<(&'static str, SparseState)>> {
    FIXTURES.iter().map(|f| Ok((f.id, emit_state(&f.array()?)))).collect()
}

pub fn fixture(id: &str) -> Result<&'static KetFixture> {
    FIXTURES
        .iter()
        .find(|f| f.id == id)
        .ok_or_else(|| Error::Parameter(format!("unknown fixture {id:?}")))
}

/// Checks every embedded seed and fixture against its declared property.
/// The error names the first one that fails.
pub fn self_test() -> Result<()> {
    let fail = |id: &str, what: &str| Error::Verification(format!("self-test failed for {id}: {what}"));
    seeds::d_3_3_3().map_err(|e| fail("D(3,3,3)", &e.to_string()))?;
    seeds::d3_18_5_3().map_err(|e| fail("D3(18,5,3)", &e.to_string()))?;
    for f in FIXTURES {
        let a = f.array()?;
        if !verify_strength(&a, f.uniformity)?.holds {
            return Err(fail(f.id, "strength"));
        }
        if min_distance(&a) <= f.uniformity {
            return Err(fail(f.id, "minimal distance"));
        }
    }
    Ok(())
}
