//! The `oakit-report-v1` JSON document.

use serde::Serialize;

use crate::array::distance::{distance_spectrum, is_irredundant, DistanceSpectrum};
use crate::array::strength::{verify_strength, StrengthWitness};
use crate::array::MixedArray;
use crate::constructions::Feasibility;
use crate::error::Result;
use crate::quantum::UniformityReport;
use crate::search::SearchOutcome;

pub const SCHEMA: &str = "oakit-report-v1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrengthSection {
    pub k: usize,
    pub holds: bool,
    pub lambda: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<StrengthWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumEntry {
    pub distance: usize,
    pub pairs: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistanceSection {
    pub min: usize,
    pub spectrum: Vec<SpectrumEntry>,
}

impl From<&DistanceSpectrum> for DistanceSection {
    fn from(s: &DistanceSpectrum) -> Self {
        Self {
            min: s.min_distance,
            spectrum: s.counts.iter().map(|(&distance, &pairs)| SpectrumEntry { distance, pairs }).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrredundantSection {
    pub k: usize,
    pub holds: bool,
}

/// Sections are present only when the command computed them.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub runs: usize,
    pub cols: usize,
    pub profile: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strength: Option<StrengthSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distance: Option<DistanceSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub irredundant: Option<IrredundantSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub uniformity: Option<UniformityReport>,
}

impl Report {
    pub fn for_array(a: &MixedArray) -> Self {
        Self { schema: SCHEMA, runs: a.runs(), cols: a.cols(), profile: a.profile().to_string(), ..Default::default() }
    }

    pub fn with_strength(mut self, a: &MixedArray, k: usize) -> Result<Self> {
        let r = verify_strength(a, k)?;
        self.strength = Some(StrengthSection { k, holds: r.holds, lambda: r.index, witness: r.witness });
        Ok(self)
    }

    pub fn with_distance(mut self, a: &MixedArray) -> Self {
        self.distance = Some((&distance_spectrum(a)).into());
        self
    }

    pub fn with_irredundant(mut self, a: &MixedArray, k: usize) -> Result<Self> {
        let c = is_irredundant(a, k)?;
        self.irredundant = Some(IrredundantSection { k, holds: c.holds });
        Ok(self)
    }

    pub fn with_uniformity(mut self, u: UniformityReport) -> Self {
        self.uniformity = Some(u);
        self
    }

    /// True when every computed check passed.
    pub fn passed(&self) -> bool {
        self.strength.as_ref().is_none_or(|s| s.holds)
            && self.irredundant.as_ref().is_none_or(|s| s.holds)
            && self.uniformity.as_ref().is_none_or(|s| s.holds)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Serialize)]
struct Wrapped<'a, T: Serialize> {
    schema: &'static str,
    #[serde(flatten)]
    body: &'a T,
}

#[derive(Serialize)]
struct SearchBody<'a> {
    search: &'a SearchOutcome,
}

#[derive(Serialize)]
struct FeasibilityBody<'a> {
    levels: &'a [u32],
    feasibility: &'a Feasibility,
}

pub fn search_json(outcome: &SearchOutcome) -> String {
    serde_json::to_string_pretty(&Wrapped { schema: SCHEMA, body: &SearchBody { search: outcome } }).expect("serializes")
}

pub fn feasibility_json(levels: &[u32], f: &Feasibility) -> String {
    serde_json::to_string_pretty(&Wrapped { schema: SCHEMA, body: &FeasibilityBody { levels, feasibility: f } })
        .expect("serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::hadamard01_auto;

    #[test]
    fn report_shape() {
        let a = hadamard01_auto(12).unwrap().scheme(2).unwrap().expand();
        let r = Report::for_array(&a).with_strength(&a, 2).unwrap().with_distance(&a).with_irredundant(&a, 2).unwrap();
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["schema"], "oakit-report-v1");
        assert_eq!(v["strength"]["lambda"], 6);
        assert_eq!(v["distance"]["min"], 6);
        assert_eq!(v["irredundant"]["holds"], true);
        assert!(v["strength"].get("witness").is_none());
        assert!(r.passed());
    }
}
