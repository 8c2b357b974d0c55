//! Lemma- and theorem-level constructions. Every builder returns a
//! [`Construction`] whose certificate separates what a lemma predicts from
//! what the exact oracles measured.

pub mod bush;
pub mod deletion;
pub mod families;
pub mod feasibility;
pub mod juxtapose;
pub mod replace;

use serde::Serialize;

use crate::array::distance::min_distance;
use crate::array::strength::verify_strength;
use crate::array::MixedArray;
use crate::error::{Error, Result};

pub use bush::{bush_oa, bush_oa_truncated, trivial_moa};
pub use deletion::{delete_for_distance, DeletionStrategy};
pub use feasibility::{feasibility_5col, Feasibility};
pub use juxtapose::{lemma1_juxtapose, lemma3_juxtapose, partition_from_scheme, scheme_juxtapose, OrthogonalPartition};
pub use replace::{expansive_replace, ColumnReplacement, ReplacementPlan};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    Exact,
    AtLeast,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PredictedDistance {
    pub formula: String,
    pub value: usize,
    pub bound: Bound,
}

impl PredictedDistance {
    pub fn exact(formula: impl Into<String>, value: usize) -> Self {
        Self { formula: formula.into(), value, bound: Bound::Exact }
    }

    pub fn at_least(formula: impl Into<String>, value: usize) -> Self {
        Self { formula: formula.into(), value, bound: Bound::AtLeast }
    }

    pub fn admits(&self, measured: usize) -> bool {
        match self.bound {
            Bound::Exact => measured == self.value,
            Bound::AtLeast => measured >= self.value,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    /// Built but not yet checked.
    Predicted,
    Verified,
    Failed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstructionCertificate {
    pub schema: &'static str,
    pub construction: String,
    pub runs: usize,
    pub cols: usize,
    pub profile: String,
    pub levels: Vec<u32>,
    pub strength: usize,
    pub claims_irredundant: bool,
    pub predicted_md: Option<PredictedDistance>,
    pub measured_md: Option<usize>,
    pub status: Status,
    pub steps: Vec<String>,
}

/// A built array together with its certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    pub array: MixedArray,
    pub certificate: ConstructionCertificate,
}

impl Construction {
    pub fn new(
        array: MixedArray,
        construction: impl Into<String>,
        strength: usize,
        claims_irredundant: bool,
        predicted_md: Option<PredictedDistance>,
    ) -> Self {
        let certificate = ConstructionCertificate {
            schema: "oakit-certificate-v1",
            construction: construction.into(),
            runs: array.runs(),
            cols: array.cols(),
            profile: array.profile().to_string(),
            levels: array.levels().to_vec(),
            strength,
            claims_irredundant,
            predicted_md,
            measured_md: None,
            status: Status::Predicted,
            steps: Vec::new(),
        };
        Self { array, certificate }
    }

    pub fn with_step(mut self, step: impl Into<String>) -> Self {
        self.certificate.steps.push(step.into());
        self
    }

    /// Carries the history of `earlier` into this construction.
    pub fn after(mut self, earlier: &Construction) -> Self {
        let mut steps = earlier.certificate.steps.clone();
        steps.push(earlier.certificate.construction.clone());
        steps.append(&mut self.certificate.steps);
        self.certificate.steps = steps;
        self
    }

    pub fn is_verified(&self) -> bool {
        self.certificate.status == Status::Verified
    }

    /// Runs the oracles and records the outcome without failing.
    pub fn check(&mut self) -> Result<bool> {
        let cert = &mut self.certificate;
        let strength_ok = verify_strength(&self.array, cert.strength.min(self.array.cols()))?.holds;
        let md = min_distance(&self.array);
        cert.measured_md = Some(md);
        let irredundant_ok = !cert.claims_irredundant || md > cert.strength;
        let prediction_ok = cert.predicted_md.as_ref().is_none_or(|p| p.admits(md));
        let ok = strength_ok && irredundant_ok && prediction_ok;
        cert.status = if ok { Status::Verified } else { Status::Failed };
        Ok(ok)
    }

    /// Runs the oracles; any failure is an error.
    pub fn verify(mut self) -> Result<Self> {
        if self.check()? {
            return Ok(self);
        }
        let c = &self.certificate;
        Err(Error::Verification(format!(
            "{}: {} runs, {}, strength {}, predicted MD {:?}, measured MD {:?}",
            c.construction, c.runs, c.profile, c.strength, c.predicted_md, c.measured_md
        )))
    }

    pub fn certificate_json(&self) -> String {
        serde_json::to_string_pretty(&self.certificate).expect("certificate serializes")
    }
}

/// Indices of columns with the given level.
pub fn columns_with_level(a: &MixedArray, level: u32) -> Vec<usize> {
    (0..a.cols()).filter(|&c| a.level(c) == level).collect()
}
