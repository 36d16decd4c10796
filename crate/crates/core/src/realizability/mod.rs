//! Realizability deciders.
//!
//! * [`is_solvable_realizable`]: triangle-free and 3-colorable.
//! * [`classify_psl213`]: the four-vertex conditions for PSL(2,13)-solvable groups.
//! * [`check_structural_hypotheses`] and [`check_applicability`]: the hypotheses
//!   of the structural reduction and the data-driven criterion that implies them.

mod applicability;
mod psl213;

pub use applicability::{check_applicability, check_structural_hypotheses, ApplicabilityReport};
pub use psl213::{
    check_condition_2a, check_condition_2b, classify_psl213, evaluate_condition_2b, monochromatic_boundary_coloring,
    Cond2bReport, Labeling,
};

use crate::graph::{Coloring, GraphError, PrimeGraph};
use crate::primes::Prime;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RealizeError {
    #[error("bad vertex subset: {0}")]
    BadSubset(String),
    #[error("bad labeling: {0}")]
    BadLabeling(String),
    #[error("invalid group data for {group}: {reason}")]
    InvalidGroupData { group: String, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Condition {
    #[serde(rename = "1")]
    Cond1,
    #[serde(rename = "2a")]
    Cond2a,
    #[serde(rename = "2b(i)")]
    Cond2bI,
    #[serde(rename = "2b(ii)")]
    Cond2bII,
    #[serde(rename = "none")]
    None,
}

impl Condition {
    pub const ALL: [Condition; 5] =
        [Condition::Cond1, Condition::Cond2a, Condition::Cond2bI, Condition::Cond2bII, Condition::None];

    pub fn label(self) -> &'static str {
        match self {
            Condition::Cond1 => "1",
            Condition::Cond2a => "2a",
            Condition::Cond2bI => "2b(i)",
            Condition::Cond2bII => "2b(ii)",
            Condition::None => "none",
        }
    }

    pub fn slug(self) -> &'static str {
        match self {
            Condition::Cond1 => "cond1",
            Condition::Cond2a => "cond2a",
            Condition::Cond2bI => "cond2b_i",
            Condition::Cond2bII => "cond2b_ii",
            Condition::None => "none",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub realizable: bool,
    pub condition: Condition,
    #[serde(rename = "X", skip_serializing_if = "Option::is_none", default)]
    pub x: Option<BTreeSet<Prime>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub labeling: Option<Labeling>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub coloring: Option<BTreeMap<Prime, usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub refutation_note: Option<String>,
}

impl Verdict {
    pub fn coloring(&self) -> Option<Coloring> {
        self.coloring.clone().map(|a| Coloring::new(3, a))
    }

    /// Re-runs the condition check named by the certificate.
    pub fn revalidate(&self, g: &PrimeGraph) -> Result<bool, RealizeError> {
        Ok(match self.condition {
            Condition::Cond1 => is_solvable_realizable(g).0 && self.coloring().is_some_and(|c| c.is_proper_on(g)),
            Condition::Cond2a => match &self.x {
                Some(x) => check_condition_2a(g, x)?,
                None => false,
            },
            Condition::Cond2bI | Condition::Cond2bII => match (&self.x, &self.labeling) {
                (Some(x), Some(l)) => {
                    let r = evaluate_condition_2b(g, x, l)?;
                    r.is_some_and(|r| if self.condition == Condition::Cond2bI { r.variant_i } else { r.variant_ii })
                }
                _ => false,
            },
            Condition::None => !self.realizable,
        })
    }
}

/// Triangle-free and 3-colorable, with the first coloring found as witness.
pub fn is_solvable_realizable(g: &PrimeGraph) -> (bool, Option<Coloring>) {
    if !g.is_triangle_free() {
        return (false, None);
    }
    match g.k_colorable(3, &BTreeMap::new()).expect("no fixed colors") {
        Some(c) => (true, Some(c)),
        None => (false, None),
    }
}
